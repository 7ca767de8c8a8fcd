"""Truncated series in the box-counting variable Q whose coefficients are
truncated s-expansions.  Only nonnegative Q-powers occur; coefficients of
Q-degree above the stated order are unknown, not zero."""

from __future__ import annotations

from math import comb

from .errors import InputError
from .scalars import INF, SExpansion


class QSeries:
    __slots__ = ("coeffs", "q_order")

    def __init__(self, coeffs, q_order):
        if q_order < 0:
            raise InputError("negative Q-order")
        self.q_order = q_order
        self.coeffs = {j: c for j, c in coeffs.items()
                       if 0 <= j <= q_order and not c.is_zero()}

    @staticmethod
    def unit(q_order, s_bound):
        return QSeries({0: SExpansion.unit(s_bound)}, q_order)

    def coeff(self, j):
        if not 0 <= j <= self.q_order:
            raise InputError("coefficient of Q^%d is outside the "
                             "truncation order %d" % (j, self.q_order))
        return self.coeffs.get(j, SExpansion.zero())

    def s_bound(self):
        return min((c.bound for c in self.coeffs.values()), default=INF)

    def mul(self, other):
        order = min(self.q_order, other.q_order)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if i + j > order:
                    continue
                p = a.mul(b)
                out[i + j] = out[i + j].add(p) if i + j in out else p
        return QSeries(out, order)

    def inverse(self):
        """Reciprocal series; the constant coefficient must be exactly 1."""
        c0 = self.coeffs.get(0)
        if c0 is None or c0.terms != {0: {0: 1}}:
            raise InputError("series inversion needs constant "
                             "coefficient exactly 1")
        inv = {0: SExpansion.unit(c0.bound)}
        for n in range(1, self.q_order + 1):
            acc = SExpansion.zero(c0.bound)
            for i in range(1, n + 1):
                a = self.coeffs.get(i)
                if a is not None and n - i in inv:
                    acc = acc.add(a.mul(inv[n - i]))
            inv[n] = acc.neg()
        return QSeries(inv, self.q_order)

    def scale_monomial(self, v_exp, s_exp, coeff=1):
        return QSeries({j: c.shift_monomial(v_exp, s_exp, coeff)
                        for j, c in self.coeffs.items()}, self.q_order)


def binomial_factor(k, exponent, q_order, s_bound):
    """(1 + q^k Q)^exponent as a truncated series, exponent >= 0."""
    coeffs = {}
    for j in range(min(exponent, q_order) + 1):
        coeffs[j] = SExpansion({2 * k * j: {0: comb(exponent, j)}}, s_bound)
    return QSeries(coeffs, q_order)


def resolved_conifold(q_order, s_order):
    """prod_k (1 + q^k Q)^k, exact through Q^q_order and s^(2*s_order).

    Factors with k beyond the s-cut contribute to positive Q-degrees only
    above the kept s-window, so the product is finite.
    """
    bound = 2 * s_order + 1
    out = QSeries.unit(q_order, bound)
    for k in range(1, s_order + 1):
        out = out.mul(binomial_factor(k, k, q_order, bound))
    return out


def macmahon(s_order):
    """prod_k (1 - q^k)^(-k) through s^(2*s_order); q = s^2 throughout."""
    bound = 2 * s_order + 1
    out = SExpansion.unit(bound)
    for k in range(1, s_order + 1):
        terms = {2 * k * j: {0: comb(j + k - 1, k - 1)}
                 for j in range(s_order // k + 1)}
        out = out.mul(SExpansion(terms, bound))
    return out


def series_equal(a, b):
    """Strict comparison of two truncated series.

    Truncation orders must agree exactly; comparing series that know
    different amounts is an error, not a comparison at the overlap.
    """
    if a.q_order != b.q_order:
        raise InputError("Q-orders differ: %d vs %d"
                         % (a.q_order, b.q_order))
    sa, sb = a.s_bound(), b.s_bound()
    if sa != sb:
        raise InputError("s-orders differ: %s vs %s" % (sa, sb))
    through = sa if sa is not INF else 0
    for j in range(a.q_order + 1):
        ca = a.coeffs.get(j, SExpansion.zero())
        cb = b.coeffs.get(j, SExpansion.zero())
        if ca.first_mismatch(cb, through) is not None:
            return False
    return True
