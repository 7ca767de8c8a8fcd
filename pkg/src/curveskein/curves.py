"""Plane-curve germs given by truncated Puiseux data: their numeric link
invariants, the decorated annulus elements of their links, the colored
closure invariants, and the blowup transform.

A branch y(x) = sum a_i x^(g_i) is recorded by Newton pairs (p_i, q_i)
and the coefficients a_i; g_i = (q_0/p_0, then increments q_i/(p_0..p_i)).
The branch y = 0 is the degenerate branch with no pairs; x = 0 only ever
appears as the axis flag of a germ, never as Puiseux data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import gcd, lcm, prod

from .annulus import (el_basis, el_product, el_unit, frame, meridian_apply,
                      plethysm_apply, skein_mul, splice_satellite,
                      torus_satellite, trace, trace_low)
from .errors import ConsistencyError, InputError
from .hilbert import z_series
from .partitions import dominance_leq, kappa, partition, transpose
from .scalars import SkeinScalar


@dataclass(frozen=True)
class Branch:
    pairs: tuple
    coeffs: tuple

    @property
    def degenerate(self):
        return not self.pairs


@dataclass(frozen=True)
class CurveGerm:
    branches: tuple
    axis: bool
    labels: tuple


def branch(pairs, coeffs=None):
    pairs = tuple((int(p), int(q)) for p, q in pairs)
    for p, q in pairs:
        if p < 1 or q < 1 or gcd(p, q) != 1:
            raise InputError("Newton pair (%r, %r) must be coprime "
                             "positive" % (p, q))
    if coeffs is None:
        coeffs = (Fraction(1),) * len(pairs)
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) != len(pairs):
        raise InputError("%d pairs but %d coefficients"
                         % (len(pairs), len(coeffs)))
    if any(c == 0 for c in coeffs):
        raise InputError("Puiseux coefficients must be nonzero")
    return Branch(pairs, coeffs)


def germ(branches, labels=None, axis=False):
    branches = tuple(b if isinstance(b, Branch) else branch(b)
                     for b in branches)
    n = len(branches) + (1 if axis else 0)
    if n == 0:
        raise InputError("a germ needs at least one branch")
    if labels is None:
        labels = ((1,),) * n
    labels = tuple(partition(l) for l in labels)
    if len(labels) != n:
        raise InputError("%d branches (axis included) but %d labels"
                         % (n, len(labels)))
    if len(set(branches)) != len(branches):
        raise InputError("duplicate branch data")
    return CurveGerm(branches, bool(axis), labels)


# -- numeric invariants ------------------------------------------------------

@dataclass(frozen=True)
class BranchStats:
    multiplicity: int
    milnor: int
    framing_writhe: int


@dataclass(frozen=True)
class LinkStats:
    multiplicities: tuple
    milnors: tuple
    writhes: tuple
    linking: dict
    total_milnor: int
    total_linking: int


def branch_stats(b):
    ps = [p for p, _ in b.pairs]
    wr = 0
    lin = 0
    for i, (p, q) in enumerate(b.pairs):
        rest = prod(ps[i + 1:])
        wr += p * q * rest * rest
        lin += q * rest
    m = prod(ps)
    return BranchStats(m, 1 + wr - lin - m, wr)


def _conjugate_terms(b):
    """Terms (exponent, coefficient, zeta power numerator) over the common
    exponent denominator m = multiplicity; the t-th conjugate root scales
    term j by the m-th root of unity to the power t * n_j."""
    m = prod(p for p, _ in b.pairs)
    out = []
    g = Fraction(0)
    denom = 1
    for (p, q), a in zip(b.pairs, b.coeffs):
        denom *= p
        g += Fraction(q, denom)
        out.append((g, a, g * m))
    if any(n.denominator != 1 for _, _, n in out):
        raise ConsistencyError("exponent numerators are not integral")
    return m, [(g, a, int(n)) for g, a, n in out]


def pairwise_linking(b1, b2):
    """Intersection multiplicity of two distinct branches: the sum over
    conjugate root pairs of the x-order of the difference."""
    m1, t1 = _conjugate_terms(b1)
    m2, t2 = _conjugate_terms(b2)
    n = lcm(m1, m2)
    total = Fraction(0)
    for c1 in range(m1):
        for c2 in range(m2):
            by_exp = {}
            for g, a, u in t1:
                by_exp.setdefault(g, []).append((a, c1 * u * (n // m1) % n))
            for g, a, u in t2:
                by_exp.setdefault(g, []).append((-a, c2 * u * (n // m2) % n))
            ords = []
            for g, parts in sorted(by_exp.items()):
                if len(parts) == 1:
                    ords.append(g)
                    break
                (a1, u1), (a2, u2) = parts
                d = (u1 - u2) % n
                if (d == 0 and a1 + a2 == 0) or (2 * d == n and a1 == a2):
                    continue
                ords.append(g)
                break
            else:
                raise InputError(
                    "branches agree through the stored truncation; "
                    "extend the Puiseux data to separate them")
            total += ords[0]
    if total.denominator != 1:
        raise ConsistencyError("linking number is not integral: %r" % total)
    return int(total)


def link_stats(c):
    """Per-component invariants and their Milnor-additivity total."""
    stats = [branch_stats(b) for b in c.branches]
    lk = {}
    for i, bi in enumerate(c.branches):
        for j in range(i + 1, len(c.branches)):
            lk[(i, j)] = pairwise_linking(bi, c.branches[j])
    ms = [st.multiplicity for st in stats]
    mus = [st.milnor for st in stats]
    wrs = [st.framing_writhe for st in stats]
    if c.axis:
        a = len(c.branches)
        for i, m in enumerate(ms):
            lk[(i, a)] = m
        ms.append(1)
        mus.append(0)
        wrs.append(0)
    total_lk = sum(lk.values())
    mu = 1 + sum(m - 1 for m in mus) + 2 * total_lk
    return LinkStats(tuple(ms), tuple(mus), tuple(wrs), lk, mu, total_lk)


# -- annulus elements --------------------------------------------------------

def _decorations(c):
    return tuple(transpose(l) for l in c.labels)


def _assemble(items):
    """items: (pairs, coeffs, element) triples sharing a base point.
    Groups by the leading pair (exponent, coefficient), recurses into the
    remainder series of each group, and chains the groups along ascending
    exponent; the innermost layer is either a plain twist or the
    exhausted branches' product."""
    groups = {}
    for pairs, coeffs, ele in items:
        if pairs:
            key = (Fraction(pairs[0][1], pairs[0][0]), coeffs[0])
        else:
            key = None
        groups.setdefault(key, []).append((pairs, coeffs, ele))
    by_alpha = {}
    for key, members in groups.items():
        if key is None:
            ele = el_product([e for _, _, e in members])
        else:
            ele = _assemble([(p[1:], a[1:], e) for p, a, e in members])
        by_alpha.setdefault(None if key is None else key[0],
                            []).append(ele)
    per_alpha = {al: el_product(els) for al, els in by_alpha.items()}
    acc = per_alpha.pop(None, None)
    for alpha in sorted(per_alpha, reverse=True):
        p, q = alpha.denominator, alpha.numerator
        if acc is None:
            acc = torus_satellite(p, q, [per_alpha[alpha]])
        else:
            acc = splice_satellite(p, q, per_alpha[alpha], acc)
    return acc


def annulus_element(c):
    """Skein element of the germ's link, each branch decorated by the
    transpose of its label."""
    decs = _decorations(c)
    items = [(b.pairs, b.coeffs, el_basis(decs[i]))
             for i, b in enumerate(c.branches)]
    if items:
        out = _assemble(items)
    else:
        out = el_unit()
    if c.axis:
        out = meridian_apply(decs[-1], out)
    return out


# -- lowest-term profile ------------------------------------------------------

@dataclass(frozen=True)
class LowestProfile:
    gamma: tuple
    a: int
    b: int
    sign: int


def lowest_profile(c):
    """Predicted bottom structure of the element: the dominance-least key,
    the single power of v, and the s-degree where that key's coefficient
    starts.  Verified against the computed element before returning."""
    if c.axis:
        raise InputError("the axis meridian destroys v-homogeneity; "
                         "profile applies to axis-free germs")
    decs = _decorations(c)
    gamma = []
    a = 0
    for i, b in enumerate(c.branches):
        st = branch_stats(b)
        gamma.extend(list(decs[i]) * st.multiplicity)
        depth = 0
        denom = 1
        for p, q in b.pairs:
            denom *= p
            depth = depth + q * (prod(pp for pp, _ in b.pairs) // denom)
        a -= sum(decs[i]) * depth
    gamma = partition(gamma)
    ele = annulus_element(c)
    if gamma not in ele:
        raise ConsistencyError("predicted least key %r absent" % (gamma,))
    for key, coeff in ele.items():
        if not coeff.is_v_monomial() or coeff.v_order() != a:
            raise ConsistencyError(
                "coefficient of %r is not a single power v^%d" % (key, a))
        if not dominance_leq(gamma, key):
            raise ConsistencyError(
                "key %r is not above %r in dominance" % (key, gamma))
    cg = ele[gamma]
    prof = cg.v_slice(a)
    mono = prof.num
    if prof.den or len(mono) != 1:
        raise ConsistencyError("least coefficient %r is not a monomial"
                               % (prof,))
    ((_, b_exp),) = mono
    sign = mono[(0, b_exp)]
    if sign not in (1, -1):
        raise ConsistencyError("least coefficient is not a signed power")
    for key, coeff in ele.items():
        if coeff.v_slice(a).valuation() < b_exp:
            raise ConsistencyError(
                "coefficient of %r reaches below s^%d" % (key, b_exp))
    return LowestProfile(gamma, a, b_exp, sign)


# -- closure invariants -------------------------------------------------------

@cache
def framing_sign():
    """Global sign convention of the framing writhe, pinned by requiring
    the node germ's uncolored invariant to match its Hilbert series."""
    for sign in (1, -1):
        if _node_fit(sign):
            return sign
    raise ConsistencyError("neither writhe sign satisfies the node oracle")


def _node_fit(sign, order=8):
    c = node_germ()
    p = _homfly_with_sign(c, sign)
    return p.expand(2 * order).eq_through(z_series("node", order), 2 * order)


def node_germ():
    return germ([branch([(1, 1)]), branch([(1, 1)], [-1])])


def _colored_w_with_sign(c, sign):
    ele = annulus_element(c)
    decs = _decorations(c)
    stats = [branch_stats(b) for b in c.branches]
    v_exp = 0
    s_exp = 0
    for i, st in enumerate(stats):
        wr = sign * st.framing_writhe
        v_exp += wr * sum(decs[i])
        s_exp -= wr * kappa(decs[i])
    return trace(ele).times_monomial(v_exp, s_exp)


def _homfly_with_sign(c, sign):
    comps = len(c.branches) + (1 if c.axis else 0)
    lk = link_stats(c).total_linking
    return _colored_w_with_sign(c, sign).times_monomial(
        2 * lk, 0, (-1) ** comps)


def colored_W(c):
    """Framing-corrected closure invariant of the decorated link."""
    return _colored_w_with_sign(c, framing_sign())


def homfly_P(c):
    """Uncolored invariant, normalized so the unknot gets
    (v - 1/v)/(s - 1/s)."""
    if any(l != (1,) for l in c.labels):
        raise InputError("uncolored invariant needs every label (1)")
    return _homfly_with_sign(c, framing_sign())


# -- blowup -------------------------------------------------------------------

@dataclass(frozen=True)
class BlowupPoint:
    branches: tuple
    labels: tuple
    indices: tuple

    def germ_b(self):
        return CurveGerm(self.branches, False, self.labels)

    def germ_d(self, axis_label):
        return CurveGerm(self.branches, True,
                         self.labels + (partition(axis_label),))


@dataclass(frozen=True)
class BlowupResult:
    points: tuple
    m_primes: tuple
    e: int
    origin_point: bool
    all_alpha_gt_1: bool


def blowup(c):
    """Proper transform at the origin, grouped by intersection point with
    the exceptional line; the tangent-to-E group (leading exponent above 1)
    sits at the origin of the chart and is listed last."""
    if c.axis:
        raise InputError("the axis is a coordinate line; change "
                         "coordinates before blowing up")
    stalls = {}
    origin = []
    m_primes = [None] * len(c.branches)
    for i, b in enumerate(c.branches):
        if b.degenerate:
            raise InputError("branch %d runs along y = 0; change "
                             "coordinates before blowing up" % i)
        p, q = b.pairs[0]
        if q < p:
            raise InputError("branch %d has leading exponent below 1; "
                             "change coordinates before blowing up" % i)
        if q == p:
            nb = Branch(b.pairs[1:], b.coeffs[1:])
            stalls.setdefault(b.coeffs[0], []).append((i, nb))
        else:
            nb = Branch(((p, q - p),) + b.pairs[1:], b.coeffs)
            origin.append((i, nb))
        m_primes[i] = prod(pp for pp, _ in nb.pairs)
    points = []
    for a0 in sorted(stalls):
        points.append(stalls[a0])
    if origin:
        points.append(origin)
    recs = []
    for members in points:
        idx = tuple(i for i, _ in members)
        recs.append(BlowupPoint(tuple(nb for _, nb in members),
                                tuple(c.labels[i] for i in idx), idx))
    return BlowupResult(tuple(recs), tuple(m_primes), len(recs),
                        bool(origin),
                        bool(origin) and not stalls)


def reassembled_element(c):
    """The germ's element rebuilt from its blowup per the one-step splice
    law; equal to annulus_element(c) identically."""
    bl = blowup(c)
    parts = [annulus_element(pt.germ_b()) for pt in bl.points]
    if bl.origin_point:
        if len(parts) == 1:
            return frame(parts[0], 1)
        return splice_satellite(1, 1, el_product(parts[:-1]),
                                frame(parts[-1], 1))
    return torus_satellite(1, 1, [el_product(parts)])


# -- germ classification -------------------------------------------------------

def classify_germ(c):
    """Hilbert-side kind of the germ: "smooth", "node", a coprime pair
    (p, q) for a one-pair branch, or None when unsupported there."""
    ls = link_stats(c)
    if c.axis:
        if len(c.branches) == 1 and c.branches[0].degenerate:
            return "node"
        return None
    if len(c.branches) == 1:
        b = c.branches[0]
        if ls.total_milnor == 0:
            return "smooth"
        if len(b.pairs) == 1:
            return tuple(sorted(b.pairs[0]))
        return None
    if (len(c.branches) == 2 and ls.total_milnor == 1
            and all(m == 0 for m in ls.milnors)):
        return "node"
    return None
