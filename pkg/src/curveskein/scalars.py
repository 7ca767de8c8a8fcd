"""Exact scalars for skein computations.

A scalar is an integer Laurent polynomial in v and s divided by a product
of balanced quantum integers (s^r - s^-r).  The numerator is a dict from
(v_exp, s_exp) to int and the denominator is kept factored, as a sorted
tuple of the r values.  All arithmetic is exact; equality is decided by
cross multiplication, never by normal forms.
"""

from __future__ import annotations

from .errors import ConsistencyError, TruncationError

INF = float("inf")


def _padd(a, b):
    out = dict(a)
    for k, c in b.items():
        n = out.get(k, 0) + c
        if n:
            out[k] = n
        elif k in out:
            del out[k]
    return out


def _pmul(a, b):
    out = {}
    for (av, asx), ac in a.items():
        for (bv, bsx), bc in b.items():
            k = (av + bv, asx + bsx)
            n = out.get(k, 0) + ac * bc
            if n:
                out[k] = n
            elif k in out:
                del out[k]
    return out


def _pscale(a, c):
    if c == 0:
        return {}
    return {k: v * c for k, v in a.items()}


def _factor_poly(r):
    # s^r - s^-r
    return {(0, r): 1, (0, -r): -1}


def _div_slice(sl, r):
    """Divide a Laurent polynomial in s (dict s_exp -> int) by s^r - s^-r.

    Returns the quotient dict, or None when the division is not exact.
    """
    if not sl:
        return {}
    # P / (s^r - s^-r) = (P * s^r) / (s^2r - 1)
    p = {e + r: c for e, c in sl.items()}
    m = 2 * r
    # exactness: the coefficient sum in every residue class mod 2r must vanish
    sums = {}
    for e, c in p.items():
        sums[e % m] = sums.get(e % m, 0) + c
    if any(sums.values()):
        return None
    q = {}
    guard = 4 * (len(p) + 1) * (1 + (max(p) - min(p)) // m + 1)
    while p:
        guard -= 1
        if guard < 0:
            raise ConsistencyError("non-terminating exact division")
        d = max(p)
        c = p.pop(d)
        e = d - m
        q[e] = q.get(e, 0) + c
        n = p.get(e, 0) + c
        if n:
            p[e] = n
        elif e in p:
            del p[e]
    return {e: c for e, c in q.items() if c}


def _divide_factor(num, r):
    """Exactly divide a (v, s) numerator by s^r - s^-r, or return None."""
    by_v = {}
    for (a, b), c in num.items():
        by_v.setdefault(a, {})[b] = c
    out = {}
    for a, sl in by_v.items():
        q = _div_slice(sl, r)
        if q is None:
            return None
        for b, c in q.items():
            out[(a, b)] = c
    return out


class SkeinScalar:
    """num / prod_r (s^r - s^-r) with num an integer Laurent polynomial in v, s."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(), reduce=True):
        num = {k: c for k, c in num.items() if c}
        den = tuple(sorted(den))
        if not num:
            den = ()
        elif reduce and den:
            den = list(den)
            changed = True
            while changed and den:
                changed = False
                for i, r in enumerate(den):
                    q = _divide_factor(num, r)
                    if q is not None:
                        num = q
                        del den[i]
                        changed = True
                        break
            den = tuple(den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return SkeinScalar({})

    @staticmethod
    def one():
        return SkeinScalar({(0, 0): 1})

    @staticmethod
    def from_int(c):
        return SkeinScalar({(0, 0): c})

    @staticmethod
    def monomial(v_exp, s_exp, coeff=1):
        return SkeinScalar({(v_exp, s_exp): coeff})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SkeinScalar):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        # common denominator: multiset union with max multiplicities
        da, db = list(self.den), list(other.den)
        union = []
        for r in sorted(set(da) | set(db)):
            union.extend([r] * max(da.count(r), db.count(r)))
        na = self.num
        for r in union:
            da_ = da
            if r in da_:
                da_.remove(r)
            else:
                na = _pmul(na, _factor_poly(r))
        nb = other.num
        for r in union:
            if r in db:
                db.remove(r)
            else:
                nb = _pmul(nb, _factor_poly(r))
        return SkeinScalar(_padd(na, nb), tuple(union))

    def __neg__(self):
        return SkeinScalar(_pscale(self.num, -1), self.den, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SkeinScalar(_pscale(self.num, other), self.den,
                               reduce=False)
        if not isinstance(other, SkeinScalar):
            return NotImplemented
        if not self.num or not other.num:
            return SkeinScalar.zero()
        return SkeinScalar(_pmul(self.num, other.num), self.den + other.den)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = SkeinScalar.one()
        for _ in range(n):
            out = out * self
        return out

    def times_monomial(self, v_exp, s_exp, coeff=1):
        if coeff == 0 or not self.num:
            return SkeinScalar.zero()
        num = {(a + v_exp, b + s_exp): c * coeff
               for (a, b), c in self.num.items()}
        return SkeinScalar(num, self.den, reduce=False)

    def subst_v_inverse(self):
        """Substitute v -> 1/v.  Denominators involve s only, so this is safe."""
        return SkeinScalar({(-a, b): c for (a, b), c in self.num.items()},
                           self.den, reduce=False)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SkeinScalar.from_int(other)
        if not isinstance(other, SkeinScalar):
            return NotImplemented
        na = self.num
        for r in other.den:
            na = _pmul(na, _factor_poly(r))
        nb = other.num
        for r in self.den:
            nb = _pmul(nb, _factor_poly(r))
        return na == nb

    __hash__ = None

    # -- structure ----------------------------------------------------

    def v_order(self):
        """Least v exponent in the numerator (INF for zero)."""
        if not self.num:
            return INF
        return min(a for (a, _b) in self.num)

    def v_profile(self):
        """(order, leading coefficient as a function of s) at v = 0.

        The leading coefficient keeps the factored denominator; the zero
        scalar reports infinite order.
        """
        if not self.num:
            return INF, SkeinScalar.zero()
        a0 = self.v_order()
        lead = {(0, b): c for (a, b), c in self.num.items() if a == a0}
        return a0, SkeinScalar(lead, self.den)

    def v_slice(self, a0):
        """Coefficient of v^a0 as a function of s (keeps the denominator)."""
        sl = {(0, b): c for (a, b), c in self.num.items() if a == a0}
        return SkeinScalar(sl, self.den)

    def v_exponents(self):
        return sorted({a for (a, _b) in self.num})

    def is_v_monomial(self):
        return len(self.v_exponents()) <= 1

    def valuation(self):
        """Exact order of vanishing at s = 0 (INF for the zero scalar)."""
        if not self.num:
            return INF
        return min(b for (_a, b) in self.num) + sum(self.den)

    def leading_v_poly(self):
        """Coefficient of s^valuation in the expansion at s = 0: {v_exp: int}."""
        if not self.num:
            return {}
        b0 = min(b for (_a, b) in self.num)
        sign = (-1) ** len(self.den)
        return {a: sign * c for (a, b), c in self.num.items() if b == b0}

    # -- expansion at s = 0 --------------------------------------------

    def expand(self, through):
        """Expansion at s = 0, exact for every s exponent <= through."""
        if not self.num:
            return SExpansion({}, INF)
        terms = {}
        for (a, b), c in self.num.items():
            terms.setdefault(b, {})[a] = c
        out = SExpansion(terms, INF)
        rem = sum(self.den)
        val = min(terms)
        for r in self.den:
            rem -= r
            # 1/(s^r - s^-r) = -(s^r + s^3r + s^5r + ...)
            cut = through - val - rem
            geo = {}
            e = r
            while e <= cut:
                geo[e] = {0: -1}
                e += 2 * r
            if not geo:
                return SExpansion({}, through)
            out = out.mul(SExpansion(geo, cut))
            val += r
        return out.truncate(through)


class SExpansion:
    """Laurent series in s, exact through s^bound, coefficients Laurent in v.

    terms maps s_exp -> {v_exp: int}; every stored s_exp is <= bound.
    """

    __slots__ = ("terms", "bound")

    def __init__(self, terms, bound):
        self.terms = {e: d for e, d in terms.items() if d and e <= bound}
        self.bound = bound

    @staticmethod
    def unit(bound):
        return SExpansion({0: {0: 1}}, bound)

    @staticmethod
    def zero(bound=INF):
        return SExpansion({}, bound)

    def is_zero(self):
        return not self.terms

    def valuation(self):
        return min(self.terms) if self.terms else INF

    def leading(self):
        """{v_exp: int} at the lowest s order, {} when zero through bound."""
        if not self.terms:
            return {}
        return dict(self.terms[min(self.terms)])

    def add(self, other):
        bound = min(self.bound, other.bound)
        terms = {e: dict(d) for e, d in self.terms.items() if e <= bound}
        for e, d in other.terms.items():
            if e > bound:
                continue
            t = terms.setdefault(e, {})
            for a, c in d.items():
                n = t.get(a, 0) + c
                if n:
                    t[a] = n
                elif a in t:
                    del t[a]
        return SExpansion(terms, bound)

    def neg(self):
        return SExpansion({e: {a: -c for a, c in d.items()}
                           for e, d in self.terms.items()}, self.bound)

    def scale(self, c):
        if c == 0:
            return SExpansion({}, self.bound)
        return SExpansion({e: {a: x * c for a, x in d.items()}
                           for e, d in self.terms.items()}, self.bound)

    def shift_monomial(self, v_exp, s_exp, coeff=1):
        if coeff == 0:
            return SExpansion({}, self.bound + s_exp
                              if self.bound is not INF else INF)
        bound = self.bound if self.bound is INF else self.bound + s_exp
        return SExpansion({e + s_exp: {a + v_exp: c * coeff
                                       for a, c in d.items()}
                           for e, d in self.terms.items()}, bound)

    def mul(self, other):
        va, vb = self.valuation(), other.valuation()
        bound = min(va + other.bound, vb + self.bound)
        if bound != bound:  # nan from INF - INF; both zero
            bound = INF
        terms = {}
        for ea, da in self.terms.items():
            for eb, db in other.terms.items():
                e = ea + eb
                if e > bound:
                    continue
                t = terms.setdefault(e, {})
                for a1, c1 in da.items():
                    for a2, c2 in db.items():
                        a = a1 + a2
                        n = t.get(a, 0) + c1 * c2
                        if n:
                            t[a] = n
                        elif a in t:
                            del t[a]
        return SExpansion(terms, bound)

    def truncate(self, bound):
        bound = min(self.bound, bound)
        return SExpansion({e: d for e, d in self.terms.items()
                           if e <= bound}, bound)

    def eq_through(self, other, through):
        if through > self.bound or through > other.bound:
            raise TruncationError(
                "comparison through s^%s exceeds bounds (%s, %s)"
                % (through, self.bound, other.bound))
        return self.first_mismatch(other, through) is None

    def first_mismatch(self, other, through):
        """Lowest s exponent <= through where the two differ, else None."""
        exps = sorted(set(self.terms) | set(other.terms))
        for e in exps:
            if e > through:
                break
            if self.terms.get(e, {}) != other.terms.get(e, {}):
                return e
        return None


def fit_monomial(target, base, through):
    """Find sign in {+1, -1} and shift a with target = sign * s^a * base.

    Both arguments are SExpansions; the fit uses the lowest order terms and
    is then verified through the stated order.  Returns (sign, a) or None.
    """
    if target.is_zero() or base.is_zero():
        return None
    lt, lb = target.leading(), base.leading()
    sign = None
    if lt == lb:
        sign = 1
    elif lt == {a: -c for a, c in lb.items()}:
        sign = -1
    if sign is None:
        return None
    a = target.valuation() - base.valuation()
    shifted = base.shift_monomial(0, a, sign)
    lim = min(through, target.bound, shifted.bound)
    if target.first_mismatch(shifted, lim) is not None:
        return None
    return sign, a


def product_expansion(factors, through):
    """Expand a product of scalars at s = 0, exact through s^through.

    Each factor is a SkeinScalar or an SExpansion; margins are computed from
    exact valuations so the result really is exact through the stated order.
    """
    vals = []
    for f in factors:
        v = f.valuation()
        if v is INF:
            return SExpansion({}, INF)
        vals.append(v)
    total = sum(vals)
    out = SExpansion.unit(INF)
    for f, v in zip(factors, vals):
        need = through - (total - v)
        if isinstance(f, SkeinScalar):
            f = f.expand(need)
        elif f.bound < need:
            raise TruncationError("factor exact only through s^%s, need %s"
                                  % (f.bound, need))
        out = out.mul(f)
    return out.truncate(through)


def render_scalar(x):
    """Canonical text: numerator terms in lexicographic (v, s) order over
    the factored denominator."""
    if not x.num:
        return "0"
    parts = []
    for (a, b) in sorted(x.num):
        c = x.num[(a, b)]
        t = "%+d" % c
        if a:
            t += "*v^%d" % a
        if b:
            t += "*s^%d" % b
        parts.append(t)
    s = " ".join(parts)
    if x.den:
        s += " / " + " ".join("(s^%d - s^-%d)" % (r, r) for r in x.den)
    return s
