"""Hilbert-scheme generating functions of plane-curve germs with monomial
local models, computed by enumerating torus-fixed ideals.

Supported germs: a smooth branch, the node xy = 0, and the quasi-
homogeneous branch y^q = x^p with p, q coprime.  A fixed ideal of the
branch cases is a module over the value semigroup <p, q>, recorded by its
finite gap set; the node's fixed ideals are the monomial pairs (x^a, y^b).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import gcd

from .errors import ConsistencyError, InputError
from .scalars import SExpansion, SkeinScalar


@dataclass(frozen=True)
class SemigroupModule:
    p: int
    q: int
    gaps: frozenset

    def colength(self):
        return len(self.gaps)


@dataclass(frozen=True)
class NodeIdeal:
    a: int
    b: int

    def colength(self):
        return self.a + self.b - 1


def in_semigroup(p, q, x):
    if x < 0:
        return False
    for a in range(x // p + 1):
        if (x - a * p) % q == 0:
            return True
    return False


@cache
def _semigroup_upto(p, q, bound):
    return tuple(x for x in range(bound + 1) if in_semigroup(p, q, x))


def _generators(p, q, gaps):
    """Elements of the module that no smaller module element reaches by
    adding a nonzero semigroup element."""
    conductor = (p - 1) * (q - 1)
    top = max(gaps, default=0)
    out = []
    for x in _semigroup_upto(p, q, max(top, conductor) + p + q):
        if x in gaps:
            continue
        below_p = x - p >= 0 and in_semigroup(p, q, x - p) and x - p not in gaps
        below_q = x - q >= 0 and in_semigroup(p, q, x - q) and x - q not in gaps
        if not below_p and not below_q:
            out.append(x)
    return out


def min_generators(module):
    if isinstance(module, NodeIdeal):
        return 2
    gens = _generators(module.p, module.q, module.gaps)
    # generators have distinct residues both mod p and mod q
    if len(gens) > min(module.p, module.q):
        raise ConsistencyError(
            "module %r needs %d generators, more than the multiplicity"
            % (module, len(gens)))
    return len(gens)


def _assert_closed(p, q, gaps):
    for g in gaps:
        if not in_semigroup(p, q, g):
            raise ConsistencyError("gap %d is outside the semigroup" % g)
        for step in (p, q):
            r = g - step
            if r >= 0 and in_semigroup(p, q, r) and r not in gaps:
                raise ConsistencyError(
                    "gap set %r is not closed under the semigroup" %
                    sorted(gaps))


def enumerate_modules(p, q, n):
    """All semigroup modules of colength n, each exactly once.

    Grown by colength: removing a generator from a module leaves a
    module, and every colength-n module arises this way because its
    largest gap can always be put back.
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise InputError("semigroup generators must be coprime positive, "
                         "got (%r, %r)" % (p, q))
    if n < 0:
        raise InputError("negative colength")
    level = {frozenset()}
    for _ in range(n):
        nxt = set()
        for gaps in level:
            for g in _generators(p, q, gaps):
                nxt.add(gaps | {g})
        level = nxt
    out = []
    for gaps in sorted(level, key=sorted):
        _assert_closed(p, q, gaps)
        out.append(SemigroupModule(p, q, gaps))
    return out


def _weight():
    return SkeinScalar({(0, 0): 1, (2, 0): -1})


def z_curve(kind, N):
    """Coefficients of s^(2n), n = 0..N, of the weighted generating
    function: each fixed ideal contributes (1 - v^2)^(number of
    generators).  kind is "smooth", "node", or a coprime pair (p, q)."""
    if N < 0:
        raise InputError("negative order")
    w = _weight()
    if kind == "smooth":
        return {n: w for n in range(N + 1)}
    if kind == "node":
        out = {0: w}
        w2 = w * w
        for n in range(1, N + 1):
            out[n] = w2 * n
        return out
    if (isinstance(kind, tuple) and len(kind) == 2
            and all(isinstance(c, int) for c in kind)):
        p, q = kind
        out = {}
        for n in range(N + 1):
            total = SkeinScalar.zero()
            for module in enumerate_modules(p, q, n):
                total = total + _weight() ** min_generators(module)
            out[n] = total
        return out
    raise InputError("unsupported germ kind %r" % (kind,))


def z_series(kind, N):
    """z_curve assembled as one expansion, exact through s^(2N + 1)."""
    bound = 2 * N + 1
    out = SExpansion.zero(bound)
    for n, c in z_curve(kind, N).items():
        out = out.add(c.expand(bound - 2 * n).shift_monomial(0, 2 * n))
    return out
