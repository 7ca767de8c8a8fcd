"""Schur function combinatorics behind the annulus skein operations:
basis products, power-sum plethysm, symmetric group characters, and the
principal and shifted principal specializations."""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .errors import ConsistencyError, TruncationError
from .partitions import (contains, contents, hooks, kappa, partitions_of,
                         sub_partitions, transpose, z_order)
from .scalars import SkeinScalar


# -- Littlewood-Richardson products -------------------------------------

def _lr_count(rho, lam, nu):
    """Count fillings of the skew shape rho/lam with content nu that are
    semistandard and whose reverse reading word is a lattice word."""
    rows = len(rho)
    lamr = list(lam) + [0] * (rows - len(lam))
    cells = []
    for i in range(rows):
        for j in range(rho[i] - 1, lamr[i] - 1, -1):
            cells.append((i, j))
    ell = len(nu)
    entry = {}
    counts = [0] * ell

    def fill(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        right = entry.get((i, j + 1), ell - 1) if j + 1 < rho[i] else ell - 1
        above = entry.get((i - 1, j), -1)
        total = 0
        for k in range(above + 1, right + 1):
            if counts[k] >= nu[k]:
                continue
            if k and counts[k] >= counts[k - 1]:
                continue
            counts[k] += 1
            entry[(i, j)] = k
            total += fill(pos + 1)
            counts[k] -= 1
        entry.pop((i, j), None)
        return total

    return fill(0)


@cache
def lr_expand(lam, nu):
    """Product expansion s_lam * s_nu = sum_rho c^rho_{lam,nu} s_rho."""
    if not lam:
        return {nu: 1}
    if not nu:
        return {lam: 1}
    if sum(nu) > sum(lam) or (sum(nu) == sum(lam) and nu > lam):
        return lr_expand(nu, lam)
    n = sum(lam) + sum(nu)
    out = {}
    for rho in partitions_of(n):
        if len(rho) > len(lam) + len(nu) or rho[0] > lam[0] + nu[0]:
            continue
        if not contains(rho, lam):
            continue
        c = _lr_count(rho, lam, nu)
        if c:
            out[rho] = c
    return out


# -- symmetric group characters ------------------------------------------

def _border_strips(lam, k):
    """All (mu, height) with lam minus a border strip of size k equal mu."""
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for b2 in beta if nb < b2 < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        mu = tuple(newbeta[j] - (ell - 1 - j) for j in range(ell))
        out.append((tuple(x for x in mu if x), height))
    return out


@cache
def sym_character(lam, rho):
    """Irreducible symmetric group character chi^lam at cycle type rho."""
    if sum(lam) != sum(rho):
        raise ConsistencyError("character sizes differ: %r, %r" % (lam, rho))
    if not lam:
        return 1
    k = rho[0]
    rest = rho[1:]
    total = 0
    for mu, height in _border_strips(lam, k):
        total += (-1) ** height * sym_character(mu, rest)
    return total


@cache
def plethysm_power(lam, m):
    """Expansion of s_lam composed with the power sum p_m in the Schur
    basis; returns {nu: int} with nu running over partitions of m*|lam|."""
    if m == 1:
        return {lam: 1}
    n = sum(lam)
    if n == 0:
        return {(): 1}
    out = {}
    for nu in partitions_of(n * m):
        c = Fraction(0)
        for rho in partitions_of(n):
            chi_l = sym_character(lam, rho)
            if not chi_l:
                continue
            mrho = tuple(m * x for x in rho)
            c += Fraction(chi_l * sym_character(nu, mrho), z_order(rho))
        if c:
            if c.denominator != 1:
                raise ConsistencyError(
                    "fractional plethysm coefficient at %r" % (nu,))
            out[nu] = int(c)
    return out


# -- principal specializations -------------------------------------------

def schur_qrho(lam):
    """s_lam at x_i = s^(1-2i) for i >= 1, as an exact scalar."""
    return SkeinScalar({(0, kappa(lam) // 2): 1}, tuple(hooks(lam)))


def det_matrix(mat):
    """Determinant of a square matrix of scalars, by masked expansion
    over column subsets (avoids the factorial blowup of cofactors)."""
    n = len(mat)
    cur = {0: SkeinScalar.one()}
    for i in range(n):
        nxt = {}
        for mask, val in cur.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = mat[i][j]
                if entry.is_zero():
                    continue
                term = val * entry
                if bin(mask >> (j + 1)).count("1") % 2:
                    term = -term
                key = mask | bit
                if key in nxt:
                    nxt[key] = nxt[key] + term
                else:
                    nxt[key] = term
        cur = nxt
    return cur.get((1 << n) - 1, SkeinScalar.zero())


def _complete_homogeneous_table(kmax, xs):
    """h_0..h_kmax of the explicit variables xs (scalars)."""
    table = [SkeinScalar.one()] + [SkeinScalar.zero()] * kmax
    for x in xs:
        for d in range(1, kmax + 1):
            table[d] = table[d] + x * table[d - 1]
    return table


def _skew_schur_in_monomials(lam, nu, xs):
    """s_{lam/nu}(xs) by the h-determinant."""
    n = len(lam)
    nur = list(nu) + [0] * (n - len(nu))
    kmax = max((lam[i] - nur[j] - i + j
                for i in range(n) for j in range(n)), default=0)
    if kmax < 0:
        kmax = 0
    h = _complete_homogeneous_table(kmax, xs)
    zero = SkeinScalar.zero()

    def hh(k):
        return h[k] if 0 <= k <= kmax else zero

    mat = [[hh(lam[i] - nur[j] - i + j) for j in range(n)] for i in range(n)]
    return det_matrix(mat)


@cache
def shifted_principal_value(lam, mu, head_count=None):
    """s_lam at x_i = s^(2*mu_i - 2i + 1), exact.

    The finitely many displaced variables are split off and the remaining
    tail is resummed through the plain principal specialization.
    head_count pads mu with zero parts before the split; the value does
    not depend on it.
    """
    if not lam:
        return SkeinScalar.one()
    ell = len(mu) if head_count is None else head_count
    if ell < len(mu):
        raise ConsistencyError("head count below the number of parts")
    mu = tuple(mu) + (0,) * (ell - len(mu))
    heads = [SkeinScalar.monomial(0, 2 * mu[i] - 2 * i - 1)
             for i in range(ell)]
    total = SkeinScalar.zero()
    for nu in sub_partitions(lam):
        skew = _skew_schur_in_monomials(lam, nu, heads)
        if skew.is_zero():
            continue
        tail = schur_qrho(nu).times_monomial(0, -2 * ell * sum(nu))
        total = total + skew * tail
    return total


# -- meridian eigenvalue series -------------------------------------------

@cache
def meridian_generating_series(mu, order):
    """Coefficients e_0..e_order of the elementary generating series for
    the alphabet attached to a strand decorated by mu.

    The undecorated series F satisfies F(t) = (1+vst)/(1+t/(vs)) * F(s^2 t),
    which pins down its coefficients as products of quantum factors; the
    decoration multiplies by a finite head correction.
    """
    e = [SkeinScalar.one()]
    f = SkeinScalar.one()
    for k in range(1, order + 1):
        f = f * SkeinScalar({(-1, 1 - k): 1, (1, k - 1): -1}, (k,))
        e.append(f)
    for j in range(1, len(mu) + 1):
        a = SkeinScalar.monomial(-1, 2 * mu[j - 1] - 2 * j + 1)
        scaled = [e[0]]
        for k in range(1, order + 1):
            scaled.append(e[k] + a * e[k - 1])
        b = SkeinScalar.monomial(-1, 1 - 2 * j)
        e = [scaled[0]]
        for k in range(1, order + 1):
            e.append(scaled[k] - b * e[k - 1])
    return tuple(e)


def schur_in_elementaries(lam, e):
    """s_lam as the dual determinant det(e_{lam^t_i - i + j}) in the given
    elementary coefficients."""
    lt = transpose(lam)
    n = len(lt)
    if n == 0:
        return SkeinScalar.one()
    need = lt[0] + n - 1
    if need >= len(e):
        raise TruncationError(
            "need elementary coefficients through %d, have %d"
            % (need, len(e) - 1))
    zero = SkeinScalar.zero()

    def ee(k):
        return e[k] if k >= 0 else zero

    mat = [[ee(lt[i] - i + j) for j in range(n)] for i in range(n)]
    return det_matrix(mat)
