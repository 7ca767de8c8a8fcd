"""Skein of the annulus: elements, satellite operations, meridian maps,
and traces.

An element is a dict from partition (a sorted tuple) to SkeinScalar,
written in the basis indexed by partitions.  The basis diagonalizes both
the framing change and the meridian maps, which is what makes satellite
computations tractable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd

from .errors import InputError, IntegralityError
from .partitions import contents, hooks, kappa, transpose
from .scalars import INF, SkeinScalar
from .schur import (lr_expand, meridian_generating_series, plethysm_power,
                    schur_in_elementaries, schur_qrho,
                    shifted_principal_value)


# -- element algebra ------------------------------------------------------

def el_zero():
    return {}

def el_unit():
    return {(): SkeinScalar.one()}

def el_basis(lam):
    return {tuple(lam): SkeinScalar.one()}


def el_add(a, b):
    out = dict(a)
    for k, c in b.items():
        n = out[k] + c if k in out else c
        if n.is_zero():
            out.pop(k, None)
        else:
            out[k] = n
    return out


def el_scale(a, c):
    if isinstance(c, int):
        c = SkeinScalar.from_int(c)
    if c.is_zero():
        return {}
    return {k: x * c for k, x in a.items()}


def el_scale_monomial(a, v_exp, s_exp, coeff=1):
    return {k: x.times_monomial(v_exp, s_exp, coeff) for k, x in a.items()}


def skein_mul(a, b):
    """Product in the annulus skein, expanded through basis products."""
    out = {}
    for lam, ca in a.items():
        for nu, cb in b.items():
            c = ca * cb
            if c.is_zero():
                continue
            for rho, mult in lr_expand(lam, nu).items():
                n = out[rho] + c * mult if rho in out else c * mult
                if n.is_zero():
                    out.pop(rho, None)
                else:
                    out[rho] = n
    return out


def el_product(elements):
    out = el_unit()
    for x in elements:
        out = skein_mul(out, x)
    return out


def el_size(x):
    """Common size of the basis labels, or None for the zero element.

    Traces of the lowest-order kind need a single strand count, so mixed
    sizes are rejected."""
    sizes = {sum(k) for k in x}
    if not sizes:
        return None
    if len(sizes) > 1:
        raise InputError("element mixes strand counts %s" % sorted(sizes))
    return sizes.pop()


# -- framing and satellites ------------------------------------------------

def frame(x, t):
    """Framing change by t full twists: the basis element for lam picks up
    v^(-t|lam|) s^(t kappa(lam)).  Fractional t must still produce integer
    exponents on every key present."""
    t = Fraction(t)
    out = {}
    for lam, c in x.items():
        ve = -t * sum(lam)
        se = t * kappa(lam)
        if ve.denominator != 1 or se.denominator != 1:
            raise IntegralityError(
                "framing %s gives fractional exponents on %r" % (t, lam))
        out[lam] = c.times_monomial(int(ve), int(se))
    return out


def plethysm_apply(x, m):
    """Push an element along the degree-m power sum cabling map."""
    out = {}
    for lam, c in x.items():
        for nu, mult in plethysm_power(lam, m).items():
            n = out[nu] + c * mult if nu in out else c * mult
            if n.is_zero():
                out.pop(nu, None)
            else:
                out[nu] = n
    return out


def torus_satellite(m, n, decorations):
    """Annulus element of the (m, n) torus link whose gcd(m, n) parallel
    components carry the given decorations.

    The components merge into a single decoration by the basis product,
    after which one plethysm and one fractional framing remain.
    """
    if m < 1 or n < 0:
        raise InputError("need winding m >= 1 and twisting n >= 0, "
                         "got (%d, %d)" % (m, n))
    d = gcd(m, n)
    if len(decorations) != d:
        raise InputError("torus link (%d, %d) has %d components, got %d "
                         "decorations" % (m, n, d, len(decorations)))
    x = el_product(decorations)
    return frame(plethysm_apply(x, m // d), Fraction(n, m))


def splice_satellite(m, n, x, y):
    """Satellite of the (m, n) pattern carrying x, spliced with a parallel
    companion carrying y inside the same torus.

    The companion contributes through the basis product after its own
    framing is compensated, so only the pattern's twisting remains.
    """
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise InputError("splice pattern needs coprime positive (m, n), "
                         "got (%d, %d)" % (m, n))
    t = Fraction(n, m)
    xp = plethysm_apply(x, m)
    out = {}
    for mu, cmu in y.items():
        pv = t * sum(mu)
        ps = -t * kappa(mu)
        for rho, c in skein_mul(xp, {mu: cmu}).items():
            ve = pv - t * sum(rho)
            se = ps + t * kappa(rho)
            if ve.denominator != 1 or se.denominator != 1:
                raise IntegralityError(
                    "splice (%d, %d) gives fractional exponents on %r"
                    % (m, n, rho))
            piece = c.times_monomial(int(ve), int(se))
            n2 = out[rho] + piece if rho in out else piece
            if n2.is_zero():
                out.pop(rho, None)
            else:
                out[rho] = n2
    return out


# -- meridians -------------------------------------------------------------

@cache
def basis_trace(lam):
    """Closure invariant of a basis element: product over cells of
    (v^-1 s^c - v s^-c) / (s^h - s^-h)."""
    num = SkeinScalar.one()
    for c in contents(lam):
        num = num * SkeinScalar({(-1, c): 1, (1, -c): -1})
    return SkeinScalar(num.num, tuple(hooks(lam)))


@cache
def t_eigen(lam, gamma):
    """Eigenvalue of the meridian decorated by lam on the basis element
    gamma, as an exact scalar."""
    lt = transpose(lam)
    if not lt:
        return SkeinScalar.one()
    order = lt[0] + len(lt)
    e = meridian_generating_series(gamma, order)
    return schur_in_elementaries(lam, e)


def meridian_apply(lam, x):
    """Encircle every strand of x with a meridian decorated by lam."""
    lam = tuple(lam)
    if not lam:
        return dict(x)
    return {g: c * t_eigen(lam, g) for g, c in x.items()}


def meridian_value(mu, x):
    """Eigenvalue of the meridian decorated by x on the core Q_mu."""
    mu = tuple(mu)
    out = SkeinScalar.zero()
    for lam, c in x.items():
        out = out + c * t_eigen(lam, mu)
    return out


def trace(x):
    """Exact closure invariant of an element."""
    out = SkeinScalar.zero()
    for lam, c in x.items():
        out = out + c * basis_trace(lam)
    return out


# -- lowest order traces ----------------------------------------------------

def _low_data(x):
    m = el_size(x)
    if m is None:
        return None, None, None
    a = min(c.v_order() for c in x.values())
    slices = {g: c.v_slice(a) for g, c in x.items()}
    return m, a, slices


def trace_low(x):
    """(order, coefficient) of the bottom v-degree of the closure trace.

    Valid for any element with a single strand count: each basis trace has
    v-order exactly minus the strand count, with coefficient the principal
    specialization, so the bottom slice assembles from bottom slices.
    """
    m, a, slices = _low_data(x)
    if m is None:
        return INF, SkeinScalar.zero()
    out = SkeinScalar.zero()
    for g, sl in slices.items():
        if sl.is_zero():
            continue
        out = out + sl * schur_qrho(g)
    if out.is_zero():
        raise InputError("bottom v-slice of the trace cancels; "
                         "element is outside the supported shape")
    return a - m, out


def trace_low_meridian(lam, x):
    """(order, coefficient) of the bottom v-degree of the closure trace
    after a meridian decorated by lam encircles x.

    The meridian eigenvalue has v-order exactly -|lam| with coefficient
    the shifted principal specialization, so no cross terms from higher
    slices can reach the bottom degree.
    """
    lam = tuple(lam)
    m, a, slices = _low_data(x)
    if m is None:
        return INF, SkeinScalar.zero()
    out = SkeinScalar.zero()
    for g, sl in slices.items():
        if sl.is_zero():
            continue
        out = out + sl * shifted_principal_value(lam, g) * schur_qrho(g)
    if out.is_zero():
        raise InputError("bottom v-slice of the trace cancels; "
                         "element is outside the supported shape")
    return a - m - sum(lam), out


def meridian_value_low(mu, x):
    """(order, coefficient) of the bottom v-degree of the eigenvalue of
    the meridian decorated by x on the core Q_mu."""
    mu = tuple(mu)
    m, a, slices = _low_data(x)
    if m is None:
        return INF, SkeinScalar.zero()
    out = SkeinScalar.zero()
    for g, sl in slices.items():
        if sl.is_zero():
            continue
        out = out + sl * shifted_principal_value(g, mu)
    if out.is_zero():
        raise InputError("bottom v-slice of the eigenvalue cancels; "
                         "element is outside the supported shape")
    return a - m, out
