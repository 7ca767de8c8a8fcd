import pytest

from curveskein.errors import InputError, TruncationError
from curveskein.scalars import (SExpansion, SkeinScalar, fit_monomial,
                                product_expansion, render_scalar)


def S(num, den=()):
    return SkeinScalar(num, den)


def test_ring_laws():
    a = S({(1, 2): 3, (-1, 0): 1}, (1,))
    b = S({(0, 1): -2}, (2, 1))
    c = S({(2, -3): 5})
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a + SkeinScalar.zero() == a
    assert a * SkeinScalar.one() == a
    assert a - a == SkeinScalar.zero()
    assert a * 3 == a + a + a
    assert 3 * a == a * 3


def test_pow():
    a = S({(0, 1): 1, (0, -1): -1})
    assert a ** 0 == SkeinScalar.one()
    assert a ** 3 == a * a * a
    with pytest.raises(TypeError):
        a ** -1


def test_equality_cross_multiplies():
    # the same value in two factored presentations
    c = S({(0, 2): 1, (0, 0): 1}, (2,))   # (s^2 + 1)/(s^2 - s^-2)
    d = S({(0, 1): 1}, (1,))              # s/(s - s^-1)
    assert c == d
    assert c != d * 2


def test_not_hashable():
    with pytest.raises(TypeError):
        hash(SkeinScalar.one())


def test_reduction_cancels_full_factors():
    one = S({(0, 1): 1, (0, -1): -1}, (1,))
    assert one == SkeinScalar.one()
    assert one.den == ()


def test_expand_geometric():
    x = S({(0, 0): 1}, (1,))   # 1/(s - 1/s) = -(s + s^3 + s^5 + ...)
    e = x.expand(7)
    assert e.terms == {1: {0: -1}, 3: {0: -1}, 5: {0: -1}, 7: {0: -1}}
    assert e.bound == 7
    assert x.valuation() == 1


def test_expand_matches_product():
    a = S({(1, 0): 2, (0, 3): -1}, (2,))
    b = S({(0, -1): 1}, (1, 1))
    direct = (a * b).expand(9)
    assert product_expansion([a, b], 9).first_mismatch(direct, 9) is None


def test_v_profile_and_slices():
    a = S({(2, 1): 1, (2, -1): 4, (5, 0): -2})
    assert a.v_order() == 2
    order, lead = a.v_profile()
    assert order == 2
    assert lead == S({(0, 1): 1, (0, -1): 4})
    assert a.v_slice(5) == S({(0, 0): -2})
    assert a.v_exponents() == [2, 5]
    assert not a.is_v_monomial()
    assert a.v_slice(3).is_zero()


def test_valuation_counts_denominator():
    a = S({(0, 4): 7}, (1, 2))
    assert a.valuation() == 4 + 3
    assert a.leading_v_poly() == {0: 7}


def test_subst_v_inverse():
    a = S({(2, 1): 3, (-1, 0): 1}, (1,))
    b = a.subst_v_inverse()
    assert b == S({(-2, 1): 3, (1, 0): 1}, (1,))
    assert b.subst_v_inverse() == a


def test_times_monomial():
    a = S({(1, 1): 1})
    assert a.times_monomial(2, -3, -5) == S({(3, -2): -5})


def test_sexpansion_arithmetic():
    a = SExpansion({0: {0: 1}, 2: {0: 1}}, 4)
    b = SExpansion({1: {1: 2}}, 10)
    p = a.mul(b)
    assert p.terms == {1: {1: 2}, 3: {1: 2}}
    assert p.bound == 4 + 1   # valuation of b shifts the guarantee
    assert a.add(a.neg()).is_zero()
    assert a.valuation() == 0 and b.leading() == {1: 2}


def test_eq_through_guards_bounds():
    a = SExpansion({0: {0: 1}}, 4)
    with pytest.raises(TruncationError):
        a.eq_through(SExpansion({0: {0: 1}}, 3), 4)
    assert a.eq_through(SExpansion({0: {0: 1}}, 9), 4)


def test_fit_monomial():
    base = S({(0, 0): 1}, (1,)).expand(9)
    target = base.shift_monomial(0, 4, -1)
    assert fit_monomial(target, base, 9) == (-1, 4)
    assert fit_monomial(base, base, 9) == (1, 0)
    other = base.add(SExpansion({6: {0: 17}}, 9))
    assert fit_monomial(other, base, 9) is None


def test_product_expansion_needs_enough_terms():
    a = S({(0, -2): 1}, (1,))
    short = S({(0, 0): 1}, (1,)).expand(3)
    with pytest.raises(TruncationError):
        product_expansion([a, short], 9)


def test_render():
    a = S({(1, -1): 2, (0, 3): -1}, (2,))
    assert render_scalar(a) == "-1*s^3 +2*v^1*s^-1 / (s^2 - s^-2)"
    assert render_scalar(SkeinScalar.zero()) == "0"
