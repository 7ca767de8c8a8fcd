import pytest

from curveskein.errors import ConsistencyError, InputError
from curveskein.hilbert import (NodeIdeal, SemigroupModule,
                                enumerate_modules, min_generators,
                                z_curve, z_series)
from curveskein.scalars import SkeinScalar

from oracles import modules_by_search


def gap_sets(p, q, n):
    return sorted(sorted(m.gaps) for m in enumerate_modules(p, q, n))


def test_enumerate_small_cusp():
    assert gap_sets(2, 3, 0) == [[]]
    assert gap_sets(2, 3, 1) == [[0]]
    assert gap_sets(2, 3, 2) == [[0, 2], [0, 3]]
    assert gap_sets(2, 3, 3) == [[0, 2, 3], [0, 2, 4]]


def test_enumerate_matches_subset_search():
    for p, q in [(2, 3), (2, 5), (3, 4)]:
        for n in range(9):
            got = gap_sets(p, q, n)
            want = sorted(sorted(g) for g in modules_by_search(p, q, n))
            assert got == want, (p, q, n)


def test_enumerate_symmetric_in_p_q():
    for p, q in [(2, 3), (3, 4), (2, 5)]:
        for n in range(7):
            a = enumerate_modules(p, q, n)
            b = enumerate_modules(q, p, n)
            assert len(a) == len(b)
            assert sorted(min_generators(m) for m in a) == \
                sorted(min_generators(m) for m in b)


def test_enumerate_validates():
    with pytest.raises(InputError):
        enumerate_modules(2, 4, 1)
    with pytest.raises(InputError):
        enumerate_modules(0, 3, 1)


def test_min_generators_examples():
    assert min_generators(SemigroupModule(2, 3, frozenset({0, 3}))) == 1
    assert min_generators(SemigroupModule(2, 3, frozenset({0}))) == 2
    assert min_generators(SemigroupModule(2, 3, frozenset())) == 1
    assert min_generators(NodeIdeal(1, 2)) == 2


def test_min_generators_can_exceed_two():
    # the square of the maximal ideal on the (3,4) cusp
    assert min_generators(SemigroupModule(3, 4, frozenset({0, 3, 4}))) == 3


def test_colength():
    assert SemigroupModule(2, 3, frozenset({0, 2})).colength() == 2
    assert NodeIdeal(2, 3).colength() == 4


def test_z_curve_smooth_and_node():
    w = SkeinScalar({(0, 0): 1, (2, 0): -1})
    smooth = z_curve("smooth", 4)
    assert all(smooth[n] == w for n in range(5))
    node = z_curve("node", 4)
    assert node[0] == w
    assert node[1] == w * w
    assert node[2] == w * w * 2
    assert node[4] == w * w * 4


def test_z_curve_cusp_low_orders():
    z = z_curve((2, 3), 2)
    w = SkeinScalar({(0, 0): 1, (2, 0): -1})
    assert z[0] == w
    assert z[1] == w * w
    assert z[2] == w * w + w


def test_z_curve_euler_characteristics():
    # the weight becomes 1 at v = 0, leaving the fixed-ideal count
    z = z_curve((2, 3), 5)
    for n in range(6):
        count = len(enumerate_modules(2, 3, n))
        assert z[n].v_slice(0) == SkeinScalar.from_int(count), n


def test_z_curve_rejects_unknown_kind():
    with pytest.raises(InputError):
        z_curve("elliptic", 3)
    with pytest.raises(InputError):
        z_curve((2, 4), 3)


def test_z_series_frozen_cusp():
    zs = z_series((2, 3), 3)
    assert zs.terms == {0: {0: 1, 2: -1},
                        2: {0: 1, 2: -2, 4: 1},
                        4: {0: 2, 2: -3, 4: 1},
                        6: {0: 2, 2: -3, 4: 1}}
    assert zs.bound == 7
