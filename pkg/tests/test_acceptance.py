"""Acceptance suite: one test per release criterion, run at full scale.

Each test carries its own wall-clock budget; `pytest -v` gives the
one-line pass/fail verdict per criterion.
"""
import time
from math import gcd

import pytest

from oracles import (modules_by_search, power_plethysm_in_schur,
                     product_in_schur)
from test_curves import SAMPLE

from curveskein.annulus import (basis_trace, el_basis, frame,
                                meridian_apply, skein_mul,
                                splice_satellite, t_eigen, trace_low,
                                trace_low_meridian)
from curveskein.checks import (blowup_term_match, skein_flop_check,
                               theorem1_check, vertex_flop_check)
from curveskein.curves import (annulus_element, blowup, branch,
                               branch_stats, germ, lowest_profile,
                               node_germ, reassembled_element)
from curveskein.errors import InputError
from curveskein.hilbert import enumerate_modules
from curveskein.partitions import (dominance_leq, dot, hook_sum, kappa,
                                   partitions_of, transpose)
from curveskein.scalars import SkeinScalar
from curveskein.schur import lr_expand, plethysm_power


def parts_up_to(n):
    return [p for k in range(n + 1) for p in partitions_of(k)]


def test_01_smooth_germ_closed_form(budget=1.0):
    started = time.perf_counter()
    r = theorem1_check(germ([branch([(1, 2)])]), 12)
    assert r.status
    assert (r.sign, r.v_shift, r.s_shift) == (1, -1, 1)
    assert time.perf_counter() - started < budget


def test_02_node_germ_through_order_24(budget=5.0):
    started = time.perf_counter()
    r = theorem1_check(node_germ(), 12)
    assert r.status
    assert (r.sign, r.v_shift, r.s_shift) == (1, 0, 0)
    assert time.perf_counter() - started < budget


def test_03_torus_knot_germs(budget=60.0):
    started = time.perf_counter()
    for p, q in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]:
        mu = (p - 1) * (q - 1)
        assert branch_stats(branch([(p, q)])).milnor == mu
        r = theorem1_check(germ([branch([(p, q)])]), 12)
        assert r.status, (p, q, r.first_mismatch)
        assert (r.sign, r.v_shift, r.s_shift) == (1, mu - 1, 1 - mu), (p, q)
    assert time.perf_counter() - started < budget


def test_04_vertex_flop_all_mu_up_to_4(budget=120.0):
    started = time.perf_counter()
    for mu in parts_up_to(4):
        r = vertex_flop_check(mu, q_order=24, Q_order=4, lam_size_bound=4)
        assert r.status, (mu, r.first_mismatch)
    assert time.perf_counter() - started < budget


def test_05_skein_flop_basis_and_germ_elements(budget=120.0):
    started = time.perf_counter()
    for mu in parts_up_to(3):
        r = skein_flop_check(el_basis(mu), q_order=24, Q_order=4,
                             lam_size_bound=4)
        assert r.status, (mu, r.first_mismatch)
    for c in [germ([branch([(2, 3)])]), node_germ()]:
        r = skein_flop_check(annulus_element(c), q_order=24, Q_order=4,
                             lam_size_bound=4)
        assert r.status, (c, r.first_mismatch)
    assert time.perf_counter() - started < budget


def test_06_blowup_term_match(budget=120.0):
    started = time.perf_counter()
    for c in [germ([branch([(2, 3)])]),
              germ([branch([(2, 3)])], labels=[(2,)]),
              node_germ()]:
        r = blowup_term_match(c, lam_size_bound=3)
        assert r.status, (c, r.first_mismatch)
        assert r.v_shift == 0
    assert time.perf_counter() - started < budget


def test_07_structural_identities(budget=60.0):
    started = time.perf_counter()
    # element reassembly after one blowup, across the sample
    for c in SAMPLE:
        if any(b.degenerate for b in c.branches):
            with pytest.raises(InputError):
                reassembled_element(c)
            rotated = germ([branch([(1, 1)])], labels=c.labels)
            assert reassembled_element(rotated) == annulus_element(rotated)
        else:
            assert reassembled_element(c) == annulus_element(c), c
    # the axis strand acts as a decorated meridian
    for c in SAMPLE:
        for ax in [(1,), (2,)]:
            with_axis = germ(list(c.branches),
                             labels=list(c.labels) + [ax], axis=True)
            assert annulus_element(with_axis) == \
                meridian_apply(transpose(ax), annulus_element(c)), (c, ax)
    # one framing twist per blowup when every branch is tangent to E
    reframed = 0
    for c in SAMPLE:
        try:
            bl = blowup(c)
        except InputError:
            continue
        if not bl.all_alpha_gt_1:
            continue
        proper = bl.points[-1].germ_b()
        assert annulus_element(c) == frame(annulus_element(proper), 1), c
        reframed += 1
    assert reframed >= 5
    # framing pushes through the two-component splice
    parts2 = parts_up_to(2)
    for m in range(1, 4):
        for n in range(m, 8):
            if gcd(m, n) != 1:
                continue
            for lam in parts2:
                for mu in parts2:
                    x, y = el_basis(lam), el_basis(mu)
                    lhs = splice_satellite(m, n, x, frame(y, 1))
                    if n == m:
                        rhs = frame(skein_mul(x, y), 1)
                    else:
                        rhs = frame(splice_satellite(m, n - m, x, y), 1)
                    assert lhs == rhs, (m, n, lam, mu)
    # meridian pairing symmetry and multiplicativity of its eigenvalues
    parts3 = parts_up_to(3)
    for lam in parts3:
        for mu in parts3:
            assert t_eigen(lam, mu) * basis_trace(mu) == \
                t_eigen(mu, lam) * basis_trace(lam), (lam, mu)
    for mu in parts3:
        for lam in parts3:
            for nu in parts3:
                got = t_eigen(lam, mu) * t_eigen(nu, mu)
                want = SkeinScalar.zero()
                for g, c in lr_expand(lam, nu).items():
                    want = want + t_eigen(g, mu) * c
                assert got == want, (mu, lam, nu)
    assert time.perf_counter() - started < budget


def test_08_oracle_equivalence(budget=60.0):
    started = time.perf_counter()
    for a in range(7):
        for b in range(7 - a):
            for lam in partitions_of(a):
                for nu in partitions_of(b):
                    assert lr_expand(lam, nu) == \
                        product_in_schur(lam, nu), (lam, nu)
    for m in range(1, 7):
        for size in range(6 // m + 1):
            for lam in partitions_of(size):
                assert plethysm_power(lam, m) == \
                    power_plethysm_in_schur(lam, m), (lam, m)
    for p, q in [(2, 3), (2, 5), (3, 4)]:
        for n in range(9):
            got = sorted(sorted(mod.gaps)
                         for mod in enumerate_modules(p, q, n))
            want = sorted(sorted(g) for g in modules_by_search(p, q, n))
            assert got == want, (p, q, n)
    assert time.perf_counter() - started < budget


def test_09_lowest_degree_calculus(budget=30.0):
    started = time.perf_counter()
    # predicted bottom profile against the computed element
    for c in SAMPLE:
        prof = lowest_profile(c)
        el = annulus_element(c)
        assert prof.gamma in el
        assert all(dominance_leq(prof.gamma, k) for k in el), c
        bottom = el[prof.gamma]
        assert bottom.valuation() == prof.b, c
        assert bottom.leading_v_poly() == {prof.a: prof.sign}, c
        assert all(x.valuation() >= prof.b for x in el.values()), c
    # sign and order of the decorated meridian pairing at the bottom
    parts3 = parts_up_to(3)
    for lam in parts3:
        for mu in parts3:
            _, low = trace_low_meridian(mu, el_basis(lam))
            want = (-2 * dot(transpose(lam), transpose(mu))
                    + hook_sum(lam) + kappa(lam) // 2
                    + hook_sum(mu) + kappa(mu) // 2)
            assert low.valuation() == want, (lam, mu)
            assert low.leading_v_poly() == \
                {0: (-1) ** (sum(lam) + sum(mu))}, (lam, mu)
    # the bottom slice of the trace never cancels on the sample
    for c in SAMPLE:
        _, low = trace_low(annulus_element(c))
        assert not low.is_zero(), c
    assert time.perf_counter() - started < budget
