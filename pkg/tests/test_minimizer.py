import math
import random

import mpmath

import pytest
from hypothesis import given, settings, strategies as st

from fricke.errors import DomainError
from fricke.matrices import numeric_trace, symmetric_holonomy
from fricke.minimizer import (
    altitude,
    asymptotics_report,
    brute_force_min,
    length_a2bn,
    length_from_altitude,
    length_min,
    min_length_formula,
    reconstruct_point,
    root_bracket,
    solve_Lb_star,
    solve_t_star,
    tanh_equation,
    trace_symmetry_residual,
)
from fricke.words import word

T_STAR = 1.199678640257733833916


def test_t_star():
    t = solve_t_star()
    assert abs(t.value - T_STAR) <= 1e-12
    assert abs(t.residual) <= 1e-14
    assert abs(t.value * math.tanh(t.value) - 1) <= 1e-14


def test_n3_bracket_and_root():
    f = lambda L: 1.5 * math.tanh(0.75 * L) * math.tanh(L / 2) - 1
    assert f(1.9) < 0 < f(2.0)
    L = solve_Lb_star(3)
    assert 1.9 < L < 2.0
    assert abs(tanh_equation(L, 3)) <= 1e-12


@pytest.mark.parametrize("n", [3, 4, 5, 9, 50, 1000, 10**5, 10**7])
def test_bracket_straddles(n):
    lo, hi = root_bracket(n)
    assert tanh_equation(lo, n) < 0 < tanh_equation(hi, n)
    assert abs(tanh_equation(solve_Lb_star(n), n)) <= 1e-12


@pytest.mark.parametrize("bad", [2, 1, 0, -3, 3.5])
def test_solver_rejects_small_n(bad):
    with pytest.raises(DomainError):
        solve_Lb_star(bad)
    with pytest.raises(DomainError):
        length_min(bad, 0.0)


def test_large_n_limit():
    n = 10**4
    assert abs(n * solve_Lb_star(n) / 4 - T_STAR) <= 1e-5


def test_length_formulas_agree():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(3, 12)
        L_b = rng.uniform(0.1, 3.0)
        bd = rng.uniform(0.0, 10.0)
        H_b = altitude(L_b, bd)
        assert length_a2bn(L_b, bd, n) == pytest.approx(length_from_altitude(L_b, H_b, n), rel=1e-12)
        Y, _, X = symmetric_holonomy(L_b, H_b, n)
        t = numeric_trace(word((0, 2), (1, n)), X, Y)
        assert length_a2bn(L_b, bd, n) == pytest.approx(2 * math.acosh(t / 2), rel=1e-9)


def test_length_n2_warns():
    with pytest.warns(UserWarning):
        L = length_a2bn(1.0, 0.0, 2)
    assert math.isfinite(L)
    with pytest.raises(DomainError):
        length_a2bn(1.0, 0.0, 1)
    with pytest.raises(DomainError):
        length_a2bn(0.0, 0.0, 3)


def test_length_diverges_at_both_ends():
    for n in (3, 10):
        mid = length_a2bn(solve_Lb_star(n), 0.0, n)
        assert length_a2bn(1e-8, 0.0, n) > mid + 50
        assert length_a2bn(500.0, 0.0, n) > mid + 50


@pytest.mark.parametrize("L_b", [1.19999, 1.2, 1.20001, 3.0])
@pytest.mark.parametrize("bd", [0.0, 1199.0, 1201.0])
def test_both_branches_match_high_precision(L_b, bd):
    # n L_b / 4 and L_bd / 4 straddle the switch at 300
    n = 1000
    ctx = mpmath.MPContext()
    ctx.dps = 50
    L, B = ctx.mpf(L_b), ctx.mpf(bd)
    exact = 4 * ctx.asinh(ctx.cosh(B / 4) * ctx.cosh(n * L / 4) / ctx.sinh(L / 2))
    assert length_a2bn(L_b, bd, n) == pytest.approx(float(exact), rel=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 300), st.floats(0.0, 50.0))
def test_min_formula_equals_length_at_root(n, bd):
    L_b = solve_Lb_star(n)
    assert min_length_formula(n, L_b, bd) == pytest.approx(length_a2bn(L_b, bd, n), rel=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 200).map(int), st.floats(0.0, 30.0))
def test_root_is_a_minimum(n, bd):
    L_b = solve_Lb_star(n)
    L = length_a2bn(L_b, bd, n)
    for f in (0.9, 0.99, 1.01, 1.1):
        assert length_a2bn(L_b * f, bd, n) > L


def test_min_result_contract():
    r0 = length_min(3, 0.0)
    r1 = length_min(3, 7.5)
    assert abs(r0.L_b_star - r1.L_b_star) <= 1e-12
    for r in (r0, r1):
        assert abs(r.residual_root) <= 1e-12
        assert r.residual_variety <= 1e-8
        assert r.point[1] == r.L_b_star
        assert r.L_a_star == r.point[0] and r.L_ab_star == r.point[2]
    d = r0.to_dict()
    assert set(d) == {"n", "L_boundary", "L_b_star", "L_min", "point",
                      "residual_root", "residual_variety"}
    assert reconstruct_point(3, r0.L_b_star, 0.0) == r0.point


@pytest.mark.parametrize("n", [3, 4, 7, 8, 21, 64])
@pytest.mark.parametrize("bd", [0.0, 2.0, 15.0])
def test_trace_symmetry(n, bd):
    assert trace_symmetry_residual(n, solve_Lb_star(n), bd) <= 1e-9


def test_huge_inputs_use_log_domain():
    r = length_min(10**6, 0.0)
    assert 1.0 <= r.L_min / (4 * math.log(10**6)) <= 1.05
    big = length_min(3, 1000.0)
    assert math.isfinite(big.L_min) and big.residual_variety <= 1e-8
    a, b = length_min(3, 400.0), length_min(3, 800.0)
    assert abs((a.L_min - 400) - (b.L_min - 800)) <= 1e-6


@pytest.mark.parametrize("n,bd", [(3, 0.0), (50, 20.0), (7, 3.0)])
def test_brute_force_oracle(n, bd):
    b = brute_force_min(n, bd)
    r = length_min(n, bd)
    assert b.unimodal
    assert abs(b.L_b_hat - r.L_b_star) <= 1e-7
    assert abs(b.L_hat - r.L_min) <= 1e-7


def test_asymptotics_report():
    rep = asymptotics_report(range(3, 201), [0.0, 1.0, 5.0])
    assert rep.L_b_star_decreasing_in_n
    assert rep.scaled_decreasing_in_n
    assert rep.L_min_increasing_in_boundary
    assert len(rep.rows) == 198 * 3
    row = rep.rows[0]
    assert row.n == 3 and row.L_boundary == 0.0
    assert row.L_min_minus_boundary == row.L_min
    assert row.n_L_b_star_over_4 == pytest.approx(3 * row.L_b_star / 4)
    rep = asymptotics_report([3], [100 * k / 49 for k in range(50)])
    assert rep.L_min_increasing_in_boundary
