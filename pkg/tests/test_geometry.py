import io
import math
import random

import pytest
from hypothesis import given, strategies as st

from fricke.errors import DomainError, InconsistencyError
from fricke.geometry import (
    FiberPoint,
    axes_cross,
    axis_endpoints,
    boundary_from_mu,
    length_from_trace,
    lengths_from_traces,
    mu_from_boundary,
    read_points_csv,
    relation_residual,
    trace_from_length,
    traces_from_lengths,
    validate_point,
    weierstrass,
    write_points_csv,
)
from fricke.matrices import Mat2, holonomy_from_traces, symmetric_holonomy
from fricke.sampling import random_fiber_point

L3 = 2 * math.acosh(1.5)
L6 = 2 * math.acosh(3.0)


def test_dictionary_examples():
    assert traces_from_lengths(L3, L3, L3) == pytest.approx((3, 3, 3), rel=1e-15)
    assert traces_from_lengths(L3, L3, L6) == pytest.approx((3, 3, 6), rel=1e-15)
    with pytest.raises(DomainError):
        traces_from_lengths(0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        length_from_trace(2.0)


@given(st.floats(0.01, 600))
def test_length_round_trip(L):
    # the trace itself loses about eps / L^2 of relative information near L = 0
    assert length_from_trace(trace_from_length(L)) == pytest.approx(L, rel=1e-10)


def test_length_accuracy_near_two():
    d = 2.0**-40  # 2 + d is exact in binary
    expected = 2 * math.sqrt(d) * (1 - d / 24)
    assert length_from_trace(2 + d) == pytest.approx(expected, rel=1e-13)
    assert length_from_trace(1e300) == pytest.approx(2 * math.log(1e300), rel=1e-12)


def test_mu_examples():
    assert mu_from_boundary(0) == 0
    L = 2 * math.acosh(2)
    assert mu_from_boundary(L) == pytest.approx(-2, rel=1e-14)
    assert boundary_from_mu(0) == 0
    assert boundary_from_mu(-2) == pytest.approx(L, rel=1e-14)
    assert lengths_from_traces(3, 3, 6) == pytest.approx((L3, L3, L6))
    with pytest.raises(DomainError):
        boundary_from_mu(0.5)
    with pytest.raises(DomainError):
        mu_from_boundary(-1)


@given(st.floats(0, 200))
def test_mu_round_trip(L):
    assert boundary_from_mu(mu_from_boundary(L)) == pytest.approx(L, rel=1e-12, abs=1e-12)


def test_validate_examples():
    r = validate_point(L3, L3, L6, 0.0)
    assert r.accepted and r.residual == pytest.approx(0, abs=1e-12)
    assert validate_point(L3, L3, L3, 0.0).accepted
    bad = validate_point(L3, L3, L6, 2.0)
    assert not bad.accepted
    assert bad.residual == pytest.approx(abs(2 - 2 * math.cosh(1.0)), rel=1e-9)
    broken = validate_point(-1.0, 1.0, 1.0, 0.0)
    assert not broken.accepted and math.isnan(broken.x)


def test_relation_residual_no_overflow():
    big = 1e200
    assert math.isfinite(relation_residual(big, big, big, 0.0))


def test_weierstrass_examples():
    tri = weierstrass(L3, L3, L3, 0.0)
    assert math.cos(tri.theta) == pytest.approx(3 / 5, rel=1e-14)
    # majority case (3,3,6): sinh sinh sin theta = 1
    tri = weierstrass(L3, L3, L6, 0.0)
    lhs = math.sinh(L3 / 2) ** 2 * math.sin(tri.theta)
    assert lhs == pytest.approx(1.0, rel=1e-12)
    assert tri.area_form_residual() <= 1e-12
    assert tri.altitude_form_residual() <= 1e-12


def test_weierstrass_rejects_impossible_triangle():
    with pytest.raises(InconsistencyError):
        weierstrass(1.0, 1.0, 5.0, 0.0)


def test_sampled_points_satisfy_identities():
    rng = random.Random(3)
    for _ in range(2000):
        p, H_b = random_fiber_point(rng)
        rep = p.validate()
        assert rep.accepted and rep.triangle_slack > 0
        tri = weierstrass(p.L_a, p.L_b, p.L_ab, p.L_boundary)
        assert tri.area_form_residual() <= 1e-10
        assert tri.altitude_form_residual() <= 1e-10
        assert tri.H_b == pytest.approx(H_b, rel=1e-9)
        assert 0 < tri.theta < math.pi


def test_fiber_point():
    p = FiberPoint.from_traces(3, 3, 6)
    assert p.traces == pytest.approx((3, 3, 6))
    assert p.mu == 0
    assert p.validate().accepted


def test_axes_cross():
    Y, _, X = symmetric_holonomy(1.0, 0.8, 3)
    assert axes_cross(X, Y) and axes_cross(Y, X)
    D = Mat2(2.0, 0.0, 0.0, 0.5)
    E = Mat2(2.0, 3.0, 0.0, 0.5)   # shares the fixed point infinity, axes disjoint
    assert not axes_cross(D, E)
    F = Mat2(math.cosh(1), math.sinh(1), math.sinh(1), math.cosh(1))  # axis from -1 to 1
    assert axes_cross(D, F)
    assert sorted(axis_endpoints(D)) == pytest.approx([0.0, math.pi / 2])
    with pytest.raises(DomainError):
        axis_endpoints(Mat2(1, 1, 0, 1))


def test_commutator_nonpositive_on_geometric_pairs():
    rng = random.Random(8)
    from fricke.family import character_mu
    from fricke.matrices import numeric_trace
    from fricke.words import parse_word
    checked = 0
    while checked < 300:
        t = tuple(rng.uniform(2.01, 8) for _ in range(3))
        if character_mu(*t) > 0:
            continue
        X, Y = holonomy_from_traces(*t)
        assert axes_cross(X, Y)
        assert numeric_trace(parse_word("abAB"), X, Y) <= -2 + 1e-9
        checked += 1


def test_points_csv_round_trip():
    pts = [FiberPoint(L3, L3, L6, 0.0), FiberPoint(1.5, 2.0, 2.5, 0.25)]
    buf = io.StringIO()
    write_points_csv(buf, pts)
    buf.seek(0)
    assert read_points_csv(buf) == pts
    with pytest.raises(ValueError):
        read_points_csv(io.StringIO("a,b\n1,2\n"))
    with pytest.raises(ValueError):
        read_points_csv(io.StringIO("L_a,L_b,L_ab,L_boundary\n1,2,3\n"))
    blank = read_points_csv(io.StringIO("L_a,L_b,L_ab,L_boundary\n\n1,2,2,0\n"))
    assert blank == [FiberPoint(1.0, 2.0, 2.0, 0.0)]
