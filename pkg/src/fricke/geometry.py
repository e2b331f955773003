"""Lengths, traces and the Weierstrass triangle of a one-holed torus.

A marked hyperbolic structure with neck length ``L_boundary`` is given by
the lengths ``(L_a, L_b, L_ab)`` of three simple closed geodesics meeting
pairwise once.  Their traces ``x, y, z`` are ``2 cosh(L/2)`` and satisfy the
character relation ``x^2 + y^2 + z^2 - xyz = mu`` with
``mu = 2 - 2 cosh(L_boundary/2)``.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, TextIO

from .errors import DomainError, InconsistencyError
from .matrices import Mat2

ACCEPT_TOL = 1e-9
CLAMP_SLACK = 1e-12

POINT_CSV_HEADER = ("L_a", "L_b", "L_ab", "L_boundary")


def trace_from_length(L: float) -> float:
    return 2.0 * math.cosh(L / 2.0)


def length_from_trace(t: float) -> float:
    """``2 arccosh(t/2)``, accurate both near ``t = 2`` and for huge ``t``."""
    if not t > 2.0:
        raise DomainError(f"trace {t!r} must exceed 2")
    if t < 4.0:
        u = (t - 2.0) / 2.0
        return 2.0 * math.log1p(u + math.sqrt(u * (u + 2.0)))
    return 2.0 * (math.log(t) - math.log(2.0) + math.log1p(math.sqrt(1.0 - 4.0 / (t * t))))


def traces_from_lengths(L_a: float, L_b: float, L_ab: float) -> tuple[float, float, float]:
    for L in (L_a, L_b, L_ab):
        if not (L > 0 and math.isfinite(L)):
            raise DomainError(f"lengths must be positive and finite, got {L!r}")
    return trace_from_length(L_a), trace_from_length(L_b), trace_from_length(L_ab)


def lengths_from_traces(x: float, y: float, z: float) -> tuple[float, float, float]:
    return length_from_trace(x), length_from_trace(y), length_from_trace(z)


def mu_from_boundary(L_boundary: float) -> float:
    """``2 - 2 cosh(L/2)``, written as ``-4 sinh^2(L/4)`` to keep small ``L`` exact."""
    if not L_boundary >= 0:
        raise DomainError(f"boundary length must be nonnegative, got {L_boundary!r}")
    s = math.sinh(L_boundary / 4.0)
    return -4.0 * s * s


def boundary_from_mu(mu: float) -> float:
    """Inverse of ``mu_from_boundary``; ``mu > 0`` admits no complete structure."""
    if not mu <= 0:
        raise DomainError(f"mu={mu!r} > 0 does not come from a complete structure")
    return 4.0 * math.asinh(math.sqrt(-mu) / 2.0)


def relation_residual(x: float, y: float, z: float, mu: float) -> float:
    """``|x^2 + y^2 + z^2 - xyz - mu| / max(1, |xyz|)``, without overflowing.

    When ``|xyz| > 1`` every term is divided by ``xyz`` before summing.
    """
    xyz = x * y * z
    if math.isfinite(xyz) and abs(xyz) <= 1.0:
        return abs(x * x + y * y + z * z - xyz - mu)
    r = x / y / z + y / x / z + z / x / y - 1.0 - mu / x / y / z
    return abs(r)


@dataclass(frozen=True)
class FiberPoint:
    """A point of the relative Teichmueller space with neck length ``L_boundary``."""

    L_a: float
    L_b: float
    L_ab: float
    L_boundary: float = 0.0

    @classmethod
    def from_traces(cls, x: float, y: float, z: float, L_boundary: float = 0.0) -> FiberPoint:
        return cls(*lengths_from_traces(x, y, z), L_boundary)

    @property
    def traces(self) -> tuple[float, float, float]:
        return traces_from_lengths(self.L_a, self.L_b, self.L_ab)

    @property
    def mu(self) -> float:
        return mu_from_boundary(self.L_boundary)

    def validate(self) -> PointReport:
        return validate_point(self.L_a, self.L_b, self.L_ab, self.L_boundary)


@dataclass(frozen=True)
class PointReport:
    x: float
    y: float
    z: float
    mu: float
    residual: float
    relative_residual: float
    triangle_slack: float
    accepted: bool


def validate_point(L_a: float, L_b: float, L_ab: float, L_boundary: float) -> PointReport:
    """Audit a length triple against the character relation; never raises.

    The point is accepted when the relation residual is at most
    ``1e-9 * max(1, |xyz|)``.  ``triangle_slack`` is the smallest margin in
    the triangle inequalities for sides ``L_a/2, L_b/2, L_ab/2``.
    """
    nan = float("nan")
    try:
        x, y, z = traces_from_lengths(L_a, L_b, L_ab)
        mu = mu_from_boundary(L_boundary)
    except (DomainError, OverflowError):
        return PointReport(nan, nan, nan, nan, nan, nan, nan, False)
    rel = relation_residual(x, y, z, mu)
    scale = max(1.0, abs(x * y * z))
    a, b, c = L_a / 2, L_b / 2, L_ab / 2
    slack = min(a + b - c, b + c - a, c + a - b)
    return PointReport(x, y, z, mu, rel * scale, rel, slack, rel <= ACCEPT_TOL)


@dataclass(frozen=True)
class WeierstrassTriangle:
    """Angle between the ``a`` and ``b`` sides and the altitude onto the ``b`` side."""

    theta: float
    H_b: float
    L_a: float
    L_b: float
    L_ab: float
    L_boundary: float

    def area_form_residual(self) -> float:
        """Relative defect of ``sinh(L_a/2) sinh(L_b/2) sin(theta) = cosh(L_boundary/4)``."""
        lhs = math.sinh(self.L_a / 2) * math.sinh(self.L_b / 2) * math.sin(self.theta)
        rhs = math.cosh(self.L_boundary / 4)
        return abs(lhs - rhs) / rhs

    def altitude_form_residual(self) -> float:
        """Relative defect of ``sinh(H_b) sinh(L_b/2) = cosh(L_boundary/4)``."""
        lhs = math.sinh(self.H_b) * math.sinh(self.L_b / 2)
        rhs = math.cosh(self.L_boundary / 4)
        return abs(lhs - rhs) / rhs


def weierstrass(L_a: float, L_b: float, L_ab: float, L_boundary: float) -> WeierstrassTriangle:
    """Solve the triangle with sides ``L_a/2, L_b/2, L_ab/2``.

    ``cos(theta)`` comes from the hyperbolic law of cosines.  ``sin(theta)``
    is computed from the factored form
    ``(cosh c - cosh(a-b)) (cosh(a+b) - cosh c)`` so that thin triangles
    keep full relative accuracy; ``H_b = asinh(sinh(L_a/2) sin(theta))``.
    """
    a, b, c = L_a / 2, L_b / 2, L_ab / 2
    sa, sb = math.sinh(a), math.sinh(b)
    cos_t = (math.cosh(a) * math.cosh(b) - math.cosh(c)) / (sa * sb)
    if abs(cos_t) > 1.0 + CLAMP_SLACK:
        raise InconsistencyError(f"law of cosines gives cos(theta)={cos_t!r}")
    cos_t = max(-1.0, min(1.0, cos_t))
    lower = 2.0 * math.sinh((c + a - b) / 2) * math.sinh((c - a + b) / 2)
    upper = 2.0 * math.sinh((a + b + c) / 2) * math.sinh((a + b - c) / 2)
    prod = lower * upper
    if prod < 0:
        if -prod > (CLAMP_SLACK * sa * sb) ** 2:
            raise InconsistencyError("triangle inequality violated beyond roundoff")
        prod = 0.0
    sin_t = math.sqrt(prod) / (sa * sb)
    theta = math.atan2(sin_t, cos_t)
    H_b = math.asinh(sa * sin_t)
    return WeierstrassTriangle(theta, H_b, L_a, L_b, L_ab, L_boundary)


def axis_endpoints(M: Mat2) -> tuple[float, float]:
    """Endpoints of the axis of hyperbolic ``M`` as angles in ``[0, pi)``.

    A boundary point of the upper half plane is a line through the origin
    in ``R^2``; the endpoints are the two eigenlines of ``M``, recorded by
    the angle of a direction vector.  Infinity needs no special case.
    """
    t = M.a11 + M.a22
    if abs(t) <= 2:
        raise DomainError(f"matrix with trace {t!r} is not hyperbolic")
    root = math.sqrt((t - 2.0) * (t + 2.0))
    angles = []
    for lam in ((t + root) / 2, (t - root) / 2):
        v1 = (M.a12, lam - M.a11)
        v2 = (lam - M.a22, M.a21)
        u = v1 if math.hypot(*v1) >= math.hypot(*v2) else v2
        angles.append(math.atan2(u[1], u[0]) % math.pi)
    return angles[0], angles[1]


def axes_cross(X: Mat2, Y: Mat2) -> bool:
    """Whether the axes of two hyperbolic matrices intersect in the upper half plane."""
    p1, p2 = axis_endpoints(X)
    q1, q2 = axis_endpoints(Y)
    lo, hi = min(p1, p2), max(p1, p2)
    return (lo < q1 < hi) != (lo < q2 < hi)


def read_points_csv(stream: TextIO) -> list[FiberPoint]:
    """Read ``L_a,L_b,L_ab,L_boundary`` rows into ``FiberPoint`` values."""
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or tuple(h.strip() for h in header) != POINT_CSV_HEADER:
        raise ValueError(f"expected header {','.join(POINT_CSV_HEADER)}, got {header!r}")
    points = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 4:
            raise ValueError(f"line {lineno}: expected 4 fields, got {len(row)}")
        points.append(FiberPoint(*(float(cell) for cell in row)))
    return points


def write_points_csv(stream: TextIO, points: Iterable[FiberPoint]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(POINT_CSV_HEADER)
    for p in points:
        writer.writerow([repr(p.L_a), repr(p.L_b), repr(p.L_ab), repr(p.L_boundary)])
