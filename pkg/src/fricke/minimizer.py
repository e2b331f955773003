"""Length minima of the filling curves ``a^2 b^n`` (``n >= 3``).

On the locus where the axes of ``Y = rho(b)`` and ``Z = X Y^(n/2)`` meet at
a right angle the length of ``a^2 b^n`` reduces to a function of ``L_b``:

    sinh(L/4) = cosh(L_boundary/4) cosh(n L_b/4) / sinh(L_b/2)

Its unique critical point ``L_b*`` solves
``(n/2) tanh(n L_b/4) tanh(L_b/2) = 1``, which does not involve the neck
length, and the minimum value satisfies

    sinh(L_min/4) = (n/2) cosh(L_boundary/4) sinh(n L_b*/4) / cosh(L_b*/2).

As ``n`` grows, ``n L_b*/4`` tends to the positive root ``t*`` of
``t tanh t = 1``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .errors import DomainError, InconsistencyError, RangeError
from .geometry import length_from_trace, validate_point
from .matrices import EXP_LIMIT, mat_mul, mat_pow, mat_trace, symmetric_holonomy
from .numerics import (
    acosh_exp,
    asinh_exp,
    log_cosh_from_log_sinh,
    logcosh,
    logsinh,
    safeguarded_newton,
)

VARIETY_TOL = 1e-8


def _check_n(n, low=3) -> int:
    if int(n) != n or n < low:
        raise DomainError(f"n must be an integer >= {low}, got {n!r}")
    return int(n)


def _check_boundary(L_boundary) -> float:
    if not (L_boundary >= 0 and math.isfinite(L_boundary)):
        raise DomainError(f"boundary length must be finite and >= 0, got {L_boundary!r}")
    return float(L_boundary)


# --------------------------------------------------------------------------
# t*


@dataclass(frozen=True)
class TStar:
    value: float
    residual: float


def _t_eq(t: float) -> float:
    return t * math.tanh(t) - 1.0


def _t_eq_prime(t: float) -> float:
    s = 1.0 / math.cosh(t)
    return math.tanh(t) + t * s * s


@lru_cache(maxsize=None)
def solve_t_star(tol: float = 1e-15) -> TStar:
    """Positive root of ``t tanh t = 1``."""
    t = safeguarded_newton(_t_eq, _t_eq_prime, 1.0, 1.5, x0=1.2, tol=tol)
    return TStar(t, _t_eq(t))


# --------------------------------------------------------------------------
# the one-variable length function


def length_a2bn(L_b: float, L_boundary: float, n: int) -> float:
    """Length of ``a^2 b^n`` on the symmetric locus as a function of ``L_b``.

    ``n = 2`` is accepted with a warning so the formula can be compared with
    the general trace identities; the minimisation itself needs ``n >= 3``.
    """
    if int(n) != n or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    n = int(n)
    if n == 2:
        warnings.warn("a^2 b^2 is not filling; length_a2bn(n=2) is for cross-checks only", stacklevel=2)
    if not (L_b > 0 and math.isfinite(L_b)):
        raise DomainError(f"L_b must be positive and finite, got {L_b!r}")
    L_boundary = _check_boundary(L_boundary)
    if n * L_b / 4 <= EXP_LIMIT and L_boundary / 4 <= EXP_LIMIT:
        ratio = math.cosh(L_boundary / 4) * math.cosh(n * L_b / 4) / math.sinh(L_b / 2)
        return 4.0 * math.asinh(ratio)
    r = logcosh(L_boundary / 4) + logcosh(n * L_b / 4) - logsinh(L_b / 2)
    return 4.0 * asinh_exp(r)


def length_from_altitude(L_b: float, H_b: float, n: int) -> float:
    """``4 asinh(sinh(H_b) cosh(n L_b/4))``, the same length before eliminating ``H_b``."""
    return 4.0 * math.asinh(math.sinh(H_b) * math.cosh(n * L_b / 4))


def altitude(L_b: float, L_boundary: float) -> float:
    """``H_b`` with ``sinh(H_b) sinh(L_b/2) = cosh(L_boundary/4)``."""
    if L_boundary / 4 <= EXP_LIMIT:
        return math.asinh(math.cosh(L_boundary / 4) / math.sinh(L_b / 2))
    return asinh_exp(logcosh(L_boundary / 4) - logsinh(L_b / 2))


# --------------------------------------------------------------------------
# L_b*


def tanh_equation(L_b: float, n: int) -> float:
    """``(n/2) tanh(n L_b/4) tanh(L_b/2) - 1``."""
    return 0.5 * n * math.tanh(n * L_b / 4) * math.tanh(L_b / 2) - 1.0


def _tanh_equation_prime(L_b: float, n: int) -> float:
    u, v = n * L_b / 4, L_b / 2
    su, sv = 1.0 / math.cosh(u), 1.0 / math.cosh(v)
    return 0.5 * n * (0.25 * n * su * su * math.tanh(v) + 0.5 * math.tanh(u) * sv * sv)


def root_bracket(n: int) -> tuple[float, float]:
    t = solve_t_star().value
    return 0.5 * 4 * t / n, 8.0 / n + 2.0


@lru_cache(maxsize=4096)
def solve_Lb_star(n: int, tol: float = 1e-14) -> float:
    """The unique positive root ``L_b*`` of the tanh equation for this ``n``."""
    n = _check_n(n)
    lo, hi = root_bracket(n)
    if not (tanh_equation(lo, n) < 0 < tanh_equation(hi, n)):
        raise RuntimeError(f"initial bracket [{lo}, {hi}] does not straddle the root for n={n}")
    guess = 4 * solve_t_star().value / n
    return safeguarded_newton(
        lambda L: tanh_equation(L, n),
        lambda L: _tanh_equation_prime(L, n),
        lo,
        hi,
        x0=guess,
        tol=tol,
    )


# --------------------------------------------------------------------------
# the minimum and the minimum point


def min_length_formula(n: int, L_b_star: float, L_boundary: float) -> float:
    """``L_min`` from ``sinh(L/4) = (n/2) cosh(L_bd/4) sinh(n L_b*/4) / cosh(L_b*/2)``."""
    u = n * L_b_star / 4
    if u <= EXP_LIMIT and L_boundary / 4 <= EXP_LIMIT:
        ratio = 0.5 * n * math.cosh(L_boundary / 4) * math.sinh(u) / math.cosh(L_b_star / 2)
        return 4.0 * math.asinh(ratio)
    r = math.log(0.5 * n) + logcosh(L_boundary / 4) + logsinh(u) - logcosh(L_b_star / 2)
    return 4.0 * asinh_exp(r)


def minimum_holonomy(n: int, L_b: float, L_boundary: float):
    """``(Y, Z, X)`` in the symmetric frame with ``H_b`` fixed by the neck length."""
    return symmetric_holonomy(L_b, altitude(L_b, L_boundary), n)


def _log_domain_point(n: int, L_b: float, L_boundary: float):
    log_sinh_h = logcosh(L_boundary / 4) - logsinh(L_b / 2)
    log_cosh_h = log_cosh_from_log_sinh(log_sinh_h)
    lx = log_cosh_h + logcosh(n * L_b / 4)  # log(x/2)
    lz = log_cosh_h + logcosh((n - 2) * L_b / 4)  # log(z/2)
    L_a = 2.0 * acosh_exp(lx)
    L_ab = 2.0 * acosh_exp(lz)
    # normalised character relation with every term scaled by 1/(xyz)
    ly = logcosh(L_b / 2)
    s = lx + ly + lz + 3 * math.log(2.0)
    terms = [math.exp(2 * (lv + math.log(2.0)) - s) for lv in (lx, ly, lz)]
    neg_mu = 0.0
    if L_boundary > 0:
        neg_mu = math.exp(math.log(4.0) + 2 * logsinh(L_boundary / 4) - s)
    residual = abs(math.fsum(terms) - 1.0 + neg_mu)
    return (L_a, L_b, L_ab), residual


def _reconstruct(n: int, L_b: float, L_boundary: float):
    try:
        Y, _, X = minimum_holonomy(n, L_b, L_boundary)
    except RangeError:
        return _log_domain_point(n, L_b, L_boundary)
    x = mat_trace(X)
    z = mat_trace(mat_mul(X, Y))
    triple = (length_from_trace(x), L_b, length_from_trace(z))
    report = validate_point(*triple, L_boundary)
    return triple, report.relative_residual


def reconstruct_point(n: int, L_b_star: float, L_boundary: float) -> tuple[float, float, float]:
    """The minimum point ``(L_a*, L_b*, L_ab*)`` read off the symmetric holonomy."""
    n = _check_n(n)
    L_boundary = _check_boundary(L_boundary)
    triple, residual = _reconstruct(n, L_b_star, L_boundary)
    if not residual <= VARIETY_TOL:
        raise InconsistencyError(f"reconstructed point misses the character relation by {residual:.3g}")
    return triple


def trace_symmetry_residual(n: int, L_b: float, L_boundary: float) -> float:
    """Relative gap between the two traces that must agree at the minimum.

    For ``n = 2m + 1`` these are ``tr(X Y^m)`` and ``tr(X Y^(m+1))``; for
    ``n = 2m`` they are ``tr(X Y^(m-1))`` and ``tr(X Y^(m+1))``.
    """
    Y, _, X = minimum_holonomy(n, L_b, L_boundary)
    m, odd = divmod(n, 2)
    lo, hi = (m, m + 1) if odd else (m - 1, m + 1)
    t1 = mat_trace(mat_mul(X, mat_pow(Y, lo)))
    t2 = mat_trace(mat_mul(X, mat_pow(Y, hi)))
    return abs(t1 - t2) / max(1.0, abs(t1), abs(t2))


@dataclass(frozen=True)
class MinResult:
    n: int
    L_boundary: float
    L_b_star: float
    L_min: float
    point: tuple[float, float, float]
    residual_root: float
    residual_variety: float

    @property
    def L_a_star(self) -> float:
        return self.point[0]

    @property
    def L_ab_star(self) -> float:
        return self.point[2]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["point"] = list(self.point)
        return d


def length_min(n: int, L_boundary: float) -> MinResult:
    """Solve for ``L_b*``, the minimum length and the full minimum point."""
    n = _check_n(n)
    L_boundary = _check_boundary(L_boundary)
    L_b = solve_Lb_star(n)
    triple, residual = _reconstruct(n, L_b, L_boundary)
    return MinResult(
        n=n,
        L_boundary=L_boundary,
        L_b_star=L_b,
        L_min=min_length_formula(n, L_b, L_boundary),
        point=triple,
        residual_root=tanh_equation(L_b, n),
        residual_variety=residual,
    )


# --------------------------------------------------------------------------
# independent brute-force oracle


@dataclass(frozen=True)
class BruteForceResult:
    L_b_hat: float
    L_hat: float
    unimodal: bool


class NonUnimodalWarning(UserWarning):
    pass


def _profile_is_unimodal(values: Sequence[float]) -> bool:
    signs = [(v1 > v0) - (v1 < v0) for v0, v1 in zip(values, values[1:])]
    signs = [s for s in signs if s]
    rising = False
    for s in signs:
        if s > 0:
            rising = True
        elif rising:
            return False
    return True


def brute_force_min(
    n: int,
    L_boundary: float,
    bracket: tuple[float, float] = (1e-6, 64.0),
    tol: float = 1e-10,
    grid_points: int = 1024,
    dps: int = 40,
) -> BruteForceResult:
    """Minimise ``length_a2bn`` over ``L_b`` by scan plus golden-section search.

    A log-spaced grid locates the cell around the smallest sample; golden
    section then narrows that cell to width ``tol``.  The refinement
    evaluates the length at ``dps`` significant digits because in double
    precision the flat bottom of the curve hides the minimiser below about
    ``1e-8``.  The tanh equation is never consulted.
    """
    n = _check_n(n)
    L_boundary = _check_boundary(L_boundary)
    lo, hi = bracket
    step = math.log(hi / lo) / (grid_points - 1)
    grid = [lo * math.exp(i * step) for i in range(grid_points)]
    grid[-1] = hi
    values = [length_a2bn(L, L_boundary, n) for L in grid]
    unimodal = _profile_is_unimodal(values)
    if not unimodal:
        warnings.warn(f"length profile for n={n}, L_boundary={L_boundary} is not unimodal",
                      NonUnimodalWarning, stacklevel=2)
    i = min(range(grid_points), key=values.__getitem__)
    a, b = grid[max(i - 1, 0)], grid[min(i + 1, grid_points - 1)]

    ctx = mpmath.MPContext()
    ctx.dps = dps
    quarter_bd = ctx.mpf(L_boundary) / 4

    def length(L):
        return 4 * ctx.asinh(ctx.cosh(quarter_bd) * ctx.cosh(n * L / 4) / ctx.sinh(L / 2))

    inv_phi = (ctx.sqrt(5) - 1) / 2
    a, b = ctx.mpf(a), ctx.mpf(b)
    c, d = b - inv_phi * (b - a), a + inv_phi * (b - a)
    fc, fd = length(c), length(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = length(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = length(d)
    L_b_hat = (a + b) / 2
    return BruteForceResult(float(L_b_hat), float(length(L_b_hat)), unimodal)


# --------------------------------------------------------------------------
# monotonicity and asymptotics


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    L_boundary: float
    L_b_star: float
    n_L_b_star_over_4: float
    L_min: float
    L_min_over_4ln_n: float
    L_min_minus_boundary: float


@dataclass(frozen=True)
class AsymptoticsReport:
    rows: list[AsymptoticRow]
    L_b_star_decreasing_in_n: bool
    scaled_decreasing_in_n: bool
    L_min_increasing_in_boundary: bool


def _strictly(seq: Sequence[float], increasing: bool) -> bool:
    pairs = zip(seq, seq[1:])
    return all((b > a) if increasing else (b < a) for a, b in pairs)


def asymptotics_report(n_list: Iterable[int], boundary_list: Iterable[float]) -> AsymptoticsReport:
    ns = sorted({_check_n(n) for n in n_list})
    bds = sorted({_check_boundary(b) for b in boundary_list})
    rows = []
    for n in ns:
        L_b = solve_Lb_star(n)
        for bd in bds:
            L_min = min_length_formula(n, L_b, bd)
            rows.append(AsymptoticRow(
                n=n,
                L_boundary=bd,
                L_b_star=L_b,
                n_L_b_star_over_4=n * L_b / 4,
                L_min=L_min,
                L_min_over_4ln_n=L_min / (4 * math.log(n)),
                L_min_minus_boundary=L_min - bd,
            ))
    L_bs = [solve_Lb_star(n) for n in ns]
    scaled = [n * L / 4 for n, L in zip(ns, L_bs)]
    by_n: dict[int, list[float]] = {}
    for row in rows:
        by_n.setdefault(row.n, []).append(row.L_min)
    return AsymptoticsReport(
        rows=rows,
        L_b_star_decreasing_in_n=_strictly(L_bs, increasing=False),
        scaled_decreasing_in_n=_strictly(scaled, increasing=False),
        L_min_increasing_in_boundary=all(_strictly(v, increasing=True) for v in by_n.values()),
    )
