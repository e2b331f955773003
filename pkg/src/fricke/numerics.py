"""Overflow-free hyperbolic helpers and a safeguarded Newton solver."""

from __future__ import annotations

import math
from typing import Callable

LOG2 = math.log(2.0)


def logcosh(u: float) -> float:
    """``log(cosh(u))`` for any finite ``u``."""
    u = abs(u)
    return u + math.log1p(math.exp(-2.0 * u)) - LOG2


def logsinh(u: float) -> float:
    """``log(sinh(u))`` for ``u > 0``, accurate for tiny and huge ``u``."""
    if not u > 0:
        raise ValueError(f"logsinh needs u > 0, got {u!r}")
    return u + math.log(-math.expm1(-2.0 * u)) - LOG2


def asinh_exp(r: float) -> float:
    """``asinh(exp(r))`` without forming ``exp(r)`` for large ``r``."""
    if r > 0:
        return r + math.log1p(math.sqrt(1.0 + math.exp(-2.0 * r)))
    return math.asinh(math.exp(r))


def acosh_exp(r: float) -> float:
    """``acosh(exp(r))`` for ``r >= 0`` without forming ``exp(r)``."""
    if r < 0:
        raise ValueError(f"acosh_exp needs r >= 0, got {r!r}")
    return r + math.log1p(math.sqrt(-math.expm1(-2.0 * r)))


def log_sinh_from_log_cosh(lc: float) -> float:
    """``log(sinh(u))`` given ``log(cosh(u))`` for ``u > 0``."""
    # sinh^2 = cosh^2 - 1
    return lc + 0.5 * math.log(-math.expm1(-2.0 * lc))


def log_cosh_from_log_sinh(ls: float) -> float:
    """``log(cosh(u))`` given ``log(sinh(u))``."""
    if ls > 0:
        return ls + 0.5 * math.log1p(math.exp(-2.0 * ls))
    return 0.5 * math.log1p(math.exp(2.0 * ls))


class RootNotBracketed(ValueError):
    pass


def safeguarded_newton(
    f: Callable[[float], float],
    df: Callable[[float], float],
    lo: float,
    hi: float,
    x0: float | None = None,
    tol: float = 1e-14,
    maxiter: int = 200,
) -> float:
    """Root of ``f`` in ``[lo, hi]`` by Newton steps that fall back to bisection.

    ``f(lo)`` and ``f(hi)`` must differ in sign.  A Newton step is accepted
    only if it lands strictly inside the current bracket; otherwise the
    bracket is bisected.  Iteration stops once ``|f(x)| <= tol`` or the
    bracket shrinks to adjacent floats.  The iterate with the smallest
    residual seen is returned.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo < 0) == (fhi < 0):
        raise RootNotBracketed(f"f({lo!r})={flo!r} and f({hi!r})={fhi!r} share a sign")
    increasing = flo < 0
    x = 0.5 * (lo + hi) if x0 is None or not lo < x0 < hi else x0
    best_x, best_r = x, math.inf
    for _ in range(maxiter):
        fx = f(x)
        if abs(fx) < best_r:
            best_x, best_r = x, abs(fx)
        if abs(fx) <= tol:
            break
        if (fx < 0) == increasing:
            lo = x
        else:
            hi = x
        if math.nextafter(lo, hi) >= hi:
            break
        d = df(x)
        step_ok = False
        if d != 0 and math.isfinite(d):
            xn = x - fx / d
            step_ok = lo < xn < hi
        x = xn if step_ok else 0.5 * (lo + hi)
    return best_x
