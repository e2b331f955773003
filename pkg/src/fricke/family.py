"""Trace machinery for the curves ``a^2 b^n``.

Notation: ``x = tr X``, ``y = tr Y``, ``z = tr XY`` and
``mu = x^2 + y^2 + z^2 - xyz`` (so ``mu - 2`` is the commutator trace).
The sequence ``x_m = tr(X Y^m)`` obeys ``x_(m+1) = y x_m - x_(m-1)``.
``P_n`` is minus the trace of ``X Y^m X^-1 Y^-m`` (``n = 2m``) or of
``X Y^m X^-1 Y^-(m+1)`` (``n = 2m + 1``), and ``P_n - P_(n mod 2)`` factors
as ``(4 - mu) q_n(y - 2)`` with ``q_n`` an integer polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .polynomial import Polynomial

# recursion seeds for q_n, ascending coefficients in t; tests perturb these
Q2_SEED: tuple[int, ...] = (1,)
Q3_SEED: tuple[int, ...] = (2, 1)

Y_MU_VARS = ("y", "mu")


@dataclass(frozen=True)
class XmSequence:
    """``x_m = tr(X Y^m)`` for ``m_min <= m <= m_max``."""

    x: float
    y: float
    z: float
    m_min: int
    values: tuple[float, ...]

    @property
    def m_max(self) -> int:
        return self.m_min + len(self.values) - 1

    def __getitem__(self, m: int) -> float:
        if not self.m_min <= m <= self.m_max:
            raise IndexError(f"x_{m} outside computed range [{self.m_min}, {self.m_max}]")
        return self.values[m - self.m_min]

    def as_dict(self) -> dict[int, float]:
        return {self.m_min + i: v for i, v in enumerate(self.values)}


def xm_sequence(x: float, y: float, z: float, m_min: int, m_max: int) -> XmSequence:
    if not m_min <= 0 < 1 <= m_max:
        raise ValueError(f"range [{m_min}, {m_max}] must contain 0 and 1")
    forward = [x, z]
    for _ in range(m_max - 1):
        forward.append(y * forward[-1] - forward[-2])
    backward = []
    nxt, cur = z, x
    for _ in range(-m_min):
        nxt, cur = cur, y * cur - nxt
        backward.append(cur)
    values = tuple(reversed(backward)) + tuple(forward)
    return XmSequence(x, y, z, m_min, values)


def _check_n(n: int, low: int) -> int:
    if int(n) != n or n < low:
        raise DomainError(f"n must be an integer >= {low}, got {n!r}")
    return int(n)


def p_n(n: int, y: float, mu: float) -> float:
    """``P_n`` evaluated from its recursion in ``y`` and ``mu``."""
    n = _check_n(n, 0)
    prev2, prev1 = -2.0, -y
    if n == 0:
        return prev2
    for k in range(2, n + 1):
        step = y * prev1 - prev2
        if k % 2 == 0:
            step += y * y - mu
        prev2, prev1 = prev1, step
    return prev1


def p_n_poly(n: int) -> Polynomial:
    """``P_n`` as an exact polynomial in ``(y, mu)``."""
    n = _check_n(n, 0)
    y = Polynomial.variable("y", Y_MU_VARS)
    mu = Polynomial.variable("mu", Y_MU_VARS)
    prev2, prev1 = Polynomial.constant(-2, Y_MU_VARS), -y
    if n == 0:
        return prev2
    for k in range(2, n + 1):
        step = y * prev1 - prev2
        if k % 2 == 0:
            step = step + y**2 - mu
        prev2, prev1 = prev1, step
    return prev1


@dataclass(frozen=True)
class QPolynomial:
    """``q_n(t)`` with integer coefficients in ascending degree."""

    n: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t: float) -> float:
        return q_horner(self.coefficients, t)

    def to_polynomial(self, shift: Polynomial) -> Polynomial:
        """``q_n(shift)`` for a polynomial argument, by Horner's rule."""
        acc = Polynomial.constant(0, shift.variables)
        for c in reversed(self.coefficients):
            acc = acc * shift + c
        return acc


def q_horner(coefficients, t: float) -> float:
    acc = 0.0
    for c in reversed(coefficients):
        acc = acc * t + c
    return acc


def _times_t_plus_2(c: list[int]) -> list[int]:
    out = [0] * (len(c) + 1)
    for i, v in enumerate(c):
        out[i] += 2 * v
        out[i + 1] += v
    return out


def _sub(p: list[int], q: list[int]) -> list[int]:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, v in enumerate(q):
        out[i] -= v
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def q_n(n: int) -> QPolynomial:
    """Build ``q_n`` from the seeds ``q_2 = 1``, ``q_3 = t + 2``.

    >>> q_n(5).coefficients
    (6, 11, 6, 1)
    """
    n = _check_n(n, 2)
    prev2, prev1 = list(Q2_SEED), list(Q3_SEED)
    if n == 2:
        return QPolynomial(2, tuple(prev2))
    for k in range(4, n + 1):
        step = _sub(_times_t_plus_2(prev1), prev2)
        if k % 2 == 0:
            step[0] += 1
        prev2, prev1 = prev1, step
    q = QPolynomial(n, tuple(prev1))
    assert q.degree == n - 2, f"q_{n} has degree {q.degree}"
    return q


def q_eval(n: int, t: float) -> float:
    return q_n(n)(t)


def character_mu(x: float, y: float, z: float) -> float:
    return x * x + y * y + z * z - x * y * z


def trace_a2bn_closed(n: int, x: float, y: float, z: float) -> float:
    """``tr(X^2 Y^n)`` from the parity-split closed forms in ``x_m`` and ``q_n``."""
    n = _check_n(n, 2)
    if not y > 2.0 + 1e-8:
        raise DomainError(f"y={y!r} too close to 2 for the closed form (need y > 2 + 1e-8)")
    mu = character_mu(x, y, z)
    m, odd = divmod(n, 2)
    xs = xm_sequence(x, y, z, 0, m + 1)
    t = y - 2.0
    q = q_n(n)(t)
    if odd:
        d = xs[m] - xs[m + 1]
        return d * d / t + 2.0 + (4.0 - mu) * (1.0 / t + q)
    d = xs[m - 1] - xs[m + 1]
    y2m4 = (y - 2.0) * (y + 2.0)
    return d * d / y2m4 + 2.0 + (4.0 - mu) * (4.0 / y2m4 + q)


def self_intersection(n: int) -> int:
    """Self-intersection number of ``a^2 b^n`` on the one-holed torus."""
    return _check_n(n, 3) - 1
