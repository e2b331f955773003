"""Real unit-determinant 2x2 matrices and the brute-force trace oracle."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import ConditioningWarning, DomainError, RangeError
from .words import Word, cyclic_reduce

CONSTRUCT_TOL = 1e-12
DRIFT_TOL = 1e-9
# largest argument passed to exp/cosh before switching to log-domain formulas
EXP_LIMIT = 300.0


def _det_defect(a11, a12, a21, a22) -> float:
    # relative to the size of the two products so large entries are judged fairly
    scale = max(1.0, abs(a11 * a22) + abs(a12 * a21))
    return abs(a11 * a22 - a12 * a21 - 1.0) / scale


@dataclass(frozen=True, slots=True)
class Mat2:
    """Matrix ``[[a11, a12], [a21, a22]]`` with determinant 1."""

    a11: float
    a12: float
    a21: float
    a22: float

    def __post_init__(self):
        entries = (self.a11, self.a12, self.a21, self.a22)
        if not all(math.isfinite(v) for v in entries):
            raise DomainError(f"non-finite matrix entry in {entries}")
        defect = _det_defect(*entries)
        if defect > CONSTRUCT_TOL:
            raise DomainError(f"determinant differs from 1 by {defect:.3g} (relative)")

    @classmethod
    def _unchecked(cls, a11, a12, a21, a22) -> Mat2:
        m = object.__new__(cls)
        object.__setattr__(m, "a11", a11)
        object.__setattr__(m, "a12", a12)
        object.__setattr__(m, "a21", a21)
        object.__setattr__(m, "a22", a22)
        return m

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        (a11, a12), (a21, a22) = rows
        return cls(float(a11), float(a12), float(a21), float(a22))

    def rows(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    @property
    def det(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21

    def det_defect(self) -> float:
        return _det_defect(self.a11, self.a12, self.a21, self.a22)

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)


IDENTITY = Mat2(1.0, 0.0, 0.0, 1.0)


def _mul(p, q):
    p11, p12, p21, p22 = p
    q11, q12, q21, q22 = q
    return (
        p11 * q11 + p12 * q21,
        p11 * q12 + p12 * q22,
        p21 * q11 + p22 * q21,
        p21 * q12 + p22 * q22,
    )


def _pow(p, k: int):
    if k < 0:
        p11, p12, p21, p22 = p
        p, k = (p22, -p12, -p21, p11), -k
    result = (1.0, 0.0, 0.0, 1.0)
    while k:
        if k & 1:
            result = _mul(result, p)
        k >>= 1
        if k:
            p = _mul(p, p)
    return result


def _entries(m: Mat2):
    return (m.a11, m.a12, m.a21, m.a22)


def _finish(entries) -> Mat2:
    if not all(math.isfinite(v) for v in entries):
        raise RangeError("matrix product overflowed")
    defect = _det_defect(*entries)
    if defect > DRIFT_TOL:
        warnings.warn(
            f"determinant drifted from 1 by {defect:.3g} (relative)",
            ConditioningWarning,
            stacklevel=3,
        )
    return Mat2._unchecked(*entries)


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return _finish(_mul(_entries(a), _entries(b)))


def mat_inverse(a: Mat2) -> Mat2:
    # adjugate; exact inverse since det = 1
    return Mat2._unchecked(a.a22, -a.a12, -a.a21, a.a11)


def mat_trace(a: Mat2) -> float:
    return a.a11 + a.a22


def mat_pow(a: Mat2, k: int) -> Mat2:
    """``a**k`` by repeated squaring; negative ``k`` uses the adjugate."""
    return _finish(_pow(_entries(a), k))


def word_matrix(w: Word, X: Mat2, Y: Mat2) -> Mat2:
    """Multiply out ``w`` with ``a -> X`` and ``b -> Y``."""
    gens = (_entries(X), _entries(Y))
    acc = (1.0, 0.0, 0.0, 1.0)
    for gen, exp in w.syllables:
        acc = _mul(acc, _pow(gens[gen], exp))
    return _finish(acc)


def numeric_trace(w: Word, X: Mat2, Y: Mat2) -> float:
    """Trace of ``w(X, Y)`` computed by explicit matrix multiplication.

    The word is cyclically reduced first; the trace is a class function and
    multiplying out a conjugating prefix and suffix only adds cancellation.
    """
    return mat_trace(word_matrix(cyclic_reduce(w), X, Y))


def holonomy_from_traces(x: float, y: float, z: float) -> tuple[Mat2, Mat2]:
    """A pair ``(X, Y)`` with ``tr X = x``, ``tr Y = y`` and ``tr XY = z``.

    Uses ``X = [[x, -1], [1, 0]]`` and ``Y = [[0, eta], [-1/eta, y]]`` where
    ``eta + 1/eta = z`` and ``eta >= 1``.  Only the traces carry meaning;
    the entries are one arbitrary representative of the conjugacy class.
    """
    for name, t in (("x", x), ("y", y), ("z", z)):
        if not t > 2.0 + 1e-12:
            raise DomainError(f"trace {name}={t!r} must exceed 2")
    eta = 0.5 * (z + math.sqrt((z - 2.0) * (z + 2.0)))
    X = Mat2(float(x), -1.0, 1.0, 0.0)
    Y = Mat2(0.0, eta, -1.0 / eta, float(y))
    return X, Y


def symmetric_holonomy(L_b: float, H_b: float, n: int) -> tuple[Mat2, Mat2, Mat2]:
    """Holonomy ``(Y, Z, X)`` in the frame where the axes of ``Y`` and ``Z`` are perpendicular.

    ``Y = diag(e^{L_b/2}, e^{-L_b/2})``, ``Z`` is the symmetric hyperbolic
    matrix with ``cosh H_b`` on the diagonal and ``sinh H_b`` off it, and
    ``X = Z Y^{-n/2}``.  The half power of the positive diagonal ``Y`` is
    taken entrywise, so odd ``n`` is handled the same way as even ``n``.
    """
    if not (L_b > 0 and H_b > 0):
        raise DomainError(f"L_b and H_b must be positive, got {L_b!r}, {H_b!r}")
    n = int(n)
    if n * L_b / 4 > EXP_LIMIT or H_b > EXP_LIMIT:
        raise RangeError(
            f"n*L_b/4={n * L_b / 4:.6g}, H_b={H_b:.6g} exceed {EXP_LIMIT}; "
            "use the log-domain length formulas in fricke.minimizer"
        )
    ch, sh = math.cosh(H_b), math.sinh(H_b)
    up, down = math.exp(L_b / 2), math.exp(-L_b / 2)
    e_minus, e_plus = math.exp(-n * L_b / 4), math.exp(n * L_b / 4)
    Y = Mat2(up, 0.0, 0.0, down)
    Z = Mat2(ch, sh, sh, ch)
    X = Mat2(ch * e_minus, sh * e_plus, sh * e_minus, ch * e_plus)
    return Y, Z, X


__all__ = [
    "IDENTITY",
    "Mat2",
    "holonomy_from_traces",
    "mat_inverse",
    "mat_mul",
    "mat_pow",
    "mat_trace",
    "numeric_trace",
    "symmetric_holonomy",
    "word_matrix",
]
