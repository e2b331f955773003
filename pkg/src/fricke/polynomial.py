"""Sparse multivariate polynomials with exact integer coefficients.

Terms are kept in a dict mapping exponent tuples to nonzero ``int``
coefficients.  Python integers never overflow, so every ring operation is
exact.  Evaluation at floating-point arguments is exact as well: floats are
dyadic rationals, the polynomial is summed in integer arithmetic over a
common power-of-two denominator, and the result is rounded once.

>>> x, y, z = trace_variables()
>>> p = x**2 + y**2 + z**2 - x*y*z - 2
>>> str(p)
'-1*x*y*z + 1*x^2 + 1*y^2 + 1*z^2 - 2'
>>> p(3, 3, 6)
-2.0
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

TRACE_VARS = ("x", "y", "z")


def _graded_key(exps: tuple[int, ...]):
    return (-sum(exps), tuple(-e for e in exps))


class Polynomial:
    """An element of ``Z[v_1, ..., v_k]`` for fixed variable names."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None,
                 variables: Sequence[str] = TRACE_VARS):
        self.variables = tuple(variables)
        k = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != k:
                raise ValueError(f"exponent tuple {exps} does not match variables {self.variables}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {type(c).__name__}")
            if c:
                clean[tuple(exps)] = clean.get(tuple(exps), 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # construction ----------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables: Sequence[str] = TRACE_VARS) -> Polynomial:
        return cls({(0,) * len(variables): int(c)}, variables)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] = TRACE_VARS) -> Polynomial:
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} is not one of {variables}")
        return cls({exps: 1}, variables)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.variables)
        return NotImplemented

    # ring operations -------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(terms, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(terms, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> Polynomial:
        return Polynomial({e: c * v for e, v in self.terms.items()}, self.variables)

    # comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.variables)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection ------------------------------------------------------

    def coefficient(self, *exps: int) -> int:
        return self.terms.get(tuple(exps), 0)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lexicographic order, highest degree first."""
        return sorted(self.terms.items(), key=lambda item: _graded_key(item[0]))

    # evaluation ------------------------------------------------------

    def __call__(self, *values) -> float:
        return self.evaluate(values)

    def evaluate(self, values: Sequence) -> float:
        """Value at ``values``, correctly rounded to a float."""
        return float(self.evaluate_exact(values))

    def evaluate_exact(self, values: Sequence) -> Fraction:
        if len(values) != len(self.variables):
            raise ValueError(f"expected {len(self.variables)} values, got {len(values)}")
        nums, dens = [], []
        for v in values:
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError(f"cannot evaluate at non-finite value {v!r}")
            q = Fraction(v)
            nums.append(q.numerator)
            dens.append(q.denominator)
        top = [self.degree_in(name) for name in self.variables]
        num_pows = [_powers(n, d) for n, d in zip(nums, top)]
        den_pows = [_powers(d, t) for d, t in zip(dens, top)]
        total = 0
        for exps, c in self.terms.items():
            term = c
            for i, e in enumerate(exps):
                term *= num_pows[i][e] * den_pows[i][top[i] - e]
            total += term
        denom = 1
        for i, t in enumerate(top):
            if t > 0:
                denom *= den_pows[i][t]
        return Fraction(total, denom)

    def substitute(self, images: Mapping[str, Polynomial],
                   variables: Sequence[str] | None = None) -> Polynomial:
        """Replace each variable by a polynomial over ``variables``."""
        if variables is None:
            variables = next(iter(images.values())).variables
        gens = [images.get(name, Polynomial.variable(name, variables) if name in variables else None)
                for name in self.variables]
        result = Polynomial({}, variables)
        for exps, c in self.sorted_terms():
            term = Polynomial.constant(c, variables)
            for g, e in zip(gens, exps):
                if e:
                    if g is None:
                        raise ValueError("substitution leaves a variable unmapped")
                    term = term * g**e
            result = result + term
        return result

    # rendering -------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r}, variables={self.variables})"


def _powers(base: int, top: int) -> list[int]:
    out = [1]
    for _ in range(max(top, 0)):
        out.append(out[-1] * base)
    return out


def render(p: Polynomial) -> str:
    """Graded-lex rendering such as ``-1*x*y*z + 1*x^2 - 2``."""
    pieces = []
    for exps, c in p.sorted_terms():
        factors = []
        for name, e in zip(p.variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join([str(abs(c))] + factors) if factors else str(abs(c))
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(pieces) if pieces else "0"


def trace_variables() -> tuple[Polynomial, Polynomial, Polynomial]:
    return tuple(Polynomial.variable(v) for v in TRACE_VARS)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, c: int) -> Polynomial:
    return p.scale(c)


def poly_eval(p: Polynomial, x, y, z) -> float:
    return p.evaluate((x, y, z))
