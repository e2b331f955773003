"""Compile words in ``a``, ``b`` into trace polynomials in ``x, y, z``.

For ``X, Y`` in SL(2) the trace of any word ``w(X, Y)`` is an integer
polynomial in ``x = tr X``, ``y = tr Y`` and ``z = tr XY``.  The compiler
rewrites a cyclically reduced word with three rules until only base cases
remain:

* ``g^e = tr(g) g^(e-1) - g^(e-2)`` for a syllable with ``|e| >= 2``
  (Cayley-Hamilton; mirrored for negative ``e``);
* ``tr(U g^-1) = tr(g) tr(U) - tr(U g)`` to remove inverse letters
  (the trace identity ``tr(PQ) + tr(PQ^-1) = tr(P) tr(Q)``);
* an alternating word ``abab...ab`` of ``2k`` letters is ``(ab)^k`` and has
  trace ``T_k(z)`` for the trace recursion ``T_k = z T_(k-1) - T_(k-2)``.

Each rewrite lowers the total exponent weight, or keeps it and lowers the
number of inverse letters, so compilation terminates.
"""

from __future__ import annotations

import threading
from typing import Literal

from .polynomial import Polynomial, TRACE_VARS
from .words import Word, canonical_cyclic, cyclic_reduce, parse_word, rotate

MemoMode = Literal["shared", "local", "none"]

_X, _Y, _Z = (Polynomial.variable(v) for v in TRACE_VARS)
_TWO = Polynomial.constant(2)
_GEN_TRACE = (_X, _Y)

_shared_memo: dict[tuple, Polynomial] = {}
_shared_lock = threading.Lock()


def chebyshev_trace(t: Polynomial, k: int) -> Polynomial:
    """``tr(g^k)`` as a polynomial in ``t = tr(g)``."""
    k = abs(k)
    prev, cur = _TWO, t
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, t * cur - prev
    return cur


def _rewrite(w: Word, recurse) -> Polynomial:
    syl = w.syllables
    if not syl:
        return _TWO
    if len(syl) == 1:
        gen, exp = syl[0]
        return chebyshev_trace(_GEN_TRACE[gen], exp)

    for i, (gen, exp) in enumerate(syl):
        if abs(exp) >= 2:
            u = rotate(w, i + 1).syllables[:-1]
            step = 1 if exp > 0 else -1
            t = _GEN_TRACE[gen]
            first = recurse(Word(u + ((gen, exp - step),)))
            second = recurse(Word(u + ((gen, exp - 2 * step),)))
            return t * first - second

    for i, (gen, exp) in enumerate(syl):
        if exp == -1:
            u = rotate(w, i + 1).syllables[:-1]
            t = _GEN_TRACE[gen]
            return t * recurse(Word(u)) - recurse(Word(u + ((gen, 1),)))

    # every exponent is +1 and generators alternate: w is conjugate to (ab)^k
    return chebyshev_trace(_Z, len(syl) // 2)


def _compile_none(w: Word) -> Polynomial:
    return _rewrite(cyclic_reduce(w), _compile_none)


def _compile_local(w: Word) -> Polynomial:
    table: dict[tuple, Polynomial] = {}

    def recurse(v: Word) -> Polynomial:
        key = canonical_cyclic(v).syllables
        hit = table.get(key)
        if hit is None:
            hit = _rewrite(Word(key), recurse)
            table[key] = hit
        return hit

    return recurse(w)


def _compile_shared(w: Word) -> Polynomial:
    # keys fold in the simultaneous-inversion symmetry, halving the table
    key = canonical_cyclic(w, fold_flip=True).syllables
    hit = _shared_memo.get(key)
    if hit is None:
        hit = _rewrite(Word(key), _compile_shared)
        with _shared_lock:
            _shared_memo.setdefault(key, hit)
    return hit


def trace_poly(w: Word | str, memo: MemoMode = "shared") -> Polynomial:
    """The polynomial ``P`` with ``P(tr X, tr Y, tr XY) = tr w(X, Y)``.

    ``memo`` selects the cache: ``"shared"`` is a process-wide table keyed on
    canonical cyclic words with the inversion symmetry folded in,
    ``"local"`` is a fresh table for this call keyed on rotations only, and
    ``"none"`` recomputes every subword (exponential; small words only).

    >>> str(trace_poly("aB"))
    '1*x*y - 1*z'
    """
    if isinstance(w, str):
        w = parse_word(w)
    if memo == "shared":
        return _compile_shared(w)
    if memo == "local":
        return _compile_local(w)
    if memo == "none":
        return _compile_none(w)
    raise ValueError(f"unknown memo mode {memo!r}")


def clear_memo() -> None:
    with _shared_lock:
        _shared_memo.clear()


def commutator_trace() -> Polynomial:
    """``tr(XYX^-1Y^-1) = x^2 + y^2 + z^2 - xyz - 2``."""
    return _X**2 + _Y**2 + _Z**2 - _X * _Y * _Z - 2
