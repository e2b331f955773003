"""Seeded random generators for words, trace triples and fiber points."""

from __future__ import annotations

import math
import random

from .geometry import FiberPoint, length_from_trace
from .matrices import mat_mul, mat_trace, symmetric_holonomy
from .words import Word

TRACE_LOW, TRACE_HIGH = 2.0, 8.0


def random_word(rng: random.Random, max_weight: int = 12, max_exp: int = 4) -> Word:
    """A nonempty reduced word of exponent weight at most ``max_weight``."""
    target = rng.randint(1, max_weight)
    syllables = []
    gen = rng.randint(0, 1)
    weight = 0
    while weight < target:
        e = rng.randint(1, min(max_exp, target - weight))
        syllables.append((gen, e if rng.random() < 0.5 else -e))
        weight += e
        gen = 1 - gen
    return Word(tuple(syllables))


def random_triple(rng: random.Random) -> tuple[float, float, float]:
    """Traces drawn uniformly from ``(2, 8]``."""
    def draw():
        t = TRACE_HIGH - rng.random() * (TRACE_HIGH - TRACE_LOW)
        return max(t, TRACE_LOW + 1e-9)
    return draw(), draw(), draw()


def random_fiber_point(rng: random.Random, n_max: int = 8) -> tuple[FiberPoint, float]:
    """A point read off ``symmetric_holonomy`` and its altitude ``H_b``.

    ``L_b`` and ``H_b`` are sampled with ``sinh(H_b) sinh(L_b/2) >= 1`` and
    the neck length is the one that product determines.
    """
    n = rng.randint(3, n_max)
    L_b = rng.uniform(0.2, 2.5)
    h_min = math.asinh(1.0 / math.sinh(L_b / 2))
    H_b = h_min + rng.uniform(0.0, 1.5)
    scale = max(1.0, math.sinh(H_b) * math.sinh(L_b / 2))
    L_boundary = 4.0 * math.acosh(scale)
    Y, _, X = symmetric_holonomy(L_b, H_b, n)
    L_a = length_from_trace(mat_trace(X))
    L_ab = length_from_trace(mat_trace(mat_mul(X, Y)))
    return FiberPoint(L_a, L_b, L_ab, L_boundary), H_b
