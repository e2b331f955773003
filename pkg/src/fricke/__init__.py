"""Trace polynomials of two-generator SL(2) words and length minima of
``a^2 b^n`` on a one-holed hyperbolic torus."""

from .errors import (
    ConditioningWarning,
    DomainError,
    FrickeError,
    InconsistencyError,
    RangeError,
    WordSyntaxError,
)
from .family import q_n, trace_a2bn_closed, xm_sequence
from .geometry import FiberPoint, validate_point, weierstrass
from .matrices import Mat2, holonomy_from_traces, numeric_trace, symmetric_holonomy
from .minimizer import asymptotics_report, brute_force_min, length_min, solve_Lb_star, solve_t_star
from .polynomial import Polynomial
from .traces import commutator_trace, trace_poly
from .words import Word, parse_word, render_word

__version__ = "0.1.0"

__all__ = [
    "ConditioningWarning",
    "DomainError",
    "FiberPoint",
    "FrickeError",
    "InconsistencyError",
    "Mat2",
    "Polynomial",
    "RangeError",
    "Word",
    "WordSyntaxError",
    "asymptotics_report",
    "brute_force_min",
    "commutator_trace",
    "holonomy_from_traces",
    "length_min",
    "numeric_trace",
    "parse_word",
    "q_n",
    "render_word",
    "solve_Lb_star",
    "solve_t_star",
    "symmetric_holonomy",
    "trace_a2bn_closed",
    "trace_poly",
    "validate_point",
    "weierstrass",
    "xm_sequence",
]
