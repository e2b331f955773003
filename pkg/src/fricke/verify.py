"""Self-check suites run by ``fricke verify``.

Each suite re-derives a family of identities along two independent routes
and counts agreements.  Sizes are kept small enough for an interactive run;
the pytest suite exercises the same checks at full scale.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from . import family
from .geometry import axes_cross, mu_from_boundary, weierstrass
from .matrices import holonomy_from_traces, numeric_trace, symmetric_holonomy
from .minimizer import (
    brute_force_min,
    length_min,
    solve_Lb_star,
    solve_t_star,
    trace_symmetry_residual,
)
from .polynomial import Polynomial
from .sampling import random_fiber_point, random_triple, random_word
from .traces import trace_poly
from .words import flip_inverses, rotate, word

SUITES = ("traces", "family", "geometry", "minimize")


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, label: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(label)


def _close(a: float, b: float, rel: float) -> bool:
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


def verify_traces(seed: int = 0, words: int = 200, triples: int = 5) -> SuiteResult:
    res = SuiteResult("traces")
    rng = random.Random(seed)
    sample = [random_word(rng) for _ in range(words)]
    points = [random_triple(rng) for _ in range(triples)]
    mats = [holonomy_from_traces(*t) for t in points]
    for w in sample:
        p = trace_poly(w)
        for t, (X, Y) in zip(points, mats):
            res.check(_close(p.evaluate(t), numeric_trace(w, X, Y), 1e-9), f"oracle {w} at {t}")
        res.check(trace_poly(w, memo="local") == trace_poly(flip_inverses(w), memo="local"),
                  f"inversion symmetry {w}")
        k = rng.randrange(max(len(w), 1))
        res.check(trace_poly(rotate(w, k), memo="local") == trace_poly(w, memo="local"),
                  f"cyclic invariance {w}")
    x, y, _ = (Polynomial.variable(v) for v in "xyz")
    res.check(trace_poly("ab") + trace_poly("aB") == x * y, "trace identity closure")
    for w in sample[:40]:
        if w.weight <= 7:
            res.check(trace_poly(w, memo="none") == trace_poly(w), f"memo soundness {w}")
    return res


def verify_family(seed: int = 0, n_max: int = 60, triples: int = 10) -> SuiteResult:
    res = SuiteResult("family")
    res.check(family.q_n(2).coefficients == (1,), "q_2 = 1")
    res.check(family.q_n(3).coefficients == (2, 1), "q_3 = t + 2")
    y = Polynomial.variable("y", family.Y_MU_VARS)
    mu = Polynomial.variable("mu", family.Y_MU_VARS)
    shift = y - 2
    p0, p1 = family.p_n_poly(0), family.p_n_poly(1)
    prev = None
    for n in range(2, n_max + 1):
        q = family.q_n(n)
        base = p0 if n % 2 == 0 else p1
        res.check(family.p_n_poly(n) - base == (4 - mu) * q.to_polynomial(shift), f"factorisation n={n}")
        res.check(all(c > 0 for c in q.coefficients), f"positive coefficients q_{n}")
        if prev is not None:
            diff = [a - b for a, b in zip(q.coefficients, prev.coefficients + (0,) * 2)]
            res.check(all(d > 0 for d in diff), f"q_{n} - q_{n-1} positive")
        prev = q
    rng = random.Random(seed)
    for _ in range(triples):
        t = random_triple(rng)
        X, Y = holonomy_from_traces(*t)
        for n in range(2, 41):
            w = word((0, 2), (1, n))
            closed = family.trace_a2bn_closed(n, *t)
            res.check(_close(closed, trace_poly(w).evaluate(t), 1e-9), f"closed form vs polynomial n={n} at {t}")
            res.check(_close(closed, numeric_trace(w, X, Y), 1e-9), f"closed form vs matrices n={n} at {t}")
        mu_val = family.character_mu(*t)
        for n in range(0, 12):
            m, odd = divmod(n, 2)
            defining = word((0, 1), (1, m), (0, -1), (1, -m - odd))
            res.check(_close(family.p_n(n, t[1], mu_val), -numeric_trace(defining, X, Y), 1e-9),
                      f"P_{n} definition at {t}")
    return res


def verify_geometry(seed: int = 0, points: int = 1000) -> SuiteResult:
    res = SuiteResult("geometry")
    rng = random.Random(seed)
    for _ in range(points):
        p, H_b = random_fiber_point(rng)
        report = p.validate()
        res.check(report.accepted, f"character relation at {p}")
        tri = weierstrass(p.L_a, p.L_b, p.L_ab, p.L_boundary)
        res.check(tri.area_form_residual() <= 1e-10, f"area form at {p}")
        res.check(tri.altitude_form_residual() <= 1e-10, f"altitude form at {p}")
        res.check(abs(tri.H_b - H_b) <= 1e-9 * max(1.0, H_b), f"altitude recovered at {p}")
        mu = mu_from_boundary(p.L_boundary)
        c = math.cosh(p.L_boundary / 4)
        res.check(abs(math.sqrt(1 - mu / 4) - c) <= 1e-10 * c, f"sqrt(1 - mu/4) at {p}")
    commutator = word((0, 1), (1, 1), (0, -1), (1, -1))
    for _ in range(points // 10):
        p, H_b = random_fiber_point(rng)
        Y, _, X = symmetric_holonomy(p.L_b, H_b, 3)
        comm = numeric_trace(commutator, X, Y)
        res.check(axes_cross(X, Y) and comm <= -2 + 1e-9, f"commutator trace {comm} at {p}")
    for _ in range(points // 10):
        t = random_triple(rng)
        if family.character_mu(*t) <= 0:
            X, Y = holonomy_from_traces(*t)
            comm = numeric_trace(commutator, X, Y)
            res.check(axes_cross(X, Y) and comm <= -2 + 1e-9, f"commutator trace {comm} at {t}")
    return res


BRUTE_NS = (3, 4, 5, 10, 50, 200)
BRUTE_BOUNDARIES = (0.0, 1.0, 5.0, 20.0)


def verify_minimize(seed: int = 0) -> SuiteResult:
    res = SuiteResult("minimize")
    t = solve_t_star()
    res.check(abs(t.value - 1.199678640257733833916) <= 1e-12, "t* digits")
    res.check(abs(t.residual) <= 1e-14, "t* residual")
    for n in BRUTE_NS:
        for bd in BRUTE_BOUNDARIES:
            r = length_min(n, bd)
            b = brute_force_min(n, bd)
            res.check(b.unimodal, f"unimodal profile n={n} bd={bd}")
            res.check(abs(r.L_b_star - b.L_b_hat) <= 1e-7, f"L_b* vs oracle n={n} bd={bd}")
            res.check(abs(r.L_min - b.L_hat) <= 1e-7, f"L_min vs oracle n={n} bd={bd}")
            res.check(abs(r.residual_root) <= 1e-12, f"root residual n={n} bd={bd}")
            res.check(r.residual_variety <= 1e-8, f"character relation n={n} bd={bd}")
            res.check(trace_symmetry_residual(n, r.L_b_star, bd) <= 1e-9, f"trace symmetry n={n} bd={bd}")
    L_bs = [solve_Lb_star(n) for n in range(3, 201)]
    res.check(all(b < a for a, b in zip(L_bs, L_bs[1:])), "L_b* decreasing in n")
    scaled = [n * L / 4 for n, L in zip(range(3, 201), L_bs)]
    res.check(all(b < a for a, b in zip(scaled, scaled[1:])), "n L_b*/4 decreasing in n")
    for n in (3, 7, 12):
        mins = [length_min(n, 100 * k / 49).L_min for k in range(50)]
        res.check(all(b > a for a, b in zip(mins, mins[1:])), f"L_min increasing in boundary n={n}")
    return res


RUNNERS: dict[str, Callable[[], SuiteResult]] = {
    "traces": verify_traces,
    "family": verify_family,
    "geometry": verify_geometry,
    "minimize": verify_minimize,
}


def run_suites(names) -> list[SuiteResult]:
    if "all" in names:
        names = SUITES
    results = []
    for name in names:
        try:
            results.append(RUNNERS[name]())
        except Exception as exc:  # a crash in a suite is a failed suite
            results.append(SuiteResult(name, 1, [f"suite raised {type(exc).__name__}: {exc}"]))
    return results
