"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 malformed input,
3 input outside the mathematical domain, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DomainError, FrickeError, WordSyntaxError
from .geometry import read_points_csv
from .minimizer import asymptotics_report, length_a2bn, length_min, solve_Lb_star, tanh_equation
from .traces import trace_poly
from .words import parse_word

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4

DEFAULT_PRECISION = 15
PRECISION_RANGE = (6, 17)
PRECISION_ENV = "FRICKE_PRECISION"

SWEEP_COLUMNS = (
    "n",
    "L_boundary",
    "L_b_star",
    "n_L_b_star_over_4",
    "L_min",
    "L_min_over_4ln_n",
    "residual_root",
)


class UsageError(Exception):
    """Bad flag value detected after argparse; maps to exit code 2."""


def fmt(value: float, precision: int) -> float:
    """Round to ``precision`` significant digits; the result prints in shortest form."""
    if not math.isfinite(value):
        return value
    return float(f"{value:.{precision}g}")


def check_precision(p: int) -> int:
    lo, hi = PRECISION_RANGE
    if not lo <= p <= hi:
        raise UsageError(f"precision must lie in [{lo}, {hi}], got {p}")
    return p


def resolve_precision(flag: int | None) -> int:
    if flag is not None:
        return check_precision(flag)
    env = os.environ.get(PRECISION_ENV)
    if env is None or not env.strip():
        return DEFAULT_PRECISION
    try:
        return check_precision(int(env))
    except ValueError:
        raise UsageError(f"{PRECISION_ENV}={env!r} is not an integer") from None


def parse_n_range(text: str) -> range:
    """``START:STOP[:STEP]``, inclusive of ``STOP``; a bare integer is a single value."""
    parts = text.split(":")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad n range {text!r}") from None
    if len(nums) == 1:
        nums = [nums[0], nums[0]]
    if len(nums) not in (2, 3):
        raise UsageError(f"bad n range {text!r}")
    start, stop = nums[0], nums[1]
    step = nums[2] if len(nums) == 3 else 1
    if step <= 0 or stop < start:
        raise UsageError(f"n range {text!r} must have STOP >= START and STEP > 0")
    return range(start, stop + 1, step)


def parse_floats(text: str, count: int | None = None) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None
    if not vals or (count is not None and len(vals) != count):
        want = f"{count} " if count else ""
        raise UsageError(f"expected {want}comma-separated numbers, got {text!r}")
    return vals


@dataclass(frozen=True)
class SweepConfig:
    n_range: range
    boundary_values: tuple[float, ...]
    output_format: str = "csv"
    output_path: str | None = None
    precision: int = DEFAULT_PRECISION
    jobs: int = 1

    def __post_init__(self):
        if len(self.n_range) == 0 or self.n_range[0] < 3:
            raise DomainError("sweep needs n >= 3 (the minimum is only defined for n >= 3)")
        if not self.boundary_values:
            raise UsageError("at least one boundary value is required")
        for b in self.boundary_values:
            if not (b >= 0 and math.isfinite(b)):
                raise DomainError(f"boundary values must be finite and >= 0, got {b!r}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.output_format!r}")
        check_precision(self.precision)
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")


def _sweep_rows_for_n(args: tuple[int, tuple[float, ...]]) -> list[tuple]:
    n, boundaries = args
    L_b = solve_Lb_star(n)
    root = tanh_equation(L_b, n)
    rows = []
    for bd in boundaries:
        r = length_min(n, bd)
        rows.append((n, bd, L_b, n * L_b / 4, r.L_min, r.L_min / (4 * math.log(n)), root))
    return rows


def sweep_rows(config: SweepConfig) -> list[tuple]:
    boundaries = tuple(sorted(set(config.boundary_values)))
    tasks = [(n, boundaries) for n in config.n_range]
    if config.jobs == 1:
        chunks = list(map(_sweep_rows_for_n, tasks))
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_sweep_rows_for_n, tasks))
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def render_sweep(rows: list[tuple], output_format: str, precision: int) -> str:
    def cells(row):
        return [row[0]] + [fmt(v, precision) for v in row[1:]]

    if output_format == "json":
        records = [dict(zip(SWEEP_COLUMNS, cells(r))) for r in rows]
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for r in rows:
        writer.writerow([repr(c) if isinstance(c, float) else str(c) for c in cells(r)])
    return buf.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _rounded(obj, precision: int):
    if isinstance(obj, float):
        return fmt(obj, precision)
    if isinstance(obj, dict):
        return {k: _rounded(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v, precision) for v in obj]
    return obj


# --------------------------------------------------------------------------
# subcommands


def cmd_trace(args) -> int:
    w = parse_word(args.word)
    poly = trace_poly(w)
    text = str(poly)
    if args.eval is not None:
        exact = poly.evaluate_exact(parse_floats(args.eval, 3))
        if exact.denominator == 1:
            text += f" = {exact.numerator}"
        else:
            text += f" = {fmt(float(exact), resolve_precision(args.precision))!r}"
    print(text)
    return EXIT_OK


def cmd_length(args) -> int:
    p = resolve_precision(args.precision)
    L = length_a2bn(args.lb, args.boundary, args.n)
    print(repr(fmt(L, p)))
    return EXIT_OK


def cmd_minimize(args) -> int:
    p = resolve_precision(args.precision)
    result = length_min(args.n, args.boundary)
    print(json.dumps(_rounded(result.to_dict(), p), indent=2))
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = SweepConfig(
        n_range=parse_n_range(args.n_range),
        boundary_values=tuple(parse_floats(args.boundary)),
        output_format=args.format,
        output_path=args.output,
        precision=resolve_precision(args.precision),
        jobs=args.jobs,
    )
    text = render_sweep(sweep_rows(config), config.output_format, config.precision)
    _emit(text, config.output_path)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suites

    failed = False
    for res in run_suites([args.suite]):
        status = "PASS" if res.ok else "FAIL"
        print(f"{res.name}: {status} {res.checks - len(res.failures)}/{res.checks} checks")
        for label in res.failures[:10]:
            print(f"  failed: {label}")
        failed |= not res.ok
    return EXIT_VERIFY if failed else EXIT_OK


def asymptotics_grid(n_max: int, boundary_max: float) -> tuple[list[int], list[float]]:
    """Every ``n`` up to 10, then powers of ten up to ``n_max``; five boundary values."""
    ns = [n for n in range(3, min(n_max, 10) + 1)]
    k = 100
    while k <= n_max:
        ns.append(k)
        k *= 10
    if n_max not in ns:
        ns.append(n_max)
    bds = sorted({boundary_max * i / 4 for i in range(5)})
    return ns, bds


def cmd_asymptotics(args) -> int:
    p = resolve_precision(args.precision)
    if args.n_max < 3:
        raise DomainError("--n-max must be >= 3")
    if not (args.boundary_max >= 0 and math.isfinite(args.boundary_max)):
        raise DomainError("--boundary-max must be finite and >= 0")
    ns, bds = asymptotics_grid(args.n_max, args.boundary_max)
    report = asymptotics_report(ns, bds)
    cols = ("n", "L_boundary", "L_b_star", "n_L_b_star_over_4", "L_min",
            "L_min_over_4ln_n", "L_min_minus_boundary")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(cols)
    for row in report.rows:
        writer.writerow([row.n] + [repr(fmt(getattr(row, c), p)) for c in cols[1:]])
    print(f"# L_b_star strictly decreasing in n: {report.L_b_star_decreasing_in_n}")
    print(f"# n*L_b_star/4 strictly decreasing in n: {report.scaled_decreasing_in_n}")
    print(f"# L_min strictly increasing in L_boundary: {report.L_min_increasing_in_boundary}")
    return EXIT_OK


def cmd_validate(args) -> int:
    p = resolve_precision(args.precision)
    with open(args.points, encoding="utf-8", newline="") as fh:
        points = read_points_csv(fh)
    cols = ("L_a", "L_b", "L_ab", "L_boundary", "residual", "relative_residual",
            "triangle_slack", "accepted")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(cols)
    for pt in points:
        rep = pt.validate()
        vals = (pt.L_a, pt.L_b, pt.L_ab, pt.L_boundary, rep.residual,
                rep.relative_residual, rep.triangle_slack)
        writer.writerow([repr(fmt(v, p)) for v in vals] + [str(rep.accepted).lower()])
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fricke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def precision_flag(p):
        p.add_argument("--precision", type=int, default=None,
                       help=f"significant digits in [6, 17] (default {DEFAULT_PRECISION}, "
                            f"or ${PRECISION_ENV})")

    p = sub.add_parser("trace", help="compile a word to its trace polynomial")
    p.add_argument("word", help="word in a, b and inverses A, B, e.g. 'a^2b^-3' or 'abAB'")
    p.add_argument("--eval", metavar="X,Y,Z", help="also evaluate at traces x, y, z")
    precision_flag(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("length", help="length of a^2 b^n on the symmetric locus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lb", type=float, required=True, help="length of b")
    p.add_argument("--boundary", type=float, default=0.0)
    precision_flag(p)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("minimize", help="minimum length of a^2 b^n as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--boundary", type=float, default=0.0)
    precision_flag(p)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("sweep", help="tabulate minima over n and boundary length")
    p.add_argument("--n-range", required=True, metavar="START:STOP[:STEP]")
    p.add_argument("--boundary", default="0", metavar="B1,B2,...")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None, help="output file (default: standard output)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    precision_flag(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument("suite", choices=("traces", "family", "geometry", "minimize", "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asymptotics", help="monotonicity and growth table")
    p.add_argument("--n-max", type=int, default=1000)
    p.add_argument("--boundary-max", type=float, default=10.0)
    precision_flag(p)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("validate", help="audit a CSV of L_a,L_b,L_ab,L_boundary rows")
    p.add_argument("points")
    precision_flag(p)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, WordSyntaxError) as exc:
        print(f"fricke: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, FrickeError) as exc:
        print(f"fricke: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"fricke: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"fricke: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
