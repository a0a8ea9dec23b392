"""Command-line front end.

Data goes to stdout, diagnostics to stderr.  JSON records carry "schema": 1
so downstream tooling can pin the field layout; floats are printed with
round-trip precision (re-parsing reproduces the exact double).  Exit codes:
0 success, 1 domain/usage error, 2 internal error.

Commands
    exact     closed-form success probability for (n, m, q); q=1 uses the
              uniform-order evaluator
    optimal   best cutoff and its probability for (n, q); q=1 as above
    predict   asymptotic cutoff and limiting probability for a regime
    simulate  Monte Carlo estimate of the success probability
    sweep     table of one variable (m, q, n or c) against the others, CSV
              or JSON
    sample    permutations drawn from Mallows(n, q), space-separated ranks
              in arrival order, one per line

The default seed for simulate/sample comes from --seed, else the decimal
environment variable SECRETARY_SEED, else 0.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import asymptotics, montecarlo, policy
from .mallows import MallowsModel

SCHEMA = 1


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepRequest:
    """One swept variable, its resolved grid, and the pinned-down rest."""

    variable: str  # m | q | n | c
    grid: tuple[float, ...]
    fixed: dict = field(default_factory=dict)
    output_format: str = "csv"

    def __post_init__(self) -> None:
        if self.variable not in ("m", "q", "n", "c"):
            raise UsageError(f"unknown sweep variable {self.variable!r}")
        if not self.grid:
            raise UsageError("sweep grid is empty")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"unknown output format {self.output_format!r}")

    def need(self, name: str):
        value = self.fixed.get(name)
        if value is None:
            raise UsageError(f"sweep over {self.variable!r} requires --{name}")
        return value


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures to exit code 1
        raise UsageError(message)


def _emit(record: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **record}))


def _seed_from(args) -> int:
    if args.seed is not None:
        value = args.seed
    else:
        raw = os.environ.get("SECRETARY_SEED", "0")
        try:
            value = int(raw, 10)
        except ValueError:
            raise UsageError(f"SECRETARY_SEED must be a decimal integer, got {raw!r}")
    if not 0 <= value < 2**64:
        raise UsageError(f"seed must fit in unsigned 64 bits, got {value}")
    return value


def _probability(n: int, m: int, q: float) -> float:
    if q == 1.0:
        return policy.success_probability_uniform(n, m).value
    return policy.success_probability_exact(n, m, q).value


def cmd_exact(args) -> int:
    _emit({"n": args.n, "m": args.m, "q": args.q,
           "probability": _probability(args.n, args.m, args.q)})
    return 0


def cmd_optimal(args) -> int:
    m_star, p_star = policy.optimal_threshold(args.n, args.q)
    _emit({"n": args.n, "q": args.q, "m_star": m_star, "p_star": p_star.value})
    return 0


def cmd_predict(args) -> int:
    spec = _regime_spec(args)
    m_star, p_limit = asymptotics.predict(spec, args.n)
    record = {"regime": spec.kind, "n": args.n, "m_star": m_star, "p_limit": p_limit}
    if spec.c is not None:
        record["c"] = spec.c
    if spec.alpha is not None:
        record["alpha"] = spec.alpha
    if spec.q is not None:
        record["q"] = spec.q
    _emit(record)
    return 0


def _regime_spec(args) -> asymptotics.RegimeSpec:
    if args.regime == "weak":
        _require(args, c=True)
        return asymptotics.RegimeSpec("weak", c=args.c)
    if args.regime == "moderate":
        _require(args, c=True, alpha=True)
        return asymptotics.RegimeSpec("moderate", c=args.c, alpha=args.alpha)
    _require(args, q=True)
    return asymptotics.RegimeSpec("strong", q=args.q)


def _require(args, **names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--regime {args.regime} requires --{name}")


def cmd_simulate(args) -> int:
    seed = _seed_from(args)
    report = montecarlo.estimate_success(
        args.n, args.m, args.q, args.samples, base_seed=seed, workers=args.workers
    )
    _emit({"n": args.n, "m": args.m, "q": args.q, "estimate": report.estimate,
           "std_error": report.std_error, "samples": report.samples,
           "seed": report.base_seed, "workers": report.workers})
    return 0


def cmd_sample(args) -> int:
    seed = _seed_from(args)
    model = MallowsModel(args.n, args.q)
    perms = model.sample_many(args.count, np.random.default_rng(seed))
    out = sys.stdout
    for row in perms:
        out.write(" ".join(map(str, row)))
        out.write("\n")
    return 0


def _grid(args, default: list[float] | None = None) -> list[float]:
    if args.grid is not None:
        try:
            values = [float(v) for v in args.grid.split(",") if v.strip() != ""]
        except ValueError:
            raise UsageError(f"could not parse --grid {args.grid!r}")
        if not values:
            raise UsageError("--grid is empty")
        return values
    if args.start is None or args.stop is None or args.steps is None:
        if default is not None:
            return default
        raise UsageError("sweep needs either --grid or all of --start/--stop/--steps")
    if args.steps < 1:
        raise UsageError(f"--steps must be >= 1, got {args.steps}")
    return list(np.linspace(args.start, args.stop, args.steps))


def sweep_rows(request: SweepRequest) -> list[dict]:
    rows = []
    if request.variable == "m":
        n, q = request.need("n"), request.need("q")
        for v in request.grid:
            m = _as_int(v, "m")
            rows.append({"n": n, "m": m, "q": q, "probability": _probability(n, m, q)})
    elif request.variable == "q":
        n, m = request.need("n"), request.need("m")
        for q in request.grid:
            rows.append({"n": n, "m": m, "q": q, "probability": _probability(n, m, q)})
    elif request.variable == "n":
        m, q = request.need("m"), request.need("q")
        for v in request.grid:
            n = _as_int(v, "n")
            rows.append({"n": n, "m": m, "q": q, "probability": _probability(n, m, q)})
    else:  # c: weak-regime prediction against fixed n
        n = request.need("n")
        for c in request.grid:
            b = asymptotics.weak_threshold_fraction(c)
            m_star, p_limit = asymptotics.predict(asymptotics.RegimeSpec("weak", c=c), n)
            rows.append({"n": n, "c": c, "b_star": b, "m_star": m_star,
                         "p_limit": p_limit})
    return rows


def _as_int(v: float, name: str) -> int:
    if float(v) != int(v):
        raise UsageError(f"grid value {v!r} for {name} is not an integer")
    return int(v)


def cmd_sweep(args) -> int:
    default = None
    if args.variable == "m":
        if args.n is None:
            raise UsageError("sweep over 'm' requires --n")
        default = [float(m) for m in range(args.n)]
    request = SweepRequest(
        variable=args.variable,
        grid=tuple(_grid(args, default=default)),
        fixed={"n": args.n, "m": args.m, "q": args.q},
        output_format=args.format,
    )
    rows = sweep_rows(request)
    if request.output_format == "json":
        print(json.dumps({"schema": SCHEMA, "rows": rows}))
        return 0
    writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0].keys()),
                            lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (repr(v) if isinstance(v, float) else v)
                         for k, v in row.items()})
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="mallows-secretary",
                     description="Secretary problem under Mallows-biased arrival order")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="closed-form success probability (q=1 -> uniform case)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=float, required=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("optimal", help="best cutoff for (n, q) (q=1 -> uniform case)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=float, required=True)
    p.set_defaults(func=cmd_optimal)

    p = sub.add_parser("predict", help="asymptotic cutoff and limiting probability")
    p.add_argument("--regime", choices=["weak", "moderate", "strong"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--q", type=float)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("simulate", help="Monte Carlo estimate of the success probability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="tabulate one variable against fixed others")
    p.add_argument("--variable", choices=["m", "q", "n", "c"], required=True)
    p.add_argument("--grid", help="comma-separated values")
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=float)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sample", help="draw permutations, one per line, ranks in arrival order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
