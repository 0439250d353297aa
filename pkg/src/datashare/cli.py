"""Command-line entry point.

Subcommands: solve, oracle-check, pareto, price, sweep, curve.  JSON goes to
standard output; files are written only where ``--out`` is given.  Exit
status is 0 on success, 1 on solver or domain errors (and failed oracle
checks), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, Sequence

import numpy as np

from .errors import DataShareError
from .model import GameInstance
from .oracle import OracleConfig, compare_with_oracle, random_instances
from .pareto import is_pareto_improving, pareto_price_set
from .pricing import objective, optimal_price
from .spe import solve_spe
from .sweep import Axis, SweepSpec, emit_csv, emit_heatmap, fmt, run_sweep, utility_curve, write_curve_csv


class UsageError(Exception):
    pass


def rounded(obj: Any) -> Any:
    """Round every float to 12 significant digits for stable output."""
    if isinstance(obj, float):
        return float(format(obj, ".12g"))
    if isinstance(obj, dict):
        return {k: rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v) for v in obj]
    return obj


def dump(obj: Any) -> None:
    sys.stdout.write(json.dumps(rounded(obj), indent=2) + "\n")


def _add_instance_args(p: argparse.ArgumentParser, with_m: bool = True) -> None:
    g = p.add_argument_group("instance")
    g.add_argument("--r-f", type=float, dest="r_f")
    g.add_argument("--r-g", type=float, dest="r_g")
    g.add_argument("--c", type=float)
    if with_m:
        g.add_argument("--m", type=float)
    g.add_argument("--gamma", type=float)
    g.add_argument("--instance", metavar="JSON", help="instance file; excludes the inline flags")


def _instance(args: argparse.Namespace, need_m: bool = True) -> GameInstance:
    names = ["r_f", "r_g", "c", "gamma"] + (["m"] if need_m else [])
    inline = {n: getattr(args, n, None) for n in names}
    given = {n: v for n, v in inline.items() if v is not None}
    if args.instance is not None:
        if given:
            raise UsageError("--instance cannot be combined with inline parameter flags")
        with open(args.instance, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise DataShareError("instance JSON must be an object")
        if not need_m:
            data = {**data, "m": data.get("m", 0.0)}
        return GameInstance.from_dict(data)
    missing = [n for n in names if n != "gamma" and n not in given]
    if missing:
        raise UsageError("missing instance flags: " + ", ".join("--" + n.replace("_", "-") for n in missing))
    return GameInstance(
        given["r_f"], given["r_g"], given["c"], given.get("m", 0.0), given.get("gamma", 1.0)
    )


def cmd_solve(args: argparse.Namespace) -> int:
    dump(solve_spe(_instance(args)).to_dict())
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    cfg = OracleConfig(args.grid_points, not args.no_candidates)
    rng = np.random.default_rng(args.seed)
    report = compare_with_oracle(random_instances(rng, args.n), cfg)
    dump(report.to_dict())
    return 1 if report.failures else 0


def cmd_pareto(args: argparse.Namespace) -> int:
    inst = _instance(args, need_m=False)
    prices = pareto_price_set(inst.r_f, inst.r_g, inst.c, inst.gamma)
    dump(prices.to_dict())
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(("m", "is_improving", "U", "V", "kind"))
            for m in np.linspace(-inst.r_f, inst.r_f, args.steps):
                at = inst.replace(m=float(m))
                eq = solve_spe(at)
                w.writerow(
                    [fmt(m), str(is_pareto_improving(at)).lower(), fmt(eq.firm_utility), fmt(eq.genai_utility), eq.kind.value]
                )
    return 0


def cmd_price(args: argparse.Namespace) -> int:
    inst = _instance(args, need_m=False)
    sol = optimal_price(inst.r_f, inst.r_g, inst.c, args.lam, inst.gamma)
    dump(sol.to_dict())
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(("m", "objective"))
            for m in np.linspace(-inst.r_f, inst.r_f, args.steps):
                w.writerow([fmt(m), fmt(objective(inst.replace(m=float(m)), args.lam))])
    return 0


def _parse_axis(text: str) -> Axis:
    parts = text.split(":")
    if len(parts) != 4:
        raise UsageError(f"axis must look like name:min:max:steps, got {text!r}")
    name, lo, hi, steps = parts
    try:
        return Axis(name, float(lo), float(hi), int(steps))
    except ValueError as exc:
        if isinstance(exc, DataShareError):
            raise
        raise UsageError(f"bad axis {text!r}: {exc}") from None


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.spec:
        if args.axis1 or args.axis2:
            raise UsageError("--spec cannot be combined with --axis1/--axis2")
        spec = SweepSpec.from_json(args.spec)
    else:
        if not (args.axis1 and args.axis2):
            raise UsageError("give --spec or both --axis1 and --axis2")
        quantities = tuple(args.quantities.split(",")) if args.quantities else None
        base = _instance(args)
        spec = SweepSpec(base, _parse_axis(args.axis1), _parse_axis(args.axis2), *([quantities] if quantities else []))
    grid = run_sweep(spec)
    if args.format == "svg":
        emit_heatmap(grid, args.quantity, args.out)
    else:
        emit_csv(grid, args.out)
    dump({"out": args.out, "format": args.format, "shape": list(grid.shape), "spec": spec.to_dict()})
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    rows = utility_curve(_instance(args), args.steps)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            write_curve_csv(rows, fh)
        dump({"out": args.out, "points": len(rows)})
    else:
        write_curve_csv(rows, sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="datashare", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="closed-form SPE of one instance")
    _add_instance_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle-check", help="closed form vs brute force on seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--grid-points", type=int, default=10_001)
    p.add_argument("--no-candidates", action="store_true", help="do not inject the analytic thresholds")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("pareto", help="Pareto-improving price set")
    _add_instance_args(p, with_m=False)
    p.add_argument("--out", help="optional CSV sweep of m over [-r_f, r_f]")
    p.add_argument("--steps", type=int, default=2001)
    p.set_defaults(func=cmd_pareto)

    p = sub.add_parser("price", help="designer-optimal prices for alpha + lambda x")
    _add_instance_args(p, with_m=False)
    p.add_argument("--lambda", type=float, dest="lam", required=True)
    p.add_argument("--out", help="optional CSV sweep of (m, objective)")
    p.add_argument("--steps", type=int, default=2001)
    p.set_defaults(func=cmd_price)

    p = sub.add_parser("sweep", help="2-D parameter sweep to CSV or SVG")
    _add_instance_args(p)
    p.add_argument("--spec", metavar="JSON", help="sweep spec file")
    p.add_argument("--axis1", metavar="NAME:MIN:MAX:STEPS")
    p.add_argument("--axis2", metavar="NAME:MIN:MAX:STEPS")
    p.add_argument("--quantities", help="comma-separated subset of alpha,x,U,V,kind")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--quantity", default="kind", help="field rendered by --format svg")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("curve", help="Firm utility vs sharing level under GenAI's best reply")
    _add_instance_args(p)
    p.add_argument("--steps", type=int, default=1001)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_curve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (DataShareError, OSError, json.JSONDecodeError) as exc:
        print(f"datashare: error: {exc}", file=sys.stderr)
        return 1
    return 0  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
