"""Command line driver: `verify` runs the lemma-by-lemma catalog,
`building` runs the ball/transitivity suite, `enumerate` writes similitude
lists.  Human-readable lines go to stdout; --json writes the full report
(schema fpplane-report/1; timestamps and wall times live in the ignorable
header so identical runs produce byte-identical check sections)."""

from __future__ import annotations

import argparse
import datetime
import json
import sys

from .checks import Config, Report, run_building, run_checks
from .lattice_group import enumerate_similitudes, serialize_similitudes


def _print_report(report: Report) -> None:
    for r in report.records:
        line = f"{r.status:13s} {r.id}: {r.statement}"
        if r.seconds >= 0.005:
            line += f"  ({r.seconds:.2f}s)"
        print(line)
    counts = report.counts()
    summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    print(f"-- {summary}")


def _write_json(report: Report, path: str) -> None:
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    doc = report.to_json_dict(generated_at=stamp)
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--precision", type=int, default=64,
                        help="2-adic working precision in bits")
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="float tolerance for inequality checks")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for sampled identities and the Sylow "
                        "construction")
    parser.add_argument("--max-radius", type=int, default=3,
                        help="ceiling for building computations")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="also write the report as JSON")


def _config(args) -> Config:
    return Config(
        precision=args.precision,
        tolerance=args.tolerance,
        seed=args.seed,
        max_radius=args.max_radius,
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fpplane",
        description="exact verification of the arithmetic behind a fake "
        "projective plane",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the lemma catalog")
    p_verify.add_argument("--filter", default=None,
                          help="only run checks whose id starts with this")
    _add_common(p_verify)

    p_building = sub.add_parser(
        "building", help="ball sizes and vertex transitivity"
    )
    p_building.add_argument("--radius", type=int, default=1)
    p_building.add_argument(
        "--factors", default="1,2,4,8",
        help="comma-separated similitude factors (powers of 2)",
    )
    _add_common(p_building)

    p_enum = sub.add_parser("enumerate", help="write a similitude list")
    p_enum.add_argument("--factor", type=int, required=True)
    p_enum.add_argument("--output", default=None,
                        help="output path (default: stdout)")
    _add_common(p_enum)

    args = parser.parse_args(argv)
    cfg = _config(args)

    if args.command == "verify":
        report = run_checks(cfg, args.filter)
        _print_report(report)
        if args.json:
            _write_json(report, args.json)
        return 1 if report.failed else 0

    if args.command == "building":
        radius = args.radius
        if radius > cfg.max_radius:
            print(
                f"radius {radius} exceeds --max-radius {cfg.max_radius}",
                file=sys.stderr,
            )
            return 2
        factors = tuple(int(x) for x in args.factors.split(","))
        report = run_building(cfg, radius, factors)
        _print_report(report)
        if args.json:
            _write_json(report, args.json)
        return 2 if report.failed else 0

    if args.command == "enumerate":
        sims = enumerate_similitudes(args.factor)
        text = serialize_similitudes(sims, args.factor)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
            print(f"wrote {len(sims)} similitudes to {args.output}")
        else:
            sys.stdout.write(text)
        return 0

    return 2  # unreachable with required=True


if __name__ == "__main__":
    sys.exit(main())
