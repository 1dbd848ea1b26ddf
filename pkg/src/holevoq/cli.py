"""Command line interface.

Subcommands: dbhq, gai, fuzz, figure, verify-properties. Exit codes: 0 on
success, 2 for file parse errors (reported with line and column), 3 for
ensemble invariant violations, 4 when a command needs a qubit ensemble and
gets something larger.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .ensemble import EnsembleFormatError, dbhq, load_ensemble, purity
from .measurements import OptimizerConfig, UnsupportedDimensionError, gai
from .notions import DistanceNotion, from_name
from .qubit import example_ensemble, nc_closed
from .verify import build_report, report_to_json, run_axiom_suite, run_inequality_fuzz

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_UNSUPPORTED = 4

NOTION_NAMES = [n.value for n in DistanceNotion]


def _load_or_exit(path: str):
    try:
        return load_ensemble(path)
    except json.JSONDecodeError as exc:
        print(
            f"error: cannot parse {path}: line {exc.lineno}, column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_PARSE)
    except (EnsembleFormatError, ValueError) as exc:
        print(f"error: invalid ensemble in {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVARIANT)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parse_grid(spec: str) -> tuple[int, int]:
    try:
        az_s, pol_s = spec.lower().split("x")
        az, pol = int(az_s), int(pol_s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"grid must look like 128x64, got {spec!r}"
        ) from None
    # mirrors the OptimizerConfig floor so the CLI fails at parse time
    if az < 4 or pol < 3:
        raise argparse.ArgumentTypeError(f"grid must be at least 4x3, got {spec!r}")
    return az, pol


def cmd_dbhq(args) -> int:
    e = _load_or_exit(args.file)
    value = dbhq(e, from_name(args.notion))
    print(f"{value:.12f}")
    return EXIT_OK


def cmd_gai(args) -> int:
    e = _load_or_exit(args.file)
    az, pol = args.grid
    opt = OptimizerConfig(grid_azimuth=az, grid_polar=pol, tol=args.tol, seed=args.seed)
    try:
        result = gai(e, from_name(args.notion), opt)
    except UnsupportedDimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    print(f"value {result.value:.12f}")
    print("axis " + " ".join(f"{c:.12f}" for c in result.axis))
    print(f"direction {result.direction}")
    print(f"iterations {result.iterations}")
    return EXIT_OK


def cmd_fuzz(args) -> int:
    notions = tuple(from_name(n) for n in args.notions.split(",")) if args.notions \
        else tuple(DistanceNotion)
    start = time.perf_counter()
    records = run_inequality_fuzz(args.trials, args.seed, notions=notions)
    elapsed = time.perf_counter() - start
    notion_echo = ",".join(n.value for n in notions)
    command = (
        f"fuzz --trials {args.trials} --seed {args.seed} "
        f"--notions {notion_echo} --dim {args.dim}"
    )
    report = build_report(command, records, elapsed)
    _write_text(report_to_json(report), args.out)
    print(f"wall time: {elapsed:.2f} s", file=sys.stderr)
    return EXIT_OK


def cmd_verify_properties(args) -> int:
    start = time.perf_counter()
    records = run_axiom_suite(args.trials, args.trials, args.trials, args.seed)
    elapsed = time.perf_counter() - start
    command = f"verify-properties --trials {args.trials} --seed {args.seed}"
    report = build_report(command, records, elapsed)
    _write_text(report_to_json(report), args.out)
    print(f"wall time: {elapsed:.2f} s", file=sys.stderr)
    return EXIT_OK


def _figure_rows(which: int, p_hat: float, theta_steps: int):
    thetas = np.linspace(0.0, math.pi / 2.0, theta_steps)
    notion = DistanceNotion.RELATIVE_ENTROPY if which == 1 else DistanceNotion.BHATTACHARYYA
    for theta in thetas:
        e = example_ensemble(float(theta), p_hat)
        bound = dbhq(e, notion)
        measured = gai(e, notion).value
        n_c = nc_closed(e)
        if which == 1:
            yield theta, measured, bound, n_c, bound - measured
        else:
            gamma = purity(e.average)
            gap = measured - bound
            yield theta, measured, bound, gamma, n_c, gap, (1.0 - gamma) * n_c


def cmd_figure(args) -> int:
    if args.theta_steps < 2:
        print("error: --theta-steps must be at least 2", file=sys.stderr)
        return EXIT_PARSE
    if not 0.0 <= args.p_hat <= 1.0:
        print("error: --p-hat must lie in [0, 1]", file=sys.stderr)
        return EXIT_PARSE
    header = "theta,I_Sr,X_Sr,N_c,gap" if args.which == 1 \
        else "theta,I_B,X_B,gamma,N_c,gap,scaled"
    lines = [header]
    for row in _figure_rows(args.which, args.p_hat, args.theta_steps):
        lines.append(",".join(f"{v:.15g}" for v in row))
    _write_text("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holevoq",
        description="Distance-based ensemble bounds and accessible-information search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dbhq", help="ensemble bound for a notion")
    p.add_argument("--file", required=True, help="ensemble JSON file")
    p.add_argument("--notion", required=True, choices=NOTION_NAMES)
    p.set_defaults(func=cmd_dbhq)

    p = sub.add_parser("gai", help="extremal measured divergence over qubit axes")
    p.add_argument("--file", required=True, help="ensemble JSON file")
    p.add_argument("--notion", required=True, choices=NOTION_NAMES)
    p.add_argument("--grid", type=_parse_grid, default=(128, 64),
                   help="coarse grid, azimuth x polar (default 128x64)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="refinement objective tolerance (default 1e-10)")
    p.add_argument("--seed", type=int, default=0, help="tie-break jitter seed")
    p.set_defaults(func=cmd_gai)

    p = sub.add_parser("fuzz", help="random inequality checks, JSON report")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--notions", default=None,
                   help="comma-separated subset (default: all five)")
    p.add_argument("--dim", type=int, default=2, choices=[2],
                   help="state dimension (only 2 is supported)")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("figure", help="CSV sweep over theta for the example ensemble")
    p.add_argument("which", type=int, choices=[1, 2],
                   help="1: relative entropy sweep, 2: Bhattacharyya sweep")
    p.add_argument("--p-hat", type=float, default=0.5, dest="p_hat")
    p.add_argument("--theta-steps", type=int, default=181, dest="theta_steps")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify-properties", help="distance axiom fuzz, JSON report")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify_properties)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
