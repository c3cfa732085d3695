#!/usr/bin/env python
"""
Author: Brian Gunnison

Brief: Command-line entry point: noncrossing partitions, cumulants, free
convolution, Young diagram analytics and seeded random-matrix experiments.

Details: One binary with subcommands (nc, cumulants, freeconv, diagram, rmt).
Results go to stdout (or --out), logs go to stderr. Exit codes: 0 success,
2 usage error, 3 size cap exceeded, 4 numeric failure.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import argparse
import sys
from typing import Optional

import numpy as np

from src.adapter.formats import write_output
from src.errors import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, FreeCalcError, UsageError
from src.orchestrator import commands
from src.util import log
from src.util.debug import set_verbose
from src.util.env import get_env_int, load_env


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", default=None, help="Output file (default stdout)")
    common.add_argument("--precision", type=int, default=None, help="Significant digits of decimal renderings")
    common.add_argument("--verbose", action="store_true", help="Trace intermediate values to stderr")

    ap = argparse.ArgumentParser(prog="freecalc", description="Free probability calculator")
    sub = ap.add_subparsers(dest="command", required=True)

    nc = sub.add_parser("nc", parents=[common], help="List the noncrossing partitions of {1..n}")
    nc.add_argument("n", type=int)
    nc.add_argument("--perm", action="store_true", help="Annotate each partition with its geodesic permutation")

    cu = sub.add_parser("cumulants", parents=[common], help="Free or classical cumulants of a moment sequence")
    src = cu.add_mutually_exclusive_group(required=True)
    src.add_argument("--moments", help="JSON sequence or measure file")
    src.add_argument("--law", help="semicircle:V | arcsine02 | bernoulli:P:A:B | point:A | proj:T")
    cu.add_argument("--kind", choices=["free", "classical", "moments"], default="free")
    cu.add_argument("--order", type=int, default=None, help="Truncation order K")

    fc = sub.add_parser("freeconv", parents=[common], help="Moments and free cumulants of a free sum")
    fc.add_argument("a", help="Law string or JSON file")
    fc.add_argument("b", help="Law string or JSON file")
    fc.add_argument("--order", type=int, default=None)
    fc.add_argument("--compress", default=None, help="Free compression ratio t in (0,1]")
    fc.add_argument("--dilate", default=None, help="Scale the result by lambda")

    dg = sub.add_parser("diagram", parents=[common], help="Young diagram analytics")
    dg.add_argument(
        "action", choices=["interlacing", "transition", "cumulants", "char", "factor", "induce", "restrict", "balanced"]
    )
    shape = dg.add_mutually_exclusive_group(required=True)
    shape.add_argument("--rows", help="Row lengths, e.g. 3,2,2,1")
    shape.add_argument("--diagram", help='JSON file {"rows": [...]} or {"minima": [...], "maxima": [...]}')
    dg.add_argument("--cycles", default=None, help="Cycle type, e.g. 2:1,3:2, or a JSON file")
    dg.add_argument("--cycles2", default=None, help="Second cycle type (factor)")
    dg.add_argument("--with", dest="with_rows", default=None, help="Second diagram (induce)")
    dg.add_argument("--order", type=int, default=None)
    dg.add_argument("--balance", type=float, default=2.0, help="Constant A of the balance check")
    dg.add_argument("--to", dest="to_size", type=int, default=None, help="Target size m of the restriction (restrict)")
    dg.add_argument("--oracle", action="store_true", help="Also decompose the induced or restricted representation")

    rm = sub.add_parser("rmt", parents=[common], help="Seeded Haar-rotated matrix experiments")
    rm.add_argument("experiment", choices=["sum", "word", "submatrix", "entrycum", "haar"])
    rm.add_argument("--seed", type=int, default=None, help="Master seed (required unless the config gives one)")
    rm.add_argument("-N", dest="N", type=int, default=None)
    rm.add_argument("--trials", type=int, default=None)
    rm.add_argument("--law-a", default=None)
    rm.add_argument("--law-b", default=None)
    rm.add_argument("--law", default=None, help="Spectrum law of the single-matrix experiments")
    rm.add_argument("--word", type=_int_list, default=None, help="Letters, e.g. 1,2,1,2")
    rm.add_argument("-t", dest="t", default=None, help="Corner ratio t (submatrix)")
    rm.add_argument("--bins", type=int, default=None)
    rm.add_argument("--n-max", dest="n_max", type=int, default=None)
    rm.add_argument("--order", type=int, default=None)
    rm.add_argument("--config", default=None, help="Experiment config JSON")
    rm.add_argument("--preset", default=None, help="Preset name from presets/experiments.json")
    return ap


def _spectra_override(args: argparse.Namespace) -> Optional[list[str]]:
    if args.experiment in ("sum", "word") and args.law:
        raise UsageError(f"rmt {args.experiment} takes two spectra; use --law-a and --law-b instead of --law")
    if args.experiment == "sum" and (args.law_a or args.law_b):
        return [args.law_a or "point:0", args.law_b or "point:0"]
    if args.experiment == "word" and (args.law_a or args.law_b):
        return [s for s in (args.law_a, args.law_b) if s]
    if args.law:
        return [args.law]
    return None


def run(args: argparse.Namespace) -> str:
    precision = args.precision if args.precision is not None else get_env_int("FREECALC_PRECISION", 12, lo=1, hi=30)
    if args.command == "nc":
        return commands.cmd_nc(args.n, args.perm, args.fmt)
    if args.command == "cumulants":
        return commands.cmd_cumulants(args.moments, args.law, args.kind, args.order, args.fmt, precision)
    if args.command == "freeconv":
        return commands.cmd_freeconv(args.a, args.b, args.order, args.compress, args.dilate, args.fmt, precision)
    if args.command == "diagram":
        return commands.cmd_diagram(
            args.action, args.rows, args.diagram, args.cycles, args.cycles2, args.with_rows,
            args.order, args.balance, args.oracle, args.fmt, precision, to_size=args.to_size,
        )
    overrides = {
        "seed": args.seed, "N": args.N, "trials": args.trials, "spectra": _spectra_override(args),
        "word": args.word, "t": args.t, "bins": args.bins, "n_max": args.n_max, "order": args.order,
    }
    cfg = commands.build_config(args.experiment, args.config, args.preset, overrides)
    return commands.cmd_rmt(cfg, args.fmt, precision)


def main(argv: list[str]) -> int:
    load_env()
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.verbose:
        set_verbose(True)
    try:
        write_output(run(args), args.out)
        if args.out and args.out != "-":
            log.success(f"Wrote {args.out}")
    except FreeCalcError as e:
        log.error(str(e))
        return e.exit_code
    except np.linalg.LinAlgError as e:
        log.error(f"Eigensolver failure: {e}")
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
