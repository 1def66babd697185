"""dirac-pairings command line.

Exit codes: 0 when every identity of the report holds, 1 when one fails, 2 for usage
errors, unreadable inputs and any other library error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from collections.abc import Sequence
from pathlib import Path

from dirac_pairings import __version__
from dirac_pairings.cli import commands
from dirac_pairings.cli.reports import FORMATS
from dirac_pairings.config import get_settings
from dirac_pairings.errors import DiracPairingsError, IdentityFailed
from dirac_pairings.fredholm import SUITES
from dirac_pairings.lab import LAB_RUNS

logger = logging.getLogger(__name__)

LOG_LEVELS = ("debug", "info", "warning", "error")


def _common() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--group", default="sl2R", help="root datum preset (default: sl2R)")
    parser.add_argument("--datum", help="root datum JSON file, replaces --group")
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    parser.add_argument("--log-level", choices=LOG_LEVELS)
    return parser


def _sources() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--findim", metavar="A..B", help="finite-dimensional modules sum c_i omega_i, c_i in A..B")
    parser.add_argument("--hw", action="append", metavar="W", help="finite-dimensional highest weight, repeatable")
    parser.add_argument("--ds", metavar="A..B", help="discrete series with infinitesimal character n*rho")
    parser.add_argument("--chi", metavar="W", help="Harish-Chandra parameter on the spin lattice")
    parser.add_argument("--chamber", type=int, default=0)
    parser.add_argument("--kind", choices=("ds", "limit", "combination"), default="ds")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-pairings",
        description="Exact Euler-Poincare, Dirac-index and elliptic pairings for equal-rank pairs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common, sources = _common(), _sources()

    root_data = sub.add_parser("root-data", parents=[common], help="show a root datum")
    root_data.add_argument("action", choices=("show",))
    root_data.set_defaults(handler=commands.root_data_show)

    index = sub.add_parser("dirac-index", parents=[common, sources], help="Dirac indices of modules")
    index.set_defaults(handler=commands.dirac_index)

    pair = sub.add_parser("pair", parents=[common, sources], help="Gram matrices of a pairing")
    pair.add_argument("pairing", choices=tuple(commands.PAIRINGS))
    pair.set_defaults(handler=commands.pair)

    fredholm = sub.add_parser("fredholm", parents=[common], help="random Fredholm pair suites")
    fredholm.add_argument("action", choices=("check",))
    fredholm.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    fredholm.add_argument("--seed", type=int)
    fredholm.add_argument("--instances", type=int, help="instances per suite (default: per-suite counts)")
    fredholm.add_argument(
        "--lab-exports",
        type=int,
        default=3,
        metavar="N",
        help="lab pairs F_n, F_m with n, m <= N join the perturbation suite (default: 3, -1 for none)",
    )
    fredholm.set_defaults(handler=commands.fredholm_check)

    lab = sub.add_parser("lab", parents=[common], help="matrix identities on the sl(2, R) lab")
    lab.add_argument("run", choices=LAB_RUNS)
    lab.add_argument("--max", type=int, help="largest n of the modules F_n (default: DIRAC_PAIRINGS_LAB_MAX)")
    lab.add_argument("--module", action="append", metavar="PATH", help="matrix module JSON, repeatable")
    lab.set_defaults(handler=commands.lab)
    return parser


def _origin(error: BaseException) -> str:
    tb = error.__traceback__
    if tb is None:
        return "dirac_pairings"
    while tb.tb_next is not None:
        tb = tb.tb_next
    return tb.tb_frame.f_globals.get("__name__", "dirac_pairings")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    level = (args.log_level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    start = time.perf_counter()
    try:
        report = args.handler(args)
    except IdentityFailed as e:
        print(f"identity failed in {_origin(e)}: {e}", file=sys.stderr)
        return 1
    except DiracPairingsError as e:
        print(f"error in {_origin(e)}: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    if args.timing:
        report.timing = time.perf_counter() - start
    logger.info("%s finished: %d identities, ok=%s", report.command, len(report.identities), report.ok)

    text = report.render(args.format)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as e:
            print(f"error: cannot write {args.output}: {e}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
