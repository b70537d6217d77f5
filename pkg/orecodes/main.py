"""Command-line entry point.

Subcommands: ctx, code, dualcheck, residue-demo and selftest. Each prints a
JSON document on stdout; logs go to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from config import get_settings
from core.errors import OreCodesError, ParameterError
from cli.commands import cmd_code, cmd_ctx, cmd_dualcheck, cmd_residue_demo, cmd_selftest


# Configure logging
logger = logging.getLogger(__name__)


def _context_parser() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("context")
    group.add_argument("--kind", choices=["frobenius", "differential"], default="frobenius")
    group.add_argument("--p", type=int, default=3, help="Characteristic")
    group.add_argument("--e", type=int, default=1, help="[F:F_p] (Frobenius)")
    group.add_argument("--s", type=int, default=2, help="[K:F] (Frobenius)")
    group.add_argument("--twist", default=None, help="Element a with delta = a (theta - id)")
    group.add_argument("--modulus", default=None, help="Ascending defining polynomial of K over F_p, e.g. \"1,0,1\" (Frobenius)")
    group.add_argument("--a", default=None, help="Element a with delta = a d/dt")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="Log at INFO on stderr")
    common.add_argument("--seed", type=int, default=None, help="Randomness seed")
    context = _context_parser()

    parser = argparse.ArgumentParser(
        prog="orecodes",
        description="Ore polynomial rings, skew residues and sum-rank codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ctx = sub.add_parser("ctx", parents=[common, context], help="Describe a context")
    p_ctx.set_defaults(handler=cmd_ctx)

    p_code = sub.add_parser("code", parents=[common, context], help="Build an LRS or LG code")
    p_code.add_argument("--family", choices=["lrs", "lg"], required=True)
    p_code.add_argument("--k", type=int, required=True)
    p_code.add_argument("--points", required=True, help="';'-separated evaluation points")
    p_code.add_argument("--subspaces", required=True, help="JSON file with one subspace per point")
    p_code.add_argument("--check", choices=["msrd"], default=None)
    p_code.set_defaults(handler=cmd_code)

    p_dual = sub.add_parser("dualcheck", parents=[common, context], help="Verify LRS^perp = LG")
    p_dual.add_argument("--k", type=int, required=True)
    p_dual.add_argument("--points", required=True, help="';'-separated evaluation points")
    p_dual.add_argument("--subspaces", required=True, help="JSON file with one subspace per point")
    p_dual.add_argument("--corrupt", action="store_true", help="Perturb one LG generator")
    p_dual.set_defaults(handler=cmd_dualcheck)

    p_res = sub.add_parser("residue-demo", parents=[common, context], help="Residue theorem on a fraction")
    p_res.add_argument("--num", required=True, help="';'-separated Ore polynomial coefficients")
    p_res.add_argument("--den", required=True, help="';'-separated central polynomial coefficients")
    p_res.set_defaults(handler=cmd_residue_demo)

    p_self = sub.add_parser("selftest", parents=[common], help="Run the acceptance suites")
    p_self.add_argument("--suites", type=int, nargs="*", default=None, help="Suite numbers (default: all)")
    p_self.set_defaults(handler=cmd_selftest)

    return parser


def configure_logging(verbose: bool) -> None:
    """Configure logging to stderr; stdout carries JSON only."""
    level = "INFO" if verbose else get_settings().log_level
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        configure_logging(args.verbose)
    except ValidationError as e:
        sys.stderr.write(f"invalid settings: {e}\n")
        return ParameterError.exit_code

    try:
        return args.handler(args)
    except OreCodesError as e:
        logger.error(f"[CLI] {type(e).__name__}: {e}")
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        return e.exit_code
    except ValidationError as e:
        logger.error(f"[CLI] invalid settings: {e}")
        sys.stderr.write(f"invalid settings: {e}\n")
        return ParameterError.exit_code


if __name__ == "__main__":
    sys.exit(main())
