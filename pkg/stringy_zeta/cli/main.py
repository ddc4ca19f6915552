"""
Command-line front end.

    python3 app.py <subcommand> <input.json> [options]

Exit status: 0 on success, 1 on a domain error or a failed check, 2 on a
parse or configuration error.
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from ..config import FORMATS, LEVELS, load_config
from ..errors import ConfigError, InputError, StringyError
from ..io.reports import render
from .commands import HANDLERS

logger = logging.getLogger(__name__)

GERM_COMMANDS = {
    "discrepancies": "log discrepancies of the curves and branches",
    "classify": "klt, strictly-lc or not-lc",
    "veys": "stringy E-invariant and Euler number of a non-lc germ",
    "invariants": "same as veys",
    "compare-d": "compare lim_{d->1} z_d(s) with z(s)",
}


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format (default from config)")
    common.add_argument("--config", default=None, help="Settings file (default: ./stringy.json)")
    return common


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="stringy",
        description="Stringy zeta functions of surface germs and stratified log resolutions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, summary in GERM_COMMANDS.items():
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.add_argument("input", help="Germ JSON file")

    model = commands.add_parser("model", parents=[common], help="d-minimal or d-canonical model")
    model.add_argument("input", help="Germ JSON file")
    model.add_argument("--d", default=None, help="Boundary weight p/q in [0, 1]")
    model.add_argument("--canonical", action="store_true", help="Build the d-canonical model")

    zeta = commands.add_parser("zeta", parents=[common], help="stringy zeta function")
    zeta.add_argument("input", help="Germ or stratified JSON file")
    zeta.add_argument("--d", default=None, help="Boundary weight p/q in [0, 1] (germs only)")
    zeta.add_argument("--level", choices=LEVELS, default=None)
    zeta.add_argument("--canonical", action="store_true", help="Assemble over the d-canonical model")
    zeta.add_argument("--eval-s1", action="store_true", help="Print the value (or pole) at s = 1")

    batyrev = commands.add_parser("batyrev", parents=[common], help="Batyrev expression of a germ")
    batyrev.add_argument("input", help="Germ JSON file")
    batyrev.add_argument("--level", choices=LEVELS, default=None)

    duality = commands.add_parser("check-duality", parents=[common], help="functional equation")
    duality.add_argument("input", help="Complete stratified JSON file")

    blowup = commands.add_parser("check-blowup", parents=[common], help="random blow-up cross-checks")
    blowup.add_argument("input", help="Germ JSON file")
    blowup.add_argument("--trials", type=int, default=None)
    blowup.add_argument("--seed", type=int, default=None)
    blowup.add_argument("--d", default=None, help="Boundary weight p/q in [0, 1]")

    oracle = commands.add_parser("oracle-am", parents=[common], help="hyperplane identity, brute force vs closed form")
    oracle.add_argument("--r", type=int, required=True, help="Codimension of the center")
    oracle.add_argument("--m", type=int, required=True, help="Number of divisors containing it")
    oracle.add_argument("--k", nargs="+", default=None, help="nu-weights, one per divisor")
    oracle.add_argument("--dwt", nargs="+", default=None, help="N-weights, one per divisor")
    oracle.add_argument("--seed", type=int, default=None, help="Seed for weights not given")

    return parser.parse_args(argv)


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {key: getattr(args, key, None) for key in ("format", "level", "d", "trials", "seed")}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as error:
        return int(error.code or 0)

    try:
        settings = load_config(args.config, _overrides(args))
        logging.getLogger().setLevel(settings.log_level)
        report, ok = HANDLERS[args.command](args, settings)
    except (InputError, ConfigError) as error:
        print(f"error: {error.error_name}: {error}", file=sys.stderr)
        return 2
    except StringyError as error:
        print(f"error: {error.error_name}: {error}", file=sys.stderr)
        return 1

    sys.stdout.write(render(report, settings.format))
    return 0 if ok else 1
