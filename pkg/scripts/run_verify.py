#!/usr/bin/env python3
import argparse
import logging
from typing import List, Optional

from algebra.cache import BasisCache
from config.config_manager import get_config
from quiver.dynkin import parse_selectors
from scripts.common import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    dump_json,
    output_format,
    parse_standalone,
    run_command
)
from verification.checks import FAIL, VerificationError, check_names
from verification.verifier import QuiverVerifier

logger = logging.getLogger(__name__)


def verify_quivers(selectors: str, checks: Optional[List[str]] = None, include_slow: bool = True,
                   report_file: Optional[str] = None) -> QuiverVerifier:
    """
    Run the verification suite on a comma-separated list of quivers.

    Args:
        selectors: e.g. "d6,d7,e6"
        checks: Restrict to these check names
        include_slow: Also run checks flagged slow
        report_file: Save the JSON report here when given

    Returns:
        The verifier holding the results
    """
    config = get_config()
    verifier = QuiverVerifier(parse_selectors(selectors), config.max_degree, BasisCache(), checks, include_slow)
    verifier.verify()
    if report_file:
        verifier.save_report(report_file)
    return verifier


def _body(args: argparse.Namespace) -> int:
    checks = [c.strip() for c in args.checks.split(",")] if getattr(args, "checks", None) else None
    try:
        verifier = verify_quivers(args.quiver, checks, not getattr(args, "skip_slow", False),
                                  getattr(args, "report", None))
    except VerificationError as e:
        logger.error(str(e))
        return EXIT_USAGE
    if output_format() == "json":
        print(dump_json(verifier.to_json()))
    else:
        verifier.print_summary()
    if not verifier.passed:
        first = next(r for r in verifier.results if r.status == FAIL)
        logger.error(f"Verification failed: {first.quiver} {first.check}: {first.detail}")
        return EXIT_FAILURE
    return EXIT_OK


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--checks", type=str, help=f"Comma-separated subset of: {', '.join(check_names())}")
    parser.add_argument("--skip-slow", dest="skip_slow", action="store_true", help="Skip checks flagged slow")
    parser.add_argument("--report", type=str, help="Save the JSON report to this file")


def main(args=None):
    """
    Run the verification suite.

    Args:
        args: Parsed command-line arguments (for testing/integration)

    Returns:
        Exit code (0 when every check passes, 1 on a failed check, 2 on a usage error)
    """
    if args is None:
        args = parse_standalone("Verify computed invariants against reference values", add_arguments,
                                multiple=True)
    return run_command(args, _body)


if __name__ == "__main__":
    import sys
    sys.exit(main())
