#!/usr/bin/env python3
import argparse
import sys

from scripts.common import EXIT_USAGE, add_common_arguments
from scripts import run_basis, run_center, run_hh, run_hilbert, run_info, run_products, run_verify

COMMANDS = {
    "info": (run_info, "Root data, nu and the HH^i degree ranges", None),
    "basis": (run_basis, "Build or load the path basis and report its dimensions", run_basis.add_arguments),
    "hilbert": (run_hilbert, "Hilbert matrix H_A(t), checked against the closed form", None),
    "center": (run_center, "Center Z(A) with generators and products", None),
    "hh": (run_hh, "HH^0 .. HH^6 with named bases", run_hh.add_arguments),
    "products": (run_products, "Cup-product table and pairing matrices", run_products.add_arguments),
    "verify": (run_verify, "Run the verification suite on one or more quivers", run_verify.add_arguments),
}


def setup_parser() -> argparse.ArgumentParser:
    """
    Set up the argument parser for the main CLI.

    Returns:
        Configured argument parser
    """
    parser = argparse.ArgumentParser(description="Hochschild cohomology of preprojective algebras of Dynkin type")
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    for name, (_, help_text, extra) in COMMANDS.items():
        subparser = subparsers.add_parser(name, help=help_text)
        add_common_arguments(subparser, multiple=(name == "verify"))
        if extra:
            extra(subparser)

    return parser


def main(argv=None):
    """Main entry point for the application."""
    parser = setup_parser()
    # argparse exits with status 2 on usage errors
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    module = COMMANDS[args.command][0]
    return module.main(args)


if __name__ == "__main__":
    sys.exit(main())
