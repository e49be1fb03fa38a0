#!/usr/bin/env python3
import argparse
import logging
from typing import Any, Dict

import sympy

from products.cup import pair_matrix
from scripts.common import EXIT_OK, build_context, emit, parse_standalone, run_command
from utils.serialization import format_rational

logger = logging.getLogger(__name__)


def products_report(context) -> Dict[str, Any]:
    """
    The full cup-product table with the pairing matrices.

    Raises:
        ProductError: If a structural or associativity check fails
    """
    report = context.table.to_json()
    report.update(context.products.summary())
    return report


def _matrix_text(label: str, indices, matrix) -> str:
    lines = [f"{label} over {indices}:"]
    lines.extend("  " + " ".join(f"{format_rational(v):>7}" for v in row) for row in matrix)
    return "\n".join(lines)


def _text(context, show_zero: bool) -> str:
    table = context.table
    frame = table.to_frame()
    if not show_zero:
        frame = frame[frame["result"] != "0"]
    lines = [f"Cup products of {table.quiver}: {len(table)} evaluated, {len(table.nonzero())} nonzero", "",
             frame.to_string(index=False), "", "HH^i x HH^j for 1 <= i <= j <= 5:"]
    lines.extend(f"  ({v.i}, {v.j}) {v.kind}: {v.reason}" for v in table.verdicts)
    lines.append("")
    lines.append(_matrix_text("M_alpha", *pair_matrix(context.products, "alpha")))
    if context.data.y_indices:
        lines.append(_matrix_text("M_beta", *pair_matrix(context.products, "beta")))
    held = sum(1 for c in table.checks if c["status"] == "holds")
    lines.append(f"\n{held} of {len(table.checks)} associativity checks hold")
    return "\n".join(lines)


def _latex(context) -> str:
    products = context.products
    parts = [f"M_\\alpha = {sympy.latex(sympy.Matrix(products.m_alpha()))}"]
    if context.data.y_indices:
        parts.append(f"M_\\beta = {sympy.latex(sympy.Matrix(products.m_beta()))}")
        parts.append(f"\\kappa = {products.kappa().to_latex()}")
    return "\n\n".join(parts)


def _body(args: argparse.Namespace) -> int:
    context = build_context(args.quiver)
    report = products_report(context)
    emit(report, lambda: _text(context, getattr(args, "all", False)), lambda: _latex(context))
    return EXIT_OK


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--all", action="store_true", help="Also list products that vanish")


def main(args=None):
    """
    Compute the cup-product table of HH^*.

    Args:
        args: Parsed command-line arguments (for testing/integration)

    Returns:
        Exit code (0 for success, non-zero for errors)
    """
    if args is None:
        args = parse_standalone("Cup products on Hochschild cohomology", add_arguments)
    return run_command(args, _body)


if __name__ == "__main__":
    import sys
    sys.exit(main())
