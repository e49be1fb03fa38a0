#!/usr/bin/env python3
import argparse
import logging
from typing import Any, Dict

import sympy

from center.center import center_products, product_table_to_json
from center.generators import top_identities
from scripts.common import EXIT_OK, build_context, emit, parse_standalone, run_command
from utils.serialization import combination_to_text

logger = logging.getLogger(__name__)


def center_report(context, table) -> Dict[str, Any]:
    """Center basis with its match reports, top identities and multiplication table."""
    center = context.center
    report = center.to_json()
    report["h_Z"] = str(center.hilbert_polynomial().as_expr())
    report["top_identities"] = top_identities(center)
    report["products"] = product_table_to_json(table)
    return report


def _text(context, report: Dict[str, Any], table) -> str:
    center = context.center
    lines = [f"Center of {report['quiver']}", f"  h_Z(t) = {report['h_Z']}", "", "Basis:"]
    for e in center.elements:
        lines.append(f"  {e.name} (degree {e.degree}) = {e.element}")
    if center.match_reports:
        lines.append("\nClosed generators:")
        for r in center.match_reports:
            scalar = f" (scalar {r['scalar']})" if r["scalar"] else ""
            lines.append(f"  {r['name']}: {r['status']}{scalar}")
    if report["top_identities"]:
        lines.append("\nTop-degree identities:")
        for r in report["top_identities"]:
            lines.append(f"  {r['expression']}: {r['status']}")
    lines.append("\nNonzero products:")
    for (left, right), result in table.items():
        if result and left != "z0" and right != "z0":
            lines.append(f"  {left} {right} = {combination_to_text(result)}")
    return "\n".join(lines)


def _latex(context) -> str:
    center = context.center
    series = sympy.latex(center.hilbert_polynomial().as_expr(), order="rev-lex")
    names = ", ".join(e.name for e in center.elements)
    return f"h_Z(t) = {series}\n% basis: {names}"


def _body(args: argparse.Namespace) -> int:
    context = build_context(args.quiver)
    table = center_products(context.center)
    report = center_report(context, table)
    emit(report, lambda: _text(context, report, table), lambda: _latex(context))
    return EXIT_OK


def main(args=None):
    """
    Compute the center Z(A) = HH^0(A).

    Args:
        args: Parsed command-line arguments (for testing/integration)

    Returns:
        Exit code (0 for success, non-zero for errors)
    """
    if args is None:
        args = parse_standalone("Center of a preprojective algebra")
    return run_command(args, _body)


if __name__ == "__main__":
    import sys
    sys.exit(main())
