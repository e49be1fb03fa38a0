#!/usr/bin/env python3
import argparse
import logging
from typing import Any, Dict

from quiver.dynkin import parse_selector
from quiver.root_data import root_data
from scripts.common import EXIT_OK, emit, parse_standalone, run_command

logger = logging.getLogger(__name__)


def info_report(selector: str) -> Dict[str, Any]:
    """
    Root data of a quiver with the HH^i degree-range table.

    Args:
        selector: Quiver selector

    Returns:
        JSON-ready report
    """
    quiver = parse_selector(selector)
    data = root_data(quiver)
    report = {"quiver": quiver.to_json()}
    report.update(data.to_json())
    report["top_degree"] = data.top_degree
    report["y_indices"] = list(data.y_indices)
    report["degree_ranges"] = {str(i): list(r) for i, r in data.degree_ranges().items()}
    return report


def _text(report: Dict[str, Any]) -> str:
    nu = ", ".join(f"{v}->{w}" for v, w in report["nu"].items() if int(v) != w) or "identity"
    lines = [
        f"Quiver {report['quiver']['name']}",
        f"  h = {report['h']}",
        f"  exponents = {', '.join(str(m) for m in report['exponents'])}",
        f"  nu: {nu}",
        f"  r+ = {report['r_plus']}, r- = {report['r_minus']}",
        f"  F = {{{', '.join(str(v) for v in report['F'])}}}",
        f"  top degree = {report['top_degree']}",
        "",
        "  i   degree range of HH^i",
    ]
    for i, (low, high) in report["degree_ranges"].items():
        lines.append(f"  {i}   [{low}, {high}]")
    return "\n".join(lines)


def _latex(report: Dict[str, Any]) -> str:
    rows = " \\\\\n".join(f"{i} & {low} & {high}" for i, (low, high) in report["degree_ranges"].items())
    return ("\\begin{tabular}{ccc}\n"
            "$i$ & lowest degree & highest degree \\\\ \\hline\n"
            f"{rows}\n"
            "\\end{tabular}")


def _body(args: argparse.Namespace) -> int:
    report = info_report(args.quiver)
    emit(report, lambda: _text(report), lambda: _latex(report))
    return EXIT_OK


def main(args=None):
    """Print the root data of a quiver; returns the exit code."""
    if args is None:
        args = parse_standalone("Root data and degree ranges of a Dynkin quiver")
    return run_command(args, _body)


if __name__ == "__main__":
    import sys
    sys.exit(main())
