#!/usr/bin/env python3
import argparse
import logging
from typing import Any, Dict, Optional, Tuple

import pandas as pd

from hochschild.eta import eta_signed_matrix
from scripts.common import EXIT_OK, EXIT_USAGE, build_context, emit, parse_standalone, run_command

logger = logging.getLogger(__name__)


def dimension_frame(tables: Dict[int, Dict[int, int]]) -> pd.DataFrame:
    """Rows HH^i, columns internal degrees, zero where HH^i vanishes."""
    degrees = sorted({d for table in tables.values() for d in table}, reverse=True)
    rows = {f"HH^{i}": [table.get(d, 0) for d in degrees] for i, table in sorted(tables.items())}
    return pd.DataFrame.from_dict(rows, orient="index", columns=degrees)


def hh_report(context, index: Optional[int] = None) -> Tuple[Dict[str, Any], Dict[int, Dict[int, int]]]:
    """
    Dimensions of HH^0 .. HH^6, the named classes and H^eta.

    Raises:
        CohomologyError: If a dimension or a named relation disagrees with its prediction
    """
    tables = context.cohomology.check_dimensions()
    named = context.named
    report = named.to_json()
    report["dimensions"] = {str(i): {str(d): n for d, n in t.items()} for i, t in tables.items()}
    report["eta"] = eta_signed_matrix(context.algebra).to_json()
    if index is not None:
        report["named"] = [e for e in report["named"] if e["index"] == index]
    return report, tables


def _text(context, report: Dict[str, Any], tables) -> str:
    lines = [f"Hochschild cohomology of {report['quiver']}", "", dimension_frame(tables).to_string(), "",
             "Named classes:"]
    for e in report["named"]:
        lines.append(f"  HH^{e['index']}({e['degree']}): {e['name']} [{e['source']}]")
    if report["matches"]:
        lines.append("\nClosed forms:")
        lines.extend(f"  {r['name']}: {r['status']}" for r in report["matches"])
    held = sum(1 for r in report["relations"] if r["status"] == "holds")
    lines.append(f"\n{held} of {len(report['relations'])} relations hold")
    eta = report["eta"]
    lines.append(f"\nH^eta over F = {eta['vertices']}:")
    lines.extend("  " + " ".join(f"{v:>6}" for v in row) for row in eta["matrix"])
    return "\n".join(lines)


def _latex(context, tables) -> str:
    frame = dimension_frame(tables)
    header = " & ".join(["$i$"] + [str(d) for d in frame.columns])
    body = " \\\\\n".join(" & ".join([str(i)] + [str(v) for v in row]) for i, row in enumerate(frame.values))
    table = (f"\\begin{{tabular}}{{{'c' * (len(frame.columns) + 1)}}}\n{header} \\\\ \\hline\n"
             f"{body}\n\\end{{tabular}}")
    return f"{table}\n\nH_A^\\eta = {eta_signed_matrix(context.algebra).to_latex()}"


def _body(args: argparse.Namespace) -> int:
    index = getattr(args, "index", None)
    if index is not None and not 0 <= index <= 6:
        logger.error(f"--index must lie in 0..6, got {index}")
        return EXIT_USAGE
    context = build_context(args.quiver)
    report, tables = hh_report(context, index)
    emit(report, lambda: _text(context, report, tables), lambda: _latex(context, tables))
    return EXIT_OK


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--index", type=int, help="Only list the named classes of HH^index")


def main(args=None):
    """
    Compute HH^0 .. HH^6 with named bases.

    Args:
        args: Parsed command-line arguments (for testing/integration)

    Returns:
        Exit code (0 for success, non-zero for errors)
    """
    if args is None:
        args = parse_standalone("Hochschild cohomology of a preprojective algebra", add_arguments)
    return run_command(args, _body)


if __name__ == "__main__":
    import sys
    sys.exit(main())
