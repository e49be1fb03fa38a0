#!/usr/bin/env python3
import argparse
import logging
from typing import Any, Dict

import pandas as pd

from scripts.common import EXIT_OK, build_context, emit, parse_standalone, run_command

logger = logging.getLogger(__name__)


def basis_report(context, with_paths: bool = False) -> Dict[str, Any]:
    """
    Degree-wise dimensions of the path basis, optionally with every basis path.

    Args:
        context: QuiverContext of the quiver
        with_paths: Include the path labels grouped by degree

    Returns:
        JSON-ready report
    """
    basis = context.algebra.basis
    report = {
        "quiver": basis.quiver.name,
        "complete": basis.complete,
        "max_degree": basis.max_degree,
        "dimension": basis.dimension(),
        "by_degree": {str(d): len(paths) for d, paths in enumerate(basis.by_degree)},
    }
    if with_paths:
        report["paths"] = {
            str(d): [{"source": p.source, "target": p.target, "word": basis.path_label(p)} for p in paths]
            for d, paths in enumerate(basis.by_degree)
        }
    return report


def _frame(context) -> pd.DataFrame:
    basis = context.algebra.basis
    vertices = list(basis.quiver.vertices)
    rows = {f"e{s} A": [basis.dimension(source=s, target=t) for t in vertices] for s in vertices}
    return pd.DataFrame.from_dict(rows, orient="index", columns=[f"A e{t}" for t in vertices])


def _text(report: Dict[str, Any], context) -> str:
    status = "complete" if report["complete"] else f"partial, through degree {report['max_degree']}"
    lines = [f"{report['quiver']} basis ({status}): dimension {report['dimension']}", ""]
    lines.extend(f"  degree {d}: {n}" for d, n in report["by_degree"].items())
    lines.extend(["", _frame(context).to_string()])
    for d, paths in report.get("paths", {}).items():
        lines.append(f"\ndegree {d}:")
        lines.extend(f"  e{p['source']} -> e{p['target']}: {p['word']}" for p in paths)
    return "\n".join(lines)


def _body(args: argparse.Namespace) -> int:
    context = build_context(args.quiver)
    report = basis_report(context, getattr(args, "paths", False))
    emit(report, lambda: _text(report, context))
    return EXIT_OK


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--paths", action="store_true", help="List every basis path")


def main(args=None):
    """
    Build (or load) the path basis and report its dimensions.

    Args:
        args: Parsed command-line arguments (for testing/integration)

    Returns:
        Exit code (0 for success, non-zero for errors)
    """
    if args is None:
        args = parse_standalone("Path basis of a preprojective algebra", add_arguments)
    return run_command(args, _body)


if __name__ == "__main__":
    import sys
    sys.exit(main())
