#!/usr/bin/env python3
import argparse
import logging
from typing import Any, Dict, Tuple

from algebra.hilbert import PolynomialMatrix, check_hilbert, closed_form_tail
from scripts.common import EXIT_OK, build_context, emit, parse_standalone, run_command

logger = logging.getLogger(__name__)


def hilbert_report(context) -> Tuple[Dict[str, Any], PolynomialMatrix]:
    """
    Hilbert matrix of the computed basis, checked against the closed form.

    Raises:
        AlgebraError: If a coefficient disagrees with the closed form
    """
    basis = context.algebra.basis
    matrix = check_hilbert(basis)
    report = {"quiver": basis.quiver.name, "complete": basis.complete, "max_degree": basis.max_degree}
    report.update(matrix.to_json())
    report["closed_form_tail"] = closed_form_tail(basis.data, matrix.vertices)
    return report, matrix


def _body(args: argparse.Namespace) -> int:
    context = build_context(args.quiver)
    report, matrix = hilbert_report(context)
    header = f"Hilbert matrix of {report['quiver']} (columns H_A(t) e_j)"
    emit(report, lambda: f"{header}\n{matrix.to_text()}", matrix.to_latex)
    return EXIT_OK


def main(args=None):
    """
    Print the Hilbert matrix H_A(t).

    Args:
        args: Parsed command-line arguments (for testing/integration)

    Returns:
        0, or 1 when the computed matrix disagrees with the closed form
    """
    if args is None:
        args = parse_standalone("Hilbert matrix of a preprojective algebra")
    return run_command(args, _body)


if __name__ == "__main__":
    import sys
    sys.exit(main())
