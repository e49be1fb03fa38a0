"""
Per-quiver verification suite: reference values, checks and the runner.
"""

from verification.checks import (
    CHECKS,
    FAIL,
    PASS,
    SKIP,
    CheckResult,
    CheckSpec,
    QuiverChecks,
    VerificationError,
    check_names,
    select_checks
)
from verification.context import QuiverContext
from verification.verifier import CHECK_ERRORS, QuiverVerifier

__all__ = [
    "CHECKS",
    "CHECK_ERRORS",
    "FAIL",
    "PASS",
    "SKIP",
    "CheckResult",
    "CheckSpec",
    "QuiverChecks",
    "QuiverContext",
    "QuiverVerifier",
    "VerificationError",
    "check_names",
    "select_checks",
]
