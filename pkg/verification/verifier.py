import logging
import time
from typing import Any, Dict, List, Optional

import pandas as pd
from tqdm import tqdm

from algebra.basis import AlgebraError
from algebra.cache import BasisCache
from algebra.frobenius import FrobeniusError
from algebra.linalg import LinearAlgebraError
from algebra.parser import ParseError
from center.center import CenterError
from hochschild.complex import CohomologyError
from products.kappa import ProductError
from quiver.dynkin import DynkinQuiver
from utils.file_utils import generate_report_path, save_json
from utils.logging_utils import progress_enabled
from utils.serialization import SerializationError
from verification.checks import (
    FAIL,
    PASS,
    SKIP,
    CheckResult,
    CheckSpec,
    QuiverChecks,
    VerificationError,
    select_checks
)
from verification.context import QuiverContext

logger = logging.getLogger(__name__)

# Failures a check reports as its own result instead of aborting the run.
CHECK_ERRORS = (
    AlgebraError,
    CenterError,
    CohomologyError,
    FrobeniusError,
    LinearAlgebraError,
    ParseError,
    ProductError,
    SerializationError,
    VerificationError,
)


class QuiverVerifier:
    """
    Runs the verification suite over a list of quivers.

    Results are collected per (quiver, check); a run passes when no check
    fails. With a degree bound below the top degree only the checks that
    work on a truncated basis run and the run is marked partial.
    """

    def __init__(self, quivers: List[DynkinQuiver], max_degree: Optional[int] = None,
                 cache: Optional[BasisCache] = None, checks: Optional[List[str]] = None,
                 include_slow: bool = True):
        self.quivers = quivers
        self.max_degree = max_degree
        self.cache = cache
        self.specs: List[CheckSpec] = select_checks(checks, include_slow)
        self.results: List[CheckResult] = []
        self.partial = False
        self.elapsed = 0.0

    def _run_one(self, context: QuiverContext, spec: CheckSpec) -> CheckResult:
        name = context.quiver.name
        if spec.needs_complete and not context.complete:
            return CheckResult(name, spec.name, SKIP, f"needs the basis through degree {context.algebra.top}")
        try:
            detail = spec.run(QuiverChecks(context))
            logger.info(f"{name}: {spec.name} passed ({detail})")
            return CheckResult(name, spec.name, PASS, detail)
        except CHECK_ERRORS as e:
            logger.warning(f"{name}: {spec.name} failed: {str(e)}")
            return CheckResult(name, spec.name, FAIL, str(e))

    def verify(self) -> List[CheckResult]:
        """
        Run every selected check on every quiver.

        Returns:
            The list of CheckResult, in quiver then suite order
        """
        start = time.time()
        self.results = []
        for quiver in self.quivers:
            context = QuiverContext(quiver, self.max_degree, self.cache)
            if not context.complete:
                self.partial = True
                logger.warning(f"{quiver.name}: basis stops at degree {self.max_degree}, "
                               f"top degree is {context.algebra.top}; running a partial verification")
            for spec in tqdm(self.specs, desc=f"Verifying {quiver.name}", disable=not progress_enabled()):
                self.results.append(self._run_one(context, spec))
        self.elapsed = time.time() - start
        logger.info(f"Verification finished in {self.elapsed:.1f}s: "
                    f"{self.count(PASS)} passed, {self.count(FAIL)} failed, {self.count(SKIP)} skipped")
        return self.results

    def count(self, status: str) -> int:
        return sum(1 for r in self.results if r.status == status)

    @property
    def passed(self) -> bool:
        return self.count(FAIL) == 0

    def summary_frame(self) -> pd.DataFrame:
        """One row per quiver, one column per check, holding the status."""
        frame = pd.DataFrame([r.to_json() for r in self.results], columns=["quiver", "check", "status", "detail"])
        if frame.empty:
            return frame
        table = frame.pivot(index="quiver", columns="check", values="status")
        return table.reindex(index=[q.name for q in self.quivers], columns=[s.name for s in self.specs])

    def to_json(self) -> Dict[str, Any]:
        return {
            "quivers": [q.name for q in self.quivers],
            "max_degree": self.max_degree,
            "partial": self.partial,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "results": [r.to_json() for r in self.results],
        }

    def save_report(self, output_file: Optional[str] = None) -> str:
        """
        Save the verification results to a JSON file.

        Args:
            output_file: Path to the output file (default: timestamped file in the reports dir)

        Returns:
            Path to the saved file
        """
        if output_file is None:
            output_file = generate_report_path("verify")
        save_json(self.to_json(), output_file)
        logger.info(f"Verification report saved to {output_file}")
        return output_file

    def print_summary(self) -> None:
        """Print the per-quiver check table to the console."""
        if not self.results:
            logger.warning("No verification results to print")
            return

        title = "Partial Verification Results" if self.partial else "Verification Results"
        print(f"\n===== {title} =====\n")
        with pd.option_context("display.max_columns", None, "display.width", 200):
            print(self.summary_frame().fillna("-").to_string())
        failures = [r for r in self.results if r.status == FAIL]
        if failures:
            print("\nFailures:")
            for r in failures:
                print(f"  {r.quiver} {r.check}: {r.detail}")
        print(f"\n{self.count(PASS)} passed, {self.count(FAIL)} failed, {self.count(SKIP)} skipped "
              f"in {self.elapsed:.1f}s")
        print("\n===================================")
