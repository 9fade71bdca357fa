"""Service running verification suites over (suite, n) cells in parallel."""
import asyncio
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Iterable, List, Optional, Tuple

from src.config import get_settings
from src.core.models.enums import CheckStatus, Suite
from src.core.models.schemas import CheckResult, VerificationReport
from src.services.verification_suites import SUITE_BUILDERS, suite_range
from src.utils.exceptions import DomainException
from src.utils.logging import get_logger
from src.utils.metrics import (
    errors_total,
    verification_cell_duration_seconds,
    verification_checks_total,
)

logger = get_logger(__name__)

CellOutcome = Tuple[List[CheckResult], float]


def _describe(error: BaseException) -> str:
    return f"{type(error).__name__}: {error}"


def run_cell(suite: Suite, n: int) -> CellOutcome:
    """Run every check of one suite for one n.

    Module level so worker processes can pickle it.

    Returns:
        Check results and the wall time of the cell in seconds
    """
    start = time.perf_counter()
    try:
        checks = SUITE_BUILDERS[suite](n)
    except Exception as e:
        result = CheckResult(
            suite=suite, n=n, check="setup", status=CheckStatus.ERROR, detail=_describe(e)
        )
        return [result], time.perf_counter() - start

    results = []
    for name, check in checks:
        try:
            status = CheckStatus.PASSED if check() else CheckStatus.FAILED
            detail = None
        except Exception as e:
            status = CheckStatus.ERROR
            detail = _describe(e)
        results.append(CheckResult(suite=suite, n=n, check=name, status=status, detail=detail))
    return results, time.perf_counter() - start


class VerificationService:
    """Service for fanning verification cells out to workers."""

    def __init__(self, jobs: Optional[int] = None):
        """Initialize verification service.

        Args:
            jobs: Worker processes; 1 runs cells on a single thread (defaults to VERIFY_JOBS)
        """
        self.jobs = jobs if jobs is not None else get_settings().VERIFY_JOBS
        if self.jobs < 1:
            raise DomainException(f"jobs must be positive, got {self.jobs}", {"jobs": self.jobs})

    def _executor(self) -> Executor:
        if self.jobs > 1:
            return ProcessPoolExecutor(max_workers=self.jobs)
        return ThreadPoolExecutor(max_workers=1)

    @staticmethod
    def cells(max_n: int, suites: Iterable[Suite]) -> List[Tuple[Suite, int]]:
        """Every (suite, n) pair to run, each suite capped by its budget."""
        return [(suite, n) for suite in suites for n in suite_range(suite, max_n)]

    async def run(self, max_n: int, suites: Optional[List[Suite]] = None) -> VerificationReport:
        """Run the requested suites for n = 1..max_n.

        Args:
            max_n: Largest period to verify
            suites: Suites to run (defaults to all)

        Returns:
            VerificationReport sorted by (suite, n, check)

        Raises:
            DomainException: if max_n < 1
        """
        if max_n < 1:
            raise DomainException(f"max_n must be positive, got {max_n}", {"max_n": max_n})
        suites = list(suites or list(Suite))
        cells = self.cells(max_n, suites)
        logger.info(
            "verification_started",
            max_n=max_n,
            suites=[s.value for s in suites],
            cells=len(cells),
            jobs=self.jobs,
        )

        start_time = time.time()
        loop = asyncio.get_running_loop()
        executor = self._executor()
        try:
            outcomes = await asyncio.gather(
                *(loop.run_in_executor(executor, run_cell, suite, n) for suite, n in cells),
                return_exceptions=True,
            )
        finally:
            executor.shutdown(wait=True)

        results: List[CheckResult] = []
        for (suite, n), outcome in zip(cells, outcomes):
            if isinstance(outcome, BaseException):
                # the worker itself died, not a check
                logger.error(
                    "verification_cell_failed", suite=suite.value, n=n, error=_describe(outcome)
                )
                errors_total.labels(error_type=type(outcome).__name__, component="verify").inc()
                results.append(
                    CheckResult(
                        suite=suite,
                        n=n,
                        check="worker",
                        status=CheckStatus.ERROR,
                        detail=_describe(outcome),
                    )
                )
                continue
            cell_results, duration = outcome
            verification_cell_duration_seconds.labels(suite=suite.value).observe(duration)
            results.extend(cell_results)

        for result in results:
            verification_checks_total.labels(
                suite=result.suite.value, status=result.status.value
            ).inc()
            if result.status != CheckStatus.PASSED:
                logger.warning(
                    "verification_check_not_passed",
                    suite=result.suite.value,
                    n=result.n,
                    check=result.check,
                    status=result.status.value,
                    detail=result.detail,
                )

        results.sort(key=lambda r: (r.suite.value, r.n, r.check))
        report = VerificationReport(max_n=max_n, suites=suites, results=results)
        logger.info(
            "verification_completed",
            passed=report.passed,
            duration_s=time.time() - start_time,
            counts=report.summary,
        )
        return report

