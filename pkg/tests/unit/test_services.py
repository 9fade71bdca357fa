"""Unit tests for the table and verification services."""
import pytest
from structlog.testing import capture_logs

from src.core.models.enums import CheckStatus, Suite, TableOrder
from src.services.table_service import TableService
from src.services.verification_service import VerificationService, run_cell
from src.services.verification_suites import SUITE_BUILDERS, suite_range
from src.utils.exceptions import ConsistencyException, DomainException


@pytest.fixture
def table_service():
    """Create table service for testing."""
    return TableService(max_n=6)


@pytest.fixture
def verification_service():
    """Create single-threaded verification service for testing."""
    return VerificationService(jobs=1)


def test_build_table_orders(table_service):
    """Test ascending and descending row order."""
    ascending = table_service.build_table(5)
    descending = table_service.build_table(5, order=TableOrder.DESCENDING_C)
    assert [row.c for row in ascending] == ["-1.9854", "-1.8607", "-1.6254"]
    assert [row.c for row in descending] == ["-1.6254", "-1.8607", "-1.9854"]
    assert [row.m2 for row in ascending] == ["x^5+x^2+1", "x^5+x^3+x^2+x+1", "x^5+x^3+1"]


def test_build_table_rejects_out_of_range(table_service):
    """Test the period bounds."""
    with pytest.raises(DomainException):
        table_service.build_table(0)
    with pytest.raises(DomainException):
        table_service.build_table(7)


def test_build_table_with_other_modulus(table_service):
    """Test that a different field changes M2 but keeps the other columns."""
    rows = table_service.build_table(4, modulus="x^4+x^3+1")
    assert [row.p1 for row in rows] == ["(1432)", "(1423)"]
    assert rows[1].m2 == "x^2+x+1"
    assert rows[0].m2 == "x^4+x+1"


def test_build_table_rejects_modulus_of_wrong_degree(table_service):
    """Test that the modulus degree must be n."""
    with pytest.raises(DomainException):
        table_service.build_table(4, modulus="x^5+x^2+1")


def test_build_table_reraises_row_failures(table_service, monkeypatch):
    """Test that a failing correspondence check propagates."""

    def broken(center, basis):
        raise ConsistencyException("broken", {"n": center.n})

    monkeypatch.setattr("src.services.table_service.assemble_row", broken)
    with pytest.raises(ConsistencyException):
        table_service.build_table(3)


def test_summarize_counts_roots(table_service):
    """Test the optional real root count."""
    summary = table_service.summarize(6, include_integer=False, count_roots=True)
    assert summary.real_root_count == summary.factor_count == 5
    assert table_service.summarize(4).real_root_count is None


def test_suite_range_caps():
    """Test the per-suite ranges of n."""
    assert list(suite_range(Suite.DYNAMICS, 4)) == [2, 3, 4]
    assert list(suite_range(Suite.BIJECTIONS, 3)) == [1, 2, 3]
    assert max(suite_range(Suite.GLEASON, 1000)) == 10


@pytest.mark.parametrize("suite", list(Suite))
def test_run_cell_passes_for_n4(suite):
    """Test every suite on n = 4."""
    results, duration = run_cell(suite, 4)
    assert results
    assert duration >= 0
    failing = [(r.check, r.detail) for r in results if r.status != CheckStatus.PASSED]
    assert failing == []


def test_run_cell_records_errors(monkeypatch):
    """Test that raising builders and checks become error results."""

    def broken_builder(n):
        raise RuntimeError("no checks")

    monkeypatch.setitem(SUITE_BUILDERS, Suite.COUNTING, broken_builder)
    (result,), _ = run_cell(Suite.COUNTING, 3)
    assert (result.check, result.status) == ("setup", CheckStatus.ERROR)
    assert result.detail == "RuntimeError: no checks"

    def raising():
        raise ValueError("bad")

    monkeypatch.setitem(
        SUITE_BUILDERS, Suite.COUNTING, lambda n: [("ok", lambda: True), ("bad", raising)]
    )
    results, _ = run_cell(Suite.COUNTING, 3)
    assert [r.status for r in results] == [CheckStatus.PASSED, CheckStatus.ERROR]


def test_verification_service_rejects_bad_jobs():
    """Test that jobs must be positive."""
    with pytest.raises(DomainException):
        VerificationService(jobs=0)


@pytest.mark.asyncio
async def test_verify_small_run(verification_service):
    """Test a short run over two suites."""
    report = await verification_service.run(3, [Suite.WEISS_ROGERS, Suite.COUNTING])
    assert report.passed
    assert report.summary["failed"] == report.summary["error"] == 0
    assert {r.suite for r in report.results} == {Suite.WEISS_ROGERS, Suite.COUNTING}
    keys = [(r.suite.value, r.n, r.check) for r in report.results]
    assert keys == sorted(keys)


@pytest.mark.asyncio
async def test_verify_reports_failures(verification_service, monkeypatch):
    """Test that a failing check makes the report fail."""
    monkeypatch.setitem(SUITE_BUILDERS, Suite.COUNTING, lambda n: [("never", lambda: False)])
    report = await verification_service.run(2, [Suite.COUNTING])
    assert not report.passed
    assert report.summary["failed"] == 2


@pytest.mark.asyncio
async def test_verify_rejects_bad_max_n(verification_service):
    """Test that max_n must be positive."""
    with pytest.raises(DomainException):
        await verification_service.run(0)


@pytest.mark.asyncio
async def test_verify_logs_completion_with_counts(verification_service):
    """Test that the completion event carries the overall verdict and the status counts."""
    with capture_logs() as logs:
        report = await verification_service.run(2, [Suite.COUNTING])
    (completed,) = [entry for entry in logs if entry["event"] == "verification_completed"]
    assert completed["passed"] is report.passed
    assert completed["counts"] == report.summary


@pytest.mark.parametrize("n", [3, 5, 6])
def test_bijection_suite_lemma_checks_pass(n):
    """Test the orbit-minimum and two-alternation checks of the bijections suite."""
    results, _ = run_cell(Suite.BIJECTIONS, n)
    status = {r.check: r.status for r in results}
    assert status["orbit_start_is_minimum"] == CheckStatus.PASSED
    assert status["reflexive_strings_are_two_alternating"] == CheckStatus.PASSED
