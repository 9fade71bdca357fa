"""Test configuration and fixtures."""
from typing import Iterator

import pytest
from click.testing import CliRunner

from src.config import get_settings
from src.core.algebra.gf2n import NormalBasis, default_normal_basis


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Settings re-read from a clean environment for every test."""
    monkeypatch.delenv("ROOT_PRECISION", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def runner() -> CliRunner:
    """Click runner; result.stdout holds command output, result.stderr the logs."""
    return CliRunner()


@pytest.fixture
def basis4() -> NormalBasis:
    """GF(16) over x^4+x+1 with beta = alpha^3."""
    return default_normal_basis(4)


@pytest.fixture
def basis5() -> NormalBasis:
    """GF(32) over x^5+x^2+1 with beta = alpha^3."""
    return default_normal_basis(5)


@pytest.fixture
def basis6() -> NormalBasis:
    """GF(64) over x^6+x+1 with beta = alpha^5."""
    return default_normal_basis(6)
