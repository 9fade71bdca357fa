"""Pydantic models for reports and rendered rows."""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

from src.core.models.enums import CheckStatus, Suite


class CorrespondenceRow(BaseModel):
    """One real hyperbolic center with every column of the correspondence."""

    n: int = Field(..., ge=1, description="Period")
    c: str = Field(..., description="Center rounded to 4 decimals")
    c_value: str = Field(..., description="Center to the refined precision")
    bracket: List[str] = Field(..., description="Certified isolating interval as a/b strings")
    m2: str = Field(..., description="Irreducible factor of the reduced Gleason polynomial")
    m2_hex: str = Field(..., description="Same factor, hex-packed (bit i = coefficient of x^i)")
    d1: str = Field(..., description="Kneading angle, unreduced a/(2^n-1)")
    d1_reduced: str = Field(..., description="Kneading angle in lowest terms")
    p1: str = Field(..., description="Cyclic unimodal permutation in cycle notation")
    n1: str = Field(..., description="Odd-weight necklace representative")
    n2: str = Field(..., description="Even-weight (or doubled) necklace representative")
    n3: str = Field(..., description="Kneading sequence t, a necklace inversion class member")
    itinerary: str = Field(..., description="Itinerary with the star last")
    satellite: bool = Field(..., description="Whether the (N2) necklace is doubled")


class CountReport(BaseModel):
    """Exact counts for one n together with formula/enumeration verdicts."""

    n: int = Field(..., ge=1)
    gamma: int
    p: Optional[int] = None
    c: Optional[int] = None
    xi: Optional[int] = None
    epsilon: Optional[int] = None
    delta: Optional[int] = None
    s0: Optional[int] = None
    s1: Optional[int] = None
    s1_by_k: Optional[Dict[int, int]] = None
    cup_by_k: Optional[Dict[int, int]] = None
    t_minus: Optional[int] = None
    verdicts: Dict[str, bool] = Field(default_factory=dict)

    @computed_field  # type: ignore[misc]
    @property
    def consistent(self) -> bool:
        """Whether every verdict holds."""
        return all(self.verdicts.values())


class CheckResult(BaseModel):
    """Outcome of one named check for one (suite, n) cell."""

    suite: Suite
    n: int
    check: str
    status: CheckStatus
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    """All check results of a verify run."""

    max_n: int
    suites: List[Suite]
    results: List[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(r.status == CheckStatus.PASSED for r in self.results)

    @computed_field  # type: ignore[misc]
    @property
    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for result in self.results:
            counts[result.status.value] += 1
        return counts


class GleasonSummary(BaseModel):
    """Gleason polynomial data for one period."""

    n: int = Field(..., ge=1)
    degree: int
    coefficients: Optional[List[str]] = Field(
        default=None, description="Integer coefficients, constant term first"
    )
    mod2: str
    mod2_hex: str
    factors: List[str]
    factor_count: int
    gamma: int
    squarefree_certificate: Optional[str] = None
    real_root_count: Optional[int] = None
