"""Service assembling the correspondence table for one period."""
from typing import List, Optional

from src.config import get_settings
from src.core.algebra.gf2 import PolyLike, as_poly
from src.core.algebra.gf2n import default_normal_basis
from src.core.gleason.polynomials import gleason_summary
from src.core.gleason.roots import real_roots
from src.core.gleason.rows import assemble_row
from src.core.models.enums import TableOrder
from src.core.models.schemas import CorrespondenceRow, GleasonSummary
from src.utils.exceptions import DomainException, GleasonBijectionsException
from src.utils.logging import get_logger
from src.utils.metrics import errors_total

logger = get_logger(__name__)


class TableService:
    """Service for building correspondence tables and polynomial summaries."""

    def __init__(self, max_n: Optional[int] = None):
        """Initialize table service.

        Args:
            max_n: Largest accepted period (defaults to TABLE_MAX_N)
        """
        self.max_n = max_n or get_settings().TABLE_MAX_N

    def _require_period(self, n: int) -> None:
        if not 1 <= n <= self.max_n:
            raise DomainException(
                f"n must lie in [1, {self.max_n}], got {n}", {"n": n, "max_n": self.max_n}
            )

    def build_table(
        self,
        n: int,
        order: TableOrder = TableOrder.ASCENDING_C,
        modulus: Optional[PolyLike] = None,
        beta_exponent: Optional[int] = None,
    ) -> List[CorrespondenceRow]:
        """One row per real hyperbolic center of period n.

        Args:
            n: Period
            order: Row order by the center c
            modulus: Irreducible of degree n defining GF(2^n) (optional)
            beta_exponent: Use alpha^k as normal element (optional)

        Returns:
            gamma_n rows

        Raises:
            DomainException: if n is out of range or the field overrides do not fit n
            ConsistencyException: if a correspondence check fails on some row
        """
        self._require_period(n)
        basis = default_normal_basis(
            n, as_poly(modulus) if modulus is not None else None, beta_exponent
        )
        try:
            rows = [assemble_row(center, basis) for center in real_roots(n)]
        except GleasonBijectionsException as e:
            errors_total.labels(error_type=type(e).__name__, component="table").inc()
            logger.error("table_failed", n=n, error=e.message, details=e.details)
            raise

        if order == TableOrder.DESCENDING_C:
            rows.reverse()
        logger.info(
            "table_built",
            n=n,
            rows=len(rows),
            order=order.value,
            modulus=basis.field.modulus.to_terms(),
            beta_exponent=basis.exponent,
        )
        return rows

    def summarize(
        self, n: int, include_integer: bool = True, count_roots: bool = False
    ) -> GleasonSummary:
        """Gleason polynomial summary, optionally with the isolated real root count."""
        summary = gleason_summary(n, include_integer=include_integer)
        if count_roots:
            self._require_period(n)
            summary.real_root_count = len(real_roots(n))
        return summary

