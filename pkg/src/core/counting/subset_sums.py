"""Subsets of {1, ..., n-1} counted by their sum modulo n."""
from itertools import combinations
from typing import Dict, List

from src.config import get_settings
from src.core.counting.formulas import brute_force_t_minus, gamma, t_minus_formula
from src.core.models.schemas import CountReport
from src.core.symbolic.bijections import cup_by_preimage_of_one
from src.utils.exceptions import DomainException
from src.utils.logging import get_logger

logger = get_logger(__name__)

# table[k][r]: subsets of size k whose sum is r mod n
SizeResidueTable = List[List[int]]


def _require_n(n: int) -> None:
    if n < 2:
        raise DomainException(f"Subset sums need n >= 2, got {n}", {"n": n})


def subset_sums_by_enumeration(n: int) -> SizeResidueTable:
    """Walk every subset of {1, ..., n-1}, the empty set included."""
    _require_n(n)
    table = [[0] * n for _ in range(n)]
    elements = range(1, n)
    for k in range(n):
        for subset in combinations(elements, k):
            table[k][sum(subset) % n] += 1
    return table


def subset_sums_by_residue_dp(n: int) -> SizeResidueTable:
    """Same table built one element at a time."""
    _require_n(n)
    table = [[0] * n for _ in range(n)]
    table[0][0] = 1
    for element in range(1, n):
        for k in range(element, 0, -1):
            previous = table[k - 1]
            row = table[k]
            for r in range(n):
                if previous[r]:
                    row[(r + element) % n] += previous[r]
    return table


def subset_sum_table(n: int) -> SizeResidueTable:
    """Enumerate up to SUBSET_ENUMERATION_LIMIT, dynamic programming beyond."""
    if n <= get_settings().SUBSET_ENUMERATION_LIMIT:
        return subset_sums_by_enumeration(n)
    return subset_sums_by_residue_dp(n)


def s1_by_size(table: SizeResidueTable) -> Dict[int, int]:
    """|S_1(n, k)| for k = 1, ..., n-1."""
    n = len(table)
    return {k: table[k][1 % n] for k in range(1, n)}


def subset_sum_counts(n: int, include_cup: bool = True) -> CountReport:
    """|S_0(n)|, |S_1(n)|, |S_1(n, k)|, |CUP_k(n)| and |T^-(n)| with verdicts.

    The size-k subset count is compared with the permutations sending k + 1 to 1.

    Args:
        n: Modulus, at least 2
        include_cup: Enumerate CUP(n) for the per-size comparison
    """
    _require_n(n)
    settings = get_settings()
    table = subset_sum_table(n)
    s0 = sum(row[0] for row in table)
    by_k = s1_by_size(table)
    s1 = sum(by_k.values())
    t_minus = t_minus_formula(n)
    g = gamma(n)

    verdicts = {
        "s1_equals_gamma": s1 == g,
        "s0_equals_t_minus": s0 == t_minus,
        "t_minus_formula_matches_necklaces": brute_force_t_minus(n) == t_minus,
    }
    if n <= settings.SUBSET_ENUMERATION_LIMIT:
        verdicts["enumeration_matches_dp"] = table == subset_sums_by_residue_dp(n)

    cup_by_k = None
    if include_cup and n <= settings.MAX_N_CUP:
        cup_by_k = cup_by_preimage_of_one(n)
        verdicts["s1_by_k_matches_cup"] = all(
            by_k[k] == cup_by_k[k + 1] for k in range(1, n)
        ) and cup_by_k[1] == 0

    report = CountReport(
        n=n,
        gamma=g,
        s0=s0,
        s1=s1,
        s1_by_k=by_k,
        cup_by_k=cup_by_k,
        t_minus=t_minus,
        verdicts=verdicts,
    )
    logger.debug("subset_sum_counts_computed", n=n, consistent=report.consistent)
    return report
