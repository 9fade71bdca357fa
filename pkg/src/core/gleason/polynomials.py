"""Gleason polynomials over the integers and their reductions mod 2."""
from typing import List

from sympy import Poly, symbols
from sympy.polys.polyerrors import ExactQuotientFailed

from src.core.algebra.gf2 import GF2Poly, _derivative, _gcd, _sqr, exact_div, irreducible_factors
from src.core.cache.polynomial_cache import get_polynomial_cache
from src.core.counting.formulas import gamma
from src.core.models.schemas import GleasonSummary
from src.utils.exceptions import (
    ConsistencyException,
    DomainException,
    FieldArithmeticException,
    RootIsolationException,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

c = symbols("c")

SQUAREFREE_MOD2 = "mod2"
SQUAREFREE_INTEGER = "integer"


def _require_period(n: int) -> None:
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})


def proper_divisors(n: int) -> List[int]:
    return [d for d in range(1, n) if n % d == 0]


def qn(n: int) -> Poly:
    """Q_n(c) = f_c^n(0): Q_1 = c and Q_(k+1) = Q_k^2 + c."""
    _require_period(n)

    def compute() -> Poly:
        if n == 1:
            return Poly(c, c, domain="ZZ")
        return qn(n - 1) ** 2 + Poly(c, c, domain="ZZ")

    return get_polynomial_cache().get_or_compute("q", n, compute)


def gleason(n: int) -> Poly:
    """G_n = Q_n divided by G_d for every proper divisor d of n.

    Raises:
        ConsistencyException: if the division leaves a remainder
    """
    _require_period(n)

    def compute() -> Poly:
        divisor = Poly(1, c, domain="ZZ")
        for d in proper_divisors(n):
            divisor = divisor * gleason(d)
        try:
            result = qn(n).exquo(divisor)
        except ExactQuotientFailed as e:
            raise ConsistencyException(
                f"Q_{n} is not divisible by its proper Gleason factors", {"n": n}
            ) from e
        logger.debug("gleason_polynomial_computed", n=n, degree=result.degree())
        return result

    return get_polynomial_cache().get_or_compute("gleason", n, compute)


def _qn_mod2(n: int) -> int:
    def compute() -> int:
        if n == 1:
            return 2
        return _sqr(_qn_mod2(n - 1)) ^ 2

    return get_polynomial_cache().get_or_compute("q_mod2", n, compute)


def gleason_mod2(n: int) -> GF2Poly:
    """G_n reduced mod 2, computed entirely over GF(2).

    Every G_d is monic, so dividing mod 2 agrees with reducing the integer quotient.
    """
    _require_period(n)

    def compute() -> GF2Poly:
        divisor = GF2Poly(1)
        for d in proper_divisors(n):
            divisor = divisor * gleason_mod2(d)
        try:
            return exact_div(GF2Poly(_qn_mod2(n)), divisor)
        except FieldArithmeticException as e:
            raise ConsistencyException(
                f"Q_{n} mod 2 is not divisible by its proper Gleason factors", {"n": n}
            ) from e

    return get_polynomial_cache().get_or_compute("gleason_mod2", n, compute)


def reduce_mod2(poly: Poly) -> GF2Poly:
    """Coefficients of an integer polynomial taken mod 2."""
    return GF2Poly.from_coefficients(list(reversed(poly.all_coeffs())))


def integer_coefficients(poly: Poly) -> List[int]:
    """Coefficients, constant term first."""
    return [int(a) for a in reversed(poly.all_coeffs())]


def squarefree_certificate(n: int) -> str:
    """How squarefreeness of G_n is established.

    A monic integer polynomial whose reduction mod 2 is squarefree is itself
    squarefree, so the cheap mod 2 test is tried first.

    Returns:
        "mod2" or "integer"

    Raises:
        RootIsolationException: if G_n has a repeated factor
    """
    reduced = gleason_mod2(n)
    if _gcd(reduced.value, _derivative(reduced.value)) == 1:
        return SQUAREFREE_MOD2
    poly = gleason(n)
    if poly.gcd(poly.diff(c)).degree() > 0:
        raise RootIsolationException(f"G_{n} is not squarefree", {"n": n})
    return SQUAREFREE_INTEGER


def gleason_summary(n: int, include_integer: bool = True) -> GleasonSummary:
    """Degree, coefficients and mod 2 factorization of G_n."""
    reduced = gleason_mod2(n)
    factors = irreducible_factors(reduced)
    coefficients = None
    certificate = None
    if include_integer:
        coefficients = [str(a) for a in integer_coefficients(gleason(n))]
        certificate = squarefree_certificate(n)
    return GleasonSummary(
        n=n,
        degree=reduced.degree,
        coefficients=coefficients,
        mod2=reduced.to_terms("c"),
        mod2_hex=reduced.to_hex(),
        factors=[f.to_terms("c") for f in factors],
        factor_count=len(factors),
        gamma=gamma(n),
        squarefree_certificate=certificate,
    )
