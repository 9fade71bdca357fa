"""Certified real roots of Gleason polynomials and their critical orbits."""
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import mpmath
from sympy import Poly, Rational, sign

from src.config import get_settings
from src.core.counting.formulas import gamma
from src.core.gleason.angles import Angle, kneading_angle, kneading_sequence
from src.core.gleason.polynomials import gleason, squarefree_certificate
from src.core.symbolic.bijections import STAR, CyclicUnimodalPermutation, ItinerarySymbolic
from src.core.symbolic.words import BitString
from src.utils.exceptions import ConsistencyException, DomainException, RootIsolationException
from src.utils.logging import get_logger
from src.utils.metrics import root_isolation_duration_seconds

logger = get_logger(__name__)

# every real hyperbolic center lies in the real slice of the Mandelbrot set
SEARCH_INTERVAL = (Rational(-2), Rational(1, 4))

Bracket = Tuple[Rational, Rational]


@dataclass(frozen=True)
class HyperbolicCenter:
    """A real root of G_n with everything read off its critical orbit."""

    n: int
    bracket: Bracket
    c_value: mpmath.mpf
    orbit: Tuple[mpmath.mpf, ...]
    itinerary: ItinerarySymbolic
    kneading_sequence: BitString
    kneading_angle: Angle
    orbit_permutation: CyclicUnimodalPermutation

    @property
    def c_rounded(self) -> str:
        """Center to the 4 decimals tables print."""
        return f"{float(self.c_value):.4f}"


def _sign(value: Rational) -> int:
    return int(sign(value))


def certify_bracket(poly: Poly, bracket: Bracket) -> bool:
    """Exact opposite signs at the endpoints, or an exact root for a point bracket."""
    s, t = bracket
    if s == t:
        return poly.eval(s) == 0
    return _sign(poly.eval(s)) * _sign(poly.eval(t)) < 0


def _midpoint(bracket: Bracket) -> mpmath.mpf:
    s, t = bracket
    return (mpmath.mpf(s.p) / s.q + mpmath.mpf(t.p) / t.q) / 2


def _refine(poly: Poly, bracket: Bracket, eps: Rational) -> Bracket:
    s, t = bracket
    if s == t:
        return bracket
    s, t = poly.refine_root(s, t, eps=eps)
    return Rational(s), Rational(t)


def critical_orbit(c: mpmath.mpf, n: int) -> List[mpmath.mpf]:
    """f_c(0), f_c^2(0), ..., f_c^n(0) for f_c(z) = z^2 + c.

    Must be called inside the working precision the caller wants.
    """
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})
    orbit = []
    z = mpmath.mpf(0)
    for _ in range(n):
        z = z * z + c
        orbit.append(z)
    tolerance = get_settings().ORBIT_TOLERANCE
    if abs(orbit[-1]) > tolerance:
        logger.warning(
            "critical_orbit_not_closed", n=n, c=mpmath.nstr(c, 15), residual=float(orbit[-1])
        )
    return orbit


def itinerary_of_center(
    orbit: Sequence[mpmath.mpf], tolerance: Optional[float] = None
) -> ItinerarySymbolic:
    """Signs of f_c^i(0) for i = 1..n-1 followed by the star.

    Raises:
        DomainException: if a non-star orbit value is too close to 0 to sign
    """
    tolerance = get_settings().SIGN_TOLERANCE if tolerance is None else tolerance
    symbols = []
    for i, value in enumerate(orbit[:-1], start=1):
        if abs(value) < tolerance:
            raise DomainException(
                f"f_c^{i}(0) is within {tolerance} of 0", {"index": i, "value": float(value)}
            )
        symbols.append("+" if value > 0 else "-")
    return ItinerarySymbolic("".join(symbols) + STAR)


def orbit_permutation(orbit: Sequence[mpmath.mpf]) -> CyclicUnimodalPermutation:
    """Cycle (r_1 ... r_n) of the ranks of f_c(0), ..., f_c^n(0) = 0.

    Raises:
        ConsistencyException: if two orbit points coincide numerically
    """
    values = list(orbit[:-1]) + [mpmath.mpf(0)]
    ordered = sorted(values)
    if any(a == b for a, b in zip(ordered, ordered[1:])):
        raise ConsistencyException("Critical orbit points coincide", {"n": len(values)})
    ranks = [ordered.index(v) + 1 for v in values]
    return CyclicUnimodalPermutation.from_cycle(ranks)


def _center_from_bracket(
    poly: Poly, n: int, bracket: Bracket, precision: float
) -> HyperbolicCenter:
    settings = get_settings()
    eps = Rational(str(precision))
    bracket = _refine(poly, bracket, eps)
    for attempt in range(settings.MAX_REFINEMENTS + 1):
        with mpmath.workdps(settings.ORBIT_DPS):
            c_value = _midpoint(bracket)
            orbit = critical_orbit(c_value, n)
            try:
                itinerary = itinerary_of_center(orbit)
            except DomainException:
                eps /= 1000
                logger.info("center_rerefined", n=n, attempt=attempt, eps=float(eps))
                bracket = _refine(poly, bracket, eps)
                continue
            permutation = orbit_permutation(orbit)
        t = kneading_sequence(itinerary)
        return HyperbolicCenter(
            n=n,
            bracket=bracket,
            c_value=c_value,
            orbit=tuple(orbit),
            itinerary=itinerary,
            kneading_sequence=t,
            kneading_angle=kneading_angle(t),
            orbit_permutation=permutation,
        )
    raise RootIsolationException(
        f"Could not decide the itinerary of a period {n} center",
        {"n": n, "bracket": [str(bracket[0]), str(bracket[1])]},
    )


def real_roots(n: int, precision: Optional[float] = None) -> List[HyperbolicCenter]:
    """All real roots of G_n in ascending order, each certified by an exact bracket.

    Args:
        n: Period
        precision: Bracket width before the orbit is followed; defaults to ROOT_PRECISION

    Returns:
        gamma_n centers

    Raises:
        RootIsolationException: if G_n is not squarefree, a bracket fails its
            sign test or the number of roots differs from gamma_n
    """
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})
    if precision is None:
        precision = get_settings().ROOT_PRECISION
    elif precision <= 0:
        raise DomainException(
            f"precision must be positive, got {precision}", {"precision": precision}
        )
    start = time.perf_counter()
    squarefree_certificate(n)
    poly = gleason(n)
    inf, sup = SEARCH_INTERVAL
    brackets = [(Rational(s), Rational(t)) for s, t in poly.intervals(inf=inf, sup=sup, sqf=True)]
    for bracket in brackets:
        if not certify_bracket(poly, bracket):
            raise RootIsolationException(
                f"Bracket for G_{n} has no sign change",
                {"n": n, "bracket": [str(bracket[0]), str(bracket[1])]},
            )
    expected = gamma(n)
    if len(brackets) != expected:
        raise RootIsolationException(
            f"G_{n} has {len(brackets)} real roots in the search interval, expected {expected}",
            {"n": n, "found": len(brackets), "expected": expected},
        )
    centers = sorted(
        (_center_from_bracket(poly, n, bracket, precision) for bracket in brackets),
        key=lambda center: center.bracket[0],
    )
    root_isolation_duration_seconds.observe(time.perf_counter() - start)
    logger.info("real_roots_isolated", n=n, count=len(centers))
    return centers
