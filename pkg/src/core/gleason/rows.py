"""One row of the correspondence per real hyperbolic center."""
from typing import Callable, List, Tuple

import mpmath

from src.core.algebra.gf2n import NormalBasis, reutenauer
from src.core.gleason.roots import HyperbolicCenter
from src.core.models.schemas import CorrespondenceRow
from src.core.symbolic.bijections import (
    a_of_sigma,
    a_of_sigma_kappa,
    class_start_representative,
    itinerary,
    lambda_map,
    phi,
    wr_psi_word,
    xi,
    xi_inv,
)
from src.core.symbolic.words import BitString, InversionClass, Necklace, invert
from src.utils.exceptions import ConsistencyException, DomainException
from src.utils.logging import get_logger

logger = get_logger(__name__)


def correspondence_checks(center: HyperbolicCenter) -> List[Tuple[str, Callable[[], bool]]]:
    """Named checks tying the orbit permutation to the kneading sequence."""
    sigma = center.orbit_permutation
    t = center.kneading_sequence
    y = InversionClass.of(t)
    orbit = center.orbit
    return [
        ("permutation_equals_lambda", lambda: lambda_map(y) == sigma),
        ("itinerary_matches_permutation", lambda: itinerary(sigma) == center.itinerary),
        ("a_spells_kneading_class", lambda: InversionClass.of(xi(a_of_sigma(sigma))) == y),
        ("star_first_a_gives_n2", lambda: a_of_sigma_kappa(sigma) == n2_representative(center)),
        ("inverted_kneading_is_class_start", lambda: invert(t) == class_start_representative(y)),
        (
            "critical_value_is_orbit_minimum",
            lambda: orbit[0] <= 0 and all(orbit[0] <= v for v in orbit[:-1]),
        ),
    ]


def n2_representative(center: HyperbolicCenter) -> BitString:
    """Partial differences of whichever of t, i(t) ends in 0."""
    t = center.kneading_sequence
    u = t if t.bits[-1] == "0" else invert(t)
    return xi_inv(u)


def assemble_row(center: HyperbolicCenter, basis: NormalBasis) -> CorrespondenceRow:
    """Every column of the correspondence for one center.

    Raises:
        ConsistencyException: naming the first correspondence check that fails
    """
    n = center.n
    if basis.n != n:
        raise DomainException(
            f"Normal basis has degree {basis.n}, expected {n}", {"n": n, "basis_n": basis.n}
        )
    for name, check in correspondence_checks(center):
        if not check():
            raise ConsistencyException(
                f"Correspondence check {name} failed for c = {center.c_rounded}",
                {"check": name, "n": n, "c": center.c_rounded},
            )

    sigma = center.orbit_permutation
    necklace = phi(sigma)
    n2 = n2_representative(center)
    if Necklace.of(n2) != necklace:
        raise ConsistencyException(
            f"Column N2 {n2} is not in the necklace {necklace}",
            {"check": "n2_matches_phi", "n": n, "c": center.c_rounded},
        )
    m2 = reutenauer(necklace, basis)
    angle = center.kneading_angle
    row = CorrespondenceRow(
        n=n,
        c=center.c_rounded,
        c_value=mpmath.nstr(center.c_value, 15),
        bracket=[str(center.bracket[0]), str(center.bracket[1])],
        m2=m2.to_terms(),
        m2_hex=m2.to_hex(),
        d1=str(angle),
        d1_reduced=angle.reduced,
        p1=str(sigma),
        n1=wr_psi_word(sigma).bits,
        n2=n2.bits,
        n3=center.kneading_sequence.bits,
        itinerary=str(center.itinerary),
        satellite=necklace.is_doubled,
    )
    logger.debug("row_assembled", n=n, c=row.c, m2=row.m2)
    return row
