"""Text-in, text-out dispatch for the `map` command."""
from dataclasses import dataclass
from typing import Callable, Dict, Optional

from sympy.ntheory import n_order

from src.core.algebra.gf2 import GF2Poly
from src.core.algebra.gf2n import default_normal_basis, reutenauer
from src.core.gleason.angles import (
    Angle,
    doubling_map,
    fold,
    kneading_angle,
    kneading_sequence,
    modified_tent_map,
    tent_map,
)
from src.core.models.enums import MapName
from src.core.symbolic.bijections import (
    CyclicUnimodalPermutation,
    ItinerarySymbolic,
    a_of_sigma,
    itinerary,
    lambda_map,
    phi,
    psi_plus,
    theta_plus,
    wr_phi,
    wr_psi_word,
    xi,
    xi_inv,
)
from src.core.symbolic.shiftdyn import (
    PmSequence,
    extended_twisted_shift,
    f_orbit,
    ftilde_orbit,
    omega,
    pm_twisted_shift,
    twisted_shift,
)
from src.core.symbolic.words import (
    BitString,
    InversionClass,
    Necklace,
    SignedBitString,
    classify_inversion_class,
)
from src.utils.exceptions import ValidationException


@dataclass(frozen=True)
class MapOptions:
    """Options shared by every map; most maps ignore them."""

    n: Optional[int] = None
    modulus: Optional[GF2Poly] = None
    beta_exponent: Optional[int] = None


def _period_of(text: str, options: MapOptions) -> int:
    if options.n is not None:
        return options.n
    if "/" not in text:
        raise ValidationException(
            "A bare numerator needs --n to fix the period", {"value": text}
        )
    try:
        denominator = int(text.split("/")[1])
    except ValueError as e:
        raise ValidationException(f"Not an angle: {text!r}", {"value": text}) from e
    if denominator < 1 or denominator % 2 == 0:
        raise ValidationException(
            f"Denominator {denominator} is not of the form 2^n - 1 up to a factor",
            {"value": text},
        )
    return 1 if denominator == 1 else int(n_order(2, denominator))


def _angle(text: str, options: MapOptions) -> Angle:
    return Angle.parse(text, _period_of(text, options))


def _reutenauer(text: str, options: MapOptions) -> str:
    x = Necklace.parse(text)
    basis = default_normal_basis(options.n or len(x), options.modulus, options.beta_exponent)
    return reutenauer(x, basis).to_terms()


MapFunction = Callable[[str, MapOptions], str]

MAPS: Dict[MapName, MapFunction] = {
    MapName.XI: lambda text, _: str(xi(BitString.parse(text))),
    MapName.XI_INV: lambda text, _: str(xi_inv(BitString.parse(text))),
    MapName.PSI_PLUS: lambda text, _: str(psi_plus(Necklace.parse(text))),
    MapName.THETA_PLUS: lambda text, _: f"<{theta_plus(InversionClass.parse(text))}>",
    MapName.PHI: lambda text, _: f"<{phi(CyclicUnimodalPermutation.parse(text))}>",
    MapName.LAMBDA: lambda text, _: str(lambda_map(InversionClass.parse(text))),
    MapName.WR_PHI: lambda text, _: str(wr_phi(Necklace.parse(text))),
    MapName.WR_PSI: lambda text, _: str(wr_psi_word(CyclicUnimodalPermutation.parse(text))),
    MapName.ITINERARY: lambda text, _: str(itinerary(CyclicUnimodalPermutation.parse(text))),
    MapName.A_OF_SIGMA: lambda text, _: str(a_of_sigma(CyclicUnimodalPermutation.parse(text))),
    MapName.REUTENAUER: _reutenauer,
    MapName.CLASSIFY: lambda text, _: classify_inversion_class(InversionClass.parse(text)).value,
    MapName.TWISTED_SHIFT: lambda text, _: str(twisted_shift(BitString.parse(text))),
    MapName.EXTENDED_TWISTED_SHIFT: lambda text, _: str(
        extended_twisted_shift(SignedBitString.parse(text))
    ),
    MapName.F_ORBIT: lambda text, _: str(f_orbit(BitString.parse(text))),
    MapName.FTILDE_ORBIT: lambda text, _: str(ftilde_orbit(BitString.parse(text))),
    MapName.OMEGA: lambda text, _: str(omega(BitString.parse(text))),
    MapName.PM_TWISTED_SHIFT: lambda text, _: str(pm_twisted_shift(PmSequence.parse(text))),
    MapName.KNEADING_SEQUENCE: lambda text, _: str(
        kneading_sequence(ItinerarySymbolic(text.strip()))
    ),
    MapName.KNEADING_ANGLE: lambda text, _: str(kneading_angle(BitString.parse(text))),
    MapName.DOUBLING: lambda text, o: str(doubling_map(_angle(text, o))),
    MapName.FOLD: lambda text, o: str(fold(_angle(text, o))),
    MapName.TENT: lambda text, o: str(tent_map(_angle(text, o))),
    MapName.MODIFIED_TENT: lambda text, o: str(modified_tent_map(_angle(text, o))),
}


def apply_map(name: MapName, text: str, options: Optional[MapOptions] = None) -> str:
    """Parse text as the map's domain, apply the map and render the image."""
    return MAPS[name](text, options or MapOptions())
