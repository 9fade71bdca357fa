"""Periodic angles a/(2^n - 1) under doubling, folding and the tent maps.

All maps act on numerators exactly; an angle of period n keeps the
denominator M = 2^n - 1 throughout.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy import Rational

from src.core.models.enums import DTag, InversionKind, Sign
from src.core.symbolic.bijections import ItinerarySymbolic
from src.core.symbolic.words import (
    BitString,
    InversionClass,
    SignedBitString,
    classify_inversion_class,
    invert,
)
from src.utils.exceptions import DomainException, ValidationException


@dataclass(frozen=True, order=True)
class Angle:
    """The real number numerator / (2^period - 1) in [0, 1)."""

    numerator: int
    period: int

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValidationException(
                f"Period must be positive: {self.period}", {"period": self.period}
            )
        if not 0 <= self.numerator < self.denominator:
            raise ValidationException(
                f"Numerator {self.numerator} outside [0, {self.denominator})",
                {"numerator": self.numerator, "period": self.period},
            )

    @classmethod
    def parse(cls, text: str, period: int) -> "Angle":
        """Accept `a/b` with b dividing 2^period - 1, or a bare numerator."""
        denominator = (1 << period) - 1
        try:
            if "/" in text:
                a, b = (int(part) for part in text.strip().split("/"))
            else:
                a, b = int(text), denominator
        except ValueError as e:
            raise ValidationException(f"Not an angle: {text!r}", {"value": text}) from e
        if b <= 0 or denominator % b:
            raise ValidationException(
                f"Denominator {b} does not divide {denominator}", {"value": text, "period": period}
            )
        return cls(a * (denominator // b), period)

    @property
    def denominator(self) -> int:
        return (1 << self.period) - 1

    @property
    def value(self) -> Rational:
        return Rational(self.numerator, self.denominator)

    @property
    def reduced(self) -> str:
        return f"{self.value.p}/{self.value.q}"

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True, order=True)
class SignedAngle:
    """Angle carrying a sign, for the extended maps."""

    angle: Angle
    sign: Sign

    def __str__(self) -> str:
        return f"{self.angle.reduced}{self.sign.symbol}"


def doubling_map(theta: Angle) -> Angle:
    """x -> 2x mod 1, a left rotation of the n-bit expansion."""
    return Angle((2 * theta.numerator) % theta.denominator, theta.period)


def fold(theta: Angle) -> Angle:
    """min(x, 1 - x)."""
    return Angle(min(theta.numerator, _mirror(theta)), theta.period)


def unfold(theta: Angle) -> Angle:
    """max(x, 1 - x)."""
    return Angle(max(theta.numerator, _mirror(theta)), theta.period)


def _mirror(theta: Angle) -> int:
    return (theta.denominator - theta.numerator) % theta.denominator


def involution(theta: Angle) -> Angle:
    """x -> -x mod 1."""
    return Angle(_mirror(theta), theta.period)


def tent_map(theta: Angle) -> Angle:
    """2x on [0, 1/4] and 1 - 2x on [1/4, 1/2]."""
    a, m = theta.numerator, theta.denominator
    if 2 * a > m:
        raise DomainException(f"{theta} exceeds 1/2", {"angle": str(theta)})
    return Angle(2 * a if 4 * a <= m else m - 2 * a, theta.period)


def modified_tent_map(theta: Angle) -> Angle:
    """2(1 - x) on [1/2, 3/4] and 2x - 1 on [3/4, 1]."""
    a, m = theta.numerator, theta.denominator
    if 2 * a < m:
        raise DomainException(f"{theta} is below 1/2", {"angle": str(theta)})
    return Angle(2 * (m - a) if 4 * a < 3 * m else 2 * a - m, theta.period)


def extended_modified_tent_map(x: SignedAngle) -> SignedAngle:
    """The modified tent map, flipping the sign below 3/4."""
    a, m = x.angle.numerator, x.angle.denominator
    sign = x.sign.flipped() if 4 * a < 3 * m else x.sign
    return SignedAngle(modified_tent_map(x.angle), sign)


def extended_unfold(theta: Angle) -> SignedAngle:
    """x^+ above 1/2, otherwise (1 - x)^-."""
    if 2 * theta.numerator > theta.denominator:
        return SignedAngle(theta, Sign.PLUS)
    return SignedAngle(involution(theta), Sign.MINUS)


def angle_bits(theta: Angle) -> BitString:
    """The repeating block of the binary expansion."""
    return BitString.from_int(theta.numerator, theta.period)


def extended_encoding(theta: Angle) -> SignedBitString:
    """beta(x)^+ above 1/2, otherwise i(beta(x))^-."""
    bits = angle_bits(theta)
    if 2 * theta.numerator > theta.denominator:
        return SignedBitString(bits, Sign.PLUS)
    return SignedBitString(invert(bits), Sign.MINUS)


def kneading_sequence(itinerary: ItinerarySymbolic) -> BitString:
    """t_1 = 0; t_(i+1) repeats t_i after a + and flips it after a -."""
    bits = [0]
    for symbol in itinerary.symbols[:-1]:
        bits.append(bits[-1] if symbol == "+" else 1 - bits[-1])
    return BitString("".join(str(b) for b in bits))


def kneading_angle(t: BitString) -> Angle:
    """The angle whose binary expansion repeats t.

    Raises:
        DomainException: if the angle exceeds 1/2
    """
    theta = Angle(t.to_int(), len(t))
    if 2 * theta.numerator > theta.denominator:
        raise DomainException(f"Kneading angle {theta} exceeds 1/2", {"sequence": t.bits})
    return theta


def doubling_orbit(theta: Angle) -> List[Angle]:
    """theta, D(theta), ... up to the first repeat."""
    orbit = [theta]
    current = doubling_map(theta)
    while current != theta:
        orbit.append(current)
        current = doubling_map(current)
    return orbit


def is_closest_to_half(theta: Angle) -> bool:
    """No member of the doubling orbit lies strictly closer to 1/2."""
    m = theta.denominator
    distance = abs(2 * theta.numerator - m)
    return all(abs(2 * other.numerator - m) >= distance for other in doubling_orbit(theta))


@dataclass(frozen=True)
class DbarClass:
    """Doubling cycles of primitive period n, up to x -> -x."""

    cycles: Tuple[Tuple[Angle, ...], ...]
    inversion_class: InversionClass
    tag: DTag

    def __str__(self) -> str:
        rendered = ["(" + " -> ".join(a.reduced for a in cycle) + ")" for cycle in self.cycles]
        return " ~ ".join(rendered)


def _cycle_starting_at_minimum(theta: Angle) -> Tuple[Angle, ...]:
    orbit = doubling_orbit(theta)
    start = orbit.index(min(orbit))
    return tuple(orbit[start:] + orbit[:start])


def enumerate_dbar(n: int) -> List[DbarClass]:
    """Classes of primitive period-n doubling cycles under the involution.

    A class holds one self-paired cycle (tag d-bar-1) or two swapped cycles
    (tag d-bar-2), together with the inversion class of its binary digits.
    """
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})
    m = (1 << n) - 1
    seen: Dict[Tuple[Angle, ...], bool] = {}
    classes = []
    for a in range(m):
        theta = Angle(a, n)
        cycle = _cycle_starting_at_minimum(theta)
        if len(cycle) != n or cycle in seen:
            continue
        partner = _cycle_starting_at_minimum(involution(theta))
        seen[cycle] = seen[partner] = True
        tag = DTag.SELF_PAIRED if partner == cycle else DTag.SWAPPED
        members = (cycle,) if partner == cycle else tuple(sorted((cycle, partner)))
        classes.append(DbarClass(members, InversionClass.of(angle_bits(theta)), tag))
    return classes


def dbar_tag_matches_reflexivity(entry: DbarClass) -> bool:
    """Self-paired cycles belong to reflexive inversion classes and vice versa."""
    reflexive = classify_inversion_class(entry.inversion_class) == InversionKind.REFLEXIVE
    return reflexive == (entry.tag == DTag.SELF_PAIRED)
