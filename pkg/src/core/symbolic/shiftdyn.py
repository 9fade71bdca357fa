"""Twisted shifts on binary strings and the +/-1 sequence model of Per(n)."""
from dataclasses import dataclass
from typing import Tuple, Union

from src.core.models.enums import InversionKind, Sign
from src.core.symbolic.words import (
    BitString,
    InversionClass,
    SignedBitString,
    classify_inversion_class,
    invert,
    rotate_left,
)
from src.utils.exceptions import ConsistencyException, DomainException, ValidationException


@dataclass(frozen=True)
class PmSequence:
    """One period of an F-periodic +/-1 sequence."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries or any(e not in (1, -1) for e in self.entries):
            raise ValidationException(
                f"Entries must be +1 or -1: {self.entries!r}", {"entries": list(self.entries)}
            )

    @classmethod
    def parse(cls, text: str) -> "PmSequence":
        """Accept `+1,-1,1,-1` with optional parentheses."""
        try:
            return cls(tuple(int(part) for part in text.strip("() ").split(",")))
        except ValueError as e:
            raise ValidationException(f"Not a +/-1 sequence: {text!r}", {"value": text}) from e

    @property
    def signature(self) -> int:
        return self.entries[-1]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join("+1" if e == 1 else "-1" for e in self.entries)


OrbitItem = Union[BitString, SignedBitString]


@dataclass(frozen=True)
class Orbit:
    """Orbit items mu_1, ..., mu_n in iteration order."""

    items: Tuple[OrbitItem, ...]

    def __len__(self) -> int:
        return len(self.items)

    def ranks(self) -> Tuple[int, ...]:
        """Lexicographic rank (1-based) of each item.

        Raises:
            ConsistencyException: if two items coincide
        """
        ordered = sorted(self.items)
        for left, right in zip(ordered, ordered[1:]):
            if left == right:
                raise ConsistencyException(
                    "Orbit items are not distinct", {"item": str(left)}
                )
        position = {item: index + 1 for index, item in enumerate(ordered)}
        return tuple(position[item] for item in self.items)

    def __str__(self) -> str:
        return "(" + ", ".join(str(item) for item in self.items) + ")"


def twisted_shift(s: BitString) -> BitString:
    """F(s): the left shift, complemented when it starts with 0."""
    shifted = rotate_left(s, 1)
    return shifted if shifted.bits[0] == "1" else invert(shifted)


def extended_twisted_shift(x: SignedBitString) -> SignedBitString:
    """F on the word; the sign flips when the new word ends in 0."""
    word = twisted_shift(x.word)
    sign = x.sign if word.bits[-1] == "1" else x.sign.flipped()
    return SignedBitString(word, sign)


def _require_leading_one(t: BitString) -> None:
    if t.bits[0] != "1":
        raise DomainException(f"{t} must begin with 1", {"string": t.bits})


def f_orbit(t: BitString) -> Orbit:
    """Iterate F n-1 times from t, for [t] in N-bar-2."""
    _require_leading_one(t)
    if classify_inversion_class(InversionClass.of(t)) != InversionKind.NON_REFLEXIVE:
        raise DomainException(
            f"[{t}] is reflexive; use the extended orbit", {"string": t.bits}
        )
    items = [t]
    for _ in range(len(t) - 1):
        items.append(twisted_shift(items[-1]))
    return Orbit(tuple(items))


def ftilde_orbit(t: BitString) -> Orbit:
    """Iterate the extended shift n-1 times from t^-, for [t] in N-bar-1."""
    _require_leading_one(t)
    if classify_inversion_class(InversionClass.of(t)) != InversionKind.REFLEXIVE:
        raise DomainException(f"[{t}] is not reflexive", {"string": t.bits})
    items = [SignedBitString(t, Sign.MINUS)]
    for _ in range(len(t) - 1):
        items.append(extended_twisted_shift(items[-1]))
    return Orbit(tuple(items))


def orbit_of(t: BitString) -> Orbit:
    """The F- or extended F-orbit of t, whichever its class calls for."""
    if classify_inversion_class(InversionClass.of(t)) == InversionKind.REFLEXIVE:
        return ftilde_orbit(t)
    return f_orbit(t)


def omega(s: BitString) -> PmSequence:
    """Running parities: entry i is (-1)^(s_1 + ... + s_i)."""
    entries = []
    parity = 0
    for bit in s.bits:
        parity ^= int(bit)
        entries.append(-1 if parity else 1)
    return PmSequence(tuple(entries))


def pm_twisted_shift(e: PmSequence) -> PmSequence:
    """Shift left and multiply through by e_1; the signature is preserved."""
    first = e.entries[0]
    shifted = tuple(first * value for value in e.entries[1:]) + (e.entries[-1],)
    return PmSequence(shifted)
