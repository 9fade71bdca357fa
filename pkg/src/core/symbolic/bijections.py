"""Bijections between necklaces, inversion classes and cyclic unimodal permutations."""
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.symbolic.shiftdyn import Orbit, orbit_of
from src.core.symbolic.words import (
    BitString,
    InversionClass,
    Necklace,
    invert,
    is_n_tilde_plus,
    rotations,
)
from src.utils.exceptions import DomainException, ValidationException

STAR = "*"


@dataclass(frozen=True)
class CyclicUnimodalPermutation:
    """A single n-cycle of [n] that decreases on [1, m] and increases on [m, n].

    ``mapping[i - 1]`` is the image of i.
    """

    mapping: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.mapping)
        if n < 1 or sorted(self.mapping) != list(range(1, n + 1)):
            raise ValidationException(
                f"Not a permutation of 1..{n}: {self.mapping!r}", {"mapping": list(self.mapping)}
            )
        if len(self._cycle_from_one()) != n:
            raise DomainException(
                "Permutation is not a single n-cycle", {"mapping": list(self.mapping)}
            )
        if not _is_unimodal(self.mapping):
            raise DomainException("Permutation is not unimodal", {"mapping": list(self.mapping)})

    def _cycle_from_one(self) -> Tuple[int, ...]:
        cycle = [1]
        current = self.mapping[0]
        while current != 1 and len(cycle) <= len(self.mapping):
            cycle.append(current)
            current = self.mapping[current - 1]
        return tuple(cycle)

    @classmethod
    def from_cycle(cls, cycle: Sequence[int]) -> "CyclicUnimodalPermutation":
        """Build from cycle notation (r_1 r_2 ... r_n), r_i mapped to r_(i+1)."""
        n = len(cycle)
        if sorted(cycle) != list(range(1, n + 1)):
            raise ValidationException(
                f"Not a cycle on 1..{n}: {tuple(cycle)!r}", {"cycle": list(cycle)}
            )
        mapping = [0] * n
        for index, value in enumerate(cycle):
            mapping[value - 1] = cycle[(index + 1) % n]
        return cls(tuple(mapping))

    @classmethod
    def parse(cls, text: str) -> "CyclicUnimodalPermutation":
        """Accept `(165324)` or `(1,10,4,...)`."""
        body = text.strip()
        if not re.fullmatch(r"\(\s*\d+(\s*,\s*\d+)*\s*\)", body):
            raise ValidationException(f"Not cycle notation: {text!r}", {"value": text})
        inner = body[1:-1]
        if "," in inner:
            cycle = [int(part) for part in inner.split(",")]
        else:
            cycle = [int(ch) for ch in inner.strip()]
        return cls.from_cycle(cycle)

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    @property
    def cycle(self) -> Tuple[int, ...]:
        return self._cycle_from_one()

    @property
    def m(self) -> int:
        """The unique m with sigma(m) = 1."""
        return self.mapping.index(1) + 1

    def __str__(self) -> str:
        separator = "," if len(self) >= 10 else ""
        return "(" + separator.join(str(v) for v in self.cycle) + ")"


def _is_unimodal(mapping: Sequence[int]) -> bool:
    m = mapping.index(1)
    left = mapping[: m + 1]
    right = mapping[m:]
    return all(a > b for a, b in zip(left, left[1:])) and all(
        a < b for a, b in zip(right, right[1:])
    )


@dataclass(frozen=True)
class ItinerarySymbolic:
    """Sequence over {+, -, *} with the single star in last position."""

    symbols: str

    def __post_init__(self) -> None:
        if (
            not self.symbols
            or set(self.symbols) - {"+", "-", STAR}
            or self.symbols.count(STAR) != 1
            or self.symbols[-1] != STAR
        ):
            raise ValidationException(
                f"Itinerary must end in its only star: {self.symbols!r}",
                {"value": self.symbols},
            )

    @property
    def kappa(self) -> str:
        """Same symbols rotated so the star comes first."""
        return STAR + self.symbols[:-1]

    def __str__(self) -> str:
        return self.symbols


def xi(s: BitString) -> BitString:
    """Partial sums mod 2."""
    parity = 0
    out = []
    for bit in s.bits:
        parity ^= int(bit)
        out.append(str(parity))
    return BitString("".join(out))


def xi_inv(s: BitString) -> BitString:
    """Consecutive differences mod 2: (s_1, s_1+s_2, ..., s_(n-1)+s_n)."""
    bits = s.bits
    out = [bits[0]] + [str(int(a) ^ int(b)) for a, b in zip(bits, bits[1:])]
    return BitString("".join(out))


def psi_plus(x: Necklace) -> InversionClass:
    """<s> in N-tilde-plus to [xi(s)]."""
    if not is_n_tilde_plus(x):
        raise DomainException(
            f"{x} is neither primitive of even weight nor a doubled odd-weight necklace",
            {"necklace": str(x)},
        )
    return InversionClass.of(xi(x.canonical))


def theta_representative(y: InversionClass) -> BitString:
    """Smallest member of the class that ends in 0."""
    if not y.is_primitive:
        raise DomainException(f"{y} is not primitive", {"class": str(y)})
    return next(member for member in y.members() if member.bits[-1] == "0")


def theta_plus(y: InversionClass) -> Necklace:
    """Inverse of psi_plus: <xi_inv(s)> for a member s ending in 0."""
    return Necklace.of(xi_inv(theta_representative(y)))


def itinerary(sigma: CyclicUnimodalPermutation) -> ItinerarySymbolic:
    """+ where sigma^i(m) > m, - where it is smaller, star at n."""
    m = sigma.m
    symbols = []
    current = m
    for _ in range(len(sigma) - 1):
        current = sigma(current)
        symbols.append("+" if current > m else "-")
    return ItinerarySymbolic("".join(symbols) + STAR)


def _resolve_star(itin: ItinerarySymbolic, odd: bool) -> BitString:
    body = "".join("1" if symbol == "-" else "0" for symbol in itin.symbols[:-1])
    parity = body.count("1") % 2
    star = (1 - parity) if odd else parity
    return BitString(body + str(star))


def a_of_sigma(sigma: CyclicUnimodalPermutation) -> BitString:
    """+ to 0, - to 1, star to the bit making the weight even."""
    return _resolve_star(itinerary(sigma), odd=False)


def a_of_sigma_kappa(sigma: CyclicUnimodalPermutation) -> BitString:
    """a_of_sigma read with the star symbol first."""
    a = a_of_sigma(sigma).bits
    return BitString(a[-1] + a[:-1])


def phi(sigma: CyclicUnimodalPermutation) -> Necklace:
    return Necklace.of(a_of_sigma(sigma))


def class_start_representative(y: InversionClass) -> BitString:
    """Smallest member of the class beginning with 1."""
    return next(member for member in y.members() if member.bits[0] == "1")


def _cycle_from_ranks(ranks: Sequence[int]) -> CyclicUnimodalPermutation:
    return CyclicUnimodalPermutation.from_cycle(list(ranks))


def lambda_map(
    y: InversionClass, representative: Optional[BitString] = None
) -> CyclicUnimodalPermutation:
    """Rank permutation of the (extended) twisted-shift orbit of a class.

    Args:
        y: Primitive necklace inversion class
        representative: Member beginning with 1 to start from; defaults to the
            smallest such member

    Returns:
        The cycle (r_1 r_2 ... r_n) of lexicographic ranks

    Raises:
        DomainException: if the class is not primitive or the representative
            does not belong to it
    """
    if not y.is_primitive:
        raise DomainException(f"{y} is not primitive", {"class": str(y)})
    t = representative or class_start_representative(y)
    if InversionClass.of(t) != y:
        raise DomainException(f"{t} is not a member of {y}", {"class": str(y), "string": t.bits})
    orbit: Orbit = orbit_of(t)
    return _cycle_from_ranks(orbit.ranks())


def wr_phi(x: Necklace) -> CyclicUnimodalPermutation:
    """Cycle of ranks of inverted partial-sum strings of the rotations of x."""
    if not x.is_primitive or x.weight % 2 == 0:
        raise DomainException(
            f"{x} must be primitive with an odd number of 1s", {"necklace": str(x)}
        )
    nus = [invert(xi(r)) for r in rotations(x.canonical)]
    return _cycle_from_ranks(Orbit(tuple(nus)).ranks())


def wr_psi_word(sigma: CyclicUnimodalPermutation) -> BitString:
    """+ to 0, - to 1, star to the bit making the weight odd."""
    return _resolve_star(itinerary(sigma), odd=True)


def wr_psi(sigma: CyclicUnimodalPermutation) -> Necklace:
    """Odd-weight primitive necklace of a cyclic unimodal permutation."""
    return Necklace.of(wr_psi_word(sigma))


@lru_cache(maxsize=32)
def _cup(n: int) -> Tuple[CyclicUnimodalPermutation, ...]:
    found = []
    rest = range(2, n + 1)
    for size in range(n):
        for left in combinations(rest, size):
            right = sorted(set(rest) - set(left))
            mapping = tuple(sorted(left, reverse=True)) + (1,) + tuple(right)
            if _is_single_cycle(mapping):
                found.append(CyclicUnimodalPermutation(mapping))
    return tuple(sorted(found, key=lambda sigma: sigma.cycle))


def _is_single_cycle(mapping: Sequence[int]) -> bool:
    length = 1
    current = mapping[0]
    while current != 1:
        current = mapping[current - 1]
        length += 1
    return length == len(mapping)


def enumerate_cup(n: int) -> List[CyclicUnimodalPermutation]:
    """All cyclic unimodal permutations of [n], ordered by cycle notation."""
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})
    return list(_cup(n))


def is_satellite_cup(sigma: CyclicUnimodalPermutation) -> bool:
    """Cycle (x_1..x_h y_1..y_h) with y_i = x_i + 1 for odd x_i, x_i - 1 for even."""
    n = len(sigma)
    if n % 2:
        return False
    cycle = sigma.cycle
    h = n // 2
    return all(
        cycle[h + i] == (x + 1 if x % 2 else x - 1) for i, x in enumerate(cycle[:h])
    )


def cup_by_preimage_of_one(n: int) -> Dict[int, int]:
    """|CUP_k(n)| for k = 1..n, where CUP_k(n) = {sigma : sigma(k) = 1}."""
    counts = {k: 0 for k in range(1, n + 1)}
    for sigma in enumerate_cup(n):
        counts[sigma.m] += 1
    return counts


def lemma_start_is_orbit_minimum(sigma: CyclicUnimodalPermutation) -> bool:
    """The member of {t, i(t)} beginning with 1 is the smallest item of its orbit.

    t is the partial-sum string of a_of_sigma read with the star first.
    """
    t = xi(a_of_sigma_kappa(sigma))
    start = t if t.bits[0] == "1" else invert(t)
    orbit = orbit_of(start)
    return min(orbit.items) == orbit.items[0]
