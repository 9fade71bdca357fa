"""Binary strings, necklaces and necklace inversion classes.

Strings are written most significant symbol first (s_1 leftmost) and ordered
lexicographically with 0 < 1. A necklace is stored by its smallest rotation and
an inversion class by the smallest rotation of the string or its complement.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

from sympy.utilities.iterables import minlex, necklaces

from src.core.models.enums import InversionKind, SetName, Sign
from src.utils.exceptions import DomainException, ValidationException


@dataclass(frozen=True, order=True)
class BitString:
    """Immutable binary word of length n >= 1."""

    bits: str

    def __post_init__(self) -> None:
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise ValidationException(
                f"Not a binary string: {self.bits!r}",
                {"value": self.bits},
            )

    @classmethod
    def parse(cls, text: str) -> "BitString":
        return cls(text.strip())

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitString":
        """Binary digits of value padded to n symbols."""
        if value < 0 or value >= 1 << n:
            raise ValidationException(
                f"{value} does not fit in {n} bits", {"value": value, "n": n}
            )
        return cls(format(value, f"0{n}b"))

    def to_int(self) -> int:
        return int(self.bits, 2)

    @property
    def weight(self) -> int:
        return self.bits.count("1")

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, index: int) -> int:
        return int(self.bits[index])

    def __str__(self) -> str:
        return self.bits


def rotate_left(s: BitString, k: int = 1) -> BitString:
    """Cyclic left shift by k places."""
    k %= len(s)
    return BitString(s.bits[k:] + s.bits[:k])


def invert(s: BitString) -> BitString:
    """Complement every symbol."""
    return BitString(s.bits.translate(_INVERSION))


_INVERSION = str.maketrans("01", "10")


def rotations(s: BitString) -> List[BitString]:
    """All n rotations of s, starting with s itself."""
    return [rotate_left(s, k) for k in range(len(s))]


def is_primitive(s: BitString) -> bool:
    """True when no non-trivial rotation fixes s."""
    # s is periodic iff it occurs inside ss away from offsets 0 and n
    return (s.bits + s.bits).find(s.bits, 1) == len(s)


def is_reflexive(s: BitString) -> bool:
    """True when the complement of s is one of its rotations."""
    return invert(s).bits in s.bits + s.bits


def is_k_alternating(s: BitString, k: int) -> bool:
    """True when s = s' i(s') s' i(s') ... with k blocks of length n/k."""
    n = len(s)
    if k < 1 or n % k:
        raise DomainException(
            f"{k} does not divide the length {n}", {"string": s.bits, "k": k}
        )
    size = n // k
    head = s.bits[:size]
    flipped = head.translate(_INVERSION)
    return all(
        s.bits[j * size : (j + 1) * size] == (head if j % 2 == 0 else flipped)
        for j in range(k)
    )


def _smallest_rotation(bits: str) -> str:
    return "".join(minlex(bits))


@dataclass(frozen=True, order=True)
class Necklace:
    """Binary string up to rotation, stored by its smallest rotation."""

    canonical: BitString

    def __post_init__(self) -> None:
        if _smallest_rotation(self.canonical.bits) != self.canonical.bits:
            raise ValidationException(
                f"{self.canonical} is not the smallest rotation of its necklace",
                {"value": self.canonical.bits},
            )

    @classmethod
    def of(cls, s: Union[BitString, str]) -> "Necklace":
        bits = s.bits if isinstance(s, BitString) else s
        return cls(BitString(_smallest_rotation(BitString(bits).bits)))

    @classmethod
    def parse(cls, text: str) -> "Necklace":
        """Accept `0011`, `<0011>` or `⟨0011⟩`."""
        return cls.of(text.strip().strip("<>⟨⟩"))

    def __len__(self) -> int:
        return len(self.canonical)

    @property
    def weight(self) -> int:
        return self.canonical.weight

    @property
    def is_primitive(self) -> bool:
        return is_primitive(self.canonical)

    @property
    def is_doubled(self) -> bool:
        """True for s's with s primitive of length n/2."""
        n = len(self)
        if n % 2:
            return False
        half = self.canonical.bits[: n // 2]
        return self.canonical.bits == half + half and is_primitive(BitString(half))

    @property
    def half(self) -> "Necklace":
        if not self.is_doubled:
            raise DomainException(f"{self} is not a doubled necklace", {"value": str(self)})
        return Necklace.of(self.canonical.bits[: len(self) // 2])

    def __str__(self) -> str:
        return self.canonical.bits


@dataclass(frozen=True, order=True)
class InversionClass:
    """Binary string up to rotation and complement."""

    canonical: BitString

    def __post_init__(self) -> None:
        if _class_minimum(self.canonical.bits) != self.canonical.bits:
            raise ValidationException(
                f"{self.canonical} is not the smallest member of its inversion class",
                {"value": self.canonical.bits},
            )

    @classmethod
    def of(cls, s: Union[BitString, str]) -> "InversionClass":
        bits = s.bits if isinstance(s, BitString) else s
        return cls(BitString(_class_minimum(BitString(bits).bits)))

    @classmethod
    def parse(cls, text: str) -> "InversionClass":
        """Accept `011010` or `[011010]`."""
        return cls.of(text.strip().strip("[]"))

    def __len__(self) -> int:
        return len(self.canonical)

    @property
    def is_primitive(self) -> bool:
        return is_primitive(self.canonical)

    def members(self) -> List[BitString]:
        """Every string of the class, sorted."""
        found = {r for r in rotations(self.canonical)}
        found.update(rotations(invert(self.canonical)))
        return sorted(found)

    def __str__(self) -> str:
        return f"[{self.canonical.bits}]"


def _class_minimum(bits: str) -> str:
    return min(_smallest_rotation(bits), _smallest_rotation(bits.translate(_INVERSION)))


@dataclass(frozen=True, order=True)
class SignedBitString:
    """Extended string s^+ or s^-; s^- < s^+ and words compare first."""

    word: BitString
    sign: Sign

    @classmethod
    def parse(cls, text: str) -> "SignedBitString":
        """Accept `100011-` or `100011+`."""
        text = text.strip()
        if not text or text[-1] not in "+-":
            raise ValidationException(
                f"Signed string must end in + or -: {text!r}", {"value": text}
            )
        sign = Sign.PLUS if text[-1] == "+" else Sign.MINUS
        return cls(BitString(text[:-1]), sign)

    def __str__(self) -> str:
        return f"{self.word.bits}{self.sign.symbol}"


def classify_inversion_class(x: InversionClass) -> InversionKind:
    """Place a primitive class in N-bar-1 (reflexive) or N-bar-2."""
    if not x.is_primitive:
        raise DomainException(f"{x} is not primitive", {"class": str(x)})
    if is_reflexive(x.canonical):
        return InversionKind.REFLEXIVE
    return InversionKind.NON_REFLEXIVE


@lru_cache(maxsize=64)
def _primitive_necklaces(n: int) -> Tuple[Necklace, ...]:
    found = []
    for beads in necklaces(n, 2):
        s = BitString("".join(str(b) for b in beads))
        if is_primitive(s):
            found.append(Necklace.of(s))
    return tuple(sorted(found))


@lru_cache(maxsize=64)
def _primitive_classes(n: int) -> Tuple[InversionClass, ...]:
    return tuple(sorted({InversionClass.of(x.canonical) for x in _primitive_necklaces(n)}))


def is_n_tilde_plus(x: Necklace) -> bool:
    """Membership in N-tilde-plus: primitive even weight, or a doubled odd-weight half."""
    if x.is_primitive:
        return x.weight % 2 == 0
    return x.is_doubled and x.half.weight % 2 == 1


def doubled(x: Necklace) -> Necklace:
    """Embed a length-m necklace as the length-2m string ss."""
    return Necklace.of(x.canonical.bits * 2)


def enumerate_set(name: SetName, n: int) -> List[Union[Necklace, InversionClass]]:
    """List a set of the correspondence in canonical lexicographic order.

    Args:
        name: One of the necklace or inversion class sets
        n: String length

    Returns:
        Duplicate-free sorted list

    Raises:
        DomainException: if n < 1 or the set is not a necklace set
    """
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})

    result: List[Union[Necklace, InversionClass]]
    if name == SetName.N_MINUS:
        result = [x for x in _primitive_necklaces(n) if x.weight % 2 == 1]
    elif name == SetName.N_PLUS:
        result = [x for x in _primitive_necklaces(n) if x.weight % 2 == 0]
    elif name == SetName.N_TILDE_PLUS:
        items = [x for x in _primitive_necklaces(n) if x.weight % 2 == 0]
        if n % 2 == 0:
            items += [doubled(x) for x in _primitive_necklaces(n // 2) if x.weight % 2 == 1]
        result = list(sorted(items))
    elif name == SetName.N_BAR:
        result = list(_primitive_classes(n))
    elif name == SetName.N_BAR_1:
        result = [x for x in _primitive_classes(n) if is_reflexive(x.canonical)]
    elif name == SetName.N_BAR_2:
        result = [x for x in _primitive_classes(n) if not is_reflexive(x.canonical)]
    else:
        raise DomainException(f"{name.value} is not a necklace set", {"set": name.value})
    return result
