"""Polynomials over GF(2) packed into Python integers.

The polynomial b_n x^n + ... + b_1 x + b_0 corresponds to the integer
b_n 2^n + ... + b_1 2 + b_0. The module level ``_`` helpers work on raw
integers; ``GF2Poly`` wraps them with operators and text forms.
"""
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import List, Tuple, Union

from src.core.models.enums import PolynomialKind
from src.utils.exceptions import DomainException, FieldArithmeticException, ValidationException
from src.utils.logging import get_logger
from src.utils.metrics import factorization_duration_seconds

logger = get_logger(__name__)


def _degree(a: int) -> int:
    return a.bit_length() - 1


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _sqr(a: int) -> int:
    # squaring spreads the coefficient bits apart
    if a == 0:
        return 0
    return int("0".join(bin(a)[2:]), 2)


def _divmod(a: int, b: int) -> Tuple[int, int]:
    if b == 0:
        raise FieldArithmeticException("Division by the zero polynomial", {"dividend": hex(a)})
    n = _degree(b)
    q = 0
    while a and _degree(a) >= n:
        shift = _degree(a) - n
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _derivative(a: int) -> int:
    # odd powers survive, shifted down one place
    width = a.bit_length() // 2 + 1
    return (a >> 1) & int("01" * width, 2)


def _sqrt(a: int) -> int:
    bits = bin(a)[2:][::-1]
    if "1" in bits[1::2]:
        raise FieldArithmeticException("Polynomial is not a square", {"polynomial": hex(a)})
    return int(bits[::2][::-1], 2)


def _powmod(a: int, n: int, m: int) -> int:
    result = 1
    a = _mod(a, m)
    while n:
        if n & 1:
            result = _mod(_mul(result, a), m)
        a = _mod(_sqr(a), m)
        n >>= 1
    return _mod(result, m)


def _is_irreducible(a: int) -> bool:
    b = 2
    for _ in range(_degree(a) // 2):
        b = _mod(_sqr(b), a)
        if _gcd(b ^ 2, a) != 1:
            return False
    return True


def _to_terms(a: int, x: str = "x") -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(a.bit_length() - 1, -1, -1):
        if (a >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(x)
            else:
                terms.append(f"{x}^{i}")
    return "+".join(terms)


def _from_terms(text: str, x: str = "x") -> int:
    text = "".join(text.split())
    a = 0
    for term in text.split("+"):
        if term == "0":
            t = 0
        elif term == "1":
            t = 1
        elif term == x:
            t = 2
        elif term.startswith(f"{x}^") and term[len(x) + 1 :].isdigit():
            t = 1 << int(term[len(x) + 1 :])
        else:
            raise ValidationException(f"Ill formatted polynomial: {text!r}", {"value": text})
        if a & t:
            raise ValidationException(f"Repeated term {term!r} in {text!r}", {"value": text})
        a ^= t
    return a


@dataclass(frozen=True, order=True)
class GF2Poly:
    """Polynomial over GF(2); bit i of ``value`` is the coefficient of x^i."""

    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValidationException(
                "Coefficient mask must be non-negative", {"value": self.value}
            )

    @classmethod
    def parse(cls, text: str) -> "GF2Poly":
        """Accept the hex form `0x13` or the term form `x^4+x+1` (or in c)."""
        text = text.strip()
        if text.lower().startswith("0x"):
            try:
                return cls(int(text, 16))
            except ValueError as e:
                raise ValidationException(f"Not a hex polynomial: {text!r}", {"value": text}) from e
        variable = "c" if "c" in text else "x"
        return cls(_from_terms(text, variable))

    @classmethod
    def from_coefficients(cls, coefficients: List[int]) -> "GF2Poly":
        """Build from coefficients, constant term first, reduced mod 2."""
        return cls(sum((int(c) % 2) << i for i, c in enumerate(coefficients)))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return _degree(self.value)

    def __add__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(_mul(self.value, other.value))

    def __divmod__(self, other: "GF2Poly") -> Tuple["GF2Poly", "GF2Poly"]:
        q, r = _divmod(self.value, other.value)
        return GF2Poly(q), GF2Poly(r)

    def __floordiv__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(_divmod(self.value, other.value)[0])

    def __mod__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(_mod(self.value, other.value))

    def __pow__(self, exponent: int) -> "GF2Poly":
        result = 1
        for _ in range(exponent):
            result = _mul(result, self.value)
        return GF2Poly(result)

    def to_terms(self, x: str = "x") -> str:
        return _to_terms(self.value, x)

    def to_hex(self) -> str:
        return hex(self.value)

    def __str__(self) -> str:
        return _to_terms(self.value)


ONE = GF2Poly(1)
X = GF2Poly(2)


def exact_div(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    """Quotient a / b, which must leave no remainder."""
    q, r = _divmod(a.value, b.value)
    if r:
        raise FieldArithmeticException(
            f"{b} does not divide {a}", {"dividend": a.to_hex(), "divisor": b.to_hex()}
        )
    return GF2Poly(q)


def gcd(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    """Greatest common divisor; monic since GF(2) has a single unit."""
    return GF2Poly(_gcd(a.value, b.value))


def derivative(a: GF2Poly) -> GF2Poly:
    return GF2Poly(_derivative(a.value))


def sqrt(a: GF2Poly) -> GF2Poly:
    """Square root of a perfect square.

    Raises:
        FieldArithmeticException: if a has an odd-degree term
    """
    return GF2Poly(_sqrt(a.value))


def powmod(a: GF2Poly, n: int, m: GF2Poly) -> GF2Poly:
    """a^n mod m for n >= 0."""
    return GF2Poly(_powmod(a.value, n, m.value))


def _require_nonconstant(f: GF2Poly) -> None:
    if f.degree < 1:
        raise DomainException(f"{f} is constant", {"polynomial": f.to_hex()})


def is_irreducible(f: GF2Poly) -> bool:
    """Irreducibility via gcd(x^(2^i) - x, f) = 1 for i <= deg f / 2.

    Raises:
        DomainException: for constants
    """
    _require_nonconstant(f)
    return _is_irreducible(f.value)


def is_centered(f: GF2Poly) -> bool:
    """True when the roots of f sum to 0, i.e. x^(d-1) has coefficient 0."""
    _require_nonconstant(f)
    return not (f.value >> (f.degree - 1)) & 1


def squarefree_decomposition(f: GF2Poly) -> List[Tuple[GF2Poly, int]]:
    """Squarefree factors with multiplicities, in increasing multiplicity."""
    _require_nonconstant(f)
    return [(GF2Poly(g), m) for g, m in _squarefree(f.value)]


def _squarefree(f: int) -> List[Tuple[int, int]]:
    if _degree(f) < 1:
        return []
    result: List[Tuple[int, int]] = []
    fp = _derivative(f)
    if fp == 0:
        return [(g, 2 * m) for g, m in _squarefree(_sqrt(f))]
    c = _gcd(f, fp)
    w = _divmod(f, c)[0]
    i = 1
    while w != 1:
        y = _gcd(w, c)
        factor = _divmod(w, y)[0]
        if factor != 1:
            result.append((factor, i))
        w = y
        c = _divmod(c, y)[0]
        i += 1
    if c != 1:
        result.extend((g, 2 * m) for g, m in _squarefree(_sqrt(c)))
    return result


def _distinct_degree(f: int) -> List[Tuple[int, int]]:
    """Split a squarefree f into products of equal-degree irreducibles."""
    result = []
    h = 2
    i = 1
    while _degree(f) >= 2 * i:
        h = _mod(_sqr(h), f)
        g = _gcd(f, h ^ 2)
        if g != 1:
            result.append((g, i))
            f = _divmod(f, g)[0]
            h = _mod(h, f)
        i += 1
    if f != 1:
        result.append((f, _degree(f)))
    return result


def _trace_mod(a: int, f: int, d: int) -> int:
    total = a = _mod(a, f)
    for _ in range(d - 1):
        a = _mod(_sqr(a), f)
        total ^= a
    return total


def _equal_degree(f: int, d: int) -> List[int]:
    """Irreducible factors of f, all of degree d, by trace splitting."""
    if _degree(f) == d:
        return [f]
    for candidate in count(2):
        g = _gcd(f, _trace_mod(candidate, f, d))
        if 0 < _degree(g) < _degree(f):
            return _equal_degree(g, d) + _equal_degree(_divmod(f, g)[0], d)
    raise FieldArithmeticException("No splitting element", {"polynomial": hex(f)})


def factor(f: GF2Poly) -> List[Tuple[GF2Poly, int]]:
    """Irreducible factors with multiplicity, sorted by degree then value.

    Args:
        f: Non-constant polynomial

    Returns:
        Pairs (factor, multiplicity) whose product reproduces f
    """
    _require_nonconstant(f)
    start = time.perf_counter()
    found = []
    for part, multiplicity in _squarefree(f.value):
        for block, d in _distinct_degree(part):
            found.extend((GF2Poly(g), multiplicity) for g in _equal_degree(block, d))
    found.sort(key=lambda item: (item[0].degree, item[0].value))
    factorization_duration_seconds.observe(time.perf_counter() - start)
    logger.debug("polynomial_factored", degree=f.degree, factors=len(found))
    return found


def irreducible_factors(f: GF2Poly) -> List[GF2Poly]:
    """Distinct irreducible factors, multiplicities dropped."""
    return [g for g, _ in factor(f)]


@lru_cache(maxsize=32)
def _irreducibles_of_degree(n: int) -> Tuple[GF2Poly, ...]:
    return tuple(GF2Poly(a) for a in range(1 << n, 1 << (n + 1)) if _is_irreducible(a))


def enumerate_irreducibles(kind: PolynomialKind, n: int) -> List[GF2Poly]:
    """I-minus(n), or I-tilde-plus(n) with the degree n/2 non-centered polynomials.

    Raises:
        DomainException: if n < 1
    """
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})
    if kind == PolynomialKind.I_MINUS:
        return [f for f in _irreducibles_of_degree(n) if not is_centered(f)]
    result = [f for f in _irreducibles_of_degree(n) if is_centered(f)]
    if n % 2 == 0:
        result += [f for f in _irreducibles_of_degree(n // 2) if not is_centered(f)]
    return sorted(result, key=lambda f: (f.degree, f.value))


def smallest_modulus(n: int) -> GF2Poly:
    """Smallest irreducible of degree n with nonzero constant term."""
    if n < 1:
        raise DomainException(f"n must be positive, got {n}", {"n": n})
    return next(f for f in _irreducibles_of_degree(n) if f.value & 1)


PolyLike = Union[GF2Poly, str, int]


def as_poly(value: PolyLike) -> GF2Poly:
    if isinstance(value, GF2Poly):
        return value
    if isinstance(value, int):
        return GF2Poly(value)
    return GF2Poly.parse(value)
