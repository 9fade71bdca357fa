"""The field GF(2^n), normal bases and the necklace to polynomial correspondence."""
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from src.config import get_settings
from src.core.algebra.gf2 import GF2Poly, _is_irreducible, _mod, _mul, _sqr, smallest_modulus
from src.core.symbolic.words import BitString, Necklace
from src.utils.exceptions import (
    ConfigurationException,
    ConsistencyException,
    DomainException,
    FieldArithmeticException,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)


class GF2nField:
    """GF(2)[x] modulo an irreducible polynomial of degree n.

    Elements are integers below 2^n holding coordinates over the power basis
    1, alpha, ..., alpha^(n-1), alpha being the class of x.
    """

    def __init__(self, modulus: GF2Poly):
        if modulus.degree < 1 or not _is_irreducible(modulus.value):
            raise FieldArithmeticException(
                f"Modulus {modulus} is not irreducible", {"modulus": modulus.to_hex()}
            )
        self.modulus = modulus
        self.n = modulus.degree

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2nField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __call__(self, value: int) -> "GF2nElement":
        return GF2nElement(_mod(value, self.modulus.value), self)

    @property
    def alpha(self) -> "GF2nElement":
        return self(2)

    def mul(self, a: int, b: int) -> int:
        return _mod(_mul(a, b), self.modulus.value)

    def sqr(self, a: int) -> int:
        return _mod(_sqr(a), self.modulus.value)

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.sqr(a)
            e >>= 1
        return _mod(result, self.modulus.value)

    def __repr__(self) -> str:
        return f"GF2nField({self.modulus})"


@dataclass(frozen=True)
class GF2nElement:
    """Element of a GF2nField."""

    value: int
    field: GF2nField

    def _check(self, other: "GF2nElement") -> None:
        if self.field != other.field:
            raise FieldArithmeticException(
                "Fields do not match",
                {"left": self.field.modulus.to_hex(), "right": other.field.modulus.to_hex()},
            )

    def __add__(self, other: "GF2nElement") -> "GF2nElement":
        self._check(other)
        return GF2nElement(self.value ^ other.value, self.field)

    __sub__ = __add__

    def __mul__(self, other: "GF2nElement") -> "GF2nElement":
        self._check(other)
        return GF2nElement(self.field.mul(self.value, other.value), self.field)

    def __pow__(self, exponent: int) -> "GF2nElement":
        return GF2nElement(self.field.pow(self.value, exponent), self.field)

    def frobenius(self) -> "GF2nElement":
        """The automorphism y -> y^2."""
        return GF2nElement(self.field.sqr(self.value), self.field)


def frobenius_orbit(element: GF2nElement) -> List[GF2nElement]:
    """element, element^2, element^4, ... up to the first repeat."""
    orbit = [element]
    current = element.frobenius()
    while current != element:
        orbit.append(current)
        current = current.frobenius()
    return orbit


def trace(element: GF2nElement) -> int:
    """Absolute trace to GF(2), the sum of all n conjugates."""
    total = 0
    current = element.value
    for _ in range(element.field.n):
        total ^= current
        current = element.field.sqr(current)
    if total not in (0, 1):
        raise ConsistencyException("Trace left GF(2)", {"trace": total})
    return total


def minimal_polynomial(element: GF2nElement) -> GF2Poly:
    """Product of (x + gamma) over the Galois orbit of the element."""
    field = element.field
    # coefficients in the field, constant term first
    coefficients = [1]
    for gamma in frobenius_orbit(element):
        shifted = [0] + coefficients
        for i, c in enumerate(coefficients):
            shifted[i] ^= field.mul(c, gamma.value)
        coefficients = shifted
    if any(c not in (0, 1) for c in coefficients):
        raise ConsistencyException(
            "Minimal polynomial has coefficients outside GF(2)",
            {"element": element.value, "modulus": field.modulus.to_hex()},
        )
    return GF2Poly.from_coefficients(coefficients)


def _rank(vectors: List[int]) -> int:
    """Rank over GF(2) of integer bit vectors."""
    basis: Dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


@dataclass(frozen=True)
class NormalBasis:
    """beta with beta, beta^2, ..., beta^(2^(n-1)) linearly independent.

    ``change_matrix[i][j]`` is the coefficient of alpha^i in the j-th element
    of the ordered basis (phi^(n-1)(beta), ..., phi(beta), beta).
    """

    field: GF2nField
    beta: GF2nElement
    exponent: int
    frobenius_orbit: Tuple[GF2nElement, ...]
    change_matrix: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.field.n

    def element(self, s: BitString) -> GF2nElement:
        """The element sum of s_i * phi^(n-i)(beta) for a string of length n."""
        if len(s) != self.n:
            raise DomainException(
                f"{s} has length {len(s)}, expected {self.n}", {"string": s.bits, "n": self.n}
            )
        value = 0
        for i, bit in enumerate(s.bits, start=1):
            if bit == "1":
                value ^= self.frobenius_orbit[self.n - i].value
        return GF2nElement(value, self.field)


def _normal_basis_for(field: GF2nField, exponent: int) -> Optional[NormalBasis]:
    beta = field.alpha ** exponent
    orbit = [beta]
    for _ in range(field.n - 1):
        orbit.append(orbit[-1].frobenius())
    if _rank([e.value for e in orbit]) != field.n:
        return None
    ordered = list(reversed(orbit))
    matrix = tuple(
        tuple((element.value >> i) & 1 for element in ordered) for i in range(field.n)
    )
    return NormalBasis(field, beta, exponent, tuple(orbit), matrix)


def find_normal_basis(field: GF2nField, exponent_hint: Optional[int] = None) -> NormalBasis:
    """Normal basis generated by alpha^k.

    Args:
        field: Field to search
        exponent_hint: Use exactly this k; otherwise the smallest k >= 1 that works

    Raises:
        FieldArithmeticException: if the hinted power is not a normal element
    """
    if exponent_hint is not None:
        basis = _normal_basis_for(field, exponent_hint)
        if basis is None:
            raise FieldArithmeticException(
                f"alpha^{exponent_hint} does not generate a normal basis",
                {"modulus": field.modulus.to_hex(), "exponent": exponent_hint},
            )
        return basis
    for k in range(1, 1 << field.n):
        basis = _normal_basis_for(field, k)
        if basis is not None:
            return basis
    raise FieldArithmeticException(
        "No power of alpha generates a normal basis", {"modulus": field.modulus.to_hex()}
    )


def _load_normal_bases(path: Path) -> Dict[int, Dict[str, Any]]:
    """Load the per-degree modulus and exponent table."""
    if not path.exists():
        logger.warning("normal_bases_file_missing", file=str(path))
        return {}
    try:
        with open(path, "r") as f:
            config = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigurationException(
            f"Invalid normal bases file: {path}", {"file": str(path), "error": str(e)}
        ) from e

    entries = config.get("normal_bases", {})
    if not isinstance(entries, dict):
        raise ConfigurationException(
            "normal_bases must map degrees to entries", {"file": str(path)}
        )
    table: Dict[int, Dict[str, Any]] = {}
    for degree, entry in entries.items():
        try:
            modulus = GF2Poly.parse(str(entry["modulus"]))
            exponent = int(entry["beta_exponent"]) if "beta_exponent" in entry else None
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationException(
                f"Malformed entry for degree {degree}", {"file": str(path), "degree": degree}
            ) from e
        if modulus.degree != int(degree):
            raise ConfigurationException(
                f"Modulus {modulus} does not have degree {degree}",
                {"file": str(path), "degree": degree},
            )
        table[int(degree)] = {"modulus": modulus, "beta_exponent": exponent}
    logger.info("normal_bases_loaded", file=str(path), degrees=sorted(table))
    return table


@lru_cache(maxsize=1)
def _configured_bases() -> Dict[int, Dict[str, Any]]:
    return _load_normal_bases(get_settings().NORMAL_BASES_FILE)


def default_modulus(n: int) -> GF2Poly:
    """Configured modulus for degree n, else the smallest irreducible with nonzero constant."""
    entry = _configured_bases().get(n)
    if entry is not None:
        return entry["modulus"]
    return smallest_modulus(n)


@lru_cache(maxsize=64)
def default_normal_basis(
    n: int, modulus: Optional[GF2Poly] = None, exponent: Optional[int] = None
) -> NormalBasis:
    """Normal basis used by tables and verification for degree n.

    Overrides replace the configured modulus or exponent. The configured
    exponent applies only together with the configured modulus.
    """
    entry = _configured_bases().get(n, {})
    if modulus is None:
        modulus = default_modulus(n)
        if exponent is None:
            exponent = entry.get("beta_exponent")
    if modulus.degree != n:
        raise DomainException(
            f"Modulus {modulus} does not have degree {n}", {"modulus": modulus.to_hex(), "n": n}
        )
    return find_normal_basis(GF2nField(modulus), exponent)


def reutenauer(x: Necklace, basis: NormalBasis) -> GF2Poly:
    """Minimal polynomial of the element a necklace spells in the normal basis.

    A necklace whose length d divides n is first repeated n/d times. Rotating
    the string applies the Frobenius, so every representative gives the same
    polynomial.

    Raises:
        DomainException: if the length does not divide n, or the necklace is all
            zeros and n > 1
    """
    d = len(x)
    if basis.n % d:
        raise DomainException(
            f"Necklace length {d} does not divide {basis.n}", {"necklace": str(x), "n": basis.n}
        )
    s = BitString(x.canonical.bits * (basis.n // d))
    if basis.n > 1 and "1" not in s.bits:
        raise DomainException(
            "The zero necklace has no image for n > 1", {"necklace": str(x), "n": basis.n}
        )
    return minimal_polynomial(basis.element(s))
