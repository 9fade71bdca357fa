"""Unit tests for binary words, necklaces and inversion classes."""
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.models.enums import InversionKind, SetName
from src.core.symbolic.words import (
    BitString,
    InversionClass,
    Necklace,
    SignedBitString,
    classify_inversion_class,
    doubled,
    enumerate_set,
    invert,
    is_k_alternating,
    is_n_tilde_plus,
    is_primitive,
    is_reflexive,
    rotate_left,
    rotations,
)
from src.utils.exceptions import DomainException, ValidationException

binary = st.text(alphabet="01", min_size=1, max_size=12)


def _strings(values):
    return [str(x) for x in values]


def test_bitstring_rejects_non_binary():
    """Test that only 0/1 words parse."""
    with pytest.raises(ValidationException):
        BitString.parse("0121")
    with pytest.raises(ValidationException):
        BitString.parse("")


def test_bitstring_from_int_pads():
    """Test zero padding to the requested length."""
    assert BitString.from_int(3, 4).bits == "0011"
    assert BitString.from_int(3, 4).to_int() == 3
    with pytest.raises(ValidationException):
        BitString.from_int(16, 4)


def test_rotate_and_invert():
    """Test the left rotation and the complement."""
    assert rotate_left(BitString("0111")).bits == "1110"
    assert rotate_left(BitString("0111"), 2).bits == "1101"
    assert invert(BitString("0110")).bits == "1001"


def test_primitive_and_reflexive():
    """Test primitivity and reflexivity on small strings."""
    assert is_primitive(BitString("0011"))
    assert not is_primitive(BitString("0101"))
    assert is_primitive(BitString("0"))
    assert is_reflexive(BitString("0011"))
    assert not is_reflexive(BitString("0001"))


def test_k_alternating_examples():
    """Test k-alternation on strings of length 6."""
    assert not is_k_alternating(BitString("010101"), 3)
    assert is_k_alternating(BitString("011001"), 3)
    assert is_k_alternating(BitString("010101"), 1)
    assert is_k_alternating(BitString("0011"), 2)
    assert not is_k_alternating(BitString("0101"), 2)


def test_necklace_canonical_form():
    """Test that a necklace is stored by its smallest rotation."""
    assert Necklace.of("0110").canonical.bits == "0011"
    assert Necklace.parse("<1100>") == Necklace.of("0011")
    assert Necklace.parse("⟨1000⟩") == Necklace.of("0001")
    with pytest.raises(ValidationException):
        Necklace(BitString("0110"))


def test_necklace_doubled_and_half():
    """Test the doubled embedding and its inverse."""
    x = doubled(Necklace.of("01"))
    assert x == Necklace.of("0101")
    assert x.is_doubled
    assert x.half == Necklace.of("01")
    assert not Necklace.of("0000").is_doubled
    with pytest.raises(DomainException):
        _ = Necklace.of("0011").half


def test_inversion_class_members():
    """Test the members of a class under rotation and complement."""
    y = InversionClass.of("1100")
    assert str(y) == "[0011]"
    assert _strings(y.members()) == ["0011", "0110", "1001", "1100"]
    assert InversionClass.of("0111") == InversionClass.of("0001")


def test_classify_inversion_class():
    """Test placing classes in N-bar-1 or N-bar-2."""
    assert classify_inversion_class(InversionClass.of("0011")) == InversionKind.REFLEXIVE
    assert classify_inversion_class(InversionClass.of("0001")) == InversionKind.NON_REFLEXIVE
    with pytest.raises(DomainException):
        classify_inversion_class(InversionClass.of("0101"))


def test_signed_bitstring_parse():
    """Test the trailing sign of extended strings."""
    x = SignedBitString.parse("100011-")
    assert str(x) == "100011-"
    assert SignedBitString.parse("100011-") < SignedBitString.parse("100011+")
    with pytest.raises(ValidationException):
        SignedBitString.parse("100011")


def test_is_n_tilde_plus():
    """Test membership in N-tilde-plus."""
    assert is_n_tilde_plus(Necklace.of("0011"))
    assert is_n_tilde_plus(Necklace.of("0101"))
    assert not is_n_tilde_plus(Necklace.of("0001"))
    assert not is_n_tilde_plus(Necklace.of("0000"))


def test_enumerate_sets_n4():
    """Test every necklace set for n = 4."""
    assert _strings(enumerate_set(SetName.N_MINUS, 4)) == ["0001", "0111"]
    assert _strings(enumerate_set(SetName.N_PLUS, 4)) == ["0011"]
    assert _strings(enumerate_set(SetName.N_TILDE_PLUS, 4)) == ["0011", "0101"]
    assert _strings(enumerate_set(SetName.N_BAR, 4)) == ["[0001]", "[0011]"]
    assert _strings(enumerate_set(SetName.N_BAR_1, 4)) == ["[0011]"]
    assert _strings(enumerate_set(SetName.N_BAR_2, 4)) == ["[0001]"]


def test_enumerate_n_tilde_plus_n6():
    """Test that N-tilde-plus(6) holds the five (N2) necklaces."""
    assert _strings(enumerate_set(SetName.N_TILDE_PLUS, 6)) == [
        "000011",
        "000101",
        "001001",
        "001111",
        "010111",
    ]


@pytest.mark.parametrize("n,gamma", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 5), (7, 9)])
def test_set_sizes_equal_gamma(n, gamma):
    """Test |N-minus| = |N-tilde-plus| = |N-bar| = gamma_n."""
    assert len(enumerate_set(SetName.N_MINUS, n)) == gamma
    assert len(enumerate_set(SetName.N_TILDE_PLUS, n)) == gamma
    assert len(enumerate_set(SetName.N_BAR, n)) == gamma


def test_enumerate_set_errors():
    """Test that non-necklace sets and n < 1 are rejected."""
    with pytest.raises(DomainException):
        enumerate_set(SetName.CUP, 4)
    with pytest.raises(DomainException):
        enumerate_set(SetName.N_MINUS, 0)


@given(binary, st.integers(min_value=0, max_value=11))
def test_necklace_ignores_rotation(bits, k):
    """Property: rotating a string never changes its necklace."""
    s = BitString(bits)
    assert Necklace.of(rotate_left(s, k % len(s))) == Necklace.of(s)


@given(binary)
def test_inversion_class_ignores_complement(bits):
    """Property: a string and its complement share an inversion class."""
    s = BitString(bits)
    assert InversionClass.of(invert(s)) == InversionClass.of(s)
    assert s in InversionClass.of(s).members()


@given(binary)
def test_rotations_are_distinct_iff_primitive(bits):
    """Property: exactly the primitive strings have n distinct rotations."""
    s = BitString(bits)
    assert (len(set(rotations(s))) == len(s)) == is_primitive(s)


@pytest.mark.parametrize("n", range(1, 13))
def test_primitive_reflexive_strings_are_two_alternating(n):
    """Test every primitive reflexive string of length n is s' i(s')."""
    for bits in product("01", repeat=n):
        s = BitString("".join(bits))
        if is_primitive(s) and is_reflexive(s):
            assert n % 2 == 0
            assert is_k_alternating(s, 2), s.bits


@given(st.text(alphabet="01", min_size=1, max_size=10), st.integers(min_value=0, max_value=19))
def test_reflexive_rotations_stay_two_alternating(half, k):
    """Property: rotations of s' i(s') that are primitive are 2-alternating."""
    base = BitString(half + invert(BitString(half)).bits)
    s = rotate_left(base, k % len(base))
    assert is_reflexive(s)
    if is_primitive(s):
        assert is_k_alternating(s, 2)


@pytest.mark.parametrize("n", range(1, 13))
def test_reflexive_classes_match_half_length_odd_necklaces(n):
    """Test |N-bar-1(n)| = |N-minus(n/2)|, and N-bar-1 is empty for odd n."""
    reflexive = enumerate_set(SetName.N_BAR_1, n)
    if n % 2:
        assert reflexive == []
    else:
        assert len(reflexive) == len(enumerate_set(SetName.N_MINUS, n // 2))


@pytest.mark.slow
@pytest.mark.parametrize("n", range(13, 17))
def test_reflexive_classes_match_half_length_odd_necklaces_large(n):
    """Test the reflexive class count up to n = 16."""
    reflexive = enumerate_set(SetName.N_BAR_1, n)
    if n % 2:
        assert reflexive == []
    else:
        assert len(reflexive) == len(enumerate_set(SetName.N_MINUS, n // 2))
