"""Unit tests for twisted shifts and +/-1 sequences."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.symbolic.shiftdyn import (
    PmSequence,
    extended_twisted_shift,
    f_orbit,
    ftilde_orbit,
    omega,
    orbit_of,
    pm_twisted_shift,
    twisted_shift,
)
from src.core.symbolic.words import BitString, SignedBitString, rotate_left
from src.utils.exceptions import DomainException, ValidationException


def _items(orbit):
    return [str(item) for item in orbit.items]


def test_twisted_shift():
    """Test that F shifts left and complements a leading 0."""
    assert twisted_shift(BitString("1011")).bits == "1000"
    assert twisted_shift(BitString("1110")).bits == "1101"
    assert twisted_shift(BitString("0111")).bits == "1110"


def test_extended_twisted_shift_flips_on_trailing_zero():
    """Test the sign rule of the extended shift."""
    assert str(extended_twisted_shift(SignedBitString.parse("1001+"))) == "1100-"
    assert str(extended_twisted_shift(SignedBitString.parse("1100-"))) == "1001-"


def test_f_orbit():
    """Test the F-orbit of a non-reflexive class."""
    orbit = f_orbit(BitString("1011"))
    assert _items(orbit) == ["1011", "1000", "1110", "1101"]
    assert orbit.ranks() == (2, 1, 4, 3)


def test_f_orbit_preconditions():
    """Test that f_orbit needs a leading 1 and a non-reflexive class."""
    with pytest.raises(DomainException):
        f_orbit(BitString("0111"))
    with pytest.raises(DomainException):
        f_orbit(BitString("1001"))


def test_ftilde_orbit():
    """Test the extended orbit of a reflexive class."""
    orbit = ftilde_orbit(BitString("100011"))
    assert _items(orbit) == ["100011-", "111000+", "110001+", "100011+", "111000-", "110001-"]
    assert _items(ftilde_orbit(BitString("10"))) == ["10-", "10+"]
    with pytest.raises(DomainException):
        ftilde_orbit(BitString("1000"))


def test_orbit_of_dispatches_on_reflexivity():
    """Test that orbit_of picks the extended orbit for reflexive classes."""
    assert _items(orbit_of(BitString("1000"))) == ["1000", "1110", "1101", "1011"]
    assert _items(orbit_of(BitString("1001")))[0] == "1001-"


def test_omega_running_parity():
    """Test omega on the worked examples."""
    assert omega(BitString("0111")).entries == (1, -1, 1, -1)
    assert omega(BitString("1000")).entries == (-1, -1, -1, -1)
    assert str(omega(BitString("0111"))) == "+1,-1,+1,-1"


def test_pm_twisted_shift():
    """Test F on one period of a +/-1 sequence."""
    assert pm_twisted_shift(PmSequence((1, -1, 1, -1))).entries == (-1, 1, -1, -1)
    assert pm_twisted_shift(PmSequence((-1, -1, -1, -1))).entries == (1, 1, 1, -1)


def test_pm_sequence_parse():
    """Test parsing and validation of +/-1 sequences."""
    assert PmSequence.parse("(+1,-1,1)").entries == (1, -1, 1)
    with pytest.raises(ValidationException):
        PmSequence.parse("1,0,1")
    with pytest.raises(ValidationException):
        PmSequence.parse("a,b")


@given(st.text(alphabet="01", min_size=1, max_size=14))
def test_omega_semiconjugates_rotation(bits):
    """Property: F(omega(s)) = omega(L(s)) for the left rotation L."""
    s = BitString(bits)
    assert pm_twisted_shift(omega(s)) == omega(rotate_left(s))


@given(st.text(alphabet="01", min_size=1, max_size=14))
def test_signature_is_weight_parity(bits):
    """Property: the signature is (-1) to the number of 1s, and F keeps it."""
    s = BitString(bits)
    e = omega(s)
    assert e.signature == (-1) ** s.weight
    assert pm_twisted_shift(e).signature == e.signature
