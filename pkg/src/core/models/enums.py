"""Enumerations shared across the core packages."""
from enum import Enum, IntEnum


class Sign(IntEnum):
    """Sign carried by extended strings; MINUS sorts before PLUS."""

    MINUS = -1
    PLUS = 1

    def flipped(self) -> "Sign":
        return Sign(-self.value)

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"


class SetName(str, Enum):
    """Named sets of the main correspondence."""

    N_MINUS = "n-minus"
    N_PLUS = "n-plus"
    N_TILDE_PLUS = "n-tilde-plus"
    N_BAR = "n-bar"
    N_BAR_1 = "n-bar-1"
    N_BAR_2 = "n-bar-2"
    CUP = "cup"
    I_MINUS = "i-minus"
    I_TILDE_PLUS = "i-tilde-plus"
    D_BAR = "d-bar"


class InversionKind(str, Enum):
    """Whether an inversion class is closed under inversion."""

    REFLEXIVE = "n-bar-1"
    NON_REFLEXIVE = "n-bar-2"


class PolynomialKind(str, Enum):
    """Irreducible polynomial families."""

    I_MINUS = "i-minus"
    I_TILDE_PLUS = "i-tilde-plus"


class DTag(str, Enum):
    """Involution classes of doubling-map cycles."""

    SELF_PAIRED = "d-bar-1"
    SWAPPED = "d-bar-2"


class MapName(str, Enum):
    """Maps reachable from `map`."""

    XI = "xi"
    XI_INV = "xi-inv"
    PSI_PLUS = "psi-plus"
    THETA_PLUS = "theta-plus"
    PHI = "phi"
    LAMBDA = "lambda"
    WR_PHI = "wr-phi"
    WR_PSI = "wr-psi"
    ITINERARY = "itinerary"
    A_OF_SIGMA = "a-of-sigma"
    REUTENAUER = "reutenauer"
    CLASSIFY = "classify"
    TWISTED_SHIFT = "twisted-shift"
    EXTENDED_TWISTED_SHIFT = "extended-twisted-shift"
    F_ORBIT = "f-orbit"
    FTILDE_ORBIT = "ftilde-orbit"
    OMEGA = "omega"
    PM_TWISTED_SHIFT = "pm-twisted-shift"
    KNEADING_SEQUENCE = "kneading-sequence"
    KNEADING_ANGLE = "kneading-angle"
    DOUBLING = "doubling"
    FOLD = "fold"
    TENT = "tent"
    MODIFIED_TENT = "modified-tent"


class OutputFormat(str, Enum):
    """Output renderings."""

    PLAIN = "plain"
    JSON = "json"
    CSV = "csv"


class TableOrder(str, Enum):
    """Row orderings for `table`."""

    ASCENDING_C = "ascending-c"
    DESCENDING_C = "descending-c"


class Suite(str, Enum):
    """Verification suites."""

    BIJECTIONS = "bijections"
    WEISS_ROGERS = "weiss_rogers"
    GF2 = "gf2"
    GLEASON = "gleason"
    COUNTING = "counting"
    DYNAMICS = "dynamics"


class CheckStatus(str, Enum):
    """Verdict of one named check."""

    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"
