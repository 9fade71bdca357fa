"""Named checks making up each verification suite.

Every builder returns (name, thunk) pairs for one n. Thunks return True when
the property holds; anything raised inside a thunk is recorded as an error.
"""
from typing import Callable, Dict, List, Tuple

from src.config import get_settings
from src.core.algebra.gf2 import GF2Poly, factor, is_centered, enumerate_irreducibles
from src.core.algebra.gf2n import default_normal_basis, reutenauer, trace
from src.core.counting.formulas import appendix_counts, gamma, mobius
from src.core.counting.subset_sums import subset_sum_counts
from src.core.gleason.angles import (
    Angle,
    angle_bits,
    dbar_tag_matches_reflexivity,
    doubling_map,
    doubling_orbit,
    enumerate_dbar,
    extended_encoding,
    extended_modified_tent_map,
    extended_unfold,
    fold,
    is_closest_to_half,
    modified_tent_map,
    tent_map,
)
from src.core.gleason.polynomials import gleason, gleason_mod2, proper_divisors, qn, reduce_mod2
from src.core.gleason.roots import certify_bracket, real_roots
from src.core.gleason.rows import assemble_row, correspondence_checks
from src.core.models.enums import PolynomialKind, SetName, Suite
from src.core.symbolic.bijections import (
    class_start_representative,
    enumerate_cup,
    is_satellite_cup,
    lambda_map,
    lemma_start_is_orbit_minimum,
    phi,
    psi_plus,
    theta_plus,
    wr_phi,
    wr_psi,
)
from src.core.symbolic.shiftdyn import (
    extended_twisted_shift,
    ftilde_orbit,
    omega,
    orbit_of,
    pm_twisted_shift,
    twisted_shift,
)
from src.core.symbolic.words import (
    BitString,
    InversionClass,
    Necklace,
    doubled,
    enumerate_set,
    is_k_alternating,
    is_primitive,
    is_reflexive,
    rotate_left,
)

Check = Tuple[str, Callable[[], bool]]

# exhaustive walks over all 2^n strings stop here
MAX_N_STRINGS = 12


def _necklaces(name: SetName, n: int) -> List[Necklace]:
    return [x for x in enumerate_set(name, n) if isinstance(x, Necklace)]


def _classes(name: SetName, n: int) -> List[InversionClass]:
    return [y for y in enumerate_set(name, n) if isinstance(y, InversionClass)]


def _all_strings(n: int) -> List[BitString]:
    return [BitString.from_int(v, n) for v in range(1 << n)]


def _orbits_distinct(n: int) -> bool:
    for y in _classes(SetName.N_BAR, n):
        orbit_of(class_start_representative(y)).ranks()
    return True


def _ftilde_halves(n: int) -> bool:
    half = n // 2
    for y in _classes(SetName.N_BAR_1, n):
        items = ftilde_orbit(class_start_representative(y)).items
        for i in range(half):
            first, second = items[i], items[i + half]
            if first.word != second.word or first.sign == second.sign:
                return False
    return True


def _lambda_representative_independent(n: int) -> bool:
    for y in _classes(SetName.N_BAR, n):
        images = {lambda_map(y, t) for t in y.members() if t.bits[0] == "1"}
        if len(images) != 1:
            return False
    return True


def _psi_image_split(n: int) -> bool:
    plus = {psi_plus(x) for x in _necklaces(SetName.N_PLUS, n)}
    if plus != set(_classes(SetName.N_BAR_2, n)):
        return False
    if n % 2:
        return not _classes(SetName.N_BAR_1, n)
    halves = {psi_plus(doubled(x)) for x in _necklaces(SetName.N_MINUS, n // 2)}
    return halves == set(_classes(SetName.N_BAR_1, n))


def bijection_checks(n: int) -> List[Check]:
    settings = get_settings()
    tilde_plus = _necklaces(SetName.N_TILDE_PLUS, n)
    classes = _classes(SetName.N_BAR, n)
    g = gamma(n)
    checks: List[Check] = [
        ("n_tilde_plus_size_equals_gamma", lambda: len(tilde_plus) == g),
        ("n_bar_size_equals_gamma", lambda: len(classes) == g),
        ("theta_inverts_psi", lambda: all(theta_plus(psi_plus(x)) == x for x in tilde_plus)),
        ("psi_inverts_theta", lambda: all(psi_plus(theta_plus(y)) == y for y in classes)),
        (
            "phi_lambda_psi_is_identity",
            lambda: all(phi(lambda_map(psi_plus(x))) == x for x in tilde_plus),
        ),
        (
            "psi_phi_lambda_is_identity",
            lambda: all(psi_plus(phi(lambda_map(y))) == y for y in classes),
        ),
        ("psi_image_split", lambda: _psi_image_split(n)),
        ("lambda_representative_independent", lambda: _lambda_representative_independent(n)),
        ("orbit_items_distinct", lambda: _orbits_distinct(n)),
    ]
    if n % 2 == 0:
        checks.append(("ftilde_orbit_halves_differ_in_sign", lambda: _ftilde_halves(n)))
    if n <= settings.MAX_N_CUP:
        cup = enumerate_cup(n)
        checks += [
            ("cup_size_equals_gamma", lambda: len(cup) == g),
            (
                "lambda_psi_phi_is_identity",
                lambda: all(lambda_map(psi_plus(phi(s))) == s for s in cup),
            ),
            ("orbit_start_is_minimum", lambda: all(lemma_start_is_orbit_minimum(s) for s in cup)),
            (
                "satellite_iff_doubled",
                lambda: all(is_satellite_cup(s) == (not phi(s).is_primitive) for s in cup),
            ),
        ]
    if n <= MAX_N_STRINGS:
        strings = _all_strings(n)
        checks += [
            (
                "omega_semiconjugates_shift",
                lambda: all(pm_twisted_shift(omega(s)) == omega(rotate_left(s)) for s in strings),
            ),
            (
                "signature_matches_weight_parity",
                lambda: all((omega(s).signature == -1) == (s.weight % 2 == 1) for s in strings),
            ),
            (
                "twisted_shift_starts_with_one",
                lambda: all(twisted_shift(s).bits[0] == "1" for s in strings),
            ),
            (
                "reflexive_strings_are_two_alternating",
                lambda: all(
                    is_k_alternating(s, 2)
                    for s in strings
                    if is_primitive(s) and is_reflexive(s)
                ),
            ),
        ]
    return checks


def weiss_rogers_checks(n: int) -> List[Check]:
    minus = _necklaces(SetName.N_MINUS, n)
    g = gamma(n)
    checks: List[Check] = [
        ("n_minus_size_equals_gamma", lambda: len(minus) == g),
        ("psi_inverts_phi", lambda: all(wr_psi(wr_phi(x)) == x for x in minus)),
    ]
    if n <= get_settings().MAX_N_CUP:
        cup = enumerate_cup(n)
        checks.append(
            ("phi_inverts_psi", lambda: all(wr_phi(wr_psi(s)) == s for s in cup))
        )
    return checks


def _image_is(necklaces: List[Necklace], expected: List[GF2Poly], n: int) -> bool:
    basis = default_normal_basis(n)
    images = [reutenauer(x, basis) for x in necklaces]
    return len(set(images)) == len(images) and set(images) == set(expected)


def _trace_matches_weight(n: int) -> bool:
    basis = default_normal_basis(n)
    for x in _necklaces(SetName.N_MINUS, n) + _necklaces(SetName.N_TILDE_PLUS, n):
        s = x.canonical
        if trace(basis.element(s)) != s.weight % 2:
            return False
        if x.is_primitive and is_centered(reutenauer(x, basis)) != (x.weight % 2 == 0):
            return False
    return True


def _factor_degrees_split(n: int) -> bool:
    for f, _ in factor(gleason_mod2(n)):
        if f.degree == n and is_centered(f):
            continue
        if 2 * f.degree == n and not is_centered(f):
            continue
        return False
    return True


def _product(factors: List[Tuple[GF2Poly, int]]) -> GF2Poly:
    result = GF2Poly(1)
    for f, multiplicity in factors:
        result = result * f**multiplicity
    return result


def gf2_checks(n: int) -> List[Check]:
    settings = get_settings()
    g = gamma(n)
    i_minus = enumerate_irreducibles(PolynomialKind.I_MINUS, n)
    i_plus = enumerate_irreducibles(PolynomialKind.I_TILDE_PLUS, n)
    checks: List[Check] = [
        ("i_minus_size_equals_gamma", lambda: len(i_minus) == g),
        ("i_tilde_plus_size_equals_gamma", lambda: len(i_plus) == g),
        ("factors_multiply_back", lambda: _product(factor(gleason_mod2(n))) == gleason_mod2(n)),
        ("factor_count_equals_gamma", lambda: len(factor(gleason_mod2(n))) == g),
        ("factor_degrees_split", lambda: _factor_degrees_split(n)),
        (
            "factors_equal_i_tilde_plus",
            lambda: [f for f, _ in factor(gleason_mod2(n))] == i_plus,
        ),
    ]
    if n <= settings.MAX_N_REUTENAUER:
        checks += [
            (
                "reutenauer_maps_n_minus_onto_i_minus",
                lambda: _image_is(_necklaces(SetName.N_MINUS, n), i_minus, n),
            ),
            (
                "reutenauer_maps_n_tilde_plus_onto_i_tilde_plus",
                lambda: _image_is(_necklaces(SetName.N_TILDE_PLUS, n), i_plus, n),
            ),
            ("trace_matches_weight_parity", lambda: _trace_matches_weight(n)),
        ]
    return checks


def _product_identity(n: int) -> bool:
    product = gleason(n)
    for d in proper_divisors(n):
        product = product * gleason(d)
    return product == qn(n)


def gleason_checks(n: int) -> List[Check]:
    g = gamma(n)
    centers = real_roots(n)
    basis = default_normal_basis(n)
    checks: List[Check] = [
        ("product_identity", lambda: _product_identity(n)),
        ("mod2_paths_agree", lambda: reduce_mod2(gleason(n)) == gleason_mod2(n)),
        ("root_count_equals_gamma", lambda: len(centers) == g),
        ("root_count_equals_factor_count", lambda: len(centers) == len(factor(gleason_mod2(n)))),
        (
            "brackets_certified",
            lambda: all(certify_bracket(gleason(n), center.bracket) for center in centers),
        ),
        (
            "angles_descend_as_centers_ascend",
            lambda: all(
                a.kneading_angle > b.kneading_angle for a, b in zip(centers, centers[1:])
            ),
        ),
        (
            "angle_closest_to_half",
            lambda: all(is_closest_to_half(center.kneading_angle) for center in centers),
        ),
        (
            "angle_has_primitive_period",
            lambda: all(len(doubling_orbit(center.kneading_angle)) == n for center in centers),
        ),
        (
            "satellite_iff_half_degree_factor",
            lambda: all(
                row.satellite == (2 * GF2Poly.parse(row.m2).degree == n)
                for row in (assemble_row(center, basis) for center in centers)
            ),
        ),
    ]
    names = [name for name, _ in correspondence_checks(centers[0])] if centers else []
    for name in names:
        checks.append(
            (
                name,
                lambda name=name: all(
                    dict(correspondence_checks(center))[name]() for center in centers
                ),
            )
        )
    return checks


def counting_checks(n: int) -> List[Check]:
    checks: List[Check] = [
        (
            "mobius_sums_to_indicator",
            lambda: sum(mobius(d) for d in range(1, n + 1) if n % d == 0) == (n == 1),
        ),
    ]
    report = appendix_counts(n)
    checks += [(name, lambda v=verdict: v) for name, verdict in report.verdicts.items()]
    if n >= 2:
        sums = subset_sum_counts(n)
        checks += [(name, lambda v=verdict: v) for name, verdict in sums.verdicts.items()]
    return checks


def _primitive_angles(n: int) -> List[Angle]:
    m = (1 << n) - 1
    return [Angle(a, n) for a in range(m) if len(doubling_orbit(Angle(a, n))) == n]


def dynamics_checks(n: int) -> List[Check]:
    angles = _primitive_angles(n)
    upper = [theta for theta in angles if 2 * theta.numerator > theta.denominator]
    classes = enumerate_dbar(n)
    return [
        (
            "fold_semiconjugates_doubling_to_tent",
            lambda: all(fold(doubling_map(x)) == tent_map(fold(x)) for x in angles),
        ),
        (
            "digits_conjugate_modified_tent_to_twisted_shift",
            lambda: all(
                angle_bits(modified_tent_map(x)) == twisted_shift(angle_bits(x)) for x in upper
            ),
        ),
        (
            "extended_unfold_semiconjugates",
            lambda: all(
                extended_unfold(doubling_map(x)) == extended_modified_tent_map(extended_unfold(x))
                for x in angles
            ),
        ),
        (
            "extended_encoding_semiconjugates",
            lambda: all(
                extended_encoding(doubling_map(x)) == extended_twisted_shift(extended_encoding(x))
                for x in angles
            ),
        ),
        ("dbar_count_equals_gamma", lambda: len(classes) == gamma(n)),
        (
            "tau_is_bijective",
            lambda: sorted(entry.inversion_class for entry in classes)
            == _classes(SetName.N_BAR, n),
        ),
        (
            "self_paired_iff_reflexive",
            lambda: all(dbar_tag_matches_reflexivity(entry) for entry in classes),
        ),
    ]


SUITE_BUILDERS: Dict[Suite, Callable[[int], List[Check]]] = {
    Suite.BIJECTIONS: bijection_checks,
    Suite.WEISS_ROGERS: weiss_rogers_checks,
    Suite.GF2: gf2_checks,
    Suite.GLEASON: gleason_checks,
    Suite.COUNTING: counting_checks,
    Suite.DYNAMICS: dynamics_checks,
}


def suite_range(suite: Suite, max_n: int) -> range:
    """Periods a suite runs for, capped by its configured budget."""
    settings = get_settings()
    caps = {
        Suite.BIJECTIONS: settings.MAX_N_COMBINATORIAL,
        Suite.WEISS_ROGERS: settings.MAX_N_COMBINATORIAL,
        Suite.GF2: settings.MAX_N_COUNTING,
        Suite.GLEASON: settings.MAX_N_GLEASON,
        Suite.COUNTING: settings.MAX_N_COUNTING,
        Suite.DYNAMICS: settings.MAX_N_COMBINATORIAL,
    }
    start = 2 if suite == Suite.DYNAMICS else 1
    return range(start, min(max_n, caps[suite]) + 1)
