"""Invariant assembly, congruence and sign validators, bounds."""

import pytest

from welschinger import (
    GeometryKind,
    InadmissiblePair,
    UnknownInvariant,
    UnresolvableFKey,
    admissible_real_counts,
    check_congruence,
    check_sign_law,
    chi,
    chi_polynomial,
    lower_bound_report,
)
from welschinger.verification import GOLDEN_VALUES

G = GeometryKind


@pytest.mark.parametrize(
    "geometry,d,r,value",
    [(g, d, r, v) for g, table in GOLDEN_VALUES.items() for (d, r), v in table.items()],
)
def test_golden_values(geometry, d, r, value):
    assert chi(geometry, d, r).value == value


def test_ledger_reconstructs_value():
    result = chi(G.PROJECTIVE_PLANE, 7, 2)
    assert len(result.ledger) == 5
    total = 0
    for row in result.ledger:
        product = row.sign * row.assignment_count * row.multiplicity * row.f_value
        for factor in row.relative_factors:
            product *= factor
        assert product == row.contribution
        total += row.contribution
    assert total == result.value == 11776


def test_zero_invariant_with_zero_factor_keeps_row():
    result = chi(G.ELLIPSOID_QUADRIC3, 6, 1)
    assert result.value == 0
    assert len(result.ledger) == 1
    assert result.ledger[0].relative_factors == (0,)


def test_zero_invariant_with_no_trees():
    result = chi(G.ELLIPSOID_QUADRIC2, 2, 1)
    assert result.value == 0 and result.ledger == ()


def test_chi_deterministic():
    a = chi(G.PROJECTIVE_PLANE, 8, 1)
    b = chi(G.PROJECTIVE_PLANE, 8, 1)
    assert a.to_json() == b.to_json()


def test_admissible_real_counts():
    assert admissible_real_counts(G.PROJECTIVE_PLANE, 5) == [0, 2, 4, 6, 8, 10, 12, 14]
    assert admissible_real_counts(G.ELLIPSOID_QUADRIC2, 2) == [1, 3, 5, 7]
    assert admissible_real_counts(G.ELLIPSOID_QUADRIC3, 10) == [1, 3, 5, 7, 9, 11, 13, 15]
    assert admissible_real_counts(G.ELLIPSOID_QUADRIC3, 3) == []


def test_inadmissible_pairs():
    with pytest.raises(InadmissiblePair):
        chi(G.PROJECTIVE_PLANE, 5, 1)
    with pytest.raises(InadmissiblePair):
        chi(G.ELLIPSOID_QUADRIC2, 2, 2)
    with pytest.raises(InadmissiblePair):
        chi(G.ELLIPSOID_QUADRIC3, 4, 0)  # a real point is required
    with pytest.raises(InadmissiblePair):
        chi(G.ELLIPSOID_QUADRIC3, 5, 1)  # odd degree


def test_missing_tables_abort_with_tree_context():
    # the r=2 invariant of the degree-4 threefold needs a two-pair cotangent
    # value outside the curated closure
    with pytest.raises(UnresolvableFKey, match="tree"):
        chi(G.ELLIPSOID_QUADRIC3, 4, 2)
    # degree 9 needs plane relative invariants beyond the curated range
    with pytest.raises((UnknownInvariant, UnresolvableFKey)):
        chi(G.PROJECTIVE_PLANE, 9, 0)


def test_chi_polynomial_examples():
    poly = chi_polynomial(G.ELLIPSOID_QUADRIC2, 2, 7)
    assert poly.coefficients == {1: 0, 3: 2, 5: 4, 7: 6}
    assert poly.unavailable == {}

    poly = chi_polynomial(G.PROJECTIVE_PLANE, 6, 3)
    assert poly.coefficients == {1: 1024, 3: 1536}

    poly = chi_polynomial(G.PROJECTIVE_PLANE, 7, 2)
    assert poly.coefficients == {0: -14336, 2: 11776}


def test_chi_polynomial_reports_unavailable():
    # degree 9 needs relative invariants beyond the curated range at every r
    poly = chi_polynomial(G.PROJECTIVE_PLANE, 9, 2)
    assert poly.coefficients == {}
    assert set(poly.unavailable) == {0, 2}


def test_congruence_examples():
    report = check_congruence(G.PROJECTIVE_PLANE, 7, 0, -14336)
    required = {c.name: c.modulus for c in report.clauses if c.applicable}
    assert required["pair-gap"] == 512 and required["pair-gap-aligned"] == 1024
    assert report.passed

    report = check_congruence(G.ELLIPSOID_QUADRIC3, 10, 1, -896)
    assert [c.modulus for c in report.clauses if c.applicable] == [64]
    assert report.passed

    report = check_congruence(G.ELLIPSOID_QUADRIC2, 5, 1, 26880)
    required = {c.name: c.modulus for c in report.clauses if c.applicable}
    assert required["pair-gap"] == 256
    assert "pair-gap-aligned" not in required  # 26880 = 2^8 * 105 is sharp
    assert report.passed


def test_congruence_failure_detected():
    assert not check_congruence(G.PROJECTIVE_PLANE, 7, 0, -14336 + 2).passed


def test_all_goldens_pass_congruence_and_sign():
    for geometry, table in GOLDEN_VALUES.items():
        for (d, r), value in table.items():
            assert check_congruence(geometry, d, r, value).passed
            report = check_sign_law(geometry, d, r, value)
            assert report.passed


def test_sign_law_examples():
    assert check_sign_law(G.PROJECTIVE_PLANE, 7, 0, -14336).passed
    assert check_sign_law(G.ELLIPSOID_QUADRIC2, 4, 1, -256).passed
    assert check_sign_law(G.ELLIPSOID_QUADRIC3, 6, 1, 0).passed
    assert not check_sign_law(G.PROJECTIVE_PLANE, 7, 0, 14336).passed
    assert not check_sign_law(G.ELLIPSOID_QUADRIC3, 10, 1, 896).passed
    # not applicable beyond one real point
    assert check_sign_law(G.PROJECTIVE_PLANE, 7, 2, 11776).applicable is False


def test_lower_bound_report():
    assert lower_bound_report(G.PROJECTIVE_PLANE, 6, 1).abs_lower_bound == 1024
    assert lower_bound_report(G.PROJECTIVE_PLANE, 4, 1).abs_lower_bound == 0
    report = lower_bound_report(G.ELLIPSOID_QUADRIC3, 2, 1)
    assert report.abs_lower_bound == 1
    assert report.upper_bound is None


def test_json_uses_decimal_strings_beyond_int64():
    from welschinger.assembly import _json_int

    assert _json_int(2**62) == 2**62
    assert _json_int(2**63) == str(2**63)
    assert _json_int(-(2**63)) == -(2**63)
    assert _json_int(-(2**63) - 1) == str(-(2**63) - 1)
