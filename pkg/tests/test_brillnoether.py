import csv
import io
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interpoly import (
    CurveClass,
    InvalidGenusError,
    NO_EXCEPTION,
    NORMAL_BUNDLE_EXCEPTIONS,
    NOT_APPLICABLE,
    POINT_EXCEPTIONS,
    SeededRng,
    YES,
    bn_dimension,
    bn_table,
    bn_table_csv,
    expected_points,
    genus_moduli_dimension,
    hypersurface_count,
    interpolation_verdict,
    max_plane_genus,
    normal_bundle_verdict,
    plane_interpolation_count,
    rho,
    section_space_dim,
)


def test_rho_examples():
    assert rho(CurveClass(0, 2, 2)) == 0
    assert rho(CurveClass(2, 3, 5)) == 2
    assert rho(CurveClass(4, 3, 6)) == 0
    assert rho(CurveClass(2, 5, 7)) == 2
    assert rho(CurveClass(6, 5, 10)) == 0
    assert rho(CurveClass(78, 23, 98)) == 6 >= 0


def test_bn_dimension_examples():
    assert bn_dimension(CurveClass(78, 23, 98)) == 812
    assert bn_dimension(CurveClass(1, 3, 4)) == 16
    for d in range(1, 11):
        for g in range(0, max_plane_genus(d) + 1):
            assert bn_dimension(CurveClass(g, 2, d)) == 3 * d + g - 1


def test_bn_dimension_gated_by_rho_for_space_curves():
    assert rho(CurveClass(5, 3, 3)) < 0
    assert bn_dimension(CurveClass(5, 3, 3)) is None
    assert expected_points(CurveClass(5, 3, 3)) is None


def test_bn_dimension_r2_exists_even_when_rho_negative():
    # degree-5 plane curves of maximal genus 6 have rho < 0, but the plane
    # family exists and has the classical dimension
    c = CurveClass(6, 2, 5)
    assert rho(c) < 0
    assert bn_dimension(c) == 3 * 5 + 6 - 1 == 20
    assert expected_points(c) == 20


def test_expected_points_examples():
    assert expected_points(CurveClass(1, 3, 4)) == 8
    assert expected_points(CurveClass(78, 23, 98)) == 36
    assert expected_points(CurveClass(6, 5, 10)) == 12
    assert expected_points(CurveClass(2, 3, 5)) == 10
    assert expected_points(CurveClass(4, 3, 6)) == 12
    assert expected_points(CurveClass(2, 5, 7)) == 10


def test_verdict_for_good_class():
    rep = interpolation_verdict(CurveClass(1, 3, 4))
    assert rep.bn_exists and rep.bn_dim == 16
    assert rep.expected_points == 8
    assert rep.interpolates == YES
    assert rep.exception_note is None and rep.obstruction_bound is None
    assert rep.nb_interpolation is True


@pytest.mark.parametrize(
    "key,bound",
    [((2, 3, 5), 9), ((4, 3, 6), 9), ((2, 5, 7), 9), ((6, 5, 10), 11)],
)
def test_verdict_for_exceptional_classes(key, bound):
    rep = interpolation_verdict(CurveClass(*key))
    assert rep.bn_exists
    assert rep.interpolates == NO_EXCEPTION
    assert rep.obstruction_bound == bound
    assert str(bound) in rep.exception_note
    assert rep.expected_points > bound
    assert rep.nb_interpolation is False


def test_verdict_when_no_component():
    rep = interpolation_verdict(CurveClass(10, 3, 3))
    assert rep.rho < 0
    assert not rep.bn_exists
    assert rep.bn_dim is None and rep.expected_points is None
    assert rep.interpolates == NOT_APPLICABLE
    assert rep.nb_interpolation is False


def test_exception_sets_nested():
    assert NORMAL_BUNDLE_EXCEPTIONS > frozenset(POINT_EXCEPTIONS)
    assert NORMAL_BUNDLE_EXCEPTIONS - frozenset(POINT_EXCEPTIONS) == {(2, 4, 6)}


def test_normal_bundle_extra_exception_any_characteristic():
    for ch in (0, 2, 3, 101):
        assert normal_bundle_verdict(CurveClass(2, 4, 6), ch) is False
    assert interpolation_verdict(CurveClass(2, 4, 6)).interpolates == YES


def test_char2_parity_rule_for_rational_curves():
    assert normal_bundle_verdict(CurveClass(0, 3, 4), 2) is False  # 4 % 2 != 1
    assert normal_bundle_verdict(CurveClass(0, 3, 5), 2) is True  # 5 % 2 == 1
    assert normal_bundle_verdict(CurveClass(0, 3, 4), 0) is True
    rep = interpolation_verdict(CurveClass(0, 3, 4), characteristic=2)
    assert rep.char2_constraint_violated is True
    assert interpolation_verdict(CurveClass(0, 3, 5), characteristic=2).char2_constraint_violated is False


def test_characteristic_ignored_unless_two_and_genus_zero():
    rng = SeededRng(31)
    for _ in range(200):
        c = CurveClass(rng.randrange(12), 2 + rng.randrange(6), 1 + rng.randrange(15))
        for ch in (3, 5, 101):
            assert normal_bundle_verdict(c, ch) == normal_bundle_verdict(c, 0)
        if c.g != 0:
            assert normal_bundle_verdict(c, 2) == normal_bundle_verdict(c, 0)


def test_characteristic_validation():
    with pytest.raises(ValueError):
        normal_bundle_verdict(CurveClass(0, 3, 5), 4)
    with pytest.raises(ValueError):
        interpolation_verdict(CurveClass(0, 3, 5), characteristic=-1)


def test_section_space_dim():
    c = CurveClass(1, 3, 4)
    assert section_space_dim(c, 0) == bn_dimension(c) == 16
    assert section_space_dim(c, 8) == 0
    assert section_space_dim(c, 10**9) == 0
    with pytest.raises(ValueError):
        section_space_dim(c, -1)


def test_section_space_dim_monotone_and_floor_boundary():
    rng = SeededRng(32)
    for _ in range(300):
        c = CurveClass(rng.randrange(15), 2 + rng.randrange(8), 1 + rng.randrange(25))
        if rho(c) < 0:
            continue
        e = expected_points(c)
        dims = [section_space_dim(c, n) for n in range(e + 3)]
        assert all(a >= b for a, b in zip(dims, dims[1:]))
        assert section_space_dim(c, e + 1) == 0
        if e >= 1:
            assert section_space_dim(c, e - 1) > 0
        remainder = bn_dimension(c) % (c.r - 1)
        assert (section_space_dim(c, e) == 0) == (remainder == 0)


def test_plane_interpolation_count_examples():
    assert plane_interpolation_count(2, 0) == 5
    assert plane_interpolation_count(3, 1) == 9
    assert plane_interpolation_count(3, 0) == 8
    assert plane_interpolation_count(14, 78) == 119
    assert max_plane_genus(14) == comb(13, 2) == 78


def test_plane_interpolation_count_genus_range():
    with pytest.raises(InvalidGenusError):
        plane_interpolation_count(2, 1)
    with pytest.raises(InvalidGenusError):
        plane_interpolation_count(3, 2)
    with pytest.raises(InvalidGenusError):
        plane_interpolation_count(5, -1)


def test_max_plane_genus():
    assert max_plane_genus(1) == 0
    assert max_plane_genus(2) == 0
    assert max_plane_genus(3) == 1
    assert max_plane_genus(14) == 78


def test_hypersurface_count():
    assert hypersurface_count(3, 2) == 9
    for d in range(1, 31):
        assert hypersurface_count(2, d) == d * (d + 3) // 2
        assert hypersurface_count(1, d) == d


def test_documented_family_dimensions():
    # plane curves of degree 14 and their images under 24 degree-7 maps
    plane_family = comb(16, 2) - 1
    assert plane_family == hypersurface_count(2, 14) == 119
    first_family = plane_family + 24 * comb(9, 2) - 1 - 8
    assert first_family == 974
    assert bn_dimension(CurveClass(78, 23, 98)) == 812
    assert genus_moduli_dimension(78) == 3 * 78 - 3 == 231
    assert plane_family - 8 == 111
    with pytest.raises(ValueError):
        genus_moduli_dimension(1)


def test_r2_reduction_matches_plane_theorem():
    for d in range(1, 31):
        for g in range(0, max_plane_genus(d) + 1):
            c = CurveClass(g, 2, d)
            assert expected_points(c) == plane_interpolation_count(d, g) == 3 * d + g - 1
            assert bn_dimension(c) % (c.r - 1) == 0


def test_cramer_identity():
    for d in range(1, 31):
        assert (
            plane_interpolation_count(d, max_plane_genus(d))
            == d * (d + 3) // 2
            == hypersurface_count(2, d)
        )


@settings(derandomize=True, max_examples=150)
@given(st.integers(0, 40), st.integers(3, 12), st.integers(1, 60))
def test_expected_points_is_floor_of_dimension(g, r, d):
    c = CurveClass(g, r, d)
    if rho(c) >= 0:
        dim = bn_dimension(c)
        e = expected_points(c)
        assert e * (r - 1) <= dim < (e + 1) * (r - 1)


def test_curve_class_validation():
    with pytest.raises(ValueError):
        CurveClass(-1, 3, 5)
    with pytest.raises(ValueError):
        CurveClass(0, 1, 5)
    with pytest.raises(ValueError):
        CurveClass(0, 3, 0)


def test_bn_table_flags_exactly_the_exceptions():
    reports = bn_table(6, 5, 10)
    flagged = {r.curve.key() for r in reports if r.interpolates == NO_EXCEPTION}
    assert flagged == set(POINT_EXCEPTIONS)
    assert len(reports) == 7 * 4 * 10


def test_bn_table_row_order():
    reports = bn_table(1, 3, 2)
    keys = [r.curve.key() for r in reports]
    assert keys == [
        (0, 2, 1), (0, 2, 2), (0, 3, 1), (0, 3, 2),
        (1, 2, 1), (1, 2, 2), (1, 3, 1), (1, 3, 2),
    ]


def test_bn_table_all_no_component_box():
    reports = bn_table(1, 3, 1)
    assert all(rho(r.curve) < 0 for r in reports)
    assert all(not r.bn_exists and r.interpolates == NOT_APPLICABLE for r in reports)
    assert all(r.bn_dim is None for r in reports)


def test_bn_table_genus_zero_plane_slice():
    for rep in bn_table(0, 2, 12):
        d = rep.curve.d
        assert rep.expected_points == 3 * d - 1 == plane_interpolation_count(d, 0)


def test_bn_table_bounds_validation():
    with pytest.raises(ValueError):
        bn_table(-1, 5, 5)
    with pytest.raises(ValueError):
        bn_table(0, 1, 5)


def test_bn_table_csv_format():
    text = bn_table_csv(bn_table(2, 3, 5))
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == [
        "g", "r", "d", "rho", "bn_exists", "bn_dim", "expected_points",
        "interpolates", "exception_note", "nb_char0", "nb_char2",
    ]
    assert len(rows) == 1 + 3 * 2 * 5
    by_key = {(int(r[0]), int(r[1]), int(r[2])): r for r in rows[1:]}
    row = by_key[(2, 3, 5)]
    assert row[3] == "2" and row[4] == "true" and row[5] == "20" and row[6] == "10"
    assert row[7] == NO_EXCEPTION and "9" in row[8]
    assert row[9] == "false" and row[10] == "false"
    # no component: rho and existence only, the rest empty
    row = by_key[(2, 3, 1)]
    assert row[4] == "false" and row[5] == "" and row[6] == "" and row[8] == ""
    # genus-0 space curves pick up the characteristic-2 parity rule
    row = by_key[(0, 3, 4)]
    assert row[9] == "true" and row[10] == "false"
