"""Dimension formulas, extremal isotropic degrees, the arbitrary-bundle
intersection numbers, and the subbundle counts."""

import pytest

from fractions import Fraction

from ogq import verify
from ogq.counting import (
    CountReport,
    NQuery,
    NotApplicableError,
    NotCoveredError,
    OddDegreeUnsupportedError,
    OddEllUnsupportedError,
    count,
    count_even,
    count_float,
    count_odd,
    expected_dim,
    expected_dim_t,
    max_iso_degree,
    n_tilde,
    n_tilde_float,
    trivial_bundle_number,
)
from ogq.quantum import UnsupportedRankError
from ogq.symfunc import parse_alpha_poly, ptilde_alpha


def test_expected_dim_examples():
    assert expected_dim(2, 0, -2, 3) == 0
    assert expected_dim(3, 0, -6, 5) == 0
    assert expected_dim(3, 0, -1, 2) == -1


def test_expected_dim_t_shifts():
    base = expected_dim(2, 0, -2, 3)
    assert expected_dim_t(2, 0, -2, 3, 0) == base
    assert expected_dim_t(2, 0, -2, 3, 1) == base - 1
    assert expected_dim_t(3, 1, -4, 4, 2) == expected_dim(3, 1, -4, 4) - 6


def test_max_iso_degree_examples():
    assert max_iso_degree(4, 3, 0) == -2
    assert max_iso_degree(5, 5, 0) == -6
    assert max_iso_degree(7, 4, 0) == -6
    assert max_iso_degree(4, 4, 0) == -3
    assert max_iso_degree(3, 2, 0) == -1
    assert max_iso_degree(4, 3, -2) == -4


def test_max_iso_degree_not_applicable():
    with pytest.raises(NotApplicableError):
        max_iso_degree(6, 4, 0)
    with pytest.raises(NotApplicableError):
        max_iso_degree(5, 4, 0)
    with pytest.raises(NotApplicableError):
        max_iso_degree(3, 3, 1)


def test_max_iso_degree_rejects_bad_input():
    with pytest.raises(UnsupportedRankError):
        max_iso_degree(2, 3, 0)
    with pytest.raises(ValueError):
        max_iso_degree(4, 1, 0)


@pytest.mark.parametrize("rank", range(4, 13, 2))
def test_expected_dim_vanishes_at_the_extremal_degree_even_rank(rank):
    n = rank // 2
    for genus in range(2, 10):
        for ell in range(-2, 4):
            try:
                e0 = max_iso_degree(rank, genus, ell)
            except NotApplicableError:
                continue
            assert expected_dim(n, ell, e0, genus) == 0


@pytest.mark.parametrize("rank", [3, 5, 7, 9, 11])
def test_extremal_degree_composition_odd_rank(rank):
    # the odd-rank extremal degree sits ell/2 below the rank+1 one
    n = (rank - 1) // 2
    for genus in range(2, 10):
        for ell in (-2, 0, 2):
            try:
                e0 = max_iso_degree(rank, genus, ell)
            except NotApplicableError:
                continue
            assert e0 + ell // 2 == max_iso_degree(rank + 1, genus, ell)
            assert expected_dim(n + 1, ell, e0 + ell // 2, genus) == 0


def test_n_tilde_headline_values():
    assert n_tilde(NQuery(3, 2, 0, -2)) == 8
    assert n_tilde(NQuery(5, 3, 0, -6)) == 1024
    # odd n, odd e route: prefactor 2^6 and a unit staircase sum
    assert n_tilde(NQuery(3, 3, 0, -3)) == 64


def test_n_tilde_zero_on_weight_mismatch():
    assert n_tilde(NQuery(3, 2, 0, -2, 0, parse_alpha_poly("a1"))) == 0
    assert n_tilde(NQuery(3, 2, 0, -2, 0, parse_alpha_poly("a1 + 1"))) == 0


def test_n_tilde_not_covered_for_even_n_odd_degree():
    with pytest.raises(NotCoveredError):
        n_tilde(NQuery(3, 2, 0, -1))


def test_n_tilde_rejects_bad_queries():
    with pytest.raises(UnsupportedRankError):
        NQuery(3, 1, 0, -2)
    with pytest.raises(ValueError):
        NQuery(-1, 2, 0, -2)
    with pytest.raises(ValueError):
        NQuery(3, 2, 0, -2, -1)


def test_n_tilde_with_staircase_insertions_and_integrand():
    # three routes to the same number: u staircase insertions, the same
    # factors folded into the integrand, and the trivial-bundle invariant
    assert n_tilde(NQuery(3, 2, 0, -4, 2)) == 8
    assert n_tilde(NQuery(3, 2, 0, -4, 0, parse_alpha_poly("a1^2"))) == 8
    assert trivial_bundle_number(3, 2, -4, 2, []) == 8
    assert trivial_bundle_number(3, 2, -4, 0, [(1,), (1,)]) == 8


def test_n_tilde_float_matches_exact():
    q = NQuery(3, 2, 0, -2)
    assert abs(n_tilde_float(q) - 8.0) <= 1e-6 * 8.0
    with pytest.raises(ValueError):
        n_tilde_float(NQuery(3, 2, 0, -2, 0, parse_alpha_poly("a1")))


HEADLINE_COUNTS = [
    (3, 4, 0, 16),
    (5, 4, 0, 64),
    (7, 4, 0, 256),
    (3, 3, 0, 8),
    (5, 3, 0, 32),
    (5, 6, 0, 2048),
    (9, 6, 0, 2 ** 19),
    (6, 6, 1, 4096),
    (5, 5, 0, 1024),
]


@pytest.mark.parametrize("genus,rank,ell,want", HEADLINE_COUNTS)
def test_headline_counts(genus, rank, ell, want):
    report = count(genus, rank, ell)
    assert report.applicable
    assert report.value == want
    assert report.required_w2 == report.e0 % 2
    assert expected_dim(
        rank // 2 if rank % 2 == 0 else (rank + 1) // 2,
        ell,
        report.e0 + (0 if rank % 2 == 0 else ell // 2),
        genus,
    ) == 0
    if (rank, ell) in {(4, 0), (3, 0), (6, 0), (6, 1), (5, 0)}:
        assert any("matches catalogued" in note for note in report.notes)


def test_count_even_report_details():
    report = count_even(3, 2, 0)
    assert report.rank == 4 and report.e0 == -2
    assert report.value == 16
    assert report.decomposition["route"] == "even_e0"
    assert report.decomposition["doubled"] is True
    assert report.decomposition["prefactor_log2"] == 3
    assert report.decomposition["staircase_power"] == 0
    odd_route = count_even(3, 3, 0)
    assert odd_route.value == 128
    assert odd_route.decomposition["route"] == "odd_e0_odd_n"


def test_count_even_hand_derived_values():
    # rank 4, g = 2, ell = 1: e0 = 0 and N = 2^4 * (1/8 + 1/8) = 4
    report = count_even(2, 2, 1)
    assert report.value == 4
    assert report.e0 == 0
    assert report.required_w2 == 0
    assert report.decomposition["doubled"] is False
    # negative ell: rank 4, g = 3, ell = -2 gives e0 = -4 and N = 16
    report = count_even(3, 2, -2)
    assert report.value == 16
    assert report.e0 == -4
    assert report.decomposition["prefactor_log2"] == 5
    assert report.decomposition["staircase_power"] == 2


def test_count_odd_halves_the_companion():
    for genus, rank in [(3, 3), (5, 3), (5, 5), (7, 5)]:
        odd = count(genus, rank, 0)
        even = count(genus, rank + 1, 0)
        assert odd.applicable and even.applicable
        assert even.value == 2 * odd.value
        assert odd.decomposition["route"] == "odd_rank_halving"
        assert odd.decomposition["companion_rank"] == rank + 1
        assert odd.decomposition["companion_e0"] == odd.e0 + 0


def test_count_odd_requires_even_ell():
    with pytest.raises(OddEllUnsupportedError):
        count_odd(3, 1, 1)
    with pytest.raises(OddEllUnsupportedError):
        count(3, 3, 1)


def test_count_not_covered_reports():
    for genus in (2, 4, 6):
        report = count(genus, 4, 0)
        assert not report.applicable
        assert report.e0 == -(genus - 1)
        assert report.required_w2 == 1
        assert "not covered" in report.reason
        assert "2*2^g" in report.reason and "2^g" in report.reason
    report = count(2, 3, 0)
    assert not report.applicable
    assert "not covered" in report.reason
    assert "companion" in report.reason


def test_count_not_applicable_reports():
    report = count(4, 6, 0)
    assert not report.applicable
    assert report.e0 is None
    assert "not applicable" in report.reason
    report = count(4, 5, 0)
    assert not report.applicable


def test_count_rejects_tiny_ranks():
    with pytest.raises(UnsupportedRankError):
        count(3, 2, 0)


def test_count_report_json_shape():
    doc = count(3, 4, 0).to_json_dict()
    assert doc["schema"] == "ogq-count/1"
    assert doc["N"] == "16"
    assert doc["applicable"] is True
    assert doc["required_w2"] == 0
    assert doc["decomposition"]["route"] == "even_e0"
    assert "reason" not in doc
    doc = count(4, 4, 0).to_json_dict()
    assert doc["applicable"] is False
    assert "N" not in doc
    assert "not covered" in doc["reason"]


def test_count_float_tracks_exact():
    for genus, rank, ell, want in HEADLINE_COUNTS:
        approx = count_float(genus, rank, ell)
        assert abs(approx - want) <= 1e-6 * want
    with pytest.raises(NotApplicableError):
        count_float(4, 6, 0)


def test_trivial_bundle_number_examples():
    assert trivial_bundle_number(3, 2, -2, 0, []) == 8
    # genus-0 degree-0 with the point class is the classical point count
    assert trivial_bundle_number(0, 3, 0, 0, [(2, 1)]) == 1
    # weight-violating insertions give zero
    assert trivial_bundle_number(3, 2, 0, 0, []) == 0


def test_trivial_bundle_number_rejects_bad_degrees():
    with pytest.raises(OddDegreeUnsupportedError):
        trivial_bundle_number(3, 2, -3, 0, [])
    with pytest.raises(ValueError):
        trivial_bundle_number(3, 2, 2, 0, [])
    with pytest.raises(ValueError):
        trivial_bundle_number(3, 2, -2, -1, [])


def test_bridge_between_both_routes():
    for result in verify._bridge_samples(5, seed=11):
        assert result.ok, result


def test_counts_suite_is_green():
    results = verify.suite_counts(bridge_samples=3, seed=5)
    assert results and all(r.ok for r in results)


def test_integrand_route_matches_insertion_route():
    # fold explicit insertions into the integrand and compare
    q_poly = ptilde_alpha((2,), 2) * ptilde_alpha((2, 1), 2)
    left = trivial_bundle_number(2, 3, -4, 0, [(2,), (2, 1)])
    right = n_tilde(NQuery(2, 3, 0, -4, 0, q_poly))
    assert left == 16
    assert Fraction(left) == right
    q2 = ptilde_alpha((1,), 1) * ptilde_alpha((1,), 1)
    assert trivial_bundle_number(1, 2, -2, 0, [(1,), (1,)]) == 2
    assert n_tilde(NQuery(1, 2, 0, -2, 0, q2)) == 2
