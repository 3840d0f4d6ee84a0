"""Tests for the finite-ring Waring constants."""

import pytest

from waringbound.core.exceptions import CrossCheckError
from waringbound.core.models import FiniteRingReport
from waringbound.rings.finite_rings import (
    CSV_COLUMNS,
    check_subring_closure,
    exact_length_reachable,
    kth_powers,
    reports_to_frame,
    sweep,
    waring_profile,
)


class TestKthPowers:
    """Test suite for kth_powers."""

    def test_examples(self):
        assert kth_powers(5, 2) == [0, 1, 4]
        assert kth_powers(16, 4) == [0, 1]
        assert kth_powers(7, 3) == [0, 1, 6]
        assert kth_powers(2, 4) == [0, 1]

    def test_first_powers(self):
        assert kth_powers(6, 1) == list(range(6))

    @pytest.mark.parametrize("q, k", [(1, 2), (0, 2), (5, 0)])
    def test_bad_ring(self, q, k):
        with pytest.raises(ValueError):
            kth_powers(q, k)


class TestWaringProfile:
    """Test suite for waring_profile."""

    @pytest.mark.parametrize(
        "q, k, expected",
        [(16, 4, 8), (2, 4, 1), (5, 2, 2), (7, 3, 3), (3, 2, 1)],
    )
    def test_known_values(self, q, k, expected):
        assert waring_profile(q, k).v_value == expected

    def test_z16_fourth_powers(self):
        """Test J(4, Z/16) is all of Z/16 although only 0 and 1 are fourth powers."""
        report = waring_profile(16, 4)
        assert report.powers == [0, 1]
        assert report.subring == list(range(16))
        assert report.distances[8] == 8
        assert report.distances[15] == 1

    def test_squares_need_at_most_three_terms(self):
        """Test every residue is a signed sum of at most three squares."""
        for q in range(2, 501):
            report = waring_profile(q, 2, check_closure=q <= 60)
            assert report.subring == list(range(q))
            assert report.v_value <= 3

    def test_subring_is_whole_ring(self):
        """Test 1 = 1^k forces J(k, Z/q) to be all of Z/q."""
        report = waring_profile(8, 2)
        assert set(report.powers) == {0, 1, 4}
        assert report.subring == list(range(8))

    def test_csv_row(self):
        assert waring_profile(16, 4).csv_row() == {
            "q": 16,
            "k": 4,
            "|powers|": 2,
            "|subring|": 16,
            "v_value": 8,
        }


class TestClosureCheck:
    """Test suite for check_subring_closure."""

    def test_not_closed_under_addition(self):
        report = FiniteRingReport(
            q=6, k=2, powers=[0, 1], subring=[0, 1, 5], distances={0: 0, 1: 1, 5: 1}, v_value=1
        )
        with pytest.raises(CrossCheckError) as exc_info:
            check_subring_closure(report)
        assert exc_info.value.details["operation"] == "addition"
        assert exc_info.value.details["pair"] == [1, 1]

    def test_not_closed_under_negation(self):
        report = FiniteRingReport(
            q=6, k=2, powers=[0, 1], subring=[0, 1], distances={0: 0, 1: 1}, v_value=1
        )
        with pytest.raises(CrossCheckError) as exc_info:
            check_subring_closure(report)
        assert exc_info.value.details["element"] == 1

    def test_computed_profiles_are_closed(self):
        for q in range(2, 40):
            for k in (2, 3, 4, 6):
                check_subring_closure(waring_profile(q, k, check_closure=False))


class TestExactLength:
    """Test suite for exact_length_reachable."""

    def test_zero_terms(self):
        assert exact_length_reachable(7, 2, 0) == [0]

    def test_negative_terms(self):
        with pytest.raises(ValueError):
            exact_length_reachable(7, 2, -1)

    def test_agrees_with_distances(self):
        """Test exactly v terms reach what at most v terms reach, since 0 is a power."""
        for q in range(2, 51):
            for k in (2, 3, 4):
                report = waring_profile(q, k, check_closure=False)
                for v in range(report.v_value + 1):
                    expected = sorted(r for r, d in report.distances.items() if d <= v)
                    assert exact_length_reachable(q, k, v) == expected
                assert exact_length_reachable(q, k, report.v_value) == report.subring


class TestSweep:
    """Test suite for sweep and the report frame."""

    def test_sorted_and_deduplicated(self):
        reports = sweep([9, 3, 5, 3], 2)
        assert [r.q for r in reports] == [3, 5, 9]

    def test_workers_do_not_change_result(self):
        assert sweep(range(2, 40), 4, workers=4) == sweep(range(2, 40), 4)

    def test_frame(self):
        frame = reports_to_frame(sweep([5, 16], 4))
        assert list(frame.columns) == CSV_COLUMNS
        assert frame["q"].tolist() == [5, 16]
        assert frame["v_value"].tolist()[1] == 8

    def test_empty_frame(self):
        frame = reports_to_frame([])
        assert list(frame.columns) == CSV_COLUMNS
        assert frame.empty
