"""Unit tests for core models."""

import pytest
from pydantic import ValidationError

from waringbound.core.exceptions import VariableIndexError
from waringbound.core.models import (
    SCHEMAS,
    BoundMethod,
    CertifiedBound,
    FiniteRingReport,
    LemmaReport,
    ObstructionReport,
    PatternMatrix,
    PatternMatrixDocument,
    PowerCoefficientReport,
    bits_to_int,
    int_to_bits,
    iter_pairs,
    pair_count,
    pair_index,
)


class TestPairs:
    """Test suite for the pair numbering."""

    def test_lexicographic_indices(self):
        """Test pair_index enumerates iter_pairs in order."""
        for m in range(1, 9):
            assert [pair_index(m, i, j) for i, j in iter_pairs(m)] == list(range(pair_count(m)))

    def test_bad_pair(self):
        with pytest.raises(VariableIndexError):
            pair_index(3, 2, 2)
        with pytest.raises(VariableIndexError):
            pair_index(3, 1, 4)


class TestPatternMatrix:
    """Test suite for PatternMatrix."""

    def test_from_pairs_and_get(self):
        pattern = PatternMatrix.from_pairs(4, [(1, 2), (3, 4)])
        assert pattern.get(1, 2) == 1
        assert pattern.get(1, 3) == 0
        assert pattern.weight == 2
        assert pattern.set_bits() == [(1, 2), (3, 4)]

    def test_repeated_pair_toggles(self):
        assert PatternMatrix.from_pairs(3, [(1, 2), (1, 2)]).is_zero

    def test_with_bit(self):
        pattern = PatternMatrix.zero(3).with_bit(2, 3, 1)
        assert pattern.set_bits() == [(2, 3)]
        assert pattern.with_bit(2, 3, 0).is_zero

    def test_xor(self):
        a = PatternMatrix.from_pairs(3, [(1, 2), (1, 3)])
        b = PatternMatrix.from_pairs(3, [(1, 3), (2, 3)])
        assert (a ^ b).set_bits() == [(1, 2), (2, 3)]

    def test_xor_size_mismatch(self):
        with pytest.raises(VariableIndexError):
            PatternMatrix.zero(3) ^ PatternMatrix.zero(4)

    def test_mask_out_of_range(self):
        with pytest.raises(ValidationError):
            PatternMatrix(m=2, mask=0b10)

    def test_render_text(self):
        pattern = PatternMatrix.from_pairs(3, [(1, 2)])
        assert pattern.render_text() == ".10\n..0\n..."
        assert str(PatternMatrix.zero(1)) == "."

    def test_document(self):
        pattern = PatternMatrix.from_pairs(4, [(2, 4), (1, 3)])
        document = pattern.to_document()
        assert document.bits == [[1, 3], [2, 4]]
        assert document.csv_row() == {"m": 4, "weight": 2, "bits": "1-3 2-4"}
        assert PatternMatrix.from_document(document) == pattern

    def test_document_from_json(self):
        document = PatternMatrixDocument.model_validate_json('{"m": 3, "bits": [[1, 2]]}')
        assert PatternMatrix.from_document(document).get(1, 2) == 1


class TestBitStrings:
    """Test suite for bit-string helpers."""

    def test_coordinate_one_is_leftmost(self):
        assert bits_to_int("110") == 0b011
        assert int_to_bits(0b011, 3) == "110"
        assert int_to_bits(0, 4) == "0000"

    def test_bad_bit_string(self):
        with pytest.raises(ValueError):
            bits_to_int("1-0")


class TestCertifiedBound:
    """Test suite for CertifiedBound."""

    def test_exact_search_witness_length(self):
        with pytest.raises(ValidationError):
            CertifiedBound(lower_bound=2, method=BoundMethod.EXACT_SEARCH, witness=["110"])

    def test_rank_completion_needs_one_diagonal(self):
        with pytest.raises(ValidationError):
            CertifiedBound(lower_bound=1, method=BoundMethod.RANK_COMPLETION)

    def test_negative_bound(self):
        with pytest.raises(ValidationError):
            CertifiedBound(lower_bound=-1, method=BoundMethod.COUNTING)

    def test_serialization(self):
        bound = CertifiedBound(
            lower_bound=2, method=BoundMethod.EXACT_SEARCH, witness=["1100", "0011"]
        )
        assert bound.to_json_dict() == {
            "lower_bound": 2,
            "method": "exact_search",
            "witness": ["1100", "0011"],
        }
        assert bound.csv_row()["witness"] == "1100 0011"

    def test_method_from_string(self):
        bound = CertifiedBound(lower_bound=4, method="counting")
        assert bound.method is BoundMethod.COUNTING


class TestReports:
    """Test suite for the report models."""

    def test_finite_ring_report_checks_distances(self):
        with pytest.raises(ValidationError):
            FiniteRingReport(
                q=3, k=2, powers=[0, 1], subring=[0, 1, 2], distances={0: 0, 1: 1}, v_value=1
            )
        with pytest.raises(ValidationError):
            FiniteRingReport(
                q=3,
                k=2,
                powers=[0, 1],
                subring=[0, 1, 2],
                distances={0: 0, 1: 1, 2: 1},
                v_value=2,
            )

    def test_lemma_report(self):
        report = LemmaReport(seed=1, trials=10, n_list=[2])
        assert report.passed
        report.failures = 1
        assert not report.passed
        assert report.csv_row() == {"seed": 1, "trials": 10, "checks": 0, "failures": 1}

    def test_power_coefficient_report(self):
        report = PowerCoefficientReport(
            polynomial="x1 + x2 + 1", n=2, pair=[1, 2], closed_form=12, expanded=12, half_power=6
        )
        assert report.matches
        assert report.model_dump()["matches"] is True
        assert report.csv_row()["i"] == 1

    def test_obstruction_report(self):
        report = ObstructionReport(n=2, pair=[1, 2], monomial="x1*x2", coefficient=1, divisor=4)
        assert report.csv_row() == {
            "n": 2,
            "i": 1,
            "j": 2,
            "monomial": "x1*x2",
            "coefficient": 1,
            "divisor": 4,
        }

    def test_schemas(self):
        assert set(SCHEMAS) == {
            "pattern",
            "bound",
            "finite-ring",
            "lemma",
            "power-coeff",
            "obstruction",
        }
        for model in SCHEMAS.values():
            assert "properties" in model.model_json_schema()
