"""Unit tests for signed power sums and their file format."""

import pytest
from pydantic import ValidationError

from waringbound.algebra.parser import parse_poly
from waringbound.core.exceptions import ConfigurationError, ParseError
from waringbound.invariant.powersum import PowerExponent, PowerSum, as_exponent


class TestPowerExponent:
    """Test suite for PowerExponent."""

    def test_derived_exponents(self):
        exponent = PowerExponent(n=3)
        assert exponent.k == 8
        assert exponent.half == 4

    @pytest.mark.parametrize("n", [0, 1, -2])
    def test_small_exponent_rejected(self, n):
        with pytest.raises(ValidationError):
            PowerExponent(n=n)

    def test_as_exponent(self):
        exponent = PowerExponent(n=2)
        assert as_exponent(exponent) is exponent
        assert as_exponent(4) == PowerExponent(n=4)


class TestPowerSum:
    """Test suite for PowerSum."""

    def test_of_mixes_bases_and_signed_pairs(self):
        s = PowerSum.of(2, parse_poly("x1 + x2"), (-1, parse_poly("x3")))
        assert len(s) == 2
        assert s.n == 2
        assert s.num_vars == 3
        assert [sign for sign, _ in s.terms] == [1, -1]

    def test_bases_share_a_ring(self):
        s = PowerSum.of(2, parse_poly("x1"), parse_poly("x4"))
        assert {base.num_vars for _, base in s.bases()} == {4}
        assert {base.num_vars for _, base in s.bases(6)} == {6}

    def test_empty_sum(self):
        s = PowerSum.of(3)
        assert len(s) == 0
        assert s.num_vars == 1

    def test_bad_sign_rejected(self):
        with pytest.raises(ValidationError):
            PowerSum.of(2, (2, parse_poly("x1")))

    def test_bad_base_rejected(self):
        with pytest.raises(ValidationError):
            PowerSum.of(2, (1, "x1"))


class TestJsonDocument:
    """Test suite for the power-sum file format."""

    def test_to_document(self):
        s = PowerSum.of(2, parse_poly("x1 + x2"), (-1, parse_poly("1 + x3")))
        assert s.to_json_document() == {
            "n": 2,
            "terms": [
                {"sign": "+", "base": "x1 + x2"},
                {"sign": "-", "base": "x3 + 1"},
            ],
        }

    def test_from_document(self):
        document = {
            "n": 3,
            "terms": [{"sign": "-", "base": "x1 - 2*x2^2"}, {"sign": "+", "base": "5"}],
        }
        s = PowerSum.from_json_document(document)
        assert s.n == 3
        assert s.terms[0] == (-1, parse_poly("x1 - 2*x2^2"))
        assert s.terms[1] == (1, parse_poly("5"))
        assert PowerSum.from_json_document(s.to_json_document()) == s

    def test_missing_terms_is_empty(self):
        assert len(PowerSum.from_json_document({"n": 2})) == 0

    @pytest.mark.parametrize(
        "document",
        [
            [],
            {"terms": []},
            {"n": 2, "terms": {"sign": "+"}},
            {"n": 2, "terms": [{"sign": "*", "base": "x1"}]},
            {"n": 2, "terms": [{"sign": "+"}]},
            {"n": 2, "terms": ["x1"]},
        ],
    )
    def test_malformed_documents(self, document):
        with pytest.raises(ConfigurationError):
            PowerSum.from_json_document(document)

    def test_bad_exponent(self):
        with pytest.raises(ValidationError):
            PowerSum.from_json_document({"n": 1, "terms": []})

    def test_bad_base_expression(self):
        with pytest.raises(ParseError):
            PowerSum.from_json_document({"n": 2, "terms": [{"sign": "+", "base": "x1 +"}]})
