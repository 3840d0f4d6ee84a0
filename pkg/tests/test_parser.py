"""Unit tests for the expression parser."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from waringbound.algebra.parser import parse_poly, tokenize
from waringbound.algebra.polyring import Monomial, Polynomial
from waringbound.core.exceptions import ParseError

from .strategies import polynomials


class TestTokenize:
    """Test suite for the tokenizer."""

    def test_tokens_carry_positions(self):
        tokens = tokenize("3*x12 ^2")
        assert [(t.kind, t.text, t.position) for t in tokens] == [
            ("int", "3", 0),
            ("op", "*", 1),
            ("var", "x12", 2),
            ("op", "^", 6),
            ("int", "2", 7),
            ("end", "", 8),
        ]

    def test_variable_without_index(self):
        with pytest.raises(ParseError) as exc_info:
            tokenize("x + 1")
        assert exc_info.value.position == 0

    def test_variable_zero(self):
        """Test variable indices start at 1."""
        with pytest.raises(ParseError):
            tokenize("x0")

    def test_non_numeric_suffix(self):
        with pytest.raises(ParseError) as exc_info:
            tokenize("x1a")
        assert exc_info.value.position == 2

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as exc_info:
            tokenize("x1 / 2")
        assert exc_info.value.position == 3

    @pytest.mark.parametrize(
        "source, position",
        [("x1²", 2), ("²", 0), ("x1^²", 3), ("x١ + 1", 0), ("３", 0)],
    )
    def test_non_ascii_digits_rejected(self, source, position):
        """Test superscript and non-Latin digits are syntax errors, not literals."""
        with pytest.raises(ParseError) as exc_info:
            tokenize(source)
        assert exc_info.value.position == position


class TestParsePoly:
    """Test suite for parse_poly."""

    def test_multinomial_example(self):
        """Test "(1 + x1 + x2)^4" gives the 15-term expansion with 12 at x1*x2."""
        f = parse_poly("(1 + x1 + x2)^4")
        assert len(f) == 15
        assert f.coeff(Monomial.from_powers({1: 1, 2: 1})) == 12

    def test_cancellation(self):
        f = parse_poly("x1 - x1")
        assert f.is_zero
        assert f.num_vars == 1

    def test_unary_minus_and_distribution(self):
        """Test "-(x2)^2 * (x1 - 3)" gives -x1*x2^2 + 3*x2^2."""
        f = parse_poly("-(x2)^2 * (x1 - 3)")
        assert f == Polynomial.from_terms([({1: 1, 2: 2}, -1), ({2: 2}, 3)])
        assert f.render() == "-x1*x2^2 + 3*x2^2"

    def test_power_binds_tighter_than_unary_minus(self):
        assert parse_poly("-x1^2") == -parse_poly("x1*x1")

    def test_left_associativity(self):
        """Test a - b - c parses as (a - b) - c."""
        assert parse_poly("x1 - x2 - x3") == parse_poly("(x1 - x2) - x3")
        assert parse_poly("x1 - x2 - x3") != parse_poly("x1 - (x2 - x3)")

    def test_precedence(self):
        assert parse_poly("1 + 2*x1^2") == Polynomial.from_terms([({}, 1), ({1: 2}, 2)])
        assert parse_poly("2*(x1 + 1)^2") == parse_poly("2*x1^2 + 4*x1 + 2")

    def test_large_literals(self):
        """Test integer literals are unbounded."""
        big = 10**40 + 7
        assert parse_poly(f"{big}*x1").coeff(Monomial.var(1)) == big

    def test_num_vars_hint(self):
        assert parse_poly("x1", 4).num_vars == 4
        assert parse_poly("x5", 2).num_vars == 5
        assert parse_poly("7").num_vars == 1

    def test_zero_exponent(self):
        assert parse_poly("(x1 + x2)^0") == 1

    @pytest.mark.parametrize(
        "source",
        [
            "",
            "   ",
            "x1 +",
            "(x1 + x2",
            "x1 ^ x2",
            "x1^-1",
            "2x1",
            "x1^2^3",
            "x1 * * x2",
            ")",
            "x1²",
            "²",
            "x1^²",
            "x١",
        ],
    )
    def test_syntax_errors(self, source):
        """Test every malformed input raises ParseError with a position inside the source."""
        with pytest.raises(ParseError) as exc_info:
            parse_poly(source)
        error = exc_info.value
        assert 0 <= error.position <= max(len(source) - 1, 0)

    def test_error_message_has_caret(self):
        with pytest.raises(ParseError) as exc_info:
            parse_poly("x1 + (x2")
        assert "^" in str(exc_info.value)
        assert "x1 + (x2" in str(exc_info.value)

    @settings(max_examples=500, deadline=None)
    @given(polynomials(coeff_bound=10**12))
    def test_round_trip(self, f):
        """Test parse_poly(render(f)) == f."""
        assert parse_poly(f.render(), f.num_vars) == f

    @settings(max_examples=100, deadline=None)
    @given(polynomials(max_vars=3, max_degree=2, max_terms=4), st.integers(0, 3))
    def test_power_syntax_matches_pow(self, f, e):
        assert parse_poly(f"({f.render()})^{e}") == f.pow(e)
