"""
Recursive descent parser for polynomial expressions.

Grammar (tightest binding last)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'

Variables are ``x1``, ``x2``, ...; integer literals are unbounded; exponents must be
non-negative integer literals. There is no implicit multiplication: ``2x1`` is an error.
"""

from typing import List, NamedTuple, Optional

from ..core.exceptions import ParseError
from .polyring import Polynomial

OPERATORS = "+-*^()"


class Token(NamedTuple):
    kind: str  # "int", "var", "op" or "end"
    text: str
    position: int


def _is_digit(c: str) -> bool:
    # ASCII only; str.isdigit also accepts superscripts
    return "0" <= c <= "9"


def tokenize(source: str) -> List[Token]:
    """Split an expression into tokens, each carrying its offset in ``source``."""
    tokens: List[Token] = []
    idx = 0
    length = len(source)

    while idx < length:
        c = source[idx]
        if c.isspace():
            idx += 1
            continue
        if _is_digit(c):
            start = idx
            while idx < length and _is_digit(source[idx]):
                idx += 1
            tokens.append(Token("int", source[start:idx], start))
            continue
        if c == "x":
            start = idx
            idx += 1
            while idx < length and _is_digit(source[idx]):
                idx += 1
            digits = source[start + 1 : idx]
            if not digits:
                raise ParseError("variable needs a numeric index, e.g. x1", start, source)
            if idx < length and (source[idx].isalpha() or source[idx] == "_"):
                raise ParseError("variable index must be numeric", idx, source)
            if int(digits) == 0:
                raise ParseError("variable indices start at 1", start, source)
            tokens.append(Token("var", source[start:idx], start))
            continue
        if c in OPERATORS:
            tokens.append(Token("op", c, idx))
            idx += 1
            continue
        raise ParseError(f"unexpected character {c!r}", idx, source)

    tokens.append(Token("end", "", length))
    return tokens


class _Parser:
    """Evaluates the token stream directly into polynomials."""

    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, op: str) -> bool:
        token = self.peek()
        if token.kind == "op" and token.text == op:
            self.index += 1
            return True
        return False

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        position = min(token.position, max(len(self.source) - 1, 0))
        return ParseError(message, position, self.source)

    def parse(self) -> Polynomial:
        result = self.expr()
        token = self.peek()
        if token.kind != "end":
            raise self.error(f"unexpected {token.text!r}; expected an operator", token)
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if not self.accept("^"):
            return base
        token = self.peek()
        if token.kind != "int":
            raise self.error("exponent must be a non-negative integer literal", token)
        self.advance()
        if self.peek().kind == "op" and self.peek().text == "^":
            raise self.error("chained exponents need parentheses around the base")
        return base.pow(int(token.text))

    def atom(self) -> Polynomial:
        token = self.advance()
        if token.kind == "int":
            return Polynomial.constant(int(token.text))
        if token.kind == "var":
            return Polynomial.variable(int(token.text[1:]))
        if token.kind == "op" and token.text == "(":
            inner = self.expr()
            if not self.accept(")"):
                raise self.error("missing closing parenthesis")
            return inner
        if token.kind == "end":
            raise self.error("unexpected end of expression", token)
        raise self.error(f"unexpected {token.text!r}", token)


def parse_poly(source: str, num_vars_hint: Optional[int] = None) -> Polynomial:
    """
    Parse an expression into a canonical Polynomial.

    Args:
        source: Expression text, e.g. ``"(1 + x1 + x2)^4"``
        num_vars_hint: Minimum ring size; the result lives in R_m with m the larger of
            the hint and the largest variable index seen

    Returns:
        Polynomial

    Raises:
        ParseError: On any syntax error; ``position`` points inside ``source``
    """
    if source is None or not source.strip():
        raise ParseError("empty expression", 0, source or "")
    if num_vars_hint is not None and num_vars_hint < 1:
        raise ValueError(f"num_vars_hint must be positive, got {num_vars_hint}")

    result = _Parser(source).parse()
    return result.extend(max(result.num_vars, num_vars_hint or 1))
