"""Polynomial arithmetic, the expression parser and GF(2) linear algebra."""

from .gf2 import gf2_rank, min_diagonal_completion, rank_gf2
from .parser import parse_poly, tokenize
from .polyring import EXACT, Monomial, Polynomial, TruncationSpec

__all__ = [
    "EXACT",
    "Monomial",
    "Polynomial",
    "TruncationSpec",
    "parse_poly",
    "tokenize",
    "gf2_rank",
    "rank_gf2",
    "min_diagonal_completion",
]
