"""Seeded random polynomials, power sums and patterns for verification runs."""

import random
from typing import List, Optional

from ..algebra.polyring import Exponents, Polynomial
from ..core.models import PatternMatrix, pair_count
from ..invariant.powersum import ExponentLike, PowerSum, as_exponent


def monomials_up_to(num_vars: int, max_degree: int) -> List[Exponents]:
    """All exponent tuples in ``num_vars`` variables of total degree <= max_degree."""
    result: List[Exponents] = [()]
    for _ in range(num_vars):
        result = [e + (a,) for e in result for a in range(max_degree + 1 - sum(e))]
    return sorted(result, key=lambda e: (sum(e), e))


def random_polynomial(
    rng: random.Random,
    num_vars: int,
    max_degree: int,
    coeff_bound: int,
    density: float = 0.5,
) -> Polynomial:
    """
    A random polynomial of total degree <= max_degree.

    Each monomial is kept with probability ``density`` and given a uniform coefficient in
    [-coeff_bound, coeff_bound].
    """
    terms = {}
    for exps in monomials_up_to(num_vars, max_degree):
        if rng.random() < density:
            terms[exps] = rng.randint(-coeff_bound, coeff_bound)
    return Polynomial(num_vars, terms)


def random_powersum(
    rng: random.Random,
    n: ExponentLike,
    max_terms: int,
    num_vars: int,
    max_degree: int,
    coeff_bound: int,
    min_terms: int = 0,
) -> PowerSum:
    """A random signed sum of between ``min_terms`` and ``max_terms`` powers."""
    count = rng.randint(min_terms, max_terms)
    terms = []
    for _ in range(count):
        sign = rng.choice((1, -1))
        terms.append((sign, random_polynomial(rng, num_vars, max_degree, coeff_bound)))
    return PowerSum(exponent=as_exponent(n), terms=tuple(terms))


def random_pattern(rng: random.Random, m: int, density: Optional[float] = None) -> PatternMatrix:
    """A uniformly random pattern, or one with each bit set with probability ``density``."""
    bits = pair_count(m)
    if density is None:
        return PatternMatrix(m=m, mask=rng.getrandbits(bits) if bits else 0)
    mask = 0
    for position in range(bits):
        if rng.random() < density:
            mask |= 1 << position
    return PatternMatrix(m=m, mask=mask)
