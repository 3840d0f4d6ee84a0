"""Unit tests for sampling and the ordered thread map."""

import random
from math import comb

from waringbound.core.models import pair_count
from waringbound.utils.parallel import ordered_map
from waringbound.utils.sampling import (
    monomials_up_to,
    random_pattern,
    random_polynomial,
    random_powersum,
)


class TestSampling:
    """Test suite for the seeded samplers."""

    def test_monomial_count(self):
        for num_vars in range(1, 5):
            for degree in range(0, 4):
                monomials = monomials_up_to(num_vars, degree)
                assert len(monomials) == comb(num_vars + degree, degree)
                assert len(set(monomials)) == len(monomials)

    def test_monomials_sorted_by_degree(self):
        assert monomials_up_to(2, 1) == [(0, 0), (0, 1), (1, 0)]

    def test_polynomial_respects_bounds(self):
        rng = random.Random(1)
        for _ in range(50):
            f = random_polynomial(rng, 3, 2, 4)
            assert f.num_vars == 3
            assert f.degree() <= 2
            assert all(abs(c) <= 4 for _, c in f.terms())

    def test_same_seed_same_polynomial(self):
        assert random_polynomial(random.Random("7:3"), 4, 3, 5) == random_polynomial(
            random.Random("7:3"), 4, 3, 5
        )

    def test_powersum(self):
        rng = random.Random(2)
        s = random_powersum(
            rng, 3, max_terms=4, num_vars=3, max_degree=2, coeff_bound=2, min_terms=2
        )
        assert s.n == 3
        assert 2 <= len(s) <= 4
        assert all(sign in (1, -1) for sign, _ in s.terms)

    def test_pattern_density(self):
        rng = random.Random(3)
        assert random_pattern(rng, 6, density=0.0).is_zero
        assert random_pattern(rng, 6, density=1.0).weight == pair_count(6)
        assert random_pattern(rng, 1).is_zero


class TestOrderedMap:
    """Test suite for ordered_map."""

    def test_serial(self):
        assert ordered_map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]

    def test_threads_keep_input_order(self):
        assert ordered_map(lambda x: -x, range(100), workers=4) == [-x for x in range(100)]

    def test_empty(self):
        assert ordered_map(str, [], workers=8) == []
