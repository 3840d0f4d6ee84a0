"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from waringbound.algebra.polyring import Polynomial
from waringbound.invariant.powersum import PowerExponent, PowerSum
from waringbound.utils.sampling import monomials_up_to


@st.composite
def polynomials(draw, max_vars=4, max_degree=3, coeff_bound=9, max_terms=8, num_vars=None):
    """Random sparse polynomials in at most ``max_vars`` variables."""
    m = num_vars if num_vars is not None else draw(st.integers(1, max_vars))
    monomials = monomials_up_to(m, max_degree)
    chosen = draw(st.lists(st.sampled_from(monomials), max_size=max_terms))
    terms = {e: draw(st.integers(-coeff_bound, coeff_bound)) for e in chosen}
    return Polynomial(m, terms)


@st.composite
def powersums(draw, n=2, max_terms=3, max_vars=3, max_degree=2, coeff_bound=5):
    """Random signed sums of 2^n-th powers over a common ring."""
    m = draw(st.integers(2, max_vars))
    count = draw(st.integers(0, max_terms))
    terms = []
    for _ in range(count):
        sign = draw(st.sampled_from([1, -1]))
        base = draw(polynomials(num_vars=m, max_degree=max_degree, coeff_bound=coeff_bound))
        terms.append((sign, base))
    return PowerSum(exponent=PowerExponent(n=n), terms=tuple(terms))
