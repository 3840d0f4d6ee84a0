"""
waringbound - certified lower bounds for the easier Waring problem.

A mod-2 invariant of signed sums of 2^n-th powers in Z[x1, ..., xm], lower bounds on
the number of powers a polynomial needs, and exact Waring constants of the rings Z/q.
"""

from .algebra.parser import parse_poly
from .algebra.polyring import Monomial, Polynomial, TruncationSpec
from .certify.certifier import (
    certify_pattern,
    certify_powersum_target,
    counting_lower_bound,
    exact_min_terms,
    rank_completion_bound,
)
from .core.config import RunConfig, WaringSettings
from .core.models import BoundMethod, CertifiedBound, FiniteRingReport, PatternMatrix
from .invariant.lemma import phi, phi_closed_of_base, phi_of_expansion, phi_of_powersum
from .invariant.powersum import PowerExponent, PowerSum
from .rings.finite_rings import waring_profile

__version__ = "0.1.0"
__all__ = [
    "Monomial",
    "Polynomial",
    "TruncationSpec",
    "parse_poly",
    "PowerExponent",
    "PowerSum",
    "PatternMatrix",
    "CertifiedBound",
    "BoundMethod",
    "FiniteRingReport",
    "RunConfig",
    "WaringSettings",
    "phi",
    "phi_closed_of_base",
    "phi_of_expansion",
    "phi_of_powersum",
    "counting_lower_bound",
    "rank_completion_bound",
    "exact_min_terms",
    "certify_pattern",
    "certify_powersum_target",
    "waring_profile",
]
