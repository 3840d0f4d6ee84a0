"""
Easier-Waring constants of the cyclic rings Z/q.

J(k, Z/q) is the subring generated by k-th powers; since (ab)^k = a^k b^k it is the set
of signed sums of k-th powers, and v(k, Z/q) is the least v such that every member is a
signed sum of at most v of them. Both come out of a breadth-first search over residues.
"""

from typing import Dict, Iterable, List

import numpy as np
import pandas as pd

from ..core.exceptions import CrossCheckError
from ..core.models import FiniteRingReport
from ..utils.logging import get_logger
from ..utils.parallel import ordered_map

logger = get_logger("rings.finite_rings")

CSV_COLUMNS = ["q", "k", "|powers|", "|subring|", "v_value"]

# int64 products of two residues stay exact below this modulus
_NUMPY_MODULUS_LIMIT = 2**31


def _check_ring(q: int, k: int) -> None:
    if q < 2:
        raise ValueError(f"modulus q must be >= 2, got {q}")
    if k < 1:
        raise ValueError(f"exponent k must be >= 1, got {k}")


def _residues(q: int) -> np.ndarray:
    dtype = np.int64 if q < _NUMPY_MODULUS_LIMIT else object
    return np.arange(q, dtype=dtype)


def _power_table(q: int, k: int) -> np.ndarray:
    """a^k mod q for every residue a, by repeated squaring."""
    base = _residues(q)
    result = np.ones(q, dtype=base.dtype) % q
    e = k
    while e:
        if e & 1:
            result = result * base % q
        base = base * base % q
        e >>= 1
    return result


def kth_powers(q: int, k: int) -> List[int]:
    """
    The set {a^k mod q : a in Z/q}, sorted.

    Args:
        q: Modulus (>= 2)
        k: Exponent (>= 1)

    Returns:
        Sorted list of k-th power residues
    """
    _check_ring(q, k)
    return [int(r) for r in np.unique(_power_table(q, k))]


def _signed_generators(q: int, powers: List[int]) -> np.ndarray:
    table = np.asarray(powers, dtype=np.int64)
    generators = np.unique(np.concatenate([table, (-table) % q]))
    return generators[generators != 0]


def _bfs_distances(q: int, generators: np.ndarray) -> np.ndarray:
    distance = np.full(q, -1, dtype=np.int64)
    distance[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    layer = 0
    # One layer per extra signed term
    while frontier.size and generators.size:
        candidates = np.unique((frontier[:, None] + generators[None, :]) % q)
        fresh = candidates[distance[candidates] < 0]
        layer += 1
        distance[fresh] = layer
        frontier = fresh
    return distance


def waring_profile(q: int, k: int, check_closure: bool = True) -> FiniteRingReport:
    """
    Compute J(k, Z/q), the minimal term count of each member, and v(k, Z/q).

    Breadth-first search from 0 with generators {+-a^k mod q}; the reachable residues form
    the subring and the depth of each is its minimal number of signed terms.

    Args:
        q: Modulus (>= 2)
        k: Exponent (>= 1)
        check_closure: Assert the reachable set is closed under +, - and *

    Returns:
        FiniteRingReport

    Raises:
        CrossCheckError: If the reachable set is not a subring
    """
    _check_ring(q, k)
    powers = kth_powers(q, k)
    distance = _bfs_distances(q, _signed_generators(q, powers))

    subring = np.flatnonzero(distance >= 0)
    distances: Dict[int, int] = {int(r): int(distance[r]) for r in subring}
    report = FiniteRingReport(
        q=q,
        k=k,
        powers=powers,
        subring=[int(r) for r in subring],
        distances=distances,
        v_value=max(distances.values()),
    )
    logger.debug(f"v({k}, Z/{q}) = {report.v_value} over {len(report.subring)} residues")

    if check_closure:
        check_subring_closure(report)
    return report


def check_subring_closure(report: FiniteRingReport) -> None:
    """
    Raise unless ``report.subring`` is closed under addition, negation and multiplication.

    Raises:
        CrossCheckError: On the first violation found
    """
    q = report.q
    members = np.zeros(q, dtype=bool)
    members[report.subring] = True
    elements = np.asarray(report.subring, dtype=np.int64)

    # Negation
    negated = (-elements) % q
    if not members[negated].all():
        bad = int(elements[~members[negated]][0])
        raise CrossCheckError(
            f"J({report.k}, Z/{q}) is not closed under negation at {bad}",
            {"q": q, "k": report.k, "element": bad},
        )

    # Addition and multiplication, one row of the table at a time
    for a in elements:
        checks = (("addition", (a + elements) % q), ("multiplication", a * elements % q))
        for operation, values in checks:
            if not members[values].all():
                b = int(elements[~members[values]][0])
                raise CrossCheckError(
                    f"J({report.k}, Z/{q}) is not closed under {operation} at ({int(a)}, {b})",
                    {"q": q, "k": report.k, "operation": operation, "pair": [int(a), b]},
                )


def exact_length_reachable(q: int, k: int, v: int) -> List[int]:
    """
    Residues that are signed sums of exactly ``v`` k-th powers (0 = 0^k counts as a term).

    Args:
        q: Modulus (>= 2)
        k: Exponent (>= 1)
        v: Number of terms (>= 0)

    Returns:
        Sorted residues
    """
    _check_ring(q, k)
    if v < 0:
        raise ValueError(f"number of terms must be >= 0, got {v}")
    table = np.asarray(kth_powers(q, k), dtype=np.int64)
    terms = np.unique(np.concatenate([table, (-table) % q]))
    # 0 = 0^k stays among the terms, so shorter sums pad out with zeros

    reached = np.zeros(1, dtype=np.int64)
    for _ in range(v):
        reached = np.unique((reached[:, None] + terms[None, :]) % q)
    return [int(r) for r in reached]


def sweep(q_values: Iterable[int], k: int, workers: int = 1) -> List[FiniteRingReport]:
    """
    Profiles for every q, ordered by q whatever the number of workers.

    Args:
        q_values: Moduli to profile
        k: Exponent
        workers: Number of worker threads

    Returns:
        List of FiniteRingReport sorted by q
    """
    moduli = sorted(set(q_values))
    logger.info(f"Sweeping {len(moduli)} moduli for k={k}")
    return ordered_map(lambda q: waring_profile(q, k), moduli, workers)


def reports_to_frame(reports: Iterable[FiniteRingReport]) -> pd.DataFrame:
    """One row per report with columns q, k, |powers|, |subring|, v_value."""
    return pd.DataFrame([r.csv_row() for r in reports], columns=CSV_COLUMNS)
