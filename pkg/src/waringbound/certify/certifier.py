"""
Certified lower bounds on the number of signed 2^n-th powers.

A signed sum of v powers has a pattern that is the XOR of at most v rank-one patterns
offdiag(u*u^T), u in GF(2)^m. So the distance of a target pattern from 0, measured in
rank-one generators, is a lower bound on v for every polynomial with that pattern.
Three methods bound that distance:

    counting         v(2^n, R_m) >= ceil((m - 1) / 2), for the ring as a whole
    rank_completion  any sum of r matrices u*u^T has rank <= r and agrees with the target
                     off the diagonal, so min over diagonals d of rank(sym(A) + diag(d))
                     is a lower bound
    exact_search     breadth-first search over the whole pattern group (m <= 7)
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence

import numpy as np

from ..algebra.gf2 import gf2_rank, min_diagonal_completion
from ..algebra.polyring import Polynomial
from ..core.config import WaringSettings
from ..core.exceptions import DimensionTooLargeError
from ..core.models import (
    BoundMethod,
    CertifiedBound,
    PatternMatrix,
    bits_to_int,
    int_to_bits,
    pair_count,
)
from ..invariant.lemma import phi, rank_one_pattern
from ..invariant.powersum import ExponentLike
from ..utils.logging import get_logger

logger = get_logger("certify.certifier")

EXACT_SEARCH_LIMIT = 7

# Marks a variable left out of a principal sub-pattern in a rank_completion witness.
OUTSIDE = "-"


def counting_lower_bound(m: int) -> int:
    """Smallest v with v*m >= m(m-1)/2, i.e. ceil((m - 1) / 2)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return -(-(m - 1) // 2)


def ring_bound(m: int) -> CertifiedBound:
    """The counting bound on v(2^n, R_m) as a CertifiedBound."""
    return CertifiedBound(lower_bound=counting_lower_bound(m), method=BoundMethod.COUNTING)


def symmetrized_rows(target: PatternMatrix, variables: Optional[Sequence[int]] = None) -> List[int]:
    """
    Rows of the symmetric zero-diagonal matrix with the target above the diagonal.

    With ``variables`` given, the principal submatrix on those variables (relabelled
    1..len(variables) in the given order).
    """
    chosen = list(variables) if variables is not None else list(range(1, target.m + 1))
    position = {v: p for p, v in enumerate(chosen)}
    rows = [0] * len(chosen)
    for i, j in target.set_bits():
        if i in position and j in position:
            rows[position[i]] |= 1 << position[j]
            rows[position[j]] |= 1 << position[i]
    return rows


def rank_completion_bound(
    target: PatternMatrix, settings: Optional[WaringSettings] = None
) -> CertifiedBound:
    """
    min over all 2^m diagonals d of rank_GF2(sym(target) + diag(d)).

    Raises:
        DimensionTooLargeError: If target.m exceeds the sweep limit
    """
    settings = settings or WaringSettings()
    limit = settings.rank_sweep_max_m
    if target.m > limit:
        raise DimensionTooLargeError("rank_completion", target.m, limit)
    return _rank_completion_on(target, list(range(1, target.m + 1)), settings)


def _rank_completion_on(
    target: PatternMatrix, variables: List[int], settings: WaringSettings
) -> CertifiedBound:
    size = len(variables)
    rows = symmetrized_rows(target, variables)
    # Zero target: rank 0 with the zero diagonal, no sweep needed
    if not any(rows):
        rank, diagonal = 0, 0
    else:
        rank, diagonal = min_diagonal_completion(
            rows, size, workers=settings.threads, chunk_bits=settings.sweep_chunk_bits
        )

    witness = [OUTSIDE] * target.m
    for p, v in enumerate(variables):
        witness[v - 1] = "1" if (diagonal >> p) & 1 else "0"
    logger.debug(f"Rank completion over {size} variables: rank {rank}")
    return CertifiedBound(
        lower_bound=rank, method=BoundMethod.RANK_COMPLETION, witness=["".join(witness)]
    )


@dataclass(frozen=True)
class PatternGroupTable:
    """Breadth-first search of (Z/2)^(m choose 2) from 0 with rank-one generators."""

    m: int
    generators: List[int]
    generator_masks: np.ndarray
    distance: np.ndarray
    parent: np.ndarray

    @property
    def reached(self) -> int:
        return int(np.count_nonzero(self.distance >= 0))

    @property
    def diameter(self) -> int:
        return int(self.distance.max())


def rank_one_generators(m: int) -> List[int]:
    """Vectors u with at least two coordinates set, in lexicographic order of their bit strings."""
    vectors = [u for u in range(1, 1 << m) if bin(u).count("1") >= 2]
    return sorted(vectors, key=lambda u: int_to_bits(u, m))


@lru_cache(maxsize=8)
def pattern_group_distances(m: int) -> PatternGroupTable:
    """
    Exact distance from 0 of every pattern, with parent generators for witnesses.

    Layers are expanded one generator at a time in lexicographic order, so every
    pattern records the lexicographically smallest generator that first reaches it.
    """
    if m > EXACT_SEARCH_LIMIT:
        raise DimensionTooLargeError("exact_search", m, EXACT_SEARCH_LIMIT)

    generators = rank_one_generators(m)
    masks = np.array([rank_one_pattern(u, m).mask for u in generators], dtype=np.int64)
    size = 1 << pair_count(m)

    # -1 marks patterns not reached yet
    distance = np.full(size, -1, dtype=np.int8)
    parent = np.full(size, -1, dtype=np.int16)
    distance[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    layer = 0

    while frontier.size:
        found = []
        for index, mask in enumerate(masks):
            # First generator to reach a pattern becomes its parent
            candidates = frontier ^ mask
            fresh = candidates[distance[candidates] < 0]
            if fresh.size:
                distance[fresh] = layer + 1
                parent[fresh] = index
                found.append(fresh)
        frontier = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
        layer += 1
        logger.debug(f"Pattern BFS m={m}: layer {layer} holds {frontier.size} patterns")

    logger.info(f"Pattern BFS m={m}: {int(np.count_nonzero(distance >= 0))}/{size} reached")
    return PatternGroupTable(
        m=m, generators=generators, generator_masks=masks, distance=distance, parent=parent
    )


def pattern_group_coverage(m: int) -> int:
    """Number of patterns reachable from 0; 2^(m(m-1)/2) means the generators span."""
    return pattern_group_distances(m).reached


def exact_min_terms(
    target: PatternMatrix, settings: Optional[WaringSettings] = None
) -> CertifiedBound:
    """
    Exact number of rank-one patterns needed to reach the target, with an optimal witness.

    Raises:
        DimensionTooLargeError: If target.m exceeds the exact-search limit
    """
    settings = settings or WaringSettings()
    limit = min(settings.exact_search_max_m, EXACT_SEARCH_LIMIT)
    if target.m > limit:
        raise DimensionTooLargeError("exact_search", target.m, limit)

    table = pattern_group_distances(target.m)
    # Walk parents back to 0
    state = target.mask
    path: List[str] = []
    while state:
        index = int(table.parent[state])
        path.append(int_to_bits(table.generators[index], target.m))
        state ^= int(table.generator_masks[index])
    path.reverse()
    return CertifiedBound(
        lower_bound=int(table.distance[target.mask]),
        method=BoundMethod.EXACT_SEARCH,
        witness=path,
    )


def certify_pattern(
    target: PatternMatrix, settings: Optional[WaringSettings] = None
) -> CertifiedBound:
    """
    Best available per-target bound.

    exact_search for small m, rank_completion up to the sweep limit, and beyond it
    rank_completion on the principal sub-pattern of the first variables carrying set bits
    (any representation of the target restricts to a representation of the sub-pattern).
    """
    settings = settings or WaringSettings()
    if target.m <= min(settings.exact_search_max_m, EXACT_SEARCH_LIMIT):
        return exact_min_terms(target, settings)
    if target.m <= settings.rank_sweep_max_m:
        return rank_completion_bound(target, settings)

    # Beyond the sweep limit: restrict to the variables the pattern touches
    touched = sorted({v for pair in target.set_bits() for v in pair})
    chosen = touched[: settings.rank_sweep_max_m]
    logger.info(
        f"m={target.m} exceeds the sweep limit; using the sub-pattern on {len(chosen)} variables"
    )
    return _rank_completion_on(target, chosen, settings)


def certify_powersum_target(
    g: Polynomial,
    n: ExponentLike,
    m: Optional[int] = None,
    settings: Optional[WaringSettings] = None,
) -> CertifiedBound:
    """
    Lower bound on the number of terms of any signed sum of 2^n-th powers equal to g.

    Raises:
        NotInSubringObstruction: If g is not in J(2^n, R_m) at all
    """
    return certify_pattern(phi(g, n, m), settings)


def check_witness(bound: CertifiedBound, target: PatternMatrix) -> bool:
    """True when the bound's witness certifies it for ``target``."""
    if bound.method is BoundMethod.EXACT_SEARCH:
        result = PatternMatrix.zero(target.m)
        for bits in bound.witness:
            if len(bits) != target.m:
                return False
            result = result ^ rank_one_pattern(bits_to_int(bits), target.m)
        return result == target and len(bound.witness) == bound.lower_bound

    if bound.method is BoundMethod.RANK_COMPLETION:
        diagonal = bound.witness[0]
        if len(diagonal) != target.m:
            return False
        variables = [v for v in range(1, target.m + 1) if diagonal[v - 1] != OUTSIDE]
        rows = symmetrized_rows(target, variables)
        for p, v in enumerate(variables):
            if diagonal[v - 1] == "1":
                rows[p] ^= 1 << p
        return gf2_rank(rows, len(variables)) == bound.lower_bound

    return bound.lower_bound == counting_lower_bound(target.m)


def all_patterns(m: int) -> List[PatternMatrix]:
    """Every element of (Z/2)^(m choose 2)."""
    return [PatternMatrix(m=m, mask=mask) for mask in range(1 << pair_count(m))]
