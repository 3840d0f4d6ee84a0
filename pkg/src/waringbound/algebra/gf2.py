"""GF(2) linear algebra on int bitsets, plus a compiled sweep over diagonal completions."""

from typing import List, Sequence, Tuple

import numpy as np
from numba import njit

from ..core.models import BitVectorSpace
from ..utils.logging import get_logger
from ..utils.parallel import ordered_map

logger = get_logger("algebra.gf2")


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Compute rank over GF(2) via Gaussian elimination."""
    work = list(rows)
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        # Swap the pivot up and clear the column everywhere else
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def rank_gf2(space: BitVectorSpace) -> int:
    """Row rank of a BitVectorSpace."""
    return gf2_rank(space.rows, space.m)


@njit(cache=True, nogil=True)
def _rank_inplace(work: np.ndarray, m: int) -> int:
    rank = 0
    for col in range(m):
        pivot = -1
        for r in range(rank, m):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot < 0:
            continue
        tmp = work[rank]
        work[rank] = work[pivot]
        work[pivot] = tmp
        for r in range(m):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
    return rank


@njit(cache=True, nogil=True)
def _sweep_chunk(rows: np.ndarray, m: int, start: int, stop: int) -> Tuple[int, int]:
    # First diagonal (smallest encoding) reaching the minimum wins.
    best_rank = m + 1
    best_d = -1
    work = np.empty(m, dtype=np.int64)
    for d in range(start, stop):
        # Bit i of d sets entry (i, i)
        for i in range(m):
            work[i] = rows[i] ^ (((d >> i) & 1) << i)
        rank = _rank_inplace(work, m)
        if rank < best_rank:
            best_rank = rank
            best_d = d
            # Nothing beats rank 0
            if rank == 0:
                break
    return best_rank, best_d


def min_diagonal_completion(
    rows: Sequence[int], m: int, workers: int = 1, chunk_bits: int = 14
) -> Tuple[int, int]:
    """
    Minimum GF(2) rank of S + diag(d) over all 2^m diagonals d.

    ``rows`` are the rows of a symmetric matrix S with zero diagonal. The diagonal space
    is cut into chunks that may run on worker threads (the kernel releases the GIL); the
    reduction takes the minimum rank and, among ties, the smallest diagonal encoding, so
    the answer does not depend on ``workers``.

    Args:
        rows: m row bitsets
        m: Dimension
        workers: Number of threads
        chunk_bits: log2 of the chunk size

    Returns:
        Tuple of (minimum rank, minimizing diagonal as an int, bit i-1 = entry (i, i))
    """
    if m == 0:
        return 0, 0
    array = np.asarray(list(rows), dtype=np.int64)
    total = 1 << m
    chunk = 1 << min(chunk_bits, m)
    bounds: List[Tuple[int, int]] = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    logger.debug(f"Sweeping {total} diagonals for m={m} in {len(bounds)} chunks")

    # Serial runs stop at the first chunk reaching rank 0
    if workers > 1 and len(bounds) > 1:
        results = ordered_map(lambda b: _sweep_chunk(array, m, b[0], b[1]), bounds, workers)
    else:
        results = []
        for start, stop in bounds:
            results.append(_sweep_chunk(array, m, start, stop))
            if results[-1][0] == 0:
                break

    # Strict < keeps the earliest chunk on ties
    best_rank, best_d = m + 1, -1
    for rank, d in results:
        if rank < best_rank:
            best_rank, best_d = int(rank), int(d)
    return best_rank, best_d
