"""Ordered fan-out over worker threads."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from .logging import get_logger

T = TypeVar("T")
R = TypeVar("R")

logger = get_logger("utils.parallel")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Apply ``func`` to every item, returning results in input order.

    With ``workers`` > 1 the calls run on a thread pool; collation stays in input order,
    so the output never depends on scheduling.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug(f"Running {len(items)} tasks on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
