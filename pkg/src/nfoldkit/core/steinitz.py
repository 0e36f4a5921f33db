"""Constructive Steinitz reordering of zero-sum integer vectors."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from .arithmetic import NFoldError, linf_norm
from .graver import InternalConsistencyError

logger = logging.getLogger(__name__)


class SteinitzPreconditionError(NFoldError):
    """Raised when the vectors do not sum to zero or exceed the norm bound."""


def _validate(vectors: Sequence[Sequence[int]], delta: int) -> int:
    if delta < 0:
        raise SteinitzPreconditionError("delta must be non-negative")
    if not vectors:
        return 0
    m = len(vectors[0])
    for index, vector in enumerate(vectors):
        if len(vector) != m:
            raise SteinitzPreconditionError(
                f"vector {index} has dimension {len(vector)}, expected {m}"
            )
        if linf_norm(vector) > delta:
            raise SteinitzPreconditionError(
                f"vector {index} has ∞-norm {linf_norm(vector)} > {delta}"
            )
    total = [sum(column) for column in zip(*vectors, strict=True)]
    if any(total):
        raise SteinitzPreconditionError(f"vectors sum to {total}, not zero")
    return m


def max_prefix_norm(vectors: Sequence[Sequence[int]], order: Sequence[int]) -> int:
    """Largest ∞-norm over the prefix sums of ``vectors`` taken in ``order``."""
    if not order:
        return 0
    prefix = [0] * len(vectors[order[0]])
    worst = 0
    for index in order:
        prefix = [a + b for a, b in zip(prefix, vectors[index], strict=True)]
        worst = max(worst, linf_norm(prefix))
    return worst


def _greedy(vectors: Sequence[Sequence[int]], m: int) -> list[int]:
    remaining = list(range(len(vectors)))
    prefix = [0] * m
    order: list[int] = []
    while remaining:
        best = min(
            remaining,
            key=lambda i: (linf_norm([a + b for a, b in zip(prefix, vectors[i])]), i),
        )
        remaining.remove(best)
        order.append(best)
        prefix = [a + b for a, b in zip(prefix, vectors[best], strict=True)]
    return order


def _backtrack(vectors: Sequence[Sequence[int]], m: int, bound: int) -> list[int] | None:
    used = [False] * len(vectors)
    order: list[int] = []

    def extend(prefix: list[int]) -> bool:
        if len(order) == len(vectors):
            return True
        tried: set[tuple[int, ...]] = set()
        options = []
        for i, vector in enumerate(vectors):
            key = tuple(vector)
            if used[i] or key in tried:
                continue
            tried.add(key)
            after = [a + b for a, b in zip(prefix, vector, strict=True)]
            norm = linf_norm(after)
            if norm <= bound:
                options.append((norm, i, after))
        for _, i, after in sorted(options, key=lambda option: option[:2]):
            used[i] = True
            order.append(i)
            if extend(after):
                return True
            order.pop()
            used[i] = False
        return False

    return order if extend([0] * m) else None


def steinitz_reorder(vectors: Sequence[Sequence[int]], delta: int) -> list[int]:
    """A permutation whose prefix sums all stay within ∞-norm m·Δ.

    Greedy first (append the vector that keeps the prefix smallest, ties
    to the lower index), exhaustive backtracking when greedy overshoots.
    Indices are 0-based positions into ``vectors``.
    """
    m = _validate(vectors, delta)
    bound = m * delta
    order = _greedy(vectors, m)
    if max_prefix_norm(vectors, order) <= bound:
        return order
    logger.debug("Greedy order overshoots %d; backtracking", bound)
    result = _backtrack(vectors, m, bound)
    if result is None:
        raise InternalConsistencyError(f"no ordering keeps prefixes within {bound}")
    return result
