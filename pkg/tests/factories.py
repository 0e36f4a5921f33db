"""Seeded generators for random test instances."""

from __future__ import annotations

import random

from nfoldkit.core.models import IntMatrix, NFoldInstance, Objective
from nfoldkit.core.nfold import make_brick


def random_matrix(rng: random.Random, rows: int, cols: int, spread: int = 2) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(-spread, spread) for _ in range(cols)] for _ in range(rows)]
    )


def random_nfold(
    rng: random.Random,
    n: int | None = None,
    r: int | None = None,
    s: int | None = None,
    t: int | None = None,
    spread: int = 2,
    width: int = 2,
    convex: bool = False,
    feasible_hint: bool = True,
) -> NFoldInstance:
    """A small N-fold instance; with ``feasible_hint`` the right-hand side comes from a box point."""
    n = n if n is not None else rng.randint(1, 2)
    r = r if r is not None else rng.randint(0, 2)
    s = s if s is not None else rng.randint(0, 2)
    t = t if t is not None else rng.randint(1, 2)
    bricks = []
    point: list[list[int]] = []
    for _ in range(n):
        lower = [rng.randint(-1, 0) for _ in range(t)]
        upper = [lo + rng.randint(0, width) for lo in lower]
        point.append([rng.randint(lo, hi) for lo, hi in zip(lower, upper)])
        A = [[rng.randint(-spread, spread) for _ in range(t)] for _ in range(r)]
        B = [[rng.randint(-spread, spread) for _ in range(t)] for _ in range(s)]
        bricks.append((A, B, lower, upper))

    b_top = [0] * r
    built = []
    for (A, B, lower, upper), x in zip(bricks, point):
        if feasible_hint:
            for k in range(r):
                b_top[k] += sum(a * v for a, v in zip(A[k], x))
            b_local = [sum(a * v for a, v in zip(row, x)) for row in B]
        else:
            b_local = [rng.randint(-2, 2) for _ in range(s)]
        built.append(make_brick(A, B, b_local, lower, upper))
    if not feasible_hint:
        b_top = [rng.randint(-2, 2) for _ in range(r)]

    total = n * t
    if convex:
        objective = Objective.convex(
            [rng.randint(0, 2) for _ in range(total)],
            [rng.randint(-3, 3) for _ in range(total)],
        )
    else:
        objective = Objective.linear([rng.randint(-3, 3) for _ in range(total)])
    return NFoldInstance(tuple(built), tuple(b_top), objective)
