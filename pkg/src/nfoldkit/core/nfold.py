"""N-fold instance assembly, feasibility and objective evaluation."""

from __future__ import annotations

import math
from collections.abc import Sequence

from .arithmetic import NFoldError, checked, checked_sum
from .models import (
    Brick,
    IntMatrix,
    InvalidInstanceError,
    NFoldInstance,
    NFoldParameters,
    Objective,
)
from .partition import nfold_partition_params


class NotApplicableError(NFoldError):
    """Raised when a measure is undefined for the given objective."""


def make_brick(
    A: Sequence[Sequence[int]],
    B: Sequence[Sequence[int]],
    b_local: Sequence[int],
    lower: Sequence[int],
    upper: Sequence[int],
) -> Brick:
    """Build a brick from nested lists; the width is taken from the bounds."""
    width = len(lower)
    return Brick(
        A=IntMatrix.from_rows(A, width) if A else IntMatrix(0, width, ()),
        B=IntMatrix.from_rows(B, width) if B else IntMatrix(0, width, ()),
        b_local=tuple(b_local),
        lower=tuple(lower),
        upper=tuple(upper),
    )


def assemble(instance: NFoldInstance) -> IntMatrix:
    """Lay the bricks out as the full (r + Σ s_i) × (Σ t_i) matrix."""
    total = instance.num_variables
    rows: list[list[int]] = [[0] * total for _ in range(instance.r)]
    for index, brick in enumerate(instance.bricks):
        offset = instance.offsets[index]
        for i, row in enumerate(brick.A.iter_rows()):
            rows[i][offset : offset + brick.width] = row
    for index, brick in enumerate(instance.bricks):
        offset = instance.offsets[index]
        for row in brick.B.iter_rows():
            full = [0] * total
            full[offset : offset + brick.width] = row
            rows.append(full)
    return IntMatrix(len(rows), total, tuple(v for row in rows for v in row))


def top_contribution(instance: NFoldInstance, x: Sequence[int]) -> tuple[int, ...]:
    """Σ_i A⁽ⁱ⁾ x⁽ⁱ⁾."""
    totals = [0] * instance.r
    for brick, piece in zip(instance.bricks, instance.split(x), strict=True):
        for i, value in enumerate(brick.A.matvec(piece)):
            totals[i] = checked(totals[i] + value)
    return tuple(totals)


def within_bounds(instance: NFoldInstance, x: Sequence[int]) -> bool:
    return all(
        lo <= v <= hi
        for v, lo, hi in zip(x, instance.lower, instance.upper, strict=True)
    )


def check_feasible(instance: NFoldInstance, x: Sequence[int]) -> bool:
    """True iff the top rows, every brick's local rows and the bounds hold."""
    if len(x) != instance.num_variables:
        raise InvalidInstanceError(
            f"vector has {len(x)} entries, instance has {instance.num_variables}"
        )
    if not within_bounds(instance, x):
        return False
    if top_contribution(instance, x) != instance.b_top:
        return False
    for brick, piece in zip(instance.bricks, instance.split(x), strict=True):
        if brick.B.matvec(piece) != brick.b_local:
            return False
    return True


def evaluate_objective(instance: NFoldInstance | Objective, x: Sequence[int]) -> int:
    """c·x for linear objectives, Σ a_j x_j² + b_j x_j for convex ones."""
    objective = instance.objective if isinstance(instance, NFoldInstance) else instance
    if len(x) != objective.dimension:
        raise InvalidInstanceError(
            f"vector has {len(x)} entries, objective covers {objective.dimension}"
        )
    if objective.is_linear:
        return checked_sum(checked(c * v) for c, v in zip(objective.c, x, strict=True))
    return checked_sum(
        checked(a * v * v + b * v)
        for a, b, v in zip(objective.a, objective.b, x, strict=True)
    )


def box_width(instance: NFoldInstance) -> int:
    """||u − ℓ||∞."""
    return max(hi - lo for lo, hi in zip(instance.lower, instance.upper, strict=True))


def input_measure(instance: NFoldInstance) -> float:
    """L = log₂(||u − ℓ||∞) · log₂(c_max), or 0 when either factor vanishes."""
    objective = instance.objective
    if not objective.is_linear:
        raise NotApplicableError("input measure is defined for linear objectives only")
    highest = 0
    lowest = 0
    for c, lo, hi in zip(objective.c, instance.lower, instance.upper, strict=True):
        highest = checked(highest + max(c * lo, c * hi))
        lowest = checked(lowest + min(c * lo, c * hi))
    c_max = max(abs(highest), abs(lowest))
    width = box_width(instance)
    if width <= 1 or c_max <= 1:
        return 0.0
    return math.log2(width) * math.log2(c_max)


def nfold_parameters(instance: NFoldInstance) -> NFoldParameters:
    """The parameter row (r, s, t, Δ, n, p_A, p_B, S_A, L) of an instance."""
    p_A, S_A, p_B = nfold_partition_params(instance)
    return NFoldParameters(
        r=instance.r,
        s=max(brick.local_rows for brick in instance.bricks),
        t=max(brick.width for brick in instance.bricks),
        delta=instance.delta,
        n=instance.n,
        p_A=p_A,
        p_B=p_B,
        S_A=S_A,
        L=input_measure(instance) if instance.objective.is_linear else None,
    )
