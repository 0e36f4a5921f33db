"""Brute-force references for tests and for reproducing reference values.

Nothing here calls the solver, the Graver enumeration or the encoders;
only the data classes and matrix primitives are shared.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from fractions import Fraction

from .core.arithmetic import is_conformal, l1_norm
from .core.graver import GraverSet, IntractableError
from .core.models import IntMatrix, InvalidInstanceError, NFoldInstance, Solution, SolveStatus
from .core.nfold import assemble
from .problems.scheduling import UniformInstance, UnrelatedInstance, Variant

logger = logging.getLogger(__name__)


def oracle_ip_solve(instance: NFoldInstance, volume_limit: int = 10_000_000) -> Solution:
    """Optimum by scanning every integer point of the box."""
    lower, upper = instance.lower, instance.upper
    volume = math.prod(hi - lo + 1 for lo, hi in zip(lower, upper, strict=True))
    if volume > volume_limit:
        raise IntractableError(f"box has {volume} points, limit is {volume_limit}")
    rows = assemble(instance).to_rows()
    rhs = list(instance.b_top) + [v for brick in instance.bricks for v in brick.b_local]
    objective = instance.objective

    def value(x: Sequence[int]) -> int:
        if objective.is_linear:
            return sum(c * v for c, v in zip(objective.c, x, strict=True))
        return sum(a * v * v + b * v for a, b, v in zip(objective.a, objective.b, x, strict=True))

    best: tuple[int, ...] | None = None
    best_value = 0
    for x in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper, strict=True))):
        if any(sum(a * v for a, v in zip(row, x)) != b for row, b in zip(rows, rhs, strict=True)):
            continue
        current = value(x)
        better = current > best_value if objective.is_linear else current < best_value
        if best is None or better:
            best, best_value = x, current
    if best is None:
        return Solution(status=SolveStatus.INFEASIBLE)
    return Solution(status=SolveStatus.OPTIMAL, x=best, objective_value=best_value)


def _row_components(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Connected components of rows under shared support, by breadth-first search."""
    unseen = set(range(len(rows)))
    components = []
    while unseen:
        queue = [min(unseen)]
        unseen.discard(queue[0])
        component = []
        while queue:
            i = queue.pop()
            component.append(i)
            for k in sorted(unseen):
                if any(a and b for a, b in zip(rows[i], rows[k])):
                    unseen.discard(k)
                    queue.append(k)
        components.append(sorted(component))
    return components


def _right_pivots(rows: Sequence[Sequence[int]], cols: int) -> tuple[list[int], list[list[Fraction]]]:
    """Reduced echelon form with pivots chosen from the rightmost column leftwards."""
    work = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    used_rows: list[int] = []
    for col in range(cols - 1, -1, -1):
        candidates = [i for i in range(len(work)) if i not in used_rows and work[i][col] != 0]
        if not candidates:
            continue
        pivot_row = candidates[0]
        factor = work[pivot_row][col]
        work[pivot_row] = [v / factor for v in work[pivot_row]]
        for i in range(len(work)):
            if i != pivot_row and work[i][col] != 0:
                scale = work[i][col]
                work[i] = [a - scale * b for a, b in zip(work[i], work[pivot_row])]
        pivots.append(col)
        used_rows.append(pivot_row)
    return pivots, [work[i] for i in used_rows]


def _free_points(dimension: int, radius: int) -> Iterator[tuple[int, ...]]:
    if dimension == 0:
        yield ()
        return
    for head in range(-radius, radius + 1):
        for tail in _free_points(dimension - 1, radius - abs(head)):
            yield (head, *tail)


def oracle_graver(M: IntMatrix, budget: int = 2_000_000) -> GraverSet:
    """Indecomposable cycles within the radius (2pΔ + 1)^p, straight from the definition.

    All cycles inside the radius are listed first. A cycle is kept when no
    shorter listed cycle is conformal to it; a proper conformal sub-cycle
    always contains a kept one, so checking against kept cycles suffices.
    """
    rows = M.to_rows()
    if not rows or M.cols == 0:
        raise InvalidInstanceError("oracle_graver needs a matrix with rows and columns")
    p = max(len(component) for component in _row_components(rows))
    delta = max((abs(v) for row in rows for v in row), default=0)
    radius = (2 * p * delta + 1) ** p

    pivots, reduced = _right_pivots(rows, M.cols)
    free = [j for j in range(M.cols) if j not in pivots]
    points = sum(
        2**k * math.comb(len(free), k) * math.comb(radius, k)
        for k in range(min(len(free), radius) + 1)
    )
    if points > budget:
        raise IntractableError(f"oracle needs {points} points, budget is {budget}")

    cycles = []
    for values in _free_points(len(free), radius):
        if not any(values):
            continue
        y = [0] * M.cols
        for j, v in zip(free, values, strict=True):
            y[j] = v
        integral = True
        for col, row in zip(pivots, reduced, strict=True):
            entry = -sum(row[j] * y[j] for j in free)
            if entry.denominator != 1:
                integral = False
                break
            y[col] = int(entry)
        if integral and l1_norm(y) <= radius:
            assert not any(M.matvec(y))
            cycles.append(tuple(y))

    cycles.sort(key=l1_norm)
    kept: list[tuple[int, ...]] = []
    for y in cycles:
        if not any(is_conformal(z, y) and z != y for z in kept):
            kept.append(y)
    logger.debug("Oracle: %d cycles within radius %d, %d indecomposable", len(cycles), radius, len(kept))
    return GraverSet(M, tuple(sorted(kept)), radius)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head, *tail)


def _assignments(multiplicities: Sequence[int], machines: int) -> Iterator[list[tuple[int, ...]]]:
    """Every split of each type's jobs over the machines, as per-machine count rows."""
    per_type = [list(_compositions(n, machines)) for n in multiplicities]
    for choice in itertools.product(*per_type):
        yield [tuple(split[i] for split in choice) for i in range(machines)]


def _block_end(speed: int, blocks: Sequence[tuple[int, int, int]]) -> int:
    """Work-unit end of blocks (p, count, release) run in the given order."""
    clock = 0
    for p, count, release in blocks:
        clock = max(clock, speed * release) + p * count
    return clock


def _deadlines_met(speed: int, blocks: Sequence[tuple[int, int, int]]) -> bool:
    clock = 0
    for p, count, deadline in blocks:
        clock += p * count
        if clock > speed * deadline:
            return False
    return True


def oracle_schedule(
    inst: UniformInstance | UnrelatedInstance,
    variant: Variant,
    max_jobs: int = 6,
    max_machines: int = 3,
) -> int | Fraction | None:
    """Exact optimum by trying every assignment; None when nothing is feasible.

    Makespan variants return the least integer T whose decision holds
    (greatest for Cmin); release and deadline variants run type blocks in
    release (deadline) order; qswc returns Σ w_j C_j with Smith's rule.
    """
    if isinstance(inst, UnrelatedInstance):
        multiplicities = list(inst.multiplicities)
    else:
        multiplicities = [job.n for job in inst.types]
    if sum(multiplicities) > max_jobs or inst.m > max_machines:
        raise IntractableError(
            f"oracle handles at most {max_jobs} jobs on {max_machines} machines"
        )

    best: int | Fraction | None = None
    for rows in _assignments(multiplicities, inst.m):
        value = _evaluate(inst, variant, rows)
        if value is None:
            continue
        if best is None or (value > best if variant is Variant.CMIN else value < best):
            best = value
    return best


def _evaluate(
    inst: UniformInstance | UnrelatedInstance,
    variant: Variant,
    rows: Sequence[Sequence[int]],
) -> int | Fraction | None:
    if isinstance(inst, UnrelatedInstance):
        loads = []
        for i, row in enumerate(rows):
            load = 0
            for j, count in enumerate(row):
                time = inst.times[inst.machine_kinds[i]][j]
                if count and time is None:
                    return None
                load += (time or 0) * count
            loads.append(load)
        return max(loads)

    types = inst.types
    speeds = inst.speeds
    if variant is Variant.QSWC:
        total = Fraction(0)
        for row, speed in zip(rows, speeds, strict=True):
            jobs = [j for j, count in enumerate(row) for _ in range(count)]
            jobs.sort(key=lambda j: (-Fraction(types[j].w or 0, types[j].p), j))
            clock = 0
            for j in jobs:
                clock += types[j].p
                total += Fraction((types[j].w or 0) * clock, speed)
        return total

    if variant is Variant.CMAX_CAPACITY:
        assert inst.capacities is not None
        if any(sum(row) > cap for row, cap in zip(rows, inst.capacities, strict=True)):
            return None

    if variant is Variant.CMAX_RELEASE:
        order = sorted(range(len(types)), key=lambda j: types[j].r or 0)
        ends = [
            _block_end(speed, [(types[j].p, row[j], types[j].r or 0) for j in order])
            for row, speed in zip(rows, speeds, strict=True)
        ]
    elif variant is Variant.CMAX_DEADLINE:
        order = sorted(range(len(types)), key=lambda j: types[j].d or 0)
        ends = []
        for row, speed in zip(rows, speeds, strict=True):
            blocks = [(types[j].p, row[j], types[j].d or 0) for j in order]
            if not _deadlines_met(speed, blocks):
                return None
            ends.append(sum(p * count for p, count, _ in blocks))
    else:
        ends = [sum(types[j].p * row[j] for j in range(len(types))) for row in rows]

    if variant is Variant.CMIN:
        return min(end // speed for end, speed in zip(ends, speeds, strict=True))
    return max(-(-end // speed) for end, speed in zip(ends, speeds, strict=True))


def _twin_classes(adjacency: Sequence[Sequence[int]]) -> list[int]:
    n = len(adjacency)
    label = list(range(n))
    for u in range(n):
        for v in range(u):
            if set(adjacency[u]) - {v} == set(adjacency[v]) - {u}:
                label[u] = label[v]
                break
    return label


def oracle_coloring(
    adjacency: Sequence[Sequence[int]],
    restricted: bool = True,
    max_vertices: int = 8,
) -> int:
    """Minimum color sum over proper colorings with colors 1..|V|.

    ``restricted`` keeps every independent twin class in a single color.
    """
    n = len(adjacency)
    if n == 0:
        raise InvalidInstanceError("graph needs at least one vertex")
    if n > max_vertices:
        raise IntractableError(f"oracle handles at most {max_vertices} vertices")
    label = _twin_classes(adjacency)
    colors = [0] * n
    best = n * (n + 1) // 2 + n * n

    def place(v: int, partial: int) -> None:
        nonlocal best
        if partial + (n - v) >= best:
            return
        if v == n:
            best = partial
            return
        forced = None
        if restricted and label[v] != v and label[v] not in adjacency[v]:
            forced = colors[label[v]]
        for color in [forced] if forced else range(1, n + 1):
            if all(colors[u] != color for u in adjacency[v] if u < v):
                colors[v] = color
                place(v + 1, partial + color)
        colors[v] = 0

    place(0, 0)
    return best
