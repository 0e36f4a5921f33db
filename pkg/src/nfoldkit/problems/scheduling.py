"""High-multiplicity scheduling as N-fold integer programs.

Every encoder emits one brick per machine whose top band is the d×d
identity on the count variables x^i_j, so the global rows read
Σ_i x^i_j = n_j. Local inequalities become equalities through one slack
column each. Times inside a brick are measured in machine work units,
so machine i with speed s_i has budget s_i·T.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from ..core.arithmetic import NFoldError, ceil_div, checked
from ..core.graver import InternalConsistencyError
from ..core.models import (
    Brick,
    IntMatrix,
    NFoldInstance,
    Objective,
    SolverConfig,
    SolveStatus,
)
from ..core.solver import AugmentationSolver

logger = logging.getLogger(__name__)


class SchedulingError(NFoldError):
    """Raised on missing variant data or inconsistent decision probes."""


class Variant(str, Enum):
    """Scheduling problem variant."""

    CMAX = "cmax"
    CMIN = "cmin"
    CMAX_CAPACITY = "cmax-cap"
    CMAX_RELEASE = "cmax-release"
    CMAX_DEADLINE = "cmax-deadline"
    RCMAX = "rcmax"
    QSWC = "qswc"

    @property
    def is_uniform_decision(self) -> bool:
        return self not in (Variant.RCMAX, Variant.QSWC)


@dataclass(frozen=True)
class JobType:
    """A job type: processing time and multiplicity, plus optional attributes."""

    p: int
    n: int
    w: int | None = None
    r: int | None = None
    d: int | None = None


@dataclass(frozen=True)
class UniformInstance:
    """Uniformly related machines with high-multiplicity job types."""

    speeds: tuple[int, ...]
    types: tuple[JobType, ...]
    capacities: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not self.speeds:
            raise SchedulingError("at least one machine is required")
        if any(s < 1 for s in self.speeds):
            raise SchedulingError("speeds must be positive")
        if not self.types:
            raise SchedulingError("at least one job type is required")
        for j, job in enumerate(self.types):
            if job.p < 1:
                raise SchedulingError(f"type {j}: processing time must be positive")
            if job.n < 0:
                raise SchedulingError(f"type {j}: multiplicity must be non-negative")
            for name in ("w", "r", "d"):
                value = getattr(job, name)
                if value is not None and value < 0:
                    raise SchedulingError(f"type {j}: {name} must be non-negative")
        if self.capacities is not None:
            if len(self.capacities) != len(self.speeds):
                raise SchedulingError("one capacity per machine is required")
            if any(c < 0 for c in self.capacities):
                raise SchedulingError("capacities must be non-negative")

    @property
    def m(self) -> int:
        return len(self.speeds)

    @property
    def d(self) -> int:
        return len(self.types)

    @property
    def p_max(self) -> int:
        return max(job.p for job in self.types)

    @property
    def total_work(self) -> int:
        return sum(job.p * job.n for job in self.types)

    @property
    def total_jobs(self) -> int:
        return sum(job.n for job in self.types)

    def require(self, variant: Variant) -> None:
        """Raise unless the data the variant needs is present."""
        missing = {
            Variant.CMAX_CAPACITY: self.capacities is None,
            Variant.CMAX_RELEASE: any(job.r is None for job in self.types),
            Variant.CMAX_DEADLINE: any(job.d is None for job in self.types),
            Variant.QSWC: any(job.w is None for job in self.types),
        }.get(variant, False)
        if missing:
            raise SchedulingError(f"variant {variant.value} is missing its job or machine data")
        if variant is Variant.RCMAX:
            raise SchedulingError("rcmax needs an unrelated-machines instance")


@dataclass(frozen=True)
class UnrelatedInstance:
    """Unrelated machines grouped into kinds; ``None`` marks an infinite time."""

    machine_kinds: tuple[int, ...]
    times: tuple[tuple[int | None, ...], ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.machine_kinds:
            raise SchedulingError("at least one machine is required")
        if not self.multiplicities:
            raise SchedulingError("at least one job type is required")
        for kind in self.machine_kinds:
            if not 0 <= kind < len(self.times):
                raise SchedulingError(f"machine kind {kind} has no processing times")
        for k, row in enumerate(self.times):
            if len(row) != len(self.multiplicities):
                raise SchedulingError(f"kind {k}: one time per job type is required")
            if any(t is not None and t < 1 for t in row):
                raise SchedulingError(f"kind {k}: processing times must be positive")
        if any(n < 0 for n in self.multiplicities):
            raise SchedulingError("multiplicities must be non-negative")

    @property
    def m(self) -> int:
        return len(self.machine_kinds)

    @property
    def d(self) -> int:
        return len(self.multiplicities)

    @property
    def K(self) -> int:  # noqa: N802
        return len(self.times)

    def time(self, machine: int, job_type: int) -> int | None:
        return self.times[self.machine_kinds[machine]][job_type]

    @property
    def p_max(self) -> int:
        return max((t for row in self.times for t in row if t is not None), default=1)


@dataclass
class Schedule:
    """Decoded schedule: counts per machine and type, optional block start times."""

    variant: Variant
    status: SolveStatus
    optimum: int | Fraction | None = None
    counts: tuple[tuple[int, ...], ...] = ()
    start_times: tuple[tuple[int, ...], ...] | None = None
    achieved: Fraction | None = None
    probes: list[tuple[int, bool]] = field(default_factory=list)

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL

    def to_dict(self) -> dict[str, object]:
        return {
            "variant": self.variant.value,
            "status": self.status.value,
            "optimum": format_fraction(self.optimum),
            "counts": [list(row) for row in self.counts] if self.is_optimal else None,
            "start_times": (
                [list(row) for row in self.start_times] if self.start_times else None
            ),
            "achieved": format_fraction(self.achieved),
            "probes": [[t, ok] for t, ok in self.probes],
        }


def format_fraction(value: int | Fraction | None) -> int | str | None:
    """Integers stay integers; proper fractions become ``"p/q"``."""
    if value is None:
        return None
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    return value


@dataclass(frozen=True)
class EncodedSchedule:
    """An emitted IP together with the column layout needed to decode it."""

    instance: NFoldInstance
    variant: Variant
    T: int | None
    order: tuple[int, ...]
    has_starts: bool = False
    scale: int = 1


def _brick(
    A_rows: Sequence[Sequence[int]],
    B_rows: Sequence[Sequence[int]],
    b_local: Sequence[int],
    lower: Sequence[int],
    upper: Sequence[int],
) -> Brick:
    width = len(lower)
    return Brick(
        A=IntMatrix.from_rows(A_rows, width),
        B=IntMatrix.from_rows(B_rows, width) if B_rows else IntMatrix(0, width, ()),
        b_local=tuple(checked(v) for v in b_local),
        lower=tuple(lower),
        upper=tuple(checked(v) for v in upper),
    )


def _top_band(d: int, width: int) -> list[list[int]]:
    return [[int(k == j) for k in range(width)] for j in range(d)]


def _decision_objective(bricks: Sequence[Brick]) -> Objective:
    return Objective.linear([0] * sum(brick.width for brick in bricks))


def _encode_loads(inst: UniformInstance, variant: Variant, T: int) -> EncodedSchedule:
    d = inst.d
    p = [job.p for job in inst.types]
    n = [job.n for job in inst.types]
    total = inst.total_work
    bricks = []
    for i, s in enumerate(inst.speeds):
        budget = checked(s * T)
        if variant is Variant.CMIN:
            width = d + 1
            B_rows = [p + [-1]]
            upper = n + [max(0, total - budget)]
            b_local = [budget]
        elif variant is Variant.CMAX_CAPACITY:
            assert inst.capacities is not None
            width = d + 2
            B_rows = [p + [1, 0], [1] * d + [0, 1]]
            upper = n + [budget, inst.capacities[i]]
            b_local = [budget, inst.capacities[i]]
        else:
            width = d + 1
            B_rows = [p + [1]]
            upper = n + [budget]
            b_local = [budget]
        bricks.append(_brick(_top_band(d, width), B_rows, b_local, [0] * width, upper))
    instance = NFoldInstance(tuple(bricks), tuple(n), _decision_objective(bricks))
    return EncodedSchedule(instance, variant, T, tuple(range(d)))


def _encode_blocks(inst: UniformInstance, variant: Variant, T: int) -> EncodedSchedule:
    """Block-order model: types sorted by release (or deadline), start columns st_j.

    Columns per brick: x (sorted types), st (sorted types), then the gap
    slacks of the ordering rows, the makespan slack and, for deadlines,
    one slack per deadline row.
    """
    d = inst.d
    if variant is Variant.CMAX_RELEASE:
        order = tuple(sorted(range(d), key=lambda j: inst.types[j].r or 0))
        release = [inst.types[j].r or 0 for j in order]
    else:
        order = tuple(sorted(range(d), key=lambda j: inst.types[j].d or 0))
        release = [0] * d
    p = [inst.types[j].p for j in order]
    n = [inst.types[j].n for j in order]
    deadlines = [inst.types[j].d or 0 for j in order]

    gaps = d - 1
    extra = d if variant is Variant.CMAX_DEADLINE else 0
    width = 2 * d + gaps + 1 + extra
    bricks = []
    for s in inst.speeds:
        budget = checked(s * T)
        start_low = [s * r for r in release]
        start_high = [max(s * r, budget) for r in release]
        if extra:
            start_high = [min(high, s * deadline) for high, deadline in zip(start_high, deadlines)]
        # gap j-1 = st_j - st_{j-1} - p_{j-1} x_{j-1}
        gap_high = [max(0, start_high[j] - start_low[j - 1]) for j in range(1, d)]
        B_rows: list[list[int]] = []
        b_local: list[int] = []
        for j in range(1, d):
            row = [0] * width
            row[j - 1] = -p[j - 1]
            row[d + j] = 1
            row[d + j - 1] = -1
            row[2 * d + j - 1] = -1
            B_rows.append(row)
            b_local.append(0)
        row = [0] * width
        row[d - 1] = p[d - 1]
        row[2 * d - 1] = 1
        row[2 * d + gaps] = 1
        B_rows.append(row)
        b_local.append(budget)
        slack_high = gap_high + [budget]
        if extra:
            for j in range(d):
                row = [0] * width
                row[j] = p[j]
                row[d + j] = 1
                row[2 * d + gaps + 1 + j] = 1
                B_rows.append(row)
                b_local.append(s * deadlines[j])
            slack_high += [s * deadline - low for deadline, low in zip(deadlines, start_low)]
        bricks.append(
            _brick(
                _top_band(d, width),
                B_rows,
                b_local,
                [0] * d + start_low + [0] * (gaps + 1 + extra),
                n + start_high + slack_high,
            )
        )
    instance = NFoldInstance(tuple(bricks), tuple(n), _decision_objective(bricks))
    return EncodedSchedule(instance, variant, T, order, has_starts=True)


def encode_decision(inst: UniformInstance, variant: Variant, T: int) -> EncodedSchedule:
    """Decision IP: can every machine finish (or, for Cmin, reach) s_i·T?"""
    if T < 0:
        raise SchedulingError("T must be non-negative")
    if variant in (Variant.RCMAX, Variant.QSWC):
        raise SchedulingError(f"{variant.value} has no uniform decision encoding")
    inst.require(variant)
    if variant in (Variant.CMAX_RELEASE, Variant.CMAX_DEADLINE):
        return _encode_blocks(inst, variant, T)
    return _encode_loads(inst, variant, T)


def encode_rcmax(inst: UnrelatedInstance, T: int) -> EncodedSchedule:
    """Two local rows per machine: Σ a_j x_j + σ = T and Σ b_j x_j = 0."""
    if T < 0:
        raise SchedulingError("T must be non-negative")
    d = inst.d
    n = list(inst.multiplicities)
    bricks = []
    for i in range(inst.m):
        times = [inst.time(i, j) for j in range(d)]
        a = [t if t is not None else 0 for t in times]
        b = [1 if t is None else 0 for t in times]
        bricks.append(
            _brick(
                _top_band(d, d + 1),
                [a + [1], b + [0]],
                [T, 0],
                [0] * (d + 1),
                n + [T],
            )
        )
    instance = NFoldInstance(tuple(bricks), tuple(n), _decision_objective(bricks))
    return EncodedSchedule(instance, Variant.RCMAX, T, tuple(range(d)))


def smith_order(inst: UniformInstance) -> tuple[int, ...]:
    """Types by non-increasing w/p, ties to the smaller index."""
    return tuple(
        sorted(range(inst.d), key=lambda j: (-Fraction(inst.types[j].w or 0, inst.types[j].p), j))
    )


def encode_qswc(inst: UniformInstance) -> EncodedSchedule:
    """Separable convex IP whose optimum is 2·lcm(p)·lcm(s)·Σ w_j C_j.

    Columns per brick: x (Smith order) then z (Smith order), where z is the
    work completed at the end of each type block.
    """
    inst.require(Variant.QSWC)
    if inst.capacities is not None or any(
        job.r is not None or job.d is not None for job in inst.types
    ):
        raise SchedulingError("qswc takes weights only")
    d = inst.d
    order = smith_order(inst)
    p = [inst.types[j].p for j in order]
    w = [inst.types[j].w or 0 for j in order]
    n = [inst.types[j].n for j in order]
    L_p = math.lcm(*p)
    L_s = math.lcm(*inst.speeds)
    ratio = [L_p * w[j] // p[j] for j in range(d)] + [0]
    width = 2 * d
    total = inst.total_work

    bricks = []
    a: list[int] = []
    b: list[int] = []
    for s in inst.speeds:
        factor = L_s // s
        B_rows = []
        for j in range(d):
            row = [0] * width
            row[j] = -p[j]
            row[d + j] = 1
            if j:
                row[d + j - 1] = -1
            B_rows.append(row)
        bricks.append(
            _brick(_top_band(d, width), B_rows, [0] * d, [0] * width, n + [total] * d)
        )
        a.extend([0] * d + [checked(factor * (ratio[j] - ratio[j + 1])) for j in range(d)])
        b.extend([checked(factor * L_p * p[j] * w[j]) for j in range(d)] + [0] * d)
    instance = NFoldInstance(tuple(bricks), tuple(n), Objective.convex(a, b))
    return EncodedSchedule(instance, Variant.QSWC, None, order, scale=2 * L_p * L_s)


def block_finish(
    speed: int, p: Sequence[int], counts: Sequence[int], release: Sequence[int]
) -> list[int]:
    """Earliest block start times (work units) for blocks processed in the given order."""
    starts = []
    clock = 0
    for p_j, x_j, r_j in zip(p, counts, release, strict=True):
        clock = max(clock, speed * r_j)
        starts.append(clock)
        clock += p_j * x_j
    return starts


def decode(
    encoded: EncodedSchedule,
    x: Sequence[int],
    inst: UniformInstance | UnrelatedInstance,
) -> Schedule:
    """Read counts (and start times) off an IP solution and recompute the objective."""
    instance = encoded.instance
    variant = encoded.variant
    order = encoded.order
    d = len(order)
    pieces = instance.split(x)
    counts: list[list[int]] = []
    starts: list[list[int]] = []
    for piece in pieces:
        row = [0] * d
        for position, j in enumerate(order):
            row[j] = piece[position]
        counts.append(row)
        if encoded.has_starts:
            starts.append([piece[d + position] for position in range(d)])

    multiplicities = (
        inst.multiplicities
        if isinstance(inst, UnrelatedInstance)
        else tuple(job.n for job in inst.types)
    )
    for j in range(d):
        if sum(row[j] for row in counts) != multiplicities[j]:
            raise InternalConsistencyError(f"type {j}: counts do not sum to n_j")

    schedule = Schedule(
        variant=variant,
        status=SolveStatus.OPTIMAL,
        counts=tuple(tuple(row) for row in counts),
    )
    if isinstance(inst, UnrelatedInstance):
        loads = []
        for i, row in enumerate(counts):
            load = 0
            for j, count in enumerate(row):
                time = inst.time(i, j)
                if count and time is None:
                    raise InternalConsistencyError(f"machine {i} runs incompatible type {j}")
                load += (time or 0) * count
            loads.append(load)
        schedule.achieved = Fraction(max(loads))
        schedule.optimum = encoded.T
        if encoded.T is not None and max(loads) > encoded.T:
            raise InternalConsistencyError("decoded makespan exceeds the decision bound")
        return schedule

    if variant is Variant.QSWC:
        return _decode_weighted(encoded, inst, schedule, pieces)

    T = encoded.T
    assert T is not None
    if encoded.has_starts:
        _check_blocks(encoded, inst, counts, starts)
        by_type = []
        for row in starts:
            original = [0] * d
            for position, j in enumerate(order):
                original[j] = row[position]
            by_type.append(tuple(original))
        schedule.start_times = tuple(by_type)
        p_sorted = [inst.types[j].p for j in order]
        release = [
            (inst.types[j].r or 0) if variant is Variant.CMAX_RELEASE else 0 for j in order
        ]
        finishes = []
        for i, s in enumerate(inst.speeds):
            sorted_counts = [counts[i][j] for j in order]
            earliest = block_finish(s, p_sorted, sorted_counts, release)
            finishes.append(Fraction(earliest[-1] + p_sorted[-1] * sorted_counts[-1], s))
        schedule.achieved = max(finishes)
    else:
        ratios = [
            Fraction(sum(inst.types[j].p * row[j] for j in range(d)), s)
            for row, s in zip(counts, inst.speeds, strict=True)
        ]
        schedule.achieved = min(ratios) if variant is Variant.CMIN else max(ratios)
        if variant is Variant.CMAX_CAPACITY:
            assert inst.capacities is not None
            for i, row in enumerate(counts):
                if sum(row) > inst.capacities[i]:
                    raise InternalConsistencyError(f"machine {i} exceeds its capacity")
    if variant is Variant.CMIN:
        if schedule.achieved < T:
            raise InternalConsistencyError("decoded minimum load is below the decision bound")
    elif schedule.achieved > T:
        raise InternalConsistencyError("decoded makespan exceeds the decision bound")
    schedule.optimum = T
    return schedule


def _check_blocks(
    encoded: EncodedSchedule,
    inst: UniformInstance,
    counts: Sequence[Sequence[int]],
    starts: Sequence[Sequence[int]],
) -> None:
    order = encoded.order
    T = encoded.T or 0
    for i, s in enumerate(inst.speeds):
        clock = 0
        for position, j in enumerate(order):
            job = inst.types[j]
            start = starts[i][position]
            release = job.r if encoded.variant is Variant.CMAX_RELEASE else 0
            if start < s * (release or 0):
                raise InternalConsistencyError(f"machine {i}: block {j} starts before release")
            if start < clock:
                raise InternalConsistencyError(f"machine {i}: block {j} overlaps its predecessor")
            clock = start + job.p * counts[i][j]
            if encoded.variant is Variant.CMAX_DEADLINE and clock > s * (job.d or 0):
                raise InternalConsistencyError(f"machine {i}: block {j} misses its deadline")
        if clock > s * T:
            raise InternalConsistencyError(f"machine {i} finishes after s_i·T")


def _decode_weighted(
    encoded: EncodedSchedule,
    inst: UniformInstance,
    schedule: Schedule,
    pieces: Sequence[Sequence[int]],
) -> Schedule:
    order = encoded.order
    d = len(order)
    total = Fraction(0)
    starts: list[list[int]] = []
    for i, s in enumerate(inst.speeds):
        clock = 0
        row = [0] * d
        for position, j in enumerate(order):
            job = inst.types[j]
            count = schedule.counts[i][j]
            row[j] = clock
            for k in range(1, count + 1):
                total += Fraction((job.w or 0) * (clock + k * job.p), s)
            clock += job.p * count
            if pieces[i][d + position] != clock:
                raise InternalConsistencyError(f"machine {i}: z does not track completed work")
        starts.append(row)
    schedule.start_times = tuple(tuple(row) for row in starts)
    schedule.achieved = total
    schedule.optimum = total
    return schedule


class ScheduleSolver:
    """Runs encoders through the N-fold solver and searches over T."""

    def __init__(self, config: SolverConfig | None = None) -> None:
        self.config = config or SolverConfig()
        self.solver = AugmentationSolver(self.config)

    def _probe(
        self, encode: Callable[[int], EncodedSchedule], T: int, probes: list[tuple[int, bool]]
    ) -> tuple[EncodedSchedule, Sequence[int] | None]:
        encoded = encode(T)
        solution = self.solver.solve(encoded.instance)
        feasible = solution.is_optimal
        probes.append((T, feasible))
        logger.debug("Probe T=%d: %s", T, "feasible" if feasible else "infeasible")
        return encoded, solution.x if feasible else None

    @staticmethod
    def _check_monotone(probes: Sequence[tuple[int, bool]], maximize: bool) -> None:
        feasible = [T for T, ok in probes if ok]
        infeasible = [T for T, ok in probes if not ok]
        for good in feasible:
            for bad in infeasible:
                if (bad < good) if maximize else (bad > good):
                    raise SchedulingError(
                        f"decision probes are not monotone: T={good} feasible, T={bad} not"
                    )

    def _search(
        self,
        variant: Variant,
        encode: Callable[[int], EncodedSchedule],
        lo: int,
        hi: int,
        maximize: bool,
        inst: UniformInstance | UnrelatedInstance,
    ) -> Schedule:
        probes: list[tuple[int, bool]] = []
        anchor = lo if maximize else hi
        best = self._probe(encode, anchor, probes)
        if best[1] is None:
            logger.info("%s: infeasible at T=%d", variant.value, anchor)
            return Schedule(variant, SolveStatus.INFEASIBLE, probes=probes)
        while lo < hi:
            mid = (lo + hi + 1) // 2 if maximize else (lo + hi) // 2
            found = self._probe(encode, mid, probes)
            if found[1] is not None:
                best = found
                if maximize:
                    lo = mid
                else:
                    hi = mid
            elif maximize:
                hi = mid - 1
            else:
                lo = mid + 1
        self._check_monotone(probes, maximize)
        encoded, x = best
        assert x is not None and encoded.T == lo
        schedule = decode(encoded, x, inst)
        schedule.probes = probes
        logger.info("%s: optimum T=%d after %d probes", variant.value, lo, len(probes))
        return schedule

    def solve_makespan(self, inst: UniformInstance, variant: Variant) -> Schedule:
        """Binary search over T for the five uniform decision variants."""
        inst.require(variant)
        if not variant.is_uniform_decision:
            raise SchedulingError(f"{variant.value} is not a makespan variant")
        total = inst.total_work

        def encode(T: int) -> EncodedSchedule:
            return encode_decision(inst, variant, T)

        if variant is Variant.CMIN:
            hi = total // min(inst.speeds) + inst.p_max
            return self._search(variant, encode, 0, hi, True, inst)
        lo = ceil_div(total, sum(inst.speeds))
        # some optimal schedule ends by the time the fastest machine alone would
        hi = total if variant is Variant.CMAX_CAPACITY else ceil_div(total, max(inst.speeds))
        if variant is Variant.CMAX_RELEASE:
            hi += max(job.r or 0 for job in inst.types)
        return self._search(variant, encode, lo, max(lo, hi), False, inst)

    def solve_rcmax(self, inst: UnrelatedInstance) -> Schedule:
        hi = sum(n * inst.p_max for n in inst.multiplicities)
        return self._search(Variant.RCMAX, lambda T: encode_rcmax(inst, T), 0, hi, False, inst)

    def solve_qswc(self, inst: UniformInstance) -> Schedule:
        encoded = encode_qswc(inst)
        solution = self.solver.solve(encoded.instance)
        if not solution.is_optimal:
            raise InternalConsistencyError("weighted completion IP is always feasible")
        schedule = decode(encoded, solution.x, inst)
        if Fraction(solution.objective_value, encoded.scale) != schedule.optimum:
            raise InternalConsistencyError(
                f"IP value {solution.objective_value}/{encoded.scale} "
                f"disagrees with recomputed {schedule.optimum}"
            )
        return schedule

    def solve(self, inst: UniformInstance | UnrelatedInstance, variant: Variant) -> Schedule:
        if variant is Variant.RCMAX:
            if not isinstance(inst, UnrelatedInstance):
                raise SchedulingError("rcmax needs an unrelated-machines instance")
            return self.solve_rcmax(inst)
        if not isinstance(inst, UniformInstance):
            raise SchedulingError(f"{variant.value} needs a uniform-machines instance")
        if variant is Variant.QSWC:
            return self.solve_qswc(inst)
        return self.solve_makespan(inst, variant)


def solve_makespan(
    inst: UniformInstance, variant: Variant, config: SolverConfig | None = None
) -> Schedule:
    return ScheduleSolver(config).solve_makespan(inst, variant)


def solve_schedule(
    inst: UniformInstance | UnrelatedInstance,
    variant: Variant,
    config: SolverConfig | None = None,
) -> Schedule:
    """Optimal schedule for any supported variant."""
    return ScheduleSolver(config).solve(inst, variant)
