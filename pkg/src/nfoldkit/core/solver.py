"""Augmentation solver for N-fold integer programs.

Phase one builds an auxiliary instance with slack columns that absorb the
residual of the clamped origin and drives the slacks to zero. Phase two
repeatedly applies the best λ-scaled step found by a dynamic program over
bricks, for λ in powers of two, until no step improves the objective.

A step y for scale λ is searched among all y with 𝒜y = 0, ||y||₁ ≤ g₁ and
ℓ ≤ x + λy ≤ u. Each brick first enumerates its local kernel moves
(B⁽ⁱ⁾y⁽ⁱ⁾ = 0) grouped by their top contribution A⁽ⁱ⁾y⁽ⁱ⁾; the brick-level
DP then combines one move per brick so the top contributions cancel.
"""

from __future__ import annotations

import concurrent.futures
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .arithmetic import checked, is_saturated, l1_norm, saturating_mul
from .graver import IntractableError, InternalConsistencyError, nfold_graver_bound
from .models import (
    Brick,
    IntMatrix,
    NFoldInstance,
    Objective,
    Solution,
    SolverConfig,
    SolveStatus,
)
from .nfold import box_width, check_feasible, evaluate_objective
from .partition import nfold_partition_params

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class StepCandidate:
    """One local kernel move of a brick at the active λ."""

    brick: int
    y: Vector
    sigma: Vector
    gain: int
    l1: int


@dataclass
class AugmentationState:
    """Progress of the augmentation loop."""

    x: Vector
    objective: int
    lambdas: tuple[int, ...]
    g1: int
    iterations: int = 0
    history: list[tuple[int, int]] = field(default_factory=list)


def lambda_schedule(instance: NFoldInstance) -> tuple[int, ...]:
    """1, 2, 4, … up to 2^⌈log₂ max(1, ||u − ℓ||∞)⌉."""
    width = max(1, box_width(instance))
    return tuple(2**k for k in range((width - 1).bit_length() + 1))


def norm_cap(instance: NFoldInstance) -> int:
    """g₁ = min(partitioned N-fold bound, Σ t_i · ||u − ℓ||∞), at least 1."""
    p_A, S_A, p_B = nfold_partition_params(instance)
    partitioned = nfold_graver_bound(S_A, p_A, p_B, instance.delta)
    fallback = saturating_mul(instance.num_variables, box_width(instance))
    cap = min(partitioned, fallback)
    if is_saturated(partitioned):
        logger.debug("Partitioned N-fold bound saturated, using box fallback %d", fallback)
    return max(cap, 1)


def _slack_rows(brick: Brick) -> dict[int, int | None]:
    """Columns outside A touching at most one row of B, mapped to that row."""
    slack_row: dict[int, int | None] = {}
    for j in range(brick.width):
        if any(brick.A.column(j)):
            continue
        rows = [k for k, v in enumerate(brick.B.column(j)) if v]
        if len(rows) <= 1:
            slack_row[j] = rows[0] if rows else None
    return slack_row


def _column_order(brick: Brick) -> list[int]:
    """Process order: structural columns in place, each single-row slack
    column right after the last structural column touching its row."""
    B = brick.B
    slack_row = _slack_rows(brick)
    heads = [j for j in range(brick.width) if j not in slack_row]
    last_touch = [-1] * B.rows
    for position, j in enumerate(heads):
        for k in range(B.rows):
            if B[k, j]:
                last_touch[k] = position

    def closes_at(j: int) -> int:
        row = slack_row[j]
        return -1 if row is None else last_touch[row]

    order = [j for j in slack_row if closes_at(j) == -1]
    for position, j in enumerate(heads):
        order.append(j)
        order.extend(s for s in slack_row if closes_at(s) == position)
    return order


def _coefficient_window(
    coefficient: int, partial: int, reach: tuple[int, int]
) -> tuple[int, int]:
    """Deltas δ with reach[0] ≤ -(partial + coefficient·δ) ≤ reach[1].

    A row whose remaining reach is (0, 0) pins δ to a single value or
    leaves the window empty.
    """
    upper = -reach[0] - partial
    lower = -reach[1] - partial
    if coefficient > 0:
        return -(-lower // coefficient), upper // coefficient
    return -(-upper // coefficient), lower // coefficient


States = dict[tuple[Vector, Vector, int], tuple[int, Vector]]


class _BrickSearch:
    """Enumerates the local kernel moves of one brick, deduplicated by top contribution.

    Columns are taken in ``_column_order``. The run of single-row slack
    columns that closes a row is handled as one step: its best split for
    every row total is tabulated once, and each state looks up the total
    that cancels its partial row sum.
    """

    def __init__(
        self,
        index: int,
        brick: Brick,
        lows: Sequence[int],
        highs: Sequence[int],
        gains: Sequence[Sequence[int]],
        g1: int | None,
        budget: int,
    ) -> None:
        self.index = index
        self.brick = brick
        self.lows = lows
        self.highs = highs
        self.gains = gains
        self.g1 = g1
        self.budget = budget
        self.order = _column_order(brick)
        self.transitions = 0

    def _reach(self) -> list[list[tuple[int, int]]]:
        """reach[q][k]: interval of Σ B[k, j] δ_j over the columns order[q:]."""
        B = self.brick.B
        reach = [[(0, 0)] * B.rows for _ in range(len(self.order) + 1)]
        for q in range(len(self.order) - 1, -1, -1):
            j = self.order[q]
            for k in range(B.rows):
                coefficient = B[k, j]
                a, b = coefficient * self.lows[j], coefficient * self.highs[j]
                lo, hi = reach[q + 1][k]
                reach[q][k] = (lo + min(a, b), hi + max(a, b))
        return reach

    def _steps(self) -> list[tuple[int, list[int], int | None]]:
        """(start position, columns, closed row) per step; row is None for single columns."""
        slack = _slack_rows(self.brick)
        last_touch = [-1] * self.brick.B.rows
        for q, j in enumerate(self.order):
            for k in range(self.brick.B.rows):
                if self.brick.B[k, j]:
                    last_touch[k] = q
        steps: list[tuple[int, list[int], int | None]] = []
        q = 0
        while q < len(self.order):
            row = slack.get(self.order[q])
            end = q
            if row is not None:
                while end + 1 < len(self.order) and slack.get(self.order[end + 1]) == row:
                    end += 1
            if row is not None and end == last_touch[row]:
                steps.append((q, list(self.order[q : end + 1]), row))
            else:
                end = q
                steps.append((q, [self.order[q]], None))
            q = end + 1
        return steps

    def _count(self) -> None:
        self.transitions += 1
        if self.transitions > self.budget:
            raise IntractableError(
                f"brick {self.index}: step search exceeded {self.budget} transitions"
            )

    @staticmethod
    def _keep(following: States, key: tuple[Vector, Vector, int], gain: int, y: Vector) -> None:
        best = following.get(key)
        if best is None or gain > best[0] or (gain == best[0] and y < best[1]):
            following[key] = (gain, y)

    def _column_step(self, states: States, j: int, bounds: Sequence[tuple[int, int]]) -> States:
        a_col = self.brick.A.column(j)
        b_col = self.brick.B.column(j)
        low = self.lows[j]
        gain_row = self.gains[j]
        binding = self.g1 is not None
        touched = [(k, c) for k, c in enumerate(b_col) if c]
        following: States = {}
        for (a_part, b_part, used), (gain, y) in states.items():
            first, last = low, self.highs[j]
            if binding:
                spare = self.g1 - used  # type: ignore[operator]
                first, last = max(first, -spare), min(last, spare)
            for k, c in touched:
                window = _coefficient_window(c, b_part[k], bounds[k])
                first, last = max(first, window[0]), min(last, window[1])
            for delta in range(first, last + 1):
                self._count()
                new_b = tuple(v + c * delta for v, c in zip(b_part, b_col))
                new_a = (
                    tuple(v + c * delta for v, c in zip(a_part, a_col)) if delta else a_part
                )
                new_y = y[:j] + (delta,) + y[j + 1 :] if delta else y
                key = (new_a, new_b, used + abs(delta) if binding else 0)
                self._keep(following, key, gain + gain_row[delta - low], new_y)
        return following

    def _closing_table(
        self, columns: Sequence[int], row: int
    ) -> dict[int, list[tuple[int, int, Vector]]]:
        """Row total -> [(l1, gain, deltas)], best split per (total, l1)."""
        binding = self.g1 is not None
        table: dict[tuple[int, int], tuple[int, Vector]] = {(0, 0): (0, ())}
        for j in columns:
            coefficient = self.brick.B[row, j]
            low = self.lows[j]
            following: dict[tuple[int, int], tuple[int, Vector]] = {}
            for (total, l1), (gain, deltas) in table.items():
                for delta in range(low, self.highs[j] + 1):
                    self._count()
                    new_l1 = l1 + abs(delta) if binding else 0
                    if binding and new_l1 > self.g1:  # type: ignore[operator]
                        continue
                    key = (total + coefficient * delta, new_l1)
                    value = (gain + self.gains[j][delta - low], (*deltas, delta))
                    best = following.get(key)
                    if best is None or value[0] > best[0] or (
                        value[0] == best[0] and value[1] < best[1]
                    ):
                        following[key] = value
            table = following
        by_total: dict[int, list[tuple[int, int, Vector]]] = {}
        for (total, l1), (gain, deltas) in sorted(table.items()):
            by_total.setdefault(total, []).append((l1, gain, deltas))
        return by_total

    def _closing_step(self, states: States, columns: Sequence[int], row: int) -> States:
        table = self._closing_table(columns, row)
        binding = self.g1 is not None
        following: States = {}
        for (a_part, b_part, used), (gain, y) in states.items():
            for l1, extra, deltas in table.get(-b_part[row], ()):
                self._count()
                if binding and used + l1 > self.g1:  # type: ignore[operator]
                    continue
                new_y = list(y)
                for j, delta in zip(columns, deltas):
                    new_y[j] = delta
                new_b = b_part[:row] + (0,) + b_part[row + 1 :]
                key = (a_part, new_b, used + l1 if binding else 0)
                self._keep(following, key, gain + extra, tuple(new_y))
        return following

    def run(self) -> tuple[list[StepCandidate], int]:
        A, B = self.brick.A, self.brick.B
        reach = self._reach()
        states: States = {((0,) * A.rows, (0,) * B.rows, 0): (0, (0,) * self.brick.width)}
        for start, columns, row in self._steps():
            if row is None:
                states = self._column_step(states, columns[0], reach[start + 1])
            else:
                states = self._closing_step(states, columns, row)

        binding = self.g1 is not None
        candidates = [
            StepCandidate(self.index, y, a_part, gain, used if binding else l1_norm(y))
            for (a_part, _, used), (gain, y) in states.items()
        ]
        candidates.sort(key=lambda candidate: candidate.y)
        return candidates, self.transitions


class AugmentationSolver:
    """Two-phase augmentation solver."""

    def __init__(
        self,
        config: SolverConfig | None = None,
        log_steps: bool = False,
        step_callback: Callable[[AugmentationState], None] | None = None,
    ) -> None:
        self.config = config or SolverConfig()
        self.log_steps = log_steps
        self.step_callback = step_callback

    # Step search

    def _box(
        self, instance: NFoldInstance, x: Sequence[int], lam: int
    ) -> tuple[list[int], list[int]]:
        lows = [-((x_j - lo) // lam) for x_j, lo in zip(x, instance.lower, strict=True)]
        highs = [(hi - x_j) // lam for x_j, hi in zip(x, instance.upper, strict=True)]
        return lows, highs

    @staticmethod
    def _gain_table(
        objective: Objective, x: Sequence[int], lam: int, lows: Sequence[int], highs: Sequence[int]
    ) -> list[list[int]]:
        table = []
        for j, (x_j, lo, hi) in enumerate(zip(x, lows, highs, strict=True)):
            here = objective.term(j, x_j)
            table.append([objective.term(j, x_j + lam * d) - here for d in range(lo, hi + 1)])
        return table

    def brick_candidates(
        self, instance: NFoldInstance, x: Sequence[int], lam: int, g1: int
    ) -> list[list[StepCandidate]]:
        """Local kernel moves per brick, each list sorted lexicographically by y."""
        lows, highs = self._box(instance, x, lam)
        gains = self._gain_table(instance.objective, x, lam, lows, highs)
        reach_l1 = sum(max(-lo, hi) for lo, hi in zip(lows, highs, strict=True))
        binding_cap = g1 if g1 < reach_l1 else None
        searches = []
        for index, brick in enumerate(instance.bricks):
            part = instance.brick_slice(index)
            searches.append(
                _BrickSearch(
                    index,
                    brick,
                    lows[part],
                    highs[part],
                    gains[part],
                    binding_cap,
                    self.config.enumeration_budget,
                )
            )

        workers = min(self.config.max_workers, len(searches))
        if workers > 1:
            with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(_BrickSearch.run, searches))
        else:
            results = [search.run() for search in searches]

        transitions = sum(count for _, count in results)
        logger.debug(
            "λ=%d: %s candidates per brick, %d transitions, cap %s",
            lam,
            [len(found) for found, _ in results],
            transitions,
            "binding" if binding_cap is not None else "free",
        )
        return [found for found, _ in results]

    def best_step(
        self, instance: NFoldInstance, x: Sequence[int], lam: int, g1: int
    ) -> tuple[Vector, int] | None:
        """Exact best (y, gain) for scale ``lam``, or None when nothing improves."""
        if lam < 1 or g1 < 1:
            raise ValueError("best_step needs lam >= 1 and g1 >= 1")
        per_brick = self.brick_candidates(instance, x, lam, g1)
        lows, highs = self._box(instance, x, lam)
        binding = g1 < sum(max(-lo, hi) for lo, hi in zip(lows, highs, strict=True))

        r = instance.r
        limit = instance.delta * g1
        # suffix_reach[i][k]: interval of Σ_{b >= i} σ_k over the remaining bricks
        suffix_reach = [[(0, 0)] * r for _ in range(instance.n + 1)]
        for i in range(instance.n - 1, -1, -1):
            for k in range(r):
                values = [candidate.sigma[k] for candidate in per_brick[i]]
                lo, hi = suffix_reach[i + 1][k]
                suffix_reach[i][k] = (lo + min(values), hi + max(values))

        transitions = 0
        budget = self.config.enumeration_budget
        states: dict[tuple[Vector, int], tuple[int, tuple[int, ...]]] = {
            ((0,) * r, 0): (0, ())
        }
        for i, candidates in enumerate(per_brick):
            bounds = suffix_reach[i + 1]
            following: dict[tuple[Vector, int], tuple[int, tuple[int, ...]]] = {}
            for (top, used), (gain, ranks) in states.items():
                for rank, candidate in enumerate(candidates):
                    transitions += 1
                    if transitions > budget:
                        raise IntractableError(
                            f"brick DP exceeded {budget} transitions at λ={lam}"
                        )
                    new_used = used + candidate.l1 if binding else 0
                    if new_used > g1:
                        continue
                    new_top = tuple(a + b for a, b in zip(top, candidate.sigma))
                    if any(abs(v) > limit for v in new_top):
                        continue
                    if any(not lo <= -v <= hi for v, (lo, hi) in zip(new_top, bounds)):
                        continue
                    key = (new_top, new_used)
                    new_gain = gain + candidate.gain
                    new_ranks = (*ranks, rank)
                    best = following.get(key)
                    if best is None or new_gain > best[0] or (
                        new_gain == best[0] and new_ranks < best[1]
                    ):
                        following[key] = (new_gain, new_ranks)
            states = following

        best_gain = 0
        best_ranks: tuple[int, ...] | None = None
        for (top, _), (gain, ranks) in states.items():
            if any(top):
                continue
            if gain > best_gain or (
                gain == best_gain and best_ranks is not None and ranks < best_ranks
            ):
                best_gain, best_ranks = gain, ranks
        if best_ranks is None:
            return None
        y = tuple(
            v for i, rank in enumerate(best_ranks) for v in per_brick[i][rank].y
        )
        return y, checked(best_gain)

    # Augmentation loop

    def _score(self, instance: NFoldInstance, x: Sequence[int]) -> int:
        """Objective in the maximisation sense."""
        value = evaluate_objective(instance, x)
        return value if instance.objective.is_linear else -value

    def augment_to_optimal(self, instance: NFoldInstance, x0: Sequence[int]) -> Solution:
        """Apply best λ-scaled steps until none improves."""
        x = tuple(x0)
        if not check_feasible(instance, x):
            raise InternalConsistencyError("augmentation started from an infeasible point")
        state = AugmentationState(
            x=x,
            objective=self._score(instance, x),
            lambdas=lambda_schedule(instance),
            g1=norm_cap(instance),
        )
        if instance.objective.is_zero or box_width(instance) == 0:
            return self._finish(instance, state)
        logger.debug("Augmenting with g1=%d, λ ∈ %s", state.g1, list(state.lambdas))

        while True:
            chosen: tuple[int, Vector, int] | None = None
            for lam in state.lambdas:
                found = self.best_step(instance, state.x, lam, state.g1)
                if found is not None and (chosen is None or found[1] > chosen[2]):
                    chosen = (lam, found[0], found[1])
            if chosen is None:
                return self._finish(instance, state)
            lam, y, gain = chosen
            self._apply(instance, state, lam, y, gain)

    def _apply(
        self, instance: NFoldInstance, state: AugmentationState, lam: int, y: Vector, gain: int
    ) -> None:
        if l1_norm(y) > state.g1:
            raise InternalConsistencyError(f"step norm {l1_norm(y)} exceeds cap {state.g1}")
        x = tuple(checked(a + lam * b) for a, b in zip(state.x, y, strict=True))
        if not check_feasible(instance, x):
            raise InternalConsistencyError(f"step λ={lam}, y={y} left the feasible region")
        objective = self._score(instance, x)
        if objective != state.objective + gain or gain <= 0:
            raise InternalConsistencyError(
                f"step gain {gain} does not match objective change "
                f"{objective - state.objective}"
            )
        state.x = x
        state.objective = objective
        state.iterations += 1
        state.history.append((lam, gain))
        level = logging.INFO if self.log_steps else logging.DEBUG
        logger.log(
            level,
            "Step %d: λ=%d, gain %d, objective %d",
            state.iterations,
            lam,
            gain,
            objective,
        )
        if self.step_callback:
            self.step_callback(state)

    def _finish(self, instance: NFoldInstance, state: AugmentationState) -> Solution:
        return Solution(
            status=SolveStatus.OPTIMAL,
            x=state.x,
            objective_value=evaluate_objective(instance, state.x),
            iterations=state.iterations,
        )

    # Feasibility phase

    def initial_feasible(self, instance: NFoldInstance) -> Vector | None:
        """A feasible point, or None when the instance has none."""
        return self._initial_feasible(instance)[0]

    def _initial_feasible(self, instance: NFoldInstance) -> tuple[Vector | None, int]:
        start = tuple(
            min(max(0, lo), hi) for lo, hi in zip(instance.lower, instance.upper, strict=True)
        )
        auxiliary = build_auxiliary(instance, start)
        if auxiliary is None:
            logger.info("Clamped origin is feasible; skipping feasibility phase")
            return start, 0
        aux_instance, aux_start, extract = auxiliary
        logger.info(
            "Feasibility phase: %d auxiliary slack columns",
            aux_instance.num_variables - instance.num_variables,
        )
        result = self.augment_to_optimal(aux_instance, aux_start)
        if result.objective_value != 0:
            logger.info("Feasibility phase left slack %d; infeasible", -result.objective_value)
            return None, result.iterations
        x = extract(result.x)
        if not check_feasible(instance, x):
            raise InternalConsistencyError("auxiliary optimum does not project to a feasible point")
        return x, result.iterations

    def solve(self, instance: NFoldInstance) -> Solution:
        """Feasibility phase, then augmentation to optimality."""
        x0, feasibility_iterations = self._initial_feasible(instance)
        if x0 is None:
            return Solution(status=SolveStatus.INFEASIBLE, iterations=feasibility_iterations)
        logger.info("Optimisation phase from objective %d", evaluate_objective(instance, x0))
        result = self.augment_to_optimal(instance, x0)
        logger.info(
            "Optimal objective %d after %d steps", result.objective_value, result.iterations
        )
        return Solution(
            status=result.status,
            x=result.x,
            objective_value=result.objective_value,
            iterations=result.iterations + feasibility_iterations,
        )


def _sign(value: int) -> int:
    return -1 if value < 0 else 1


def build_auxiliary(
    instance: NFoldInstance, start: Vector
) -> tuple[NFoldInstance, Vector, Callable[[Sequence[int]], Vector]] | None:
    """Slack-extended instance that is trivially feasible at (start, |ρ|).

    Brick 0 gains r top slack columns in front; every brick gains s_i local
    slack columns at its end. Returns None when ρ = 0.
    """
    pieces = instance.split(start)
    top = [b for b in instance.b_top]
    for brick, piece in zip(instance.bricks, pieces, strict=True):
        for k, value in enumerate(brick.A.matvec(piece)):
            top[k] = checked(top[k] - value)
    local = [
        [checked(b - v) for b, v in zip(brick.b_local, brick.B.matvec(piece), strict=True)]
        for brick, piece in zip(instance.bricks, pieces, strict=True)
    ]
    if not any(top) and not any(any(rho) for rho in local):
        return None

    r = instance.r
    bricks = []
    aux_start: list[int] = []
    for index, (brick, piece, rho) in enumerate(zip(instance.bricks, pieces, local, strict=True)):
        s = brick.local_rows
        lead = r if index == 0 else 0
        A_rows = []
        for k, row in enumerate(brick.A.iter_rows()):
            prefix = [_sign(top[k]) if lead and k == m else 0 for m in range(lead)]
            A_rows.append(prefix + list(row) + [0] * s)
        B_rows = []
        for k, row in enumerate(brick.B.iter_rows()):
            suffix = [_sign(rho[k]) if k == m else 0 for m in range(s)]
            B_rows.append([0] * lead + list(row) + suffix)
        top_slack = [abs(v) for v in top] if lead else []
        local_slack = [abs(v) for v in rho]
        width = lead + brick.width + s
        bricks.append(
            Brick(
                A=IntMatrix.from_rows(A_rows, width) if A_rows else IntMatrix(0, width, ()),
                B=IntMatrix.from_rows(B_rows, width) if B_rows else IntMatrix(0, width, ()),
                b_local=brick.b_local,
                lower=(0,) * lead + brick.lower + (0,) * s,
                upper=tuple(top_slack) + brick.upper + tuple(local_slack),
            )
        )
        aux_start.extend(top_slack)
        aux_start.extend(piece)
        aux_start.extend(local_slack)

    c = []
    for index, brick in enumerate(instance.bricks):
        lead = r if index == 0 else 0
        c.extend([-1] * lead + [0] * brick.width + [-1] * brick.local_rows)
    aux = NFoldInstance(tuple(bricks), instance.b_top, Objective.linear(c))

    def extract(aux_x: Sequence[int]) -> Vector:
        values: list[int] = []
        for index, piece in enumerate(aux.split(aux_x)):
            lead = r if index == 0 else 0
            values.extend(piece[lead : lead + instance.bricks[index].width])
        return tuple(values)

    return aux, tuple(aux_start), extract


def initial_feasible(instance: NFoldInstance, config: SolverConfig | None = None) -> Vector | None:
    return AugmentationSolver(config).initial_feasible(instance)


def best_step(
    instance: NFoldInstance,
    x: Sequence[int],
    lam: int,
    g1: int,
    config: SolverConfig | None = None,
) -> tuple[Vector, int] | None:
    return AugmentationSolver(config).best_step(instance, x, lam, g1)


def augment_to_optimal(
    instance: NFoldInstance, x0: Sequence[int], config: SolverConfig | None = None
) -> Solution:
    return AugmentationSolver(config).augment_to_optimal(instance, x0)


def solve(
    instance: NFoldInstance, config: SolverConfig | None = None, log_steps: bool = False
) -> Solution:
    """Solve an N-fold IP exactly."""
    return AugmentationSolver(config, log_steps=log_steps).solve(instance)
