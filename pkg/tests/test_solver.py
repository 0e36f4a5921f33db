"""Tests for the augmentation solver."""

import logging
import random

import pytest

from nfoldkit.core.graver import IntractableError, InternalConsistencyError, graver_basis
from nfoldkit.core.models import NFoldInstance, Objective, SolverConfig, SolveStatus
from nfoldkit.core.nfold import assemble, check_feasible, evaluate_objective, make_brick
from nfoldkit.core.solver import (
    AugmentationSolver,
    _coefficient_window,
    augment_to_optimal,
    best_step,
    build_auxiliary,
    initial_feasible,
    lambda_schedule,
    norm_cap,
    solve,
)
from nfoldkit.oracle import oracle_ip_solve
from tests.factories import random_nfold


@pytest.fixture
def exchange_instance():
    """Two one-variable bricks with x1 + x2 = 6, bounds [0, 5] and c = (1, 3)."""
    brick = make_brick([[1]], [], [], [0], [5])
    return NFoldInstance((brick, brick), (6,), Objective.linear([1, 3]))


def pair_instance(total: int, upper: int) -> NFoldInstance:
    """One brick with x1 + x2 = total, bounds [0, upper] and c = (1, 2)."""
    brick = make_brick([[1, 1]], [], [], [0, 0], [upper, upper])
    return NFoldInstance((brick,), (total,), Objective.linear([1, 2]))


def score(instance: NFoldInstance, x) -> int:
    value = evaluate_objective(instance, x)
    return value if instance.objective.is_linear else -value


class TestSchedule:
    """Test the step scale schedule and the norm cap."""

    def test_lambda_schedule(self, exchange_instance):
        """Test powers of two up to the box width."""
        assert lambda_schedule(exchange_instance) == (1, 2, 4, 8)

    def test_lambda_schedule_single_point(self):
        """Test that a zero-width box still tries λ = 1."""
        brick = make_brick([], [], [], [2], [2])
        assert lambda_schedule(NFoldInstance((brick,), (), Objective.linear([1]))) == (1,)

    def test_norm_cap_uses_fallback(self, exchange_instance):
        """Test min(21, 2 · 5)."""
        assert norm_cap(exchange_instance) == 10


class TestBestStep:
    """Test the exact best step for one scale."""

    def test_unit_exchange(self, exchange_instance):
        """Test the best step under a tight norm cap."""
        assert best_step(exchange_instance, (5, 1), 1, 2) == ((-1, 1), 2)

    def test_full_exchange(self, exchange_instance):
        """Test that a wider cap allows the whole move at once."""
        assert best_step(exchange_instance, (5, 1), 1, 10) == ((-4, 4), 8)

    def test_optimal_point(self, exchange_instance):
        """Test that no step improves the optimum."""
        assert best_step(exchange_instance, (1, 5), 1, 10) is None

    def test_scaled_step(self, exchange_instance):
        """Test λ = 2 from (5, 1)."""
        y, gain = best_step(exchange_instance, (5, 1), 2, 10)
        assert y == (-2, 2)
        assert gain == 8

    def test_invalid_arguments(self, exchange_instance):
        """Test that λ and g1 must be positive."""
        with pytest.raises(ValueError):
            best_step(exchange_instance, (5, 1), 0, 2)
        with pytest.raises(ValueError):
            best_step(exchange_instance, (5, 1), 1, 0)

    def test_budget(self, exchange_instance):
        """Test that a tiny enumeration budget is refused."""
        with pytest.raises(IntractableError):
            best_step(exchange_instance, (5, 1), 1, 10, SolverConfig(enumeration_budget=1))

    @pytest.mark.parametrize(
        ("coefficient", "partial", "reach", "expected"),
        [
            (2, 1, (-3, 3), (-2, 1)),
            (-1, 2, (0, 0), (2, 2)),
            (-3, 2, (0, 0), (1, 0)),
        ],
    )
    def test_coefficient_window(self, coefficient, partial, reach, expected):
        """Test the deltas a row with limited reach admits."""
        assert _coefficient_window(coefficient, partial, reach) == expected

    def test_closing_slacks_split(self):
        """Test a row closed by two slack columns with different costs."""
        brick = make_brick([[1, 0, 0]], [[1, 1, 1]], [4], [0, 0, 0], [4, 3, 3])
        instance = NFoldInstance((brick, brick), (4,), Objective.linear([3, 0, 1, 3, 0, 1]))
        solution = solve(instance)
        assert solution.is_optimal
        assert solution.objective_value == 16
        assert solution.objective_value == oracle_ip_solve(instance).objective_value

    @pytest.mark.parametrize("seed", range(40))
    def test_dominates_graver_steps(self, seed):
        """Test that the best step gains at least as much as every feasible Graver element."""
        rng = random.Random(seed)
        instance = random_nfold(
            rng, n=rng.randint(1, 2), r=1, s=rng.randint(0, 1), t=2, convex=seed % 2 == 1
        )
        try:
            basis = graver_basis(assemble(instance), budget=200_000)
        except IntractableError:
            pytest.skip("enumeration too large for this sample")
        x = initial_feasible(instance)
        assert x is not None
        found = best_step(instance, x, 1, norm_cap(instance))
        best_gain = found[1] if found else 0
        for g in basis:
            moved = [a + b for a, b in zip(x, g)]
            if all(lo <= v <= hi for v, lo, hi in zip(moved, instance.lower, instance.upper)):
                assert best_gain >= score(instance, moved) - score(instance, x)


class TestAugmentation:
    """Test the augmentation loop."""

    def test_reaches_optimum(self, exchange_instance):
        """Test (5, 1) → (1, 5)."""
        solution = augment_to_optimal(exchange_instance, (5, 1))
        assert solution.status is SolveStatus.OPTIMAL
        assert solution.x == (1, 5)
        assert solution.objective_value == 16
        assert solution.iterations >= 1

    def test_single_point_box(self):
        """Test that a fixed box finishes without steps."""
        brick = make_brick([[1]], [], [], [3], [3])
        instance = NFoldInstance((brick,), (3,), Objective.linear([5]))
        solution = augment_to_optimal(instance, (3,))
        assert (solution.x, solution.objective_value, solution.iterations) == ((3,), 15, 0)

    def test_infeasible_start(self, exchange_instance):
        """Test that an infeasible start is an internal error."""
        with pytest.raises(InternalConsistencyError):
            augment_to_optimal(exchange_instance, (5, 5))

    def test_step_callback(self, exchange_instance):
        """Test that the callback sees every accepted step."""
        seen = []
        solver = AugmentationSolver(step_callback=lambda state: seen.append(state.objective))
        solution = solver.augment_to_optimal(exchange_instance, (5, 1))
        assert len(seen) == solution.iterations
        assert seen == sorted(seen)
        assert seen[-1] == 16

    def test_log_steps(self, exchange_instance, caplog):
        """Test that step logging goes to INFO when requested."""
        with caplog.at_level(logging.INFO, logger="nfoldkit.core.solver"):
            AugmentationSolver(log_steps=True).augment_to_optimal(exchange_instance, (5, 1))
        assert "Step 1" in caplog.text


class TestFeasibilityPhase:
    """Test the auxiliary slack construction."""

    def test_clamped_origin_feasible(self):
        """Test that no auxiliary instance is built when 0 already works."""
        instance = pair_instance(0, 5)
        assert build_auxiliary(instance, (0, 0)) is None
        assert initial_feasible(instance) == (0, 0)

    def test_auxiliary_start_is_feasible(self):
        """Test the trivially feasible auxiliary start."""
        instance = pair_instance(4, 5)
        aux, start, extract = build_auxiliary(instance, (0, 0))
        assert check_feasible(aux, start)
        assert extract(start) == (0, 0)

    def test_finds_feasible_point(self):
        """Test a point with x1 + x2 = 4."""
        x = initial_feasible(pair_instance(4, 5))
        assert x is not None
        assert sum(x) == 4

    def test_infeasible(self):
        """Test that a target above the box maximum is infeasible."""
        assert initial_feasible(pair_instance(7, 3)) is None


class TestSolve:
    """Test the two-phase pipeline."""

    def test_pair_instance(self):
        """Test the optimum (0, 4) with objective 8."""
        solution = solve(pair_instance(4, 5))
        assert solution.status is SolveStatus.OPTIMAL
        assert solution.x == (0, 4)
        assert solution.objective_value == 8

    def test_infeasible(self):
        """Test the infeasible status."""
        solution = solve(pair_instance(7, 3))
        assert solution.status is SolveStatus.INFEASIBLE
        assert solution.to_dict()["x"] is None

    def test_convex(self):
        """Test minimisation of Σ x² over x1 + x2 = 4."""
        brick = make_brick([[1, 1]], [], [], [0, 0], [5, 5])
        instance = NFoldInstance((brick,), (4,), Objective.convex([1, 1], [0, 0]))
        solution = solve(instance)
        assert solution.x == (2, 2)
        assert solution.objective_value == 8

    def test_deterministic(self):
        """Test that identical input gives an identical solution."""
        instance = random_nfold(random.Random(11), n=3, r=2, s=1, t=2)
        assert solve(instance) == solve(instance)

    def test_parallel_workers(self):
        """Test that threaded brick enumeration gives the same answer."""
        instance = random_nfold(random.Random(5), n=3, r=1, s=1, t=2)
        assert solve(instance, SolverConfig(max_workers=3)) == solve(instance)

    @pytest.mark.parametrize("seed", range(200))
    def test_matches_oracle(self, seed):
        """Test the optimum against exhaustive enumeration."""
        rng = random.Random(seed)
        instance = random_nfold(
            rng,
            n=rng.randint(1, 3),
            r=rng.randint(0, 2),
            s=rng.randint(0, 2),
            t=rng.randint(1, 3),
            convex=seed % 3 == 0,
            feasible_hint=seed % 5 != 0,
        )
        expected = oracle_ip_solve(instance)
        try:
            solution = solve(instance)
        except IntractableError:
            pytest.skip("step search too large for this sample")
        assert solution.status is expected.status
        if expected.is_optimal:
            assert solution.objective_value == expected.objective_value
            assert check_feasible(instance, solution.x)
