"""Tests for Graver sets, indecomposability and the norm bounds."""

import itertools
import random

import pytest

from nfoldkit.core.arithmetic import SATURATED, is_conformal, l1_norm
from nfoldkit.core.graver import (
    GraverSet,
    IntractableError,
    InternalConsistencyError,
    circuit_radius,
    classic_nfold_bound,
    conformal_decompose,
    graver_basis,
    is_indecomposable,
    lemma2_bound,
    nfold_graver_bound,
)
from nfoldkit.core.models import IntMatrix, InvalidInstanceError
from nfoldkit.core.nfold import assemble
from nfoldkit.core.partition import column_independent_partition, nfold_partition_params
from nfoldkit.oracle import oracle_graver
from tests.factories import random_matrix, random_nfold

ORACLE_BUDGET = 200_000


def small_cycles(M: IntMatrix, radius: int = 6):
    """Every nonzero kernel vector with ℓ1 norm at most ``radius``."""
    span = range(-radius, radius + 1)
    for y in itertools.product(span, repeat=M.cols):
        if any(y) and l1_norm(y) <= radius and not any(M.matvec(y)):
            yield y


@pytest.fixture
def difference_row():
    """The 1×2 matrix [1, -1]."""
    return IntMatrix.from_rows([[1, -1]])


@pytest.fixture
def sum_row():
    """The 1×3 matrix [1, 1, -1]."""
    return IntMatrix.from_rows([[1, 1, -1]])


class TestBounds:
    """Test the closed-form norm bounds."""

    def test_lemma2_values(self):
        """Test (2pΔ + 1)^p at small arguments."""
        assert lemma2_bound(1, 1) == 3
        assert lemma2_bound(2, 1) == 25
        assert lemma2_bound(1, 0) == 1
        assert lemma2_bound(3, 2) == 13**3

    def test_nfold_values(self):
        """Test S_A · L_B · (2 p_A Δ L_B + 1)^p_A."""
        assert nfold_graver_bound(2, 1, 1, 1) == 42
        assert nfold_graver_bound(1, 1, 1, 0) == 1
        # three job types with p_max = 2
        assert nfold_graver_bound(3, 1, 1, 2) == 3 * 5 * 21

    def test_classic_bound(self):
        """Test the partition-blind reference bound."""
        assert classic_nfold_bound(2, 1, 1) == 3 * 13**2
        assert classic_nfold_bound(0, 0, 1) == nfold_graver_bound(1, 1, 1, 1)

    def test_saturation(self):
        """Test that huge bounds saturate instead of overflowing."""
        assert lemma2_bound(10, 10**6) == SATURATED
        assert nfold_graver_bound(2, 5, 6, 10**3) == SATURATED

    def test_invalid_arguments(self):
        """Test that p < 1 or Δ < 0 is rejected."""
        with pytest.raises(ValueError):
            lemma2_bound(0, 1)
        with pytest.raises(ValueError):
            nfold_graver_bound(1, 1, 1, -1)


class TestIndecomposable:
    """Test the conformal sub-cycle search."""

    def test_primitive_cycle(self, difference_row):
        """Test that (1, 1) has no proper conformal sub-cycle."""
        assert is_indecomposable(difference_row, (1, 1))

    def test_multiple_of_cycle(self, difference_row):
        """Test that (2, 2) splits as (1, 1) + (1, 1)."""
        assert not is_indecomposable(difference_row, (2, 2))

    def test_mixed_signs(self, sum_row):
        """Test an indecomposable cycle with opposite signs."""
        assert is_indecomposable(sum_row, (1, -1, 0))

    def test_rejects_non_cycles(self, sum_row):
        """Test the preconditions."""
        with pytest.raises(InvalidInstanceError):
            is_indecomposable(sum_row, (1, 0, 0))
        with pytest.raises(InvalidInstanceError):
            is_indecomposable(sum_row, (0, 0, 0))

    def test_budget(self, sum_row):
        """Test that the node budget is enforced."""
        with pytest.raises(IntractableError):
            is_indecomposable(sum_row, (5, 5, 10), budget=3)


class TestGraverBasis:
    """Test Graver basis enumeration."""

    def test_identity_has_trivial_kernel(self):
        """Test that the 2×2 identity has no cycles."""
        assert len(graver_basis(IntMatrix.identity(2))) == 0

    def test_difference_row(self, difference_row):
        """Test the basis of [1, -1]."""
        assert graver_basis(difference_row).elements == ((-1, -1), (1, 1))

    def test_sum_row(self, sum_row):
        """Test the basis of [1, 1, -1]."""
        expected = {(1, 0, 1), (0, 1, 1), (1, -1, 0)}
        expected |= {tuple(-v for v in g) for g in expected}
        basis = graver_basis(sum_row)
        assert set(basis) == expected
        assert list(basis.elements) == sorted(expected)
        assert (0, 1, 1) in basis
        assert (0, 2, 2) not in basis

    def test_zero_matrix(self):
        """Test that a zero matrix gives the signed unit vectors."""
        basis = graver_basis(IntMatrix.zeros(1, 2))
        assert set(basis) == {(1, 0), (-1, 0), (0, 1), (0, -1)}

    def test_cap(self):
        """Test that an explicit cap drops longer elements."""
        M = IntMatrix.from_rows([[1, 2]])
        assert set(graver_basis(M)) == {(2, -1), (-2, 1)}
        assert len(graver_basis(M, cap=2)) == 0

    def test_negative_cap(self, difference_row):
        """Test that a negative cap is invalid input."""
        with pytest.raises(InvalidInstanceError, match="non-negative"):
            graver_basis(difference_row, cap=-3)
        assert len(graver_basis(difference_row, cap=0)) == 0

    def test_budget(self):
        """Test that an oversized enumeration is refused."""
        M = IntMatrix.from_rows([[1, 2, 2, 1, 1, 2]])
        with pytest.raises(IntractableError):
            graver_basis(M, budget=10)

    def test_needs_rows(self):
        """Test that empty matrices are rejected."""
        with pytest.raises(InvalidInstanceError):
            graver_basis(IntMatrix(0, 2, ()))

    def test_to_dict(self, difference_row):
        """Test serialisation."""
        document = graver_basis(difference_row).to_dict()
        assert document["elements"] == [[-1, -1], [1, 1]]
        assert document["count"] == 2
        assert document["max_norm"] == 2

    def test_circuit_radius(self, sum_row):
        """Test (n - rank) · largest circuit norm."""
        assert circuit_radius(sum_row, budget=1000) == 2 * 2
        assert circuit_radius(IntMatrix.identity(2), budget=1000) == 0

    @pytest.mark.parametrize("seed", range(100))
    def test_matches_oracle(self, seed):
        """Test set equality with the definition-based oracle, plus the single-matrix bound."""
        rng = random.Random(seed)
        M = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 4))
        try:
            expected = oracle_graver(M, budget=ORACLE_BUDGET)
        except IntractableError:
            pytest.skip("oracle radius too large for this sample")
        basis = graver_basis(M)
        assert set(basis) == set(expected)

        partition = column_independent_partition(M)
        bound = lemma2_bound(partition.p, M.delta)
        assert all(l1_norm(g) <= bound for g in basis)
        assert all(tuple(-v for v in g) in basis for g in basis)
        assert all(not any(M.matvec(g)) and any(g) for g in basis)

    @pytest.mark.parametrize("seed", range(50))
    def test_nfold_bound(self, seed):
        """Test that Graver elements of assembled instances respect the N-fold bound."""
        rng = random.Random(seed)
        instance = random_nfold(
            rng,
            n=rng.randint(1, 2),
            r=rng.randint(1, 2),
            s=rng.randint(0, 2),
            t=rng.randint(1, 2),
        )
        matrix = assemble(instance)
        try:
            basis = graver_basis(matrix, budget=ORACLE_BUDGET)
        except IntractableError:
            pytest.skip("enumeration too large for this sample")
        p_A, S_A, p_B = nfold_partition_params(instance)
        bound = nfold_graver_bound(S_A, p_A, p_B, instance.delta)
        assert all(l1_norm(g) <= bound for g in basis)
        try:
            assert set(basis) == set(oracle_graver(matrix, budget=ORACLE_BUDGET))
        except IntractableError:
            pass


class TestConformalDecompose:
    """Test decomposition of cycles into conformal Graver elements."""

    def test_zero(self, difference_row):
        """Test that the zero vector decomposes into nothing."""
        assert conformal_decompose(difference_row, (0, 0), graver_basis(difference_row)) == []

    def test_repeated_element(self, difference_row):
        """Test (3, 3) = 3 · (1, 1)."""
        pieces = conformal_decompose(difference_row, (3, 3), graver_basis(difference_row))
        assert pieces == [(1, 1)] * 3

    def test_mixed_pieces(self, sum_row):
        """Test a decomposition that uses two different elements."""
        y = (2, 1, 3)
        pieces = conformal_decompose(sum_row, y, graver_basis(sum_row))
        assert all(is_conformal(g, y) for g in pieces)
        assert tuple(map(sum, zip(*pieces))) == y

    def test_incomplete_set(self, sum_row):
        """Test that a wrong Graver set is detected."""
        broken = GraverSet(sum_row, ((1, -1, 0), (-1, 1, 0)), 3)
        with pytest.raises(InternalConsistencyError):
            conformal_decompose(sum_row, (1, 0, 1), broken)

    def test_rejects_non_cycles(self, sum_row):
        """Test that vectors outside the kernel are rejected."""
        with pytest.raises(InvalidInstanceError):
            conformal_decompose(sum_row, (1, 0, 0), graver_basis(sum_row))

    @pytest.mark.parametrize("seed", range(20))
    def test_positive_sum_property(self, seed):
        """Test every short cycle of random matrices against its decomposition."""
        rng = random.Random(1000 + seed)
        M = random_matrix(rng, rng.randint(1, 2), 3)
        try:
            basis = graver_basis(M, budget=ORACLE_BUDGET)
        except IntractableError:
            pytest.skip("enumeration too large for this sample")
        for y in small_cycles(M):
            pieces = conformal_decompose(M, y, basis)
            assert all(is_conformal(g, y) and g in basis for g in pieces)
            assert tuple(sum(column) for column in zip(*pieces)) == y
            assert is_indecomposable(M, y) == (y in basis)
