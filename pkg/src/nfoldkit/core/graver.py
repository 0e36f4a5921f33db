"""Graver bases of small matrices and the ℓ1 bounds that cap them.

``graver_basis`` parametrises the rational kernel through a reduced row
echelon form, enumerates the integer kernel points inside an ℓ1 ball and
keeps the ⊑-minimal ones. Processing candidates in increasing ℓ1 order
and rejecting any candidate that dominates an already accepted element
is the indecomposability test: a cycle y has a proper conformal sub-cycle
iff it has a Graver element conformal to it, and every such element has
strictly smaller norm.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from sympy import Matrix

from .arithmetic import (
    NFoldError,
    SATURATED,
    is_conformal,
    is_saturated,
    l1_norm,
    saturating_add,
    saturating_mul,
    saturating_pow,
)
from .models import IntMatrix, InvalidInstanceError
from .partition import column_independent_partition

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]


class IntractableError(NFoldError):
    """Raised when an enumeration would exceed its budget."""


class InternalConsistencyError(NFoldError):
    """Raised when a result contradicts an internal invariant."""


@dataclass(frozen=True)
class GraverSet:
    """Indecomposable cycles of ``matrix`` with ℓ1 norm at most ``norm_cap``."""

    matrix: IntMatrix
    elements: tuple[Vector, ...]
    norm_cap: int

    def __contains__(self, vector: object) -> bool:
        return vector in self._lookup

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _lookup(self) -> frozenset[Vector]:
        return frozenset(self.elements)

    @property
    def max_norm(self) -> int:
        return max((l1_norm(g) for g in self.elements), default=0)

    def to_dict(self) -> dict[str, object]:
        return {
            "elements": [list(g) for g in self.elements],
            "count": len(self.elements),
            "norm_cap": self.norm_cap,
            "max_norm": self.max_norm,
        }


def lemma2_bound(p: int, delta: int) -> int:
    """(2pΔ + 1)^p, saturating."""
    if p < 1 or delta < 0:
        raise ValueError("lemma2_bound needs p >= 1 and delta >= 0")
    base = saturating_add(saturating_mul(2 * p, delta), 1)
    return saturating_pow(base, p)


def nfold_graver_bound(S_A: int, p_A: int, p_B: int, delta: int) -> int:  # noqa: N803
    """S_A · L_B · (2 p_A Δ L_B + 1)^{p_A} with L_B = (2 p_B Δ + 1)^{p_B}, saturating."""
    if min(S_A, p_A, p_B) < 1 or delta < 0:
        raise ValueError("nfold_graver_bound needs S_A, p_A, p_B >= 1 and delta >= 0")
    L_B = lemma2_bound(p_B, delta)
    if is_saturated(L_B):
        return SATURATED
    inner = saturating_add(saturating_mul(saturating_mul(2 * p_A, delta), L_B), 1)
    power = saturating_pow(inner, p_A)
    return saturating_mul(saturating_mul(S_A, L_B), power)


def classic_nfold_bound(r: int, s: int, delta: int) -> int:
    """Partition-blind reference bound: one top part of r rows, brick parts of s rows."""
    return nfold_graver_bound(1, max(r, 1), max(s, 1), delta)


def is_indecomposable(M: IntMatrix, y: Sequence[int], budget: int | None = None) -> bool:
    """True iff no cycle z ∉ {0, y} with z ⊑ y exists.

    Depth-first search over the conformal box of ``y`` with interval
    pruning on the partial products of each row.
    """
    y = tuple(y)
    if len(y) != M.cols:
        raise InvalidInstanceError(f"vector has {len(y)} entries, matrix has {M.cols}")
    if not any(y):
        raise InvalidInstanceError("is_indecomposable needs a nonzero cycle")
    if any(M.matvec(y)):
        raise InvalidInstanceError("vector is not in the kernel")

    n = M.cols
    # reach[j][i] = (lo, hi) of Σ_{k >= j} M[i, k] z_k over the conformal box
    reach: list[list[tuple[int, int]]] = [[(0, 0)] * M.rows for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        lo_z, hi_z = min(0, y[j]), max(0, y[j])
        for i in range(M.rows):
            a = M[i, j]
            lo, hi = reach[j + 1][i]
            reach[j][i] = (lo + min(a * lo_z, a * hi_z), hi + max(a * lo_z, a * hi_z))

    nodes = 0
    z = [0] * n
    partial = [0] * M.rows

    def search(j: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise IntractableError(f"conformal search exceeded {budget} nodes")
        if j == n:
            if any(partial):
                return False
            return any(z) and tuple(z) != y
        for i in range(M.rows):
            lo, hi = reach[j][i]
            if not lo <= -partial[i] <= hi:
                return False
        step = 1 if y[j] >= 0 else -1
        for value in range(0, y[j] + step, step):
            z[j] = value
            for i in range(M.rows):
                partial[i] += M[i, j] * value
            found = search(j + 1)
            for i in range(M.rows):
                partial[i] -= M[i, j] * value
            if found:
                return True
        z[j] = 0
        return False

    return not search(0)


def _ball_size(dimension: int, radius: int) -> int:
    """Number of integer points with ℓ1 norm at most ``radius`` in Z^dimension."""
    return sum(
        2**k * math.comb(dimension, k) * math.comb(radius, k)
        for k in range(min(dimension, radius) + 1)
    )


def _ball(dimension: int, radius: int) -> Iterator[list[int]]:
    point = [0] * dimension

    def walk(position: int, remaining: int) -> Iterator[list[int]]:
        if position == dimension:
            yield point
            return
        for value in range(-remaining, remaining + 1):
            point[position] = value
            yield from walk(position + 1, remaining - abs(value))
        point[position] = 0

    yield from walk(0, radius)


def _primitive(values: Sequence[object]) -> Vector:
    """Scale a rational sympy vector to the primitive integer vector on its ray."""
    nums = [int(v.p) for v in values]  # type: ignore[attr-defined]
    dens = [int(v.q) for v in values]  # type: ignore[attr-defined]
    scale = math.lcm(*dens)
    ints = [num * (scale // den) for num, den in zip(nums, dens, strict=True)]
    divisor = math.gcd(*ints) or 1
    return tuple(v // divisor for v in ints)


def circuit_radius(M: IntMatrix, budget: int) -> int:
    """(n − rank) · max circuit ℓ1, an upper bound on every Graver element's norm.

    Each Graver element is a conformal combination of at most n − rank
    circuits with coefficients in [0, 1) unless it is a circuit itself.
    """
    sym = Matrix(M.to_rows())
    rank = sym.rank()
    corank = M.cols - rank
    if corank == 0:
        return 0
    largest = 0
    examined = 0
    for size in range(1, rank + 2):
        for subset in combinations(range(M.cols), size):
            examined += 1
            if examined > budget:
                raise IntractableError(f"circuit scan exceeded {budget} column subsets")
            kernel = sym.extract(list(range(M.rows)), list(subset)).nullspace()
            if len(kernel) != 1 or any(v == 0 for v in kernel[0]):
                continue
            largest = max(largest, l1_norm(_primitive(list(kernel[0]))))
    return saturating_mul(corank, largest)


@dataclass(frozen=True)
class _KernelChart:
    """y_pivot[i] = -(Σ_f coeffs[i][f] · y_free[f]) / scale[i]."""

    pivots: tuple[int, ...]
    free: tuple[int, ...]
    coeffs: tuple[tuple[int, ...], ...]
    scale: tuple[int, ...]

    @classmethod
    def of(cls, M: IntMatrix) -> _KernelChart:
        reduced, pivots = Matrix(M.to_rows()).rref()
        free = tuple(j for j in range(M.cols) if j not in pivots)
        coeffs = []
        scale = []
        for i in range(len(pivots)):
            entries = [reduced[i, f] for f in free]
            denominator = math.lcm(*(int(v.q) for v in entries)) if entries else 1
            coeffs.append(tuple(int(v.p) * (denominator // int(v.q)) for v in entries))
            scale.append(denominator)
        return cls(tuple(pivots), free, tuple(coeffs), tuple(scale))

    def lift(self, values: Sequence[int], width: int) -> Vector | None:
        y = [0] * width
        for f, value in zip(self.free, values, strict=True):
            y[f] = value
        for pivot, row, denominator in zip(self.pivots, self.coeffs, self.scale, strict=True):
            total = -sum(c * v for c, v in zip(row, values, strict=True))
            if total % denominator:
                return None
            y[pivot] = total // denominator
        return tuple(y)


def graver_basis(
    M: IntMatrix, cap: int | None = None, budget: int = 2_000_000
) -> GraverSet:
    """All indecomposable cycles of ``M`` with ℓ1 norm within the effective cap.

    The effective cap is the smaller of ``cap``, the single-matrix
    partition bound of the finest column-independent partition and the
    circuit radius. The last two never cut off a Graver element. Elements
    come out in lexicographic order.
    """
    if M.rows < 1 or M.cols < 1:
        raise InvalidInstanceError("graver_basis needs a matrix with rows and columns")
    if cap is not None and cap < 0:
        raise InvalidInstanceError(f"norm cap must be non-negative, got {cap}")
    partition = column_independent_partition(M)
    radius = lemma2_bound(partition.p, M.delta)
    if cap is not None:
        radius = min(radius, cap)
    chart = _KernelChart.of(M)
    if not chart.free:
        logger.debug("Kernel of %d×%d matrix is trivial", M.rows, M.cols)
        return GraverSet(M, (), radius)
    radius = min(radius, circuit_radius(M, budget))

    estimate = _ball_size(len(chart.free), radius)
    logger.debug(
        "Graver enumeration: %d free columns, radius %d, ~%d assignments",
        len(chart.free),
        radius,
        estimate,
    )
    if estimate > budget:
        raise IntractableError(
            f"Graver enumeration needs {estimate} assignments, budget is {budget}"
        )

    cycles = []
    for values in _ball(len(chart.free), radius):
        if not any(values):
            continue
        y = chart.lift(values, M.cols)
        if y is not None and l1_norm(y) <= radius:
            cycles.append(y)
    cycles.sort(key=lambda y: (l1_norm(y), y))

    minimal: list[Vector] = []
    for y in cycles:
        if not any(is_conformal(g, y) for g in minimal):
            minimal.append(y)
    return GraverSet(M, tuple(sorted(minimal)), radius)


def conformal_decompose(M: IntMatrix, y: Sequence[int], G: GraverSet) -> list[Vector]:
    """Split a cycle into Graver elements that are all conformal to it."""
    residual = list(y)
    if len(residual) != M.cols:
        raise InvalidInstanceError(f"vector has {len(residual)} entries, matrix has {M.cols}")
    if any(M.matvec(residual)):
        raise InvalidInstanceError("vector is not in the kernel")
    pieces: list[Vector] = []
    while any(residual):
        for g in G.elements:
            if is_conformal(g, residual):
                break
        else:
            raise InternalConsistencyError(
                f"no Graver element is conformal to residual {residual}"
            )
        pieces.append(g)
        residual = [a - b for a, b in zip(residual, g, strict=True)]
    return pieces
