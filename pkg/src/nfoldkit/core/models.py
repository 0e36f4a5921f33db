"""Data models for nfoldkit."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, field_validator

from .arithmetic import NFoldError, checked_dot


class InvalidInstanceError(NFoldError):
    """Raised when an instance violates its structural invariants."""


class ObjectiveKind(str, Enum):
    """Kind of objective carried by an instance."""

    LINEAR_MAX = "linear_max"
    SEP_CONVEX_MIN = "sep_convex_min"


class SolveStatus(str, Enum):
    """Outcome of a solve."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


class SolverConfig(BaseModel):
    """Solver and tooling configuration."""

    model_config = ConfigDict(
        str_strip_whitespace=True,
        validate_assignment=True,
        extra="forbid",
    )

    # Enumeration budgets
    enumeration_budget: int = 2_000_000
    graver_budget: int = 2_000_000

    # Oracle limits
    oracle_volume_limit: int = 10_000_000
    oracle_max_jobs: int = 6
    oracle_max_machines: int = 3

    # Parallel brick enumeration
    max_workers: int = 1

    # Logging
    logs_dir: Path = Path("logs")
    log_to_file: bool = False

    @field_validator(
        "enumeration_budget",
        "graver_budget",
        "oracle_volume_limit",
        "oracle_max_jobs",
        "oracle_max_machines",
    )
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("budgets and limits must be positive")
        return value

    @field_validator("max_workers")
    @classmethod
    def _clamp_workers(cls, value: int) -> int:
        return min(max(value, 1), 8)

    def ensure_directories(self) -> None:
        """Create the log directory when file logging is on."""
        if self.log_to_file:
            self.logs_dir.mkdir(parents=True, exist_ok=True)


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major matrix of exact integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InvalidInstanceError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise InvalidInstanceError(
                f"matrix has {len(self.entries)} entries, "
                f"expected {self.rows}×{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build a matrix from nested rows; ``cols`` is required when empty."""
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if cols is not None and cols != width:
            raise InvalidInstanceError(f"expected {cols} columns, got {width}")
        for index, row in enumerate(rows):
            if len(row) != width:
                raise InvalidInstanceError(
                    f"row {index} has {len(row)} entries, expected {width}"
                )
        return cls(len(rows), width, tuple(int(v) for row in rows for v in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def iter_rows(self) -> Iterator[tuple[int, ...]]:
        for i in range(self.rows):
            yield self.row(i)

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.iter_rows()]

    def support(self, i: int) -> frozenset[int]:
        """Column indices of the non-zero entries of row ``i``."""
        return frozenset(j for j, v in enumerate(self.row(i)) if v)

    @property
    def delta(self) -> int:
        """Largest absolute entry (0 for an empty matrix)."""
        return max((abs(v) for v in self.entries), default=0)

    def matvec(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise InvalidInstanceError(
                f"vector has {len(vector)} entries, matrix has {self.cols} columns"
            )
        return tuple(checked_dot(row, vector) for row in self.iter_rows())

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise InvalidInstanceError("hstack needs equal row counts")
        entries: list[int] = []
        for left, right in zip(self.iter_rows(), other.iter_rows(), strict=True):
            entries.extend(left)
            entries.extend(right)
        return IntMatrix(self.rows, self.cols + other.cols, tuple(entries))


@dataclass(frozen=True)
class Objective:
    """Linear maximisation or separable convex quadratic minimisation."""

    kind: ObjectiveKind
    c: tuple[int, ...] = ()
    a: tuple[int, ...] = ()
    b: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind is ObjectiveKind.LINEAR_MAX:
            if self.a or self.b:
                raise InvalidInstanceError("linear objective takes only c")
        else:
            if self.c:
                raise InvalidInstanceError("convex objective takes only a and b")
            if len(self.a) != len(self.b):
                raise InvalidInstanceError("convex objective needs len(a) == len(b)")
            if any(v < 0 for v in self.a):
                raise InvalidInstanceError("convex objective needs a_j >= 0")

    @classmethod
    def linear(cls, c: Sequence[int]) -> Objective:
        return cls(ObjectiveKind.LINEAR_MAX, c=tuple(c))

    @classmethod
    def convex(cls, a: Sequence[int], b: Sequence[int]) -> Objective:
        return cls(ObjectiveKind.SEP_CONVEX_MIN, a=tuple(a), b=tuple(b))

    @property
    def is_linear(self) -> bool:
        return self.kind is ObjectiveKind.LINEAR_MAX

    @property
    def dimension(self) -> int:
        return len(self.c) if self.is_linear else len(self.a)

    @property
    def is_zero(self) -> bool:
        values = self.c if self.is_linear else self.a + self.b
        return not any(values)

    def term(self, j: int, value: int) -> int:
        """Contribution of variable ``j`` in the maximisation sense."""
        if self.is_linear:
            return self.c[j] * value
        return -(self.a[j] * value * value + self.b[j] * value)


@dataclass(frozen=True)
class Brick:
    """One column block of an N-fold instance."""

    A: IntMatrix
    B: IntMatrix
    b_local: tuple[int, ...]
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.A.cols

    @property
    def local_rows(self) -> int:
        return self.B.rows


@dataclass(frozen=True)
class NFoldInstance:
    """An N-fold integer program with finite variable bounds."""

    bricks: tuple[Brick, ...]
    b_top: tuple[int, ...]
    objective: Objective
    offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.bricks:
            raise InvalidInstanceError("instance needs at least one brick")
        r = len(self.b_top)
        offsets = []
        position = 0
        for index, brick in enumerate(self.bricks):
            where = f"brick {index}"
            if brick.width < 1:
                raise InvalidInstanceError(f"{where}: brick has no columns")
            if brick.A.rows != r:
                raise InvalidInstanceError(
                    f"{where}: A has {brick.A.rows} rows, b_top has {r}"
                )
            if brick.B.cols != brick.A.cols:
                raise InvalidInstanceError(f"{where}: A and B widths differ")
            if len(brick.b_local) != brick.B.rows:
                raise InvalidInstanceError(f"{where}: b_local length != rows of B")
            if len(brick.lower) != brick.width or len(brick.upper) != brick.width:
                raise InvalidInstanceError(f"{where}: bounds length != brick width")
            for j, (lo, hi) in enumerate(zip(brick.lower, brick.upper, strict=True)):
                if lo > hi:
                    raise InvalidInstanceError(f"{where}: lower > upper at column {j}")
            offsets.append(position)
            position += brick.width
        if self.objective.dimension != position:
            raise InvalidInstanceError(
                f"objective covers {self.objective.dimension} variables, "
                f"instance has {position}"
            )
        object.__setattr__(self, "offsets", tuple(offsets))

    @property
    def n(self) -> int:
        return len(self.bricks)

    @property
    def r(self) -> int:
        return len(self.b_top)

    @property
    def num_variables(self) -> int:
        return self.offsets[-1] + self.bricks[-1].width

    @property
    def lower(self) -> tuple[int, ...]:
        return tuple(v for brick in self.bricks for v in brick.lower)

    @property
    def upper(self) -> tuple[int, ...]:
        return tuple(v for brick in self.bricks for v in brick.upper)

    @property
    def delta(self) -> int:
        """Largest absolute entry of the assembled constraint matrix."""
        return max(max(brick.A.delta, brick.B.delta) for brick in self.bricks)

    def brick_slice(self, index: int) -> slice:
        start = self.offsets[index]
        return slice(start, start + self.bricks[index].width)

    def split(self, x: Sequence[int]) -> list[tuple[int, ...]]:
        """Cut a full vector into per-brick pieces."""
        if len(x) != self.num_variables:
            raise InvalidInstanceError(
                f"vector has {len(x)} entries, instance has {self.num_variables}"
            )
        return [tuple(x[self.brick_slice(i)]) for i in range(self.n)]


@dataclass(frozen=True)
class Solution:
    """Result of a solve."""

    status: SolveStatus
    x: tuple[int, ...] = ()
    objective_value: int = 0
    iterations: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL

    def to_dict(self) -> dict[str, object]:
        """Convert to a JSON-serialisable dictionary."""
        if not self.is_optimal:
            return {
                "status": self.status.value,
                "x": None,
                "objective": None,
                "iterations": self.iterations,
            }
        return {
            "status": self.status.value,
            "x": list(self.x),
            "objective": self.objective_value,
            "iterations": self.iterations,
        }


class NFoldParameters(BaseModel):
    """Parameter row of an N-fold formulation."""

    model_config = ConfigDict(extra="forbid")

    r: int
    s: int
    t: int
    delta: int
    n: int
    p_A: int
    p_B: int
    S_A: int
    L: float | None = None
