"""Column-independent row partitions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import networkx as nx

from .models import IntMatrix, InvalidInstanceError

if TYPE_CHECKING:
    from .models import NFoldInstance


@dataclass(frozen=True)
class RowPartition:
    """Partition of a matrix's rows into parts with pairwise disjoint supports."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        """Size of the largest part."""
        return max(len(part) for part in self.parts)

    @property
    def S(self) -> int:  # noqa: N802
        """Number of parts."""
        return len(self.parts)

    def to_dict(self) -> dict[str, object]:
        return {"parts": [list(part) for part in self.parts], "p": self.p, "S": self.S}


def column_independent_partition(M: IntMatrix) -> RowPartition:
    """The finest column-independent partition of the rows of ``M``.

    Parts are the connected components of the graph on rows in which two
    rows are adjacent iff their supports intersect. Parts are ordered by
    their smallest row index and each part is sorted.
    """
    if M.rows < 1:
        raise InvalidInstanceError("partition needs at least one row")
    overlap = nx.Graph()
    overlap.add_nodes_from(range(M.rows))
    last_row_in_column: dict[int, int] = {}
    for i in range(M.rows):
        for j in M.support(i):
            if j in last_row_in_column:
                overlap.add_edge(last_row_in_column[j], i)
            last_row_in_column[j] = i
    parts = sorted(tuple(sorted(rows)) for rows in nx.connected_components(overlap))
    return RowPartition(tuple(parts))


def top_band(instance: NFoldInstance) -> IntMatrix:
    """Horizontal concatenation (A⁽¹⁾ … A⁽ⁿ⁾)."""
    band = instance.bricks[0].A
    for brick in instance.bricks[1:]:
        band = band.hstack(brick.A)
    return band


def nfold_partition_params(instance: NFoldInstance) -> tuple[int, int, int]:
    """(p_A, S_A, p_B) from the finest partitions of the top band and of each B⁽ⁱ⁾.

    An instance without top rows reports p_A = S_A = 1; p_B is 1 when no
    brick has local rows.
    """
    if instance.r:
        band = column_independent_partition(top_band(instance))
        p_A, S_A = band.p, band.S
    else:
        p_A, S_A = 1, 1
    p_B = max(
        (
            column_independent_partition(brick.B).p
            for brick in instance.bricks
            if brick.local_rows
        ),
        default=1,
    )
    return p_A, S_A, p_B
