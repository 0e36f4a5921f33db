"""JSON input documents for instances, matrices, vectors, schedules and graphs.

Integer fields are pydantic strict integers, so floats and booleans
are rejected wherever an integer is expected.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Literal, TypeVar

from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from ..problems.coloring import ClassKind, TypeGraph
from ..problems.scheduling import JobType, UniformInstance, UnrelatedInstance
from ..utils.file_utils import FileReadError, load_json_file
from .arithmetic import NFoldError
from .models import IntMatrix, NFoldInstance, Objective
from .nfold import make_brick

logger = logging.getLogger(__name__)

Row = list[StrictInt]


class InstanceParsingError(NFoldError):
    """Raised when an input file is malformed; the message names the position."""


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ObjectiveDocument(_Document):
    kind: Literal["linear_max", "sep_convex_min"]
    c: Row | None = None
    a: Row | None = None
    b: Row | None = None


class BrickDocument(_Document):
    A: list[Row]
    B: list[Row]
    b_local: Row
    lower: Row
    upper: Row


class InstanceDocument(_Document):
    objective: ObjectiveDocument
    b_top: Row
    bricks: list[BrickDocument]

    def build(self) -> NFoldInstance:
        if self.objective.kind == "linear_max":
            if self.objective.c is None:
                raise ValueError("linear_max objective needs 'c'")
            objective = Objective.linear(self.objective.c)
        else:
            if self.objective.a is None or self.objective.b is None:
                raise ValueError("sep_convex_min objective needs 'a' and 'b'")
            objective = Objective.convex(self.objective.a, self.objective.b)
        bricks = tuple(
            make_brick(brick.A, brick.B, brick.b_local, brick.lower, brick.upper)
            for brick in self.bricks
        )
        return NFoldInstance(bricks, tuple(self.b_top), objective)


class MatrixDocument(_Document):
    matrix: list[Row]

    def build(self) -> IntMatrix:
        return IntMatrix.from_rows(self.matrix)


class VectorsDocument(_Document):
    vectors: list[Row]
    delta: StrictInt | None = None


class JobTypeDocument(_Document):
    p: StrictInt | None = None
    n: StrictInt
    w: StrictInt | None = None
    r: StrictInt | None = None
    d: StrictInt | None = None


class MachineKindsDocument(_Document):
    machines: Row
    times: list[list[StrictInt | None]]


class SchedulingDocument(_Document):
    speeds: Row | None = None
    types: list[JobTypeDocument]
    capacities: Row | None = None
    kinds: MachineKindsDocument | None = None

    def build(self) -> UniformInstance | UnrelatedInstance:
        if self.kinds is not None:
            return UnrelatedInstance(
                machine_kinds=tuple(self.kinds.machines),
                times=tuple(tuple(row) for row in self.kinds.times),
                multiplicities=tuple(job.n for job in self.types),
            )
        if self.speeds is None:
            raise ValueError("uniform instances need 'speeds'")
        types = []
        for j, job in enumerate(self.types):
            if job.p is None:
                raise ValueError(f"type {j} needs a processing time 'p'")
            types.append(JobType(p=job.p, n=job.n, w=job.w, r=job.r, d=job.d))
        capacities = tuple(self.capacities) if self.capacities is not None else None
        return UniformInstance(tuple(self.speeds), tuple(types), capacities)


class GraphDocument(_Document):
    adjacency: list[Row]


class TypeGraphDocument(_Document):
    weights: Row
    kinds: list[Literal["clique", "independent"]]
    edges: list[Row]

    def build(self) -> TypeGraph:
        edges = []
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError(f"edge {edge} must have two endpoints")
            edges.append((min(edge), max(edge)))
        return TypeGraph(
            weights=tuple(self.weights),
            kinds=tuple(ClassKind(kind) for kind in self.kinds),
            edges=tuple(edges),
        )


DocumentT = TypeVar("DocumentT", bound=_Document)


def _location(error: dict[str, Any]) -> str:
    return ".".join(str(part) for part in error["loc"]) or "<root>"


def load_document(path: Path, model: type[DocumentT]) -> DocumentT:
    """Read ``path`` and validate it against ``model``."""
    try:
        data = load_json_file(path)
    except FileReadError as e:
        raise InstanceParsingError(str(e)) from e
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise InstanceParsingError(
            f"{path}: at {_location(first)}: {first['msg']} "
            f"({e.error_count()} error(s) in {model.__name__})"
        ) from e


def _build(path: Path, document: Any) -> Any:
    try:
        return document.build()
    except ValueError as e:
        raise InstanceParsingError(f"{path}: {e}") from e


def load_instance(path: Path) -> NFoldInstance:
    instance: NFoldInstance = _build(path, load_document(path, InstanceDocument))
    logger.debug(f"Loaded {instance.n}-brick instance from {path}")
    return instance


def load_matrix(path: Path) -> IntMatrix:
    matrix: IntMatrix = _build(path, load_document(path, MatrixDocument))
    return matrix


def load_vectors(path: Path) -> VectorsDocument:
    return load_document(path, VectorsDocument)


def load_scheduling(path: Path) -> UniformInstance | UnrelatedInstance:
    inst: UniformInstance | UnrelatedInstance = _build(path, load_document(path, SchedulingDocument))
    return inst


def load_graph(path: Path) -> list[list[int]]:
    return load_document(path, GraphDocument).adjacency


def load_typegraph(path: Path) -> TypeGraph:
    type_graph: TypeGraph = _build(path, load_document(path, TypeGraphDocument))
    return type_graph
