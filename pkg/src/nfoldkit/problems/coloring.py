"""Minimum Sum Coloring through the twin-class type graph.

Vertices u, v are twins when N(u) ∖ {v} = N(v) ∖ {u}. Twin classes are
either cliques or independent sets, and two classes are either completely
joined or not joined at all, so the quotient (the type graph) carries the
whole instance. The N-fold encoding has one brick per color.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from ..core.graver import InternalConsistencyError
from ..core.models import (
    Brick,
    IntMatrix,
    InvalidInstanceError,
    NFoldInstance,
    Objective,
    SolverConfig,
)
from ..core.solver import AugmentationSolver

logger = logging.getLogger(__name__)


class ClassKind(str, Enum):
    """Internal structure of a twin class."""

    CLIQUE = "clique"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class TypeGraph:
    """Weighted quotient graph; edges are sorted pairs (i, j) with i ≤ j, loops allowed."""

    weights: tuple[int, ...]
    kinds: tuple[ClassKind, ...]
    edges: tuple[tuple[int, int], ...]
    classes: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if not self.weights:
            raise InvalidInstanceError("type graph needs at least one type")
        if len(self.kinds) != len(self.weights):
            raise InvalidInstanceError("one kind per type is required")
        if any(w < 1 for w in self.weights):
            raise InvalidInstanceError("type weights must be positive")
        for i, j in self.edges:
            if not 0 <= i <= j < self.k:
                raise InvalidInstanceError(f"type edge ({i}, {j}) is out of range")
        if len(set(self.edges)) != len(self.edges):
            raise InvalidInstanceError("type edges must be distinct")
        if self.classes is not None and [len(c) for c in self.classes] != list(self.weights):
            raise InvalidInstanceError("class sizes must match the weights")

    @property
    def k(self) -> int:
        return len(self.weights)

    @property
    def vertex_count(self) -> int:
        return sum(self.weights)

    def to_dict(self) -> dict[str, object]:
        return {
            "weights": list(self.weights),
            "kinds": [kind.value for kind in self.kinds],
            "edges": [list(edge) for edge in self.edges],
            "classes": [list(c) for c in self.classes] if self.classes else None,
        }


@dataclass(frozen=True)
class ColoringSolution:
    """Color counts per type (colors start at 1) and the color sum."""

    type_colors: tuple[dict[int, int], ...]
    total: int
    vertex_colors: tuple[int, ...] | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "total": self.total,
            "type_colors": [
                {str(color): count for color, count in sorted(colors.items())}
                for colors in self.type_colors
            ],
            "vertex_colors": list(self.vertex_colors) if self.vertex_colors else None,
        }


def to_graph(adjacency: Sequence[Sequence[int]] | nx.Graph) -> nx.Graph:
    """Validate adjacency lists (or a graph on 0..n−1) and return a networkx graph."""
    if isinstance(adjacency, nx.Graph):
        if sorted(adjacency.nodes) != list(range(adjacency.number_of_nodes())):
            raise InvalidInstanceError("graph vertices must be 0..n-1")
        if nx.number_of_selfloops(adjacency):
            raise InvalidInstanceError("graph must be simple")
        return nx.Graph(adjacency)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(adjacency)))
    for u, neighbors in enumerate(adjacency):
        for v in neighbors:
            if not 0 <= v < len(adjacency):
                raise InvalidInstanceError(f"vertex {u} lists unknown neighbour {v}")
            if v == u:
                raise InvalidInstanceError(f"vertex {u} has a self-loop")
            if u not in adjacency[v]:
                raise InvalidInstanceError(f"edge {u}-{v} is not listed symmetrically")
            graph.add_edge(u, v)
    return graph


def are_twins(graph: nx.Graph, u: int, v: int) -> bool:
    return set(graph[u]) - {v} == set(graph[v]) - {u}


def graph_to_typegraph(adjacency: Sequence[Sequence[int]] | nx.Graph) -> TypeGraph:
    """Twin classes in order of their smallest vertex, with kinds and type edges."""
    graph = to_graph(adjacency)
    if graph.number_of_nodes() == 0:
        raise InvalidInstanceError("graph needs at least one vertex")
    classes: list[list[int]] = []
    for v in sorted(graph.nodes):
        for members in classes:
            if are_twins(graph, members[0], v):
                members.append(v)
                break
        else:
            classes.append([v])

    kinds = []
    for members in classes:
        joined = len(members) >= 2 and graph.has_edge(members[0], members[1])
        kinds.append(ClassKind.CLIQUE if joined else ClassKind.INDEPENDENT)

    edges = []
    for i, first in enumerate(classes):
        if kinds[i] is ClassKind.CLIQUE:
            edges.append((i, i))
        for j in range(i + 1, len(classes)):
            if graph.has_edge(first[0], classes[j][0]):
                edges.append((i, j))
    logger.debug("Twin reduction: %d vertices -> %d types", graph.number_of_nodes(), len(classes))
    return TypeGraph(
        weights=tuple(len(members) for members in classes),
        kinds=tuple(kinds),
        edges=tuple(edges),
        classes=tuple(tuple(members) for members in classes),
    )


def verify_twins(adjacency: Sequence[Sequence[int]] | nx.Graph, type_graph: TypeGraph) -> bool:
    """Pairwise check: same class iff twins."""
    graph = to_graph(adjacency)
    if type_graph.classes is None:
        return False
    label = {v: i for i, members in enumerate(type_graph.classes) for v in members}
    if sorted(label) != sorted(graph.nodes):
        return False
    vertices = sorted(graph.nodes)
    for a, u in enumerate(vertices):
        for v in vertices[a + 1 :]:
            if (label[u] == label[v]) != are_twins(graph, u, v):
                return False
    return True


def encode_mscol(type_graph: TypeGraph, vertex_count: int | None = None) -> NFoldInstance:
    """One brick per color α = 1..|V|; columns x_i^α then one slack per type edge.

    Edge rows read x_i^α + x_j^α + σ = 1; a loop reads x_i^α + σ = 1. The
    global rows fix Σ_α x_i^α to |V_i| for clique types and to 1 for
    independent ones, which then take all |V_i| vertices in one color.
    """
    count = type_graph.vertex_count if vertex_count is None else vertex_count
    if count < 1:
        raise InvalidInstanceError("vertex count must be positive")
    k = type_graph.k
    edges = type_graph.edges
    width = k + len(edges)
    A_rows = [[int(col == i) for col in range(width)] for i in range(k)]
    B_rows = []
    for e, (i, j) in enumerate(edges):
        row = [0] * width
        row[i] = 1
        row[j] = 1
        row[k + e] = 1
        B_rows.append(row)
    A = IntMatrix.from_rows(A_rows, width)
    B = IntMatrix.from_rows(B_rows, width) if B_rows else IntMatrix(0, width, ())
    brick_bounds = ((0,) * width, (1,) * width)

    cost = [
        1 if kind is ClassKind.CLIQUE else weight
        for kind, weight in zip(type_graph.kinds, type_graph.weights, strict=True)
    ]
    bricks = []
    c: list[int] = []
    for alpha in range(1, count + 1):
        bricks.append(Brick(A, B, (1,) * len(edges), *brick_bounds))
        c.extend([-alpha * cost_i for cost_i in cost] + [0] * len(edges))
    b_top = tuple(
        weight if kind is ClassKind.CLIQUE else 1
        for kind, weight in zip(type_graph.kinds, type_graph.weights, strict=True)
    )
    return NFoldInstance(tuple(bricks), b_top, Objective.linear(c))


def decode_mscol(
    type_graph: TypeGraph,
    instance: NFoldInstance,
    x: Sequence[int],
    graph: nx.Graph | None = None,
) -> ColoringSolution:
    """Color counts per type; with the raw graph, a verified vertex coloring."""
    k = type_graph.k
    type_colors: list[dict[int, int]] = [{} for _ in range(k)]
    for alpha, piece in enumerate(instance.split(x), start=1):
        for i in range(k):
            if piece[i]:
                size = type_graph.weights[i]
                type_colors[i][alpha] = 1 if type_graph.kinds[i] is ClassKind.CLIQUE else size
    for i, colors in enumerate(type_colors):
        if sum(colors.values()) != type_graph.weights[i]:
            raise InternalConsistencyError(f"type {i}: color counts do not cover the class")
    total = sum(color * n for colors in type_colors for color, n in colors.items())

    vertex_colors = None
    if graph is not None:
        if type_graph.classes is None:
            raise InternalConsistencyError("vertex coloring needs the twin classes")
        assignment = [0] * graph.number_of_nodes()
        for members, colors in zip(type_graph.classes, type_colors, strict=True):
            palette = [color for color, n in sorted(colors.items()) for _ in range(n)]
            for v, color in zip(members, palette, strict=True):
                assignment[v] = color
        for u, v in graph.edges:
            if assignment[u] == assignment[v]:
                raise InternalConsistencyError(f"edge {u}-{v} is monochromatic")
        vertex_colors = tuple(assignment)
    return ColoringSolution(tuple(type_colors), total, vertex_colors)


def solve_mscol(
    source: Sequence[Sequence[int]] | nx.Graph | TypeGraph,
    config: SolverConfig | None = None,
) -> ColoringSolution:
    """Minimum color sum of a graph (verified) or of a type graph."""
    graph = None
    if isinstance(source, TypeGraph):
        type_graph = source
    else:
        graph = to_graph(source)
        type_graph = graph_to_typegraph(graph)
    instance = encode_mscol(type_graph)
    solution = AugmentationSolver(config).solve(instance)
    if not solution.is_optimal:
        raise InternalConsistencyError("coloring IP is always feasible")
    result = decode_mscol(type_graph, instance, solution.x, graph)
    if result.total != -solution.objective_value:
        raise InternalConsistencyError(
            f"decoded sum {result.total} disagrees with IP value {-solution.objective_value}"
        )
    logger.info("Minimum color sum %d over %d types", result.total, type_graph.k)
    return result
