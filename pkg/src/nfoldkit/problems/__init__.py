"""Scheduling and coloring problems encoded as N-fold IPs."""

from .coloring import TypeGraph, graph_to_typegraph, solve_mscol
from .scheduling import UniformInstance, UnrelatedInstance, Variant, solve_schedule

__all__ = [
    "TypeGraph",
    "UniformInstance",
    "UnrelatedInstance",
    "Variant",
    "graph_to_typegraph",
    "solve_mscol",
    "solve_schedule",
]
