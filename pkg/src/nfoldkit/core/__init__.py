"""Core N-fold machinery: models, partitions, Graver sets and the solver."""

from .graver import GraverSet, graver_basis, lemma2_bound, nfold_graver_bound
from .models import Brick, IntMatrix, NFoldInstance, Objective, Solution, SolverConfig, SolveStatus
from .partition import RowPartition, column_independent_partition, nfold_partition_params
from .solver import AugmentationSolver, solve
from .steinitz import steinitz_reorder

__all__ = [
    "AugmentationSolver",
    "Brick",
    "GraverSet",
    "IntMatrix",
    "NFoldInstance",
    "Objective",
    "RowPartition",
    "Solution",
    "SolveStatus",
    "SolverConfig",
    "column_independent_partition",
    "graver_basis",
    "lemma2_bound",
    "nfold_graver_bound",
    "nfold_partition_params",
    "solve",
    "steinitz_reorder",
]
