"""Command-line interface for nfoldkit."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

from . import __version__
from .config import load_config
from .core.arithmetic import ArithmeticOverflowError, linf_norm
from .core.graver import (
    IntractableError,
    InternalConsistencyError,
    classic_nfold_bound,
    graver_basis,
    lemma2_bound,
    nfold_graver_bound,
)
from .core.instance_io import (
    InstanceParsingError,
    load_graph,
    load_instance,
    load_matrix,
    load_scheduling,
    load_typegraph,
    load_vectors,
)
from .core.models import InvalidInstanceError, SolverConfig
from .core.nfold import NotApplicableError, assemble, nfold_parameters
from .core.partition import column_independent_partition, nfold_partition_params
from .core.solver import AugmentationSolver
from .core.steinitz import SteinitzPreconditionError, max_prefix_norm, steinitz_reorder
from .oracle import oracle_coloring, oracle_graver, oracle_ip_solve, oracle_schedule
from .problems.coloring import solve_mscol
from .problems.scheduling import SchedulingError, Variant, format_fraction, solve_schedule
from .utils.logging import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INFEASIBLE = 2
EXIT_INVALID = 3
EXIT_INTRACTABLE = 4

INVALID_INPUT = (
    InvalidInstanceError,
    InstanceParsingError,
    NotApplicableError,
    SteinitzPreconditionError,
    SchedulingError,
)
INTRACTABLE = (ArithmeticOverflowError, IntractableError)

Result = tuple[dict[str, Any], int]


def create_parser() -> argparse.ArgumentParser:
    """Create the command-line argument parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--version", action="version", version=f"nfoldkit {__version__}")

    parser = argparse.ArgumentParser(
        prog="nfoldkit",
        parents=[common],
        description="nfoldkit - exact N-fold integer programming with partition-aware Graver bounds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  nfoldkit solve --instance ip.json             # Solve an N-fold IP
  nfoldkit partition --matrix m.json            # Finest column-independent partition
  nfoldkit bounds --p 2 --delta 1               # Graver l1 bound of a single matrix
  nfoldkit schedule --variant cmax --instance jobs.json
  nfoldkit color --graph graph.json             # Minimum sum coloring

Row, column and vector indices in every output are 0-based.
Exit codes: 0 ok, 2 infeasible, 3 invalid input, 4 overflow or budget exceeded.
        """.strip(),
    )

    parser.add_argument(
        "--config",
        type=Path,
        help="Configuration file path",
        metavar="PATH",
    )

    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level (default: WARNING)",
    )

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    solve = commands.add_parser("solve", parents=[common], help="Solve an N-fold IP exactly")
    solve.add_argument("--instance", type=Path, required=True, metavar="FILE")
    solve.add_argument(
        "--log-steps", action="store_true", help="Log every augmentation step at INFO"
    )

    graver = commands.add_parser("graver", parents=[common], help="Graver basis of a matrix")
    source = graver.add_mutually_exclusive_group(required=True)
    source.add_argument("--matrix", type=Path, metavar="FILE")
    source.add_argument("--instance", type=Path, metavar="FILE", help="Use the assembled matrix")
    graver.add_argument("--cap", type=int, metavar="N", help="Extra l1 cap on elements")

    partition = commands.add_parser(
        "partition", parents=[common], help="Finest column-independent partition"
    )
    source = partition.add_mutually_exclusive_group(required=True)
    source.add_argument("--matrix", type=Path, metavar="FILE")
    source.add_argument("--instance", type=Path, metavar="FILE", help="Report p_A, S_A, p_B")

    bounds = commands.add_parser("bounds", parents=[common], help="Graver norm bounds")
    bounds.add_argument("--p", type=int, help="Largest part size of a single matrix")
    bounds.add_argument("--delta", type=int, help="Largest absolute entry")
    bounds.add_argument("--S", dest="S_A", type=int, help="Number of parts of the top band")
    bounds.add_argument("--pA", dest="p_A", type=int, help="Largest part of the top band")
    bounds.add_argument("--pB", dest="p_B", type=int, help="Largest part over the B blocks")
    bounds.add_argument("--instance", type=Path, metavar="FILE", help="Derive all parameters")

    steinitz = commands.add_parser("steinitz", parents=[common], help="Reorder zero-sum vectors")
    steinitz.add_argument("--vectors", type=Path, required=True, metavar="FILE")
    steinitz.add_argument("--delta", type=int, help="Norm bound (default: from file or data)")

    schedule = commands.add_parser(
        "schedule", parents=[common], help="Solve a high-multiplicity scheduling problem"
    )
    schedule.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    schedule.add_argument("--instance", type=Path, required=True, metavar="FILE")

    color = commands.add_parser("color", parents=[common], help="Minimum sum coloring")
    source = color.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", type=Path, metavar="FILE", help="Adjacency lists")
    source.add_argument("--typegraph", type=Path, metavar="FILE", help="Weighted type graph")

    oracle = commands.add_parser("oracle", parents=[common], help="Brute-force reference values")
    oracle.add_argument("--mode", choices=["ip", "graver", "schedule", "color"], required=True)
    oracle.add_argument("--instance", type=Path, required=True, metavar="FILE")
    oracle.add_argument(
        "--variant", choices=[v.value for v in Variant], help="Scheduling variant (mode schedule)"
    )
    oracle.add_argument(
        "--unrestricted",
        action="store_true",
        help="Let independent twin classes use several colors (mode color)",
    )

    return parser


def _status_code(optimal: bool) -> int:
    return EXIT_OK if optimal else EXIT_INFEASIBLE


def run_solve(args: argparse.Namespace, config: SolverConfig) -> Result:
    instance = load_instance(args.instance)
    solution = AugmentationSolver(config, log_steps=args.log_steps).solve(instance)
    return solution.to_dict(), _status_code(solution.is_optimal)


def run_graver(args: argparse.Namespace, config: SolverConfig) -> Result:
    if args.instance is not None:
        matrix = assemble(load_instance(args.instance))
    else:
        matrix = load_matrix(args.matrix)
    partition = column_independent_partition(matrix)
    basis = graver_basis(matrix, cap=args.cap, budget=config.graver_budget)
    document = basis.to_dict()
    document["lemma2"] = lemma2_bound(partition.p, matrix.delta)
    return document, EXIT_OK


def run_partition(args: argparse.Namespace, config: SolverConfig) -> Result:
    if args.instance is not None:
        p_A, S_A, p_B = nfold_partition_params(load_instance(args.instance))
        return {"p_A": p_A, "S_A": S_A, "p_B": p_B}, EXIT_OK
    return column_independent_partition(load_matrix(args.matrix)).to_dict(), EXIT_OK


def run_bounds(args: argparse.Namespace, config: SolverConfig) -> Result:
    if args.instance is not None:
        instance = load_instance(args.instance)
        params = nfold_parameters(instance)
        delta = params.delta
        return {
            "parameters": params.model_dump(),
            "lemma2_A": lemma2_bound(params.p_A, delta),
            "lemma2_B": [
                lemma2_bound(column_independent_partition(brick.B).p, delta)
                if brick.local_rows
                else None
                for brick in instance.bricks
            ],
            "nfold": nfold_graver_bound(params.S_A, params.p_A, params.p_B, delta),
            "classic": classic_nfold_bound(params.r, params.s, delta),
        }, EXIT_OK

    if args.delta is None:
        raise InvalidInstanceError("bounds needs --delta or --instance")
    document: dict[str, Any] = {}
    if args.p is not None:
        document["lemma2"] = _bound(lemma2_bound, args.p, args.delta)
    nfold_args = (args.S_A, args.p_A, args.p_B)
    if all(value is not None for value in nfold_args):
        document["nfold"] = _bound(nfold_graver_bound, *nfold_args, args.delta)
    elif any(value is not None for value in nfold_args):
        raise InvalidInstanceError("the N-fold bound needs --S, --pA and --pB together")
    if not document:
        raise InvalidInstanceError("bounds needs --p or --S/--pA/--pB")
    return document, EXIT_OK


def _bound(formula: Callable[..., int], *values: int) -> int:
    try:
        return formula(*values)
    except ValueError as e:
        raise InvalidInstanceError(str(e)) from e


def run_steinitz(args: argparse.Namespace, config: SolverConfig) -> Result:
    document = load_vectors(args.vectors)
    vectors = document.vectors
    delta = args.delta if args.delta is not None else document.delta
    if delta is None:
        delta = max((linf_norm(v) for v in vectors), default=0)
    order = steinitz_reorder(vectors, delta)
    m = len(vectors[0]) if vectors else 0
    return {
        "order": order,
        "max_prefix_norm": max_prefix_norm(vectors, order),
        "bound": m * delta,
    }, EXIT_OK


def run_schedule(args: argparse.Namespace, config: SolverConfig) -> Result:
    inst = load_scheduling(args.instance)
    schedule = solve_schedule(inst, Variant(args.variant), config)
    return schedule.to_dict(), _status_code(schedule.is_optimal)


def run_color(args: argparse.Namespace, config: SolverConfig) -> Result:
    source = load_typegraph(args.typegraph) if args.typegraph else load_graph(args.graph)
    return solve_mscol(source, config).to_dict(), EXIT_OK


def run_oracle(args: argparse.Namespace, config: SolverConfig) -> Result:
    if args.mode == "ip":
        solution = oracle_ip_solve(load_instance(args.instance), config.oracle_volume_limit)
        return solution.to_dict(), _status_code(solution.is_optimal)
    if args.mode == "graver":
        return oracle_graver(load_matrix(args.instance), config.graver_budget).to_dict(), EXIT_OK
    if args.mode == "schedule":
        if args.variant is None:
            raise InvalidInstanceError("oracle --mode schedule needs --variant")
        optimum = oracle_schedule(
            load_scheduling(args.instance),
            Variant(args.variant),
            config.oracle_max_jobs,
            config.oracle_max_machines,
        )
        document = {"variant": args.variant, "optimum": format_fraction(optimum)}
        return document, _status_code(optimum is not None)
    total = oracle_coloring(load_graph(args.instance), restricted=not args.unrestricted)
    return {"total": total, "restricted": not args.unrestricted}, EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, SolverConfig], Result]] = {
    "solve": run_solve,
    "graver": run_graver,
    "partition": run_partition,
    "bounds": run_bounds,
    "steinitz": run_steinitz,
    "schedule": run_schedule,
    "color": run_color,
    "oracle": run_oracle,
}


def dispatch(args: argparse.Namespace, config: SolverConfig) -> int:
    """Run one subcommand, print its JSON document and return the exit code."""
    try:
        document, code = COMMANDS[args.command](args, config)
    except INVALID_INPUT as e:
        print(f"Invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except INTRACTABLE as e:
        print(f"Not tractable: {e}", file=sys.stderr)
        return EXIT_INTRACTABLE
    except InternalConsistencyError as e:
        logger.error(f"Internal consistency failure: {e}", exc_info=True)
        return EXIT_INTERNAL
    print(json.dumps(document))
    return code


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI application."""
    parser = create_parser()
    args = parser.parse_args(argv)

    config = load_config(args.config)

    log_level = args.log_level
    if getattr(args, "log_steps", False) and log_level in ("WARNING", "ERROR"):
        log_level = "INFO"

    try:
        setup_logging(
            logs_dir=config.logs_dir,
            log_level=log_level,
            enable_file_logging=config.log_to_file,
        )
    except OSError as e:
        print(f"Failed to set up logging: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    logger.debug(f"nfoldkit v{__version__} running {args.command}")

    try:
        return dispatch(args, config)
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
