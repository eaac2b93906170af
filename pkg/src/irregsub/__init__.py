"""Highly irregular spanning subgraphs of regular multigraphs."""
from .cubic import CubicState, classify, decompose, solve_cubic
from .errors import GraphError, InternalInvariant
from .general import solve_general
from .irregularity import a_scaled, b_scaled, is_improvement
from .multigraph import CubicOpRecord, Multigraph, SpanningSubgraph, build, regularity
from .oracle import oracle_best, oracle_state_exists
from .strength import verify_distinct, weighting_from_subgraph

__all__ = [
    "CubicOpRecord",
    "CubicState",
    "GraphError",
    "InternalInvariant",
    "Multigraph",
    "SpanningSubgraph",
    "a_scaled",
    "b_scaled",
    "build",
    "classify",
    "decompose",
    "is_improvement",
    "oracle_best",
    "oracle_state_exists",
    "regularity",
    "solve_cubic",
    "solve_general",
    "verify_distinct",
    "weighting_from_subgraph",
]
