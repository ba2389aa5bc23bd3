"""Decide whether a graph can be drawn with a chosen edge subset crossing-free."""

__version__ = "0.1.0"

from .decider import Decision, build_system, decide, verify_certificate  # noqa: E402
from .graph import EdgeSubset, Graph, bridge_decomposition, build_graph, independent_pairs  # noqa: E402
from .oracle import OracleSizeError, oracle_decide  # noqa: E402

__all__ = [
    "Decision",
    "EdgeSubset",
    "Graph",
    "OracleSizeError",
    "bridge_decomposition",
    "build_graph",
    "build_system",
    "decide",
    "independent_pairs",
    "oracle_decide",
    "verify_certificate",
]
