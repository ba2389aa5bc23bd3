"""Partial planarity through the GF(2) system of (edge, vertex) moves.

For every independent pair ``uv``/``st`` with ``uv`` in F the system asks

    i_D(uv, st) + x[uv, s] + x[uv, t] + x[st, u] + x[st, v] = 0   (mod 2)

where ``x[e, w] = 1`` means edge ``e`` is pushed over vertex ``w``. The system
is solvable exactly when G can be drawn with every F-edge crossing-free; a
solution is returned as a certificate that makes every F-edge cross each
independent edge evenly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .drawing import ConvexDrawing, parity_table
from .gf2 import EliminationResult, Gf2System, eliminate
from .graph import EdgeSubset, Graph, GraphError, check_subset

Move = tuple[int, int]  # (edge index, vertex)


@dataclass(frozen=True)
class MoveVariableIndex:
    """Column numbering of the move variables ``x[e, v]`` with ``v`` not on ``e``.

    Ordered lexicographically by ``(e, v)``; edge ``e`` owns the block
    ``[e*(n-2), (e+1)*(n-2))``.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def for_graph(cls, g: Graph) -> MoveVariableIndex:
        return cls(g.vertex_count, g.edges)

    @property
    def block(self) -> int:
        return max(self.vertex_count - 2, 0)

    def __len__(self) -> int:
        return len(self.edges) * self.block

    def index(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a or v == b:
            raise GraphError(f"vertex {v} is an endpoint of edge {e}")
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range")
        return e * self.block + v - (v > a) - (v > b)

    def pair(self, index: int) -> Move:
        e, r = divmod(index, self.block)
        a, b = self.edges[e]
        v = r
        for endpoint in (a, b):  # a < b
            if v >= endpoint:
                v += 1
        return e, v


@dataclass(frozen=True)
class DecisionStats:
    num_equations: int
    num_variables_used: int
    rank: int
    elapsed_seconds: float


@dataclass(frozen=True)
class Decision:
    answer: bool
    certificate: frozenset[Move] | None
    stats: DecisionStats
    order: tuple[int, ...] = field(default=())

    @property
    def label(self) -> str:
        return "YES" if self.answer else "NO"


def build_system(g: Graph, f: EdgeSubset, d: ConvexDrawing) -> Gf2System:
    """One equation per unordered independent pair with at least one F-edge."""
    check_subset(g, f)
    index = MoveVariableIndex.for_graph(g)
    rows = []
    for (i, j), parity in parity_table(g, f, d).items():
        u, v = g.edges[i]
        s, t = g.edges[j]
        support = frozenset(
            (index.index(i, s), index.index(i, t), index.index(j, u), index.index(j, v))
        )
        rows.append((support, parity))
    return Gf2System(len(index), tuple(rows))


def decide(g: Graph, f: EdgeSubset, order: Sequence[int] | None = None) -> Decision:
    """Can G be drawn with every edge of F free of crossings?

    ``order`` is the cyclic vertex order of the initial convex drawing; the
    answer does not depend on it, the certificate does.
    """
    start = time.perf_counter()
    d = ConvexDrawing.identity(g.vertex_count) if order is None else ConvexDrawing.from_order(order)
    system = build_system(g, f, d)
    result = eliminate(system)
    elapsed = time.perf_counter() - start
    stats = DecisionStats(
        num_equations=len(system.rows),
        num_variables_used=len({v for support, _ in system.rows for v in support}),
        rank=result.rank,
        elapsed_seconds=elapsed,
    )
    certificate = _moves_from_solution(g, result) if result.consistent else None
    return Decision(result.consistent, certificate, stats, d.cyclic_order)


def _moves_from_solution(g: Graph, result: EliminationResult) -> frozenset[Move]:
    index = MoveVariableIndex.for_graph(g)
    assert result.solution is not None
    return frozenset(index.pair(k) for k, bit in enumerate(result.solution) if bit)


def verify_certificate(
    g: Graph, f: EdgeSubset, d: ConvexDrawing, moves: Iterable[Move]
) -> bool:
    """After applying ``moves`` to ``d``, does every F-edge cross each independent edge evenly?"""
    performed: set[Move] = set()
    for move in moves:
        try:
            e, v = move
        except (TypeError, ValueError):
            raise GraphError(f"malformed move {move!r}") from None
        if not 0 <= e < g.m:
            raise GraphError(f"move {move!r}: edge index out of range")
        if not 0 <= v < g.vertex_count or v in g.edges[e]:
            raise GraphError(f"move {move!r}: vertex must be off the edge and in range")
        performed.add((e, v))
    for (i, j), parity in parity_table(g, f, d).items():
        u, v = g.edges[i]
        s, t = g.edges[j]
        total = (
            parity
            + ((i, s) in performed)
            + ((i, t) in performed)
            + ((j, u) in performed)
            + ((j, v) in performed)
        )
        if total & 1:
            return False
    return True
