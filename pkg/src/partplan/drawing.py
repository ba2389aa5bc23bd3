"""Crossing parities of a convex (circular) straight-line drawing.

Vertices sit on a circle in ``cyclic_order``; two vertex-disjoint chords cross
exactly when their endpoints alternate around the circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Edge, EdgeSubset, Graph, GraphError, independent_pairs


@dataclass(frozen=True)
class ConvexDrawing:
    cyclic_order: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.cyclic_order) != list(range(len(self.cyclic_order))):
            raise GraphError("cyclic order must be a permutation of 0..n-1")
        object.__setattr__(
            self, "_position", {v: i for i, v in enumerate(self.cyclic_order)}
        )

    @classmethod
    def identity(cls, n: int) -> ConvexDrawing:
        return cls(tuple(range(n)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> ConvexDrawing:
        return cls(tuple(int(v) for v in order))

    def position(self, v: int) -> int:
        return self._position[v]  # type: ignore[attr-defined]


def convex_parity(d: ConvexDrawing, e: Edge, f: Edge) -> int:
    """1 if the chords ``e`` and ``f`` cross in ``d``, else 0."""
    a, b = e
    c, x = f
    if len({a, b, c, x}) != 4:
        raise GraphError(f"edges {e} and {f} are not independent")
    pa, pb = sorted((d.position(a), d.position(b)))
    inside = (pa < d.position(c) < pb) + (pa < d.position(x) < pb)
    return inside & 1


CrossingParityTable = dict[tuple[int, int], int]


def parity_table(g: Graph, f: EdgeSubset, d: ConvexDrawing) -> CrossingParityTable:
    """Crossing parity of every independent pair with at least one edge in ``f``."""
    if len(d.cyclic_order) != g.vertex_count:
        raise GraphError(
            f"drawing covers {len(d.cyclic_order)} vertices, graph has {g.vertex_count}"
        )
    pos = [0] * g.vertex_count
    for i, v in enumerate(d.cyclic_order):
        pos[v] = i
    table: CrossingParityTable = {}
    for i, j in independent_pairs(g, f):
        a, b = g.edges[i]
        pa, pb = pos[a], pos[b]
        if pa > pb:
            pa, pb = pb, pa
        c, x = g.edges[j]
        table[(i, j)] = ((pa < pos[c] < pb) + (pa < pos[x] < pb)) & 1
    return table
