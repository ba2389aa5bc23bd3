"""Simple undirected graphs with a distinguished edge subset F.

Edges keep the index they were given at construction; everything downstream
(parities, move variables, certificates) refers to edges by that index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for rejected graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class LengthMismatchError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return self.vertex_count

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def incident_edges(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc


@dataclass(frozen=True)
class EdgeSubset:
    member_flags: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.member_flags)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index < len(self.member_flags) and self.member_flags[index]

    def indices(self) -> list[int]:
        return [i for i, flag in enumerate(self.member_flags) if flag]

    @property
    def size(self) -> int:
        return sum(self.member_flags)

    @classmethod
    def full(cls, g: Graph) -> EdgeSubset:
        return cls((True,) * g.m)

    @classmethod
    def empty(cls, g: Graph) -> EdgeSubset:
        return cls((False,) * g.m)

    @classmethod
    def from_indices(cls, g: Graph, indices: Iterable[int]) -> EdgeSubset:
        chosen = set(indices)
        for i in chosen:
            if not 0 <= i < g.m:
                raise GraphError(f"edge index {i} out of range for {g.m} edges")
        return cls(tuple(i in chosen for i in range(g.m)))


def build_graph(
    vertex_count: int,
    edge_list: Sequence[Sequence[int]],
    f_flags: Sequence[bool],
) -> tuple[Graph, EdgeSubset]:
    """Validate raw input and return the graph together with its F subset.

    Edge pairs are stored as ``(min, max)``; edge ``i`` of the result is
    ``edge_list[i]``.
    """
    if vertex_count < 0:
        raise VertexRangeError(f"vertex count must be nonnegative, got {vertex_count}")
    if len(edge_list) != len(f_flags):
        raise LengthMismatchError(
            f"{len(edge_list)} edges but {len(f_flags)} F-flags"
        )
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for i, pair in enumerate(edge_list):
        if len(pair) != 2:
            raise GraphError(f"edge {i}: expected a vertex pair, got {tuple(pair)!r}")
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise VertexRangeError(
                    f"edge {i} ({u}, {v}): vertex {x} outside [0, {vertex_count})"
                )
        if u == v:
            raise SelfLoopError(f"edge {i}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(
                f"edge {i} ({u}, {v}) duplicates edge {seen[key]}"
            )
        seen[key] = i
        edges.append(key)
    return Graph(vertex_count, tuple(edges)), EdgeSubset(tuple(bool(x) for x in f_flags))


def check_subset(g: Graph, f: EdgeSubset) -> None:
    if len(f) != g.m:
        raise LengthMismatchError(f"subset has {len(f)} flags for {g.m} edges")


def independent_pairs(g: Graph, restrict_first_to: EdgeSubset) -> list[tuple[int, int]]:
    """Vertex-disjoint edge pairs ``(i, j)``, ``i < j``, with ``i`` or ``j`` in the subset.

    Sorted ascending.
    """
    check_subset(g, restrict_first_to)
    flags = restrict_first_to.member_flags
    edges = g.edges
    pairs: list[tuple[int, int]] = []
    for i in range(len(edges)):
        a, b = edges[i]
        fi = flags[i]
        for j in range(i + 1, len(edges)):
            if not (fi or flags[j]):
                continue
            c, d = edges[j]
            if a != c and a != d and b != c and b != d:
                pairs.append((i, j))
    return pairs


@dataclass(frozen=True)
class Bridge:
    kind: str  # "trivial" | "component"
    internal_vertices: frozenset[int]
    attachment_vertices: frozenset[int]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class BridgeDecomposition:
    skeleton_vertices: frozenset[int]
    bridges: tuple[Bridge, ...]


def bridge_decomposition(g: Graph, f: EdgeSubset) -> BridgeDecomposition:
    """Split ``E - F`` into bridges of ``S = (V, F)``.

    The skeleton is the set of F-incident vertices. Trivial bridges are the
    non-F edges with both ends on the skeleton; every other non-F edge lies in
    a component bridge grown from the non-skeleton vertices. Bridges are
    ordered by their smallest edge index.
    """
    check_subset(g, f)
    skeleton = set()
    for i in f.indices():
        skeleton.update(g.edges[i])

    # union-find over non-skeleton vertices
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rest = [i for i in range(g.m) if not f.member_flags[i]]
    for i in rest:
        u, v = g.edges[i]
        if u not in skeleton and v not in skeleton:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)

    bridges: list[Bridge] = []
    groups: dict[int, list[int]] = {}
    for i in rest:
        u, v = g.edges[i]
        if u in skeleton and v in skeleton:
            bridges.append(Bridge("trivial", frozenset(), frozenset((u, v)), (i,)))
        else:
            inner = u if u not in skeleton else v
            groups.setdefault(find(inner), []).append(i)
    for edge_ids in groups.values():
        internal: set[int] = set()
        attach: set[int] = set()
        for i in edge_ids:
            for x in g.edges[i]:
                (attach if x in skeleton else internal).add(x)
        bridges.append(
            Bridge("component", frozenset(internal), frozenset(attach), tuple(sorted(edge_ids)))
        )
    bridges.sort(key=lambda br: br.edges[0])
    return BridgeDecomposition(frozenset(skeleton), tuple(bridges))


def complete_graph(n: int) -> tuple[Graph, EdgeSubset]:
    pairs = list(combinations(range(n), 2))
    return build_graph(n, pairs, [True] * len(pairs))


def complete_bipartite(a: int, b: int) -> tuple[Graph, EdgeSubset]:
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    return build_graph(a + b, pairs, [True] * len(pairs))


def relabel(g: Graph, f: EdgeSubset, perm: Sequence[int]) -> tuple[Graph, EdgeSubset]:
    """Apply vertex permutation ``v -> perm[v]``; edge indices are preserved."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise GraphError("relabeling must be a permutation of the vertices")
    return build_graph(
        g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges], f.member_flags
    )
