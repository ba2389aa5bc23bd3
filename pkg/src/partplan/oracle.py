"""Brute-force ground truth for partial planarity on small instances.

G can be drawn with F crossing-free exactly when S = (V, F) has a planar
embedding in which the attachment vertices of every bridge lie on one common
face. This module searches all rotation systems of the components of S, all
ways of nesting the components inside each other's faces, and checks the
bridge condition on the resulting faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from .graph import Bridge, EdgeSubset, Graph, GraphError, bridge_decomposition, build_graph, check_subset

MAX_VERTICES = 8
MAX_EDGES = 12


class OracleSizeError(RuntimeError):
    """The instance is too large for exhaustive search."""


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of neighbours around each vertex (edge-ends, as the graph is simple)."""

    order: Mapping[int, tuple[int, ...]]

    def successor(self, v: int, u: int) -> int:
        around = self.order[v]
        return around[(around.index(u) + 1) % len(around)]


@dataclass(frozen=True)
class Face:
    darts: tuple[tuple[int, int], ...]
    vertices: frozenset[int]


FaceSet = tuple[Face, ...]


def trace_faces(rot: RotationSystem) -> FaceSet:
    """Faces of a rotation system.

    Arriving at ``v`` along ``u -> v`` we leave along ``v -> w`` where ``w``
    follows ``u`` in the cyclic order at ``v``. Each dart lies on exactly one
    face; faces start from their smallest unused dart.
    """
    darts = sorted((u, v) for u, around in rot.order.items() for v in around)
    if not darts:
        return tuple(Face((), frozenset((v,))) for v in sorted(rot.order))
    used: set[tuple[int, int]] = set()
    faces = []
    for start in darts:
        if start in used:
            continue
        walk = []
        dart = start
        while dart not in used:
            used.add(dart)
            walk.append(dart)
            u, v = dart
            dart = (v, rot.successor(v, u))
        faces.append(Face(tuple(walk), frozenset(u for u, _ in walk)))
    return tuple(faces)


def face_trace(component: Graph, rot: RotationSystem) -> FaceSet:
    if set(rot.order) != set(range(component.vertex_count)):
        raise GraphError("rotation system does not cover the component's vertices")
    return trace_faces(rot)


def _is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    adj = g.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def euler_rejects(n: int, m: int) -> bool:
    """A simple planar graph with n >= 3 vertices has at most 3n - 6 edges."""
    return n >= 3 and m > 3 * n - 6


def rotation_count(g: Graph) -> int:
    return prod(factorial(max(d - 1, 0)) for d in g.degrees())


def iter_planar_rotations(
    component: Graph, max_vertices: int = MAX_VERTICES, max_edges: int = MAX_EDGES
) -> Iterator[RotationSystem]:
    """Yield every planar rotation system of a connected graph, in a fixed order.

    The smallest neighbour of each vertex is pinned first, so each cyclic
    order is produced once. Graphs beyond the Euler bound yield nothing.
    """
    if not _is_connected(component):
        raise GraphError("rotation enumeration needs a connected graph")
    n, m = component.vertex_count, component.m
    if euler_rejects(n, m):
        return
    if n > max_vertices or m > max_edges:
        raise OracleSizeError(
            f"component with {n} vertices and {m} edges exceeds the {max_vertices}/{max_edges} guard"
        )
    adj = component.adjacency()
    if m == 0:
        yield RotationSystem({v: () for v in range(n)})
        return
    target_faces = 2 - n + m

    dart_id = {}
    for u in range(n):
        for v in adj[u]:
            dart_id[(u, v)] = len(dart_id)
    ndarts = len(dart_id)

    # per vertex: list of (cyclic order, [(incoming dart, outgoing dart), ...])
    options = []
    for v in range(n):
        nbrs = adj[v]
        per_vertex = []
        for tail in permutations(nbrs[1:]):
            around = (nbrs[0], *tail) if nbrs else ()
            links = [
                (dart_id[(u, v)], dart_id[(v, around[(i + 1) % len(around)])])
                for i, u in enumerate(around)
            ]
            per_vertex.append((around, links))
        options.append(per_vertex)

    nxt = [0] * ndarts
    for choice in product(*options):
        for _, links in choice:
            for d_in, d_out in links:
                nxt[d_in] = d_out
        seen = bytearray(ndarts)
        faces = 0
        for d in range(ndarts):
            if not seen[d]:
                faces += 1
                while not seen[d]:
                    seen[d] = 1
                    d = nxt[d]
        if faces == target_faces:
            yield RotationSystem({v: choice[v][0] for v in range(n)})


def enumerate_planar_rotations(
    component: Graph, max_vertices: int = MAX_VERTICES, max_edges: int = MAX_EDGES
) -> list[RotationSystem]:
    return list(iter_planar_rotations(component, max_vertices, max_edges))


@dataclass(frozen=True)
class Placement:
    """How the components of S nest on the sphere.

    Component 0 is the root. Every other component ``c`` sits in face
    ``host[c][1]`` of component ``host[c][0]`` and turns its face ``outer[c]``
    towards it. A non-root host cannot offer its own outer face.
    """

    host: tuple[tuple[int, int] | None, ...]
    outer: tuple[int | None, ...]


@dataclass(frozen=True)
class CompositeFace:
    component: int
    face: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class OracleWitness:
    components: tuple[tuple[int, ...], ...]
    rotations: tuple[RotationSystem, ...]
    placement: Placement
    bridge_faces: tuple[int, ...]  # composite face per bridge, -1 if unconstrained


@dataclass(frozen=True)
class OracleResult:
    answer: bool
    witness: OracleWitness | None
    reason: str  # "empty", "euler", "search"

    @property
    def label(self) -> str:
        return "YES" if self.answer else "NO"


def _components(g: Graph, f: EdgeSubset) -> list[tuple[tuple[int, ...], list[tuple[int, int]]]]:
    """Connected components of (skeleton, F) as (sorted vertices, edges)."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    f_edges = [g.edges[i] for i in f.indices()]
    for u, v in f_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for x in sorted(parent):
        groups.setdefault(find(x), []).append(x)
    edges_of: dict[int, list[tuple[int, int]]] = {r: [] for r in groups}
    for u, v in f_edges:
        edges_of[find(u)].append((u, v))
    return [(tuple(groups[r]), edges_of[r]) for r in sorted(groups)]


def _local_graph(vertices: Sequence[int], edges: Sequence[tuple[int, int]]) -> Graph:
    local = {v: i for i, v in enumerate(vertices)}
    g, _ = build_graph(len(vertices), [(local[u], local[v]) for u, v in edges], [True] * len(edges))
    return g


def _to_global(rot: RotationSystem, vertices: Sequence[int]) -> RotationSystem:
    return RotationSystem(
        {vertices[v]: tuple(vertices[w] for w in around) for v, around in rot.order.items()}
    )


def _distinct_embeddings(
    comp: Graph, vertices: Sequence[int], max_vertices: int, max_edges: int
) -> Iterator[tuple[RotationSystem, tuple[frozenset[int], ...]]]:
    """Planar rotations (global labels) with distinct face-vertex-set signatures."""
    seen: set[tuple[tuple[int, ...], ...]] = set()
    for rot in iter_planar_rotations(comp, max_vertices, max_edges):
        grot = _to_global(rot, vertices)
        face_sets = tuple(face.vertices for face in trace_faces(grot))
        signature = tuple(sorted(tuple(sorted(s)) for s in face_sets))
        if signature not in seen:
            seen.add(signature)
            yield grot, face_sets


def _placements(face_counts: Sequence[int]) -> Iterator[Placement]:
    k = len(face_counts)
    if k == 1:
        yield Placement((None,), (None,))
        return
    per_comp = []
    for c in range(1, k):
        opts = [
            (host, slot, out)
            for host in range(k)
            if host != c
            for slot in range(face_counts[host])
            for out in range(face_counts[c])
        ]
        per_comp.append(opts)
    for combo in product(*per_comp):
        host: list[tuple[int, int] | None] = [None]
        outer: list[int | None] = [None]
        for h, s, o in combo:
            host.append((h, s))
            outer.append(o)
        if any(h != 0 and s == outer[h] for h, s in host[1:]):  # type: ignore[misc]
            continue
        if _acyclic(host):
            yield Placement(tuple(host), tuple(outer))


def _acyclic(host: Sequence[tuple[int, int] | None]) -> bool:
    for c in range(1, len(host)):
        steps = 0
        x = c
        while x != 0:
            x = host[x][0]  # type: ignore[index]
            steps += 1
            if steps > len(host):
                return False
    return True


def composite_faces(
    face_sets: Sequence[Sequence[frozenset[int]]], placement: Placement
) -> list[CompositeFace]:
    """Regions of the nested embedding with the vertices on their boundary."""
    slots: dict[tuple[int, int], set[int]] = {}
    for c, faces in enumerate(face_sets):
        for i, verts in enumerate(faces):
            if c != 0 and placement.outer[c] == i:
                continue
            slots[(c, i)] = set(verts)
    for c in range(1, len(face_sets)):
        slot = placement.host[c]
        assert slot is not None
        slots[slot] |= face_sets[c][placement.outer[c]]  # type: ignore[index]
    return [CompositeFace(c, i, frozenset(v)) for (c, i), v in slots.items()]


def _assign_bridges(bridges: Sequence[Bridge], regions: Sequence[CompositeFace]) -> tuple[int, ...] | None:
    chosen = []
    for br in bridges:
        if len(br.attachment_vertices) <= 1:
            chosen.append(-1)
            continue
        for idx, region in enumerate(regions):
            if br.attachment_vertices <= region.vertices:
                chosen.append(idx)
                break
        else:
            return None
    return tuple(chosen)


def oracle_decide(
    g: Graph,
    f: EdgeSubset,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> OracleResult:
    """Exhaustively decide whether G has a drawing with every F-edge crossing-free.

    Components of S violating the Euler bound answer NO without search; past
    that, instances over the size guard raise :class:`OracleSizeError`.
    """
    check_subset(g, f)
    if f.size == 0:
        return OracleResult(True, OracleWitness((), (), Placement((), ()), ()), "empty")
    comps = _components(g, f)
    for vertices, edges in comps:
        if euler_rejects(len(vertices), len(edges)):
            return OracleResult(False, None, "euler")
    bd = bridge_decomposition(g, f)
    if len(bd.skeleton_vertices) > max_vertices or f.size > max_edges:
        raise OracleSizeError(
            f"skeleton has {len(bd.skeleton_vertices)} vertices and |F| = {f.size}; "
            f"guard is {max_vertices}/{max_edges}"
        )
    locals_ = [_local_graph(v, e) for v, e in comps]
    rest = [list(_distinct_embeddings(lg, v, max_vertices, max_edges)) for lg, (v, _) in zip(locals_[1:], comps[1:])]
    if any(not options for options in rest):
        return OracleResult(False, None, "search")
    first = _distinct_embeddings(locals_[0], comps[0][0], max_vertices, max_edges)
    component_vertices = tuple(v for v, _ in comps)
    for root_choice in first:
        for others in product(*rest):
            chosen = (root_choice, *others)
            face_sets = [fs for _, fs in chosen]
            for placement in _placements([len(fs) for fs in face_sets]):
                regions = composite_faces(face_sets, placement)
                assignment = _assign_bridges(bd.bridges, regions)
                if assignment is not None:
                    witness = OracleWitness(
                        component_vertices,
                        tuple(rot for rot, _ in chosen),
                        placement,
                        assignment,
                    )
                    return OracleResult(True, witness, "search")
    return OracleResult(False, None, "search")


def check_witness(g: Graph, f: EdgeSubset, witness: OracleWitness) -> bool:
    """Re-derive faces and regions from a YES witness and re-check every bridge."""
    check_subset(g, f)
    if f.size == 0:
        return True
    comps = _components(g, f)
    if tuple(v for v, _ in comps) != witness.components:
        return False
    face_sets = []
    for (vertices, edges), rot in zip(comps, witness.rotations):
        if set(rot.order) != set(vertices):
            return False
        for v in vertices:
            nbrs = sorted(w for e in edges for w in e if v in e and w != v)
            if sorted(rot.order[v]) != nbrs:
                return False
        faces = trace_faces(rot)
        if len(vertices) - len(edges) + len(faces) != 2:
            return False
        face_sets.append([face.vertices for face in faces])
    p = witness.placement
    if len(p.host) != len(comps) or not _acyclic(p.host):
        return False
    for c in range(1, len(comps)):
        slot, out = p.host[c], p.outer[c]
        if slot is None or out is None or not 0 <= out < len(face_sets[c]):
            return False
        h, s = slot
        if not 0 <= s < len(face_sets[h]) or (h != 0 and s == p.outer[h]):
            return False
    regions = composite_faces(face_sets, p)
    bridges = bridge_decomposition(g, f).bridges
    if len(witness.bridge_faces) != len(bridges):
        return False
    for br, idx in zip(bridges, witness.bridge_faces):
        if len(br.attachment_vertices) <= 1:
            continue
        if not 0 <= idx < len(regions) or not br.attachment_vertices <= regions[idx].vertices:
            return False
    return True
