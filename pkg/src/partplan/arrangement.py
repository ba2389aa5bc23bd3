"""Pseudoline arrangements as wiring diagrams, their cells, and the framed
arrangement graph with K6 gadgets on every frame edge.

Positions are numbered from the bottom. Gap ``g`` (0..k) is the strip between
positions ``g-1`` and ``g``; gap 0 lies below every line and gap ``k`` above.
The clipping region is an upward-opening parabola containing all crossings,
so gap ``k`` is the unbounded cell touching both the left and right branch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .graph import EdgeSubset, Graph, build_graph


class WiringError(ValueError):
    pass


@dataclass(frozen=True)
class WiringDiagram:
    k: int
    swaps: tuple[int, ...]  # lower position of each adjacent transposition

    @classmethod
    def parse(cls, text: str) -> WiringDiagram:
        """Read ``"k; i1 i2 ..."``."""
        head, sep, tail = text.strip().partition(";")
        if not sep:
            raise WiringError(f"expected 'k; swaps...', got {text!r}")
        try:
            k = int(head)
            swaps = tuple(int(tok) for tok in tail.split())
        except ValueError as exc:
            raise WiringError(f"bad wiring diagram {text!r}: {exc}") from None
        return cls(k, swaps)

    def format(self) -> str:
        return f"{self.k}; " + " ".join(str(s) for s in self.swaps) if self.swaps else f"{self.k};"

    @classmethod
    def bubble(cls, k: int) -> WiringDiagram:
        """The bubble-sort wiring: a valid simple arrangement of ``k`` lines."""
        swaps = [i for top in range(k - 1, 0, -1) for i in range(top)]
        return cls(k, tuple(swaps))


def validate_wiring(w: WiringDiagram) -> list[str]:
    """All violations of the wiring invariants; empty when valid."""
    problems: list[str] = []
    if w.k < 0:
        return [f"k must be nonnegative, got {w.k}"]
    expected = comb(w.k, 2)
    if len(w.swaps) != expected:
        problems.append(f"length {len(w.swaps)} != C({w.k},2) = {expected}")
    order = list(range(w.k))
    seen: dict[frozenset[int], int] = {}
    for step, pos in enumerate(w.swaps):
        if not 0 <= pos < w.k - 1:
            problems.append(f"swap {step}: position {pos} outside [0, {w.k - 2}]")
            continue
        pair = frozenset((order[pos], order[pos + 1]))
        if pair in seen:
            a, b = sorted(pair)
            problems.append(f"swap {step}: lines {a} and {b} already crossed at swap {seen[pair]}")
        else:
            seen[pair] = step
        order[pos], order[pos + 1] = order[pos + 1], order[pos]
    for a, b in combinations(range(w.k), 2):
        if frozenset((a, b)) not in seen:
            problems.append(f"lines {a} and {b} never cross")
    return problems


def _require_valid(w: WiringDiagram) -> None:
    problems = validate_wiring(w)
    if problems:
        raise WiringError("invalid wiring diagram: " + "; ".join(problems))


@dataclass(frozen=True)
class Cell:
    id: int
    bounded: bool
    boundary_arc_count: int
    gap: int


@dataclass(frozen=True)
class BoundaryItem:
    kind: str  # "endpoint" (V_A role) or "arc" (V_B role)
    line: int = -1  # endpoint: pseudoline label
    side: str = ""  # endpoint: "left"/"right"; arc: "left"/"right"/"bottom"
    cell: int = -1  # arc: owning cell


@dataclass(frozen=True)
class CellComplex:
    cells: tuple[Cell, ...]
    segment_adjacencies: tuple[tuple[int, int, int], ...]  # (below, above, line)
    boundary_order: tuple[BoundaryItem, ...]

    @property
    def bounded_count(self) -> int:
        return sum(c.bounded for c in self.cells)


def cells(w: WiringDiagram) -> CellComplex:
    """Sweep the wiring diagram left to right and record its cells.

    A swap at position ``i`` closes the cell in gap ``i+1`` and opens a new one;
    each pseudoline segment ending at a crossing (or at the right boundary)
    yields one adjacency between the cells below and above it.
    """
    _require_valid(w)
    k = w.k
    gap_cell = list(range(k + 1))  # initial cells get ids 0..k by gap
    gaps = list(range(k + 1))
    touches_left = set(range(k + 1))
    order = list(range(k))  # order[pos] = line
    adjacencies: list[tuple[int, int, int]] = []
    next_id = k + 1
    for pos in w.swaps:
        lo, hi = order[pos], order[pos + 1]
        adjacencies.append((gap_cell[pos], gap_cell[pos + 1], lo))
        adjacencies.append((gap_cell[pos + 1], gap_cell[pos + 2], hi))
        gap_cell[pos + 1] = next_id
        gaps.append(pos + 1)
        next_id += 1
        order[pos], order[pos + 1] = hi, lo
    for pos in range(k):
        adjacencies.append((gap_cell[pos], gap_cell[pos + 1], order[pos]))
    touches_right = set(gap_cell)

    cell_list = []
    for cid in range(next_id):
        arcs = 0
        if gaps[cid] == k:
            arcs = 2  # the unbounded cell meets both branches
        elif cid in touches_left or cid in touches_right:
            arcs = 1
        cell_list.append(Cell(cid, arcs == 0, arcs, gaps[cid]))

    # Walk the parabola: left branch top to bottom, then right branch upward.
    boundary: list[BoundaryItem] = [BoundaryItem("arc", side="left", cell=k)]
    for pos in range(k - 1, -1, -1):
        boundary.append(BoundaryItem("endpoint", line=pos, side="left"))
        boundary.append(
            BoundaryItem("arc", side="bottom" if pos == 0 else "left", cell=pos)
        )
    for pos in range(k):
        boundary.append(BoundaryItem("endpoint", line=order[pos], side="right"))
        if pos + 1 < k:
            boundary.append(BoundaryItem("arc", side="right", cell=gap_cell[pos + 1]))
    if k > 0:
        boundary.append(BoundaryItem("arc", side="right", cell=k))
    return CellComplex(tuple(cell_list), tuple(adjacencies), tuple(boundary))


VERTEX_ROLES = ("V_A", "V_B", "V_I", "p", "gadget")
EDGE_ROLES = ("pseudoline", "frame-cycle", "spoke", "dual", "gadget")


@dataclass(frozen=True)
class ArrangementInstance:
    graph: Graph
    f: EdgeSubset
    vertex_roles: tuple[str, ...]
    edge_roles: tuple[str, ...]
    gadget_of_edge: tuple[int, ...]  # gadget id per edge, -1 outside gadgets
    frame_edges: tuple[int, ...]  # edge index of each frame edge; gadget g hangs on frame_edges[g]


def build_arrangement_instance(w: WiringDiagram) -> ArrangementInstance:
    """Frame the arrangement, add its dual, and lock every frame edge in a K6.

    Vertex numbering: pseudoline endpoints (line ``j`` gets ``2j`` left and
    ``2j+1`` right), boundary-cell vertices in boundary order, one vertex per
    bounded cell, the apex ``p``, then four fresh vertices per gadget.
    """
    cx = cells(w)
    k = w.k
    roles: list[str] = ["V_A"] * (2 * k)
    rep: dict[int, int] = {}  # cell id -> representative vertex
    frame_vertices: list[int] = []
    for item in cx.boundary_order:
        if item.kind == "endpoint":
            frame_vertices.append(2 * item.line + (item.side == "right"))
        elif item.cell not in rep:
            # the two-arc cell takes its vertex on the first (left) arc seen
            rep[item.cell] = len(roles)
            roles.append("V_B")
            frame_vertices.append(rep[item.cell])
    for c in cx.cells:
        if c.bounded:
            rep[c.id] = len(roles)
            roles.append("V_I")
    apex = len(roles)
    roles.append("p")

    edges: list[tuple[int, int]] = []
    edge_roles: list[str] = []

    def add(u: int, v: int, role: str) -> int:
        edges.append((u, v))
        edge_roles.append(role)
        return len(edges) - 1

    for line in range(k):
        add(2 * line, 2 * line + 1, "pseudoline")
    frame: list[int] = []
    cycle_len = len(frame_vertices)
    if cycle_len >= 3:
        for i in range(cycle_len):
            frame.append(add(frame_vertices[i], frame_vertices[(i + 1) % cycle_len], "frame-cycle"))
    elif cycle_len == 2:
        frame.append(add(frame_vertices[0], frame_vertices[1], "frame-cycle"))
    for x in frame_vertices:
        frame.append(add(apex, x, "spoke"))
    for below, above, _line in cx.segment_adjacencies:
        add(rep[below], rep[above], "dual")

    gadget_of_edge = [-1] * len(edges)
    for gid, e in enumerate(frame):
        gadget_of_edge[e] = gid
        u, v = edges[e]
        fresh = list(range(len(roles), len(roles) + 4))
        roles.extend(["gadget"] * 4)
        clique = [u, v, *fresh]
        for a, b in combinations(clique, 2):
            if {a, b} == {u, v}:
                continue
            add(a, b, "gadget")
            gadget_of_edge.append(gid)

    flags = [role != "pseudoline" for role in edge_roles]
    graph, f = build_graph(len(roles), edges, flags)
    return ArrangementInstance(
        graph, f, tuple(roles), tuple(edge_roles), tuple(gadget_of_edge), tuple(frame)
    )


def random_wiring(k: int, rng: random.Random) -> WiringDiagram:
    """A random simple arrangement: swap a random adjacent pair that has not crossed yet."""
    order = list(range(k))
    swaps = []
    for _ in range(comb(k, 2)):
        # labels start sorted, so an ascending neighbour pair has not crossed
        ready = [i for i in range(k - 1) if order[i] < order[i + 1]]
        i = rng.choice(ready)
        swaps.append(i)
        order[i], order[i + 1] = order[i + 1], order[i]
    return WiringDiagram(k, tuple(swaps))


def all_wirings(k: int) -> Iterator[WiringDiagram]:
    """Every valid wiring diagram on ``k`` lines (reduced words of the reversal)."""

    def extend(order: list[int], swaps: list[int]) -> Iterator[tuple[int, ...]]:
        if len(swaps) == comb(k, 2):
            yield tuple(swaps)
            return
        for i in range(k - 1):
            if order[i] < order[i + 1]:
                order[i], order[i + 1] = order[i + 1], order[i]
                swaps.append(i)
                yield from extend(order, swaps)
                swaps.pop()
                order[i], order[i + 1] = order[i + 1], order[i]

    for swaps in extend(list(range(k)), []):
        yield WiringDiagram(k, swaps)
