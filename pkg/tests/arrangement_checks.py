"""Independent checks on arrangement cells and instances.

The cell recount works from pairwise crossing order.

Line ``a`` is below line ``b`` in column ``c`` exactly when ``a < b`` and
the pair has not crossed yet, or ``a > b`` and it has. Each column's
vertical order follows from that comparison alone. A cell of a simple
arrangement is determined by the set of lines passing below it, so reading
that set off every gap of every column gives every cell without ids.
"""

from __future__ import annotations

from collections import Counter
from functools import cmp_to_key
from itertools import combinations
from math import comb

from partplan.arrangement import build_arrangement_instance


def crossing_steps(k, swaps):
    """Swap index at which each pair of lines crosses."""
    order = list(range(k))
    steps = {}
    for s, pos in enumerate(swaps):
        a, b = order[pos], order[pos + 1]
        steps[frozenset((a, b))] = s
        order[pos], order[pos + 1] = b, a
    return steps


def column_order(k, steps, column):
    def below(a, b):
        crossed = steps[frozenset((a, b))] < column
        return -1 if (a < b) != crossed else 1

    return tuple(sorted(range(k), key=cmp_to_key(below)))


def recount(k, swaps):
    steps = crossing_steps(k, swaps)
    cols = [column_order(k, steps, c) for c in range(len(swaps) + 1)]

    def sign(order, gap):
        return frozenset(order[:gap])

    cells = {sign(order, g) for order in cols for g in range(k + 1)}
    on_boundary = {sign(order, g) for order in (cols[0], cols[-1]) for g in range(k + 1)}
    adjacencies = {
        (sign(order, g), sign(order, g + 1), order[g]) for order in cols for g in range(k)
    }
    return {
        "cells": cells,
        "bounded": cells - on_boundary,
        "boundary": on_boundary,
        "adjacencies": adjacencies,
    }


def expected_counts(k):
    return {
        "cells": 1 + k + comb(k, 2),
        "bounded": (k - 1) * (k - 2) // 2,
        "adjacencies": k * k,
    }


def implementation_signs(k, swaps):
    """Sign vector of each implementation cell id (gap cells first, then one per swap)."""
    steps = crossing_steps(k, swaps)
    signs = [frozenset(range(g)) for g in range(k + 1)]
    for s, pos in enumerate(swaps):
        signs.append(frozenset(column_order(k, steps, s + 1)[: pos + 1]))
    return signs


def instance_census(k, w):
    inst = build_arrangement_instance(w)
    g = inst.graph
    roles = Counter(inst.vertex_roles)
    eroles = Counter(inst.edge_roles)
    frame = 8 * k
    assert roles["V_A"] == 2 * k
    assert roles["V_B"] == 2 * k
    assert roles["V_I"] == comb(k - 1, 2)
    assert roles["p"] == 1
    assert roles["gadget"] == 4 * frame
    assert eroles["pseudoline"] == k
    assert eroles["frame-cycle"] == 4 * k
    assert eroles["spoke"] == 4 * k
    assert eroles["dual"] == k * k
    assert eroles["gadget"] == 14 * frame
    assert len(inst.frame_edges) == frame
    assert inst.f.size == g.m - k
    assert all(inst.f.member_flags[i] == (r != "pseudoline") for i, r in enumerate(inst.edge_roles))
    # each gadget is a K6 on its frame edge plus four vertices nobody else uses
    fresh_seen = set()
    for gid, e in enumerate(inst.frame_edges):
        members = [i for i, x in enumerate(inst.gadget_of_edge) if x == gid]
        assert e in members and len(members) == 15
        verts = {v for i in members for v in g.edges[i]}
        assert len(verts) == 6
        assert {tuple(sorted(p)) for p in combinations(verts, 2)} == {g.edges[i] for i in members}
        fresh = verts - set(g.edges[e])
        assert all(inst.vertex_roles[v] == "gadget" for v in fresh)
        assert not fresh & fresh_seen
        fresh_seen |= fresh
    return inst
