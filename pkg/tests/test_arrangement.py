import random
from collections import Counter

import pytest

from partplan.arrangement import (
    WiringDiagram,
    WiringError,
    all_wirings,
    build_arrangement_instance,
    cells,
    random_wiring,
    validate_wiring,
)

from .arrangement_checks import expected_counts, implementation_signs, instance_census, recount

K3 = WiringDiagram.parse("3; 0 1 0")


def test_parse_and_format_round_trip():
    assert K3 == WiringDiagram(3, (0, 1, 0))
    assert WiringDiagram.parse(K3.format()) == K3
    assert WiringDiagram.parse("1;") == WiringDiagram(1, ())
    with pytest.raises(WiringError):
        WiringDiagram.parse("3 0 1 0")
    with pytest.raises(WiringError):
        WiringDiagram.parse("3; 0 x")


def test_validate_examples():
    assert validate_wiring(K3) == []
    assert validate_wiring(WiringDiagram(3, (0, 1)))
    problems = validate_wiring(WiringDiagram(2, (0, 0)))
    assert any("already crossed" in p for p in problems)
    assert validate_wiring(WiringDiagram(3, (0, 2, 0)))


def test_invalid_diagram_refused():
    with pytest.raises(WiringError):
        cells(WiringDiagram(2, (0, 0)))


def test_reduced_word_counts():
    assert [sum(1 for _ in all_wirings(k)) for k in range(1, 6)] == [1, 1, 2, 16, 768]


def test_cells_k1():
    cx = cells(WiringDiagram(1, ()))
    assert len(cx.cells) == 2 and cx.bounded_count == 0
    assert len(cx.segment_adjacencies) == 1


def test_cells_k2():
    cx = cells(WiringDiagram(2, (0,)))
    assert len(cx.cells) == 4 and cx.bounded_count == 0
    assert len(cx.segment_adjacencies) == 4


def test_cells_k3():
    cx = cells(K3)
    assert len(cx.cells) == 7
    assert cx.bounded_count == 1
    assert len(cx.segment_adjacencies) == 9
    assert [c.boundary_arc_count for c in cx.cells] == [1, 1, 1, 2, 0, 1, 1]


def check_against_recount(w):
    cx = cells(w)
    ref = recount(w.k, w.swaps)
    exp = expected_counts(w.k)
    assert len(ref["cells"]) == exp["cells"]
    assert len(ref["bounded"]) == exp["bounded"]
    assert len(ref["adjacencies"]) == exp["adjacencies"]
    signs = implementation_signs(w.k, w.swaps)
    assert len(set(signs)) == len(signs) == len(cx.cells)
    assert set(signs) == ref["cells"]
    assert {signs[c.id] for c in cx.cells if c.bounded} == ref["bounded"]
    assert {(signs[a], signs[b], line) for a, b, line in cx.segment_adjacencies} == ref["adjacencies"]
    assert len(cx.segment_adjacencies) == w.k * w.k
    top = frozenset(range(w.k))
    for c in cx.cells:
        if signs[c.id] == top:
            assert c.boundary_arc_count == 2
        elif c.bounded:
            assert c.boundary_arc_count == 0
        else:
            assert c.boundary_arc_count == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_cells_exhaustive(k):
    for w in all_wirings(k):
        check_against_recount(w)


@pytest.mark.parametrize("k", [6, 7])
def test_cells_random(k):
    rng = random.Random(k)
    for _ in range(50):
        w = random_wiring(k, rng)
        assert validate_wiring(w) == []
        check_against_recount(w)


def test_boundary_order_k3():
    cx = cells(K3)
    kinds = [item.kind for item in cx.boundary_order]
    assert kinds.count("endpoint") == 6
    assert kinds.count("arc") == 7  # six boundary cells, the top one twice
    # endpoints and arcs alternate around the closed boundary
    assert all(a != b for a, b in zip(kinds, kinds[1:]))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_instance_census(k):
    for w in list(all_wirings(k))[:4]:
        instance_census(k, w)


def test_k1_audit():
    inst = instance_census(1, WiringDiagram(1, ()))
    g = inst.graph
    assert g.vertex_count == 37 and g.m == 122
    cycle = [g.edges[i] for i, r in enumerate(inst.edge_roles) if r == "frame-cycle"]
    assert len(cycle) == 4
    degrees = Counter(v for e in cycle for v in e)
    assert set(degrees.values()) == {2} and len(degrees) == 4
    (pseudo,) = [g.edges[i] for i, r in enumerate(inst.edge_roles) if r == "pseudoline"]
    assert pseudo == (0, 1)
    duals = [g.edges[i] for i, r in enumerate(inst.edge_roles) if r == "dual"]
    assert len(duals) == 1
    # the dual edge joins the two V_B vertices, which the pseudoline separates
    assert all(inst.vertex_roles[v] == "V_B" for v in duals[0])
    apex = inst.vertex_roles.index("p")
    spokes = [g.edges[i] for i, r in enumerate(inst.edge_roles) if r == "spoke"]
    assert all(apex in e for e in spokes) and len(spokes) == 4


def test_frame_cycle_alternates():
    inst = build_arrangement_instance(K3)
    g = inst.graph
    for i, r in enumerate(inst.edge_roles):
        if r == "frame-cycle":
            a, b = g.edges[i]
            assert {inst.vertex_roles[a], inst.vertex_roles[b]} == {"V_A", "V_B"}


def test_random_wiring_deterministic():
    a = random_wiring(6, random.Random(3))
    b = random_wiring(6, random.Random(3))
    assert a == b
