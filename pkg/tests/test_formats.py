import json

import pytest
from hypothesis import given, settings

from partplan.decider import decide
from partplan.formats import (
    ParseError,
    ReportMismatch,
    emit_instance,
    emit_report,
    input_digest,
    parse_instance,
    parse_report,
    verify_report,
)
from partplan.graph import DuplicateEdgeError, SelfLoopError, build_graph, complete_graph

from .conftest import instances


def test_edge_list_example():
    inst = parse_instance("0 1 fixed\n1 2 free\n")
    assert inst.graph.vertex_count == 3
    assert inst.graph.edges == ((0, 1), (1, 2))
    assert inst.f.indices() == [0]


def test_edge_list_comments_and_blank_lines():
    inst = parse_instance("# a path\n\n0 1 fixed  # first\n  1 2 free\n")
    assert inst.graph.m == 2


def test_document_example():
    g, f = complete_graph(5)
    inst = parse_instance(emit_instance(g, f))
    assert (inst.graph, inst.f) == (g, f)


def test_self_loop_reports_line():
    with pytest.raises(SelfLoopError, match="line 1"):
        parse_instance("0 0 fixed")


def test_duplicate_reports_its_own_line():
    with pytest.raises(DuplicateEdgeError, match="line 3"):
        parse_instance("0 1 fixed\n# note\n1 0 free\n")


@pytest.mark.parametrize(
    "text, where",
    [
        ("0 1\n", "line 1"),
        ("0 1 fixed\n0 x free\n", "line 2"),
        ("0 1 maybe\n", "line 1"),
        ("0 -1 fixed\n", "line 1"),
        ('{"vertex_count": 2, "edges": [{"u": 0, "v": 1}]}', "edges[0].planar"),
        ('{"vertex_count": "2", "edges": []}', "vertex_count"),
        ('{"vertex_count": 2,', "line 1"),
        ('{"format": "other", "vertex_count": 2, "edges": []}', "format"),
    ],
)
def test_parse_errors_are_located(text, where):
    with pytest.raises(ParseError, match=where.replace("[", r"\[").replace("]", r"\]")):
        parse_instance(text)


def test_emit_is_canonical():
    g, f = complete_graph(4)
    text = emit_instance(g, f, {"seed": 1})
    assert text.endswith("\n")
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"
    assert parse_instance(text).metadata == {"seed": 1}


@settings(max_examples=100, deadline=None)
@given(instances(max_n=7))
def test_instance_round_trip(inst):
    g, f = inst
    text = emit_instance(g, f)
    back = parse_instance(text)
    assert (back.graph, back.f) == (g, f)
    assert emit_instance(back.graph, back.f) == text


def test_digest_ignores_metadata_but_not_f():
    g, f = complete_graph(4)
    d = input_digest(g, f)
    assert d.startswith("sha256:")
    with_meta = parse_instance(emit_instance(g, f, {"x": 1}))
    assert input_digest(with_meta.graph, with_meta.f) == d
    g2, f2 = build_graph(4, list(g.edges), [True] * 5 + [False])
    assert input_digest(g2, f2) != d


def test_no_report_has_no_certificate():
    g, f = complete_graph(5)
    doc = json.loads(emit_report(decide(g, f), g, f))
    assert doc["answer"] == "NO" and "certificate" not in doc


def test_c4_report_has_empty_certificate():
    g, f = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [True] * 4)
    doc = json.loads(emit_report(decide(g, f), g, f))
    assert doc["answer"] == "YES" and doc["certificate"] == []


@settings(max_examples=100, deadline=None)
@given(instances(max_n=7))
def test_report_round_trip_and_verify(inst):
    g, f = inst
    decision = decide(g, f)
    text = emit_report(decision, g, f)
    report = parse_report(text)
    assert report.to_text() == text
    assert report.answer == decision.answer
    ok, _ = verify_report(g, f, report)
    assert ok


def test_verify_refuses_other_instance():
    g, f = complete_graph(5)
    report = parse_report(emit_report(decide(g, f), g, f))
    h, hf = complete_graph(4)
    with pytest.raises(ReportMismatch):
        verify_report(h, hf, report)


def test_verify_catches_forged_certificate():
    g, f = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [True] * 4)
    doc = json.loads(emit_report(decide(g, f), g, f))
    doc["certificate"] = [{"edge": [0, 1], "vertex": 2}]
    ok, message = verify_report(g, f, parse_report(json.dumps(doc)))
    assert not ok and "oddly" in message


def test_verify_catches_false_no():
    g, f = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [True] * 4)
    doc = json.loads(emit_report(decide(g, f), g, f))
    doc["answer"] = "NO"
    del doc["certificate"]
    ok, _ = verify_report(g, f, parse_report(json.dumps(doc)))
    assert not ok


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(answer="MAYBE"),
        lambda d: d.pop("stats"),
        lambda d: d.pop("certificate"),
        lambda d: d.update(format="x"),
    ],
)
def test_parse_report_rejects(mutate):
    g, f = build_graph(3, [(0, 1)], [True])
    doc = json.loads(emit_report(decide(g, f), g, f))
    mutate(doc)
    with pytest.raises(ParseError):
        parse_report(json.dumps(doc))
