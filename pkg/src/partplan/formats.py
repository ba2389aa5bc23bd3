"""Instance documents, plain edge lists, and decision reports.

Two instance formats are accepted, told apart by the first non-blank
character: ``{`` starts a JSON instance document, anything else is an edge
list with one ``u v fixed|free`` line per edge (``fixed`` edges form F).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .decider import Decision
from .graph import EdgeSubset, Graph, GraphError, build_graph

FORMAT_TAG = "partplan-instance"
REPORT_TAG = "partplan-report"


class ParseError(ValueError):
    pass


def _instance_payload(g: Graph, f: EdgeSubset) -> dict[str, Any]:
    return {
        "format": FORMAT_TAG,
        "vertex_count": g.vertex_count,
        "edges": [
            {"u": u, "v": v, "planar": bool(flag)}
            for (u, v), flag in zip(g.edges, f.member_flags)
        ],
    }


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def emit_instance(g: Graph, f: EdgeSubset, metadata: dict[str, Any] | None = None) -> str:
    payload = _instance_payload(g, f)
    if metadata:
        payload["metadata"] = dict(metadata)
    return _dumps(payload)


def input_digest(g: Graph, f: EdgeSubset) -> str:
    """Hash of the canonical instance document, metadata excluded."""
    canonical = json.dumps(_instance_payload(g, f), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canonical.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class Instance:
    graph: Graph
    f: EdgeSubset
    metadata: dict[str, Any] = field(default_factory=dict)


def parse_instance(text: str) -> Instance:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_document(text)
    return _parse_edge_list(text)


def _parse_edge_list(text: str) -> Instance:
    edges: list[tuple[int, int]] = []
    flags: list[bool] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 'u v fixed|free', got {raw.strip()!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers, got {fields[0]!r} {fields[1]!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: vertex ids must be nonnegative")
        if fields[2] not in ("fixed", "free"):
            raise ParseError(f"line {lineno}: third field must be 'fixed' or 'free', got {fields[2]!r}")
        edges.append((u, v))
        flags.append(fields[2] == "fixed")
        lines.append(lineno)
    n = max((max(e) for e in edges), default=-1) + 1
    try:
        g, f = build_graph(n, edges, flags)
    except GraphError as exc:
        # edge i came from lines[i]; build_graph reports "edge i ..."
        idx = _edge_index_of(str(exc))
        where = f"line {lines[idx]}: " if idx is not None else ""
        raise type(exc)(where + str(exc)) from None
    return Instance(g, f, {})


def _edge_index_of(message: str) -> int | None:
    if message.startswith("edge "):
        head = message[5:].split(None, 1)[0].rstrip(":")
        if head.isdigit():
            return int(head)
    return None


def _parse_document(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    if doc.get("format", FORMAT_TAG) != FORMAT_TAG:
        raise ParseError(f"format: expected {FORMAT_TAG!r}, got {doc.get('format')!r}")
    n = doc.get("vertex_count")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("vertex_count: expected an integer")
    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list):
        raise ParseError("edges: expected a list")
    edges = []
    flags = []
    for i, item in enumerate(raw_edges):
        if not isinstance(item, dict):
            raise ParseError(f"edges[{i}]: expected an object with u, v, planar")
        for key in ("u", "v"):
            if not isinstance(item.get(key), int) or isinstance(item.get(key), bool):
                raise ParseError(f"edges[{i}].{key}: expected an integer")
        if not isinstance(item.get("planar"), bool):
            raise ParseError(f"edges[{i}].planar: expected true or false")
        edges.append((item["u"], item["v"]))
        flags.append(item["planar"])
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata: expected an object")
    g, f = build_graph(n, edges, flags)
    return Instance(g, f, metadata)


@dataclass(frozen=True)
class Report:
    answer: bool
    certificate: tuple[tuple[tuple[int, int], int], ...] | None  # ((u, v), vertex)
    num_equations: int
    num_variables_used: int
    rank: int
    elapsed_ms: float
    order: tuple[int, ...]
    input_digest: str
    tool_version: str = __version__

    def to_text(self) -> str:
        doc: dict[str, Any] = {
            "format": REPORT_TAG,
            "answer": "YES" if self.answer else "NO",
            "stats": {
                "num_equations": self.num_equations,
                "num_variables_used": self.num_variables_used,
                "rank": self.rank,
                "elapsed_ms": self.elapsed_ms,
            },
            "order": list(self.order),
            "input_digest": self.input_digest,
            "tool_version": self.tool_version,
        }
        if self.certificate is not None:
            doc["certificate"] = [{"edge": list(e), "vertex": w} for e, w in self.certificate]
        return _dumps(doc)


def report_from_decision(decision: Decision, g: Graph, f: EdgeSubset) -> Report:
    certificate = None
    if decision.answer:
        assert decision.certificate is not None
        certificate = tuple((g.edges[e], v) for e, v in sorted(decision.certificate))
    return Report(
        answer=decision.answer,
        certificate=certificate,
        num_equations=decision.stats.num_equations,
        num_variables_used=decision.stats.num_variables_used,
        rank=decision.stats.rank,
        elapsed_ms=round(decision.stats.elapsed_seconds * 1000.0, 3),
        order=tuple(decision.order),
        input_digest=input_digest(g, f),
    )


def emit_report(decision: Decision, g: Graph, f: EdgeSubset) -> str:
    return report_from_decision(decision, g, f).to_text()


def parse_report(text: str) -> Report:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict) or doc.get("format") != REPORT_TAG:
        raise ParseError(f"not a {REPORT_TAG} document")
    answer = doc.get("answer")
    if answer not in ("YES", "NO"):
        raise ParseError(f"answer: expected YES or NO, got {answer!r}")
    stats = doc.get("stats")
    if not isinstance(stats, dict):
        raise ParseError("stats: expected an object")
    try:
        certificate = None
        if "certificate" in doc:
            certificate = tuple(
                ((int(item["edge"][0]), int(item["edge"][1])), int(item["vertex"]))
                for item in doc["certificate"]
            )
        report = Report(
            answer=answer == "YES",
            certificate=certificate,
            num_equations=int(stats["num_equations"]),
            num_variables_used=int(stats["num_variables_used"]),
            rank=int(stats["rank"]),
            elapsed_ms=float(stats["elapsed_ms"]),
            order=tuple(int(v) for v in doc["order"]),
            input_digest=str(doc["input_digest"]),
            tool_version=str(doc["tool_version"]),
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed report: {exc!r}") from None
    if report.answer != (report.certificate is not None):
        raise ParseError("certificate must be present exactly when the answer is YES")
    return report


class ReportMismatch(ValueError):
    """The report was produced for a different instance."""


def verify_report(g: Graph, f: EdgeSubset, report: Report) -> tuple[bool, str]:
    """Re-check a report against its instance.

    A YES report is checked through its certificate; a NO report by running
    the decider again with the recorded drawing order.
    """
    from .decider import decide, verify_certificate
    from .drawing import ConvexDrawing

    digest = input_digest(g, f)
    if digest != report.input_digest:
        raise ReportMismatch(f"report digest {report.input_digest} does not match instance {digest}")
    if len(report.order) != g.vertex_count:
        raise ReportMismatch("recorded drawing order does not cover the instance's vertices")
    d = ConvexDrawing.from_order(report.order)
    if report.answer:
        assert report.certificate is not None
        index = {e: i for i, e in enumerate(g.edges)}
        moves = []
        for (u, v), w in report.certificate:
            key = (min(u, v), max(u, v))
            if key not in index:
                return False, f"certificate names edge {u}-{v}, which is not in the graph"
            moves.append((index[key], w))
        try:
            ok = verify_certificate(g, f, d, moves)
        except GraphError as exc:
            return False, f"malformed certificate: {exc}"
        return ok, "certificate verified" if ok else "certificate leaves an F-edge oddly crossed"
    again = decide(g, f, report.order)
    if again.answer:
        return False, "decider finds the system solvable; recorded NO not reproduced"
    return True, "NO reproduced"
