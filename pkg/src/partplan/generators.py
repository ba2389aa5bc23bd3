"""Seeded instance generators."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Any

import networkx as nx

from .arrangement import WiringDiagram, build_arrangement_instance
from .graph import EdgeSubset, Graph, build_graph, complete_bipartite, complete_graph

KINDS = ("random", "k5_family", "kuratowski", "spanning_tree", "arrangement")
K5_VARIANTS = ("all", "minus_one", "minus_two_disjoint", "star")


class GeneratorError(ValueError):
    pass


def random_instance(n: int, m: int, f_size: int, seed: int) -> tuple[Graph, EdgeSubset]:
    """Uniform random simple graph with ``m`` edges and a uniform ``f_size``-subset F."""
    pairs = list(combinations(range(n), 2))
    if n < 0 or not 0 <= m <= len(pairs):
        raise GeneratorError(f"cannot place {m} edges on {n} vertices")
    if not 0 <= f_size <= m:
        raise GeneratorError(f"|F| = {f_size} not within [0, {m}]")
    rng = random.Random(seed)
    chosen = sorted(rng.sample(pairs, m))
    in_f = set(rng.sample(range(m), f_size))
    return build_graph(n, chosen, [i in in_f for i in range(m)])


def random_subset_instance(n: int, m: int, seed: int) -> tuple[Graph, EdgeSubset]:
    """Random graph with each edge joining F independently with probability 1/2."""
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise GeneratorError(f"cannot place {m} edges on {n} vertices")
    chosen = sorted(rng.sample(pairs, m))
    return build_graph(n, chosen, [rng.random() < 0.5 for _ in chosen])


def k5_family(which: str = "all") -> tuple[Graph, EdgeSubset]:
    g, _ = complete_graph(5)
    if which == "all":
        drop: set[int] = set()
    elif which == "minus_one":
        drop = {0}
    elif which == "minus_two_disjoint":
        # (0,1) and (2,3)
        drop = {g.edges.index((0, 1)), g.edges.index((2, 3))}
    elif which == "star":
        return g, EdgeSubset(tuple(0 in e for e in g.edges))
    else:
        raise GeneratorError(f"unknown K5 variant {which!r}; expected one of {K5_VARIANTS}")
    return g, EdgeSubset(tuple(i not in drop for i in range(g.m)))


def kuratowski(which: str = "k5") -> tuple[Graph, EdgeSubset]:
    if which == "k5":
        return complete_graph(5)
    if which == "k33":
        return complete_bipartite(3, 3)
    raise GeneratorError(f"unknown Kuratowski graph {which!r}; expected k5 or k33")


def spanning_tree_instance(n: int, extra: int, seed: int) -> tuple[Graph, EdgeSubset]:
    """Connected graph (random tree plus ``extra`` edges); F is a uniform spanning tree of it."""
    if n < 1:
        raise GeneratorError("spanning-tree instances need at least one vertex")
    max_extra = n * (n - 1) // 2 - (n - 1)
    if not 0 <= extra <= max_extra:
        raise GeneratorError(f"extra = {extra} not within [0, {max_extra}] for n = {n}")
    rng = random.Random(seed)
    base = {tuple(sorted(e)) for e in nx.random_labeled_tree(n, seed=rng.randrange(2**32)).edges()} if n > 1 else set()
    remaining = [p for p in combinations(range(n), 2) if p not in base]
    pairs = sorted(base | set(rng.sample(remaining, extra)))
    host = nx.Graph()
    host.add_nodes_from(range(n))
    host.add_edges_from(pairs)
    tree = nx.random_spanning_tree(host, seed=rng.randrange(2**32)) if n > 1 else host
    tree_edges = {tuple(sorted(e)) for e in tree.edges()}
    return build_graph(n, pairs, [p in tree_edges for p in pairs])


def generate(kind: str, params: dict[str, Any] | None = None, seed: int = 0) -> tuple[Graph, EdgeSubset]:
    """Dispatch to one generator by name. ``params`` keys follow each generator's arguments."""
    params = dict(params or {})
    try:
        if kind == "random":
            return random_instance(int(params["n"]), int(params["m"]), int(params["f"]), seed)
        if kind == "k5_family":
            return k5_family(str(params.get("which", "all")))
        if kind == "kuratowski":
            return kuratowski(str(params.get("which", "k5")))
        if kind == "spanning_tree":
            return spanning_tree_instance(int(params["n"]), int(params.get("extra", 0)), seed)
        if kind == "arrangement":
            w = params["wiring"]
            if isinstance(w, str):
                w = WiringDiagram.parse(w)
            inst = build_arrangement_instance(w)
            return inst.graph, inst.f
    except KeyError as exc:
        raise GeneratorError(f"{kind}: missing parameter {exc.args[0]!r}") from None
    raise GeneratorError(f"unknown generator kind {kind!r}; expected one of {KINDS}")
