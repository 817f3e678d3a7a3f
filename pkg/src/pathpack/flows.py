"""Unit-capacity max-flow with cut witnesses, and derived cut quantities.

Every parallel edge is its own capacity-one unit, so flow values coincide with
counts of edge-disjoint paths and decompositions stay in one-to-one
correspondence with path sets.  Augmentation explores edges in lexicographic
id order, which makes the returned witnesses reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .network import Multigraph, Network


@dataclass(frozen=True)
class CutResult:
    """Max-flow value together with a witnessing minimum cut."""

    value: int
    cut_edges: frozenset[str]
    source_side: frozenset[str]


def max_flow(graph: Multigraph, sources: Iterable[str], sinks: Iterable[str]) -> CutResult:
    """Maximum number of edge-disjoint paths from sources to sinks.

    Edges are undirected with capacity one each.  Returns the flow value, the
    residual-reachable source side and the saturated crossing edges; strong
    duality makes value == len(cut_edges).
    """
    src = frozenset(sources)
    snk = frozenset(sinks)
    if not src or not snk:
        raise ValueError("sources and sinks must both be non-empty")
    if src & snk:
        raise ValueError(f"sources and sinks overlap: {sorted(src & snk)}")
    for n in src | snk:
        if n not in graph.nodes:
            raise ValueError(f"unknown node {n!r}")

    adj = graph.adjacency()
    # flow[e] is -1, 0 or +1; +1 means flow runs from e.u to e.v.
    flow: dict[str, int] = {e.id: 0 for e in graph.edges}

    def residual_bfs() -> tuple[dict[str, tuple[str, str] | None], set[str]]:
        parent: dict[str, tuple[str, str] | None] = {s: None for s in sorted(src)}
        frontier = sorted(src)
        while frontier:
            nxt: list[str] = []
            for node in frontier:
                for e in adj[node]:
                    signed = flow[e.id] if node == e.u else -flow[e.id]
                    if signed > 0:
                        continue  # edge already carries flow this way
                    other = e.other(node)
                    if other in parent:
                        continue
                    parent[other] = (node, e.id)
                    nxt.append(other)
            frontier = sorted(nxt)
        return parent, set(parent)

    value = 0
    while True:
        parent, reached = residual_bfs()
        hit = sorted(reached & snk)
        if not hit:
            break
        node = hit[0]
        while parent[node] is not None:
            prev, eid = parent[node]
            e = graph.edge(eid)
            flow[eid] += 1 if prev == e.u else -1
            node = prev
        value += 1

    _, reached = residual_bfs()
    cut = frozenset(
        e.id for e in graph.edges
        if (e.u in reached) != (e.v in reached)
    )
    if len(cut) != value:  # pragma: no cover - duality guard
        raise AssertionError(
            f"flow/cut mismatch: value {value}, cut size {len(cut)}")
    return CutResult(value, cut, frozenset(reached))


def cut_degree(graph: Multigraph, node_set: Iterable[str]) -> int:
    """Number of edges with exactly one endpoint inside the given node set."""
    xs = frozenset(node_set)
    if not xs or not xs < graph.nodes:
        raise ValueError("node set must be non-empty and proper")
    return sum(1 for e in graph.edges if (e.u in xs) != (e.v in xs))


def terminal_cut_size(net: Network, subset: Iterable[str]) -> int:
    """Size of a minimum edge cut separating the terminal subset from the rest."""
    a = frozenset(subset)
    if not a:
        raise ValueError("terminal subset must be non-empty")
    stray = a - net.terminals
    if stray:
        raise ValueError(f"{sorted(stray)} are not terminals")
    rest = net.terminals - a
    if not rest:
        raise ValueError("terminal subset must be proper")
    return max_flow(net.graph, a, rest).value


def cut_surplus(net: Network, subset: Iterable[str]) -> Fraction:
    """Half the gap between summed single-terminal cuts over the subset and
    its joint cut.

    Always non-negative; equals the largest number of subset-internal paths a
    locked maximum multiflow can carry.  Integral whenever inner degrees are
    even, half-integral otherwise; stored exactly either way.
    """
    a = frozenset(subset)
    singles = sum(terminal_cut_size(net, {t}) for t in a)
    joint = terminal_cut_size(net, a)
    surplus = Fraction(singles - joint, 2)
    if surplus < 0:  # pragma: no cover - submodularity guard
        raise AssertionError(f"negative surplus for {sorted(a)}")
    return surplus
