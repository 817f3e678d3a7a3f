"""Core data model: multigraphs, terminal networks, demand clutters, expansions.

A network couples an undirected multigraph with a distinguished terminal set
and a clutter of terminal subsets.  The clutter partitions terminal pairs into
strong pairs (covered by no member), weak pairs (covered by exactly one) and
equivalent pairs (covered by two or more).  Nodes outside the terminal set are
inner nodes and are required to have even degree throughout the package.

All values here are immutable; operations build new ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import StructuralError


@dataclass(frozen=True, order=True)
class Edge:
    """One undirected edge record; parallel edges are distinct records."""

    id: str
    u: str
    v: str

    def other(self, node: str) -> str:
        if node == self.u:
            return self.v
        if node == self.v:
            return self.u
        raise ValueError(f"node {node!r} is not an endpoint of edge {self.id!r}")

    def ends(self) -> frozenset[str]:
        return frozenset((self.u, self.v))

    def touches(self, node: str) -> bool:
        return node == self.u or node == self.v


@dataclass(frozen=True)
class Multigraph:
    nodes: frozenset[str]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for e in self.edges:
            if e.id in seen:
                raise StructuralError(f"duplicate edge id {e.id!r}")
            seen.add(e.id)
            if e.u == e.v:
                raise StructuralError(f"edge {e.id!r} is a self-loop at {e.u!r}")
            for end in (e.u, e.v):
                if end not in self.nodes:
                    raise StructuralError(
                        f"edge {e.id!r} endpoint {end!r} is not a declared node"
                    )

    @classmethod
    def build(cls, nodes: Iterable[str], pairs: Iterable[tuple[str, str]],
              id_prefix: str = "e") -> "Multigraph":
        """Create a graph from endpoint pairs, assigning positional edge ids."""
        edges = tuple(
            Edge(f"{id_prefix}{i:03d}", u, v) for i, (u, v) in enumerate(pairs)
        )
        return cls(frozenset(nodes), edges)

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def adjacency(self) -> dict[str, list[Edge]]:
        adj: dict[str, list[Edge]] = {n: [] for n in sorted(self.nodes)}
        for e in sorted(self.edges):
            adj[e.u].append(e)
            adj[e.v].append(e)
        return adj

    def degree(self, node: str) -> int:
        return sum(1 for e in self.edges if e.touches(node))

    def sorted_nodes(self) -> list[str]:
        return sorted(self.nodes)

    def without_node(self, node: str, extra_edges: Iterable[Edge] = ()) -> "Multigraph":
        """Drop a node and its incident edges, then append replacement edges."""
        kept = tuple(e for e in self.edges if not e.touches(node))
        return Multigraph(self.nodes - {node}, kept + tuple(extra_edges))


@dataclass(frozen=True)
class Clutter:
    """A family of terminal subsets, normally pairwise incomparable."""

    members: frozenset[frozenset[str]]

    @classmethod
    def of(cls, members: Iterable[Iterable[str]]) -> "Clutter":
        return cls(frozenset(frozenset(m) for m in members))

    @classmethod
    def empty(cls) -> "Clutter":
        return cls(frozenset())

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.sorted_members())

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[frozenset[str]]:
        return sorted(self.members, key=lambda m: tuple(sorted(m)))

    def covering(self, pair: Iterable[str]) -> list[frozenset[str]]:
        p = frozenset(pair)
        return [m for m in self.sorted_members() if p <= m]

    def is_antichain(self) -> bool:
        return all(not (a < b or b < a) for a, b in combinations(self.members, 2))

    def is_simple(self) -> bool:
        return all(len(a & b) <= 1 for a, b in combinations(self.members, 2))

    def is_flat(self) -> bool:
        if any(len(m) != 2 for m in self.members):
            return False
        return self.is_triangle_free()

    def is_triangle_free(self) -> bool:
        pairs = {m for m in self.members if len(m) == 2}
        for a, b in combinations(pairs, 2):
            shared = a & b
            if len(shared) == 1:
                third = (a - shared) | (b - shared)
                if third in pairs:
                    return False
        return True

    def intersection_condition_ok(self) -> bool:
        """Every three pairwise intersecting members share one common pairwise
        intersection."""
        ms = self.sorted_members()
        for a, b, c in combinations(ms, 3):
            if a & b and a & c and b & c:
                if not (a & b == a & c == b & c):
                    return False
        return True


class PairClass(Enum):
    STRONG = "strong"
    WEAK = "weak"
    EQUIVALENT = "equivalent"


@dataclass(frozen=True)
class Network:
    graph: Multigraph
    terminals: frozenset[str]
    clutter: Clutter

    def __post_init__(self) -> None:
        missing = self.terminals - self.graph.nodes
        if missing:
            raise StructuralError(f"terminals {sorted(missing)} are not graph nodes")
        for m in self.clutter.members:
            stray = m - self.terminals
            if stray:
                raise StructuralError(
                    f"clutter member {sorted(m)} contains non-terminals {sorted(stray)}"
                )

    @classmethod
    def build(cls, nodes: Iterable[str], terminals: Iterable[str],
              pairs: Iterable[tuple[str, str]],
              clutter: Iterable[Iterable[str]] = ()) -> "Network":
        return cls(Multigraph.build(nodes, pairs), frozenset(terminals),
                   Clutter.of(clutter))

    def inner_nodes(self) -> frozenset[str]:
        return self.graph.nodes - self.terminals

    def is_inner(self, node: str) -> bool:
        return node in self.graph.nodes and node not in self.terminals

    def is_eulerian(self) -> bool:
        return all(self.graph.degree(n) % 2 == 0 for n in self.inner_nodes())

    def terminal_pairs(self) -> list[frozenset[str]]:
        return [frozenset(p) for p in combinations(sorted(self.terminals), 2)]

    def with_clutter(self, clutter: Clutter) -> "Network":
        return Network(self.graph, self.terminals, clutter)


def classify_pair(net: Network, pair: Iterable[str]) -> PairClass:
    """Class of a terminal pair: strong, weak or equivalent, by cover count."""
    p = frozenset(pair)
    if len(p) != 2:
        raise ValueError(f"expected two distinct terminals, got {sorted(p)}")
    stray = p - net.terminals
    if stray:
        raise ValueError(f"{sorted(stray)} are not terminals")
    n = len(net.clutter.covering(p))
    if n == 0:
        return PairClass.STRONG
    if n == 1:
        return PairClass.WEAK
    return PairClass.EQUIVALENT


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    items: tuple[CheckItem, ...]
    require_flat: bool = False
    warnings: tuple[str, ...] = ()

    def item(self, name: str) -> CheckItem:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        needed = {"structure", "clutter-antichain", "eulerian", "intersection-condition"}
        if self.require_flat:
            needed.add("flat")
        return all(it.passed for it in self.items if it.name in needed)

    def failed(self) -> list[CheckItem]:
        return [it for it in self.items if not it.passed]


def validate(net: Network, require_flat: bool = False) -> ValidationReport:
    """Run every network property check and report them individually.

    Structural problems (dangling endpoints, duplicate edge ids, self-loops)
    are rejected when the graph is constructed, so the structure item here
    re-verifies and normally passes; it exists so reports are self-contained.
    """
    items: list[CheckItem] = []

    structural = _structural_errors(net.graph)
    items.append(CheckItem("structure", not structural, "; ".join(structural)))

    antichain = net.clutter.is_antichain()
    items.append(CheckItem(
        "clutter-antichain", antichain,
        "" if antichain else "some member contains another"))

    odd = sorted(n for n in net.inner_nodes() if net.graph.degree(n) % 2 == 1)
    items.append(CheckItem(
        "eulerian", not odd,
        "" if not odd else f"inner nodes with odd degree: {odd}"))

    kcond = net.clutter.intersection_condition_ok()
    items.append(CheckItem(
        "intersection-condition", kcond,
        "" if kcond else "a pairwise intersecting triple disagrees on intersections"))

    flat = net.clutter.is_flat()
    if flat:
        flat_detail = ""
    elif any(len(m) != 2 for m in net.clutter.members):
        flat_detail = "some member is not a pair"
    else:
        flat_detail = "pair set contains a triangle"
    items.append(CheckItem("flat", flat, flat_detail))

    simple = net.clutter.is_simple()
    items.append(CheckItem(
        "simple", simple,
        "implied by flatness" if flat else ("" if simple else
                                            "two members share two or more terminals")))

    return ValidationReport(tuple(items), require_flat)


def _structural_errors(graph: Multigraph) -> list[str]:
    errors: list[str] = []
    seen: set[str] = set()
    for e in graph.edges:
        if e.id in seen:
            errors.append(f"duplicate edge id {e.id!r}")
        seen.add(e.id)
        if e.u == e.v:
            errors.append(f"self-loop {e.id!r}")
        for end in (e.u, e.v):
            if end not in graph.nodes:
                errors.append(f"dangling endpoint {end!r} on edge {e.id!r}")
    return errors


@dataclass(frozen=True)
class Expansion:
    """Disjoint node blocks, one per terminal; each block owns its terminal.

    Blocks need not induce connected subgraphs; nodes assigned to a block but
    unreachable from its terminal are legal and merely flagged as warnings.
    """

    blocks: tuple[tuple[str, frozenset[str]], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, Iterable[str]]) -> "Expansion":
        return cls(tuple(sorted(
            (t, frozenset(nodes) | {t}) for t, nodes in mapping.items()
        )))

    @classmethod
    def trivial(cls, net: Network) -> "Expansion":
        return cls.of({t: {t} for t in net.terminals})

    def terminals(self) -> list[str]:
        return [t for t, _ in self.blocks]

    def block(self, terminal: str) -> frozenset[str]:
        for t, b in self.blocks:
            if t == terminal:
                return b
        raise KeyError(terminal)

    def as_dict(self) -> dict[str, frozenset[str]]:
        return dict(self.blocks)

    def assigned(self) -> frozenset[str]:
        out: set[str] = set()
        for _, b in self.blocks:
            out |= b
        return frozenset(out)

    def owner(self, node: str) -> str | None:
        for t, b in self.blocks:
            if node in b:
                return t
        return None

    def is_trivial(self) -> bool:
        return all(b == {t} for t, b in self.blocks)

    def sort_key(self) -> tuple:
        return tuple((t, tuple(sorted(b))) for t, b in self.blocks)


def check_expansion(net: Network, expansion: Expansion) -> list[str]:
    """Raise on hard violations; return soft warnings (unreachable block nodes)."""
    terms = set(expansion.terminals())
    if terms != set(net.terminals):
        raise ValueError(
            f"expansion terminals {sorted(terms)} != network terminals "
            f"{sorted(net.terminals)}")
    seen: dict[str, str] = {}
    for t, block in expansion.blocks:
        if t not in block:
            raise ValueError(f"block of {t!r} does not contain its terminal")
        for n in block:
            if n not in net.graph.nodes:
                raise ValueError(f"block of {t!r} contains unknown node {n!r}")
            if n != t and n in net.terminals:
                raise ValueError(f"block of {t!r} contains foreign terminal {n!r}")
            if n in seen:
                raise ValueError(
                    f"blocks of {seen[n]!r} and {t!r} overlap at node {n!r}")
            seen[n] = t

    warnings: list[str] = []
    adj = net.graph.adjacency()
    for t, block in expansion.blocks:
        reached = {t}
        frontier = [t]
        while frontier:
            cur = frontier.pop()
            for e in adj[cur]:
                nxt = e.other(cur)
                if nxt in block and nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
        stranded = sorted(block - reached)
        if stranded:
            warnings.append(
                f"block of {t!r} contains nodes unreachable from it: {stranded}")
    return warnings


@dataclass(frozen=True)
class ExpandedNetwork:
    """Result of contracting every expansion block onto its terminal."""

    network: Network
    node_map: dict[str, str] = field(compare=False)
    edge_map: dict[str, str | None] = field(compare=False)


def expand(net: Network, expansion: Expansion) -> ExpandedNetwork:
    """Contract each block to a single terminal node named after its terminal.

    Edges internal to a block disappear; every other edge keeps its id with
    endpoints remapped.  The contracted network keeps the clutter (member sets
    read over block names, which equal terminal names) and stays Eulerian:
    inner parities are untouched and terminals carry no parity requirement.
    """
    check_expansion(net, expansion)
    node_map: dict[str, str] = {}
    for n in sorted(net.graph.nodes):
        owner = expansion.owner(n)
        node_map[n] = owner if owner is not None else n

    kept_edges: list[Edge] = []
    edge_map: dict[str, str | None] = {}
    for e in net.graph.edges:
        mu, mv = node_map[e.u], node_map[e.v]
        if mu == mv:
            edge_map[e.id] = None
            continue
        kept_edges.append(Edge(e.id, mu, mv))
        edge_map[e.id] = e.id

    nodes = frozenset(node_map.values())
    contracted = Network(Multigraph(nodes, tuple(kept_edges)),
                         net.terminals, net.clutter)
    # Contraction must not introduce failures the input did not already have:
    # block boundary degrees replace terminal degrees (no parity constraint
    # there) and inner parities are untouched.
    before = {it.name: it.passed for it in validate(net).items}
    for item in validate(contracted).items:
        if before.get(item.name, False) and not item.passed:
            raise StructuralError(
                f"contraction broke the {item.name!r} property: {item.detail}")
    return ExpandedNetwork(contracted, node_map, edge_map)
