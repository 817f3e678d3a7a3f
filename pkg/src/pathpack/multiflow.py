"""Weighted path systems and the operations that rearrange them.

Paths are edge-simple walks between two distinct terminals; node repeats are
legal because switching two paths at a shared node can create them.  A
multiflow assigns each path a weight in (0, 1] subject to unit capacity on
every edge record; all arithmetic is exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    NonMaximumFlowError,
    PathpackError,
    PreconditionError,
    StructuralError,
    TheoremViolationError,
    UnusedEdgeError,
)
from .flows import terminal_cut_size
from .network import Multigraph, Network, PairClass, classify_pair


@dataclass(frozen=True)
class TPath:
    """An edge-simple walk; nodes[i], nodes[i+1] are the ends of edges[i].

    Stored in canonical orientation (the lexicographically smaller of the two
    directions) so that a walk and its reverse compare equal.
    """

    nodes: tuple[str, ...]
    edges: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.nodes) != len(self.edges) + 1 or not self.edges:
            raise StructuralError("walk shape mismatch")
        if self.nodes[0] == self.nodes[-1]:
            raise StructuralError(f"walk is closed at {self.nodes[0]!r}")
        if len(set(self.edges)) != len(self.edges):
            raise StructuralError("walk repeats an edge")
        if (tuple(reversed(self.nodes)), tuple(reversed(self.edges))) < (
                self.nodes, self.edges):
            raise StructuralError("walk is not in canonical orientation")

    @classmethod
    def make(cls, nodes: Sequence[str], edges: Sequence[str]) -> "TPath":
        fwd = (tuple(nodes), tuple(edges))
        rev = (tuple(reversed(nodes)), tuple(reversed(edges)))
        return cls(*min(fwd, rev))

    @classmethod
    def trace(cls, graph: Multigraph, start: str, edge_ids: Sequence[str]) -> "TPath":
        """Build a walk by following edge ids from a start node."""
        by_id = graph.edge_map()
        nodes = [start]
        for eid in edge_ids:
            e = by_id[eid]
            nodes.append(e.other(nodes[-1]))
        return cls.make(nodes, edge_ids)

    def ends(self) -> frozenset[str]:
        return frozenset((self.nodes[0], self.nodes[-1]))

    def interior(self) -> tuple[str, ...]:
        return self.nodes[1:-1]

    def visits(self, node: str) -> bool:
        return node in self.nodes

    def oriented_from(self, end: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
        if end == self.nodes[0]:
            return self.nodes, self.edges
        if end == self.nodes[-1]:
            return tuple(reversed(self.nodes)), tuple(reversed(self.edges))
        raise ValueError(f"{end!r} is not an end of this walk")

    def sort_key(self) -> tuple:
        return (self.nodes, self.edges)

    def __repr__(self) -> str:
        return "TPath(" + "-".join(self.nodes) + ")"


def walk(graph: Multigraph, nodes: Sequence[str],
         edges: Sequence[str] | None = None) -> TPath:
    """Convenience builder: pick edges for consecutive node pairs.

    When several parallel edges fit a hop, the unused one with the smallest id
    is taken; pass explicit edge ids to disambiguate.
    """
    if edges is not None:
        return TPath.trace(graph, nodes[0], edges)
    chosen: list[str] = []
    for a, b in zip(nodes, nodes[1:]):
        options = sorted(
            e.id for e in graph.edges
            if e.ends() == frozenset((a, b)) and e.id not in chosen
        )
        if not options:
            raise ValueError(f"no unused edge between {a!r} and {b!r}")
        chosen.append(options[0])
    return TPath.make(tuple(nodes), tuple(chosen))


class Multiflow:
    """Immutable mapping from paths to exact weights in (0, 1]."""

    def __init__(self, weights: Mapping[TPath, Fraction | int]):
        cleaned: dict[TPath, Fraction] = {}
        for path, raw in weights.items():
            w = Fraction(raw)
            if w == 0:
                continue
            if not 0 < w <= 1:
                raise ValueError(f"weight {w} out of (0, 1] for {path!r}")
            cleaned[path] = w
        self._weights = dict(sorted(cleaned.items(), key=lambda kv: kv[0].sort_key()))

    @classmethod
    def integer(cls, paths: Iterable[TPath]) -> "Multiflow":
        out: dict[TPath, Fraction] = {}
        for p in paths:
            if p in out:
                raise ValueError(f"duplicate unit path {p!r}")
            out[p] = Fraction(1)
        return cls(out)

    @classmethod
    def empty(cls) -> "Multiflow":
        return cls({})

    def paths(self) -> list[TPath]:
        return list(self._weights)

    def items(self) -> list[tuple[TPath, Fraction]]:
        return list(self._weights.items())

    def weight(self, path: TPath) -> Fraction:
        return self._weights.get(path, Fraction(0))

    def __contains__(self, path: TPath) -> bool:
        return path in self._weights

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multiflow) and self._weights == other._weights

    def __repr__(self) -> str:
        inner = ", ".join(f"{p!r}:{w}" for p, w in self._weights.items())
        return f"Multiflow({inner})"

    def size(self) -> Fraction:
        """Total weight."""
        return sum(self._weights.values(), Fraction(0))

    def is_integer(self) -> bool:
        return all(w == 1 for w in self._weights.values())

    def edge_usage(self) -> dict[str, Fraction]:
        usage: dict[str, Fraction] = {}
        for path, w in self._weights.items():
            for eid in path.edges:
                usage[eid] = usage.get(eid, Fraction(0)) + w
        return usage

    def replace(self, remove: Iterable[TPath],
                add: Mapping[TPath, Fraction]) -> "Multiflow":
        out = dict(self._weights)
        for p in remove:
            out.pop(p, None)
        for p, w in add.items():
            out[p] = out.get(p, Fraction(0)) + Fraction(w)
        return Multiflow(out)

    def validate(self, net: Network) -> None:
        by_id = net.graph.edge_map()
        for path in self._weights:
            for end in (path.nodes[0], path.nodes[-1]):
                if end not in net.terminals:
                    raise ValueError(f"path end {end!r} is not a terminal")
            for i, eid in enumerate(path.edges):
                e = by_id.get(eid)
                if e is None:
                    raise ValueError(f"unknown edge {eid!r} in {path!r}")
                if e.ends() != frozenset((path.nodes[i], path.nodes[i + 1])):
                    raise ValueError(f"edge {eid!r} does not match walk {path!r}")
        for eid, used in self.edge_usage().items():
            if used > 1:
                raise ValueError(f"edge {eid!r} overloaded: usage {used}")


_CLASS_COEFF = {
    PairClass.STRONG: Fraction(1),
    PairClass.WEAK: Fraction(1, 2),
    PairClass.EQUIVALENT: Fraction(0),
}


def path_class(net: Network, path: TPath) -> PairClass:
    return classify_pair(net, path.ends())


def is_compound(net: Network, path: TPath) -> bool:
    return any(n in net.terminals for n in path.interior())


def class_totals(net: Network, flow: Multiflow) -> dict[PairClass, Fraction]:
    totals = {c: Fraction(0) for c in PairClass}
    for path, w in flow.items():
        totals[path_class(net, path)] += w
    return totals


def weak_value(net: Network, flow: Multiflow) -> Fraction:
    """Objective of the weak problem: strong weight plus half the weak weight."""
    return sum((_CLASS_COEFF[path_class(net, p)] * w for p, w in flow.items()),
               Fraction(0))


def count_between(net: Network, flow: Multiflow, side_a: Iterable[str],
                  side_b: Iterable[str]) -> Fraction:
    """Total weight of paths with one end in each of two disjoint terminal sets."""
    a, b = frozenset(side_a), frozenset(side_b)
    if a & b:
        raise ValueError("sides overlap")
    total = Fraction(0)
    for path, w in flow.items():
        ends = path.ends()
        if len(ends & a) == 1 and len(ends & b) == 1:
            total += w
    return total


def count_within(net: Network, flow: Multiflow, side: Iterable[str]) -> Fraction:
    """Total weight of paths with both ends inside the given terminal set."""
    s = frozenset(side)
    return sum((w for p, w in flow.items() if p.ends() <= s), Fraction(0))


def split_compound_paths(net: Network, flow: Multiflow) -> Multiflow:
    """Break every path at its interior terminal visits.

    The pieces inherit the original weight, so total edge usage is unchanged
    and the operation is idempotent.  A piece whose two cut points are the
    same terminal would be a closed walk and cannot be represented; such input
    is rejected.
    """
    out: dict[TPath, Fraction] = {}
    for path, w in flow.items():
        cuts = [0]
        cuts += [i for i in range(1, len(path.nodes) - 1)
                 if path.nodes[i] in net.terminals]
        cuts.append(len(path.nodes) - 1)
        for lo, hi in zip(cuts, cuts[1:]):
            if path.nodes[lo] == path.nodes[hi]:
                raise StructuralError(
                    f"{path!r} loops back to terminal {path.nodes[lo]!r}; "
                    "the piece between consecutive terminal visits is closed")
            piece = TPath.make(path.nodes[lo:hi + 1], path.edges[lo:hi])
            out[piece] = out.get(piece, Fraction(0)) + w
    return Multiflow(out)


def _check_terminal_subset(net: Network, subset: Iterable[str]) -> frozenset[str]:
    a = frozenset(subset)
    if not a or not a < net.terminals:
        raise ValueError("need a non-empty proper terminal subset")
    return a


def locks(net: Network, flow: Multiflow, subset: Iterable[str]) -> bool:
    """True iff the flow already carries a maximum cross-flow for the subset:
    its weight of (subset, complement)-paths equals the minimum cut size.
    Compound paths are split before counting."""
    a = _check_terminal_subset(net, subset)
    hatted = split_compound_paths(net, flow)
    return count_between(net, hatted, a, net.terminals - a) == \
        terminal_cut_size(net, a)


@dataclass(frozen=True)
class AugmentingSequence:
    """Alternating paths and inner nodes witnessing that a subset is unlocked.

    paths[0] has both ends inside the subset, paths[-1] both ends outside,
    intermediate paths one end on each side; nodes[i] is shared by paths[i]
    and paths[i+1] and, for i >= 1, lies on paths[i] between nodes[i-1] and
    the path's subset-side end.
    """

    paths: tuple[TPath, ...]
    nodes: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.paths) != len(self.nodes) + 1 or len(self.paths) < 2:
            raise ValueError("sequence shape mismatch")

    def is_valid(self, net: Network, flow: Multiflow, subset: Iterable[str]) -> bool:
        a = frozenset(subset)
        rest = net.terminals - a
        ps, xs = self.paths, self.nodes
        if any(p not in flow for p in ps):
            return False
        if not (ps[0].ends() <= a and ps[-1].ends() <= rest):
            return False
        for p in ps[1:-1]:
            if not (len(p.ends() & a) == 1 and len(p.ends() & rest) == 1):
                return False
        for i, x in enumerate(xs):
            if not net.is_inner(x) or not ps[i].visits(x) or not ps[i + 1].visits(x):
                return False
        for i in range(1, len(xs)):
            if not _between(ps[i], xs[i], xs[i - 1], _subset_end(ps[i], a)):
                return False
        return True


def _subset_end(path: TPath, subset: frozenset[str]) -> str:
    inside = [n for n in (path.nodes[0], path.nodes[-1]) if n in subset]
    if len(inside) != 1:
        raise ValueError("path does not have exactly one end in the subset")
    return inside[0]


def _between(path: TPath, node: str, bound: str, end: str) -> bool:
    """Whether some occurrence of node lies on the closed segment from bound
    to the given end of the path."""
    nodes, _ = path.oriented_from(end)
    pos = [i for i, n in enumerate(nodes) if n == node]
    ref = [i for i, n in enumerate(nodes) if n == bound]
    return bool(pos) and bool(ref) and min(pos) <= max(ref)


def find_augmenting_sequence(net: Network, flow: Multiflow,
                             subset: Iterable[str]) -> AugmentingSequence | None:
    """Search a maximum integer multiflow for an augmenting sequence.

    Requires the flow to traverse every edge and to have maximum size (half
    the sum of single-terminal cut sizes); under those conditions a sequence
    exists exactly when the flow unlocks the subset.  Breadth-first over
    (path, entry-node) states with sorted tie-breaks, so the result is
    deterministic and shortest.
    """
    a = _check_terminal_subset(net, subset)
    rest = net.terminals - a
    if not flow.is_integer():
        raise PreconditionError("augmenting search needs an integer multiflow")
    usage = flow.edge_usage()
    unused = sorted(e.id for e in net.graph.edges if usage.get(e.id, 0) == 0)
    if unused:
        raise UnusedEdgeError(f"edges not traversed by the multiflow: {unused}")
    target = Fraction(sum(terminal_cut_size(net, {t}) for t in net.terminals), 2)
    if flow.size() != target:
        raise NonMaximumFlowError(
            f"multiflow size {flow.size()} != maximum {target}")

    side: dict[TPath, str] = {}
    for p in flow.paths():
        ends = p.ends()
        if ends <= a:
            side[p] = "inside"
        elif ends <= rest:
            side[p] = "outside"
        else:
            side[p] = "crossing"

    by_node: dict[str, list[TPath]] = {}
    for p in flow.paths():
        for n in set(p.nodes):
            if net.is_inner(n):
                by_node.setdefault(n, []).append(p)
    for lst in by_node.values():
        lst.sort(key=TPath.sort_key)

    start_paths = [p for p in flow.paths() if side[p] == "inside"]
    queue: deque[tuple[TPath, str | None]] = deque((p, None) for p in start_paths)
    seen: set[tuple[TPath, str | None]] = set(queue)
    parent: dict[tuple[TPath, str | None], tuple] = {}

    def pivots(path: TPath, entry: str | None) -> list[str]:
        inner = sorted({n for n in path.nodes if net.is_inner(n)})
        if entry is None:
            return inner
        end = _subset_end(path, a)
        return [x for x in inner if _between(path, x, entry, end)]

    while queue:
        path, entry = queue.popleft()
        for x in pivots(path, entry):
            for nxt in by_node.get(x, []):
                if nxt == path:
                    continue
                if side[nxt] == "outside":
                    chain: list[tuple[TPath, str]] = [(nxt, x)]
                    state = (path, entry)
                    while state is not None:
                        p, e = state
                        chain.append((p, e))
                        state = parent.get(state)
                    chain.reverse()
                    paths = tuple(p for p, _ in chain)
                    nodes = tuple(e for _, e in chain[1:])
                    return AugmentingSequence(paths, nodes)
                if side[nxt] == "crossing":
                    state = (nxt, x)
                    if state not in seen:
                        seen.add(state)
                        parent[state] = (path, entry)
                        queue.append(state)
    return None


def _split_at(path: TPath, node: str) -> tuple[tuple, tuple]:
    """Halves of a walk at the first interior occurrence of a node, each as a
    (nodes, edges) pair oriented away from the split point's side ends."""
    for i in range(1, len(path.nodes) - 1):
        if path.nodes[i] == node:
            return ((path.nodes[:i + 1], path.edges[:i]),
                    (path.nodes[i:], path.edges[i:]))
    raise ValueError(f"{node!r} is not interior to {path!r}")


def _join(head: tuple, tail: tuple, reverse_tail: bool) -> TPath:
    """Concatenate two half-walks that meet at their junction node."""
    h_nodes, h_edges = head
    t_nodes, t_edges = tail
    if reverse_tail:
        t_nodes, t_edges = tuple(reversed(t_nodes)), tuple(reversed(t_edges))
    nodes = tuple(h_nodes) + tuple(t_nodes)[1:]
    edges = tuple(h_edges) + tuple(t_edges)
    if nodes[0] == nodes[-1]:
        raise PreconditionError(
            f"recombination closes a walk at {nodes[0]!r}")
    if len(set(edges)) != len(edges):
        raise PreconditionError("recombination repeats an edge")
    return TPath.make(nodes, edges)


@dataclass(frozen=True)
class SwitchOutcome:
    """Result of a switch: the new multiflow plus the created pair in role
    order with the head end of each, so a caller can undo the switch by
    repeating it with the same variant and these heads."""

    flow: Multiflow
    created: tuple[TPath, TPath]
    heads: tuple[str, str]


def switch_paths(flow: Multiflow, first: TPath, second: TPath, node: str,
                 variant: int,
                 heads: tuple[str, str] | None = None) -> SwitchOutcome:
    """Recombine two equal-weight paths at a shared interior node.

    Orient the paths from their heads (canonical starts unless given).
    Variant 1 joins the two head halves and the two tail halves; variant 2
    joins each head half with the other path's tail half.  Repeating the
    same variant on the outcome's created pair with the outcome's heads
    restores the originals.  Splitting happens at each orientation's first
    interior occurrence of the node.
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    if first == second:
        raise ValueError("need two distinct paths")
    w1, w2 = flow.weight(first), flow.weight(second)
    if w1 == 0 or w2 == 0:
        raise ValueError("both paths must belong to the multiflow")
    if w1 != w2:
        raise ValueError(f"weights differ ({w1} vs {w2}); pre-split the caller side")
    if heads is None:
        heads = (first.nodes[0], second.nodes[0])

    def halves(path: TPath, head: str):
        nodes, edges = path.oriented_from(head)
        cut = next((i for i in range(1, len(nodes) - 1) if nodes[i] == node),
                   None)
        if cut is None:
            raise ValueError(f"{node!r} is not interior to {path!r}")
        return (nodes[:cut + 1], edges[:cut]), (nodes[cut:], edges[cut:])

    p_head, p_tail = halves(first, heads[0])
    q_head, q_tail = halves(second, heads[1])
    if variant == 1:
        new_a = _join(p_head, q_head, reverse_tail=True)
        p_tail_rev = (tuple(reversed(p_tail[0])), tuple(reversed(p_tail[1])))
        new_b = _join(p_tail_rev, q_tail, reverse_tail=False)
        out_heads = (heads[0], p_tail[0][-1])
    else:
        new_a = _join(p_head, q_tail, reverse_tail=False)
        new_b = _join(q_head, p_tail, reverse_tail=False)
        out_heads = (heads[0], heads[1])
    new_flow = flow.replace([first, second], {new_a: w1, new_b: w1})
    return SwitchOutcome(new_flow, (new_a, new_b), out_heads)


def node_pairings(graph: Multigraph, node: str) -> list[tuple[tuple[str, str], tuple[str, str]]]:
    """The three perfect pairings of the four edges at a degree-4 node."""
    incident = sorted(e.id for e in graph.edges if e.touches(node))
    if len(incident) != 4:
        raise ValueError(f"node {node!r} has degree {len(incident)}, need 4")
    a, b, c, d = incident
    return [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]


def _normalize_pairing(incident: list[str], pairing) -> list[tuple[str, str]]:
    pairs = [tuple(sorted(p)) for p in pairing]
    flat = sorted(x for p in pairs for x in p)
    if flat != sorted(incident):
        raise ValueError("pairing must cover the incident edges exactly")
    return sorted(pairs)


def joined_edge_id(first: str, second: str) -> str:
    return "~".join(sorted((first, second)))


def split_node(net: Network, node: str, pairing) -> Network:
    """Remove a degree-4 inner node, joining its edges pairwise.

    Each pair of incident edges becomes one new edge between their far
    endpoints, so all neighbor degrees and the Eulerian property survive.
    A pair whose far endpoints coincide would create a self-loop and is
    rejected.
    """
    if node not in net.graph.nodes:
        raise ValueError(f"unknown node {node!r}")
    if node in net.terminals:
        raise ValueError(f"{node!r} is a terminal; only inner nodes split")
    by_id = net.graph.edge_map()
    incident = [e.id for e in net.graph.edges if e.touches(node)]
    pairs = _normalize_pairing(incident, pairing)
    new_edges = []
    for a, b in pairs:
        u = by_id[a].other(node)
        v = by_id[b].other(node)
        if u == v:
            raise PreconditionError(
                f"pairing ({a}, {b}) would create a self-loop at {u!r}")
        nid = joined_edge_id(a, b)
        if nid in by_id:
            raise StructuralError(f"joined edge id {nid!r} already exists")
        new_edges.append(type(by_id[a])(nid, u, v))
    graph = net.graph.without_node(node, new_edges)
    return Network(graph, net.terminals, net.clutter)


def split_preserves(flow: Multiflow, node: str, pairing) -> bool:
    """Whether every traversal of the node by a flow path follows the pairing."""
    pairs = {tuple(sorted(p)) for p in pairing}
    for path in flow.paths():
        for i in range(1, len(path.nodes) - 1):
            if path.nodes[i] == node:
                step = tuple(sorted((path.edges[i - 1], path.edges[i])))
                if step not in pairs:
                    return False
        if node in (path.nodes[0], path.nodes[-1]):
            raise ValueError(f"a flow path ends at {node!r}")
    return True


def apply_split_to_multiflow(flow: Multiflow, node: str, pairing) -> Multiflow:
    """Re-embed a flow into the split network, assuming the split preserves it."""
    if not split_preserves(flow, node, pairing):
        raise PreconditionError(f"pairing does not preserve the flow at {node!r}")
    out: dict[TPath, Fraction] = {}
    for path, w in flow.items():
        nodes: list[str] = []
        edges: list[str] = []
        i = 0
        nodes.append(path.nodes[0])
        while i < len(path.edges):
            if i + 1 <= len(path.edges) - 1 and path.nodes[i + 1] == node:
                edges.append(joined_edge_id(path.edges[i], path.edges[i + 1]))
                nodes.append(path.nodes[i + 2])
                i += 2
            else:
                edges.append(path.edges[i])
                nodes.append(path.nodes[i + 1])
                i += 1
        piece = TPath.make(tuple(nodes), tuple(edges))
        out[piece] = out.get(piece, Fraction(0)) + w
    return Multiflow(out)


def rewire_crossing(flow: Multiflow, first: TPath, second: TPath, node: str,
                    amount: Fraction, drop_end: str) -> Multiflow:
    """Shift weight off a crossing pair, shrinking total size by amount/2.

    Writing the first path as running from drop_end through the shared node to
    its other end t, and the second from q through the node to r, the pair is
    replaced by (t,r)- and (t,q)-paths of weight amount/2 each, the second
    path at weight reduced by amount/2, and the first at weight reduced by
    amount.  Zero-weight leftovers are dropped.  Capacity is preserved: the
    drop_end side sheds usage, every other segment keeps its total.
    """
    eps = Fraction(amount)
    alpha, beta = flow.weight(first), flow.weight(second)
    if alpha == 0 or beta == 0:
        raise ValueError("both paths must belong to the multiflow")
    if first == second:
        raise ValueError("need two distinct paths")
    if not 0 < eps <= min(alpha, 2 * beta):
        raise ValueError(
            f"amount must lie in (0, min({alpha}, {2 * beta})], got {eps}")
    if drop_end not in (first.nodes[0], first.nodes[-1]):
        raise ValueError(f"{drop_end!r} is not an end of the first path")

    d_nodes, d_edges = first.oriented_from(drop_end)
    cut = next((i for i in range(1, len(d_nodes) - 1) if d_nodes[i] == node), None)
    if cut is None:
        raise ValueError(f"{node!r} is not interior to the first path")
    keep = (d_nodes[cut:], d_edges[cut:])  # node .. t

    s_head, s_tail = _split_at(second, node)  # q .. node | node .. r
    t_rev = (tuple(reversed(keep[0])), tuple(reversed(keep[1])))  # t .. node

    to_r = _join(t_rev, s_tail, reverse_tail=False)
    to_q = _join(t_rev, s_head, reverse_tail=True)

    return flow.replace([first, second], {
        to_r: eps / 2,
        to_q: eps / 2,
        second: beta - eps / 2,
        first: alpha - eps,
    })


@dataclass(frozen=True)
class Trident:
    """Two paths meeting at an inner pivot in one of the two sanctioned shapes.

    kind "ordinary": first has both ends inside a clutter member, second both
    ends outside it, all four ends distinct.  kind "simple": the paths span
    two different members and share exactly one end.
    """

    first: TPath
    second: TPath
    pivot: str
    kind: str
    members: tuple[frozenset[str], ...]

    def sort_key(self) -> tuple:
        return (self.first.sort_key(), self.second.sort_key(), self.pivot,
                self.kind, tuple(tuple(sorted(m)) for m in self.members))


def detect_tridents(net: Network, flow: Multiflow) -> list[Trident]:
    """All path pairs of the flow forming a trident, with their pivots."""
    found: set[Trident] = set()
    paths = flow.paths()
    members = net.clutter.sorted_members()
    for i, p in enumerate(paths):
        for q in paths[i + 1:]:
            shared = sorted(
                n for n in set(p.nodes) & set(q.nodes) if net.is_inner(n))
            if not shared:
                continue
            for x in shared:
                for a in members:
                    for inside, outside in ((p, q), (q, p)):
                        if inside.ends() <= a and not (outside.ends() & a):
                            found.add(Trident(inside, outside, x, "ordinary", (a,)))
                for ai, a in enumerate(members):
                    for b in members[ai + 1:]:
                        for pa, pb in ((p, q), (q, p)):
                            if (pa.ends() <= a and pb.ends() <= b
                                    and len(pa.ends() & pb.ends()) == 1):
                                found.add(Trident(pa, pb, x, "simple", (a, b)))
    return sorted(found, key=Trident.sort_key)


def switch_sequence_to_trident(
        net: Network, flow: Multiflow, subset: Iterable[str],
        sequence: AugmentingSequence) -> tuple[Multiflow, Trident]:
    """Turn an augmenting sequence into a crossing pair by repeated switching.

    Switches the carrier path with the next sequence path at each listed node
    except the last, each time choosing a variant that keeps an inside-path
    through the next node without decreasing the objective.  The result holds
    an ordinary trident pivoted at the last listed node.
    """
    a = frozenset(subset)
    if not sequence.is_valid(net, flow, a):
        raise ValueError("sequence is not valid for this flow and subset")
    current = flow
    carrier = sequence.paths[0]
    base_value = weak_value(net, current)
    for i in range(len(sequence.nodes) - 1):
        x = sequence.nodes[i]
        nxt_pivot = sequence.nodes[i + 1]
        consumed = sequence.paths[i + 1]
        best: tuple[Fraction, Multiflow, TPath] | None = None
        for variant in (1, 2):
            try:
                outcome = switch_paths(current, carrier, consumed, x, variant)
            except PathpackError:
                continue
            carriers = [p for p in outcome.created
                        if p.ends() <= a and p.visits(nxt_pivot)]
            if not carriers:
                continue
            val = weak_value(net, outcome.flow)
            if best is None or val > best[0]:
                best = (val, outcome.flow, carriers[0])
        if best is None or best[0] < base_value:
            raise TheoremViolationError(
                f"no objective-preserving switch at {x!r}")
        base_value, current, carrier = best
    pivot = sequence.nodes[-1]
    last = sequence.paths[-1]
    trident = Trident(carrier, last, pivot, "ordinary",
                      tuple(m for m in net.clutter.sorted_members()
                            if carrier.ends() <= m) or (a,))
    return current, trident
