"""Dual structures: clutter extensions, expansions, and value certificates.

The certificate bound for the strong packing optimum combines, over the
network contracted along an expansion, half the summed block cut sizes, minus
the cut surpluses of the retained weak pairs, plus the number of cross-block
path joins available; the join count is a b-matching on the line graph of
the pairing graph spanned by the retained pairs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import (
    NonIntegralMultiplicityError,
    PathpackError,
    SizeLimitError,
    TheoremViolationError,
)
from .flows import cut_degree, cut_surplus, terminal_cut_size
from .lp import Constraint, constraint, solve_lp
from .matching import max_b_matching
from .multiflow import Multiflow, TPath, path_class
from .network import (
    CheckItem,
    Clutter,
    Edge,
    Expansion,
    Multigraph,
    Network,
    PairClass,
    check_expansion,
    expand,
    validate,
)
from .solvers import enumerate_paths, solve_weak

_DEF_EXPANSION_LIMIT = 1_000_000


def expansion_limit() -> int:
    raw = os.environ.get("PATHPACK_EXPANSION_LIMIT")
    return int(raw) if raw is not None else _DEF_EXPANSION_LIMIT


def clutter_extends(terminals: Iterable[str], base: Clutter,
                    candidate: Clutter) -> bool:
    """Whether every pair strong under the base clutter stays strong under the
    candidate.  For flat clutters this coincides with pair-set inclusion."""
    terms = sorted(terminals)
    for m in (base.members | candidate.members):
        stray = m - set(terms)
        if stray:
            raise ValueError(f"member {sorted(m)} outside terminal set")
    for a, b in combinations(terms, 2):
        if not base.covering((a, b)) and candidate.covering((a, b)):
            return False
    return True


def member_key(member: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(member))


def clutter_key(clutter: Clutter) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(member_key(m) for m in clutter.members))


def enumerate_flat_extensions(clutter: Clutter) -> list[Clutter]:
    """All extensions of a flat clutter that stay flat: exactly its subsets."""
    if not clutter.is_flat():
        raise ValueError("extension enumeration needs a flat clutter")
    members = clutter.sorted_members()
    out = []
    for r in range(len(members) + 1):
        for combo in combinations(members, r):
            out.append(Clutter(frozenset(combo)))
    return sorted(out, key=clutter_key)


def expansion_leq(first: Expansion, second: Expansion) -> bool:
    """Blockwise containment, equality allowed."""
    second_blocks = [b for _, b in second.blocks]
    return all(any(block <= other for other in second_blocks)
               for _, block in first.blocks)


def expansion_lt(first: Expansion, second: Expansion) -> bool:
    return first != second and expansion_leq(first, second)


def count_expansions(net: Network, max_inner_assigned: int | None = None) -> int:
    inner = len(net.inner_nodes())
    t = len(net.terminals)
    if max_inner_assigned is None or max_inner_assigned >= inner:
        return (t + 1) ** inner
    return sum(comb(inner, j) * t ** j for j in range(max_inner_assigned + 1))


def enumerate_expansions(net: Network, max_inner_assigned: int | None = None,
                         limit: int | None = None) -> Iterator[Expansion]:
    """Every assignment of inner nodes to terminal blocks (or to none).

    Streams in lexicographic assignment order starting with the all-trivial
    expansion; refuses outright when the count exceeds the cap.
    """
    cap = expansion_limit() if limit is None else limit
    total = count_expansions(net, max_inner_assigned)
    if total > cap:
        raise SizeLimitError(
            f"{total} expansions exceed the cap {cap}; tighten the bounds")
    inner = sorted(net.inner_nodes())
    terms = sorted(net.terminals)
    options: list[str | None] = [None] + terms
    for assignment in product(options, repeat=len(inner)):
        if max_inner_assigned is not None:
            if sum(1 for a in assignment if a is not None) > max_inner_assigned:
                continue
        blocks: dict[str, set[str]] = {t: {t} for t in terms}
        for node, owner in zip(inner, assignment):
            if owner is not None:
                blocks[owner].add(node)
        yield Expansion.of(blocks)


@dataclass(frozen=True)
class PairingGraph:
    """Blocks as nodes; one edge per retained weak pair, weighted by how many
    block-internal path pairs it can contribute.  Zero-weight edges stay as
    inert records."""

    blocks: tuple[str, ...]
    edges: tuple[tuple[tuple[str, str], Fraction], ...]

    def multiplicity(self, pair: Iterable[str]) -> Fraction:
        key = member_key(pair)
        for p, mul in self.edges:
            if p == key:
                return mul
        raise KeyError(key)


@dataclass(frozen=True)
class BMatchingInstance:
    """Line graph of a pairing graph: one vertex per retained pair, adjacency
    by shared block, budgets from the pair multiplicities."""

    vertices: tuple[tuple[str, str], ...]
    budgets: tuple[Fraction, ...]
    edges: tuple[tuple[int, int], ...]

    def budget_of(self, pair: tuple[str, str]) -> Fraction:
        return self.budgets[self.vertices.index(pair)]


class _ExpansionData:
    """Cut data of one expansion, shared across extension choices."""

    def __init__(self, net: Network, expansion: Expansion):
        self.expansion = expansion
        self.expanded = expand(net, expansion).network
        self.cut_sizes = {
            t: terminal_cut_size(self.expanded, {t})
            for t in sorted(net.terminals)
        }
        self.surpluses: dict[tuple[str, ...], Fraction] = {}

    def surplus(self, member: frozenset[str]) -> Fraction:
        key = member_key(member)
        if key not in self.surpluses:
            if frozenset(member) == self.expanded.terminals:
                raise ValueError(
                    f"member {list(key)} equals the whole terminal set; "
                    "its surplus is undefined")
            self.surpluses[key] = cut_surplus(self.expanded, member)
        return self.surpluses[key]


def build_pairing_graph(net: Network, expansion: Expansion,
                        extension: Clutter) -> PairingGraph:
    """Pairing graph of an expansion and a flat extension of the clutter."""
    if not extension.is_flat():
        raise ValueError("pairing graphs need a flat extension")
    data = _ExpansionData(net, expansion)
    return _pairing_graph(data, extension)


def _pairing_graph(data: _ExpansionData, extension: Clutter) -> PairingGraph:
    edges = tuple(
        (member_key(m), data.surplus(m)) for m in extension.sorted_members())
    return PairingGraph(tuple(sorted(data.expansion.terminals())), edges)


def line_graph_instance(graph: PairingGraph) -> BMatchingInstance:
    vertices = tuple(p for p, _ in graph.edges)
    budgets = tuple(mul for _, mul in graph.edges)
    edges = tuple(
        (i, j)
        for i, j in combinations(range(len(vertices)), 2)
        if set(vertices[i]) & set(vertices[j])
    )
    return BMatchingInstance(vertices, budgets, edges)


def max_join_count(inst: BMatchingInstance) -> tuple[int, dict]:
    """Maximum b-matching on the line-graph instance, with its picks.

    Budgets must be integral; a fractional budget fails loudly with the pair
    named rather than being rounded.
    """
    for pair, b in zip(inst.vertices, inst.budgets):
        if Fraction(b).denominator != 1:
            raise NonIntegralMultiplicityError(
                f"pair {pair} has non-integral multiplicity {b}")
    idx = {i: v for i, v in enumerate(inst.vertices)}
    value, picks = max_b_matching(
        range(len(inst.vertices)),
        {i: inst.budgets[i] for i in idx},
        inst.edges,
    )
    named = {tuple(sorted((idx[a], idx[b]))): c for (a, b), c in picks.items()}
    return value, named


def certificate_value(net: Network, expansion: Expansion,
                      extension: Clutter) -> Fraction:
    """The dual bound: half the summed block cut sizes, minus retained-pair
    surpluses, plus the maximum join count, all in the contracted network."""
    data = _ExpansionData(net, expansion)
    return _certificate_value(data, extension)[0]


def _certificate_value(data: _ExpansionData,
                       extension: Clutter) -> tuple[Fraction, int, dict]:
    half_cuts = Fraction(sum(data.cut_sizes.values()), 2)
    surplus_total = sum(
        (data.surplus(m) for m in extension.sorted_members()), Fraction(0))
    joins, picks = max_join_count(
        line_graph_instance(_pairing_graph(data, extension)))
    return half_cuts - surplus_total + joins, joins, picks


@dataclass(frozen=True)
class Certificate:
    """Self-contained witness for the dual bound at one (extension, expansion)."""

    extension: tuple[tuple[str, str], ...]
    expansion: Expansion
    cut_sizes: tuple[tuple[str, int], ...]
    surpluses: tuple[tuple[tuple[str, str], Fraction], ...]
    matching: tuple[tuple[tuple[tuple[str, str], tuple[str, str]], int], ...]
    value: Fraction

    def extension_clutter(self) -> Clutter:
        return Clutter.of(self.extension)


def _make_certificate(data: _ExpansionData, extension: Clutter,
                      value: Fraction, picks: dict) -> Certificate:
    ext = tuple(sorted(member_key(m) for m in extension.members))
    return Certificate(
        extension=ext,
        expansion=data.expansion,
        cut_sizes=tuple(sorted(data.cut_sizes.items())),
        surpluses=tuple((m, data.surplus(frozenset(m))) for m in ext),
        matching=tuple(sorted((pair, c) for pair, c in picks.items())),
        value=value,
    )


def search_certificate(net: Network, max_inner_assigned: int | None = None,
                       limit: int | None = None) -> tuple[Certificate, Fraction]:
    """Minimize the dual bound over all flat extensions and all expansions.

    Ties break to the lexicographically smallest extension, then the first
    expansion in enumeration order, making the returned certificate unique.
    """
    report = validate(net, require_flat=True)
    if not report.ok:
        raise ValueError(f"certificate search needs a flat network: "
                         f"{report.failed()}")
    datas = [
        _ExpansionData(net, x)
        for x in enumerate_expansions(net, max_inner_assigned, limit)
    ]
    best: tuple[Fraction, Certificate] | None = None
    for extension in enumerate_flat_extensions(net.clutter):
        for data in datas:
            value, _, picks = _certificate_value(data, extension)
            if best is None or value < best[0]:
                best = (value, _make_certificate(data, extension, value, picks))
    assert best is not None
    return best[1], best[0]


@dataclass(frozen=True)
class VerificationReport:
    items: tuple[CheckItem, ...]

    @property
    def accepted(self) -> bool:
        return all(it.passed for it in self.items)

    def item(self, name: str) -> CheckItem:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)


def verify_certificate(net: Network, cert: Certificate, claimed: Fraction,
                       packing: Multiflow | None = None) -> VerificationReport:
    """Recompute everything a certificate asserts and itemize the outcome.

    Rejects garbage rather than crashing: every recomputation failure turns
    into a failed item.  When a packing is supplied, its strong-path count
    must equal the claimed value, closing the two-sided argument.
    """
    items: list[CheckItem] = []
    claimed = Fraction(claimed)

    def attempt(name: str, fn) -> bool:
        try:
            ok, detail = fn()
        except (PathpackError, ValueError, KeyError) as exc:
            items.append(CheckItem(name, False, str(exc)))
            return False
        items.append(CheckItem(name, bool(ok), detail))
        return bool(ok)

    ext_clutter = cert.extension_clutter()

    def check_extension():
        if not ext_clutter.is_flat():
            return False, "extension is not flat"
        if not clutter_extends(net.terminals, net.clutter, ext_clutter):
            return False, "extension re-covers a strong pair"
        return True, ""

    ext_ok = attempt("extension-valid", check_extension)

    def check_expansion_item():
        check_expansion(net, cert.expansion)
        return True, ""

    exp_ok = attempt("expansion-valid", check_expansion_item)

    if not exp_ok:
        items.append(CheckItem("recomputation", False,
                               "skipped: expansion invalid"))
        return VerificationReport(tuple(items))

    data = _ExpansionData(net, cert.expansion)

    def check_cuts():
        stated = dict(cert.cut_sizes)
        if set(stated) != set(net.terminals):
            return False, "cut sizes keyed by the wrong terminals"
        bad = {t: (stated[t], data.cut_sizes[t])
               for t in stated if stated[t] != data.cut_sizes[t]}
        return not bad, f"mismatches: {bad}" if bad else ""

    attempt("cut-sizes", check_cuts)

    def check_surpluses():
        stated = dict(cert.surpluses)
        if set(stated) != set(cert.extension):
            return False, "surpluses keyed by the wrong members"
        bad = {}
        for key, val in stated.items():
            actual = data.surplus(frozenset(key))
            if Fraction(val) != actual:
                bad[key] = (val, actual)
        return not bad, f"mismatches: {bad}" if bad else ""

    attempt("surpluses", check_surpluses)

    recomputed: dict[str, Fraction | int] = {}

    def check_matching():
        if not ext_ok:
            return False, "extension invalid"
        inst = line_graph_instance(_pairing_graph(data, ext_clutter))
        budgets = {v: Fraction(b) for v, b in zip(inst.vertices, inst.budgets)}
        spent: dict[tuple[str, str], int] = {v: 0 for v in inst.vertices}
        total = 0
        for (pa, pb), count in cert.matching:
            pa, pb = tuple(pa), tuple(pb)
            if pa not in budgets or pb not in budgets:
                return False, f"pick ({pa}, {pb}) references an unknown pair"
            if not set(pa) & set(pb):
                return False, f"picked pairs {pa} and {pb} share no block"
            if not isinstance(count, int) or count < 1:
                return False, f"bad count {count!r} for ({pa}, {pb})"
            spent[pa] += count
            spent[pb] += count
            total += count
        over = {v: s for v, s in spent.items() if s > budgets[v]}
        if over:
            return False, f"budgets exceeded: {over}"
        best, _ = max_join_count(inst)
        recomputed["joins"] = best
        if total != best:
            return False, f"witness totals {total}, maximum is {best}"
        return True, ""

    attempt("matching", check_matching)

    def check_value():
        if "joins" not in recomputed:
            return False, "join count unavailable"
        value = (Fraction(sum(data.cut_sizes.values()), 2)
                 - sum((data.surplus(frozenset(k)) for k in cert.extension),
                       Fraction(0))
                 + recomputed["joins"])
        recomputed["value"] = value
        if Fraction(cert.value) != value:
            return False, f"stated {cert.value}, recomputed {value}"
        return True, ""

    attempt("value", check_value)

    def check_bound():
        if "value" not in recomputed:
            return False, "recomputed value unavailable"
        ok = claimed <= recomputed["value"]
        return ok, "" if ok else f"{claimed} exceeds the bound {recomputed['value']}"

    attempt("bound", check_bound)

    if packing is not None:
        def check_packing():
            packing.validate(net)
            if not packing.is_integer():
                return False, "packing weights must all be one"
            strong = sum(
                1 for p in packing.paths()
                if path_class(net, p) is PairClass.STRONG)
            if strong != claimed:
                return False, f"packing carries {strong} strong paths, " \
                              f"claimed {claimed}"
            return True, ""

        attempt("packing", check_packing)

    return VerificationReport(tuple(items))


def weak_dual_value(net: Network, expansion: Expansion) -> Fraction:
    """Half the summed block boundary degrees minus half the summed surpluses
    of the clutter members, in the contracted network.  Minimizing this over
    expansions matches the fractional weak optimum."""
    if not net.clutter.is_simple():
        raise ValueError("the expansion bound is stated for simple clutters only")
    check_expansion(net, expansion)
    degrees = sum(cut_degree(net.graph, block) for _, block in expansion.blocks)
    data = _ExpansionData(net, expansion)
    surplus_total = sum(
        (data.surplus(m) for m in net.clutter.sorted_members()), Fraction(0))
    return Fraction(degrees, 2) - surplus_total / 2


def block_flow_network(net: Network, expansion: Expansion) -> Network:
    """Auxiliary network whose terminal packings are exactly the
    block-to-block path packings of the original graph.

    Every original node turns inner; each block gets one fresh terminal
    "B:t" joined to each member u by parallel edges.  The multiplicity is
    min(degree of u, block boundary) — enough that the tie never binds —
    raised by one if needed to keep u's total degree even.  Members of the
    clutter keep their meaning through the fresh terminal names.
    """
    check_expansion(net, expansion)
    apex = {t: f"B:{t}" for t in expansion.terminals()}
    for name in apex.values():
        if name in net.graph.nodes:
            raise ValueError(f"node name {name!r} collides with the graph")
    extra: list[Edge] = []
    for t, block in expansion.blocks:
        boundary = cut_degree(net.graph, block)
        for u in sorted(block):
            degree = net.graph.degree(u)
            mult = min(degree, boundary)
            if (degree + mult) % 2:
                mult += 1
            for _ in range(mult):
                extra.append(Edge(f"tie{len(extra):03d}", apex[t], u))
    graph = Multigraph(net.graph.nodes | set(apex.values()),
                       tuple(net.graph.edges) + tuple(extra))
    members = Clutter.of(
        frozenset(apex[t] for t in m) for m in net.clutter.members)
    return Network(graph, frozenset(apex.values()), members)


def lift_contracted_paths(net: Network, expansion: Expansion,
                          flow: Multiflow) -> list[tuple[tuple[str, ...],
                                                         tuple[str, ...]]]:
    """Read a contracted multiflow's paths back in the original graph.

    Contracted edges keep their ids, and paths of maximum-size multiflows
    touch each block only at their ends, so every contracted path is the same
    edge sequence in the original graph; only the end nodes move from block
    names to the actual block members.  Returns raw (nodes, edges) walks.
    """
    expanded = expand(net, expansion)
    by_id = net.graph.edge_map()
    node_map = expanded.node_map
    walks = []
    for path in flow.paths():
        first = by_id[path.edges[0]]
        start = first.u if node_map[first.u] == path.nodes[0] else first.v
        nodes = [start]
        for eid in path.edges:
            nodes.append(by_id[eid].other(nodes[-1]))
        for mapped, original in zip(path.nodes, nodes):
            if node_map[original] != mapped:
                raise ValueError(
                    f"path {path!r} re-enters a block away from its ends; "
                    "only maximum-size multiflows lift this way")
        walks.append((tuple(nodes), tuple(path.edges)))
    return walks


def block_tridents(net: Network, expansion: Expansion,
                   walks) -> list[tuple[int, int, str, str]]:
    """Trident patterns among lifted block-to-block walks.

    Ends are classified by owning block; a pivot is a node interior to both
    walks.  Returns (walk index, walk index, pivot, kind) tuples.
    """
    members = net.clutter.sorted_members()
    found = []
    for i, (p_nodes, _) in enumerate(walks):
        for j in range(i + 1, len(walks)):
            q_nodes = walks[j][0]
            shared = sorted(set(p_nodes[1:-1]) & set(q_nodes[1:-1]))
            if not shared:
                continue
            p_ends = frozenset(
                expansion.owner(n) or n for n in (p_nodes[0], p_nodes[-1]))
            q_ends = frozenset(
                expansion.owner(n) or n for n in (q_nodes[0], q_nodes[-1]))
            kinds = set()
            for a in members:
                if (p_ends <= a and not (q_ends & a)) or \
                        (q_ends <= a and not (p_ends & a)):
                    kinds.add("ordinary")
                for b in members:
                    if a != b and len(p_ends & q_ends) == 1 and (
                            (p_ends <= a and q_ends <= b)
                            or (p_ends <= b and q_ends <= a)):
                        kinds.add("simple")
            for kind in sorted(kinds):
                for pivot in shared:
                    found.append((i, j, pivot, kind))
    return found


def locked_optimum_exists(net: Network) -> bool:
    """Whether some fractional multiflow is simultaneously of maximum size,
    weak-optimal, and locks every single terminal and every clutter member.

    Decided exactly by a feasibility program over terminal-interior-free
    paths; splitting compound paths never lowers the objective or the size,
    so the restriction loses nothing.
    """
    theta_fr = solve_weak(net, "fractional").objective
    paths = [p for p in enumerate_paths(net)
             if not any(n in net.terminals for n in p.interior())]
    coeff: dict[int, Fraction] = {}
    for i, p in enumerate(paths):
        c = path_class(net, p)
        if c is PairClass.STRONG:
            coeff[i] = Fraction(1)
        elif c is PairClass.WEAK:
            coeff[i] = Fraction(1, 2)
    rows: list[Constraint] = []
    capacity: dict[str, dict[int, Fraction]] = {}
    for i, p in enumerate(paths):
        for eid in p.edges:
            capacity.setdefault(eid, {})[i] = Fraction(1)
    for _, row in sorted(capacity.items()):
        rows.append(constraint(row, "<=", 1))
    rows.append(constraint(coeff, "==", theta_fr))
    for t in sorted(net.terminals):
        ends_here = {i: Fraction(1) for i, p in enumerate(paths)
                     if t in p.ends()}
        rows.append(constraint(ends_here, "==", terminal_cut_size(net, {t})))
    for member in net.clutter.sorted_members():
        crossing = {
            i: Fraction(1) for i, p in enumerate(paths)
            if len(p.ends() & member) == 1
        }
        rows.append(constraint(crossing, "==", terminal_cut_size(net, member)))
    res = solve_lp(len(paths), {}, rows)
    return res.status == "optimal"


def _weak_objective_rows(net: Network, paths: Sequence[TPath]):
    coeff: dict[int, Fraction] = {}
    for i, p in enumerate(paths):
        c = path_class(net, p)
        if c is PairClass.STRONG:
            coeff[i] = Fraction(1)
        elif c is PairClass.WEAK:
            coeff[i] = Fraction(1, 2)
    capacity: dict[str, dict[int, Fraction]] = {}
    for i, p in enumerate(paths):
        for eid in p.edges:
            capacity.setdefault(eid, {})[i] = Fraction(1)
    return coeff, capacity


def slack_edges(net: Network) -> frozenset[str]:
    """Edges some weak-optimal fractional solution leaves unsaturated."""
    target = solve_weak(net, "fractional").objective
    paths = enumerate_paths(net)
    coeff, capacity = _weak_objective_rows(net, paths)
    base = [constraint(row, "<=", 1) for _, row in sorted(capacity.items())]
    base.append(constraint(coeff, "==", target))
    out = set()
    for e in sorted(net.graph.edges):
        usage = {i: Fraction(-1) for i in capacity.get(e.id, {})}
        res = solve_lp(len(paths), usage, base)
        if res.status != "optimal":  # pragma: no cover
            raise AssertionError(f"slack probe for {e.id} came back {res.status}")
        if res.value + 1 > 0:
            out.add(e.id)
    return frozenset(out)


def minimal_dual_solution(net: Network, verify: bool = True,
                          limit: int | None = None) -> Expansion:
    """Expansion built from optimum-slack reachability, checked to attain
    the expansion bound exactly.

    Blocks collect, for each terminal, the nodes reachable from it through
    edges that some weak-optimal solution leaves unsaturated.  Overlapping
    blocks mean the guaranteed structure is absent and raise a violation.
    With verify on, the expansion bound and the contracted weak optimum must
    both equal the fractional weak optimum, and no enlargement may lower the
    contracted optimum.  Enlargements that leave it unchanged do occur, so
    strictness is deliberately not demanded.
    """
    report = validate(net)
    if not report.ok or not net.clutter.is_simple():
        raise ValueError("minimal dual solutions need a valid simple-clutter "
                         "network")
    slack = slack_edges(net)
    adjacency = net.graph.adjacency()
    blocks: dict[str, set[str]] = {}
    owner: dict[str, str] = {}
    for t in sorted(net.terminals):
        component = {t}
        frontier = [t]
        while frontier:
            cur = frontier.pop()
            for e in adjacency[cur]:
                if e.id not in slack:
                    continue
                nxt = e.other(cur)
                if nxt not in component:
                    component.add(nxt)
                    frontier.append(nxt)
        for n in component:
            if n in owner and owner[n] != t:
                raise TheoremViolationError(
                    f"slack reachability joins terminals {owner[n]!r} and "
                    f"{t!r} at {n!r}")
            owner[n] = t
        blocks[t] = component
    expansion = Expansion.of(blocks)

    if verify:
        theta_fr = solve_weak(net, "fractional").objective
        bound = weak_dual_value(net, expansion)
        if bound != theta_fr:
            raise TheoremViolationError(
                f"expansion bound {bound} differs from the optimum {theta_fr}")
        base_theta = solve_weak(expand(net, expansion).network,
                                "fractional").objective
        if base_theta != theta_fr:
            raise TheoremViolationError(
                f"contracted weak optimum {base_theta} differs from "
                f"{theta_fr}")
        # Enlarging a block never lowers the contracted weak optimum.  A
        # strict rise for every enlargement would be the textbook mark of
        # criticality, but value-neutral enlargements do occur on valid
        # instances, so only the sound direction is checked.
        for other in enumerate_expansions(net, limit=limit):
            if not expansion_lt(expansion, other):
                continue
            theta_other = solve_weak(expand(net, other).network,
                                     "fractional").objective
            if theta_other < base_theta:
                raise TheoremViolationError(
                    f"expansion {other.sort_key()} lowered the weak optimum "
                    f"({theta_other} < {base_theta})")
    return expansion
