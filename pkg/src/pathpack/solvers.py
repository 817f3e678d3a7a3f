"""Exact desk-scale solvers for the packing problems.

Integer problems run a branch-and-memo packing DP over edge-usage bitmasks;
fractional problems run the exact simplex over a path formulation.  Both share
one deterministic path enumeration, so integer witnesses and LP witnesses are
directly comparable.  Everything refuses loudly beyond its configured size cap
rather than truncating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import SizeLimitError, TheoremViolationError
from .lp import constraint, solve_lp
from .multiflow import Multiflow, TPath, path_class, weak_value
from .network import Network, PairClass, validate

_DEF_PATH_LIMIT = 200_000
_DEF_EDGE_LIMIT = 14


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"bad value for {name}: {raw!r}") from exc


def path_limit() -> int:
    return _env_cap("PATHPACK_PATH_LIMIT", _DEF_PATH_LIMIT)


def edge_limit() -> int:
    return _env_cap("PATHPACK_EDGE_LIMIT", _DEF_EDGE_LIMIT)


def enumerate_paths(net: Network, max_paths: int | None = None) -> list[TPath]:
    """All node-simple paths between distinct terminals, in sorted order.

    Walks that revisit a node are excluded: any such walk contains a shorter
    path with the same end pair using a subset of its edges, so packing and
    weighting optima are unaffected.  Raises rather than truncating when the
    count would exceed the cap.
    """
    cap = path_limit() if max_paths is None else max_paths
    adj = net.graph.adjacency()
    out: list[TPath] = []

    def extend(nodes: list[str], edges: list[str]) -> None:
        cur = nodes[-1]
        for e in adj[cur]:
            nxt = e.other(cur)
            if nxt in nodes:
                continue
            nodes.append(nxt)
            edges.append(e.id)
            if nxt in net.terminals and nxt > nodes[0]:
                if len(out) >= cap:
                    raise SizeLimitError(
                        f"more than {cap} paths; raise the cap to proceed")
                out.append(TPath.make(tuple(nodes), tuple(edges)))
            extend(nodes, edges)
            nodes.pop()
            edges.pop()

    for start in sorted(net.terminals):
        extend([start], [])
    return sorted(set(out), key=TPath.sort_key)


@dataclass(frozen=True)
class SolveResult:
    objective: Fraction
    witness: Multiflow
    problem: str  # "strong", "weak", "size" or "cover"
    kind: str  # "integer" or "fractional"


def _edge_bits(net: Network) -> dict[str, int]:
    return {e.id: i for i, e in enumerate(sorted(net.graph.edges))}


def _check_edge_cap(net: Network) -> None:
    n = len(net.graph.edges)
    if n > edge_limit():
        raise SizeLimitError(
            f"{n} edges exceeds the integer-search cap {edge_limit()}")


def _pack_dp(num_edges: int, paths: list[TPath], bits: list[int],
             values: list[tuple[int, ...]], cover: bool,
             zero: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]] | None:
    """Lexicographically maximal packing value over edge-disjoint path subsets.

    In cover mode every edge must be used and infeasibility returns None.
    Returns the value tuple and the chosen path indices.
    """
    by_low: list[list[int]] = [[] for _ in range(num_edges)]
    for idx, b in enumerate(bits):
        low = (b & -b).bit_length() - 1
        by_low[low].append(idx)

    memo: dict[int, tuple[tuple[int, ...], int | None] | None] = {}

    def best(mask: int):
        if mask == 0:
            return (zero, None)
        hit = memo.get(mask, "miss")
        if hit != "miss":
            return hit
        low = (mask & -mask).bit_length() - 1
        result = None
        if not cover:
            sub = best(mask & (mask - 1))
            if sub is not None:
                result = (sub[0], None)
        for idx in by_low[low]:
            b = bits[idx]
            if b & mask == b:
                sub = best(mask & ~b)
                if sub is None:
                    continue
                cand = tuple(x + y for x, y in zip(values[idx], sub[0]))
                if result is None or cand > result[0]:
                    result = (cand, idx)
        memo[mask] = result
        return result

    full = (1 << num_edges) - 1
    top = best(full)
    if top is None:
        return None
    chosen: list[int] = []
    mask = full
    while mask:
        _, idx = best(mask)
        if idx is None:
            mask &= mask - 1
        else:
            chosen.append(idx)
            mask &= ~bits[idx]
    return top[0], chosen


def _run_packing(net: Network, keep: Callable[[PairClass], bool],
                 value_of: Callable[[PairClass], tuple[int, ...]],
                 zero: tuple[int, ...], cover: bool = False):
    _check_edge_cap(net)
    bits_of = _edge_bits(net)
    paths: list[TPath] = []
    bvals: list[int] = []
    weights: list[tuple[int, ...]] = []
    for p in enumerate_paths(net):
        cls = path_class(net, p)
        if not keep(cls):
            continue
        paths.append(p)
        bvals.append(sum(1 << bits_of[e] for e in p.edges))
        weights.append(value_of(cls))
    packed = _pack_dp(len(bits_of), paths, bvals, weights, cover, zero)
    if packed is None:
        return None
    value, chosen = packed
    witness = Multiflow.integer(paths[i] for i in chosen)
    return value, witness


_STRONG_COEFF = {PairClass.STRONG: 1, PairClass.WEAK: 0, PairClass.EQUIVALENT: 0}
_WEAK_COEFF2 = {PairClass.STRONG: 2, PairClass.WEAK: 1, PairClass.EQUIVALENT: 0}


def _fractional(net: Network, problem: str) -> SolveResult:
    paths = enumerate_paths(net)
    if problem == "strong":
        coeff = {i: Fraction(1) for i, p in enumerate(paths)
                 if path_class(net, p) is PairClass.STRONG}
    else:
        coeff = {}
        for i, p in enumerate(paths):
            c = path_class(net, p)
            if c is PairClass.STRONG:
                coeff[i] = Fraction(1)
            elif c is PairClass.WEAK:
                coeff[i] = Fraction(1, 2)
    keep = sorted(coeff)
    remap = {old: new for new, old in enumerate(keep)}
    rows: dict[str, dict[int, Fraction]] = {}
    for old in keep:
        for eid in paths[old].edges:
            rows.setdefault(eid, {})[remap[old]] = Fraction(1)
    cons = [constraint(r, "<=", 1) for _, r in sorted(rows.items())]
    res = solve_lp(len(keep), {remap[o]: coeff[o] for o in keep}, cons)
    if res.status != "optimal":  # pragma: no cover - capacity LPs are bounded
        raise AssertionError(f"capacity LP came back {res.status}")
    witness = Multiflow({paths[o]: res[remap[o]] for o in keep})
    witness.validate(net)
    return SolveResult(res.value, witness, problem, "fractional")


def solve_strong(net: Network, mode: str = "integer") -> SolveResult:
    """Largest edge-disjoint packing of strong paths, exact in both modes."""
    if mode == "fractional":
        return _fractional(net, "strong")
    out = _run_packing(net, lambda c: c is PairClass.STRONG,
                       lambda c: (1,), (0,))
    value, witness = out
    return SolveResult(Fraction(value[0]), witness, "strong", "integer")


def solve_weak(net: Network, mode: str = "integer") -> SolveResult:
    """Maximize strong weight plus half of weak weight over multiflows."""
    if mode == "fractional":
        return _fractional(net, "weak")
    out = _run_packing(net, lambda c: c is not PairClass.EQUIVALENT,
                       lambda c: (_WEAK_COEFF2[c],), (0,))
    value, witness = out
    return SolveResult(Fraction(value[0], 2), witness, "weak", "integer")


def max_path_packing(net: Network) -> SolveResult:
    """Maximum number of edge-disjoint terminal-to-terminal paths."""
    out = _run_packing(net, lambda c: True, lambda c: (1,), (0,))
    value, witness = out
    return SolveResult(Fraction(value[0]), witness, "size", "integer")


def max_cover_packing(net: Network) -> SolveResult | None:
    """Largest packing that traverses every edge, or None when impossible."""
    out = _run_packing(net, lambda c: True, lambda c: (1,), (0,), cover=True)
    if out is None:
        return None
    value, witness = out
    return SolveResult(Fraction(value[0]), witness, "cover", "integer")


def weak_optimal_maximum(net: Network) -> SolveResult:
    """Integer multiflow maximizing the weak objective, then its path count.

    Callers wanting a maximum-size witness should compare the witness size
    against half the summed single-terminal cut sizes themselves; on some
    non-integral instances no integer multiflow attains both at once.
    """
    out = _run_packing(net, lambda c: True,
                       lambda c: (_WEAK_COEFF2[c], 1), (0, 0))
    (twice_weak, _), witness = out
    return SolveResult(Fraction(twice_weak, 2), witness, "weak", "integer")


def common_solution(net: Network) -> SolveResult:
    """An integer multiflow optimal for the weak problem whose strong-path
    count simultaneously attains the strong optimum.

    Searches by maximizing (weak objective, strong count) lexicographically;
    a shortfall against the strong optimum is reported as a violation because
    such a multiflow always exists on valid input.
    """
    report = validate(net)
    if not report.ok:
        raise ValueError(f"not a valid network: {report.failed()}")
    out = _run_packing(
        net, lambda c: c is not PairClass.EQUIVALENT,
        lambda c: (_WEAK_COEFF2[c], _STRONG_COEFF[c]), (0, 0))
    (twice_weak, strong_count), witness = out
    eta = solve_strong(net, "integer").objective
    if strong_count != eta:
        raise TheoremViolationError(
            f"best weak-optimal multiflow carries {strong_count} strong paths, "
            f"strong optimum is {eta}")
    result = SolveResult(Fraction(twice_weak, 2), witness, "weak", "integer")
    assert weak_value(net, witness) == result.objective
    return result


def integrality(net: Network) -> bool:
    """Whether the fractional and integer weak optima coincide."""
    return solve_weak(net, "fractional").objective == \
        solve_weak(net, "integer").objective


def fractionality(net: Network, max_denominator: int) -> int | None:
    """Least weight denominator achievable by a weak-optimal solution.

    Certified by exhaustive denominator-constrained search up to the given
    bound; None when no denominator up to the bound suffices.  Integral
    networks answer 1.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be positive")
    num_edges = len(net.graph.edges)
    if num_edges > 10:
        raise SizeLimitError(
            "denominator search is capped at 10 edges; this instance has "
            f"{num_edges}")
    target = solve_weak(net, "fractional").objective
    paths = enumerate_paths(net)
    bits_of = _edge_bits(net)
    coeff2: list[int] = []
    masks: list[list[int]] = []
    usable: list[TPath] = []
    for p in paths:
        c = _WEAK_COEFF2[path_class(net, p)]
        if c == 0:
            continue
        usable.append(p)
        coeff2.append(c)
        masks.append([bits_of[e] for e in p.edges])
    order = sorted(range(len(usable)), key=lambda i: -coeff2[i])

    for denom in range(1, max_denominator + 1):
        scaled = 2 * denom * target
        if scaled.denominator != 1:
            continue
        goal = scaled.numerator
        memo: dict[tuple[int, tuple[int, ...]], int] = {}

        def best(pos: int, caps: tuple[int, ...]) -> int:
            if pos == len(order):
                return 0
            key = (pos, caps)
            hit = memo.get(key)
            if hit is not None:
                return hit
            idx = order[pos]
            most = min(caps[e] for e in masks[idx])
            top = 0
            for take in range(most, -1, -1):
                if take:
                    nxt = list(caps)
                    for e in masks[idx]:
                        nxt[e] -= take
                    val = coeff2[idx] * take + best(pos + 1, tuple(nxt))
                else:
                    val = best(pos + 1, caps)
                if val > top:
                    top = val
            memo[key] = top
            return top

        if best(0, tuple([denom] * num_edges)) == goal:
            return denom
    return None
