"""Seeded random instance generator with admissibility repairs.

Instances come out connected, with inner parities repaired on request and the
clutter drawn triangle-free when flatness is asked for.  Same seed, same
instance, byte for byte after serialization.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import GenerationError
from .network import Clutter, Multigraph, Network


def generate(num_nodes: int, num_terminals: int, num_edges: int,
             clutter_density: float = 0.5, seed: int = 0, *,
             ensure_eulerian: bool = False, ensure_flat: bool = False,
             ensure_integral: bool = False, double_edges: bool = False,
             max_retries: int = 200) -> Network:
    """Draw one network; resample (deterministically) until flags are met."""
    if num_terminals < 2 or num_terminals > num_nodes:
        raise ValueError("need 2 <= terminals <= nodes")
    if num_edges < 1:
        raise ValueError("need at least one edge")

    for attempt in range(max_retries):
        net = _draw(num_nodes, num_terminals, num_edges, clutter_density,
                    seed + 7919 * attempt, ensure_eulerian, ensure_flat,
                    double_edges)
        if ensure_integral:
            from .solvers import integrality
            if not integrality(net):
                continue
        return net
    raise GenerationError(
        f"no admissible instance within {max_retries} attempts for seed {seed}")


def _draw(num_nodes: int, num_terminals: int, num_edges: int,
          clutter_density: float, seed: int, ensure_eulerian: bool,
          ensure_flat: bool, double_edges: bool) -> Network:
    rng = random.Random(seed)
    terminals = [f"t{i}" for i in range(num_terminals)]
    inner = [f"x{i}" for i in range(num_nodes - num_terminals)]
    nodes = terminals + inner

    # Spanning tree first so every node can reach a terminal, then fill the
    # budget with random pairs; parallel edges are welcome.
    order = nodes[:]
    rng.shuffle(order)
    pairs: list[tuple[str, str]] = []
    for i in range(1, len(order)):
        pairs.append((rng.choice(order[:i]), order[i]))
    while len(pairs) < num_edges:
        u, v = rng.sample(nodes, 2)
        pairs.append((u, v))

    if ensure_eulerian:
        pairs = _repair_parity(pairs, terminals, inner, rng)
    if double_edges:
        pairs = pairs + pairs

    members: list[tuple[str, ...]]
    if ensure_flat:
        members = _flat_clutter(terminals, clutter_density, rng)
    else:
        members = _loose_clutter(terminals, clutter_density, rng)

    graph = Multigraph.build(nodes, pairs)
    return Network(graph, frozenset(terminals), Clutter.of(members))


def _degrees(pairs: list[tuple[str, str]]) -> dict[str, int]:
    deg: dict[str, int] = {}
    for u, v in pairs:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return deg


def _repair_parity(pairs: list[tuple[str, str]], terminals: list[str],
                   inner: list[str], rng: random.Random) -> list[tuple[str, str]]:
    """Add edges until every inner node has even degree.

    Odd inner nodes are paired up; a leftover odd inner node is tied to an odd
    terminal, which must exist because the total number of odd nodes is even.
    """
    out = pairs[:]
    deg = _degrees(out)
    odd_inner = [n for n in inner if deg.get(n, 0) % 2 == 1]
    rng.shuffle(odd_inner)
    while len(odd_inner) >= 2:
        a = odd_inner.pop()
        b = odd_inner.pop()
        out.append((a, b))
    if odd_inner:
        a = odd_inner.pop()
        odd_terms = [t for t in terminals if deg.get(t, 0) % 2 == 1]
        out.append((a, rng.choice(odd_terms)))
    return out


def _flat_clutter(terminals: list[str], density: float,
                  rng: random.Random) -> list[tuple[str, ...]]:
    """A random triangle-free pair set; empty when only two terminals exist,
    since a pair covering the whole terminal set has no usable cut data."""
    if len(terminals) < 3:
        return []
    chosen: set[frozenset[str]] = set()
    candidates = [frozenset(p) for p in combinations(sorted(terminals), 2)]
    rng.shuffle(candidates)
    for pair in candidates:
        if rng.random() >= density:
            continue
        a, b = sorted(pair)
        closes_triangle = any(
            frozenset((a, c)) in chosen and frozenset((b, c)) in chosen
            for c in terminals if c not in pair)
        if not closes_triangle:
            chosen.add(pair)
    return sorted(tuple(sorted(p)) for p in chosen)


def _loose_clutter(terminals: list[str], density: float,
                   rng: random.Random) -> list[tuple[str, ...]]:
    """Random members of size two or three forming an antichain; no further
    guarantees, so callers wanting specific classes should filter."""
    chosen: list[frozenset[str]] = []
    hopefuls = [frozenset(p) for p in combinations(sorted(terminals), 2)]
    if len(terminals) >= 3:
        hopefuls += [frozenset(p) for p in combinations(sorted(terminals), 3)]
    rng.shuffle(hopefuls)
    for m in hopefuls:
        if rng.random() >= density:
            continue
        if any(m <= c or c <= m for c in chosen):
            continue
        chosen.append(m)
    return sorted(tuple(sorted(m)) for m in chosen)
