"""Shared builders and independent brute-force oracles.

The oracles here deliberately avoid the library's own algorithms: cuts come
from subset enumeration, packings from subset search over explicit path
lists, matchings from exponential recursion.  Tests freeze expected values
against these, never against the code under test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from pathpack import Network, PairClass, classify_pair, enumerate_paths
from pathpack import corpus


def net(nodes, terminals, pairs, clutter=()):
    return Network.build(nodes, terminals, pairs, clutter)


def triangle():
    return corpus.load("triangle")


def path_join():
    return corpus.load("path-join")


def parallel3():
    return corpus.load("parallel3")


def star4():
    return corpus.load("star4")


@pytest.fixture(params=corpus.names())
def corpus_net(request):
    return corpus.load(request.param)


def cut_oracle(graph, sources, sinks) -> int:
    """Minimum cut by enumerating every node subset containing the sources
    and missing the sinks."""
    src, snk = frozenset(sources), frozenset(sinks)
    others = sorted(graph.nodes - src - snk)
    best = None
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            side = src | set(extra)
            crossing = sum(
                1 for e in graph.edges if (e.u in side) != (e.v in side))
            if best is None or crossing < best:
                best = crossing
    return best


def packing_oracle(net_, paths, values) -> Fraction:
    """Best total value over edge-disjoint path subsets, by subset recursion."""
    usable = list(zip(paths, values))

    def go(idx, used, acc):
        if idx == len(usable):
            return acc
        best = go(idx + 1, used, acc)
        path, value = usable[idx]
        edges = set(path.edges)
        if not (edges & used):
            cand = go(idx + 1, used | edges, acc + value)
            if cand > best:
                best = cand
        return best

    return go(0, frozenset(), Fraction(0))


def strong_oracle(net_) -> Fraction:
    paths = [p for p in enumerate_paths(net_)
             if classify_pair(net_, p.ends()) is PairClass.STRONG]
    return packing_oracle(net_, paths, [Fraction(1)] * len(paths))


def weak_oracle(net_) -> Fraction:
    coeff = {PairClass.STRONG: Fraction(1), PairClass.WEAK: Fraction(1, 2),
             PairClass.EQUIVALENT: Fraction(0)}
    paths = enumerate_paths(net_)
    return packing_oracle(
        net_, paths, [coeff[classify_pair(net_, p.ends())] for p in paths])


def size_oracle(net_) -> Fraction:
    paths = enumerate_paths(net_)
    return packing_oracle(net_, paths, [Fraction(1)] * len(paths))


def all_packings(net_, paths=None):
    """Every edge-disjoint subset of the given paths (defaults to all)."""
    pool = enumerate_paths(net_) if paths is None else paths

    def go(idx, used, acc):
        if idx == len(pool):
            yield list(acc)
            return
        yield from go(idx + 1, used, acc)
        path = pool[idx]
        edges = set(path.edges)
        if not (edges & used):
            acc.append(path)
            yield from go(idx + 1, used | edges, acc)
            acc.pop()

    yield from go(0, frozenset(), [])


def matching_oracle(n, edges) -> int:
    """Maximum matching size by exponential edge recursion."""
    edges = sorted(set(tuple(sorted(e)) for e in edges))

    def go(idx, used):
        if idx == len(edges):
            return 0
        best = go(idx + 1, used)
        u, v = edges[idx]
        if u not in used and v not in used:
            best = max(best, 1 + go(idx + 1, used | {u, v}))
        return best

    return go(0, frozenset())


def b_matching_oracle(vertices, budgets, edges) -> int:
    """Maximum budget-respecting edge multiset by bounded recursion."""
    edges = sorted(edges)

    def go(idx, left):
        if idx == len(edges):
            return 0
        best = go(idx + 1, left)
        u, v = edges[idx]
        most = min(left[u], left[v])
        for take in range(1, most + 1):
            nxt = dict(left)
            nxt[u] -= take
            nxt[v] -= take
            best = max(best, take + go(idx + 1, nxt))
        return best

    return go(0, {v: int(budgets[v]) for v in vertices})
