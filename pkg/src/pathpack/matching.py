"""Maximum matching in general graphs and b-matching by vertex copying.

The matcher is the classic augmenting-path algorithm with blossom
contraction tracked through base pointers; cubic time, which is ample at the
sizes this package works with.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from .errors import NonIntegralMultiplicityError


def max_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Maximum matching on vertices 0..n-1; returns the mate array (-1 free)."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()

    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_blossom(v: int, anchor: int, child: int,
                     flag: list[bool]) -> None:
        while base[v] != anchor:
            flag[base[v]] = True
            flag[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root: int) -> int:
        nonlocal parent, base, in_queue
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_queue[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    anchor = lca(v, to)
                    flag = [False] * n
                    mark_blossom(v, anchor, to, flag)
                    mark_blossom(to, anchor, v, flag)
                    for i in range(n):
                        if flag[base[i]]:
                            base[i] = anchor
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    in_queue[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] != -1:
            continue
        end = find_augmenting(root)
        while end != -1:
            prev = parent[end]
            nxt = match[prev]
            match[end] = prev
            match[prev] = end
            end = nxt
    return match


def max_b_matching(
        vertices: Iterable[Hashable],
        capacities: Mapping[Hashable, int | Fraction],
        edges: Iterable[tuple[Hashable, Hashable]],
) -> tuple[int, dict[tuple[Hashable, Hashable], int]]:
    """Maximum integer edge multiset respecting per-vertex budgets.

    Edges are uncapacitated: one edge may be chosen repeatedly as long as both
    endpoint budgets allow.  Solved by blowing each vertex up into budget-many
    copies and matching the copies.  Budgets must be integral; a fractional
    one is reported with its vertex named.
    """
    verts = list(vertices)
    caps: dict[Hashable, int] = {}
    for v in verts:
        c = Fraction(capacities[v])
        if c.denominator != 1:
            raise NonIntegralMultiplicityError(
                f"budget of vertex {v!r} is {c}, not an integer")
        if c < 0:
            raise ValueError(f"negative budget at {v!r}")
        caps[v] = int(c)

    copy_index: dict[Hashable, list[int]] = {}
    counter = 0
    for v in verts:
        copy_index[v] = list(range(counter, counter + caps[v]))
        counter += caps[v]

    edge_list = sorted(set(
        (a, b) if str(a) <= str(b) else (b, a) for a, b in edges))
    blown: list[tuple[int, int]] = []
    copy_edge: dict[tuple[int, int], tuple[Hashable, Hashable]] = {}
    for a, b in edge_list:
        if a == b:
            raise ValueError(f"self-loop at {a!r}")
        for ca in copy_index[a]:
            for cb in copy_index[b]:
                blown.append((ca, cb))
                copy_edge[(ca, cb)] = (a, b)
                copy_edge[(cb, ca)] = (a, b)

    mate = max_matching(counter, blown)
    picks: dict[tuple[Hashable, Hashable], int] = {}
    total = 0
    for u in range(counter):
        v = mate[u]
        if v > u:
            key = copy_edge[(u, v)]
            picks[key] = picks.get(key, 0) + 1
            total += 1
    return total, picks
