import random
from fractions import Fraction

import pytest

from pathpack import NonIntegralMultiplicityError
from pathpack.matching import max_b_matching, max_matching

from conftest import b_matching_oracle, matching_oracle


def matching_size(mate):
    return sum(1 for u, v in enumerate(mate) if v > u)


def test_small_matchings():
    assert matching_size(max_matching(2, [(0, 1)])) == 1
    assert matching_size(max_matching(4, [(0, 1), (1, 2), (2, 3)])) == 2
    # odd cycle forces one exposed vertex
    assert matching_size(max_matching(5, [(0, 1), (1, 2), (2, 3), (3, 4),
                                          (4, 0)])) == 2


def test_blossom_needed_cases():
    # two triangles joined by a bridge: perfect matching exists via blossoms
    edges = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]
    assert matching_size(max_matching(6, edges)) == 3
    # Petersen graph has a perfect matching
    petersen = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    assert matching_size(max_matching(10, petersen)) == 5


def test_matching_matches_oracle_on_random_graphs():
    rng = random.Random(6)
    for trial in range(80):
        n = rng.randint(2, 9)
        possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [e for e in possible if rng.random() < 0.45]
        got = matching_size(max_matching(n, edges))
        want = matching_oracle(n, edges)
        assert got == want, (trial, n, edges)


def test_matching_result_consistent():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(2, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        mate = max_matching(n, edges)
        eset = {frozenset(e) for e in edges}
        for u, v in enumerate(mate):
            if v != -1:
                assert mate[v] == u
                assert frozenset((u, v)) in eset


def test_b_matching_examples():
    value, picks = max_b_matching(["a", "b"], {"a": 1, "b": 1}, [("a", "b")])
    assert value == 1 and picks == {("a", "b"): 1}
    value, picks = max_b_matching(["a", "b"], {"a": 2, "b": 2}, [("a", "b")])
    assert value == 2 and picks == {("a", "b"): 2}
    value, _ = max_b_matching(["a"], {"a": 3}, [])
    assert value == 0


def test_b_matching_budget_zero_edge_inert():
    value, picks = max_b_matching(["a", "b", "c"], {"a": 0, "b": 2, "c": 2},
                                  [("a", "b"), ("b", "c")])
    assert value == 2 and picks == {("b", "c"): 2}


def test_b_matching_rejects_fractional_budget():
    with pytest.raises(NonIntegralMultiplicityError, match="'a'"):
        max_b_matching(["a", "b"], {"a": Fraction(1, 2), "b": 1}, [("a", "b")])


def test_b_matching_matches_oracle():
    rng = random.Random(11)
    for trial in range(60):
        n = rng.randint(2, 6)
        verts = [f"v{i}" for i in range(n)]
        budgets = {v: rng.randint(0, 3) for v in verts}
        edges = [(verts[u], verts[v]) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        value, picks = max_b_matching(verts, budgets, edges)
        assert value == b_matching_oracle(verts, budgets, edges), trial
        spent = {v: 0 for v in verts}
        for (a, b), c in picks.items():
            spent[a] += c
            spent[b] += c
        assert all(spent[v] <= budgets[v] for v in verts)
        assert sum(picks.values()) == value
