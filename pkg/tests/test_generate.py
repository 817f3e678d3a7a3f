import pytest

from pathpack import GenerationError, generate, integrality, validate
from pathpack.fileio import dump_network


def test_same_seed_same_instance():
    a = generate(7, 4, 11, seed=42, ensure_eulerian=True, ensure_flat=True)
    b = generate(7, 4, 11, seed=42, ensure_eulerian=True, ensure_flat=True)
    assert dump_network(a) == dump_network(b)
    c = generate(7, 4, 11, seed=43, ensure_eulerian=True, ensure_flat=True)
    assert dump_network(c) != dump_network(a)


def test_eulerian_flag():
    for seed in range(25):
        n = generate(7, 3, 10, seed=seed, ensure_eulerian=True)
        assert validate(n).item("eulerian").passed


def test_flat_flag():
    for seed in range(25):
        n = generate(6, 4, 8, clutter_density=0.9, seed=seed, ensure_flat=True)
        report = validate(n, require_flat=True)
        assert report.item("flat").passed
        assert report.item("intersection-condition").passed


def test_two_terminal_flat_clutter_is_empty():
    n = generate(5, 2, 7, clutter_density=1.0, seed=3, ensure_flat=True)
    assert len(n.clutter) == 0


def test_double_edges():
    n = generate(5, 3, 6, seed=9, double_edges=True)
    ends = sorted(tuple(sorted(e.ends())) for e in n.graph.edges)
    assert len(ends) % 2 == 0
    assert ends[::2] == ends[1::2]


def test_ensure_integral():
    for seed in range(6):
        n = generate(5, 3, 7, seed=seed, ensure_eulerian=True,
                     ensure_flat=True, ensure_integral=True)
        assert integrality(n)


def test_retry_budget_reported():
    with pytest.raises(GenerationError, match="attempts"):
        # an impossible demand: integrality checks need valid solves, and a
        # zero-retry budget fails immediately
        generate(5, 3, 7, seed=0, ensure_integral=True, max_retries=0)


def test_argument_validation():
    with pytest.raises(ValueError):
        generate(3, 1, 5)
    with pytest.raises(ValueError):
        generate(3, 4, 5)
    with pytest.raises(ValueError):
        generate(3, 2, 0)


def test_connected_instances():
    for seed in range(10):
        n = generate(8, 4, 9, seed=seed)
        seen = {next(iter(n.graph.nodes))}
        frontier = list(seen)
        adj = n.graph.adjacency()
        while frontier:
            cur = frontier.pop()
            for e in adj[cur]:
                other = e.other(cur)
                if other not in seen:
                    seen.add(other)
                    frontier.append(other)
        assert seen == n.graph.nodes
