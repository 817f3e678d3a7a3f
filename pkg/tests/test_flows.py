import pytest
from hypothesis import given, settings, strategies as st

from pathpack import cut_degree, cut_surplus, generate, max_flow, terminal_cut_size

from conftest import cut_oracle, net, star4, triangle


def test_max_flow_parallel_edges():
    n = net(["t", "s"], ["t", "s"], [("t", "s")] * 3)
    result = max_flow(n.graph, {"t"}, {"s"})
    assert result.value == 3
    assert len(result.cut_edges) == 3


def test_max_flow_triangle_and_star():
    tri = triangle()
    assert max_flow(tri.graph, {"a"}, {"b", "c"}).value == 2
    st4 = star4()
    result = max_flow(st4.graph, {"s", "t"}, {"u", "v"})
    assert result.value == 2
    assert result.cut_edges == frozenset({"e000", "e001"})  # the s,t spokes


def test_max_flow_cut_separates():
    st4 = star4()
    result = max_flow(st4.graph, {"s"}, {"t", "u", "v"})
    assert result.value == 1
    assert "s" in result.source_side and "t" not in result.source_side


def test_max_flow_argument_errors():
    tri = triangle()
    with pytest.raises(ValueError, match="overlap"):
        max_flow(tri.graph, {"a"}, {"a", "b"})
    with pytest.raises(ValueError, match="non-empty"):
        max_flow(tri.graph, set(), {"a"})
    with pytest.raises(ValueError, match="unknown node"):
        max_flow(tri.graph, {"zz"}, {"a"})


def test_max_flow_matches_cut_oracle_on_random_graphs():
    for seed in range(40):
        n = generate(6, 3, 10, seed=seed)
        nodes = sorted(n.graph.nodes)
        src, snk = {nodes[0]}, {nodes[-1]}
        got = max_flow(n.graph, src, snk).value
        assert got == cut_oracle(n.graph, src, snk), seed


def test_terminal_cut_examples():
    tri = triangle()
    assert terminal_cut_size(tri, {"a"}) == 2
    assert terminal_cut_size(tri, {"a", "b"}) == 2
    assert terminal_cut_size(star4(), {"s", "t"}) == 2
    with pytest.raises(ValueError, match="proper"):
        terminal_cut_size(tri, {"a", "b", "c"})
    with pytest.raises(ValueError, match="non-empty"):
        terminal_cut_size(tri, set())
    with pytest.raises(ValueError, match="not terminals"):
        terminal_cut_size(star4(), {"x"})


def test_cut_surplus_examples():
    tri = triangle()
    assert cut_surplus(tri, {"a"}) == 0
    assert cut_surplus(tri, {"a", "b"}) == 1
    assert cut_surplus(star4(), {"s", "t"}) == 0


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_cut_surplus_never_negative(seed):
    n = generate(6, 4, 9, seed=seed, ensure_eulerian=True)
    from itertools import combinations
    terms = sorted(n.terminals)
    for r in range(1, len(terms)):
        for subset in combinations(terms, r):
            assert cut_surplus(n, subset) >= 0


def test_cut_surplus_integral_on_eulerian():
    for seed in range(15):
        n = generate(7, 4, 11, seed=seed, ensure_eulerian=True)
        from itertools import combinations
        for subset in combinations(sorted(n.terminals), 2):
            assert cut_surplus(n, subset).denominator == 1


def test_cut_degree_examples():
    tri = triangle()
    assert cut_degree(tri.graph, {"a"}) == 2
    assert cut_degree(tri.graph, {"a", "b"}) == 2
    st4 = star4()
    assert cut_degree(st4.graph, {"s", "x"}) == 3
    with pytest.raises(ValueError):
        cut_degree(tri.graph, set(tri.graph.nodes))


def test_max_flow_deterministic_witness():
    st4 = star4()
    first = max_flow(st4.graph, {"s", "t"}, {"u", "v"})
    second = max_flow(st4.graph, {"s", "t"}, {"u", "v"})
    assert first == second
