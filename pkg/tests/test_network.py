import pytest

from pathpack import (
    Clutter,
    Expansion,
    Multigraph,
    Network,
    PairClass,
    StructuralError,
    check_expansion,
    classify_pair,
    expand,
    validate,
)

from conftest import net, parallel3, star4


def test_structural_rejections():
    with pytest.raises(StructuralError, match="self-loop"):
        Multigraph.build(["a"], [("a", "a")])
    with pytest.raises(StructuralError, match="not a declared node"):
        Multigraph.build(["a", "b"], [("a", "c")])
    with pytest.raises(StructuralError, match="duplicate edge id"):
        Multigraph(frozenset(["a", "b"]), Multigraph.build(
            ["a", "b"], [("a", "b")]).edges * 2)
    with pytest.raises(StructuralError, match="non-terminals"):
        net("ab", "a", [("a", "b")], [["a", "b"]])
    with pytest.raises(StructuralError, match="not graph nodes"):
        Network(Multigraph.build(["a"], []), frozenset(["z"]), Clutter.empty())


def test_validate_empty_clutter_all_pass():
    n = net(["t", "s"], ["t", "s"], [("t", "s")] * 3)
    report = validate(n, require_flat=True)
    assert report.ok
    assert all(item.passed for item in report.items)


def test_validate_triangle_clutter_fails_flat_only():
    n = net("abc", "abc", [("a", "b"), ("b", "c"), ("a", "c")],
            [["a", "b"], ["b", "c"], ["a", "c"]])
    report = validate(n)
    assert not report.item("flat").passed
    assert report.item("intersection-condition").passed is False
    assert report.item("simple").passed
    assert report.ok is False  # intersection condition fails too


def test_validate_eulerian_failure():
    # triangle of terminals with a degree-3 inner node attached everywhere
    n = net("abcx", "abc",
            [("a", "b"), ("b", "c"), ("a", "c"),
             ("a", "x"), ("b", "x"), ("c", "x")],
            [["a", "b"], ["b", "c"]])
    report = validate(n)
    assert not report.item("eulerian").passed
    assert "x" in report.item("eulerian").detail


def test_validate_antichain_and_simple():
    n = net("abcd", "abcd", [("a", "b")], [["a", "b"], ["a", "b", "c"]])
    report = validate(n)
    assert not report.item("clutter-antichain").passed
    n2 = net("abcd", "abcd", [("a", "b")], [["a", "b", "c"], ["a", "b", "d"]])
    report2 = validate(n2)
    assert report2.item("clutter-antichain").passed
    assert not report2.item("simple").passed
    assert report2.item("flat").detail == "some member is not a pair"


def test_intersection_condition_matches_bruteforce():
    from itertools import combinations

    cases = [
        [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"]],
        [["a", "b"], ["b", "c"], ["a", "c"]],
        [["a", "b"], ["c", "d"]],
        [["a", "b", "c"], ["c", "d"], ["a", "d"]],
    ]
    for members in cases:
        clutter = Clutter.of(members)
        brute = True
        for x, y, z in combinations(clutter.members, 3):
            if x & y and x & z and y & z and not (x & y == x & z == y & z):
                brute = False
        assert clutter.intersection_condition_ok() == brute


def test_flat_implies_simple_reflected():
    n = net("abc", "abc", [("a", "b")], [["a", "b"], ["b", "c"]])
    report = validate(n)
    assert report.item("flat").passed
    assert report.item("simple").passed
    assert report.item("simple").detail == "implied by flatness"


def test_classify_pair_examples():
    n1 = net("abc", "abc", [("a", "b")], [["a", "b"]])
    assert classify_pair(n1, ("a", "c")) is PairClass.STRONG
    assert classify_pair(n1, ("a", "b")) is PairClass.WEAK
    n2 = net("abcd", "abcd", [("a", "b")], [["a", "b", "c"], ["a", "b", "d"]])
    assert classify_pair(n2, ("a", "b")) is PairClass.EQUIVALENT
    with pytest.raises(ValueError, match="not terminals"):
        classify_pair(net("abx", "ab", [("a", "x"), ("x", "b")]), ("a", "x"))


def test_classify_partitions_and_flat_has_no_equivalents():
    n = star4()
    classes = {frozenset(p): classify_pair(n, p)
               for p in n.terminal_pairs()}
    assert len(classes) == 6
    assert PairClass.EQUIVALENT not in classes.values()
    assert classes[frozenset(("s", "t"))] is PairClass.WEAK


def test_expansion_validation():
    n = star4()
    good = Expansion.of({"s": {"s", "x"}, "t": {"t"}, "u": {"u"}, "v": {"v"}})
    assert check_expansion(n, good) == []
    with pytest.raises(ValueError, match="overlap"):
        check_expansion(n, Expansion.of(
            {"s": {"s", "x"}, "t": {"t", "x"}, "u": {"u"}, "v": {"v"}}))
    with pytest.raises(ValueError, match="foreign terminal"):
        check_expansion(n, Expansion.of(
            {"s": {"s", "t"}, "t": {"t"}, "u": {"u"}, "v": {"v"}}))
    with pytest.raises(ValueError, match="unknown node"):
        check_expansion(n, Expansion.of(
            {"s": {"s", "zz"}, "t": {"t"}, "u": {"u"}, "v": {"v"}}))


def test_expansion_unreachable_node_is_a_warning():
    n = net("abxy", "ab", [("a", "b"), ("a", "x"), ("x", "a"), ("b", "y"),
                           ("y", "b")])
    w = check_expansion(n, Expansion.of({"a": {"a", "y"}, "b": {"b"}}))
    assert len(w) == 1 and "unreachable" in w[0]


def test_expand_trivial_is_isomorphic():
    for build in (parallel3, star4):
        n = build()
        out = expand(n, Expansion.trivial(n))
        assert out.network.graph.nodes == n.graph.nodes
        assert sorted(e.ends() for e in out.network.graph.edges) == \
            sorted(e.ends() for e in n.graph.edges)
        assert out.network.clutter == n.clutter


def test_expand_star_absorbs_hub():
    n = star4()
    out = expand(n, Expansion.of(
        {"s": {"s", "x"}, "t": {"t"}, "u": {"u"}, "v": {"v"}}))
    contracted = out.network
    assert contracted.inner_nodes() == frozenset()
    ends = sorted(tuple(sorted(e.ends())) for e in contracted.graph.edges)
    assert ends == [("s", "t"), ("s", "u"), ("s", "v")]
    # the absorbed spoke is gone, the rest keep their ids
    assert sum(1 for v in out.edge_map.values() if v is None) == 1


def test_expand_degree_bookkeeping():
    n = star4()
    x = Expansion.of({"s": {"s", "x"}, "t": {"t"}, "u": {"u"}, "v": {"v"}})
    out = expand(n, x)
    from pathpack import cut_degree
    for t, block in x.blocks:
        assert out.network.graph.degree(t) == cut_degree(n.graph, block)


def test_expand_path_noop_block():
    n = net("abc", "abc", [("a", "b"), ("b", "c")],
            [["a", "b"], ["b", "c"]])
    out = expand(n, Expansion.of({"a": {"a"}, "b": {"b"}, "c": {"c"}}))
    assert sorted(e.ends() for e in out.network.graph.edges) == \
        sorted(e.ends() for e in n.graph.edges)
