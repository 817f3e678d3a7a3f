import pytest

from pathpack import checks, generate
from pathpack.checks import run_suites

from conftest import corpus_net, net


def test_all_suites_pass_on_corpus(corpus_net):
    items = run_suites(corpus_net)
    assert all(it.status != "fail" for it in items), items
    assert {it.suite for it in items} == set(checks.SUITE_IDS)


def test_suites_pass_on_generated_flat_instances():
    for seed in range(6):
        n = generate(5, 3, 8, clutter_density=0.7, seed=100 + seed,
                     ensure_eulerian=True, ensure_flat=True,
                     ensure_integral=True)
        items = run_suites(n)
        assert all(it.status != "fail" for it in items), (seed, items)


def test_flat_only_suites_skip_on_non_flat():
    n = net("abcd", "abcd", [("a", "b"), ("c", "d")],
            [["a", "b", "c"]])
    items = run_suites(n, ("t2", "t5"))
    assert all(it.status == "skip" for it in items)


def test_non_simple_clutter_skips_instead_of_crashing():
    n = net("abcd", "abcd", [("a", "b"), ("c", "d")],
            [["a", "b", "c"], ["a", "b", "d"]])
    items = run_suites(n)
    assert all(it.status != "fail" for it in items)
    skipped = {it.suite for it in items if it.status == "skip"}
    assert {"t8", "locking", "pivots"} <= skipped


def test_unknown_suite_rejected():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suites(net("ab", "ab", [("a", "b")]), ("nope",))


def test_suite_subset_runs_only_requested():
    n = net("ab", "ab", [("a", "b")])
    items = run_suites(n, ("t1",))
    assert {it.suite for it in items} == {"t1"}
    assert items[0].status == "pass"
