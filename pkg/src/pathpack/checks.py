"""Named invariant suites runnable against any instance.

Each suite re-derives a structural guarantee with independent machinery and
reports pass/fail/skip items; skip means the instance legitimately lacks the
integer witness a clause needs (the fractional clauses never skip).  Suite ids
are short stable tokens for the command line; descriptions say what is
actually checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .dual import (
    certificate_value,
    enumerate_expansions,
    enumerate_flat_extensions,
    locked_optimum_exists,
    minimal_dual_solution,
    weak_dual_value,
)
from .errors import PathpackError
from .flows import terminal_cut_size
from .multiflow import detect_tridents, find_augmenting_sequence, locks
from .network import Network, expand
from .solvers import (
    common_solution,
    integrality,
    max_cover_packing,
    solve_strong,
    solve_weak,
    weak_optimal_maximum,
)

SUITE_IDS = ("t1", "t2", "t5", "t8", "locking", "pivots")


@dataclass(frozen=True)
class SuiteItem:
    suite: str
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""


def run_suites(net: Network, suites: tuple[str, ...] = SUITE_IDS,
               max_inner: int | None = None) -> list[SuiteItem]:
    table: dict[str, Callable[[Network, int | None], list[SuiteItem]]] = {
        "t1": _suite_common_solution,
        "t2": _suite_expansion_monotonicity,
        "t5": _suite_certificate_bound,
        "t8": _suite_expansion_bound,
        "locking": _suite_locking,
        "pivots": _suite_pivots,
    }
    out: list[SuiteItem] = []
    for sid in suites:
        if sid not in table:
            raise ValueError(f"unknown suite {sid!r}; have {SUITE_IDS}")
        try:
            out.extend(table[sid](net, max_inner))
        except PathpackError as exc:
            out.append(SuiteItem(sid, "run", "fail", str(exc)))
    return out


def _suite_common_solution(net: Network, _max_inner) -> list[SuiteItem]:
    """A single integer multiflow attains the weak and strong optima at once."""
    result = common_solution(net)
    theta = solve_weak(net, "integer").objective
    ok = result.objective == theta
    return [SuiteItem("t1", "common-solution", "pass" if ok else "fail",
                      f"weak optimum {theta}, witness reaches {result.objective}")]


def _pairs(net: Network, max_inner):
    extensions = enumerate_flat_extensions(net.clutter)
    expansions = list(enumerate_expansions(net, max_inner))
    return extensions, expansions


def _suite_expansion_monotonicity(net: Network, max_inner) -> list[SuiteItem]:
    """Contracting blocks and shrinking the clutter never lowers the strong
    optimum."""
    if not net.clutter.is_flat():
        return [SuiteItem("t2", "monotonicity", "skip", "clutter is not flat")]
    eta = solve_strong(net, "integer").objective
    extensions, expansions = _pairs(net, max_inner)
    for ext in extensions:
        for x in expansions:
            contracted = expand(net, x).network.with_clutter(ext)
            value = solve_strong(contracted, "integer").objective
            if value < eta:
                return [SuiteItem(
                    "t2", "monotonicity", "fail",
                    f"extension {sorted(map(sorted, ext.members))} with "
                    f"expansion {x.sort_key()} gives {value} < {eta}")]
    return [SuiteItem("t2", "monotonicity", "pass",
                      f"{len(extensions) * len(expansions)} pairs checked")]


def _suite_certificate_bound(net: Network, max_inner) -> list[SuiteItem]:
    """The certificate value bounds the strong optimum everywhere, with
    equality at the minimum on instances whose weak optima coincide."""
    if not net.clutter.is_flat():
        return [SuiteItem("t5", "certificate", "skip", "clutter is not flat")]
    eta = solve_strong(net, "integer").objective
    extensions, expansions = _pairs(net, max_inner)
    least: Fraction | None = None
    for ext in extensions:
        for x in expansions:
            value = certificate_value(net, x, ext)
            if least is None or value < least:
                least = value
            if eta > value:
                return [SuiteItem(
                    "t5", "upper-bound", "fail",
                    f"{eta} exceeds the bound {value} at "
                    f"{sorted(map(sorted, ext.members))}, {x.sort_key()}")]
    items = [SuiteItem("t5", "upper-bound", "pass",
                       f"strong optimum {eta}, least bound {least}")]
    if integrality(net):
        ok = least == eta
        items.append(SuiteItem(
            "t5", "equality", "pass" if ok else "fail",
            f"least bound {least} vs strong optimum {eta}"))
    else:
        items.append(SuiteItem("t5", "equality", "skip",
                               "weak optima differ; equality not asserted"))
    return items


def _suite_expansion_bound(net: Network, max_inner) -> list[SuiteItem]:
    """The fractional weak optimum equals the least expansion bound, and the
    bound chain holds expansion by expansion."""
    if not net.clutter.is_simple():
        return [SuiteItem("t8", "expansion-bound", "skip",
                          "clutter is not simple")]
    theta_fr = solve_weak(net, "fractional").objective
    least: Fraction | None = None
    for x in enumerate_expansions(net, max_inner):
        bound = weak_dual_value(net, x)
        contracted_theta = solve_weak(expand(net, x).network,
                                      "fractional").objective
        if not theta_fr <= contracted_theta <= bound:
            return [SuiteItem(
                "t8", "chain", "fail",
                f"{theta_fr} <= {contracted_theta} <= {bound} fails at "
                f"{x.sort_key()}")]
        if least is None or bound < least:
            least = bound
    ok = least == theta_fr
    return [SuiteItem("t8", "expansion-bound", "pass" if ok else "fail",
                      f"least bound {least}, weak optimum {theta_fr}")]


def _suite_locking(net: Network, max_inner) -> list[SuiteItem]:
    """At the least dual solution, a weak-optimal flow of the contracted
    network locks every block and member; augmenting-sequence search agrees
    with the locking predicate on a full-coverage maximum packing."""
    if not net.clutter.is_simple():
        return [SuiteItem("locking", "locked-optimum", "skip",
                          "clutter is not simple")]
    items: list[SuiteItem] = []
    expansion = minimal_dual_solution(net, verify=True, limit=None)
    contracted = expand(net, expansion).network
    ok = locked_optimum_exists(contracted)
    items.append(SuiteItem(
        "locking", "locked-optimum", "pass" if ok else "fail",
        f"blocks {expansion.sort_key()}"))

    cover = max_cover_packing(contracted)
    maximum = Fraction(
        sum(terminal_cut_size(contracted, {t}) for t in contracted.terminals), 2)
    if cover is None or cover.objective != maximum:
        items.append(SuiteItem(
            "locking", "augmenting-consistency", "skip",
            "no full-coverage maximum packing on this instance"))
        return items
    flow = cover.witness
    for member in contracted.clutter.sorted_members():
        locked = locks(contracted, flow, member)
        sequence = find_augmenting_sequence(contracted, flow, member)
        if locked != (sequence is None):
            items.append(SuiteItem(
                "locking", "augmenting-consistency", "fail",
                f"member {sorted(member)}: locked={locked}, "
                f"sequence={'none' if sequence is None else 'found'}"))
            return items
    items.append(SuiteItem("locking", "augmenting-consistency", "pass",
                           f"{len(contracted.clutter)} members checked"))
    return items


def _suite_pivots(net: Network, max_inner) -> list[SuiteItem]:
    """Trident pivots of a weak-optimal maximum block-to-block packing stay
    inside the union of the dual-solution blocks.

    Prefers the block-flow model, which can route through block interiors
    and so can actually exhibit tridents; falls back to lifted contracted
    packings when the model exceeds the solver's edge cap.
    """
    from .dual import block_flow_network, block_tridents, lift_contracted_paths
    from .solvers import edge_limit

    if not net.clutter.is_simple():
        return [SuiteItem("pivots", "pivot-containment", "skip",
                          "clutter is not simple")]
    expansion = minimal_dual_solution(net, verify=False)
    allowed = expansion.assigned()

    block_net = block_flow_network(net, expansion)
    if len(block_net.graph.edges) <= edge_limit():
        flow_result = weak_optimal_maximum(block_net)
        maximum = Fraction(sum(
            terminal_cut_size(block_net, {t})
            for t in block_net.terminals), 2)
        theta_fr = solve_weak(block_net, "fractional").objective
        if flow_result.witness.size() == maximum and \
                flow_result.objective == theta_fr:
            hits = 0
            for trident in detect_tridents(block_net, flow_result.witness):
                hits += 1
                if trident.pivot not in allowed:
                    return [SuiteItem(
                        "pivots", "pivot-containment", "fail",
                        f"{trident.kind} pivot {trident.pivot!r} outside "
                        f"blocks {sorted(allowed)}")]
            return [SuiteItem("pivots", "pivot-containment", "pass",
                              f"{hits} pivots checked in the block model")]

    contracted = expand(net, expansion).network
    flow_result = weak_optimal_maximum(contracted)
    maximum = Fraction(
        sum(terminal_cut_size(contracted, {t}) for t in contracted.terminals), 2)
    theta_fr = solve_weak(contracted, "fractional").objective
    if flow_result.witness.size() != maximum or flow_result.objective != theta_fr:
        return [SuiteItem(
            "pivots", "pivot-containment", "skip",
            "no integer maximum weak-optimal packing on this instance")]
    walks = lift_contracted_paths(net, expansion, flow_result.witness)
    hits = 0
    for _, _, pivot, kind in block_tridents(net, expansion, walks):
        hits += 1
        if pivot not in allowed:
            return [SuiteItem(
                "pivots", "pivot-containment", "fail",
                f"{kind} pivot {pivot!r} outside blocks {sorted(allowed)}")]
    return [SuiteItem("pivots", "pivot-containment", "pass",
                      f"{hits} pivots checked in lifted packings")]
