"""Exact linear programming over rationals.

A small dense two-phase simplex with Bland's rule: entering variable is the
lowest-index one with positive reduced cost, leaving row breaks ratio ties by
basis index.  That rule never cycles and makes every run deterministic, which
the rest of the package relies on for reproducible witnesses.  All tableau
entries are Fractions, so optima are exact and safe to compare with ==.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class Constraint:
    coeffs: dict[int, Fraction]
    sense: str  # "<=", ">=" or "=="
    rhs: Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Fraction | None
    solution: tuple[Fraction, ...]

    def __getitem__(self, var: int) -> Fraction:
        return self.solution[var]


def constraint(coeffs: dict[int, Fraction | int], sense: str,
               rhs: Fraction | int) -> Constraint:
    return Constraint({k: Fraction(v) for k, v in coeffs.items() if v != 0},
                      sense, Fraction(rhs))


def solve_lp(num_vars: int, objective: dict[int, Fraction | int],
             constraints: Sequence[Constraint], maximize: bool = True) -> LPResult:
    """Optimize a linear objective over non-negative variables."""
    obj = [Fraction(0)] * num_vars
    for k, v in objective.items():
        obj[k] = Fraction(v)
    if not maximize:
        obj = [-c for c in obj]

    rows: list[list[Fraction]] = []
    senses: list[str] = []
    rhs: list[Fraction] = []
    for c in constraints:
        row = [Fraction(0)] * num_vars
        for k, v in c.coeffs.items():
            if not 0 <= k < num_vars:
                raise ValueError(f"variable index {k} out of range")
            row[k] = Fraction(v)
        b = Fraction(c.rhs)
        sense = c.sense
        if b < 0:  # normalize to non-negative right-hand sides
            row = [-x for x in row]
            b = -b
            sense = {"<=": ">=", ">=": "<=", "==": "=="}[sense]
        rows.append(row)
        senses.append(sense)
        rhs.append(b)

    m = len(rows)
    # Column layout: structural vars, then one slack/surplus per inequality,
    # then one artificial per ">=" or "==" row.
    slack_of: dict[int, int] = {}
    col = num_vars
    for i, s in enumerate(senses):
        if s in ("<=", ">="):
            slack_of[i] = col
            col += 1
    art_of: dict[int, int] = {}
    for i, s in enumerate(senses):
        if s in (">=", "=="):
            art_of[i] = col
            col += 1
    total = col

    tableau = [[Fraction(0)] * (total + 1) for _ in range(m)]
    basis: list[int] = []
    for i in range(m):
        for j in range(num_vars):
            tableau[i][j] = rows[i][j]
        tableau[i][total] = rhs[i]
        if i in slack_of:
            tableau[i][slack_of[i]] = Fraction(1 if senses[i] == "<=" else -1)
        if i in art_of:
            tableau[i][art_of[i]] = Fraction(1)
            basis.append(art_of[i])
        else:
            basis.append(slack_of[i])

    def pivot(row: int, col_idx: int) -> None:
        piv = tableau[row][col_idx]
        tableau[row] = [x / piv for x in tableau[row]]
        for r in range(m):
            if r != row and tableau[r][col_idx] != 0:
                factor = tableau[r][col_idx]
                tableau[r] = [a - factor * b
                              for a, b in zip(tableau[r], tableau[row])]
        basis[row] = col_idx

    def run_phase(costs: list[Fraction], banned: set[int]) -> str:
        while True:
            reduced = list(costs)
            offset = Fraction(0)
            for r, b in enumerate(basis):
                cb = costs[b]
                if cb != 0:
                    for j in range(total):
                        reduced[j] -= cb * tableau[r][j]
                    offset += cb * tableau[r][total]
            entering = next(
                (j for j in range(total)
                 if j not in banned and reduced[j] > 0), None)
            if entering is None:
                return "optimal"
            best: tuple[Fraction, int, int] | None = None
            for r in range(m):
                a = tableau[r][entering]
                if a > 0:
                    ratio = tableau[r][total] / a
                    key = (ratio, basis[r], r)
                    if best is None or key < best:
                        best = key
            if best is None:
                return "unbounded"
            pivot(best[2], entering)

    artificials = set(art_of.values())
    if artificials:
        phase1 = [Fraction(0)] * total
        for j in artificials:
            phase1[j] = Fraction(-1)
        run_phase(phase1, banned=set())
        infeas = sum((tableau[r][total] for r, b in enumerate(basis)
                      if b in artificials), Fraction(0))
        if infeas != 0:
            return LPResult("infeasible", None, ())
        # Drive leftover zero-valued artificials out of the basis; rows where
        # that is impossible are redundant zero rows and get dropped.
        for r in range(m):
            if basis[r] in artificials:
                entering = next(
                    (j for j in range(total)
                     if j not in artificials and tableau[r][j] != 0), None)
                if entering is not None:
                    pivot(r, entering)
        keep = [r for r in range(m) if basis[r] not in artificials]
        tableau = [tableau[r] for r in keep]
        basis = [basis[r] for r in keep]
        m = len(basis)

    phase2 = [Fraction(0)] * total
    for j in range(num_vars):
        phase2[j] = obj[j]
    status = run_phase(phase2, banned=artificials)
    if status == "unbounded":
        return LPResult("unbounded", None, ())

    solution = [Fraction(0)] * num_vars
    for r, b in enumerate(basis):
        if b < num_vars:
            solution[b] = tableau[r][total]
    value = sum((obj[j] * solution[j] for j in range(num_vars)), Fraction(0))
    if not maximize:
        value = -value
    return LPResult("optimal", value, tuple(solution))
