"""Bundled micro-instances with independently derived optima.

Each instance is small enough to check by hand; the expected values are
regenerated by the solvers in the test suite, so the numbers here are
documentation, not ground truth.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from ..fileio import network_from_document
from ..network import Network

# name -> (strong optimum, least certificate value, weak optimum)
EXPECTED = {
    "parallel3": (Fraction(3), Fraction(3), Fraction(3)),
    "triangle": (Fraction(2), Fraction(2), Fraction(5, 2)),
    "path-join": (Fraction(1), Fraction(1), Fraction(1)),
    "star4": (Fraction(2), Fraction(2), Fraction(2)),
}


def names() -> list[str]:
    return sorted(EXPECTED)


def load(name: str) -> Network:
    if name not in EXPECTED:
        raise KeyError(f"unknown corpus instance {name!r}; have {names()}")
    text = resources.files(__package__).joinpath(f"{name}.json").read_text()
    return network_from_document(json.loads(text))
