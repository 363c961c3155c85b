"""Knot and torus-covering T^2-knot determinants, Fox colorings, and
irreducible metabelian SU(2)-representations from braid words.

Report functions return plain dicts with the same layout as the CLI's JSON
output; determinants and counts there are decimal strings.
"""

from ._core import (
    CapExceededError,
    KrepsError,
    NonCommutingError,
    NotAKnotError,
    ParseError,
    alexander_polynomial,
    determinant,
    family,
    knot,
    parse_braid,
    smith_invariants,
    solution_count_mod,
    surface,
    verify,
)

__all__ = [
    "CapExceededError",
    "KrepsError",
    "NonCommutingError",
    "NotAKnotError",
    "ParseError",
    "alexander_polynomial",
    "determinant",
    "family",
    "knot",
    "parse_braid",
    "smith_invariants",
    "solution_count_mod",
    "surface",
    "verify",
]
