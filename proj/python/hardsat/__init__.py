"""Python access to the hardsat DPLL laboratory."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from . import _hardsat
from ._hardsat import (
    DimacsError,
    OracleLimitError,
    brute_force_sat,
    count_models,
    generate,
    parse_dimacs,
    solve,
    write_dimacs,
)

__all__ = [
    "DimacsError",
    "OracleLimitError",
    "brute_force_sat",
    "count_models",
    "descent_probability",
    "estimate_probability",
    "generate",
    "parse_dimacs",
    "run_experiment",
    "solve",
    "sweep",
    "write_dimacs",
]


def descent_probability(clauses, heuristic="guc", event="x1-false", M=0,
                        pure_literals=True, node_limit=1_000_000) -> Fraction:
    """Exact probability of `event` on the first descent.

    Raises OracleLimitError when the node limit cuts the expansion short.
    """
    num, den, complete = _hardsat.descent_probability(
        clauses, heuristic, event, M, pure_literals, node_limit)
    if not complete:
        raise OracleLimitError(f"descent expansion exceeded {node_limit} nodes")
    return Fraction(int(num), int(den))


def run_experiment(**kwargs) -> list[dict[str, str]]:
    """Per-trial rows as dictionaries keyed by the CSV header."""
    return list(csv.DictReader(io.StringIO(_hardsat.run_experiment(**kwargs))))


def estimate_probability(**kwargs) -> dict:
    result = json.loads(_hardsat.estimate_probability(**kwargs))
    if result.get("exact") is not None:
        result["exact"] = Fraction(result["exact"])
    return result


def sweep(**kwargs) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(_hardsat.sweep(**kwargs))))
