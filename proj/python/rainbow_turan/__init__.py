"""Rainbow Turan constructions, exact cycle/path counting and exponent experiments."""
import json
from fractions import Fraction

from ._core import (
    DEFAULT_BUDGET,
    ColoredGraph,
    RtlError,
    bose_chowla,
    common_neighbour_count,
    construction_names,
    count_cycles,
    count_paths,
    count_paths_from,
    count_rainbow_cycles,
    find_rainbow_cycle,
    is_prime,
    is_properly_coloured,
    load_graph,
    naive_count,
    save_graph,
    verify_bk,
)
from . import _core

__all__ = [
    "DEFAULT_BUDGET", "ColoredGraph", "RtlError", "bose_chowla", "check_p2_linearity", "common_neighbour_count",
    "construct", "construction_names", "count_cycles", "count_paths", "count_paths_from", "count_rainbow_cycles",
    "exhaustive_extremal", "find_rainbow_cycle", "is_prime", "is_properly_coloured", "load_graph", "naive_count",
    "pattern", "run_scaling", "save_graph", "theorem_exponent", "verify_bk",
]


def construct(name, **params):
    """Build a named construction; returns (graph, report dict)."""
    graph, report = _core._construct(name, params)
    return graph, json.loads(report)


def pattern(graph, cycle, threshold):
    return json.loads(_core._pattern(graph, list(cycle), threshold))


def theorem_exponent(target, forbidden):
    """Exponent of ex(n, target, rainbow-C_forbidden) as a Fraction, e.g. ("C5", 4) -> 5/2."""
    num, den = _core._theorem_exponent(target, forbidden)
    return Fraction(num, den)


def _split_sweep(params):
    sweeps = {k: list(v) for k, v in params.items() if isinstance(v, (list, tuple, range))}
    if len(sweeps) != 1:
        raise ValueError("exactly one parameter must be a sequence of sweep values")
    (key, values), = sweeps.items()
    fixed = {k: int(v) for k, v in params.items() if k != key}
    return fixed, key, values


def run_scaling(family, target, forbidden=None, expected=None, tolerance=None, jobs=1, **params):
    """Log-log fit of target counts over a sweep, e.g. run_scaling("even-cycle-lower", "C6", k=3, n=range(2, 7))."""
    fixed, key, values = _split_sweep(params)
    if expected is not None:
        expected = Fraction(expected)
        expected = (expected.numerator, expected.denominator)
    return json.loads(_core._run_scaling(family, fixed, key, values, target, forbidden, expected, tolerance, jobs))


def check_p2_linearity(family, forbidden, jobs=1, **params):
    fixed, key, values = _split_sweep(params)
    return json.loads(_core._check_p2_linearity(family, fixed, key, values, forbidden, jobs))


def exhaustive_extremal(n, target, forbidden, jobs=1):
    return json.loads(_core._exhaustive_extremal(n, target, forbidden, jobs))
