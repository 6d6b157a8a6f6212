"""Bandwidth of the span-bounded subset graphs G(n, k, b).

Thin layer over the compiled ``_core`` module: rational results come back
as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CapacityError,
    GnkbError,
    RegimeError,
    central_count,
    central_lower_bound,
    check_proposition1,
    chvatal_lower_bound,
    diameter,
    edge_count,
    exact_bandwidth,
    lex_upper_bound,
    maximal_banded_hypergraph,
    numbering,
    numbering_bandwidth,
    suite_names,
    theorem1a_value,
    two_section,
    vertex_count,
    vertices,
    weak_edge_clique_cover_number,
    weak_edge_clique_graph,
)

__all__ = [
    "CapacityError",
    "GnkbError",
    "RegimeError",
    "central_count",
    "central_lower_bound",
    "certify",
    "check_proposition1",
    "chvatal_lower_bound",
    "classify_case",
    "coefficients",
    "diameter",
    "edge_count",
    "exact_bandwidth",
    "lex_upper_bound",
    "maximal_banded_hypergraph",
    "numbering",
    "numbering_bandwidth",
    "polygon_measure",
    "run_suite",
    "suite_names",
    "theorem1a_value",
    "theorem2_interval",
    "two_section",
    "unknown_set_measure",
    "vertex_count",
    "vertices",
    "weak_edge_clique_cover_number",
    "weak_edge_clique_graph",
]


def _text(value):
    return str(Fraction(value))


def classify_case(beta):
    d = _core.classify_case(_text(beta))
    d["beta"] = Fraction(d["beta"])
    d["r"] = Fraction(d["r"])
    return d


def coefficients(beta, k):
    """(c1, c2, c3) for 0 < beta <= 1/2."""
    return tuple(Fraction(c) for c in _core.coefficients(_text(beta), k))


def theorem2_interval(beta, k):
    return tuple(Fraction(c) for c in _core.theorem2_interval(_text(beta), k))


def unknown_set_measure(q_max, exact=True):
    """Exact Fraction, or a float when ``exact`` is false (large q_max)."""
    if not exact:
        return _core.unknown_set_measure_float(q_max)
    return Fraction(_core.unknown_set_measure(q_max))


def polygon_measure(points, k):
    return Fraction(_core.polygon_measure([(_text(x), _text(y)) for x, y in points], k))


def certify(n, k, b, solver_cap=24):
    return _core.certify(n, k, b, solver_cap)


def run_suite(name, random=500, seed=7):
    """Returns (passed, [(instance, pass, detail), ...])."""
    return _core.run_suite(name, random, seed)
