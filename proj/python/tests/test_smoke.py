from fractions import Fraction
from itertools import combinations, permutations

import pytest

import gnkb


def test_counts():
    assert gnkb.vertex_count(4, 2, 3) == 9
    assert gnkb.central_count(4, 2, 3) == 3
    assert len(gnkb.vertices(6, 3, 4)) == gnkb.vertex_count(6, 3, 4)


def test_vertices_match_definition():
    n, k, b = 7, 3, 4
    expected = [list(c) for c in combinations(range(n + 1), k) if c[-1] - c[0] <= b]
    assert gnkb.vertices(n, k, b) == expected


def test_bounds_and_certificate():
    assert gnkb.theorem1a_value(5, 2, 4) == 9
    cert = gnkb.certify(5, 2, 4)
    assert cert["exact"] and cert["upper"] == 9 and cert["solver"] == 9
    cert = gnkb.certify(20, 2, 7, solver_cap=0)
    assert cert["lower"] < cert["upper"] and cert["solver"] is None
    assert gnkb.lex_upper_bound(100, 2, 3) == gnkb.chvatal_lower_bound(100, 2, 3) == 6


def test_numbering_is_a_permutation():
    order = gnkb.numbering(12, 2, 5, "spo")
    assert sorted(order) == gnkb.vertices(12, 2, 5)
    assert gnkb.numbering_bandwidth(12, 2, 5, "lex") >= gnkb.numbering_bandwidth(12, 2, 5, "spo")


def test_case_split_and_coefficients():
    d = gnkb.classify_case(Fraction(9, 20))
    assert d["case"] == "A" and d["q"] == 2 and d["r"] == Fraction(1, 10)
    c1, c2, c3 = gnkb.coefficients(Fraction(9, 20), 2)
    assert c1 == Fraction(243, 1600)
    assert gnkb.classify_case("7/20")["case"] == "B"
    lo, hi = gnkb.theorem2_interval(Fraction(7, 20), 2)
    assert lo < hi


def test_polygon_measure():
    omega = [(0, 0), (1, 1), (0, 1)]
    assert gnkb.polygon_measure(omega, 2) == Fraction(1, 2)
    assert gnkb.polygon_measure(omega, 4) == Fraction(1, 24)


def _brute_bandwidth(m, edges):
    return min(max(abs(p[u] - p[v]) for u, v in edges) for p in permutations(range(m)))


def test_exact_bandwidth():
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (5, 6)]
    width, order = gnkb.exact_bandwidth(7, edges)
    assert width == _brute_bandwidth(7, edges) == 2
    assert sorted(order) == list(range(7))
    with pytest.raises(gnkb.CapacityError):
        gnkb.exact_bandwidth(30, [])


def test_hypergraph_examples():
    triangle = [[0, 1], [1, 2], [0, 2]]
    path = [[0, 1], [1, 2]]
    assert gnkb.weak_edge_clique_cover_number(3, triangle) == 1
    assert gnkb.weak_edge_clique_cover_number(3, path) == 2
    assert gnkb.weak_edge_clique_graph(3, path) == (2, [])
    assert gnkb.two_section(3, [[0, 1, 2]]) == [(0, 1), (0, 2), (1, 2)]
    assert gnkb.check_proposition1(4, [[0, 1, 2], [2, 3], [1, 3]])
    m, edges = gnkb.maximal_banded_hypergraph(5, 2, 2)
    assert m == 6 and len(edges) == gnkb.vertex_count(5, 2, 2)


def test_errors():
    with pytest.raises(gnkb.GnkbError):
        gnkb.vertex_count(3, 5, 1)
    with pytest.raises(ValueError):
        gnkb.numbering(20, 2, 7, "case_a")


def test_suite():
    assert "thm1a" in gnkb.suite_names()
    passed, rows = gnkb.run_suite("thm1a")
    assert passed and rows
    assert 0.1185 < gnkb.unknown_set_measure(10000, exact=False) < 0.1195
    small = gnkb.unknown_set_measure(3)
    assert isinstance(small, Fraction) and 0 < small < Fraction(1, 2)
