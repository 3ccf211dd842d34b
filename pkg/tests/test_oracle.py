from fractions import Fraction

import pytest
from hypothesis import given, settings

from domrel.dompoly import drel_to_dompoly
from domrel.errors import SizeError
from domrel.graph import complete_graph, empty_graph, path_graph
from domrel.oracle import (
    oracle_domination_number,
    oracle_dompoly,
    oracle_drel,
    oracle_drel_poly,
    oracle_edge_probability,
)

from .strategies import graphs, probabilities

HALF = Fraction(1, 2)


def test_hand_checked_examples():
    p3 = path_graph(3)
    # dominating sets of 0-1-2: {1}, {0,1}, {1,2}, {0,2}, {0,1,2}
    assert oracle_dompoly(p3) == [0, 1, 3, 1]
    assert oracle_domination_number(p3) == 1
    assert oracle_drel(p3.with_uniform(HALF)) == Fraction(5, 8)

    l2 = empty_graph(2)
    assert oracle_dompoly(l2) == [0, 0, 1]
    assert oracle_domination_number(l2) == 2

    k3 = complete_graph(3)
    assert oracle_dompoly(k3) == [0, 3, 3, 1]
    assert oracle_domination_number(k3) == 1


def test_empty_graph():
    assert oracle_dompoly(empty_graph(0)) == [1]
    assert oracle_drel_poly(empty_graph(0)) == 1


def test_size_cap():
    with pytest.raises(SizeError):
        oracle_dompoly(empty_graph(21))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), probabilities)
def test_poly_matches_value(g, r):
    assert oracle_drel_poly(g).eval(r) == oracle_drel(g.with_uniform(r))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_poly_converts_to_counts(g):
    assert drel_to_dompoly(oracle_drel_poly(g), g.n) == oracle_dompoly(g)


def test_edge_probability_alternating_sum():
    ps = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)]
    assert oracle_edge_probability(ps) == 1 - Fraction(1, 2) * Fraction(2, 3) * Fraction(4, 5)
    assert oracle_edge_probability([]) == 0
