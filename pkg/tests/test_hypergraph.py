import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domrel.errors import ParseError
from domrel.exact import drel_recursive
from domrel.graph import complete_graph, empty_graph, path_graph
from domrel.hypergraph import (
    Hypergraph,
    cov_to_drel,
    coverage,
    coverage_enumerate,
    drel_to_cov,
    parse_hypergraph,
    render_hypergraph,
)
from domrel.oracle import oracle_edge_probability

from .strategies import probabilities, weighted_graphs

HALF = Fraction(1, 2)


def test_coverage_examples():
    assert coverage(Hypergraph.from_lists(1, [([0], 0.7)])) == 0.7
    two = Hypergraph.from_lists(2, [([0], HALF), ([0, 1], HALF)])
    assert coverage(two) == HALF
    assert coverage_enumerate(two) == HALF
    assert coverage(Hypergraph(0, ())) == 1


def test_cov_to_drel_examples():
    two = Hypergraph.from_lists(2, [([0], HALF), ([0, 1], HALF)])
    g = cov_to_drel(two)
    assert g.n == 4 and drel_recursive(g) == HALF
    single = cov_to_drel(Hypergraph.from_lists(1, [([0], Fraction(7, 10))]))
    assert single.edges == [(0, 1)] and single.probs == (0, Fraction(7, 10))
    assert drel_recursive(single) == Fraction(7, 10)
    empty = cov_to_drel(Hypergraph(0, ()))
    assert empty.n == 0 and drel_recursive(empty) == 1


def test_drel_to_cov_examples():
    h = drel_to_cov(path_graph(2).with_uniform(HALF))
    assert h.edges == ((0b11, Fraction(3, 4)),)
    assert coverage(h) == Fraction(3, 4)
    h = drel_to_cov(empty_graph(1).with_uniform(0.3))
    (mask, p_edge), = h.edges
    assert mask == 1 and p_edge == pytest.approx(0.3)
    assert coverage(h, "enumerate") == pytest.approx(0.3)
    h = drel_to_cov(path_graph(3).with_uniform(HALF))
    assert sorted(m for m, _ in h.edges) == [0b011, 0b110, 0b111]
    assert coverage_enumerate(h) == Fraction(5, 8)


@st.composite
def hypergraphs(draw, max_n=6, max_m=6):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return Hypergraph(0, ())
    m = draw(st.integers(0, max_m))
    edges = [(draw(st.integers(1, 2**n - 1)), draw(probabilities)) for _ in range(m)]
    return Hypergraph(n, tuple(edges), Fraction(1))


@settings(max_examples=100, deadline=None)
@given(hypergraphs())
def test_reduction_matches_enumeration(h):
    assert drel_recursive(cov_to_drel(h)) == coverage_enumerate(h)


@settings(max_examples=100, deadline=None)
@given(weighted_graphs(max_n=8))
def test_drel_to_cov_round_trip(g):
    h = drel_to_cov(g)
    assert coverage(h) == drel_recursive(g)
    assert coverage_enumerate(h) == drel_recursive(g)


def test_edge_probability_closed_form_matches_alternating_sum():
    rng = random.Random(11)
    for size in range(1, 5):
        for _ in range(10):
            ps = [Fraction(rng.randint(0, 9), 9) for _ in range(size)]
            # vertices of K_size share one closed neighbourhood
            g = complete_graph(size).with_probs(ps)
            (mask, p_edge), = drel_to_cov(g).edges
            assert p_edge == oracle_edge_probability(ps, Fraction(1))


def test_file_format_round_trip():
    text = "3 2\n1/2 2 0 1\n0.25 2 1 2\n"
    h = parse_hypergraph(text)
    assert h.edges == ((0b011, HALF), (0b110, Fraction(1, 4)))
    assert parse_hypergraph(render_hypergraph(h)) == h


@pytest.mark.parametrize("text", ["2 1\n0.5 2 0", "2 1\n0.5 1 5", "2 1\n1.5 1 0", "2 2\n0.5 1 0"])
def test_file_format_errors(text):
    with pytest.raises(ParseError):
        parse_hypergraph(text)
