from fractions import Fraction

import pytest
from hypothesis import given

from domrel.errors import ParseError
from domrel.graph import (
    Graph,
    VertexSet,
    complete_graph,
    degree_one_support,
    empty_graph,
    has_isolated_edge,
    has_isolated_vertex,
    min_degree,
    neighbourhood_graph,
    parse_graph,
    parse_probs,
    path_graph,
    render_graph,
)

from .strategies import graphs


def test_parse_examples():
    assert parse_graph("3 2\n0 1\n1 2") == path_graph(3)
    assert parse_graph("1 0") == empty_graph(1)
    assert parse_graph("3 3\n0 1\n1 2\n0 2") == complete_graph(3)


def test_parse_comments_and_duplicates():
    g = parse_graph("# a path\n3 3\n0 1\n# dup\n1 0\n1 2\n")
    assert g == path_graph(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 0", 2),
        ("3 1\n0 3", 2),
        ("3 1\n0 x", 2),
        ("3 2\n0 1", 2),
        ("3", 1),
        ("3 1\n0 1 2", 2),
        ("600 0", 1),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_probs():
    probs = parse_probs("0 1/2\n2 0.25\n", 3, default=Fraction(1))
    assert probs == [Fraction(1, 2), Fraction(1), Fraction(1, 4)]
    with pytest.raises(ParseError):
        parse_probs("0 3/2", 1)
    with pytest.raises(ParseError):
        parse_probs("0 1/2", 2)


def test_structural_queries():
    p3 = path_graph(3)
    assert min_degree(p3) == 1
    assert not has_isolated_vertex(p3) and not has_isolated_edge(p3)
    assert degree_one_support(p3) == VertexSet.of([1], 3)
    assert has_isolated_edge(path_graph(2))
    assert has_isolated_vertex(empty_graph(2))


def test_neighbourhood_graph_examples():
    bg = neighbourhood_graph(path_graph(2))
    assert all(m == 0b11 for m in bg.edges)
    single = neighbourhood_graph(empty_graph(1))
    assert single.edges == (1,) and single.edge_count == 1
    # middle of P_3 (vertex 1) sees all three right copies
    bg = neighbourhood_graph(path_graph(3))
    assert bg.left_neighbours(1) == 0b111
    assert bg.left[1] == (1, 0) and bg.right[2] == (2, 1)


def test_rejects_bad_probabilities():
    with pytest.raises(ValueError):
        path_graph(2).with_probs([Fraction(3, 2), 0])


def test_vertex_set_operations():
    a, b = VertexSet.of([0, 2], 4), VertexSet.of([0, 1, 2], 4)
    assert a <= b and a < b and not b <= a
    assert len(b - a) == 1 and list(a | b) == [0, 1, 2]
    assert 2 in a and 1 not in a


@given(graphs())
def test_closed_neighbourhood_sizes(g):
    for v in range(g.n):
        assert len(g.closed_neighbourhood(v)) == g.degree(v) + 1
        assert g.closed_neighbourhood(v) == g.neighbours(v) | VertexSet.of([v], g.n)


@given(graphs())
def test_adjacency_symmetric_irreflexive(g):
    for v in range(g.n):
        assert v not in g.neighbours(v)
        for w in g.neighbours(v):
            assert v in g.neighbours(w)


@given(graphs())
def test_neighbourhood_graph_counts(g):
    bg = neighbourhood_graph(g)
    assert len(bg.left) == len(bg.right) == g.n
    assert bg.edge_count == sum(d + 1 for d in g.degrees())


@given(graphs())
def test_render_round_trip(g):
    assert parse_graph(render_graph(g)) == g


def test_default_probabilities_are_symbolic():
    g = Graph.from_edges(2, [(0, 1)])
    assert str(g.probs[0]) == "p"
