"""Exact domination reliability of graphs and related polynomials."""

from .cograph import Cotree, NotACograph, drel_cograph, drel_cograph_graph, recognize_cograph
from .dompoly import (
    DominationPolynomial,
    dompoly_ie,
    dompoly_to_drel,
    dompoly_vandermonde,
    drel_to_dompoly,
)
from .errors import DomrelError, ParameterError, ParseError, SizeError, StructuralError
from .exact import drel_bipartite_left, drel_recursive, drel_via_neighbourhood
from .families import FamilySpec, drel_family
from .graph import BipartiteGraph, Graph, VertexSet, neighbourhood_graph, parse_graph, render_graph
from .hypergraph import Hypergraph, cov_to_drel, coverage, drel_to_cov
from .ie import bonferroni_bounds, broken_neighbourhoods, drel_ie, drel_ie_truncated
from .oracle import oracle_domination_number, oracle_dompoly, oracle_drel, oracle_drel_poly
from .poly import Polynomial

__all__ = [name for name in dir() if not name.startswith("_")]
