"""Exact recursive engines for domination reliability.

Both engines are generic over the coefficient domain of the graph's
probabilities: floats, :class:`~fractions.Fraction` or
:class:`~domrel.poly.Polynomial` (one shared indeterminate).  Only ``+``,
``-`` and ``*`` are used, plus the graph's ``unit``.
"""

from __future__ import annotations

import sys

from .graph import bits_of, neighbourhood_graph


def max_degree_pivot(g):
    """Pivot rule: the undecided vertex of largest degree, lowest index on ties."""
    order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
    bit_order = [1 << v for v in order]

    def choose(x, y):
        for v, b in zip(order, bit_order):
            if y & b:
                return v
        raise AssertionError("pivot requested from an empty set")

    return choose


def drel_recursive(g, pivot=None):
    """DRel(G, V, V, p) by conditioning on one undecided vertex at a time.

    State ``(x, y)``: ``x`` still needs domination, ``y`` is undecided.
    ``pivot(x, y)`` overrides the vertex choice; by default the undecided
    vertex of maximum degree is used.  Memoised per call on ``(x, y)``.
    """
    n = g.n
    one = g.unit
    zero = one * 0
    if n == 0:
        return one
    closed = g.closed
    probs = g.probs
    comps = g.complement_probs()
    choose = pivot or max_degree_pivot(g)
    memo = {}

    def rec(x, y):
        if not x:
            return one
        key = (x, y)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # X must lie inside N[Y]
        cover = 0
        for v in bits_of(y):
            cover |= closed[v]
        if x & ~cover:
            memo[key] = zero
            return zero
        v = choose(x, y)
        rest = y & ~(1 << v)
        value = probs[v] * rec(x & ~closed[v], rest) + comps[v] * rec(x, rest)
        memo[key] = value
        return value

    full = g.full
    with _recursion_room(n):
        return rec(full, full)


def drel_bipartite_left(bg):
    """Probability that every left vertex sees an operating right vertex.

    Vertices are deleted by masking: ``left`` holds the left vertices still to
    be dominated, ``right`` the right vertices not yet decided.
    """
    edges = bg.edges
    one = bg.unit
    zero = one * 0
    probs = bg.right_probs
    comps = tuple(one - p for p in probs)
    nl, nr = len(bg.left), len(bg.right)
    left_nbrs = [0] * nl
    for j, e in enumerate(edges):
        for i in bits_of(e):
            left_nbrs[i] |= 1 << j
    memo = {}

    def rec(left, right):
        if not left:
            return one
        key = (left, right)
        hit = memo.get(key)
        if hit is not None:
            return hit
        for i in bits_of(left):
            if not left_nbrs[i] & right:
                memo[key] = zero
                return zero
        best, best_deg = -1, -1
        for j in bits_of(right):
            d = (edges[j] & left).bit_count()
            if d > best_deg:
                best, best_deg = j, d
        w = best
        rest = right & ~(1 << w)
        value = probs[w] * rec(left & ~edges[w], rest) + comps[w] * rec(left, rest)
        memo[key] = value
        return value

    with _recursion_room(nr):
        return rec((1 << nl) - 1, (1 << nr) - 1)


def drel_via_neighbourhood(g):
    return drel_bipartite_left(neighbourhood_graph(g))


class _recursion_room:
    """Temporarily raise the interpreter recursion limit for depth ``n``."""

    def __init__(self, depth):
        self.needed = 2 * depth + 200

    def __enter__(self):
        self.saved = sys.getrecursionlimit()
        if self.saved < self.needed:
            sys.setrecursionlimit(self.needed)

    def __exit__(self, *exc):
        sys.setrecursionlimit(self.saved)
        return False
