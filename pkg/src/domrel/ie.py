"""Inclusion-exclusion evaluation of domination reliability.

DRel(G, p) is the alternating sum over vertex subsets J of the probability
that every vertex of N[J] fails.  Subsets containing a broken neighbourhood,
or meeting the set of vertices adjacent to a leaf, may be skipped without
changing the sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import StructuralError
from .graph import VertexSet, bits_of, isolated_edges, min_degree

PRUNING_MODES = ("none", "broken", "degree1")


@dataclass(frozen=True)
class BrokenNeighbourhoodSet:
    sets: tuple[VertexSet, ...]
    ordering: tuple[int, ...]

    def masks(self):
        return tuple(s.bits for s in self.sets)

    def __len__(self):
        return len(self.sets)


def default_ordering(g):
    """Vertices by ascending degree, ties by index (smallest first)."""
    return tuple(sorted(range(g.n), key=lambda v: (g.adj[v].bit_count(), v)))


def _require_no_isolated_vertex(g):
    for v in range(g.n):
        if not g.adj[v]:
            raise StructuralError(f"vertex {v} is isolated")


def _require_no_isolated_edge(g):
    bad = isolated_edges(g)
    if bad:
        u, v = bad[0]
        raise StructuralError(f"edge ({u}, {v}) is an isolated edge")


def broken_neighbourhoods(g, ordering=None):
    """Sets N[v] - {v} for the vertices v that are the maximum of N[v].

    ``ordering`` lists the vertices from smallest to largest; the default is
    :func:`default_ordering`.
    """
    _require_no_isolated_vertex(g)
    ordering = default_ordering(g) if ordering is None else tuple(ordering)
    if sorted(ordering) != list(range(g.n)):
        raise ValueError("ordering must be a permutation of the vertices")
    rank = [0] * g.n
    for i, v in enumerate(ordering):
        rank[v] = i
    sets = []
    for v in ordering:
        if all(rank[w] < rank[v] for w in bits_of(g.adj[v])):
            sets.append(VertexSet(g.adj[v], g.n))
    return BrokenNeighbourhoodSet(tuple(sets), ordering)


def admissible_subsets(g, allowed=None, forbidden=(), limit=None):
    """Yield ``(J, N[J], |J|)`` for every admissible vertex subset J.

    J ranges over subsets of ``allowed`` (a mask, default all vertices) of
    size at most ``limit`` that contain none of the ``forbidden`` masks.
    Depth-first with the closed neighbourhood carried down, so each term
    costs one OR; a subtree is cut as soon as J swallows a forbidden set.
    """
    allowed = g.full if allowed is None else allowed
    verts = list(bits_of(allowed))
    closed = g.closed
    by_vertex = [[x for x in forbidden if x >> v & 1] for v in range(g.n)]
    yield 0, 0, 0
    stack = [(0, 0, 0, 0)]
    while stack:
        start, j, cov, size = stack.pop()
        if limit is not None and size >= limit:
            continue
        for i in range(start, len(verts)):
            v = verts[i]
            j2 = j | 1 << v
            # only sets through v can have become contained
            if any(not x & ~j2 for x in by_vertex[v]):
                continue
            cov2 = cov | closed[v]
            yield j2, cov2, size + 1
            stack.append((i + 1, j2, cov2, size + 1))


def pruning_constraints(g, pruning, ordering):
    if pruning == "none":
        return None, ()
    if pruning == "broken":
        return None, broken_neighbourhoods(g, ordering).masks()
    if pruning == "degree1":
        _require_no_isolated_vertex(g)
        _require_no_isolated_edge(g)
        support = 0
        for v in range(g.n):
            if g.adj[v].bit_count() == 1:
                support |= g.adj[v]
        return g.full & ~support, ()
    raise ValueError(f"unknown pruning mode {pruning!r}; expected one of {PRUNING_MODES}")


def signed_cover_counts(g, pruning="none", ordering=None, limit=None):
    """Map N[J] -> sum of (-1)^|J| over the admissible J with that closure."""
    allowed, forbidden = pruning_constraints(g, pruning, ordering)
    counts = {}
    for _, cov, size in admissible_subsets(g, allowed, forbidden, limit):
        counts[cov] = counts.get(cov, 0) + (-1 if size & 1 else 1)
    return counts


def count_terms(g, pruning="none", ordering=None):
    allowed, forbidden = pruning_constraints(g, pruning, ordering)
    return sum(1 for _ in admissible_subsets(g, allowed, forbidden))


def _failure_product(g, comps, mask, cache):
    value = cache.get(mask)
    if value is None:
        value = g.unit
        for v in bits_of(mask):
            value = value * comps[v]
        cache[mask] = value
    return value


def _combine(g, counts):
    comps = g.complement_probs()
    cache = {}
    total = g.unit * 0
    for mask, c in counts.items():
        if c:
            total = total + c * _failure_product(g, comps, mask, cache)
    return total


def drel_ie(g, pruning="none", ordering=None):
    """DRel by inclusion-exclusion.

    ``pruning`` is ``"none"``, ``"broken"`` (skip supersets of broken
    neighbourhoods under ``ordering``) or ``"degree1"`` (skip subsets meeting
    the vertices adjacent to a leaf).
    """
    return _combine(g, signed_cover_counts(g, pruning, ordering))


def drel_ie_truncated(g):
    """Inclusion-exclusion over |J| <= n - min degree, plus one closed-form tail term."""
    if g.n == 0:
        raise StructuralError("graph has no vertices")
    delta = min_degree(g)
    if delta == 0:
        _require_no_isolated_vertex(g)
    n = g.n
    head = _combine(g, signed_cover_counts(g, limit=n - delta))
    comps = g.complement_probs()
    tail = _failure_product(g, comps, g.full, {})
    sign = -1 if (n - delta + 1) & 1 else 1
    return head + sign * comb(n - 1, delta - 1) * tail


def bonferroni_partial_sums(g, r):
    """Partial sums S_0..S_r of the unpruned expansion, S_k over |J| <= k."""
    if r < 0:
        raise ValueError("order must be non-negative")
    comps = g.complement_probs()
    cache = {}
    levels = [g.unit * 0 for _ in range(r + 1)]
    for _, cov, size in admissible_subsets(g, limit=r):
        term = _failure_product(g, comps, cov, cache)
        levels[size] = levels[size] - term if size & 1 else levels[size] + term
    sums, acc = [], g.unit * 0
    for t in levels:
        acc = acc + t
        sums.append(acc)
    return sums


def bonferroni_bounds(g, r):
    """Bracket ``(lower, upper)`` from the truncations at orders up to ``r + 1``.

    Even truncations over-estimate and odd ones under-estimate; the bracket is
    the tightest pair among them, so its width never grows with ``r``.
    Requires an ordered (numeric) domain.
    """
    sums = bonferroni_partial_sums(g, r + 1)
    upper = min(sums[0::2])
    lower = max(sums[1::2])
    return lower, upper
