"""Graphs with bitset adjacency and per-vertex reliabilities.

Vertices are the dense indices ``0..n-1``.  Adjacency is stored as one
integer bitmask per vertex; the engines work on those masks directly, while
:class:`VertexSet` wraps a mask for the public API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import ParseError
from .poly import X

MAX_VERTICES = 512


def bits_of(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def unit_like(x):
    """The multiplicative identity of ``x``'s coefficient domain."""
    return x * 0 + 1


@dataclass(frozen=True)
class VertexSet:
    bits: int
    n: int

    @classmethod
    def of(cls, vertices, n):
        return cls(mask_of(vertices), n)

    def __iter__(self):
        return bits_of(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, v):
        return bool(self.bits >> v & 1)

    def __or__(self, other):
        return VertexSet(self.bits | other.bits, max(self.n, other.n))

    def __and__(self, other):
        return VertexSet(self.bits & other.bits, max(self.n, other.n))

    def __sub__(self, other):
        return VertexSet(self.bits & ~other.bits, max(self.n, other.n))

    def __le__(self, other):
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def issubset(self, other):
        return self <= other

    def __repr__(self):
        return "{" + ", ".join(map(str, self)) + "}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with vertex reliabilities.

    ``probs`` defaults to the indeterminate ``p`` for every vertex, so engines
    run on a fresh graph return its domination reliability polynomial.
    """

    n: int
    adj: tuple[int, ...]
    probs: tuple = None
    unit: object = None
    closed: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if m & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            for w in bits_of(m):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        probs = self.probs
        if probs is None:
            probs = (X,) * self.n
        probs = tuple(probs)
        if len(probs) != self.n:
            raise ValueError("probability vector length does not match n")
        for v, p in enumerate(probs):
            if isinstance(p, (int, float, Fraction)) and not 0 <= p <= 1:
                raise ValueError(f"probability of vertex {v} outside [0, 1]: {p}")
        unit = self.unit
        if unit is None:
            unit = unit_like(probs[0]) if probs else (X * 0 + 1 if self.probs is None else Fraction(1))
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "closed", tuple(m | 1 << v for v, m in enumerate(self.adj)))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, n, edges, probs=None):
        if n > MAX_VERTICES:
            raise ValueError(f"graph has {n} vertices; the limit is {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), probs)

    def with_probs(self, probs):
        probs = tuple(probs)
        unit = unit_like(probs[0]) if probs else self.unit
        return Graph(self.n, self.adj, probs, unit)

    def with_uniform(self, p):
        return Graph(self.n, self.adj, (p,) * self.n, unit_like(p))

    def symbolic(self):
        """Copy whose every vertex has the common indeterminate ``p``."""
        return self.with_uniform(X)

    # -- queries -----------------------------------------------------------

    @property
    def full(self):
        return (1 << self.n) - 1

    @property
    def edges(self):
        return [(v, w) for v in range(self.n) for w in bits_of(self.adj[v]) if v < w]

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return [m.bit_count() for m in self.adj]

    def neighbours(self, v):
        return VertexSet(self.adj[v], self.n)

    def closed_neighbourhood(self, vs):
        """N[v] for a vertex, or N[J] for an iterable of vertices."""
        if isinstance(vs, int):
            return VertexSet(self.closed[vs], self.n)
        m = 0
        for v in vs:
            m |= self.closed[v]
        return VertexSet(m, self.n)

    def complement_probs(self):
        return tuple(self.unit - p for p in self.probs)

    def induced(self, vertices):
        """Induced subgraph, relabelled to ``0..k-1`` in increasing order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[a], index[b]) for a, b in combinations(vs, 2) if self.adj[a] >> b & 1]
        return Graph.from_edges(len(vs), edges, [self.probs[v] for v in vs])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


# -- structural queries ------------------------------------------------------


def min_degree(g):
    return min(g.degrees()) if g.n else 0


def has_isolated_vertex(g):
    return any(m == 0 for m in g.adj)


def isolated_edges(g):
    """Edges ``(u, v)`` whose endpoints both have degree one."""
    return [(u, v) for u, v in g.edges if g.adj[u] == 1 << v and g.adj[v] == 1 << u]


def has_isolated_edge(g):
    return bool(isolated_edges(g))


def degree_one_support(g):
    """Vertices adjacent to a vertex of degree one."""
    m = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            m |= g.adj[v]
    return VertexSet(m, g.n)


def degree_sequence(g):
    return sorted(g.degrees(), reverse=True)


def refinement_signature(g):
    """Stable colour-refinement (1-WL) histogram.

    Isomorphic graphs get equal signatures, so a difference proves the graphs
    non-isomorphic.
    """
    colours = g.degrees()
    history = []
    while True:
        keyed = [(colours[v], tuple(sorted(colours[w] for w in bits_of(g.adj[v])))) for v in range(g.n)]
        palette = {k: i for i, k in enumerate(sorted(set(keyed)))}
        history.append(tuple(sorted(palette.items())))
        new = [palette[k] for k in keyed]
        if len(set(new)) == len(set(colours)):
            break
        colours = new
    return tuple(history), tuple(sorted(new))


# -- bipartite view ------------------------------------------------------------


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph given by the left-neighbour mask of each right vertex."""

    left: tuple
    right: tuple
    edges: tuple[int, ...]
    right_probs: tuple
    unit: object = Fraction(1)

    def __post_init__(self):
        if len(self.edges) != len(self.right) or len(self.right_probs) != len(self.right):
            raise ValueError("one edge mask and one probability per right vertex required")
        full = (1 << len(self.left)) - 1
        for m in self.edges:
            if m & ~full:
                raise ValueError("edge joins a right vertex to a non-existent left vertex")

    def left_neighbours(self, i):
        """Mask over right indices adjacent to left vertex ``i``."""
        m = 0
        for j, e in enumerate(self.edges):
            if e >> i & 1:
                m |= 1 << j
        return m

    @property
    def edge_count(self):
        return sum(m.bit_count() for m in self.edges)


def neighbourhood_graph(g):
    """Left copy ``(v, 0)`` is joined to right copy ``(w, 1)`` iff ``w`` in N[v]."""
    left = tuple((v, 0) for v in range(g.n))
    right = tuple((v, 1) for v in range(g.n))
    return BipartiteGraph(left, right, g.closed, g.probs, g.unit)


# -- text format ---------------------------------------------------------------


def parse_graph(text, probs=None):
    """Parse the edge-list format: ``n m`` then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.  Duplicate edges
    collapse; self-loops and out-of-range indices raise :class:`ParseError`.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("missing header 'n m'", 1)
    lineno, head = rows[0]
    n, m = _ints(head, 2, lineno)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the limit of {MAX_VERTICES}", lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(f"header announces {m} edges, found {len(body)}", where)
    adj = [0] * n
    for lineno, fields in body:
        u, v = _ints(fields, 2, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), probs)


def _ints(fields, count, lineno):
    if len(fields) != count:
        raise ParseError(f"expected {count} integers, got {len(fields)} fields", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(fields)!r}", lineno) from None


def render_graph(g):
    edges = g.edges
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_probability(text):
    """Parse a decimal or ``a/b`` fraction exactly; reject values outside [0, 1]."""
    try:
        p = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a probability: {text!r}") from None
    if not 0 <= p <= 1:
        raise ValueError(f"probability {text!r} outside [0, 1]")
    return p


def parse_probs(text, n, default=None):
    """Parse ``v p_v`` lines into a length-``n`` vector; unlisted vertices get ``default``."""
    probs = [default] * n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("expected 'v p_v'", lineno)
        try:
            v = int(fields[0])
        except ValueError:
            raise ParseError(f"bad vertex index {fields[0]!r}", lineno) from None
        if not 0 <= v < n:
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        try:
            probs[v] = parse_probability(fields[1])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    missing = [v for v, p in enumerate(probs) if p is None]
    if missing:
        raise ParseError(f"no probability for vertices {missing} and no default given")
    return probs


# -- generators ----------------------------------------------------------------


def empty_graph(n):
    return Graph.from_edges(n, [])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(s, t):
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def grid_graph(rows, cols):
    """Grid with vertex ``r * cols + c`` at row ``r``, column ``c``."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def disjoint_union(g, h):
    shift = g.n
    edges = g.edges + [(u + shift, v + shift) for u, v in h.edges]
    return Graph.from_edges(g.n + h.n, edges, g.probs + h.probs)


def join(g, h):
    shift = g.n
    edges = g.edges + [(u + shift, v + shift) for u, v in h.edges]
    edges += [(u, shift + w) for u in range(g.n) for w in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges, g.probs + h.probs)
