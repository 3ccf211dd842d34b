"""Hypergraph coverage probability and its equivalence with DRel."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .exact import drel_recursive
from .graph import Graph, bits_of, mask_of, parse_probability, unit_like

MAX_ENUMERATED_EDGES = 20


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``0..n-1``; each edge is ``(member mask, operating probability)``."""

    n: int
    edges: tuple[tuple[int, object], ...]
    unit: object = None

    def __post_init__(self):
        edges = tuple((int(m), p) for m, p in self.edges)
        full = (1 << self.n) - 1
        for i, (m, p) in enumerate(edges):
            if not m:
                raise ValueError(f"edge {i} is empty")
            if m & ~full:
                raise ValueError(f"edge {i} has a member outside 0..{self.n - 1}")
            if isinstance(p, (int, float, Fraction)) and not 0 <= p <= 1:
                raise ValueError(f"edge {i} probability outside [0, 1]: {p}")
        object.__setattr__(self, "edges", edges)
        if self.unit is None:
            object.__setattr__(self, "unit", unit_like(edges[0][1]) if edges else Fraction(1))

    @classmethod
    def from_lists(cls, n, edges):
        """``edges`` as ``(members, p)`` pairs with members an iterable of vertices."""
        return cls(n, tuple((mask_of(ms), p) for ms, p in edges))

    def members(self, i):
        return list(bits_of(self.edges[i][0]))


def coverage_enumerate(h):
    """Direct sum over all 2^|E| edge states."""
    m = len(h.edges)
    if m > MAX_ENUMERATED_EDGES:
        raise ValueError(f"{m} edges is too many to enumerate (limit {MAX_ENUMERATED_EDGES})")
    one = h.unit
    full = (1 << h.n) - 1
    total = one * 0
    for s in range(1 << m):
        cov = 0
        for i in range(m):
            if s >> i & 1:
                cov |= h.edges[i][0]
        if cov != full:
            continue
        term = one
        for i, (_, p) in enumerate(h.edges):
            term = term * (p if s >> i & 1 else one - p)
        total = total + term
    return total


def cov_to_drel(h):
    """Graph on vertices + edges whose DRel equals Cov(h).

    Hypergraph vertex ``v`` keeps index ``v`` with probability 0; edge ``i``
    becomes vertex ``n + i``, adjacent to its members and to every other
    edge vertex.
    """
    n, m = h.n, len(h.edges)
    pairs = []
    for i, (members, _) in enumerate(h.edges):
        pairs.extend((v, n + i) for v in bits_of(members))
        pairs.extend((n + i, n + j) for j in range(i + 1, m))
    zero = h.unit * 0
    probs = [zero] * n + [p for _, p in h.edges]
    g = Graph.from_edges(n + m, pairs, probs)
    return Graph(g.n, g.adj, g.probs, h.unit)


def coverage(h, method="reduction"):
    """Cov(h): probability that the operating edges cover every vertex.

    ``method="reduction"`` runs the recursive DRel engine on
    :func:`cov_to_drel`; ``"enumerate"`` sums over the edge states.
    """
    if method == "reduction":
        return drel_recursive(cov_to_drel(h))
    if method == "enumerate":
        return coverage_enumerate(h)
    raise ValueError(f"unknown coverage method {method!r}")


def drel_to_cov(g):
    """Hypergraph whose edges are the distinct closed neighbourhoods of ``g``.

    An edge operates iff some vertex with that closed neighbourhood does:
    p_E = 1 - prod (1 - p_v) over those vertices.
    """
    groups = {}
    for v in range(g.n):
        groups.setdefault(g.closed[v], []).append(v)
    edges = []
    for mask, vs in groups.items():
        fail = g.unit
        for v in vs:
            fail = fail * (g.unit - g.probs[v])
        edges.append((mask, g.unit - fail))
    return Hypergraph(g.n, tuple(edges), g.unit)


def parse_hypergraph(text):
    """Format: ``n m`` then ``m`` lines ``p_E k v1 ... vk``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("missing header 'n m'", 1)
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise ParseError("header must be two integers 'n m'", lineno) from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", lineno)
    edges = []
    for lineno, fields in body:
        if len(fields) < 2:
            raise ParseError("expected 'p_E k v1 ... vk'", lineno)
        try:
            p = parse_probability(fields[0])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        try:
            k = int(fields[1])
            vs = [int(x) for x in fields[2:]]
        except ValueError:
            raise ParseError("arity and members must be integers", lineno) from None
        if k < 1 or len(vs) != k:
            raise ParseError(f"arity {k} does not match {len(vs)} listed members", lineno)
        if any(not 0 <= v < n for v in vs):
            raise ParseError(f"member index out of range 0..{n - 1}", lineno)
        edges.append((mask_of(vs), p))
    return Hypergraph(n, tuple(edges))


def render_hypergraph(h):
    lines = [f"{h.n} {len(h.edges)}"]
    for mask, p in h.edges:
        vs = list(bits_of(mask))
        lines.append(" ".join([str(p), str(len(vs))] + [str(v) for v in vs]))
    return "\n".join(lines) + "\n"
