"""Cotree recognition and polynomial-time evaluation on cographs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructuralError
from .graph import bits_of


@dataclass(frozen=True)
class Cotree:
    kind: str  # "leaf", "sum" or "join"
    vertex: int | None = None
    children: tuple[Cotree, ...] = ()

    @classmethod
    def leaf(cls, v):
        return cls("leaf", v)

    def leaves(self):
        if self.kind == "leaf":
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]

    def size(self):
        return 1 + sum(c.size() for c in self.children)

    def edges(self):
        """Edges of the generated graph: a join adds all cross pairs."""
        out = []
        if self.kind == "join":
            parts = [c.leaves() for c in self.children]
            for i, a in enumerate(parts):
                for b in parts[i + 1 :]:
                    out.extend((min(u, w), max(u, w)) for u in a for w in b)
        for c in self.children:
            out.extend(c.edges())
        return out

    def render(self):
        if self.kind == "leaf":
            return str(self.vertex)
        return f"{self.kind}(" + ",".join(c.render() for c in self.children) + ")"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class NotACograph:
    """Verdict for a graph containing an induced path ``a - b - c - d``."""

    witness: tuple[int, int, int, int]

    def __bool__(self):
        return False


def _components(adj, s):
    """Connected components of the subgraph induced on mask ``s``."""
    comps = []
    rest = s
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= adj[v]
            frontier = nxt & s & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _find_p4(adj, s):
    for b in bits_of(s):
        for c in bits_of(adj[b] & s):
            a_side = adj[b] & s & ~adj[c] & ~(1 << c)
            d_side = adj[c] & s & ~adj[b] & ~(1 << b)
            for a in bits_of(a_side):
                d_ok = d_side & ~adj[a] & ~(1 << a)
                if d_ok:
                    d = (d_ok & -d_ok).bit_length() - 1
                    return (a, b, c, d)
    raise AssertionError("connected, co-connected subgraph without an induced P4")


def recognize_cograph(g):
    """Cotree of ``g``, or :class:`NotACograph` carrying an induced P4.

    Splits each vertex set into components of the graph or, failing that,
    of its complement; a set where both are connected holds an induced P4.
    """
    adj = g.adj
    full = g.full
    co_adj = [full & ~m & ~(1 << v) for v, m in enumerate(adj)]

    def build(s):
        if s & (s - 1) == 0:
            return Cotree.leaf(s.bit_length() - 1)
        parts = _components(adj, s)
        if len(parts) > 1:
            return Cotree("sum", children=tuple(build(p) for p in parts))
        parts = _components(co_adj, s)
        if len(parts) > 1:
            return Cotree("join", children=tuple(build(p) for p in parts))
        raise _Witness(_find_p4(adj, s))

    if g.n == 0:
        return Cotree("sum")
    try:
        return build(full)
    except _Witness as w:
        return NotACograph(w.path)


class _Witness(Exception):
    def __init__(self, path):
        self.path = path


def drel_cograph(t, probs, unit=None):
    """Bottom-up evaluation carrying (DRel, product of failure probabilities).

    Sums multiply both components; joins fold the children pairwise with
    DRel(G*H) = (1 - Q_G)(1 - Q_H) + Q_H DRel(G) + Q_G DRel(H).
    """
    if unit is None:
        unit = probs[0] * 0 + 1 if len(probs) else 1

    def ev(node):
        if node.kind == "leaf":
            p = probs[node.vertex]
            return p, unit - p
        pairs = [ev(c) for c in node.children]
        if not pairs:
            return unit, unit
        d, q = pairs[0]
        if node.kind == "sum":
            for d2, q2 in pairs[1:]:
                d, q = d * d2, q * q2
        else:
            for d2, q2 in pairs[1:]:
                d = (unit - q) * (unit - q2) + q2 * d + q * d2
                q = q * q2
        return d, q

    return ev(t)[0]


def drel_cograph_graph(g):
    """DRel of a graph through its cotree; raises :class:`StructuralError` otherwise."""
    t = recognize_cograph(g)
    if isinstance(t, NotACograph):
        raise StructuralError(f"not a cograph: induced P4 {t.witness}")
    return drel_cograph(t, g.probs, g.unit)
