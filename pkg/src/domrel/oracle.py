"""Brute-force ground truth by complete state enumeration.

Every routine here walks all ``2^n`` vertex subsets and tests domination
directly.  Nothing is shared with the engines beyond the graph itself.
"""

from __future__ import annotations

from .errors import SizeError
from .poly import Polynomial

MAX_ORACLE_VERTICES = 20


def _check(g):
    if g.n > MAX_ORACLE_VERTICES:
        raise SizeError(f"oracle refuses {g.n} vertices (limit {MAX_ORACLE_VERTICES})")


def dominating_subsets(g):
    """Yield every dominating subset of ``g`` as a bitmask."""
    _check(g)
    full = g.full
    closed = g.closed
    n = g.n
    for s in range(1 << n):
        covered = 0
        for v in range(n):
            if s >> v & 1:
                covered |= closed[v]
                if covered == full:
                    break
        if covered == full:
            yield s


def oracle_drel(g):
    """Sum over dominating J of prod_{J} p_v * prod_{V-J} q_v."""
    one = g.unit
    total = one * 0
    probs = g.probs
    comps = [one - p for p in probs]
    for s in dominating_subsets(g):
        term = one
        for v in range(g.n):
            term = term * (probs[v] if s >> v & 1 else comps[v])
        total = total + term
    return total


def oracle_dompoly(g):
    """Counts ``d[k]`` of dominating sets of each size ``k = 0..n``."""
    d = [0] * (g.n + 1)
    for s in dominating_subsets(g):
        d[s.bit_count()] += 1
    return d


def oracle_drel_poly(g):
    """DRel(G, p) as a polynomial: sum of p^|J| (1-p)^(n-|J|) over dominating J."""
    n = g.n
    p = Polynomial([0, 1])
    q = Polynomial([1, -1])
    total = Polynomial()
    for k, count in enumerate(oracle_dompoly(g)):
        if count:
            total = total + count * p**k * q ** (n - k)
    return total


def oracle_domination_number(g):
    return min(s.bit_count() for s in dominating_subsets(g))


def oracle_edge_probability(ps, unit=1):
    """Probability that at least one of independent events ``ps`` occurs.

    Literal alternating sum over the nonempty index subsets; exponential in
    ``len(ps)`` and kept only as a cross-check for the closed form.
    """
    k = len(ps)
    total = unit * 0
    for s in range(1, 1 << k):
        term = unit
        for i in range(k):
            if s >> i & 1:
                term = term * ps[i]
        total = total + term if s.bit_count() % 2 else total - term
    return total
