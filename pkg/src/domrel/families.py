"""Closed forms and recurrences for special graph families (common p)."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParameterError
from .graph import complete_bipartite_graph, complete_graph, cycle_graph, empty_graph, path_graph
from .poly import Polynomial

P = Polynomial([0, 1])
Q = Polynomial([1, -1])
ONE = Polynomial([1])

FAMILIES = ("L", "K", "Kst", "P", "C")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 0
    s: int = 0
    t: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "Kst":
            if self.s < 1 or self.t < 1:
                raise ParameterError("K_{s,t} needs s >= 1 and t >= 1")
            object.__setattr__(self, "n", self.s + self.t)
        elif self.family == "C":
            if self.n < 3:
                raise ParameterError("cycles need n >= 3")
        elif self.n < 1:
            raise ParameterError(f"{self.family}_n needs n >= 1")

    @classmethod
    def parse(cls, text):
        """Parse ``P:10``, ``C:7``, ``K:5``, ``L:6`` or ``Kst:3,4``."""
        m = re.fullmatch(r"\s*(Kst|[LKPC])\s*:\s*(\d+)\s*(?:,\s*(\d+)\s*)?", text)
        if not m:
            raise ParameterError(f"bad family spec {text!r}; try P:10 or Kst:3,4")
        fam, a, b = m.groups()
        if fam == "Kst":
            if b is None:
                raise ParameterError("Kst needs two sizes, e.g. Kst:3,4")
            return cls(fam, s=int(a), t=int(b))
        if b is not None:
            raise ParameterError(f"{fam} takes a single size")
        return cls(fam, n=int(a))

    def graph(self):
        """The explicit graph this spec denotes."""
        if self.family == "L":
            return empty_graph(self.n)
        if self.family == "K":
            return complete_graph(self.n)
        if self.family == "Kst":
            return complete_bipartite_graph(self.s, self.t)
        if self.family == "P":
            return path_graph(self.n)
        return cycle_graph(self.n)

    def __str__(self):
        if self.family == "Kst":
            return f"Kst:{self.s},{self.t}"
        return f"{self.family}:{self.n}"


def path_polynomials(n):
    """[DRel(P_0), ..., DRel(P_n)] built bottom-up; DRel(P_0) = 1."""
    d = [ONE, P, 2 * P - P**2][: n + 1]
    pq = P * Q
    for m in range(3, n + 1):
        acc = P ** (m - 2) + pq * d[m - 2]
        tail = Polynomial()
        for k in range(3, m):
            tail = tail + P ** (k - 2) * d[m - k]
        d.append(acc + Q * tail)
    return d


def anchored_path_polynomials(n):
    """[_, D*_1, ..., D*_n]: path domination given both end vertices are dominated."""
    d = [ONE, ONE, ONE, 3 * P - 3 * P**2 + P**3][: n + 1]
    for m in range(4, n + 1):
        d.append(P * d[m - 1] + P * Q * d[m - 2] + P * Q**2 * d[m - 3])
    return d


def drel_family(spec):
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    f, n = spec.family, spec.n
    if f == "L":
        return P**n
    if f == "K":
        return 1 - Q**n
    if f == "Kst":
        s, t = spec.s, spec.t
        return (1 - Q**s) * (1 - Q**t) + Q**s * P**t + Q**t * P**s
    if f == "P":
        return path_polynomials(n)[n]
    if n == 3:
        return 3 * P - 3 * P**2 + P**3
    if n == 4:
        return 6 * P**2 - 8 * P**3 + 3 * P**4
    ds = anchored_path_polynomials(n - 1)
    return P * ds[n - 1] + P**2 * Q * ds[n - 3] + 2 * P**2 * Q**2 * ds[n - 4]
