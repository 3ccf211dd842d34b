"""Domination polynomial D_G(x) and its link to DRel(G, p).

DRel(G, p) = q^n D_G(p/q), so ``d`` and the DRel coefficients ``a`` determine
each other through binomial transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ParameterError, StructuralError
from .exact import drel_recursive
from .graph import min_degree
from .ie import pruning_constraints, admissible_subsets
from .poly import Polynomial


@dataclass(frozen=True)
class DominationPolynomial:
    """``d[k]`` counts the dominating sets of size ``k``, for ``k = 0..n``."""

    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(c) for c in self.d))

    @property
    def n(self):
        return len(self.d) - 1

    def __getitem__(self, k):
        return self.d[k]

    def __len__(self):
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def __eq__(self, other):
        if isinstance(other, DominationPolynomial):
            return self.d == other.d
        if isinstance(other, (list, tuple)):
            return self.d == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.d)

    def as_polynomial(self):
        return Polynomial(self.d)

    def domination_number(self):
        return self.as_polynomial().lowest_degree()

    def total(self):
        return sum(self.d)

    def to_text(self):
        return self.as_polynomial().to_text("x")

    def to_json(self):
        return self.as_polynomial().to_json()

    def __repr__(self):
        return f"DominationPolynomial({list(self.d)})"


def drel_to_dompoly(a, n):
    """d[j] = sum_k a[k] C(n-k, j-k), read off D_G(x) = sum_k a_k x^k (1+x)^(n-k)."""
    a = a if isinstance(a, Polynomial) else Polynomial(a)
    if a.degree > n:
        raise ParameterError(f"degree {a.degree} exceeds vertex count {n}")
    d = [0] * (n + 1)
    for k, ak in enumerate(a.coeffs):
        if ak:
            for j in range(k, n + 1):
                d[j] += ak * comb(n - k, j - k)
    return DominationPolynomial(d)


def dompoly_to_drel(d):
    """a_k = (-1)^k sum_{l<=k} (-1)^l d_l C(n-l, n-k)."""
    d = d.d if isinstance(d, DominationPolynomial) else tuple(d)
    n = len(d) - 1
    a = []
    for k in range(n + 1):
        s = 0
        for l in range(k + 1):
            if d[l]:
                s += (-1) ** l * d[l] * comb(n - l, n - k)
        a.append((-1) ** k * s)
    return Polynomial(a)


def dompoly_to_drel_in_q(d):
    """Coefficients of DRel(G, 1 - q) as a polynomial in q."""
    d = d.d if isinstance(d, DominationPolynomial) else tuple(d)
    n = len(d) - 1
    b = []
    for k in range(n + 1):
        s = 0
        for l in range(k + 1):
            if d[n - l]:
                s += (-1) ** l * d[n - l] * comb(n - l, n - k)
        b.append((-1) ** k * s)
    return Polynomial(b)


def _x_plus_one_powers(n):
    powers = [Polynomial([1])]
    for _ in range(n):
        powers.append(powers[-1].shift_pow(1))
    return powers


def dompoly_ie(g, pruning="none", ordering=None, form="full"):
    """D_G(x) as an alternating sum over vertex subsets J.

    ``form="full"`` sums (-1)^|J| (x+1)^(n-|N[J]|) over admissible J;
    ``form="truncated"`` sums (-1)^|J| [(x+1)^(n-|N[J]|) - 1] over admissible
    J with |J| <= n - min degree.  ``pruning`` as in :func:`domrel.ie.drel_ie`.
    """
    if g.n == 0:
        raise StructuralError("the domination polynomial expansion needs a non-empty graph")
    if form not in ("full", "truncated"):
        raise ValueError(f"unknown form {form!r}")
    n = g.n
    allowed, forbidden = pruning_constraints(g, pruning, ordering)
    limit = n - min_degree(g) if form == "truncated" else None
    # signed count of J per exponent n - |N[J]|
    by_exp = [0] * (n + 1)
    for _, cov, size in admissible_subsets(g, allowed, forbidden, limit):
        by_exp[n - cov.bit_count()] += -1 if size & 1 else 1
    powers = _x_plus_one_powers(n)
    total = Polynomial()
    for e, c in enumerate(by_exp):
        if c:
            term = powers[e] - 1 if form == "truncated" else powers[e]
            total = total + c * term
    coeffs = list(total.coeffs) + [0] * (n + 1 - len(total.coeffs))
    return DominationPolynomial(coeffs)


def solve_exact(matrix, rhs):
    """Gaussian elimination over Fractions, pivoting on the largest magnitude."""
    size = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        piv = max(range(col, size), key=lambda r: abs(m[r][col]))
        if m[piv][col] == 0:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        pivot_row = m[col]
        for r in range(col + 1, size):
            f = m[r][col] / pivot_row[col]
            if f:
                row = m[r]
                for c in range(col, size + 1):
                    row[c] -= f * pivot_row[c]
    x = [Fraction(0)] * size
    for r in range(size - 1, -1, -1):
        s = m[r][size] - sum(m[r][c] * x[c] for c in range(r + 1, size))
        x[r] = s / m[r][r]
    return x


def dompoly_vandermonde(g, drel=drel_recursive):
    """Recover D_G from exact DRel values at p_i = i/(n+1), i = 0..n.

    Solves sum_k d_k (p_i/q_i)^k = q_i^(-n) DRel(G, p_i) for the d_k.
    """
    n = g.n
    matrix, rhs = [], []
    for i in range(n + 1):
        p = Fraction(i, n + 1)
        q = 1 - p
        ratio = p / q
        matrix.append([ratio**k for k in range(n + 1)])
        rhs.append(drel(g.with_uniform(p)) / q**n)
    sol = solve_exact(matrix, rhs)
    if any(x.denominator != 1 for x in sol):
        raise ArithmeticError(f"non-integral solution {sol}")
    return DominationPolynomial([x.numerator for x in sol])
