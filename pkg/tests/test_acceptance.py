"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import random
import time
from fractions import Fraction

import pytest

from domrel.cli import GRID5_COEFFS, twin_trees
from domrel.cograph import NotACograph, drel_cograph, recognize_cograph
from domrel.dompoly import DominationPolynomial, dompoly_ie, dompoly_vandermonde, drel_to_dompoly
from domrel.exact import drel_recursive, drel_via_neighbourhood
from domrel.families import FamilySpec, drel_family
from domrel.graph import (
    complete_graph,
    cycle_graph,
    degree_sequence,
    grid_graph,
    has_isolated_edge,
    path_graph,
    refinement_signature,
)
from domrel.hypergraph import Hypergraph, cov_to_drel, coverage, coverage_enumerate, drel_to_cov
from domrel.ie import bonferroni_bounds, drel_ie, drel_ie_truncated
from domrel.oracle import oracle_domination_number, oracle_dompoly, oracle_drel, oracle_drel_poly
from domrel.poly import Polynomial

from .conftest import ACCEPTANCE_LINES
from .strategies import cotree_graph, random_cotree, random_graph, random_probs

P = Polynomial([0, 1])
Q = Polynomial([1, -1])
GRID_TIME_LIMIT = 60.0


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def random_weighted_graphs():
    rng = random.Random(20240401)
    out = []
    for _ in range(200):
        n = rng.randint(0, 12)
        g = random_graph(rng, n)
        out.append(g.with_probs(random_probs(rng, n)) if n else g.with_uniform(Fraction(1, 2)))
    return out


def test_criterion_1_grid_polynomial():
    started = time.perf_counter()
    got = drel_recursive(grid_graph(5, 5))
    seconds = time.perf_counter() - started
    expected = Polynomial([GRID5_COEFFS.get(k, 0) for k in range(26)])
    exact = got == expected and got.lowest_degree() == 7 and got.degree == 25
    record(1, "5x5 grid polynomial, 19 coefficients p^7..p^25", exact and seconds < GRID_TIME_LIMIT,
           f"{seconds:.2f}s, limit {GRID_TIME_LIMIT:.0f}s")


def test_criterion_2_twin_trees():
    first, second = twin_trees()
    expected = 4 * P**3 - 7 * P**5 + 5 * P**6 - P**7
    same = drel_recursive(first) == expected and drel_recursive(second) == expected
    distinct = (degree_sequence(first) != degree_sequence(second)
                and refinement_signature(first) != refinement_signature(second))
    record(2, "twin trees share 4p^3 - 7p^5 + 5p^6 - p^7 and are non-isomorphic", same and distinct,
           f"degree sequences {degree_sequence(first)} vs {degree_sequence(second)}")


def test_criterion_3_family_golden_values():
    failures = []
    for n in range(1, 11):
        if drel_recursive(complete_graph(n)) != 1 - Q**n:
            failures.append(f"K_{n}")
    if drel_recursive(path_graph(2)) != 2 * P - P**2:
        failures.append("P_2")
    if drel_recursive(cycle_graph(3)) != 3 * P - 3 * P**2 + P**3:
        failures.append("C_3")
    if drel_recursive(cycle_graph(4)) != 6 * P**2 - 8 * P**3 + 3 * P**4:
        failures.append("C_4")
    checked = 0
    for s in range(1, 12):
        for t in range(1, 13 - s):
            spec = FamilySpec("Kst", s=s, t=t)
            checked += 1
            if drel_family(spec) != oracle_drel_poly(spec.graph()):
                failures.append(str(spec))
    record(3, "K_n, P_2, C_3, C_4 and K_{s,t} (s+t<=12) exact", not failures,
           f"{checked} K_st checked" + (f"; failed {failures}" if failures else ""))


def test_criterion_4_oracle_equivalence(random_weighted_graphs):
    failures = []
    ie_runs = 0
    for i, g in enumerate(random_weighted_graphs):
        expected = oracle_drel(g)
        values = {"recursive": drel_recursive(g), "neighbourhood": drel_via_neighbourhood(g), "ie": drel_ie(g)}
        if g.n and all(g.adj):
            values["ie-broken"] = drel_ie(g, "broken")
            values["ie-broken-natural"] = drel_ie(g, "broken", range(g.n))
            values["ie-trunc"] = drel_ie_truncated(g)
            if not has_isolated_edge(g):
                values["ie-degree1"] = drel_ie(g, "degree1")
        ie_runs += sum(k.startswith("ie") for k in values)
        bad = [k for k, v in values.items() if v != expected]
        if bad:
            failures.append((i, bad))
    record(4, "200 random graphs: recursive = neighbourhood = IE modes = oracle", not failures,
           f"{ie_runs} IE evaluations" + (f"; failures {failures[:5]}" if failures else ""))


def test_criterion_5_cographs():
    rng = random.Random(7)
    failures = 0
    for _ in range(100):
        n = rng.randint(1, 14)
        g = cotree_graph(random_cotree(rng, list(range(n))))
        g = g.with_probs(random_probs(rng, n))
        t = recognize_cograph(g)
        if isinstance(t, NotACograph) or drel_cograph(t, g.probs, g.unit) != drel_recursive(g):
            failures += 1
    verdict = recognize_cograph(path_graph(4))
    p4_ok = isinstance(verdict, NotACograph) and verdict.witness in ((0, 1, 2, 3), (3, 2, 1, 0))
    record(5, "100 random cographs agree; P_4 rejected with witness", failures == 0 and p4_ok,
           f"{failures} disagreements, witness {getattr(verdict, 'witness', None)}")


def test_criterion_6_domination_polynomial(random_weighted_graphs):
    failures = []
    checked = 0
    for i, g in enumerate(random_weighted_graphs):
        if not 1 <= g.n <= 10:
            continue
        checked += 1
        d_ie = dompoly_ie(g)
        d_vm = dompoly_vandermonde(g)
        d_rec = drel_to_dompoly(drel_recursive(g.symbolic()), g.n)
        ok = d_ie == d_vm == d_rec == DominationPolynomial(oracle_dompoly(g))
        ok = ok and d_ie[0] == 0 and d_ie[g.n] == 1
        ok = ok and d_ie.domination_number() == oracle_domination_number(g)
        if not ok:
            failures.append(i)
    record(6, "dompoly IE = Vandermonde = converted recursive polynomial", not failures and checked > 0,
           f"{checked} graphs with 1 <= n <= 10" + (f"; failures {failures}" if failures else ""))


def test_criterion_7_hypergraph_round_trips():
    rng = random.Random(99)
    forward_bad = backward_bad = 0
    for _ in range(100):
        n = rng.randint(1, 6)
        m = rng.randint(0, 6)
        edges = tuple((rng.randint(1, 2**n - 1), p) for p in random_probs(rng, m))
        h = Hypergraph(n, edges, Fraction(1))
        if drel_recursive(cov_to_drel(h)) != coverage_enumerate(h):
            forward_bad += 1
    for _ in range(100):
        n = rng.randint(1, 10)
        g = random_graph(rng, n).with_probs(random_probs(rng, n))
        h = drel_to_cov(g)
        if coverage(h) != drel_recursive(g) or coverage_enumerate(h) != oracle_drel(g):
            backward_bad += 1
    record(7, "Cov -> DRel and DRel -> Cov reductions reproduce values", forward_bad == backward_bad == 0,
           f"{forward_bad} + {backward_bad} mismatches over 200 instances")


def test_criterion_8_bonferroni():
    rng = random.Random(8)
    failures = []
    for i in range(50):
        n = rng.randint(1, 10)
        g = random_graph(rng, n).with_probs(random_probs(rng, n))
        exact = drel_recursive(g)
        width = None
        for r in range(n + 1):
            lower, upper = bonferroni_bounds(g, r)
            if not lower <= exact <= upper or (width is not None and upper - lower > width):
                failures.append((i, r))
            width = upper - lower
        if width != 0:
            failures.append((i, "open at r=n"))
    record(8, "Bonferroni truncations bracket DRel with non-increasing width", not failures,
           f"50 graphs" + (f"; failures {failures[:5]}" if failures else ""))


def test_criterion_9_hardness_reduction_is_exercised():
    g = grid_graph(2, 3)
    ok = dompoly_vandermonde(g) == DominationPolynomial(oracle_dompoly(g))
    record(9, "NP-hardness is theory; its Vandermonde reduction runs (see criterion 6)", ok)
