"""Command-line front end: ``domrel <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .cograph import NotACograph, drel_cograph, recognize_cograph
from .dompoly import DominationPolynomial, dompoly_ie, dompoly_vandermonde, drel_to_dompoly
from .errors import DomrelError, StructuralError
from .exact import drel_recursive, drel_via_neighbourhood
from .families import FamilySpec, drel_family
from .graph import Graph, grid_graph, parse_graph, parse_probability, parse_probs
from .hypergraph import coverage, parse_hypergraph
from .ie import bonferroni_bounds, drel_ie, drel_ie_truncated
from .oracle import MAX_ORACLE_VERTICES, oracle_dompoly, oracle_drel, oracle_drel_poly
from .poly import Polynomial

IE_MAX_VERTICES = 30

GRID5_COEFFS = {
    7: 22, 8: 1149, 9: -305, 10: -29032, 11: 115946, 12: -201109, 13: 132628,
    14: 136084, 15: -414834, 16: 475677, 17: -316811, 18: 117544, 19: -8108,
    20: -15506, 21: 8517, 22: -2066, 23: 196, 24: 12, 25: -3,
}
TWIN_TREES_COEFFS = {3: 4, 5: -7, 6: 5, 7: -1}

DREL_ENGINES = ("auto", "recursive", "neighbourhood", "ie", "ie-broken", "ie-deg1", "ie-trunc", "cograph", "oracle")
DOMPOLY_ENGINES = DREL_ENGINES + ("vandermonde",)


class UsageError(DomrelError):
    pass


def grid5_polynomial():
    return Polynomial([GRID5_COEFFS.get(k, 0) for k in range(26)])


def twin_trees():
    """The two non-isomorphic 7-vertex trees sharing one DRel polynomial."""
    # A-B-C-D-E with F, G on C
    first = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (2, 6)])
    # H-I-J-K-L with M on I and N on J
    second = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6)])
    return first, second


# -- engines -------------------------------------------------------------------


def _check_size(engine, g):
    if engine.startswith("ie") and g.n > IE_MAX_VERTICES:
        raise UsageError(f"engine {engine} is limited to {IE_MAX_VERTICES} vertices (graph has {g.n})")
    if engine == "oracle" and g.n > MAX_ORACLE_VERTICES:
        raise UsageError(f"engine oracle is limited to {MAX_ORACLE_VERTICES} vertices (graph has {g.n})")


def resolve_engine(engine, g):
    if engine != "auto":
        return engine
    return "cograph" if not isinstance(recognize_cograph(g), NotACograph) else "recursive"


def run_engine(engine, g):
    """DRel of ``g`` in whatever domain its probabilities live in."""
    _check_size(engine, g)
    if engine == "recursive":
        return drel_recursive(g)
    if engine == "neighbourhood":
        return drel_via_neighbourhood(g)
    if engine == "ie":
        return drel_ie(g)
    if engine == "ie-broken":
        return drel_ie(g, "broken")
    if engine == "ie-deg1":
        return drel_ie(g, "degree1")
    if engine == "ie-trunc":
        return drel_ie_truncated(g)
    if engine == "cograph":
        t = recognize_cograph(g)
        if isinstance(t, NotACograph):
            raise StructuralError(f"not a cograph: induced P4 {t.witness}")
        return drel_cograph(t, g.probs, g.unit)
    if engine == "oracle":
        return oracle_drel(g)
    raise UsageError(f"unknown engine {engine!r}")


def run_dompoly_engine(engine, g):
    _check_size(engine, g)
    if engine == "vandermonde":
        return dompoly_vandermonde(g)
    if engine == "oracle":
        return DominationPolynomial(oracle_dompoly(g))
    if engine in ("ie", "ie-broken", "ie-deg1", "ie-trunc"):
        if g.n == 0:
            raise StructuralError("the domination polynomial expansion needs a non-empty graph")
        pruning = {"ie": "none", "ie-broken": "broken", "ie-deg1": "degree1", "ie-trunc": "none"}[engine]
        form = "truncated" if engine == "ie-trunc" else "full"
        return dompoly_ie(g, pruning, form=form)
    return drel_to_dompoly(run_engine(engine, g.symbolic()), g.n)


# -- formatting ----------------------------------------------------------------


def format_value(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Polynomial):
        v = v[0]
    return str(Fraction(v))


def curve_points(poly, k):
    if k < 1:
        raise UsageError("--curve needs K >= 1")
    return [(Fraction(i, k), poly.eval(Fraction(i, k))) for i in range(k + 1)]


def curve_csv(points):
    lines = ["p,drel"] + [f"{float(p):.6g},{float(v):.12g}" for p, v in points]
    return "\n".join(lines)


def emit(args, engine, n, started, value=None, poly=None, extra=None, text=None, curve=None):
    millis = int((time.perf_counter() - started) * 1000)
    if args.json:
        doc = {
            "value": None if value is None else format_value(value),
            "poly": None if poly is None else [str(c) for c in poly],
            "engine": engine,
            "n": n,
            "millis": millis,
        }
        if curve is not None:
            doc["curve"] = [[str(p), str(v)] for p, v in curve]
        if extra:
            doc.update(extra)
        print(json.dumps(doc))
    elif curve is not None:
        print(curve_csv(curve))
    else:
        print(text)


# -- input ---------------------------------------------------------------------


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def load_graph(args):
    if getattr(args, "hypergraph", None):
        raise UsageError(f"{args.command} takes --graph or --family, not --hypergraph")
    if args.graph and args.family:
        raise UsageError("give exactly one of --graph / --family")
    if args.graph:
        return parse_graph(_read(args.graph))
    if args.family:
        return FamilySpec.parse(args.family).graph()
    raise UsageError("an input is required: --graph FILE or --family SPEC")


def with_probabilities(args, g, required=True):
    """Apply --p / --probs; ``None`` if neither was given and not required."""
    default = parse_probability(args.p) if args.p is not None else None
    if args.probs:
        probs = parse_probs(_read(args.probs), g.n, default)
    elif default is not None:
        probs = [default] * g.n
    elif required:
        raise UsageError("a probability is required: --p VALUE or --probs FILE")
    else:
        return None
    if args.float:
        probs = [float(p) for p in probs]
        return Graph(g.n, g.adj, tuple(probs), 1.0)
    return Graph(g.n, g.adj, tuple(probs), Fraction(1))


# -- subcommands ---------------------------------------------------------------


def cmd_drel(args):
    started = time.perf_counter()
    g = load_graph(args)
    engine = resolve_engine(args.engine, g)
    if args.curve is not None:
        if args.probs:
            raise UsageError("--curve needs a common probability, not --probs")
        poly = run_engine(engine, g.symbolic())
        emit(args, engine, g.n, started, poly=poly, curve=curve_points(poly, args.curve))
        return 0
    gp = with_probabilities(args, g)
    value = run_engine(engine, gp)
    emit(args, engine, g.n, started, value=value, text=format_value(value))
    return 0


def cmd_poly(args):
    started = time.perf_counter()
    if args.p is not None or args.probs:
        raise UsageError("poly computes the polynomial in a common p; drop --p/--probs")
    g = load_graph(args)
    engine = resolve_engine(args.engine, g)
    poly = run_engine(engine, g.symbolic())
    curve = curve_points(poly, args.curve) if args.curve is not None else None
    emit(args, engine, g.n, started, poly=poly, text=poly.to_text(), curve=curve)
    return 0


def cmd_dompoly(args):
    started = time.perf_counter()
    g = load_graph(args)
    engine = resolve_engine(args.engine, g)
    d = run_dompoly_engine(engine, g)
    emit(args, engine, g.n, started, poly=d.d, text=d.to_text())
    return 0


def cmd_oracle(args):
    started = time.perf_counter()
    g = load_graph(args)
    _check_size("oracle", g)
    gp = with_probabilities(args, g, required=False)
    if gp is None:
        poly = oracle_drel_poly(g)
        curve = curve_points(poly, args.curve) if args.curve is not None else None
        emit(args, "oracle", g.n, started, poly=poly, text=poly.to_text(), curve=curve)
    else:
        value = oracle_drel(gp)
        emit(args, "oracle", g.n, started, value=value, text=format_value(value))
    return 0


def cmd_bounds(args):
    started = time.perf_counter()
    if args.order is None or args.order < 0:
        raise UsageError("bounds needs --order R with R >= 0")
    g = load_graph(args)
    _check_size("ie", g)
    gp = with_probabilities(args, g)
    lower, upper = bonferroni_bounds(gp, args.order)
    extra = {"lower": format_value(lower), "upper": format_value(upper), "order": args.order}
    emit(args, "bonferroni", g.n, started, extra=extra,
         text=f"lower {format_value(lower)}\nupper {format_value(upper)}")
    return 0


def cmd_coverage(args):
    started = time.perf_counter()
    if not args.hypergraph:
        raise UsageError("coverage needs --hypergraph FILE")
    if args.graph or args.family:
        raise UsageError("coverage takes --hypergraph only")
    h = parse_hypergraph(_read(args.hypergraph))
    if args.engine in ("auto", "recursive"):
        engine, value = "recursive", coverage(h, "reduction")
    elif args.engine == "oracle":
        engine, value = "oracle", coverage(h, "enumerate")
    else:
        raise UsageError(f"engine {args.engine} is not available for coverage (use recursive or oracle)")
    if args.float:
        value = float(value)
    emit(args, engine, h.n, started, value=value, text=format_value(value))
    return 0


def cmd_family(args):
    started = time.perf_counter()
    spec = FamilySpec.parse(args.spec)
    poly = drel_family(spec)
    if args.p is not None:
        p = parse_probability(args.p)
        value = float(poly.eval(p)) if args.float else poly.eval(p)
        emit(args, "closed-form", spec.n, started, value=value, poly=poly, text=format_value(value))
    else:
        curve = curve_points(poly, args.curve) if args.curve is not None else None
        emit(args, "closed-form", spec.n, started, poly=poly, text=poly.to_text(), curve=curve)
    return 0


def cmd_bench(args):
    if args.target == "grid5":
        g, expected = grid_graph(5, 5), grid5_polynomial()
        graphs = [g]
    else:
        graphs = list(twin_trees())
        expected = Polynomial([TWIN_TREES_COEFFS.get(k, 0) for k in range(8)])
    ok = True
    rows = []
    for g in graphs:
        started = time.perf_counter()
        got = drel_recursive(g)
        secs = time.perf_counter() - started
        lo = expected.lowest_degree()
        mismatched = [k for k in range(max(len(got), len(expected))) if got[k] != expected[k]]
        ok = ok and not mismatched
        rows.append({
            "n": g.n,
            "match": not mismatched,
            "mismatched_powers": mismatched,
            "coefficients_checked": len(expected) - lo,
            "powers": [lo, expected.degree],
            "seconds": round(secs, 4),
            "poly": [str(c) for c in got],
        })
    if args.json:
        print(json.dumps({"target": args.target, "match": ok, "runs": rows}))
    else:
        for r in rows:
            status = "MATCH" if r["match"] else f"MISMATCH at powers {r['mismatched_powers']}"
            lo, hi = r["powers"]
            print(f"{args.target}: n={r['n']} {status}: {r['coefficients_checked']} coefficients "
                  f"p^{lo}..p^{hi}, {r['seconds']:.3f}s")
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------


def _add_common(sp, engines=DREL_ENGINES):
    src = sp.add_argument_group("input")
    src.add_argument("--graph", metavar="FILE", help="edge-list file ('-' for stdin)")
    src.add_argument("--family", metavar="SPEC", help="P:10, C:7, K:5, Kst:3,4 or L:6")
    src.add_argument("--hypergraph", metavar="FILE", help="hypergraph file")
    sp.add_argument("--p", metavar="VALUE", help="common vertex reliability, decimal or a/b")
    sp.add_argument("--probs", metavar="FILE", help="per-vertex reliabilities, lines 'v p_v'")
    sp.add_argument("--engine", choices=engines, default="auto")
    sp.add_argument("--order", type=int, metavar="R", help="Bonferroni truncation order")
    sp.add_argument("--curve", type=int, metavar="K", help="emit K+1 (p, DRel) samples on [0, 1] as CSV")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.add_argument("--float", action="store_true", help="floating-point instead of exact arithmetic")


def build_parser():
    parser = argparse.ArgumentParser(prog="domrel", description="Exact domination reliability of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_ in [
        ("drel", cmd_drel, "domination reliability value"),
        ("poly", cmd_poly, "domination reliability polynomial"),
        ("dompoly", cmd_dompoly, "domination polynomial"),
        ("coverage", cmd_coverage, "hypergraph coverage probability"),
        ("oracle", cmd_oracle, "brute-force state enumeration"),
        ("bounds", cmd_bounds, "Bonferroni bracket from truncated inclusion-exclusion"),
    ]:
        sp = sub.add_parser(name, help=help_)
        _add_common(sp, DOMPOLY_ENGINES if name == "dompoly" else DREL_ENGINES)
        sp.set_defaults(func=fn)
    sp = sub.add_parser("family", help="closed form for a graph family")
    sp.add_argument("spec", help="P:10, C:7, K:5, Kst:3,4 or L:6")
    sp.add_argument("--p", metavar="VALUE")
    sp.add_argument("--curve", type=int, metavar="K")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--float", action="store_true")
    sp.set_defaults(func=cmd_family)
    sp = sub.add_parser("bench", help="golden polynomial checks with timing")
    sp.add_argument("target", choices=("grid5", "twin-trees"))
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomrelError, ValueError, OSError) as exc:
        print(f"domrel {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
