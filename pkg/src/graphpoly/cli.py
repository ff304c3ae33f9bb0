"""Command-line entry point.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 guard.
Human output is canonical polynomial text; ``--json`` and the compare and
transform commands emit JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import equiv, guards, roots, soleval, suites, zoo
from . import graphs as G
from .guards import GUARDS, GuardExceeded
from .polys import BASES, basis_convert, canonical_text, divide_exact

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _graph(args) -> G.Graph:
    if args.graph is not None and args.edges is not None:
        raise UsageError("give either --graph or --edges, not both")
    if args.graph is not None:
        return G.parse_graph6(args.graph)
    if args.edges is not None:
        return G.parse_edges(args.edges)
    raise UsageError("a graph is required (--graph G6 or --edges 'n=3;0-1,1-2')")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="graph6 string")
    p.add_argument("--edges", help="edge list such as 'n=3;0-1,1-2'")


_BASIS_SYMBOL = {"falling": "{v}_({i})", "rising": "{v}^({i})", "binomial": "C({v},{i})"}


def _basis_text(coeffs, basis: str, var: str) -> str:
    """Highest basis element first, e.g. ``X_(3) - 3*X_(2)``."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        sym = _BASIS_SYMBOL[basis].format(v=var, i=i) if i else ""
        mag = abs(c)
        body = sym if mag == 1 and sym else (f"{mag}*{sym}" if sym else f"{mag}")
        parts.append(("- " if c < 0 else "+ ") + body)
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


# -- commands ------------------------------------------------------------------

def cmd_compute(args) -> int:
    P = zoo.get_poly(args.poly)
    g = _graph(args)
    p = P(g)
    if args.basis and args.basis != "power":
        if len(p.vars) > 1:
            raise UsageError("--basis needs a univariate polynomial")
        var = p.vars[0] if p.vars else "X"
        coeffs = basis_convert(p, "power", args.basis).univariate_coeffs()
        if args.json:
            print(_dump({"poly": P.name, "graph": G.encode_graph6(g), "basis": args.basis,
                         "var": var, "coeffs": [str(c) for c in coeffs]}))
        else:
            print(_basis_text(coeffs, args.basis, var))
        return EXIT_OK
    if args.json:
        print(_dump({"poly": P.name, "graph": G.encode_graph6(g), "value": p.to_json(),
                     "text": canonical_text(p)}))
    else:
        print(canonical_text(p))
    return EXIT_OK


def cmd_compare(args) -> int:
    P, Q = zoo.get_poly(args.left), zoo.get_poly(args.right)
    cat = equiv.parse_catalog_spec(args.catalog)
    fn = equiv.dp_compare if args.mode == "dp" else equiv.sdp_compare
    print(_dump(fn(P, Q, cat).to_json()))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = suites.SuiteConfig.quick() if args.quick else suites.SuiteConfig(seed=args.seed)
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    for n in names:
        if n not in suites.SUITES:
            raise UsageError(f"unknown suite {n!r}; known: all, {', '.join(suites.SUITES)}")
    results = [suites.run_suite(n, cfg) for n in names]
    if args.json:
        print(_dump([r.to_json() for r in results]))
    else:
        for r in results:
            for c in r.checks:
                print(f"{c.status.upper():7s} {r.name}/{c.id}: {c.detail}  [{c.ref}]")
        total = {"pass": 0, "fail": 0, "skipped": 0}
        for r in results:
            for k, v in r.summary.items():
                total[k] += v
        print(f"summary: {total['pass']} passed, {total['fail']} failed, {total['skipped']} skipped")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def _rewrite_json(rw: roots.StableRewrite) -> dict:
    return {
        "kind": rw.kind,
        "factors": [canonical_text(f) for f in rw.factors],
        "M": rw.M,
        "a0": rw.a0,
        "x_vars": list(rw.x_vars),
        "y_vars": list(rw.y_vars),
        "coeffs": rw.coeffs,
    }


def cmd_transform(args) -> int:
    P = zoo.get_poly(args.poly)
    g = _graph(args)
    out: dict = {"poly": P.name, "graph": G.encode_graph6(g)}
    if args.kind == "stable":
        rw, q = roots.make_stable(P, g)
        back = roots.recover_from_stable(q, rw)
        out.update(_rewrite_json(rw), recovered=back, roundtrip=back == rw.coeffs and rw.source_poly() == P(g))
    elif args.kind == "hurwitz":
        rw, q = roots.make_hurwitz(P, g)
        hook = roots.recovery_hook(q, rw)
        out.update(_rewrite_json(rw), recovery_hook=canonical_text(hook),
                   roundtrip=roots.recover_source(q, rw) == P(g))
    elif args.kind == "sokal":
        sk = roots.sokalize(P, g)
        out.update(
            stable=_rewrite_json(sk.stable),
            hurwitz=_rewrite_json(sk.hurwitz),
            roundtrip=roots.recover_source(sk.T_s, sk.stable) == P(g)
            and roots.recover_source(sk.T_h, sk.hurwitz) == P(g),
        )
    else:
        p = P(g)
        q = roots.dense_roots_transform(P, g)
        D = roots.dense_factor(g.n)
        out.update(transformed=canonical_text(q), factor=canonical_text(D),
                   roundtrip=divide_exact(q, D) == p and roots.undo_dense(q, g) == p)
    print(_dump(out))
    return EXIT_OK if out.get("roundtrip") else EXIT_FAIL


def cmd_catalog(args) -> int:
    spec = ",".join([f"n<={args.n}" if args.upto else f"n={args.n}"] + (args.filter or []))
    cat = equiv.parse_catalog_spec(spec)
    for g in cat:
        if args.format == "g6":
            print(G.encode_graph6(g))
        else:
            print(json.dumps({"g6": G.encode_graph6(g), "n": g.n, "m": g.m, "k": g.k,
                              "edges": [list(e) for e in g.edge_list]}))
    return EXIT_OK


def cmd_soleval(args) -> int:
    path = Path(args.file)
    if path.exists():
        text = path.read_text()
    elif args.file.removesuffix(".sol").split("/")[-1] in soleval.fixture_names():
        text = soleval.fixture_text(args.file.removesuffix(".sol").split("/")[-1])
    else:
        raise UsageError(f"no such file or fixture: {args.file}")
    t = soleval.parse_term(text)
    g = _graph(args)
    print(canonical_text(soleval.eval_term(g, t)))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="graphpoly", description="Exact graph polynomial toolkit.")
    ap.add_argument("--guard", action="append", default=[], metavar="KEY=VALUE",
                    help="raise a brute-force guard for this run (repeatable)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate a graph polynomial")
    p.add_argument("--poly", required=True, help="registered name, or framework:property such as gen_ind:cycle-4")
    _add_graph_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--basis", choices=sorted(BASES), default=None)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="compare distinctive power on a catalog")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--catalog", default="n<=5", help="e.g. 'n<=5,connected'")
    p.add_argument("--mode", choices=("dp", "sdp"), default="dp")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--quick", action="store_true", help="reduced scales")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="stability and dense-root rewrites")
    kind = p.add_mutually_exclusive_group(required=True)
    for k in ("stable", "hurwitz", "sokal", "dense"):
        kind.add_argument(f"--{k}", dest="kind", action="store_const", const=k)
    p.add_argument("--poly", required=True)
    _add_graph_args(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("catalog", help="list isomorphism classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upto", action="store_true", help="include all smaller vertex counts")
    p.add_argument("--filter", action="append", choices=sorted(equiv._FILTERS))
    p.add_argument("--format", choices=("g6", "jsonl"), default="g6")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("soleval", help="evaluate a SOLEVAL program")
    p.add_argument("--file", required=True, help="path to a .sol file or a shipped fixture name")
    _add_graph_args(p)
    p.set_defaults(func=cmd_soleval)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if guards.ENV_ERROR:
        print(f"error: {guards.ENV_ERROR}", file=sys.stderr)
        return EXIT_USAGE
    saved = dict(GUARDS.values)
    try:
        for spec in args.guard:
            GUARDS.apply_spec(spec)
        return args.func(args)
    except GuardExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        # --guard only applies to this invocation
        GUARDS.values = saved


if __name__ == "__main__":
    sys.exit(main())
