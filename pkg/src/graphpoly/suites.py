"""Verification batteries.

Each suite returns a SuiteResult whose checks carry a short ``ref`` label
naming the identity being exercised.  Scales come from SuiteConfig; the
defaults are the full desk-scale runs, ``SuiteConfig.quick()`` is for
smoke tests.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable

from . import equiv, roots, soleval, zoo
from .guards import GUARDS
from . import graphs as G
from .graphs import Graph
from .polys import (
    MultiPoly,
    basis_convert,
    basis_poly,
    canonical_text,
    divide_exact,
    find_linear_recurrence,
    interpolate_univariate,
    substitute,
)

X = MultiPoly.var("X")
Y = MultiPoly.var("Y")


@dataclass
class SuiteConfig:
    catalog_n: int = 6
    forest_n: int = 8
    fixture_n: int = 5
    perm_n: int = 4
    stable_n: int = 4
    samples: int = 500
    matching_points: int = 10
    seed: int = 0

    @classmethod
    def quick(cls) -> "SuiteConfig":
        return cls(catalog_n=4, forest_n=6, fixture_n=4, perm_n=3, stable_n=3, samples=40, matching_points=3)


@dataclass
class Check:
    id: str
    status: str  # pass | fail | skipped
    detail: str
    ref: str


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    def add(self, id: str, ok: bool | None, detail: str, ref: str) -> Check:
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        c = Check(id, status, detail, ref)
        self.checks.append(c)
        return c

    @property
    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_json(self) -> dict:
        return {"suite": self.name, "checks": [asdict(c) for c in self.checks], "summary": self.summary}


@lru_cache(maxsize=None)
def _catalog(n: int) -> tuple[Graph, ...]:
    return tuple(G.enumerate_catalog(n, upto=True))


def _first_bad(graphs: Iterable[Graph], ok: Callable[[Graph], bool]) -> tuple[int, Graph | None]:
    count = 0
    for g in graphs:
        count += 1
        if not ok(g):
            return count, g
    return count, None


def _report(res: SuiteResult, id: str, graphs, ok, ref: str, what: str = "graphs") -> None:
    count, bad = _first_bad(graphs, ok)
    if bad is None:
        res.add(id, True, f"holds on {count} {what}", ref)
    else:
        res.add(id, False, f"fails on {G.format_edges(bad)} ({G.encode_graph6(bad)})", ref)


def _table_prop(members: Iterable[Graph], closed: bool = False, name: str = "C") -> zoo.PropertyPredicate:
    keys = frozenset((h.n, G.canonical_code(h)) for h in members)
    return zoo.PropertyPredicate(name, lambda h: (h.n, G.canonical_code(h)) in keys, closed)


def _small_classes(max_n: int) -> list[Graph]:
    return list(_catalog(max_n))


def _all_properties(classes: list[Graph]) -> Iterable[tuple[frozenset[int], zoo.PropertyPredicate]]:
    for r in range(len(classes) + 1):
        for pick in itertools.combinations(range(len(classes)), r):
            yield frozenset(pick), _table_prop([classes[i] for i in pick])


# -- matching relations --------------------------------------------------------

def suite_matching_relations(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("matching-relations")
    cat = equiv.catalog_of(_catalog(cfg.catalog_n), f"n<={cfg.catalog_n}")
    mu, gm, mb = (zoo.get_poly(n) for n in ("matching_defect", "matching_gen", "matching_bivar"))
    r = equiv.verify_prefactor_relation(
        mu, gm, lambda t: X ** t.n, {"X": lambda t: -(X ** -2)}, cat, cfg.matching_points, cfg.seed
    )
    res.add("defect-from-generating", r.ok,
            f"{r.checked} rational points, {r.poles_skipped} poles skipped" if r.ok else r.detail,
            "mu(G;X) = X^n g(G;-X^-2)")
    r2 = equiv.verify_prefactor_relation(
        mb, gm, lambda t: Y ** t.n, {"X": lambda t: X * Y ** -2}, cat, cfg.matching_points, cfg.seed + 1
    )
    res.add("bivariate-from-generating", r2.ok,
            f"{r2.checked} rational points" if r2.ok else r2.detail,
            "M(G;X,Y) = Y^n g(G;X/Y^2)")

    def symbolic(g: Graph) -> bool:
        return zoo.matching_defect(g) == X ** g.n * substitute(zoo.matching_gen(g), "X", -(X ** -2))

    _report(res, "defect-symbolic", cat, symbolic, "mu(G;X) = X^n g(G;-X^-2), as Laurent polynomials")
    wrong = equiv.verify_prefactor_relation(
        mu, gm, lambda t: X ** (t.n + 1), {"X": lambda t: -(X ** -2)}, cat, 1, cfg.seed
    )
    res.add("perturbed-prefactor-rejected", not wrong.ok and wrong.point is not None,
            f"X^(n+1) fails at {wrong.point} on {wrong.graph}", "perturbed identity must fail")
    return res


# -- complement identity ---------------------------------------------------------

def suite_complement_identity(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("complement-identity")
    cat = _catalog(cfg.catalog_n)
    one_x = 1 + X
    for name in ("edgeless", "connected", "forest", "triangle-free"):
        C = zoo.get_property(name)
        nC = C.negate()
        _report(res, f"ind:{name}", cat,
                lambda g: zoo.gen_ind(C, g) + zoo.gen_ind(nC, g) == one_x ** g.n,
                "P_C(G) + P_notC(G) = (1+X)^n(G)")
    for name in ("forest", "triangle-free", "bipartite"):
        D = zoo.get_property(name)
        # having a cycle, a triangle or an odd cycle survives adding isolated vertices
        nD = D.negate(closed_under_isolated_vertices=True)
        _report(res, f"span:{name}", cat,
                lambda g: zoo.gen_span(D, g) + zoo.gen_span(nD, g) == one_x ** g.m,
                "P_D(G) + P_notD(G) = (1+X)^m(G)")
    return res


# -- Potts / chromatic --------------------------------------------------------------

def proper_colourings(g: Graph, k: int) -> int:
    """Backtracking count of proper vertex colourings with colours 0..k-1."""
    col = [-1] * g.n

    def rec(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c in range(k):
            if all(col[u] != c for u in g.neighbors(v) if u < v):
                col[v] = c
                total += rec(v + 1)
        col[v] = -1
        return total

    return rec(0)


def suite_potts_chromatic(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("potts-chromatic")
    cat = [g for g in _catalog(cfg.catalog_n) if g.m <= 12]
    _report(res, "chi-is-potts-at-minus-one", cat,
            lambda g: zoo.chromatic(g) == substitute(zoo.potts(g), "Y", -1),
            "chi(G;X) = Z(G;X,-1)")
    _report(res, "chi-by-colouring-count", cat,
            lambda g: zoo.chromatic(g) == interpolate_univariate(
                [(k, proper_colourings(g, k)) for k in range(g.n + 1)]),
            "chi(G;k) counts proper k-colourings")

    def via_tutte(g: Graph) -> bool:
        t = zoo.tutte(g)
        s = t.substitute("X", 1 - X).substitute("Y", 0)
        return zoo.chromatic(g) == s * X ** g.k * (-1) ** (g.n - g.k)

    _report(res, "chi-from-tutte", cat, via_tutte, "chi(G;X) = (-1)^(n-k) X^k T(G;1-X,0)")
    return res


def suite_tutte_spanning(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("tutte-spanning")
    cat = [g for g in _catalog(cfg.catalog_n) if G.is_connected(g)]
    _report(res, "T(1,1)-is-tree-count", cat,
            lambda g: zoo.tutte(g).eval_rational({"X": 1, "Y": 1}) == G.spanning_tree_count(g),
            "T(G;1,1) = number of spanning trees")
    all_g = _catalog(cfg.catalog_n)
    _report(res, "T(2,2)-is-2^m", all_g,
            lambda g: zoo.tutte(g).eval_rational({"X": 2, "Y": 2}) == 2 ** g.m,
            "T(G;2,2) = 2^m")
    return res


# -- Godsil-Gutman / Farrell-Whitehead -----------------------------------------------------

def suite_godsil_gutman(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("godsil-gutman")
    forests = G.enumerate_catalog(cfg.forest_n, G.is_forest, upto=True, hereditary=True)
    _report(res, "forests", forests,
            lambda g: zoo.matching_defect(g) == zoo.char_poly_adjacency(g),
            "mu(G;X) = P_A(G;X) on forests", "forests")
    with_cycle = [g for g in _catalog(min(cfg.catalog_n, 5)) if not G.is_forest(g)]
    differ = next((g for g in with_cycle if zoo.matching_defect(g) != zoo.char_poly_adjacency(g)), None)
    res.add("cycle-breaks-identity", differ is not None,
            f"first differing graph: {G.format_edges(differ)}" if differ else "no difference found",
            "the identity needs acyclicity")
    return res


def farrell_whitehead_readings(g: Graph) -> dict[str, bool]:
    """Compare chi(complement) with the matching counts read in the power
    and in the falling-factorial basis."""
    counts = zoo.matching_counts(g)
    target = zoo.chromatic_complement(g)
    power = sum((X ** (g.n - i) * c for i, c in enumerate(counts)), MultiPoly())
    falling = sum((basis_poly("falling", g.n - i) * c for i, c in enumerate(counts)), MultiPoly())
    return {"power": target == power, "falling": target == falling}


def suite_farrell_whitehead(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("farrell-whitehead")
    cat = [g for g in _catalog(cfg.catalog_n) if G.is_triangle_free(g)]
    tallies = {"power": [], "falling": []}
    for g in cat:
        for k, v in farrell_whitehead_readings(g).items():
            if not v:
                tallies[k].append(g)
    holding = [k for k, bad in tallies.items() if not bad]
    res.add("reading-determined", len(holding) == 1,
            f"holding reading(s): {holding}; power fails on {len(tallies['power'])}, "
            f"falling fails on {len(tallies['falling'])} of {len(cat)} triangle-free graphs",
            "chi(complement of G) vs matching counts")
    if len(holding) == 1:
        reading = holding[0]
        _report(res, f"{reading}-reading", cat,
                lambda g: farrell_whitehead_readings(g)[reading],
                f"chi(complement of G;X) = sum_i m_i(G) * basis_{reading}(n-i)", "triangle-free graphs")
        other = "power" if reading == "falling" else "falling"
        w = tallies[other][0] if tallies[other] else None
        res.add(f"{other}-reading-refuted", w is not None,
                f"witness {G.format_edges(w)}" if w else "no witness", "the other reading must fail somewhere")
    return res


# -- non-representability -----------------------------------------------------------

def _coef(p: MultiPoly, k: int) -> int:
    return p.coeff({"X": k}) if p.vars else (p.constant_value() if k == 0 else 0)


def suite_dom_counterexamples(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("dom-counterexamples")
    K1, K2, E2 = G.complete(1), G.complete(2), G.empty(2)
    dom = zoo.domination
    res.add("DOM(K2)", dom(K2) == X ** 2 + 2 * X, canonical_text(dom(K2)), "DOM(K_2;X) = 2X + X^2")
    res.add("DOM(E2)", dom(E2) == X ** 2, canonical_text(dom(E2)), "DOM(E_2;X) = X^2")
    classes = _small_classes(2)  # K0, K1, E2, K2
    k1 = next(i for i, h in enumerate(classes) if h.n == 1)
    k2 = next(i for i, h in enumerate(classes) if h.n == 2 and h.m == 1)
    in_branch = out_branch = chrom_in = chrom_out = True
    n_in = n_out = 0
    for pick, C in _all_properties(classes):
        if k1 in pick:
            n_in += 1
            in_branch &= _coef(zoo.gen_ind(C, E2), 1) == 2 != _coef(dom(E2), 1)
        else:
            n_out += 1
            out_branch &= _coef(zoo.gen_ind(C, K2), 1) == 0 != _coef(dom(K2), 1)
        chi1 = zoo.harary(C, K2).eval_rational({"X": 1})
        if k2 in pick:
            chrom_in &= chi1 == 1 != dom(K2).eval_rational({"X": 1})
        else:
            chrom_out &= chi1 == 0 != dom(K2).eval_rational({"X": 1})
    res.add("ind:K1-in-C", in_branch, f"[X] P_C(E_2) = 2 but [X] DOM(E_2) = 0, all {n_in} such C",
            "no C with DOM = P_C^ind, branch K_1 in C")
    res.add("ind:K1-not-in-C", out_branch, f"[X] P_C(K_2) = 0 but [X] DOM(K_2) = 2, all {n_out} such C",
            "no C with DOM = P_C^ind, branch K_1 not in C")
    span_ok = True
    for pick, D in _all_properties([E2, K2]):
        span_ok &= _coef(_span_raw(D, K2), 1) <= 1 < _coef(dom(K2), 1)
    res.add("span:one-edge", span_ok, "[X] P_D(K_2) <= 1 < 2 for every D", "no D with DOM = P_D^span")
    res.add("harary:K2-in-C", chrom_in, "chi_C(K_2;1) = 1 but DOM(K_2;1) = 3", "no C with DOM = chi_C, branch K_2 in C")
    res.add("harary:K2-not-in-C", chrom_out, "chi_C(K_2;1) = 0 but DOM(K_2;1) = 3",
            "no C with DOM = chi_C, branch K_2 not in C")
    _search_checks(res, zoo.get_poly("domination"), ("gen_ind", "gen_span", "harary"), 3)
    return res


def _span_raw(D: zoo.PropertyPredicate, g: Graph) -> MultiPoly:
    """Spanning-subgraph generating function without the closure check."""
    counts = [0] * (g.m + 1)
    edges = g.edge_list
    for b in range(1 << g.m):
        if D(Graph.from_edges(g.n, [edges[i] for i in range(g.m) if b >> i & 1])):
            counts[bin(b).count("1")] += 1
    return MultiPoly.from_coeffs(counts)


def _search_checks(res: SuiteResult, target: zoo.GraphPolyDef, frameworks, max_n: int) -> None:
    for fw in frameworks:
        r = equiv.search_representation(fw, target, max_n)
        res.add(f"search:{fw}", not r.representable,
                f"no property on graphs with <= {max_n} vertices works; all candidates fail by {r.refuted_at}"
                if not r.representable else f"{len(r.solutions)} representing properties found",
                f"exhaustive search: {target.name} is not {fw} of any property")


def suite_char_not_gen(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("char-not-gen")
    E1, E2, K2 = G.empty(1), G.empty(2), G.complete(2)
    PA, PL = zoo.char_poly_adjacency, zoo.laplacian_det_form
    res.add("P_A(E1)", PA(E1) == X, canonical_text(PA(E1)), "P_A(E_1;X) = X")
    res.add("P_A(E2)", PA(E2) == X ** 2, canonical_text(PA(E2)), "P_A(E_2;X) = X^2")
    res.add("P_L(E2)", PL(E2).is_zero, canonical_text(PL(E2)), "det(XD - A)(E_2) = 0")
    res.add("P_L(K2)", PL(K2) == X ** 2 - 1, canonical_text(PL(K2)), "det(XD - A)(K_2) = X^2 - 1")
    classes = _small_classes(2)
    tests = [E1, E2, K2]
    for tname, target in (("P_A", PA), ("P_L", PL)):
        for fw, fn in (("ind", zoo.gen_ind), ("harary", zoo.harary), ("span", _span_raw)):
            fails = []
            for pick, C in _all_properties(classes):
                bad = next((h for h in tests if fn(C, h) != target(h)), None)
                fails.append(bad)
            ok = all(b is not None for b in fails)
            where = sorted({G.format_edges(b) for b in fails if b is not None})
            res.add(f"{tname}-not-{fw}", ok,
                    f"every C over graphs with <= 2 vertices fails on one of {where}",
                    f"{tname} is not a {fw} polynomial")
    for tname in ("char_poly_adjacency", "laplacian_det_form", "laplacian_char"):
        _search_checks(res, zoo.get_poly(tname), ("gen_ind", "gen_span", "harary"), 3)
    return res


def suite_mcp_not_representable(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("mcp-not-representable")
    C0 = zoo.get_property("mcp-internal")
    for g in (G.complete(2), G.path(3), G.cycle(3)):
        gg = G.disjoint_union(g, g)
        h = zoo.harary(C0, gg).eval_rational({"X": 2})
        m = zoo.mcp_poly(gg).eval_rational({"X": 2})
        res.add(f"doubled:{G.format_edges(g)}", h != m,
                f"chi_C0(G+G;2) = {h}, chi_mcp(G+G;2) = {m}",
                "the forced class C0 already fails on G disjoint G")
    K2 = G.complete(2)
    top_ok = True
    for pick, C in _all_properties(_small_classes(2)):
        p = zoo.gen_ind(C, K2)
        if C(K2):
            top_ok &= _coef(p, 2) == 1 and _coef(zoo.mcp_poly(K2), 2) == 0
    res.add("top-coefficient", top_ok, "K_2 in C forces [X^2] P_C(K_2) = 1, while [X^2] mcp(K_2) = 0",
            "mcp is not a generating function of induced subgraphs")
    _search_checks(res, zoo.get_poly("mcp"), ("gen_ind", "gen_span", "harary"), 3)
    return res


# -- separation lemmas --------------------------------------------------------------------

def _hat(i: int, k: int) -> Graph | None:
    """hat G_i^k, or None where C_i^* is undefined (i = 3, k >= 2)."""
    if i < 4 and k >= 2:
        return None
    return G.cycle_copies_hat(i, k)


def suite_incomp_lemma(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("incomp-lemma")
    for i in range(3, 7):
        for k in (1, 2, 3):
            Gk, Hk = G.cycle_copies(i, k), _hat(i, k)
            Pi = zoo.cycle_property(i)
            a = zoo.gen_ind(Pi, Gk)
            res.add(f"ii:i={i},k={k}", a == X ** i * k, canonical_text(a), "P_Ci(G_i^k) = k X^i")
            if Hk is None:
                res.add(f"iii:i={i},k={k}", None, "C_3^* would need a 2-cycle", "P_Ci(hat G_i^k) = X^i")
            else:
                b = zoo.gen_ind(Pi, Hk)
                res.add(f"iii:i={i},k={k}", b == X ** i, canonical_text(b), "P_Ci(hat G_i^k) = X^i")
            for j in range(3, 7):
                if j in (i, i - 1):
                    continue
                Pj = zoo.cycle_property(j)
                zs = [zoo.gen_ind(Pj, h) for h in (Gk, Hk) if h is not None]
                res.add(f"i:i={i},j={j},k={k}", all(z.is_zero for z in zs),
                        ", ".join(canonical_text(z) for z in zs), "P_Cj vanishes on both for j != i, i-1")
            if k >= 2 and Hk is not None:
                z = zoo.gen_ind(zoo.cycle_property(i - 1), Hk)
                res.add(f"pendant:i={i},k={k}", z == X ** (i - 1) * (k - 1), canonical_text(z),
                        "the C_(i-1) inside each C_i^* is counted")
    return res


def suite_chrom_lemma(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("chrom-lemma")
    with GUARDS.raised(HARARY_MAX_N=18):
        _chrom_lemma(res)
    return res


def _chrom_lemma(res: SuiteResult) -> None:
    # blocks must be i-cycles, so the partition search stays small at 18 vertices
    for i in range(3, 7):
        for k in (1, 2, 3):
            Gk, Hk = G.cycle_copies(i, k), _hat(i, k)
            chi = zoo.harary(zoo.cycle_property(i), Gk)
            res.add(f"i:i={i},k={k}", chi == basis_poly("falling", k), canonical_text(chi),
                    "chi_i(G_i^k; X) = X_(k), zero below k")
            for j in range(3, 7):
                if j != i:
                    z = zoo.harary(zoo.cycle_property(j), Gk)
                    res.add(f"ii:i={i},j={j},k={k}", z.is_zero, canonical_text(z), "chi_j(G_i^k) = 0 for j != i")
                if Hk is not None and (k >= 2 or j != i):
                    z = zoo.harary(zoo.cycle_property(j), Hk)
                    res.add(f"iii:i={i},j={j},k={k}", z.is_zero, canonical_text(z),
                            "chi_j(hat G_i^k) = 0 for k >= 2 or j != i")


def separation_catalog() -> equiv.Catalog:
    gs = [f(i, k) for i in (4, 6) for k in (1, 2) for f in (G.cycle_copies, G.cycle_copies_hat)]
    return equiv.catalog_of(gs, "G_i^k, hat G_i^k for i in {4,6}, k in {1,2}")


def suite_separation(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("separation")
    cat = separation_catalog()
    for kind in ("gen_ind", "harary"):
        P = zoo.framework_poly(kind, zoo.cycle_property(4))
        Q = zoo.framework_poly(kind, zoo.cycle_property(6))
        v = equiv.dp_compare(P, Q, cat)
        valid = all(equiv.verify_witness(w, P, Q) for w in v.witnesses)
        sides = {w.distinguished_by for w in v.witnesses}
        res.add(f"{kind}:C4-vs-C6", v.relation == "incomparable" and valid and sides == {"left", "right"},
                f"{v.relation}, {len(v.witnesses)} verified witnesses", f"{kind} over C_4 and C_6 are incomparable")
    return res


# -- Harary and framework values ---------------------------------------------------------

def suite_framework_values(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("framework-values")
    cat = _catalog(cfg.catalog_n)
    one = zoo.get_property("singleton")
    pair = zoo.get_property("pair-set")
    _report(res, "singleton", cat, lambda g: zoo.gen_ind(one, g) == X * g.n, "P_{K_1}(G) = n(G) X")
    _report(res, "pair-set", cat, lambda g: zoo.gen_ind(pair, g) == X ** 2 * comb(g.n, 2),
            "P_{K_2,E_2}(G) = C(n,2) X^2")
    conn, disc = zoo.get_property("connected"), zoo.get_property("disconnected")
    for i in range(1, 7):
        Ki = G.complete(i)
        c = zoo.harary(conn, Ki)
        b = zoo.harary_counts(conn, Ki)
        res.add(f"connected:K{i}", c.eval_rational({"X": 2}) == 2 ** i,
                f"chi(K_{i};2) = {c.eval_rational({'X': 2})}; exactly two colours used: {b[2] * 2 if len(b) > 2 else 0}",
                "at most 2 colours: every vertex 2-colouring of K_i has connected classes")
        exact2 = (b[2] * 2) if len(b) > 2 else 0
        res.add(f"connected-two-colours:K{i}", exact2 == 2 ** i - 2, f"{exact2}",
                "colourings using both colours: 2^i - 2")
        res.add(f"disconnected:K{i}", zoo.harary(disc, Ki).is_zero, "0", "no partition of K_i into disconnected parts")
    return res


# -- mcp closed form --------------------------------------------------------------------

def mcp_brute(g: Graph, k: int) -> int:
    """Edge colourings with colours 0..k-1 in which every vertex pair is
    joined by a monochromatic path."""
    edges = g.edge_list
    full = (1 << g.n) - 1
    count = 0
    for cols in itertools.product(range(k), repeat=len(edges)):
        reach = [1 << v for v in range(g.n)]
        for c in set(cols):
            sub = Graph.from_edges(g.n, [e for e, x in zip(edges, cols) if x == c])
            for comp in sub.components:
                m = comp
                while m:
                    low = m & -m
                    reach[low.bit_length() - 1] |= comp
                    m ^= low
        if all(r == full for r in reach):
            count += 1
    return count


def suite_mcp_closed_form(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("mcp-closed-form")
    cat = _catalog(min(cfg.catalog_n, 5))
    trees = [g for g in cat if G.is_connected(g) and G.is_forest(g) and g.m >= 1]
    _report(res, "trees-give-X", trees, lambda g: zoo.mcp_poly(g) == X,
            "connected graph with all edges forced to one colour: chi_mcp = X", "trees")
    disc = [g for g in cat if g.n >= 2 and not G.is_connected(g)]
    _report(res, "disconnected-give-0", disc, lambda g: zoo.mcp_poly(g).is_zero,
            "no path between components: chi_mcp = 0", "disconnected graphs")
    small = [g for g in cat if g.n <= 1]
    _report(res, "trivial-give-1", small, lambda g: zoo.mcp_poly(g) == 1, "no edges, no pairs: one colouring")
    k3 = zoo.mcp_poly(G.complete(3))
    res.add("cycles-exceed-X", k3 == X ** 3, f"chi_mcp(K_3) = {canonical_text(k3)}",
            "with a cycle, edges need not share a colour")
    brute = [g for g in cat if g.m <= 6]
    _report(res, "brute-force-agreement", brute,
            lambda g: all(zoo.mcp_poly(g).eval_rational({"X": k}) == mcp_brute(g, k) for k in range(4)),
            "chi_mcp(G;k) counts mcp colourings, k = 0..3", "graphs with m <= 6")
    return res


# -- spectra ----------------------------------------------------------------------------------

def suite_laplacian_multiplicity(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("laplacian-multiplicity")
    cat = [g for g in _catalog(cfg.catalog_n) if g.n >= 1]
    _report(res, "zero-multiplicity-is-k", cat,
            lambda g: roots.root_multiplicity_at(zoo.laplacian_char(g), 0) == g.k,
            "multiplicity of 0 in det(XI - L) = k(G)")
    return res


def suite_real_rooted(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("real-rooted")
    cat = [g for g in _catalog(cfg.catalog_n) if g.n >= 1]
    _report(res, "adjacency", cat, lambda g: roots.is_real_rooted(zoo.char_poly_adjacency(g)),
            "symmetric matrix: P_A real-rooted")
    _report(res, "laplacian", cat, lambda g: roots.is_real_rooted(zoo.laplacian_char(g)),
            "symmetric matrix: det(XI - L) real-rooted")
    _report(res, "chromatic-in-cauchy-disk", _catalog(min(cfg.catalog_n, 5)),
            lambda g: g.n == 0 or roots.schur_cohn_in_disk(zoo.chromatic(g), roots.cauchy_bound(zoo.chromatic(g)) + 1),
            "roots inside the Cauchy radius")
    return res


@dataclass
class SpectralFindings:
    tree_pair: tuple[Graph, Graph] | None
    shared_pa: MultiPoly | None
    bip_pair: tuple[Graph, Graph] | None
    bip_poly: str
    matches_printed_factorization: bool


PRINTED_FACTORIZATION = (X - 1) * (X + 1) ** 2 * (X ** 3 - X ** 2 - 5 * X + 1)


def spectral_search(n: int = 6) -> SpectralFindings:
    """Similar cospectral pairs with different tree counts, and similar
    Laplacian-cospectral pairs with different bipartiteness."""
    cat = _catalog(n)
    by_pa: dict = {}
    for g in cat:
        by_pa.setdefault((G.similarity(g), zoo.char_poly_adjacency(g)), []).append(g)
    tree_pairs = []
    for (_, pa), gs in by_pa.items():
        for a, b in itertools.combinations(gs, 2):
            if G.spanning_tree_count(a) != G.spanning_tree_count(b):
                tree_pairs.append((a, b, pa))
    printed = [t for t in tree_pairs if t[2] == PRINTED_FACTORIZATION]
    chosen = printed[0] if printed else (tree_pairs[0] if tree_pairs else None)
    bip = None
    used = ""
    for name, fn in (("laplacian_char", zoo.laplacian_char), ("laplacian_det_form", zoo.laplacian_det_form)):
        groups: dict = {}
        for g in cat:
            groups.setdefault((G.similarity(g), fn(g)), []).append(g)
        for gs in groups.values():
            for a, b in itertools.combinations(gs, 2):
                if G.is_bipartite(a) != G.is_bipartite(b):
                    bip = (a, b)
                    break
            if bip:
                break
        if bip:
            used = name
            break
    return SpectralFindings(
        (chosen[0], chosen[1]) if chosen else None,
        chosen[2] if chosen else None,
        bip, used, bool(printed),
    )


def suite_spectral_search(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("spectral-search")
    f = spectral_search(cfg.catalog_n)
    if f.tree_pair:
        a, b = f.tree_pair
        res.add("cospectral-tree-counts", True,
                f"{G.format_edges(a)} ({G.spanning_tree_count(a)} trees) vs {G.format_edges(b)} "
                f"({G.spanning_tree_count(b)} trees), P_A = {canonical_text(f.shared_pa)}",
                "P_A does not determine the number of spanning trees")
        if cfg.catalog_n >= 6:
            res.add("printed-factorization", f.matches_printed_factorization,
                    f"pair with P_A = {canonical_text(PRINTED_FACTORIZATION)} found: {f.matches_printed_factorization}",
                    "P_A = (X-1)(X+1)^2(X^3-X^2-5X+1)")
    else:
        res.add("cospectral-tree-counts", cfg.catalog_n < 6 or None, "no pair in this catalog",
                "P_A does not determine the number of spanning trees")
    if f.bip_pair:
        a, b = f.bip_pair
        res.add("laplacian-bipartiteness", True,
                f"{f.bip_poly}: {G.format_edges(a)} (bipartite={G.is_bipartite(a)}) vs {G.format_edges(b)}",
                "Laplacian polynomial does not determine bipartiteness")
    else:
        res.add("laplacian-bipartiteness", cfg.catalog_n < 6 or None, "no pair in this catalog",
                "Laplacian polynomial does not determine bipartiteness")
    return res


# -- stability -------------------------------------------------------------------------

def _at_a0(rw: roots.StableRewrite) -> list[MultiPoly]:
    return [substitute(f, "Y", rw.a0) for f in rw.factors]


def suite_stability_roundtrip(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("stability-roundtrip")
    cat = _catalog(cfg.stable_n)
    for name in ("chromatic", "domination", "independence", "tutte"):
        P = zoo.get_poly(name)
        bad = None
        falsified = None
        for g in cat:
            rw, q = roots.make_stable(P, g)
            if roots.recover_from_stable(q, rw) != rw.coeffs or rw.source_poly() != P(g):
                bad = g
                break
            rep = roots.sample_halfplane_nonvanishing(_at_a0(rw), "upper", cfg.samples, cfg.seed)
            if rep.falsified:
                falsified = g
        res.add(f"stable-roundtrip:{name}", bad is None,
                f"{len(cat)} graphs" if bad is None else f"fails on {G.format_edges(bad)}",
                "coefficients recovered from Q_s at Y = a0")
        res.add(f"stable-sampling:{name}", falsified is None,
                f"not falsified at {cfg.samples} points per graph" if falsified is None
                else f"zero found on {G.format_edges(falsified)}", "Q_s(Y=a0) nonvanishing on the upper half-plane")
    for name in ("domination", "independence", "tutte", "matching_gen"):
        P = zoo.get_poly(name)
        ok, detail = True, f"{len(cat)} graphs"
        falsified = None
        for g in cat:
            rw, q = roots.make_hurwitz(P, g)
            homog = all(sum(e) == rw.M for e in q.terms)
            nonneg = all(c >= 0 for c in q.terms.values())
            hook = roots.recovery_hook(q, rw)
            expect = sum((MultiPoly.var(y) * c for y, c in zip(rw.y_vars, rw.coeffs)), MultiPoly())
            if not (homog and nonneg and hook == expect):
                ok, detail = False, f"fails on {G.format_edges(g)}"
                break
            if roots.sample_halfplane_nonvanishing(rw.factors, "right", cfg.samples, cfg.seed).falsified:
                falsified = g
        res.add(f"hurwitz-structure:{name}", ok, detail, "Q_h homogeneous, non-negative, hook = sum d_i Y_i")
        res.add(f"hurwitz-sampling:{name}", falsified is None,
                f"not falsified at {cfg.samples} points per graph" if falsified is None
                else f"zero found on {G.format_edges(falsified)}", "Q_h nonvanishing on the right half-plane")
    try:
        roots.make_hurwitz(zoo.get_poly("chromatic"), G.complete(2))
        res.add("hurwitz-rejects-negative", False, "accepted X^2 - X", "negative coefficients refused")
    except Exception as e:  # noqa: BLE001
        res.add("hurwitz-rejects-negative", True, str(e), "negative coefficients refused")
    S = zoo.get_poly("spanning_tree_poly")
    for g in (G.cycle(3), G.path(3), G.path(4)):
        sk = roots.sokalize(S, g)
        back_s = roots.recover_source(sk.T_s, sk.stable)
        back_h = roots.recover_source(sk.T_h, sk.hurwitz)
        samp = roots.sample_halfplane_nonvanishing(sk.hurwitz.factors, "right", cfg.samples, cfg.seed)
        res.add(f"sokal:{G.format_edges(g)}", back_s == S(g) and back_h == S(g) and not samp.falsified,
                f"M = {sk.stable.M}, T_h {samp.verdict}", "sokalization roundtrip and Hurwitz sampling")
    for g in cat:
        p = zoo.chromatic(g)
        q = roots.dense_roots_transform(zoo.get_poly("chromatic"), g)
        if divide_exact(q, roots.dense_factor(g.n)) != p:
            res.add("dense-division", False, f"fails on {G.format_edges(g)}", "Q = D P with D from n(G)")
            break
    else:
        res.add("dense-division", True, f"{len(cat)} graphs", "Q = D P with D from n(G)")
    return res


# -- SOLEVAL fixtures ----------------------------------------------------------------------

def suite_soleval_fixtures(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("soleval-fixtures")
    names = soleval.fixture_names()
    for name in names:
        ref = soleval.fixture_reference(name)
        if ref is None or name.endswith("_alt"):
            continue
        fn, nmax = ref
        nmax = min(nmax, cfg.perm_n if name == "char_poly_perm" else cfg.fixture_n)
        t = soleval.load_fixture(name)
        _report(res, f"fixture:{name}", _catalog(nmax), lambda g: soleval.eval_term(g, t) == fn(g),
                f"SOLEVAL program agrees with the reference ({name})", f"graphs with n <= {nmax}")
    for a, b in soleval.EQUIVALENT_PAIRS:
        ta, tb = soleval.load_fixture(a), soleval.load_fixture(b)
        _report(res, f"equivalent:{a}~{b}", _catalog(cfg.fixture_n),
                lambda g: soleval.eval_term(g, ta) == soleval.eval_term(g, tb),
                "logically equivalent formulas give equal polynomials")
    xk = soleval.load_fixture("x_to_k")
    _report(res, "order-invariant:x_to_k", _catalog(cfg.fixture_n),
            lambda g: soleval.check_order_invariance(xk, g)[0], "X^k(G) does not depend on the vertex order")
    od = soleval.load_fixture("order_dependent")
    inv, perm = soleval.check_order_invariance(od, G.path(3))
    res.add("order-dependent-detected", not inv and perm is not None, f"counterexample permutation {perm} on P_3",
            "a term reading vertex 0 is not an invariant")
    return res


# -- C-finiteness ------------------------------------------------------------------------------

def suite_c_finite_paths(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("c-finite-paths")
    seq = [zoo.matching_gen(G.path(n)) for n in range(1, 11)]
    rec = find_linear_recurrence(seq[:7], 3)
    ok = rec is not None and rec[0] == 2 and rec[1] == [X, MultiPoly.const(1)]
    res.add("matching-recurrence-found", ok, f"depth {rec[0]}, coefficients {[canonical_text(c) for c in rec[1]]}"
            if rec else "none", "g(P_n) = g(P_(n-1)) + X g(P_(n-2))")
    ext = rec is not None and all(
        seq[i] == sum((rec[1][j] * seq[i - rec[0] + j] for j in range(rec[0])), MultiPoly())
        for i in range(7, 10)
    )
    res.add("matching-recurrence-extends", ext, "n = 8..10", "recurrence predicts later terms")
    for name in ("edgeless", "connected"):
        C = zoo.get_property(name)
        nC = C.negate()
        a = [zoo.gen_ind(C, G.path(n)) for n in range(1, 14)]
        b = [zoo.gen_ind(nC, G.path(n)) for n in range(1, 14)]
        ra, rb = find_linear_recurrence(a[:9], 4), find_linear_recurrence(b[:9], 4)
        both = ra is not None and rb is not None
        holds = both and all(_extends(s, r, 9) for s, r in ((a, ra), (b, rb)))
        res.add(f"complement-pair:{name}", holds,
                f"depths {ra[0] if ra else None} and {rb[0] if rb else None} (bound 4), verified to n = 13",
                "P_C(P_n) and P_notC(P_n) both C-finite")
    return res


def _extends(seq, rec, start) -> bool:
    p, cs = rec
    return all(seq[i] == sum((cs[j] * seq[i - p + j] for j in range(p)), MultiPoly()) for i in range(start, len(seq)))


# -- basis presentations ----------------------------------------------------------------------

def suite_basis_presentations(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("basis-presentations")
    cat = equiv.catalog_of(_catalog(min(cfg.catalog_n, 5)))
    base = zoo.get_poly("chromatic")
    parts = []
    for b in ("power", "falling", "rising", "binomial"):
        P = zoo.poly_from_function(f"chromatic@{b}", lambda g, b=b: basis_convert(base(g), "power", b, "reinterpret"))
        parts.append(equiv.partition_by(P, cat).blocks)
    res.add("same-partition", all(p == parts[0] for p in parts), f"{len(parts[0])} blocks each",
            "same coefficients in another basis: same distinctive power")
    return res


SUITES: dict[str, Callable[[SuiteConfig], SuiteResult]] = {
    "matching-relations": suite_matching_relations,
    "complement-identity": suite_complement_identity,
    "potts-chromatic": suite_potts_chromatic,
    "tutte-spanning": suite_tutte_spanning,
    "godsil-gutman": suite_godsil_gutman,
    "farrell-whitehead": suite_farrell_whitehead,
    "dom-counterexamples": suite_dom_counterexamples,
    "char-not-gen": suite_char_not_gen,
    "mcp-not-representable": suite_mcp_not_representable,
    "incomp-lemma": suite_incomp_lemma,
    "chrom-lemma": suite_chrom_lemma,
    "separation": suite_separation,
    "framework-values": suite_framework_values,
    "mcp-closed-form": suite_mcp_closed_form,
    "laplacian-multiplicity": suite_laplacian_multiplicity,
    "real-rooted": suite_real_rooted,
    "spectral-search": suite_spectral_search,
    "stability-roundtrip": suite_stability_roundtrip,
    "soleval-fixtures": suite_soleval_fixtures,
    "c-finite-paths": suite_c_finite_paths,
    "basis-presentations": suite_basis_presentations,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteResult:
    cfg = cfg or SuiteConfig()
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    t0 = time.perf_counter()
    res = SUITES[name](cfg)
    res.seconds = time.perf_counter() - t0
    return res
