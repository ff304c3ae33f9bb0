"""Distinctive power over finite catalogs.

A polynomial P partitions a catalog by value.  P <= Q ("Q distinguishes at
least what P distinguishes") holds on a catalog iff Q's partition refines
P's.  A failed direction is certified by a witness pair; a holding
direction is only evidence about the catalog, never a theorem.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable, Mapping, Sequence

from . import graphs as G
from .graphs import Graph, SimilarityTriple, similarity
from .guards import GuardExceeded
from .polys import MultiPoly, canonical_text
from .zoo import GraphPolyDef, PropertyPredicate, gen_ind, gen_span, harary

EVIDENCE_NOTE = (
    "'at most' and 'equivalent' verdicts hold on this catalog only; "
    "witness pairs are proofs of non-reducibility"
)


# -- catalogs ---------------------------------------------------------------

@dataclass
class Catalog:
    id: str
    graphs: list[Graph]

    def __iter__(self):
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


_FILTERS: dict[str, Callable[[Graph], bool]] = {
    "connected": G.is_connected,
    "disconnected": lambda g: g.k != 1,
    "forest": G.is_forest,
    "triangle-free": G.is_triangle_free,
    "bipartite": G.is_bipartite,
    "clique": G.is_clique,
}


def parse_catalog_spec(spec: str) -> Catalog:
    """``n<=K`` (all classes with 0..K vertices) or ``n=K`` (exactly K),
    followed by optional comma-separated filters such as ``connected``."""
    parts = [p.strip() for p in spec.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty catalog spec")
    head = parts[0].replace(" ", "")
    if head.startswith("n<="):
        upto, k = True, head[3:]
    elif head.startswith("n="):
        upto, k = False, head[2:]
    else:
        raise ValueError(f"catalog spec must start with n<=K or n=K, got {head!r}")
    if not k.isdigit():
        raise ValueError(f"bad vertex bound {k!r}")
    preds = []
    for p in parts[1:]:
        if p not in _FILTERS:
            raise ValueError(f"unknown catalog filter {p!r}; known: {sorted(_FILTERS)}")
        preds.append(_FILTERS[p])
    flt = (lambda g: all(f(g) for f in preds)) if preds else None
    graphs = G.enumerate_catalog(int(k), flt, upto=upto)
    return Catalog(",".join([head] + parts[1:]), graphs)


def catalog_of(graphs: Iterable[Graph], id: str = "custom") -> Catalog:
    return Catalog(id, list(graphs))


def gid(g: Graph) -> str:
    return G.encode_graph6(g)


# -- partitions ----------------------------------------------------------------

@dataclass
class PartitionReport:
    catalog: str
    poly: str
    blocks: list[list[str]]
    values: list[str]

    def to_json(self) -> dict:
        return asdict(self)


def _values(P: GraphPolyDef, catalog: Catalog) -> list[MultiPoly]:
    out = []
    for g in catalog:
        try:
            out.append(P(g))
        except GuardExceeded as e:
            e.args = (f"{e.args[0]} on graph {gid(g)}",)
            raise
    return out


def partition_by(P: GraphPolyDef, catalog: Catalog) -> PartitionReport:
    vals = _values(P, catalog)
    order: dict[MultiPoly, int] = {}
    blocks: list[list[str]] = []
    texts: list[str] = []
    for g, v in zip(catalog, vals):
        if v not in order:
            order[v] = len(blocks)
            blocks.append([])
            texts.append(canonical_text(v))
        blocks[order[v]].append(gid(g))
    return PartitionReport(catalog.id, P.name, blocks, texts)


# -- comparisons ---------------------------------------------------------------------

@dataclass
class Witness:
    g6_a: str
    g6_b: str
    left_equal: bool
    right_equal: bool
    similar: bool
    distinguished_by: str  # "left" | "right"


@dataclass
class CompareVerdict:
    relation: str  # equivalent | left-at-most-right | right-at-most-left | incomparable
    witnesses: list[Witness]
    scope: str
    catalog: str
    left: str = ""
    right: str = ""
    evidence_note: str = EVIDENCE_NOTE

    def to_json(self) -> dict:
        return {
            "catalog": self.catalog,
            "scope": self.scope,
            "left": self.left,
            "right": self.right,
            "relation": self.relation,
            "witnesses": [asdict(w) for w in self.witnesses],
            "evidence_note": self.evidence_note,
        }


def _key(scope: str, g: Graph, v: MultiPoly) -> Any:
    if scope == "sdp":
        t = similarity(g)
        return (v, t.n, t.m, t.k)
    return v


def _failures(catalog, pv, qv, scope, limit) -> list[tuple[int, int]]:
    """Pairs (i, j) with Q equal, P different (so P <= Q fails)."""
    first: dict[Any, list[int]] = {}
    for i, (g, q) in enumerate(zip(catalog, qv)):
        first.setdefault(_key(scope, g, q), []).append(i)
    out = []
    for idxs in first.values():
        a = idxs[0]
        for b in idxs[1:]:
            if pv[b] != pv[a]:
                out.append((a, b))
                break
        if len(out) >= limit:
            break
    return out


def _compare(P, Q, catalog: Catalog, scope: str) -> CompareVerdict:
    graphs = list(catalog)
    pv, qv = _values(P, catalog), _values(Q, catalog)
    # left <= right fails when right is equal and left differs
    fail_lr = _failures(graphs, pv, qv, scope, 2)
    fail_rl = _failures(graphs, qv, pv, scope, 2)
    wit = []
    for a, b in fail_lr:
        wit.append(_witness(graphs, pv, qv, a, b, "left"))
    for a, b in fail_rl:
        wit.append(_witness(graphs, pv, qv, a, b, "right"))
    if not fail_lr and not fail_rl:
        rel = "equivalent"
    elif not fail_lr:
        rel = "left-at-most-right"
    elif not fail_rl:
        rel = "right-at-most-left"
    else:
        rel = "incomparable"
    return CompareVerdict(rel, wit, scope, catalog.id, P.name, Q.name)


def _witness(graphs, pv, qv, a, b, side) -> Witness:
    return Witness(
        gid(graphs[a]), gid(graphs[b]),
        pv[a] == pv[b], qv[a] == qv[b],
        similarity(graphs[a]) == similarity(graphs[b]), side,
    )


def dp_compare(P: GraphPolyDef, Q: GraphPolyDef, catalog: Catalog) -> CompareVerdict:
    return _compare(P, Q, catalog, "dp")


def sdp_compare(P: GraphPolyDef, Q: GraphPolyDef, catalog: Catalog) -> CompareVerdict:
    return _compare(P, Q, catalog, "sdp")


def verify_witness(w: Witness, P: GraphPolyDef, Q: GraphPolyDef, scope: str = "dp") -> bool:
    """Recompute a witness from scratch."""
    a, b = G.parse_graph6(w.g6_a), G.parse_graph6(w.g6_b)
    le, re_ = P(a) == P(b), Q(a) == Q(b)
    if (le, re_) != (w.left_equal, w.right_equal):
        return False
    if w.distinguished_by == "left" and not (re_ and not le):
        return False
    if w.distinguished_by == "right" and not (le and not re_):
        return False
    if scope == "sdp" and similarity(a) != similarity(b):
        return False
    return True


# -- F tables --------------------------------------------------------------------------

@dataclass
class FTable:
    """Either a lookup table Q-value (and n, m, k for sdp) -> P-value, or a
    refutation pair (Q equal, P different)."""

    ok: bool
    scope: str
    table: dict[str, str] = field(default_factory=dict)
    refutation: tuple[str, str] | None = None

    def __call__(self, q: MultiPoly, triple: SimilarityTriple | None = None) -> str:
        return self.table[_ftext(self.scope, q, triple)]

    def to_json(self) -> dict:
        return {"ok": self.ok, "scope": self.scope, "table": self.table,
                "refutation": list(self.refutation) if self.refutation else None}


def _ftext(scope: str, q: MultiPoly, t: SimilarityTriple | None) -> str:
    s = canonical_text(q)
    if scope == "sdp":
        s += f" @ (n={t.n}, m={t.m}, k={t.k})"
    return s


def build_F(P: GraphPolyDef, Q: GraphPolyDef, catalog: Catalog, scope: str = "dp") -> FTable:
    table: dict[str, str] = {}
    owner: dict[str, Graph] = {}
    for g in catalog:
        key = _ftext(scope, Q(g), similarity(g))
        val = canonical_text(P(g))
        if key in table and table[key] != val:
            return FTable(False, scope, refutation=(gid(owner[key]), gid(g)))
        table.setdefault(key, val)
        owner.setdefault(key, g)
    return FTable(True, scope, table)


# -- properties -------------------------------------------------------------------------

@dataclass
class PropertyVerdict:
    dp_equivalent: bool
    dp_relation: str | None  # "equal" | "complement" | None
    sdp_equivalent: bool
    classes: dict[str, str | None]
    witnesses: list[str]

    def to_json(self) -> dict:
        return asdict(self)


def _relation(pairs: list[tuple[bool, bool]]) -> str | None:
    eq = all(a == b for a, b in pairs)
    co = all(a != b for a, b in pairs)
    if eq and co:
        return "equal"  # unreachable for nonempty input
    if eq:
        return "equal"
    if co:
        return "complement"
    return None


def property_dp_equivalent(C1: PropertyPredicate, C2: PropertyPredicate, catalog: Catalog) -> PropertyVerdict:
    """Two properties are d.p.-equivalent iff they coincide or are
    complementary; s.d.p. asks this per similarity class."""
    graphs = list(catalog)
    vals = [(C1(g), C2(g)) for g in graphs]
    rel = _relation(vals) if vals else "equal"
    wit = []
    if rel is None:
        differ = next(g for g, (a, b) in zip(graphs, vals) if a != b)
        agree = next(g for g, (a, b) in zip(graphs, vals) if a == b)
        wit = [gid(differ), gid(agree)]
    classes: dict[str, list] = {}
    for g, v in zip(graphs, vals):
        t = similarity(g)
        classes.setdefault(f"({t.n},{t.m},{t.k})", []).append(v)
    cls = {k: _relation(v) for k, v in classes.items()}
    return PropertyVerdict(rel is not None, rel, all(v is not None for v in cls.values()), cls, wit)


# -- prefactor relations ---------------------------------------------------------------------

@dataclass
class PrefactorResult:
    ok: bool
    graph: str | None = None
    point: dict | None = None
    detail: str = ""
    checked: int = 0
    poles_skipped: int = 0


def _rand_rational(rng: random.Random) -> Fraction:
    while True:
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if x:
            return x


def verify_prefactor_relation(
    P: GraphPolyDef,
    Q: GraphPolyDef,
    f: Callable[[SimilarityTriple], MultiPoly],
    g_list: Mapping[str, Callable[[SimilarityTriple], MultiPoly]],
    catalog: Catalog,
    sample_points: int = 10,
    seed: int = 0,
) -> PrefactorResult:
    """Check P(G; Y) = f(G; Y) * Q(G; g_1(G; Y), ...) at exact rational
    points.  ``g_list`` maps each indeterminate of Q to its replacement.

    Both sides are Laurent polynomials in P's indeterminates.  In one
    indeterminate, a nonzero difference of span s (max minus min exponent)
    has at most s nonzero roots, so s + 1 distinct nonzero points certify
    the identity; more indeterminates are covered in the probabilistic
    sense only.  Points that hit a pole are replaced."""
    rng = random.Random(seed)
    vars_ = tuple(P.arity)
    checked = skipped = 0
    for g in catalog:
        t = similarity(g)
        pg, qg = P(g), Q(g)
        fp = f(t)
        gp = {name: fn(t) for name, fn in g_list.items()}
        done = 0
        tries = 0
        while done < sample_points:
            tries += 1
            if tries > 50 * sample_points:
                return PrefactorResult(False, gid(g), None, "too many poles", checked, skipped)
            pt = {v: _rand_rational(rng) for v in vars_}
            try:
                lhs = pg.eval_rational(pt)
                sub = {name: gv.eval_rational(pt) for name, gv in gp.items()}
                rhs = fp.eval_rational(pt) * qg.eval_rational(sub)
            except ZeroDivisionError:
                skipped += 1
                continue
            done += 1
            checked += 1
            if lhs != rhs:
                return PrefactorResult(
                    False, gid(g), {k: str(v) for k, v in pt.items()},
                    f"lhs {lhs} != rhs {rhs}", checked, skipped,
                )
    return PrefactorResult(True, checked=checked, poles_skipped=skipped)


# -- uniqueness -----------------------------------------------------------------------------

def is_P_unique(g: Graph, P: GraphPolyDef, catalog: Catalog) -> bool:
    v = P(g)
    for h in catalog:
        if P(h) == v and not G.is_isomorphic(g, h):
            return False
    return True


# -- representability search -------------------------------------------------------------------

@dataclass
class RepresentabilityResult:
    framework: str
    target: str
    max_n: int
    solutions: list[list[str]]  # member graphs (graph6) of each matching property
    refuted_at: str | None  # first graph on which every candidate failed

    @property
    def representable(self) -> bool:
        return bool(self.solutions)


def _ckey(h: Graph) -> tuple[int, int]:
    return (h.n, G.canonical_code(h))


def table_property(members: Iterable[Graph], name: str = "table", closed: bool = False) -> PropertyPredicate:
    """Property given by an explicit member list; ``closed`` declares
    closure under adding isolated vertices (needed by gen_span)."""
    codes = frozenset(_ckey(h) for h in members)
    return PropertyPredicate(name, lambda h: _ckey(h) in codes, closed)


def search_representation(
    framework: str, target: GraphPolyDef, max_n: int, min_n: int = 1
) -> RepresentabilityResult:
    """Exhaustively search properties C, restricted to graphs with at most
    ``max_n`` vertices, such that framework(C) equals ``target`` on every
    catalog graph with ``min_n`` to ``max_n`` vertices.  The default
    ``min_n = 1`` leaves the empty graph untested (its membership in C is
    still enumerated), since conventions at n = 0 vary.

    Values on a k-vertex graph only depend on C's members with at most k
    vertices (for spanning subgraphs, exactly k), so candidates are grown
    layer by layer and pruned on each layer's graphs.  An empty result is a
    proof that no property at all represents the target."""
    fn = {"gen_ind": gen_ind, "gen_span": gen_span, "harary": harary}[framework]
    cands: list[frozenset[int]] = [frozenset()]
    layer_graphs: dict[int, list[Graph]] = {}
    for k in range(max_n + 1):
        layer = G.enumerate_catalog(k)
        layer_graphs[k] = layer
        codes = [_ckey(h) for h in layer]
        nxt = []
        last_fail = None
        for base in cands:
            for r in range(len(codes) + 1):
                for pick in combinations(range(len(codes)), r):
                    members = base | {codes[i] for i in pick}
                    if framework == "gen_span" and not _closed(members, layer_graphs, k):
                        continue
                    prop = PropertyPredicate(
                        "search", lambda h, ms=members: _ckey(h) in ms, True
                    )
                    tests = layer if k >= min_n else []
                    bad = next((h for h in tests if fn(prop, h) != target(h)), None)
                    if bad is None:
                        nxt.append(frozenset(members))
                    else:
                        last_fail = bad
        cands = nxt
        if not cands:
            return RepresentabilityResult(framework, target.name, max_n, [], gid(last_fail))
    by_code = {_ckey(h): h for k in layer_graphs for h in layer_graphs[k]}
    sols = [sorted(gid(by_code[c]) for c in m) for m in cands]
    return RepresentabilityResult(framework, target.name, max_n, sols, None)


def _closed(members: frozenset, layers: dict[int, list[Graph]], k: int) -> bool:
    """Closure under adding an isolated vertex, between layers k-1 and k."""
    if k == 0:
        return True
    for h in layers[k - 1]:
        if _ckey(h) in members:
            grown = G.disjoint_union(h, G.empty(1))
            if _ckey(grown) not in members:
                return False
    return True
