"""Named graph polynomials and the three defining frameworks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import guards
from .graphs import (
    Graph,
    canonical_weighted,
    complement,
    complete,
    cycle,
    empty,
    is_bipartite,
    is_connected,
    is_forest,
    is_triangle_free,
    laplacian,
)
from .linalg import bareiss_det
from .polys import MultiPoly, basis_poly, interpolate_univariate, substitute, substitute_many

X = MultiPoly.var("X")
Y = MultiPoly.var("Y")
ONE = MultiPoly.const(1)


def _popcount(x: int) -> int:
    return bin(x).count("1")


# -- properties -------------------------------------------------------------

@dataclass(frozen=True)
class PropertyPredicate:
    """A graph property.  ``sizes`` optionally lists the only vertex counts
    a member can have; ``decide_mask`` optionally decides G[A] from (G, A)
    without building the induced subgraph.  Both are pure speed hints."""

    name: str
    decide: Callable[[Graph], bool]
    closed_under_isolated_vertices: bool = False
    sizes: frozenset | None = None
    decide_mask: Callable[[Graph, int], bool] | None = field(default=None, compare=False)

    def __call__(self, g: Graph) -> bool:
        return bool(self.decide(g))

    def holds_on(self, g: Graph, mask: int) -> bool:
        if self.sizes is not None and _popcount(mask) not in self.sizes:
            return False
        if self.decide_mask is not None:
            return bool(self.decide_mask(g, mask))
        return bool(self.decide(g.induced(mask)))

    def negate(self, closed_under_isolated_vertices: bool = False) -> "PropertyPredicate":
        base = self
        dm = None
        if self.decide_mask is not None or self.sizes is not None:
            def dm(g: Graph, mask: int) -> bool:
                return not base.holds_on(g, mask)
        return PropertyPredicate(
            name=f"not-{self.name}",
            decide=lambda g: not base.decide(g),
            closed_under_isolated_vertices=closed_under_isolated_vertices,
            decide_mask=dm,
        )


def _mask_cycle(i: int) -> Callable[[Graph, int], bool]:
    def decide(g: Graph, mask: int) -> bool:
        if _popcount(mask) != i:
            return False
        m = mask
        while m:
            low = m & -m
            if _popcount(g.adj[low.bit_length() - 1] & mask) != 2:
                return False
            m ^= low
        return _mask_connected(g, mask)
    return decide


def _mask_connected(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.adj[low.bit_length() - 1]
            f ^= low
        nxt &= mask
        frontier = nxt & ~comp
        comp |= nxt
    return comp == mask


def _is_cycle_graph(g: Graph, i: int) -> bool:
    return g.n == i and g.m == i and all(g.degree(v) == 2 for v in range(g.n)) and is_connected(g)


def _mcp_internal(g: Graph) -> bool:
    # one connected graph plus isolated vertices
    return g.n >= 1 and sum(1 for c in g.components if _popcount(c) > 1) <= 1


def cycle_property(i: int) -> PropertyPredicate:
    return PropertyPredicate(
        name=f"cycle-{i}",
        decide=lambda g: _is_cycle_graph(g, i),
        sizes=frozenset({i}),
        decide_mask=_mask_cycle(i),
    )


PROPERTIES: dict[str, PropertyPredicate] = {
    "edgeless": PropertyPredicate(
        "edgeless", lambda g: g.m == 0, True,
        decide_mask=lambda g, a: all(not (g.adj[v] & a) for v in range(g.n) if a >> v & 1),
    ),
    "connected": PropertyPredicate("connected", is_connected, False, decide_mask=_mask_connected),
    "disconnected": PropertyPredicate("disconnected", lambda g: g.k >= 2, True),
    "clique": PropertyPredicate("clique", lambda g: g.m == g.n * (g.n - 1) // 2, False),
    "complete": PropertyPredicate("complete", lambda g: g.n >= 1 and g.m == g.n * (g.n - 1) // 2, False),
    "forest": PropertyPredicate("forest", is_forest, True),
    "triangle-free": PropertyPredicate("triangle-free", is_triangle_free, True),
    "bipartite": PropertyPredicate("bipartite", is_bipartite, True),
    "singleton": PropertyPredicate("singleton", lambda g: g.n == 1, False, frozenset({1})),
    "pair-set": PropertyPredicate("pair-set", lambda g: g.n == 2, False, frozenset({2})),
    "k1-k2-e2": PropertyPredicate("k1-k2-e2", lambda g: g.n in (1, 2), False, frozenset({1, 2})),
    "mcp-internal": PropertyPredicate("mcp-internal", _mcp_internal, True),
}


def get_property(name: str) -> PropertyPredicate:
    if name.startswith("cycle-"):
        return cycle_property(int(name.split("-", 1)[1]))
    if name.startswith("not-"):
        return get_property(name[4:]).negate()
    if name not in PROPERTIES:
        raise KeyError(f"unknown property {name!r}")
    return PROPERTIES[name]


# -- definitions --------------------------------------------------------------

@dataclass(frozen=True)
class GraphPolyDef:
    """A graph polynomial.  ``guard`` pairs a guard constant with the
    measure it bounds ('n' or 'm'); ``degree_bound`` optionally gives a
    per-variable bound d(G) used by the stability rewrites."""

    name: str
    arity: tuple[str, ...]
    compute: Callable[[Graph], MultiPoly] = field(compare=False)
    guard: tuple[tuple[str, str], ...] = ()
    edge_indexed: bool = False
    degree_bound: Callable[[Graph], int] | None = field(default=None, compare=False)

    def check_guard(self, g: Graph) -> None:
        for const, measure in self.guard:
            guards.check(const, g.n if measure == "n" else g.m, f"{self.name} on {measure}")

    def __call__(self, g: Graph) -> MultiPoly:
        self.check_guard(g)
        return self.compute(g)


# -- Potts / chromatic ---------------------------------------------------------

def potts(g: Graph) -> MultiPoly:
    """Sum over edge subsets B of X^{k[B]} Y^{|B|}."""
    guards.check("POTTS_MAX_M", g.m, "potts edge subsets")
    counts: dict[tuple[int, int], int] = {}
    edges = g.edge_list

    def rec(i: int, label: list[int], comps: int, size: int) -> None:
        if i == len(edges):
            key = (comps, size)
            counts[key] = counts.get(key, 0) + 1
            return
        rec(i + 1, label, comps, size)
        u, v = edges[i]
        a, b = label[u], label[v]
        if a == b:
            rec(i + 1, label, comps, size + 1)
        else:
            merged = [a if x == b else x for x in label]
            rec(i + 1, merged, comps - 1, size + 1)

    rec(0, list(range(g.n)), g.n, 0)
    return MultiPoly(("X", "Y"), {(k, s): c for (k, s), c in counts.items()})


def chromatic(g: Graph) -> MultiPoly:
    return substitute(potts(g), "Y", -1)


def chromatic_complement(g: Graph) -> MultiPoly:
    return chromatic(complement(g))


# -- Tutte ----------------------------------------------------------------------

def _mg_components(w: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    n = len(w)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for v in range(n):
                if not seen[v] and w[u][v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        out.append(sorted(comp))
    return out


def _sub(w, vs):
    return tuple(tuple(w[a][b] for b in vs) for a in vs)


@lru_cache(maxsize=None)
def _tutte_mg(w: tuple[tuple[int, ...], ...]) -> MultiPoly:
    """Tutte polynomial of a connected loopless multigraph in canonical form."""
    n = len(w)
    if n <= 1:
        return ONE
    # contract along the pair with the highest multiplicity touching a min-degree vertex
    deg = [sum(w[u][v] for v in range(n) if v != u) for u in range(n)]
    u = min(range(n), key=lambda x: deg[x])
    v = max((x for x in range(n) if x != u and w[u][x]), key=lambda x: w[u][x])
    k = w[u][v]
    # contraction of the whole bundle: k-1 of the edges become loops
    merged = _contract(w, u, v)
    if _is_cut_bundle(w, u, v):
        # the bundle is the only link between sides
        head = X + sum((Y ** j for j in range(1, k)), MultiPoly())
        return head * tutte_multigraph(merged)
    # T(G) = T(G - bundle) + (1 + Y + ... + Y^{k-1}) T(G / bundle)
    deleted = [list(r) for r in w]
    deleted[u][v] = deleted[v][u] = 0
    coef = sum((Y ** j for j in range(k)), MultiPoly())
    return tutte_multigraph(tuple(map(tuple, deleted))) + coef * tutte_multigraph(merged)


def _is_cut_bundle(w, u, v) -> bool:
    n = len(w)
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in range(n):
            if b in seen or not w[a][b]:
                continue
            if {a, b} == {u, v}:
                continue
            seen.add(b)
            stack.append(b)
    return v not in seen


def _contract(w, u, v):
    n = len(w)
    keep = [x for x in range(n) if x != v]
    out = []
    for a in keep:
        row = []
        for b in keep:
            if a == b:
                row.append(0)
                continue
            val = w[a][b]
            if a == u:
                val += w[v][b]
            if b == u:
                val += w[a][v]
            row.append(val)
        out.append(row)
    return tuple(map(tuple, out))


def tutte_multigraph(w: tuple[tuple[int, ...], ...]) -> MultiPoly:
    """Tutte polynomial of a loopless multigraph given by its weight matrix
    (diagonal ignored); loops are handled by the caller."""
    comps = _mg_components(w)
    out = ONE
    for comp in comps:
        if len(comp) == 1:
            continue
        sub = _sub(w, comp)
        code, order = canonical_weighted(len(comp), sub)
        out = out * _tutte_mg(_sub(sub, order))
    return out


def tutte(g: Graph) -> MultiPoly:
    """Tutte polynomial by deletion-contraction on edge bundles."""
    guards.check("TUTTE_MAX_M", g.m, "tutte deletion-contraction")
    w = tuple(tuple(g.adj[u] >> v & 1 for v in range(g.n)) for u in range(g.n))
    return tutte_multigraph(w)


def universal_tutte(g: Graph) -> MultiPoly:
    """U^k V^(m-n+k) W^(n-k) T(UX/W, Y/U)."""
    U, V, W = MultiPoly.var("U"), MultiPoly.var("V"), MultiPoly.var("W")
    t = substitute_many(tutte(g), {"X": U * X * W ** -1, "Y": Y * U ** -1})
    k = g.k
    return U ** k * V ** (g.m - g.n + k) * W ** (g.n - k) * t


# -- matchings -----------------------------------------------------------------

def matching_counts(g: Graph) -> list[int]:
    """m_k = number of k-edge matchings, k = 0..n//2."""
    guards.check("MATCHING_MAX_M", g.m, "matching enumeration")
    counts = [0] * (g.n // 2 + 1)
    edges = g.edge_list

    def rec(i: int, used: int, k: int) -> None:
        if i == len(edges):
            counts[k] += 1
            return
        rec(i + 1, used, k)
        u, v = edges[i]
        bits = (1 << u) | (1 << v)
        if not used & bits:
            rec(i + 1, used | bits, k + 1)

    rec(0, 0, 0)
    return counts


def matching_gen(g: Graph) -> MultiPoly:
    return MultiPoly.from_coeffs(matching_counts(g))


def matching_defect(g: Graph) -> MultiPoly:
    mk = matching_counts(g)
    return MultiPoly(("X",), {(g.n - 2 * k,): (-1) ** k * c for k, c in enumerate(mk)})


def matching_bivar(g: Graph) -> MultiPoly:
    mk = matching_counts(g)
    return MultiPoly(("X", "Y"), {(k, g.n - 2 * k): c for k, c in enumerate(mk)})


# -- vertex subset sums ----------------------------------------------------------

def _subset_poly(g: Graph, ok: Callable[[int], bool]) -> MultiPoly:
    guards.check("SUBSET_MAX_N", g.n, "vertex subset enumeration")
    counts = [0] * (g.n + 1)
    for a in range(1 << g.n):
        if ok(a):
            counts[_popcount(a)] += 1
    return MultiPoly.from_coeffs(counts)


def independence(g: Graph) -> MultiPoly:
    adj = g.adj
    return _subset_poly(
        g, lambda a: all(not (adj[v] & a) for v in range(g.n) if a >> v & 1)
    )


def clique_poly(g: Graph) -> MultiPoly:
    adj = g.adj

    def ok(a: int) -> bool:
        return all((adj[v] | (1 << v)) & a == a for v in range(g.n) if a >> v & 1)

    return _subset_poly(g, ok)


def _cliques(g: Graph) -> list[int]:
    guards.check("SUBSET_MAX_N", g.n, "vertex subset enumeration")
    adj = g.adj
    return [
        a for a in range(1 << g.n)
        if all((adj[v] | (1 << v)) & a == a for v in range(g.n) if a >> v & 1)
    ]


def clique_number(g: Graph) -> int:
    return max(_popcount(a) for a in _cliques(g))


def maximal_clique_count(g: Graph) -> int:
    cl = set(_cliques(g))
    return sum(1 for a in cl if not any(a | (1 << v) in cl for v in range(g.n) if not a >> v & 1))


def domination(g: Graph) -> MultiPoly:
    adj = g.adj
    full = (1 << g.n) - 1

    def ok(a: int) -> bool:
        cover = a
        for v in range(g.n):
            if a >> v & 1:
                cover |= adj[v]
        return cover == full

    return _subset_poly(g, ok)


# -- determinant polynomials -------------------------------------------------------

def _det_poly(g: Graph, entry: Callable[[int, int, int], int]) -> MultiPoly:
    guards.check("DET_MAX_N", g.n, "determinant polynomial")
    pts = []
    for x in range(g.n + 1):
        mat = [[entry(x, i, j) for j in range(g.n)] for i in range(g.n)]
        pts.append((x, bareiss_det(mat)))
    p = interpolate_univariate(pts)
    if not p.is_integral():
        raise ArithmeticError("determinant polynomial interpolated to non-integral coefficients")
    return p


def char_poly_adjacency(g: Graph) -> MultiPoly:
    """det(X I - A)."""
    return _det_poly(g, lambda x, i, j: (x if i == j else 0) - (g.adj[i] >> j & 1))


def laplacian_char(g: Graph) -> MultiPoly:
    """det(X I - L)."""
    L = laplacian(g)
    return _det_poly(g, lambda x, i, j: (x if i == j else 0) - L[i][j])


def laplacian_det_form(g: Graph) -> MultiPoly:
    """det(X D - A)."""
    deg = [g.degree(v) for v in range(g.n)]
    return _det_poly(g, lambda x, i, j: (x * deg[i] if i == j else 0) - (g.adj[i] >> j & 1))


# -- spanning trees ------------------------------------------------------------------

def edge_var(u: int, v: int) -> str:
    if u > v:
        u, v = v, u
    return f"X_{{{u},{v}}}"


def spanning_tree_poly(g: Graph) -> MultiPoly:
    """Sum over spanning trees T of the product of X_{u,v}, e in T."""
    if not is_connected(g):
        raise ValueError("spanning tree polynomial needs a connected graph")
    guards.check("SPANNING_MAX_M", g.m, "spanning tree enumeration")
    edges = g.edge_list
    names = tuple(edge_var(u, v) for u, v in edges)
    terms = {}
    for combo in combinations(range(len(edges)), g.n - 1):
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i in combo:
            a, b = find(edges[i][0]), find(edges[i][1])
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            e = [0] * len(edges)
            for i in combo:
                e[i] = 1
            terms[tuple(e)] = 1
    return MultiPoly(names, terms)


# -- generating functions ---------------------------------------------------------------

def _subsets(n: int, sizes: frozenset | None) -> Iterable[int]:
    if sizes is None:
        yield from range(1 << n)
        return
    for s in sorted(sizes):
        if 0 <= s <= n:
            for combo in combinations(range(n), s):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                yield mask


def gen_ind(C: PropertyPredicate, g: Graph) -> MultiPoly:
    """Sum over vertex sets A with G[A] in C of X^{|A|}."""
    guards.check("SUBSET_MAX_N", g.n, "induced subgraph enumeration")
    counts = [0] * (g.n + 1)
    for a in _subsets(g.n, C.sizes):
        if C.holds_on(g, a):
            counts[_popcount(a)] += 1
    return MultiPoly.from_coeffs(counts)


def gen_span(D: PropertyPredicate, g: Graph) -> MultiPoly:
    """Sum over edge sets B with the spanning subgraph (V, B) in D of X^{|B|}."""
    if not D.closed_under_isolated_vertices:
        raise ValueError(f"property {D.name} is not closed under adding isolated vertices")
    guards.check("POTTS_MAX_M", g.m, "spanning subgraph enumeration")
    edges = g.edge_list
    counts = [0] * (g.m + 1)
    for b in range(1 << g.m):
        sub = Graph.from_edges(g.n, (edges[i] for i in range(g.m) if b >> i & 1))
        if D(sub):
            counts[_popcount(b)] += 1
    return MultiPoly.from_coeffs(counts)


def gen_rel(phi: Callable[[Graph, frozenset], bool], r: int, g: Graph) -> MultiPoly:
    """Sum over relations A within V^r with phi(G, A) of X^{|A|}."""
    cells = g.n ** r
    guards.check("REL_MAX_BITS", cells, "relation enumeration")
    universe = []
    for idx in range(cells):
        t = []
        x = idx
        for _ in range(r):
            t.append(x % g.n)
            x //= g.n
        universe.append(tuple(reversed(t)))
    counts = [0] * (cells + 1)
    for mask in range(1 << cells):
        rel = frozenset(universe[i] for i in range(cells) if mask >> i & 1)
        if phi(g, rel):
            counts[len(rel)] += 1
    return MultiPoly.from_coeffs(counts)


def phi_dom(g: Graph, rel: frozenset) -> bool:
    """Dominating-set condition on a unary relation."""
    a = 0
    for (v,) in rel:
        a |= 1 << v
    cover = a
    for v in range(g.n):
        if a >> v & 1:
            cover |= g.adj[v]
    return cover == (1 << g.n) - 1


def gen_ind_weighted(
    C: PropertyPredicate, fs: Sequence[Callable[[Graph], int]], g: Graph
) -> MultiPoly:
    """Sum over A with G[A] in C of prod_i X_i^{f_i(G[A])}."""
    guards.check("SUBSET_MAX_N", g.n, "induced subgraph enumeration")
    names = tuple(f"X_{i + 1}" for i in range(len(fs)))
    terms: dict[tuple, int] = {}
    for a in _subsets(g.n, C.sizes):
        if C.holds_on(g, a):
            h = g.induced(a)
            e = tuple(f(h) for f in fs)
            terms[e] = terms.get(e, 0) + 1
    return MultiPoly(names, terms)


# -- Harary / colourings with class conditions ---------------------------------------------

def harary_counts(C: PropertyPredicate, g: Graph) -> list[int]:
    """b_l = number of partitions of V into l nonempty blocks, each
    inducing a member of C.  Blocks are chosen by their least vertex."""
    guards.check("HARARY_MAX_N", g.n, "set partition enumeration")
    counts = [0] * (g.n + 1)
    full = (1 << g.n) - 1
    cache: dict[int, bool] = {}

    def ok(mask: int) -> bool:
        if mask not in cache:
            cache[mask] = C.holds_on(g, mask)
        return cache[mask]

    def rec(rest: int, blocks: int) -> None:
        if not rest:
            counts[blocks] += 1
            return
        low = rest & -rest
        others = rest ^ low
        sub = others
        while True:
            block = sub | low
            if ok(block):
                rec(rest ^ block, blocks + 1)
            if not sub:
                break
            sub = (sub - 1) & others

    rec(full, 0)
    return counts


def harary(C: PropertyPredicate, g: Graph) -> MultiPoly:
    """Number of colourings with at most X colours whose classes induce
    members of C, as sum b_l X(X-1)...(X-l+1)."""
    out = MultiPoly()
    for l, b in enumerate(harary_counts(C, g)):
        if b:
            out = out + basis_poly("falling", l) * b
    return out


def _rg_strings(m: int) -> Iterable[tuple[list[int], int]]:
    """Restricted-growth strings of length m with their number of colours."""
    if m == 0:
        yield [], 0
        return
    s = [0] * m

    def rec(i: int, top: int):
        if i == m:
            yield list(s), top + 1
            return
        for c in range(top + 2):
            s[i] = c
            yield from rec(i + 1, max(top, c))

    s[0] = 0
    yield from rec(1, 0)


def mcp_counts(g: Graph) -> list[int]:
    """r_l = edge colourings with exactly l colours up to renaming, such
    that every pair of vertices is joined by a monochromatic path."""
    guards.check("MCP_MAX_M", g.m, "edge colouring enumeration")
    edges = g.edge_list
    counts = [0] * (g.m + 1)
    full_pairs = g.n * (g.n - 1) // 2
    for colouring, ncol in _rg_strings(g.m):
        covered = set()
        for c in range(ncol):
            sub = Graph.from_edges(g.n, (edges[i] for i in range(g.m) if colouring[i] == c))
            for comp in sub.components:
                vs = [v for v in range(g.n) if comp >> v & 1]
                covered.update(combinations(vs, 2))
        if len(covered) == full_pairs:
            counts[ncol] += 1
    return counts


def mcp_poly(g: Graph) -> MultiPoly:
    """Sum over l of c(l) C(X, l), c(l) = l! r_l surjective colourings."""
    out = MultiPoly()
    for l, r in enumerate(mcp_counts(g)):
        if r:
            out = out + basis_poly("falling", l) * r
    return out


# -- registry ------------------------------------------------------------------------

def _n_bound(g: Graph) -> int:
    return max(g.n, 1)


REGISTRY: dict[str, GraphPolyDef] = {
    d.name: d
    for d in [
        GraphPolyDef("potts", ("X", "Y"), potts, (("POTTS_MAX_M", "m"),)),
        GraphPolyDef("chromatic", ("X",), chromatic, (("POTTS_MAX_M", "m"),)),
        GraphPolyDef("chromatic_complement", ("X",), chromatic_complement),
        GraphPolyDef("tutte", ("X", "Y"), tutte, (("TUTTE_MAX_M", "m"),)),
        GraphPolyDef("universal_tutte", ("X", "Y", "U", "V", "W"), universal_tutte, (("TUTTE_MAX_M", "m"),)),
        GraphPolyDef("matching_gen", ("X",), matching_gen, (("MATCHING_MAX_M", "m"),), degree_bound=_n_bound),
        GraphPolyDef("matching_defect", ("X",), matching_defect, (("MATCHING_MAX_M", "m"),)),
        GraphPolyDef("matching_bivar", ("X", "Y"), matching_bivar, (("MATCHING_MAX_M", "m"),)),
        GraphPolyDef("independence", ("X",), independence, (("SUBSET_MAX_N", "n"),)),
        GraphPolyDef("clique_poly", ("X",), clique_poly, (("SUBSET_MAX_N", "n"),)),
        GraphPolyDef("domination", ("X",), domination, (("SUBSET_MAX_N", "n"),)),
        GraphPolyDef("char_poly_adjacency", ("X",), char_poly_adjacency, (("DET_MAX_N", "n"),)),
        GraphPolyDef("laplacian_char", ("X",), laplacian_char, (("DET_MAX_N", "n"),)),
        GraphPolyDef("laplacian_det_form", ("X",), laplacian_det_form, (("DET_MAX_N", "n"),)),
        GraphPolyDef("spanning_tree_poly", (), spanning_tree_poly, (("SPANNING_MAX_M", "m"),), edge_indexed=True),
        GraphPolyDef("mcp", ("X",), mcp_poly, (("MCP_MAX_M", "m"),)),
    ]
}

_FRAMEWORKS = {
    "gen_ind": (gen_ind, ("SUBSET_MAX_N", "n")),
    "gen_span": (gen_span, ("POTTS_MAX_M", "m")),
    "harary": (harary, ("HARARY_MAX_N", "n")),
}


def framework_poly(kind: str, prop: PropertyPredicate) -> GraphPolyDef:
    fn, guard = _FRAMEWORKS[kind]
    return GraphPolyDef(f"{kind}:{prop.name}", ("X",), lambda g: fn(prop, g), (guard,))


def get_poly(name: str) -> GraphPolyDef:
    """Registry lookup; framework polynomials are named ``gen_ind:<property>``."""
    key = name.replace("-", "_") if ":" not in name else name
    if ":" in key:
        kind, prop = key.split(":", 1)
        kind = kind.replace("-", "_")
        if kind not in _FRAMEWORKS:
            raise KeyError(f"unknown framework {kind!r}")
        return framework_poly(kind, get_property(prop))
    if key not in REGISTRY:
        raise KeyError(f"unknown polynomial {name!r}; known: {sorted(REGISTRY)}")
    return REGISTRY[key]


def poly_from_function(name: str, fn: Callable[[Graph], MultiPoly], arity: tuple[str, ...] = ("X",)) -> GraphPolyDef:
    return GraphPolyDef(name, arity, fn)


__all__ = [
    "PropertyPredicate", "GraphPolyDef", "PROPERTIES", "REGISTRY", "get_property", "get_poly",
    "potts", "chromatic", "chromatic_complement", "tutte", "universal_tutte",
    "matching_counts", "matching_gen", "matching_defect", "matching_bivar",
    "independence", "clique_poly", "domination", "char_poly_adjacency", "laplacian_char",
    "laplacian_det_form", "spanning_tree_poly", "edge_var", "gen_ind", "gen_span", "gen_rel",
    "gen_ind_weighted", "phi_dom", "harary", "harary_counts", "mcp_poly", "mcp_counts",
    "cycle_property", "framework_poly", "clique_number", "maximal_clique_count",
    "complete", "cycle", "empty",
]
