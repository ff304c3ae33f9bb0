"""Simple graphs on vertices 0..n-1, standard families, and catalogs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from . import guards
from .linalg import bareiss_det


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adj[v] >> u & 1]

    @cached_property
    def components(self) -> tuple[int, ...]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(comp)
        return tuple(comps)

    @property
    def k(self) -> int:
        return len(self.components)

    def induced(self, vertices: int | Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled in increasing vertex order."""
        if isinstance(vertices, int):
            vs = [v for v in range(self.n) if vertices >> v & 1]
        else:
            vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(vs), es)

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v becomes perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph({format_edges(self)!r})"


@dataclass(frozen=True)
class SimilarityTriple:
    n: int
    m: int
    k: int

    @property
    def nu(self) -> int:
        """Cyclomatic number m - n + k."""
        return self.m - self.n + self.k

    @property
    def rho(self) -> int:
        """Rank n - k."""
        return self.n - self.k

    def astuple(self) -> tuple[int, int, int]:
        return (self.n, self.m, self.k)


@dataclass(frozen=True)
class StructuralFacts:
    triple: SimilarityTriple
    degree_sequence: tuple[int, ...]
    connected: bool
    forest: bool
    triangle_free: bool
    bipartite: bool
    clique: bool
    spanning_tree_count: int


def similarity(g: Graph) -> SimilarityTriple:
    return SimilarityTriple(g.n, g.m, g.k)


def is_connected(g: Graph) -> bool:
    return g.k == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - g.k


def is_triangle_free(g: Graph) -> bool:
    a = g.adj
    return all(not (a[u] & a[v]) for u, v in g.edges)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_clique(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def laplacian(g: Graph) -> list[list[int]]:
    L = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        L[u][v] = L[v][u] = -1
        L[u][u] += 1
        L[v][v] += 1
    return L


def spanning_tree_count(g: Graph) -> int:
    if g.n <= 1:
        return 1
    if g.k != 1:
        return 0
    L = laplacian(g)
    return bareiss_det([row[1:] for row in L[1:]])


def analyze(g: Graph) -> StructuralFacts:
    return StructuralFacts(
        triple=similarity(g),
        degree_sequence=tuple(sorted(g.degree(v) for v in range(g.n))),
        connected=is_connected(g),
        forest=is_forest(g),
        triangle_free=is_triangle_free(g),
        bipartite=is_bipartite(g),
        clique=is_clique(g),
        spanning_tree_count=spanning_tree_count(g),
    )


def complement(g: Graph) -> Graph:
    return Graph.from_edges(
        g.n, ((u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v))
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph.from_edges(
        g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    )


# -- families ---------------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    return Graph(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_star(i: int) -> Graph:
    """Cycle on i-1 vertices with one pendant vertex attached to vertex 0."""
    if i < 4:
        raise ValueError("cycle_star needs i >= 4")
    c = cycle(i - 1)
    return Graph.from_edges(i, list(c.edges) + [(0, i - 1)])


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for h in graphs:
        out = disjoint_union(out, h)
    return out


def cycle_copies(i: int, k: int) -> Graph:
    if k < 1:
        raise ValueError("need k >= 1 copies")
    return union_all([cycle(i)] * k)


def cycle_copies_hat(i: int, k: int) -> Graph:
    """k-1 copies of cycle_star(i) followed by one cycle C_i."""
    if k < 1:
        raise ValueError("need k >= 1 copies")
    stars = [cycle_star(i)] * (k - 1) if k > 1 else []
    return union_all(stars + [cycle(i)])


FAMILIES: dict[str, tuple[Callable[..., Graph], int]] = {
    "K": (complete, 1),
    "E": (empty, 1),
    "C": (cycle, 1),
    "P": (path, 1),
    "C_star": (cycle_star, 1),
    "G": (cycle_copies, 2),
    "Ghat": (cycle_copies_hat, 2),
}


def build_family(name: str, params: Sequence[int]) -> Graph:
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    fn, arity = FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"family {name} takes {arity} parameter(s)")
    if any(p < 0 for p in params):
        raise ValueError("negative family parameter")
    return fn(*params)


# -- graph6 -----------------------------------------------------------------

def _upper_bits(g: Graph) -> Iterator[int]:
    # graph6 column order: for j, for i < j
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            yield aj >> i & 1


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphFormatError("graph6 encoder supports n <= 62")
    out = [chr(63 + g.n)]
    bits = list(_upper_bits(g))
    bits += [0] * (-len(bits) % 6)
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p:p + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} at position {pos} outside 63..126")
    n = ord(s[0]) - 63
    if n > 62:
        raise GraphFormatError("multi-byte size headers (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"length mismatch: n={n} needs {(nbits + 5) // 6} data bytes, got {len(body)}"
        )
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    edges = []
    p = 0
    for j in range(1, n):
        for i in range(j):
            if bits[p]:
                edges.append((i, j))
            p += 1
    return Graph.from_edges(n, edges)


# -- edge-list text ---------------------------------------------------------

def format_edges(g: Graph) -> str:
    return f"n={g.n};" + ",".join(f"{u}-{v}" for u, v in g.edge_list)


def parse_edges(text: str) -> Graph:
    s = text.strip().replace(" ", "")
    n = None
    if s.startswith("n="):
        head, _, s = s.partition(";")
        try:
            n = int(head[2:])
        except ValueError:
            raise GraphFormatError(f"bad vertex count in {text!r}") from None
    edges = []
    for tok in filter(None, s.split(",")):
        parts = tok.split("-")
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge token {tok!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"bad edge token {tok!r}") from None
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


# -- canonical form ---------------------------------------------------------

def canonical_weighted(n: int, w: Sequence[Sequence[int]]) -> tuple[tuple, list[int]]:
    """Lexicographically least column code over all vertex orders.

    ``w`` is a symmetric matrix of non-negative integers (diagonal = loops).
    The code lists, for each position j, the loop weight of the vertex
    placed there followed by its weights to positions 0..j-1.  Returns the
    code and the order (order[j] = original vertex at position j).
    Transpositions of twin vertices are automorphisms fixing everything
    else, so only one twin per class is branched on.
    """
    twin = list(range(n))
    for a in range(n):
        if twin[a] != a:
            continue
        for b in range(a + 1, n):
            if twin[b] == b and w[a][a] == w[b][b] and all(
                w[a][x] == w[b][x] for x in range(n) if x != a and x != b
            ):
                twin[b] = a
    best: list = [None, None]

    def rec(order: list[int], remaining: list[int], code: list[tuple]) -> None:
        depth = len(order)
        if not remaining:
            if best[0] is None or code < best[0]:
                best[0] = list(code)
                best[1] = list(order)
            return
        cols = {}
        for v in remaining:
            wv = w[v]
            cols[v] = (wv[v],) + tuple(wv[p] for p in order)
        low = min(cols.values())
        if best[0] is not None:
            cur = code + [low]
            if cur > best[0][: depth + 1]:
                return
        tried = set()
        for v in remaining:
            if cols[v] != low or twin[v] in tried:
                continue
            tried.add(twin[v])
            rest = [x for x in remaining if x != v]
            order.append(v)
            code.append(low)
            rec(order, rest, code)
            order.pop()
            code.pop()

    rec([], list(range(n)), [])
    if best[0] is None:
        return (), []
    return tuple(best[0]), best[1]


def _matrix(g: Graph) -> list[list[int]]:
    return [[g.adj[u] >> v & 1 for v in range(g.n)] for u in range(g.n)]


def canonical_code(g: Graph) -> int:
    """Minimal upper-triangular adjacency bit-string, read as an integer."""
    return _canonical(g)[0]


def canonical_form(g: Graph) -> Graph:
    """The representative obtained by relabelling into canonical order."""
    return _canonical(g)[1]


_CANON_CACHE: dict[Graph, tuple[int, Graph]] = {}


def _canonical(g: Graph) -> tuple[int, Graph]:
    hit = _CANON_CACHE.get(g)
    if hit is not None:
        return hit
    code, order = canonical_weighted(g.n, _matrix(g))
    val = 0
    for col in code:
        for b in col[1:]:
            val = (val << 1) | b
    pos = [0] * g.n
    for j, v in enumerate(order):
        pos[v] = j
    out = (val, g.relabel(pos))
    if len(_CANON_CACHE) < 200_000:
        _CANON_CACHE[g] = out
    return out


# -- catalog ----------------------------------------------------------------

_LEVELS: dict[int, list[Graph]] = {0: [Graph(0)]}


def _grow(parents: Iterable[Graph], n: int) -> list[Graph]:
    seen: dict[int, Graph] = {}
    for g in parents:
        base = list(g.edges)
        for mask in range(1 << (n - 1)):
            h = Graph.from_edges(n, base + [(u, n - 1) for u in range(n - 1) if mask >> u & 1])
            code, rep = _canonical(h)
            if code not in seen:
                seen[code] = rep
    return [seen[c] for c in sorted(seen)]


def _level(n: int) -> list[Graph]:
    if n not in _LEVELS:
        _LEVELS[n] = _grow(_level(n - 1), n)
    return _LEVELS[n]


def enumerate_catalog(
    n: int,
    filter: Callable[[Graph], bool] | None = None,
    *,
    upto: bool = False,
    hereditary: bool = False,
) -> list[Graph]:
    """One canonical representative per isomorphism class.

    By default returns the graphs on exactly ``n`` vertices; ``upto=True``
    returns every order 0..n.  Order: by n, then canonical code.  When the
    filter is closed under taking induced subgraphs, ``hereditary=True``
    prunes the vertex-by-vertex growth.
    """
    guards.check("CATALOG_MAX_N", n, "catalog enumeration")
    if n < 0:
        raise ValueError("negative n")
    sizes = range(n + 1) if upto else [n]
    out: list[Graph] = []
    if hereditary and filter is not None:
        layer = [g for g in _LEVELS[0] if filter(g)]
        layers = {0: layer}
        for size in range(1, n + 1):
            layer = [g for g in _grow(layer, size) if filter(g)]
            layers[size] = layer
        for size in sizes:
            out.extend(layers[size])
        return out
    for size in sizes:
        out.extend(g for g in _level(size) if filter is None or filter(g))
    return out


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking bijection search with degree pruning."""
    guards.check("ISO_MAX_N", max(g.n, h.n), "isomorphism test")
    if g.n != h.n or g.m != h.m:
        return False
    dg = [g.degree(v) for v in range(g.n)]
    dh = [h.degree(v) for v in range(h.n)]
    if sorted(dg) != sorted(dh):
        return False
    order = sorted(range(g.n), key=lambda v: -dg[v])
    image = [-1] * g.n
    used = [False] * h.n

    def rec(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for x in range(h.n):
            if used[x] or dh[x] != dg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(image[u], x):
                    ok = False
                    break
            if ok:
                image[v] = x
                used[x] = True
                if rec(i + 1):
                    return True
                used[x] = False
        image[v] = -1
        return False

    return rec(0)
