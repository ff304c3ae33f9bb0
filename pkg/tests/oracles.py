"""Brute-force reference computations that do not import graphpoly.

Graphs are (n, edges) pairs.  Polynomials are ascending coefficient lists
(univariate) or {(i, j): c} dicts (bivariate).  Everything is exponential
and only meant for tiny graphs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


def atlas_graphs(max_n: int) -> list[tuple[int, list[tuple[int, int]]]]:
    """All graphs with 0..max_n vertices up to isomorphism (max_n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() > max_n:
            continue
        out.append((h.number_of_nodes(), sorted(tuple(sorted(e)) for e in h.edges())))
    return out


def to_graph6(n: int, edges) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def class_counts(max_n: int) -> list[int]:
    counts = [0] * (max_n + 1)
    for n, _ in atlas_graphs(max_n):
        counts[n] += 1
    return counts


# -- univariate helpers ------------------------------------------------------------

def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def lagrange(points):
    """Exact interpolation through (x, y) pairs; ascending coefficients."""
    total = []
    for i, (xi, yi) in enumerate(points):
        term = [Fraction(yi)]
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = pmul(term, [Fraction(-xj, xi - xj), Fraction(1, xi - xj)])
        total = padd(total, term)
    assert all(c.denominator == 1 for c in total)
    return [int(c) for c in total]


def count_vector(counts):
    return trim(counts)


# -- counting ---------------------------------------------------------------------------

def _adj(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def proper_colourings(n, edges, k):
    return sum(
        1 for col in itertools.product(range(k), repeat=n) if all(col[u] != col[v] for u, v in edges)
    )


def chromatic(n, edges):
    return lagrange([(k, proper_colourings(n, edges, k)) for k in range(n + 1)])


def independence(n, edges):
    adj = _adj(n, edges)
    counts = [0] * (n + 1)
    for r in range(n + 1):
        for S in itertools.combinations(range(n), r):
            if all(v not in adj[u] for u, v in itertools.combinations(S, 2)):
                counts[r] += 1
    return trim(counts)


def dominating(n, edges):
    adj = _adj(n, edges)
    counts = [0] * (n + 1)
    for r in range(n + 1):
        for S in itertools.combinations(range(n), r):
            covered = set(S).union(*[adj[v] for v in S]) if S else set()
            if len(covered) == n:
                counts[r] += 1
    return trim(counts)


def matching_counts(n, edges):
    counts = [0] * (n // 2 + 1)
    for r in range(len(counts)):
        for M in itertools.combinations(edges, r):
            if len({v for e in M for v in e}) == 2 * r:
                counts[r] += 1
    return trim(counts)


def components(n, edges):
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return nx.number_connected_components(h)


def spanning_trees(n, edges):
    if n == 0:
        return 1
    return sum(1 for T in itertools.combinations(edges, n - 1) if components(n, T) == 1)


def tutte(n, edges):
    """Subset expansion sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)) as {(i,j): c}."""
    rE = n - components(n, edges)
    acc: dict[tuple[int, int], int] = {}
    for r in range(len(edges) + 1):
        for A in itertools.combinations(edges, r):
            rA = n - components(n, A)
            a, b = rE - rA, r - rA
            # expand (x-1)^a (y-1)^b
            for i in range(a + 1):
                for j in range(b + 1):
                    c = _binom(a, i) * _binom(b, j) * (-1) ** (a - i + b - j)
                    acc[(i, j)] = acc.get((i, j), 0) + c
    return {k: v for k, v in acc.items() if v}


def _binom(a, b):
    from math import comb

    return comb(a, b)


def leibniz_det(M):
    """Determinant of a matrix of polynomial entries by the permutation sum."""
    n = len(M)
    total = []
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                sign *= (-1) ** (length - 1)
        term = [sign]
        for i in range(n):
            term = pmul(term, M[i][perm[i]])
        total = padd(total, term)
    return total if n else [1]


def char_adjacency(n, edges):
    adj = _adj(n, edges)
    M = [[[0, 1] if i == j else ([-1] if j in adj[i] else []) for j in range(n)] for i in range(n)]
    return leibniz_det(M)


def char_laplacian(n, edges):
    adj = _adj(n, edges)
    M = [[[-len(adj[i]), 1] if i == j else ([1] if j in adj[i] else []) for j in range(n)] for i in range(n)]
    return leibniz_det(M)


def mcp_colourings(n, edges, k):
    """Edge k-colourings where every vertex pair is joined by a monochromatic path."""
    count = 0
    for cols in itertools.product(range(k), repeat=len(edges)):
        reach = [{v} for v in range(n)]
        for c in set(cols):
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(e for e, x in zip(edges, cols) if x == c)
            for comp in nx.connected_components(h):
                for v in comp:
                    reach[v] |= comp
        if all(len(r) == n for r in reach):
            count += 1
    return count


def harary_colourings(n, edges, k, member):
    """Vertex k-colourings whose nonempty colour classes induce graphs
    accepted by ``member(vertices, induced_edges)``."""
    count = 0
    for col in itertools.product(range(k), repeat=n):
        ok = True
        for c in set(col):
            S = [v for v in range(n) if col[v] == c]
            idx = {v: i for i, v in enumerate(S)}
            sub = [(idx[u], idx[v]) for u, v in edges if u in idx and v in idx]
            if not member(len(S), sub):
                ok = False
                break
        count += ok
    return count


def is_connected(n, edges):
    return n > 0 and components(n, edges) == 1


# -- numeric root oracle --------------------------------------------------------------

def random_integer_polys(count: int, seed: int = 0, max_deg: int = 6):
    """Ascending integer coefficient lists with simple roots, none on the
    unit circle or at +-1.  Half are built from chosen roots (many inside
    the disk), half have random coefficients."""
    import numpy as np

    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        deg = int(rng.integers(1, max_deg + 1))
        if len(out) % 2 == 0:
            p = [1]
            d = 0
            while d < deg:
                q = int(rng.integers(1, 6))
                if deg - d >= 2 and rng.random() < 0.4:
                    # q^2 X^2 - 2aq X + (a^2 + b^2), roots (a +- bi)/q
                    a, b = int(rng.integers(-6, 7)), int(rng.integers(1, 7))
                    p = pmul(p, [a * a + b * b, -2 * a * q, q * q])
                    d += 2
                else:
                    a = int(rng.integers(-7, 8))
                    p = pmul(p, [-a, q])
                    d += 1
        else:
            p = [int(c) for c in rng.integers(-9, 10, size=deg + 1)]
            if p[-1] == 0:
                p[-1] = 1
        roots = np.roots(p[::-1])
        if len(roots) == 0:
            continue
        if np.min(np.abs(np.abs(roots) - 1)) < 1e-6:
            continue
        if len(roots) > 1 and min(abs(x - y) for x, y in itertools.combinations(roots, 2)) < 1e-4:
            continue
        out.append(trim(p))
    return out


def disk_oracle(coeffs) -> bool:
    import numpy as np

    return bool(np.all(np.abs(np.roots(coeffs[::-1])) < 1))


def real_roots_in(coeffs, lo, hi) -> int:
    import numpy as np

    roots = np.roots(coeffs[::-1])
    real = [r.real for r in roots if abs(r.imag) < 1e-7]
    return sum(1 for r in real if lo < r <= hi)
