"""Recompute the brute-force reference values and write them to
tests/data/oracle_values.json.

Run from the repository root:  python3 scripts/freeze_oracles.py
"""

from __future__ import annotations

import itertools
import json
import sys
from collections import Counter
from pathlib import Path

import networkx as nx

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles as O  # noqa: E402


def forest_counts(max_n: int) -> list[int]:
    """Forests per vertex count, as multisets of nonisomorphic trees."""
    trees = {1: 1}
    for s in range(2, max_n + 1):
        trees[s] = sum(1 for _ in nx.nonisomorphic_trees(s))
    # Euler transform of the tree counts
    out = [1] + [0] * max_n
    for s in range(1, max_n + 1):
        new = out[:]
        for total in range(max_n + 1):
            if not out[total]:
                continue
            for copies in range(1, (max_n - total) // s + 1):
                # multisets of size `copies` from trees[s] kinds
                new[total + copies * s] += out[total] * _multichoose(trees[s], copies)
        out = new
    return out


def _multichoose(kinds: int, k: int) -> int:
    from math import comb

    return comb(kinds + k - 1, k)


def graph_record(n, edges, full: bool) -> dict:
    rec = {
        "g6": O.to_graph6(n, edges),
        "n": n,
        "m": len(edges),
        "k": O.components(n, edges),
        "edges": [list(e) for e in edges],
        "char_adjacency": O.char_adjacency(n, edges),
        "char_laplacian": O.char_laplacian(n, edges),
        "spanning_trees": O.spanning_trees(n, edges),
    }
    if full:
        rec.update(
            chromatic=O.chromatic(n, edges),
            independence=O.independence(n, edges),
            dominating=O.dominating(n, edges),
            matching_counts=O.matching_counts(n, edges),
            tutte=sorted([i, j, c] for (i, j), c in O.tutte(n, edges).items()),
        )
        if len(edges) <= 5:
            rec["mcp_colourings"] = [O.mcp_colourings(n, edges, k) for k in range(4)]
    return rec


def main() -> None:
    data: dict = {
        "class_counts": O.class_counts(7),
        "forest_counts": forest_counts(8),
        "graphs": [graph_record(n, e, n <= 5) for n, e in O.atlas_graphs(6)],
    }
    conn = []
    for i in range(1, 7):
        edges = list(itertools.combinations(range(i), 2))
        total = O.harary_colourings(i, edges, 2, O.is_connected)
        mono = 2 * O.harary_colourings(i, edges, 1, O.is_connected)
        both = total - mono
        conn.append({"i": i, "connected_two_colourings": total, "using_both_colours": both})
    data["harary_complete_connected"] = conn
    out = ROOT / "tests" / "data" / "oracle_values.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(data, separators=(",", ":")) + "\n")
    sizes = Counter(g["n"] for g in data["graphs"])
    print(f"wrote {out} ({dict(sorted(sizes.items()))})")


if __name__ == "__main__":
    main()
