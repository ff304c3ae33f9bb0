"""Search small graphs for cospectral pairs that disagree on other invariants."""

import argparse

from graphpoly import graphs as G
from graphpoly import suites
from graphpoly.polys import canonical_text


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    n = ap.parse_args().n
    f = suites.spectral_search(n)
    if f.tree_pair:
        a, b = f.tree_pair
        print("similar, adjacency-cospectral, different spanning tree counts:")
        for g in (a, b):
            print(f"  {G.encode_graph6(g)}  trees={G.spanning_tree_count(g)}")
        print(f"  shared characteristic polynomial: {canonical_text(f.shared_pa)}")
        print(f"  matches (X-1)(X+1)^2(X^3-X^2-5X+1): {f.matches_printed_factorization}")
    else:
        print("no adjacency-cospectral pair with different tree counts")
    if f.bip_pair:
        a, b = f.bip_pair
        print(f"{f.bip_poly}-cospectral, one bipartite and one not: "
              f"{G.encode_graph6(a)} {G.encode_graph6(b)}")


if __name__ == "__main__":
    main()
