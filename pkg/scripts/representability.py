"""Exhaustive search for a graph property C with framework(C) = target on
all graphs up to a vertex bound.

    python3 scripts/representability.py gen_ind independence --max-n 4
"""

import argparse

from graphpoly import equiv, zoo


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("framework", choices=("gen_ind", "gen_span", "harary"))
    ap.add_argument("target")
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--min-n", type=int, default=1)
    args = ap.parse_args()
    res = equiv.search_representation(args.framework, zoo.get_poly(args.target), args.max_n, args.min_n)
    if res.representable:
        print(f"{len(res.solutions)} propert{'y' if len(res.solutions) == 1 else 'ies'} up to n={res.max_n}:")
        for s in res.solutions[:10]:
            print("  members:", " ".join(s) or "(none)")
    else:
        print(f"not representable; every candidate fails by {res.refuted_at}")


if __name__ == "__main__":
    main()
