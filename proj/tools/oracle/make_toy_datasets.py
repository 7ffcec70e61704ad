#!/usr/bin/env python3
"""Writes the two small bundled datasets under data/.

toy_social: directed preferential-attachment follow graph with partial
reciprocation. toy_road: symmetric 20x20 grid with a few missing links.

    python3 tools/oracle/make_toy_datasets.py data
"""
import random
import sys
from pathlib import Path


def social(rng, n=600, out_per_vertex=4, reciprocate=0.35):
    edges = set()
    targets = [0, 1]
    edges.add((1, 0))
    for v in range(2, n):
        for _ in range(out_per_vertex):
            u = rng.choice(targets)
            if u != v:
                edges.add((v, u))
                if rng.random() < reciprocate:
                    edges.add((u, v))
            targets.append(u)
        targets.append(v)
    return sorted(edges)


def road(rng, side=20, drop=0.08):
    edges = []
    for r in range(side):
        for c in range(side):
            v = r * side + c
            for w in ((v + 1) if c + 1 < side else None, (v + side) if r + 1 < side else None):
                if w is None or rng.random() < drop:
                    continue
                edges.append((v, w))
                edges.append((w, v))
    return edges


def write(path, header, edges):
    with open(path, "w", newline="\n") as f:
        f.write(f"# {header}\n# FromNodeId\tToNodeId\n")
        for u, v in edges:
            f.write(f"{u}\t{v}\n")


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(469)
    write(out / "toy_social.txt", "Directed toy follow graph", social(rng))
    write(out / "toy_road.txt", "Undirected toy road grid (both directions listed)", road(rng))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data")
