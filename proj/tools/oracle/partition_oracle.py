#!/usr/bin/env python3
"""Independent reference for the hash partitioners, used to freeze golden files.

Python integers are arbitrary precision, so every step is reduced mod 2**64
explicitly. Regenerate with:

    python3 tools/oracle/partition_oracle.py tests/data
"""
import random
import sys
from pathlib import Path

M = 1 << 64


def mix64(x):
    z = (x + 0x9E3779B97F4A7C15) % M
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) % M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) % M
    return z ^ (z >> 31)


def pair_hash(a, b):
    return mix64(mix64(a) ^ ((mix64(b) * 0xFF51AFD7ED558CCD) % M))


def grid_side(n):
    q = 1
    while q * q < n:
        q += 1
    return q


def partition(strategy, u, v, n):
    if strategy == "RVC":
        return pair_hash(u, v) % n
    if strategy == "1D":
        return mix64(u) % n
    if strategy == "2D":
        q = grid_side(n)
        return ((mix64(u) % q) * q + mix64(v) % q) % n
    if strategy == "CRVC":
        return pair_hash(min(u, v), max(u, v)) % n
    if strategy == "SC":
        return u % n
    if strategy == "DC":
        return v % n
    raise ValueError(strategy)


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20180301)
    # Mix small ids with full-width 64-bit ids so high bits are exercised.
    pool = [rng.randrange(0, 400) for _ in range(300)] + [rng.randrange(0, M) for _ in range(100)]
    edges = [(rng.choice(pool), rng.choice(pool)) for _ in range(1000)]
    with open(out / "hash_graph_1000.txt", "w", newline="\n") as f:
        f.write("# 1000-edge fixture for cross-implementation partition checks\n")
        for u, v in edges:
            f.write(f"{u}\t{v}\n")
    for n in (7, 16):
        for s in ("RVC", "1D", "2D", "CRVC", "SC", "DC"):
            with open(out / f"golden_{s}_{n}.csv", "w", newline="\n") as f:
                f.write("edge_index,src,dst,partition\n")
                for i, (u, v) in enumerate(edges):
                    f.write(f"{i},{u},{v},{partition(s, u, v, n)}\n")
    print(f"mix64(0) = {mix64(0):#018x}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
