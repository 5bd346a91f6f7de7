#!/usr/bin/env python3
"""Generate the exhaustive small-graph corpus: every connected graph on
1..8 vertices, one canonical graph6 line each, written to tests/data/.

Method: vertex augmentation. All graphs on k vertices (up to isomorphism)
are extended by one vertex joined to every subset of the old vertices;
children are deduplicated by an exact canonical form, the minimum of the
edge bitmask over all vertex permutations (vectorized with numpy).

Counts are validated against the published sequences before anything is
written: 1, 2, 4, 11, 34, 156, 1044 graphs on 1..7 vertices and
1, 1, 2, 6, 21, 112, 853, 11117 connected graphs on 1..8.

Usage: python tools/gen_corpus.py [--out tests/data/connected_le8.g6]
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import permutations
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from distchroma.graphs import Graph, encode_graph6  # noqa: E402

ALL_GRAPHS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def pair_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def perm_maps(n: int) -> np.ndarray:
    """For each permutation sigma, target pair index of each source pair."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    maps = np.empty((0, len(pairs)), dtype=np.int64)
    rows = []
    for sigma in permutations(range(n)):
        rows.append([pair_index(sigma[u], sigma[v]) for u, v in pairs])
    return np.array(rows, dtype=np.int64)


def canonical(mask: int, n: int, maps: np.ndarray, weights: np.ndarray) -> int:
    npairs = n * (n - 1) // 2
    bits = np.zeros(npairs, dtype=np.int64)
    for j in range(npairs):
        if (mask >> j) & 1:
            bits[j] = 1
    permuted = np.zeros(maps.shape, dtype=np.int64)
    rows = np.arange(maps.shape[0])[:, None]
    permuted[rows, maps] = bits[None, :]
    return int((permuted @ weights).min())


def connected_mask(mask: int, n: int) -> bool:
    adj = [0] * n
    for v in range(n):
        for u in range(v):
            if (mask >> pair_index(u, v)) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= adj[w]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def mask_to_graph(mask: int, n: int) -> Graph:
    edges = [
        (u, v)
        for v in range(n)
        for u in range(v)
        if (mask >> pair_index(u, v)) & 1
    ]
    bits = [0] * n
    for u, v in edges:
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    return Graph(n, tuple(bits))


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument(
        "--out",
        default=str(Path(__file__).resolve().parent.parent
                    / "tests" / "data" / "connected_le8.g6"),
    )
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    t0 = time.time()
    levels: dict[int, list[int]] = {1: [0]}
    connected_out: dict[int, list[int]] = {1: [0]}

    for n in range(2, args.max_n + 1):
        maps = perm_maps(n)
        npairs = n * (n - 1) // 2
        weights = (1 << np.arange(npairs, dtype=np.int64))
        seen: set[int] = set()
        last_level = n == args.max_n
        for parent in levels[n - 1]:
            for subset in range(1 << (n - 1)):
                mask = parent
                for u in range(n - 1):
                    if (subset >> u) & 1:
                        mask |= 1 << pair_index(u, n - 1)
                if last_level and not connected_mask(mask, n):
                    continue  # only connected graphs are needed at the top
                seen.add(canonical(mask, n, maps, weights))
        if not last_level:
            levels[n] = sorted(seen)
            expected = ALL_GRAPHS[n]
            if len(levels[n]) != expected:
                raise SystemExit(
                    f"graph count mismatch at n={n}: {len(levels[n])} != {expected}")
        conn = sorted(m for m in seen if connected_mask(m, n))
        if len(conn) != CONNECTED[n]:
            raise SystemExit(
                f"connected count mismatch at n={n}: {len(conn)} != {CONNECTED[n]}")
        connected_out[n] = conn
        print(f"n={n}: {len(seen)} classes, {len(conn)} connected "
              f"({time.time() - t0:.1f}s)", flush=True)

    lines = []
    for n in range(1, args.max_n + 1):
        graphs = [mask_to_graph(m, n) for m in connected_out[n]]
        lines.extend(sorted(encode_graph6(g) for g in graphs))
    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} graphs to {out_path} ({time.time() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
