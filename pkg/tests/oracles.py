"""Independent brute-force oracles used to validate the production code.

Everything here favors obviousness over speed: exhaustive search, direct
definitions, no shared machinery with the implementations under test.
"""

from __future__ import annotations

from itertools import combinations

from distchroma.graphs import Graph

INF = float("inf")


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def brute_girth(g: Graph) -> float:
    """Shortest cycle by per-edge BFS: remove an edge, measure the detour."""
    best = INF
    for u, v in g.edges:
        dist = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for a in frontier:
                for b in a_neighbors(g, a):
                    if (a, b) in ((u, v), (v, u)):
                        continue
                    if b not in dist:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def a_neighbors(g: Graph, v: int):
    mask = g.bits[v]
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_components(g: Graph, removed: set[int]) -> int:
    seen: set[int] = set()
    comps = 0
    for s in range(g.n):
        if s in removed or s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            a = stack.pop()
            for b in a_neighbors(g, a):
                if b not in removed and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return comps


def brute_vertex_connectivity(g: Graph) -> int:
    """Least k such that removing some k vertices disconnects the graph or
    empties it to a single vertex; checked by trying every subset."""
    if g.n <= 1:
        return 0
    if brute_components(g, set()) > 1:
        return 0
    for k in range(0, g.n - 1):
        for subset in combinations(range(g.n), k):
            if brute_components(g, set(subset)) > 1:
                return k
    return g.n - 1


def brute_clique_number(g: Graph) -> int:
    best = 1 if g.n else 0
    for k in range(2, g.n + 1):
        found = False
        for subset in combinations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in combinations(subset, 2)):
                found = True
                break
        if found:
            best = k
        else:
            break
    return best


def brute_chromatic_number(g: Graph) -> int:
    """Try k = 1, 2, ... labelings exhaustively in index order; colors are
    canonicalized by first occurrence, which enumerates every proper
    coloring up to color permutation. Meant for n <= 8."""
    n = g.n
    if n == 0:
        return 0
    adj = g.bits
    for k in range(1, n + 1):
        forbidden = [0] * n

        def backtrack(v: int, maxcolor: int) -> bool:
            if v == n:
                return True
            allowed = ~forbidden[v] & ((1 << min(k, maxcolor + 2)) - 1)
            while allowed:
                low = allowed & -allowed
                c = low.bit_length() - 1
                allowed ^= low
                touched = []
                mask = adj[v]
                while mask:
                    lowu = mask & -mask
                    u = lowu.bit_length() - 1
                    mask ^= lowu
                    if u > v:
                        touched.append((u, forbidden[u]))
                        forbidden[u] |= 1 << c
                if backtrack(v + 1, max(maxcolor, c)):
                    return True
                for u, old in touched:
                    forbidden[u] = old
            return False

        if backtrack(0, -1):
            return k
    return n


def is_proper(g: Graph, assignment) -> bool:
    return all(assignment[u] != assignment[v] for u, v in g.edges)
