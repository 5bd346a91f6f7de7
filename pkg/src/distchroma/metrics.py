"""Structural invariants and distance powers of graphs.

All functions are pure and operate on immutable Graph values, so corpus
runners may evaluate them concurrently. Infinite girth/diameter are
modeled as ``math.inf``, never as an integer sentinel.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, _iter_bits

INFINITE = math.inf


class CliqueCapError(ValueError):
    """Exact clique search refused: graph larger than the configured cap."""


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Distances from ``source``; unreachable vertices get ``INFINITE``."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist: list[int | float] = [INFINITE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= g.bits[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for v in _iter_bits(frontier):
            dist[v] = d
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return sum(1 for d in bfs_distances(g, 0) if d != INFINITE) == g.n


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in _iter_bits(g.bits[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class PowerGraph:
    """The distance-<= gamma adjacency over the vertices of ``base``."""

    base: Graph
    gamma: int
    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n


def power_graph(g: Graph, gamma: int) -> PowerGraph:
    """Graph whose edges join base vertices at distance in [1, gamma]."""
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    bits = []
    for v in range(g.n):
        seen = 1 << v
        frontier = 1 << v
        for _ in range(gamma):
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= g.bits[u]
            frontier = nxt & ~seen
            seen |= frontier
        bits.append(seen & ~(1 << v))
    return PowerGraph(g, gamma, Graph(g.n, tuple(bits)))


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, INFINITE for forests.

    BFS from every root; a cross edge (u,w) seen at depths d(u), d(w)
    witnesses a closed walk of length d(u)+d(w)+1 through the root, and the
    minimum over all roots is exactly the girth.
    """
    best: int | float = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= best:
                break
            for u in _iter_bits(g.bits[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    cand = dist[v] + dist[u] + 1
                    if cand < best:
                        best = cand
    return best


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of one shortest cycle in order, or None for forests.

    A BFS cross edge whose depth sum plus one equals the girth has paths
    meeting only at the root, so stitching the two tree paths and the cross
    edge yields a simple cycle of girth length. Deterministic: first hit in
    ascending root and neighbor order.
    """
    target = girth(g)
    if target == INFINITE:
        return None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= target:
                break
            for u in _iter_bits(g.bits[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v] and dist[v] + dist[u] + 1 == target:
                    left = []
                    a = v
                    while a != -1:
                        left.append(a)
                        a = parent[a]
                    right = []
                    b = u
                    while b != -1:
                        right.append(b)
                        b = parent[b]
                    if set(left) & set(right) != {root}:
                        continue
                    return left[::-1] + right[:-1]
    return None


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; INFINITE when disconnected."""
    if g.n == 0:
        return 0
    best: int | float = 0
    for v in range(g.n):
        for d in bfs_distances(g, v):
            if d > best:
                best = d
        if best == INFINITE:
            break
    return best


def two_degree_profile(g: Graph) -> list[int]:
    """Per-vertex sum of neighbor degrees."""
    deg = g.degrees()
    return [sum(deg[u] for u in _iter_bits(g.bits[v])) for v in range(g.n)]


def max_power_degree(delta: int, gamma: int) -> int:
    """Largest possible degree of the gamma-th power of a connected graph
    with maximum degree ``delta`` >= 3: delta * ((delta-1)^gamma - 1) / (delta-2).

    The division is exact; everything is integer arithmetic.
    """
    if delta < 3:
        raise ValueError(f"requires maximum degree >= 3, got {delta}")
    if gamma < 2:
        raise ValueError(f"requires gamma >= 2, got {gamma}")
    num = delta * ((delta - 1) ** gamma - 1)
    assert num % (delta - 2) == 0
    return num // (delta - 2)


# ---------------------------------------------------------------------------
# vertex connectivity: unit-capacity max flow on the vertex-split digraph


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths (s,t non-adjacent)."""
    # node 2v = v_in, 2v+1 = v_out; arc capacities are 1 everywhere.
    nn = 2 * g.n
    cap: list[dict[int, int]] = [dict() for _ in range(nn)]

    def add(a: int, b: int):
        cap[a][b] = cap[a].get(b, 0) + 1
        cap[b].setdefault(a, 0)

    for v in range(g.n):
        if v != s and v != t:
            add(2 * v, 2 * v + 1)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v)
        add(2 * v + 1, 2 * u)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = [-1] * nn
        prev[src] = src
        queue = deque([src])
        while queue and prev[sink] < 0:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and prev[b] < 0:
                    prev[b] = a
                    queue.append(b)
        if prev[sink] < 0:
            return flow
        b = sink
        while b != src:
            a = prev[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertices whose removal disconnects g or leaves one vertex.

    Complete graphs return n-1 by convention; disconnected graphs return 0.
    Scans source vertices 0..k+1 (current best k), which is enough because
    some minimum cut misses at least one of the first k+1 vertices.
    """
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    best = g.n - 1
    v = 0
    while v <= best and v < g.n:
        others = ~g.bits[v] & ((1 << g.n) - 1) & ~(1 << v)
        for u in _iter_bits(others):
            k = _local_connectivity(g, v, u)
            if k < best:
                best = k
        v += 1
    return best


# ---------------------------------------------------------------------------
# exact maximum clique (branch and bound with greedy coloring bound)


def max_clique(g: Graph, cap: int = 200) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique size and one witness clique."""
    if g.n > cap:
        raise CliqueCapError(f"clique search capped at n={cap}, got {g.n}")
    if g.n == 0:
        return 0, ()
    best_size = 0
    best: tuple[int, ...] = ()

    def color_sort(P: int) -> list[tuple[int, int]]:
        # greedy color classes; returns (vertex, class index) in class order
        out = []
        k = 0
        rest = P
        while rest:
            k += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                out.append((v, k))
                avail &= ~g.bits[v] & ~(1 << v)
                rest &= ~(1 << v)
        return out

    def expand(R: list[int], P: int):
        nonlocal best_size, best
        order = color_sort(P)
        for v, bound in reversed(order):
            if len(R) + bound <= best_size:
                return
            R.append(v)
            P2 = P & g.bits[v]
            if P2:
                expand(R, P2)
            elif len(R) > best_size:
                best_size = len(R)
                best = tuple(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return best_size, tuple(sorted(best))


def clique_number(g: Graph, cap: int = 200) -> int:
    return max_clique(g, cap)[0]


# ---------------------------------------------------------------------------
# invariant report


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    max_degree: int
    min_degree: int
    girth: int | float
    diameter: int | float
    connectivity: int
    is_connected: bool
    is_regular: bool
    is_bipartite: bool
    two_degree_regular: bool

    def to_json_dict(self) -> dict:
        def enc(x):
            return None if x == INFINITE else x
        return {
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "girth": enc(self.girth),
            "diameter": enc(self.diameter),
            "connectivity": self.connectivity,
            "is_connected": self.is_connected,
            "is_regular": self.is_regular,
            "is_bipartite": self.is_bipartite,
            "two_degree_regular": self.two_degree_regular,
        }


def invariants(g: Graph) -> InvariantReport:
    degs = g.degrees()
    dmax = max(degs, default=0)
    dmin = min(degs, default=0)
    profile = two_degree_profile(g)
    return InvariantReport(
        n=g.n,
        m=g.m,
        max_degree=dmax,
        min_degree=dmin,
        girth=girth(g),
        diameter=diameter(g),
        connectivity=vertex_connectivity(g),
        is_connected=is_connected(g),
        is_regular=dmax == dmin,
        is_bipartite=is_bipartite(g),
        two_degree_regular=len(set(profile)) <= 1,
    )
