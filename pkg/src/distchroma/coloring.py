"""Exact and constructive distance coloring.

The exact solver iterates k upward from the clique number, proving each
smaller palette infeasible with a DSATUR-ordered backtracking search, so a
returned value is certified minimal. The constructive side implements the
save-a-color machinery: palette-limited greedy completion driven by vertex
orders of decreasing distance from a seed edge, with per-vertex excess
bookkeeping.

excess(v) = 1 + |colors available at v| - |uncolored neighbors of v in the
target graph|. Under any partial coloring with M-1 colors (M = largest
possible power-graph degree) every vertex has excess >= 0, which is what
makes the greedy completion work.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, _iter_bits
from .metrics import (
    PowerGraph,
    bfs_distances,
    girth,
    is_connected,
    max_clique,
    max_power_degree,
    power_graph,
    shortest_cycle,
    vertex_connectivity,
)

DEFAULT_EXACT_CAP = 64


class SolverCapError(ValueError):
    """Input larger than the exact-search cap."""


class SolverBudgetError(RuntimeError):
    """Node or wall-clock budget exhausted; distinct from infeasibility."""

    def __init__(self, kind: str, detail: str):
        super().__init__(f"{kind} budget exhausted: {detail}")
        self.kind = kind


@dataclass(frozen=True)
class Coloring:
    """Proper coloring with colors 0..k-1, each used at least once."""

    assignment: tuple[int, ...]
    k: int

    def proper_on(self, g: Graph) -> bool:
        return all(self.assignment[u] != self.assignment[v] for u, v in g.edges)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "assignment": list(self.assignment)}


def normalize_coloring(assignment: Sequence[int]) -> Coloring:
    """Relabel colors by first occurrence; deterministic and gap-free."""
    relabel: dict[int, int] = {}
    out = []
    for c in assignment:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return Coloring(tuple(out), len(relabel))


def dsatur_upper_bound(g: Graph) -> Coloring:
    """Greedy DSATUR coloring; always succeeds, gives the search its start."""
    n = g.n
    colors = [-1] * n
    sat = [0] * n
    degs = g.degrees()
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (sat[u].bit_count(), degs[u], -u),
        )
        c = 0
        while (sat[v] >> c) & 1:
            c += 1
        colors[v] = c
        for u in _iter_bits(g.bits[v]):
            sat[u] |= 1 << c
    return normalize_coloring(colors)


def _solve_k(
    g: Graph,
    k: int,
    node_budget: int | None,
    deadline: float | None,
) -> list[int] | None:
    """Find a proper k-coloring or prove none exists.

    DSATUR vertex selection with first-occurrence color symmetry breaking:
    at most one fresh color index may be opened per decision.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    cnt = [[0] * k for _ in range(n)]  # colored-neighbor count per color
    sat = [0] * n  # bitmask of colors with cnt > 0
    degs = g.degrees()
    nodes = 0

    def pick() -> int:
        best, key = -1, None
        for u in range(n):
            if colors[u] < 0:
                cand = (sat[u].bit_count(), degs[u], -u)
                if key is None or cand > key:
                    best, key = u, cand
        return best

    def rec(colored: int, used: int) -> bool:
        nonlocal nodes
        if colored == n:
            return True
        v = pick()
        limit = min(k, used + 1)
        allowed = ~sat[v] & ((1 << limit) - 1)
        while allowed:
            low = allowed & -allowed
            c = low.bit_length() - 1
            allowed ^= low
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise SolverBudgetError("nodes", f"over {node_budget} decisions")
            if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
                raise SolverBudgetError("time", "wall-clock limit hit")
            colors[v] = c
            for u in _iter_bits(g.bits[v]):
                if cnt[u][c] == 0:
                    sat[u] |= 1 << c
                cnt[u][c] += 1
            if rec(colored + 1, max(used, c + 1)):
                return True
            for u in _iter_bits(g.bits[v]):
                cnt[u][c] -= 1
                if cnt[u][c] == 0:
                    sat[u] &= ~(1 << c)
            colors[v] = -1
        return False

    return list(colors) if rec(0, 0) else None


def chromatic_number(
    g: Graph,
    *,
    cap: int = DEFAULT_EXACT_CAP,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness.

    Minimality is certified: either k equals the clique lower bound or the
    (k-1)-palette search returned infeasible.
    """
    if g.n > cap:
        raise SolverCapError(f"exact solver capped at n={cap}, got n={g.n}")
    if g.n == 0:
        return 0, Coloring((), 0)
    deadline = time.monotonic() + time_budget if time_budget is not None else None
    lb, _ = max_clique(g, cap=max(cap, g.n))
    witness = dsatur_upper_bound(g)
    if witness.k == lb:
        return lb, witness
    for k in range(lb, witness.k):
        found = _solve_k(g, k, node_budget, deadline)
        if found is not None:
            result = normalize_coloring(found)
            assert result.proper_on(g)
            return k, result
    assert witness.proper_on(g)
    return witness.k, witness


def distance_chromatic_number(
    g: Graph,
    gamma: int,
    *,
    cap: int = DEFAULT_EXACT_CAP,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> tuple[int, Coloring]:
    """Chromatic number of the gamma-th power of a connected graph."""
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    if not is_connected(g):
        raise ValueError("distance chromatic number requires a connected graph")
    if g.n > cap:
        raise SolverCapError(f"exact solver capped at n={cap}, got n={g.n}")
    pg = power_graph(g, gamma)
    return chromatic_number(
        pg.graph, cap=cap, node_budget=node_budget, time_budget=time_budget
    )


def path_distance_chromatic(n: int, gamma: int) -> int:
    """Distance chromatic number of the path on n vertices: min(n, gamma+1)."""
    if n < 1 or gamma < 1:
        raise ValueError("need n >= 1 and gamma >= 1")
    return min(n, gamma + 1)


def cycle_distance_chromatic(n: int, gamma: int) -> int:
    """Distance chromatic number of the cycle on n vertices.

    gamma+1 when (gamma+1) divides n; otherwise the least i+1 >= gamma+2
    with n mod i <= n/i. The comparison is done as n mod i <= n // i: the
    left side is an integer, so thresholding against the rational n/i and
    against floor(n/i) agree. For n > gamma the scan stops by i = n at the
    latest (n mod n = 0); for n <= gamma the scan range is empty, but there
    the power is complete, so the value is n outright.
    """
    if n < 3 or gamma < 1:
        raise ValueError("need n >= 3 and gamma >= 1")
    if n <= gamma:
        return n
    if n % (gamma + 1) == 0:
        return gamma + 1
    i = gamma + 1
    while n % i > n // i:
        i += 1
    return i + 1


# ---------------------------------------------------------------------------
# palette-limited partial colorings


class PartialColoring:
    """Partial proper coloring of a power graph with a fixed palette.

    Tracks, incrementally: per-vertex counts of colored neighbors per color
    and the number of uncolored neighbors. Owned by a single solver run;
    not safe to share while mutating.
    """

    def __init__(self, target: PowerGraph, palette_size: int):
        if palette_size < 1:
            raise ValueError("palette_size must be >= 1")
        self.target = target
        self.palette_size = palette_size
        n = target.graph.n
        self.assignment: list[int | None] = [None] * n
        self._cnt = [[0] * palette_size for _ in range(n)]
        self.uncolored_neighbors = target.graph.degrees()

    def available(self, v: int) -> set[int]:
        row = self._cnt[v]
        return {c for c in range(self.palette_size) if row[c] == 0}

    def excess(self, v: int) -> int:
        return 1 + len(self.available(v)) - self.uncolored_neighbors[v]

    def is_colored(self, v: int) -> bool:
        return self.assignment[v] is not None

    def uncolored_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c is None]

    def assign(self, v: int, c: int) -> None:
        if self.assignment[v] is not None:
            raise ValueError(f"vertex {v} already colored")
        if not 0 <= c < self.palette_size:
            raise ValueError(f"color {c} outside palette of {self.palette_size}")
        if self._cnt[v][c] != 0:
            raise ValueError(f"color {c} conflicts with a neighbor of {v}")
        self.assignment[v] = c
        for u in _iter_bits(self.target.graph.bits[v]):
            self._cnt[u][c] += 1
            self.uncolored_neighbors[u] -= 1

    def unassign(self, v: int) -> None:
        c = self.assignment[v]
        if c is None:
            raise ValueError(f"vertex {v} is not colored")
        self.assignment[v] = None
        for u in _iter_bits(self.target.graph.bits[v]):
            self._cnt[u][c] -= 1
            self.uncolored_neighbors[u] += 1

    def is_complete(self) -> bool:
        return all(c is not None for c in self.assignment)

    def to_coloring(self) -> Coloring:
        if not self.is_complete():
            raise ValueError("coloring is not complete")
        return normalize_coloring([c for c in self.assignment])  # type: ignore[misc]

    def state_digest(self) -> str:
        blob = repr(self.assignment).encode()
        return hashlib.sha1(blob).hexdigest()[:16]


def greedy_coloring(
    pg: PowerGraph, order: Sequence[int], palette_size: int
) -> PartialColoring:
    """Color along ``order`` with the least available color; vertices with
    no available color stay uncolored (data, not an error)."""
    n = pg.graph.n
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    pc = PartialColoring(pg, palette_size)
    for v in order:
        avail = pc.available(v)
        if avail:
            pc.assign(v, min(avail))
    return pc


@dataclass(frozen=True)
class CompletionFailure:
    """Greedy completion got stuck; identifies the blocking vertex."""

    blocking_vertex: int
    stage: str  # "order" | "u" | "v"
    state_digest: str

    def to_json_dict(self) -> dict:
        return {
            "blocking_vertex": self.blocking_vertex,
            "stage": self.stage,
            "state_digest": self.state_digest,
        }


def order_by_distance_from_edge(
    g: Graph, u: int, v: int, within: Iterable[int] | None = None
) -> list[int]:
    """Vertices by decreasing distance from the edge uv, u and v last.

    Distances are measured inside the subgraph induced by ``within`` (all
    vertices when omitted), which must be connected and contain the edge.
    Ties break by ascending vertex index.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    if u not in allowed or v not in allowed:
        raise ValueError("u and v must lie in the subgraph")
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    dist = {u: 0, v: 0}
    frontier = [u, v]
    while frontier:
        nxt = []
        for a in frontier:
            for b in _iter_bits(g.bits[a]):
                if b in allowed and b not in dist:
                    dist[b] = dist[a] + 1
                    nxt.append(b)
        frontier = nxt
    if len(dist) != len(allowed):
        raise ValueError("subgraph is not connected")
    rest = sorted((w for w in allowed if w not in (u, v)), key=lambda w: (-dist[w], w))
    return rest + [u, v]


def complete_partial_coloring(
    pc: PartialColoring, order: Sequence[int], u: int, v: int
) -> Coloring | CompletionFailure:
    """Finish a partial coloring greedily along ``order``.

    ``order`` must list exactly the uncolored vertices with u, v as its last
    two entries, and u, v must be adjacent in the target. If v ends up
    blocked, u is recolored with each alternative and v retried once per
    alternative; anything deeper is left to the exact solver. Precondition
    violations raise ValueError, search dead-ends return CompletionFailure.
    """
    order = list(order)
    if pc.is_colored(u) or pc.is_colored(v):
        raise ValueError("u and v must be uncolored")
    if not pc.target.graph.has_edge(u, v):
        raise ValueError("u and v must be adjacent in the target graph")
    if order[-2:] != [u, v]:
        raise ValueError("order must end with u, v")
    if sorted(order) != sorted(pc.uncolored_vertices()):
        raise ValueError("order must cover exactly the uncolored vertices")

    for w in order[:-2]:
        avail = pc.available(w)
        if not avail:
            return CompletionFailure(w, "order", pc.state_digest())
        pc.assign(w, min(avail))

    avail_u = pc.available(u)
    if not avail_u:
        return CompletionFailure(u, "u", pc.state_digest())
    pc.assign(u, min(avail_u))
    if pc.available(v):
        pc.assign(v, min(pc.available(v)))
        return pc.to_coloring()
    # single-level repair: some other color at u may unblock v
    first = pc.assignment[u]
    pc.unassign(u)
    for alt in sorted(c for c in pc.available(u) if c != first):
        pc.assign(u, alt)
        if pc.available(v):
            pc.assign(v, min(pc.available(v)))
            return pc.to_coloring()
        pc.unassign(u)
    return CompletionFailure(v, "v", pc.state_digest())


# ---------------------------------------------------------------------------
# constructive save-a-color strategies


@dataclass(frozen=True)
class StrategyOutcome:
    """Record of one save-a-color attempt on (g, gamma)."""

    applied: str  # "non-regular" | "short-girth" | "high-girth" | "not-applicable"
    gamma: int
    max_degree: int
    m_value: int
    palette_size: int
    hypotheses: dict
    seeds: dict | None
    coloring: Coloring | None
    failure: CompletionFailure | None
    used_exact_fallback: bool
    attempts: int

    @property
    def succeeded(self) -> bool:
        return self.coloring is not None

    def to_json_dict(self) -> dict:
        return {
            "applied": self.applied,
            "gamma": self.gamma,
            "max_degree": self.max_degree,
            "m_value": self.m_value,
            "palette_size": self.palette_size,
            "hypotheses": self.hypotheses,
            "seeds": self.seeds,
            "colors_used": self.coloring.k if self.coloring else None,
            "failure": self.failure.to_json_dict() if self.failure else None,
            "used_exact_fallback": self.used_exact_fallback,
            "attempts": self.attempts,
        }


def _finish(pc: PartialColoring, order: list[int], u: int, v: int):
    uncolored = set(pc.uncolored_vertices())
    filtered = [w for w in order if w in uncolored]
    return complete_partial_coloring(pc, filtered, u, v)


def save_color_strategy(
    g: Graph,
    gamma: int,
    *,
    exact_fallback: bool = True,
    cap: int = DEFAULT_EXACT_CAP,
) -> StrategyOutcome:
    """Try to color the gamma-th power with M-1 colors, one below the
    largest possible power-graph degree, using whichever structural
    hypothesis holds: non-regularity, a short cycle (girth <= 2*gamma-1),
    or high girth with enough connectivity. Falls back to the exact solver
    (flagged) when the constructive run fails, so callers never depend on
    its completeness.
    """
    if gamma < 2:
        raise ValueError("strategies assume gamma >= 2")
    if not is_connected(g):
        raise ValueError("requires a connected graph")
    delta = g.max_degree()
    if delta < 3:
        raise ValueError("requires maximum degree >= 3")

    m_value = max_power_degree(delta, gamma)
    palette = m_value - 1
    dmin = g.min_degree()
    gir = girth(g)
    hypotheses: dict = {"max_degree": delta, "min_degree": dmin, "girth": gir}

    applied = "not-applicable"
    if dmin < delta:
        applied = "non-regular"
    elif gir != float("inf") and gir <= 2 * gamma - 1:
        applied = "short-girth"
    else:
        need_kappa = 3 if gamma >= 3 else 4
        girth_ok = gir >= 2 * gamma + 2 and (gamma >= 3 or gir > 6)
        if girth_ok:
            kappa = vertex_connectivity(g)
            hypotheses["connectivity"] = kappa
            if kappa >= need_kappa:
                applied = "high-girth"

    if applied == "not-applicable":
        return StrategyOutcome(
            applied, gamma, delta, m_value, palette, hypotheses,
            None, None, None, False, 0,
        )

    pg = power_graph(g, gamma)
    if applied == "non-regular":
        v = min(w for w in range(g.n) if g.degree(w) == dmin)
        u = min(g.neighbors(v))
        pc = PartialColoring(pg, palette)
        order = order_by_distance_from_edge(g, u, v)
        result = _finish(pc, order, u, v)
        seeds = {"u": u, "v": v, "precolored": {}}
        attempts = 1
    elif applied == "short-girth":
        cycle = shortest_cycle(g)
        assert cycle is not None
        pairs = [tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)])))
                 for i in range(len(cycle))]
        u, v = min(pairs)
        pc = PartialColoring(pg, palette)
        order = order_by_distance_from_edge(g, u, v)
        result = _finish(pc, order, u, v)
        seeds = {"u": u, "v": v, "precolored": {}, "cycle": cycle}
        attempts = 1
    else:
        result, seeds, attempts = _high_girth_strategy(g, pg, gamma, palette)

    coloring = result if isinstance(result, Coloring) else None
    failure = result if isinstance(result, CompletionFailure) else None
    used_fallback = False
    if coloring is None and exact_fallback and g.n <= cap:
        k, witness = distance_chromatic_number(g, gamma, cap=cap)
        if k <= palette:
            coloring = witness
            used_fallback = True
    if coloring is not None:
        assert coloring.proper_on(pg.graph)
        assert coloring.k <= palette
    return StrategyOutcome(
        applied, gamma, delta, m_value, palette, hypotheses,
        seeds, coloring, failure, used_fallback, attempts,
    )


def _high_girth_strategy(g: Graph, pg: PowerGraph, gamma: int, palette: int):
    """Seed search along a shortest cycle, first success in lexicographic
    rotation/orientation order."""
    cycle = shortest_cycle(g)
    assert cycle is not None
    glen = len(cycle)
    all_vertices = set(range(g.n))
    attempts = 0
    last_failure: CompletionFailure | None = None
    seeds: dict | None = None

    for start in range(glen):
        for sign in (1, -1):
            def at(off: int) -> int:
                return cycle[(start + sign * off) % glen]

            v1, v2 = at(0), at(1)
            attempts += 1
            if gamma >= 3:
                x1, y1, y2 = at(gamma), at(-1), at(-2)
                removed = {y1, y2}
                cands = _off_cycle_paths(g, v1, set(cycle), gamma - 1)
                dist_y2 = bfs_distances(g, y2)
                cands = [x2 for x2 in cands if dist_y2[x2] > gamma]
                if not cands:
                    continue
                x2 = min(cands)
                precolored = {x1: 0, y1: 0, x2: 1, y2: 1}
            else:
                x1, x2 = at(2), at(-1)
                dx1 = bfs_distances(g, x1)
                dx2 = bfs_distances(g, x2)
                x3 = None
                for w in sorted(set(g.neighbors(v1)) - set(cycle)):
                    for cand in sorted(set(g.neighbors(w)) - set(cycle) - {v1}):
                        if dx1[cand] > 2 and dx2[cand] > 2:
                            x3 = cand
                            break
                    if x3 is not None:
                        break
                if x3 is None:
                    continue
                removed = {x1, x2, x3}
                precolored = {x1: 0, x2: 0, x3: 0}

            pc = PartialColoring(pg, palette)
            try:
                for w, c in sorted(precolored.items()):
                    pc.assign(w, c)
                order = order_by_distance_from_edge(
                    g, v2, v1, within=all_vertices - removed
                )
            except ValueError:
                continue
            result = _finish(pc, order, v2, v1)
            seeds = {
                "u": v2,
                "v": v1,
                "precolored": precolored,
                "cycle": cycle,
            }
            if isinstance(result, Coloring):
                return result, seeds, attempts
            last_failure = result
    return (
        last_failure
        if last_failure is not None
        else CompletionFailure(-1, "order", "seed-search-exhausted"),
        seeds,
        attempts,
    )


def _off_cycle_paths(g: Graph, v1: int, cycle: set[int], depth: int) -> list[int]:
    """Vertices reachable from v1 in exactly ``depth`` steps avoiding the
    cycle (except v1 itself)."""
    banned = cycle - {v1}
    level = {v1}
    seen = {v1} | banned
    for _ in range(depth):
        nxt = set()
        for a in level:
            for b in _iter_bits(g.bits[a]):
                if b not in seen:
                    nxt.add(b)
        seen |= nxt
        level = nxt
        if not level:
            break
    return sorted(level)
