"""Immutable simple graphs, graph6/edge-list codecs, and graph generators.

Vertices are dense 0-based indices. Adjacency is stored as one integer
bitmask per vertex, which keeps neighborhood intersections and frontier
expansions cheap for the solvers built on top.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(ValueError):
    """Malformed edge-list text; ``line`` is the 1-based source line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class GenerationError(ValueError):
    """Invalid generator parameters or exhausted random retries."""


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``bits[v]`` has bit ``u`` set iff ``uv`` is an edge. Instances are
    immutable and safe to share across threads and worker processes.
    """

    n: int
    bits: tuple[int, ...]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(self.n):
            higher = self.bits[v] >> (v + 1)
            for off in _iter_bits(higher):
                out.append((v, v + 1 + off))
        return tuple(out)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_iter_bits(m)) for m in self.bits)

    @property
    def m(self) -> int:
        return sum(b.bit_count() for b in self.bits) // 2

    def degree(self, v: int) -> int:
        return self.bits[v].bit_count()

    def degrees(self) -> list[int]:
        return [b.bit_count() for b in self.bits]

    def neighbors(self, v: int) -> Iterator[int]:
        return _iter_bits(self.bits[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def max_degree(self) -> int:
        return max((b.bit_count() for b in self.bits), default=0)

    def min_degree(self) -> int:
        return min((b.bit_count() for b in self.bits), default=0)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge iterable; duplicates collapse, loops raise."""
    bits = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    return Graph(n, tuple(bits))


def validate(g: Graph) -> None:
    """Check structural invariants; raises AssertionError on violation."""
    assert len(g.bits) == g.n
    for v in range(g.n):
        assert not (g.bits[v] >> v) & 1, f"self-loop at {v}"
        assert g.bits[v] >> g.n == 0, f"adjacency bits beyond n at {v}"
        for u in _iter_bits(g.bits[v]):
            assert (g.bits[u] >> v) & 1, f"asymmetric edge {v},{u}"
    edge_set = {(u, v) for u, v in g.edges}
    rebuilt = from_edges(g.n, edge_set)
    assert rebuilt.bits == g.bits, "edge list and adjacency disagree"


# ---------------------------------------------------------------------------
# graph6 codec (McKay's format): one graph per line, bytes in 63..126.

_G6_HEADER = ">>graph6<<"


def _g6_read_order(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise Graph6Error("empty graph6 payload", pos)
    b0 = data[pos]
    if not 63 <= b0 <= 126:
        raise Graph6Error(f"byte {b0} outside graph6 range 63..126", pos)
    if b0 != 126:
        return b0 - 63, pos + 1
    # extended forms: '~' + 3 bytes, or '~~' + 6 bytes
    if pos + 1 < len(data) and data[pos + 1] == 126:
        start, count = pos + 2, 6
    else:
        start, count = pos + 1, 3
    if start + count > len(data):
        raise Graph6Error("truncated extended length field", len(data))
    n = 0
    for i in range(start, start + count):
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126", i)
        n = (n << 6) | (b - 63)
    return n, start + count


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header allowed)."""
    line = text.rstrip("\r\n")
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    data = line.encode("ascii", errors="replace")
    n, pos = _g6_read_order(data, 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(
            f"payload too short: need {nbytes} adjacency bytes, have {len(data) - pos}",
            len(data),
        )
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing garbage after adjacency bytes", pos + nbytes)
    bits = [0] * n
    bit_index = 0
    for i in range(pos, pos + nbytes):
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126", i)
        group = b - 63
        for k in range(5, -1, -1):
            if bit_index >= nbits:
                if (group >> k) & 1:
                    raise Graph6Error("nonzero padding bits", i)
                continue
            if (group >> k) & 1:
                u, v = _pair_from_index(bit_index)
                bits[u] |= 1 << v
                bits[v] |= 1 << u
            bit_index += 1
    return Graph(n, tuple(bits))


def _pair_from_index(idx: int) -> tuple[int, int]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    v = 1
    while v * (v - 1) // 2 <= idx:
        v += 1
    v -= 1
    return idx - v * (v - 1) // 2, v


def encode_graph6(g: Graph) -> str:
    """Encode canonically: short length form for n <= 62, zero padding."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    else:
        head = [126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)]
    out = bytearray(head)
    group = 0
    nbits = 0
    for v in range(1, n):
        col = g.bits[v]
        for u in range(v):
            group = (group << 1) | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + group)
                group = 0
                nbits = 0
    if nbits:
        out.append(63 + (group << (6 - nbits)))
    return out.decode("ascii")


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a graph6 corpus, one graph per non-blank line."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# plain edge-list format: lines "u v", '#' comments, blank lines ignored.


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines into a Graph with n = 1 + max label."""
    edges = []
    max_label = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two tokens, got {len(parts)}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer token in {parts!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListError("vertex labels must be nonnegative", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
        max_label = max(max_label, u, v)
    return from_edges(max_label + 1, edges)


# ---------------------------------------------------------------------------
# generators


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GenerationError("path needs n >= 1")
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GenerationError("cycle needs n >= 3")
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on n vertices, center 0."""
    if n < 2:
        raise GenerationError("star needs n >= 2")
    return from_edges(n, ((0, i) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GenerationError("complete graph needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GenerationError("complete bipartite needs both sides >= 1")
    return from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    """Petersen graph as the Kneser graph K(5,2): disjoint 2-subsets of {0..4}."""
    pairs = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return from_edges(10, edges)


def hoffman_singleton() -> Graph:
    """Hoffman-Singleton graph via five pentagons and five pentagrams.

    Pentagon vertex (h,i) is joined to pentagram vertex (j, h*j+i mod 5);
    the result is 7-regular on 50 vertices with girth 5 and diameter 2.
    """
    def pent(h, i):
        return 5 * h + i

    def gram(j, i):
        return 25 + 5 * j + i

    edges = []
    for h in range(5):
        for i in range(5):
            edges.append((pent(h, i), pent(h, (i + 1) % 5)))
            edges.append((gram(h, i), gram(h, (i + 2) % 5)))
    for h in range(5):
        for j in range(5):
            for i in range(5):
                edges.append((pent(h, i), gram(j, (h * j + i) % 5)))
    return from_edges(50, edges)


def square_lattice_torus(rows: int, cols: int) -> Graph:
    """4-regular torus grid; both dimensions must be >= 3 to stay simple."""
    if rows < 3 or cols < 3:
        raise GenerationError("torus needs rows >= 3 and cols >= 3")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            edges.append((v, r * cols + (c + 1) % cols))
            edges.append((v, ((r + 1) % rows) * cols + c))
    return from_edges(rows * cols, edges)


def hex_lattice(rows: int, cols: int) -> Graph:
    """Finite honeycomb patch in brick-wall form: vertical rungs at even r+c."""
    if rows < 2 or cols < 2:
        raise GenerationError("hex lattice needs rows >= 2 and cols >= 2")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows and (r + c) % 2 == 0:
                edges.append((v, v + cols))
    return from_edges(rows * cols, edges)


def tutte_coxeter() -> Graph:
    """Tutte-Coxeter graph (cubic, 30 vertices, girth 8) from its LCF code."""
    return lcf_graph(30, (-13, -9, 7, -7, 9, 13), 5)


def lcf_graph(n: int, shifts: tuple[int, ...], repeats: int) -> Graph:
    if len(shifts) * repeats != n:
        raise GenerationError("LCF shifts * repeats must equal n")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append((i, (i + shifts[i % len(shifts)]) % n))
    return from_edges(n, edges)


def random_regular(n: int, d: int, seed: int | None = None, retries: int = 1000) -> Graph:
    """Connected d-regular graph via the pairing model with rejection.

    Deterministic for a fixed seed. Raises GenerationError when the retry
    budget is exhausted, never silently relaxes the constraints.
    """
    if d < 0 or d >= n or (n * d) % 2 != 0:
        raise GenerationError(f"invalid random-regular parameters n={n}, d={d}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(retries):
        rng.shuffle(stubs)
        bits = [0] * n
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (bits[u] >> v) & 1:
                ok = False
                break
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        if not ok:
            continue
        g = Graph(n, tuple(bits))
        if _connected(g):
            return g
    raise GenerationError(
        f"random-regular(n={n}, d={d}) not connected/simple after {retries} retries"
    )


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= g.bits[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# declarative graph classes and the CLI mini-syntax


_TAGS = (
    "Path",
    "Cycle",
    "Star",
    "Complete",
    "Petersen",
    "HoffmanSingleton",
    "CompleteBipartite",
    "SquareLatticeTorus",
    "HexLattice",
    "RandomRegular",
    "FromFile",
)


@dataclass(frozen=True)
class GraphClass:
    """Declarative description of a named or random graph."""

    tag: str
    params: tuple[int, ...] = ()
    seed: int | None = None
    path: str | None = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise GenerationError(f"unknown graph class tag {self.tag!r}")


def generate(spec: GraphClass) -> Graph:
    """Materialize a GraphClass; parameter validation errors raise GenerationError."""
    tag, p = spec.tag, spec.params
    arity = {
        "Path": 1, "Cycle": 1, "Star": 1, "Complete": 1,
        "Petersen": 0, "HoffmanSingleton": 0,
        "CompleteBipartite": 2, "SquareLatticeTorus": 2, "HexLattice": 2,
        "RandomRegular": 2, "FromFile": 0,
    }[tag]
    if len(p) != arity:
        raise GenerationError(f"{tag} expects {arity} parameters, got {len(p)}")
    if tag == "Path":
        return path_graph(p[0])
    if tag == "Cycle":
        return cycle_graph(p[0])
    if tag == "Star":
        return star_graph(p[0])
    if tag == "Complete":
        return complete_graph(p[0])
    if tag == "Petersen":
        return petersen()
    if tag == "HoffmanSingleton":
        return hoffman_singleton()
    if tag == "CompleteBipartite":
        return complete_bipartite(p[0], p[1])
    if tag == "SquareLatticeTorus":
        return square_lattice_torus(p[0], p[1])
    if tag == "HexLattice":
        return hex_lattice(p[0], p[1])
    if tag == "RandomRegular":
        return random_regular(p[0], p[1], seed=spec.seed)
    if tag == "FromFile":
        if not spec.path:
            raise GenerationError("FromFile requires a path")
        return load_graph_file(spec.path)
    raise AssertionError(tag)


def load_graph_file(path: str) -> Graph:
    """Load a single graph: graph6 when the first line decodes, else edge list."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    try:
        return parse_graph6(first)
    except Graph6Error:
        return parse_edge_list(text)


_SPEC_NAMES = {
    "petersen": "Petersen",
    "hoffman-singleton": "HoffmanSingleton",
    "path": "Path",
    "cycle": "Cycle",
    "star": "Star",
    "complete": "Complete",
    "complete-bipartite": "CompleteBipartite",
    "torus": "SquareLatticeTorus",
    "hex": "HexLattice",
    "random-regular": "RandomRegular",
}


def class_from_spec(text: str) -> GraphClass:
    """Parse the CLI mini-syntax, e.g. ``cycle:7`` or ``random-regular:n=20,d=3,seed=42``.

    Anything that is not a recognized name is treated as a file path.
    """
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    if name == "random-regular":
        kv = {}
        for item in arg.split(","):
            key, _, val = item.partition("=")
            if not val:
                raise GenerationError(f"random-regular expects k=v items, got {item!r}")
            kv[key.strip()] = int(val)
        unknown = set(kv) - {"n", "d", "seed"}
        if unknown or "n" not in kv or "d" not in kv:
            raise GenerationError(f"random-regular needs n=,d=[,seed=]; got {sorted(kv)}")
        return GraphClass("RandomRegular", (kv["n"], kv["d"]), seed=kv.get("seed"))
    if name in _SPEC_NAMES:
        params = tuple(int(x) for x in arg.split(",") if x.strip()) if arg else ()
        return GraphClass(_SPEC_NAMES[name], params)
    return GraphClass("FromFile", path=text)


def graph_from_spec(text: str) -> Graph:
    return generate(class_from_spec(text))
