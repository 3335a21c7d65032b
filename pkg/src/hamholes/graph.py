"""Graph representation, parsing/serialization and named generators.

Vertices are always 0..n-1.  Adjacency is a tuple of per-vertex Python-int
bitmasks, so neighborhood unions, intersections and popcounts are word
operations; every algorithm in the package works directly on these masks.
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterable

from hamholes.errors import GraphFormatError

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph.

    ``adj_bits[v]`` has bit ``u`` set iff ``uv`` is an edge.  Instances are
    never mutated after construction; derived graphs (complement, edge
    removal, unions) are new objects.
    """

    __slots__ = ("n", "m", "_adj", "_deg")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        stride = (n + 7) // 8
        rows = [bytearray(stride) for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (rows[u][v >> 3] >> (v & 7)) & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            rows[u][v >> 3] |= 1 << (v & 7)
            rows[v][u >> 3] |= 1 << (u & 7)
            m += 1
        self.n = n
        self.m = m
        self._adj = tuple(int.from_bytes(bytes(r), "little") for r in rows)
        self._deg = tuple(row.bit_count() for row in self._adj)

    @classmethod
    def _from_rows(cls, n: int, rows: Iterable[int]) -> Graph:
        # Trusted fast path: rows must already be a valid symmetric,
        # loop-free adjacency.  Internal use only.
        g = object.__new__(cls)
        g.n = n
        g._adj = tuple(rows)
        g._deg = tuple(row.bit_count() for row in g._adj)
        g.m = sum(g._deg) // 2
        return g

    @property
    def adj_bits(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (read-only)."""
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: ({u}, {v})")
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._deg[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def edges(self):
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            w = self._adj[u] >> (u + 1)
            base = u + 1
            while w:
                low = w & -w
                yield (u, base + low.bit_length() - 1)
                w ^= low

    def remove_edges(self, pairs: Iterable[Edge]) -> Graph:
        """New graph with the given edges deleted; every pair must be an edge."""
        rows = list(self._adj)
        for u, v in pairs:
            if not (0 <= u < self.n and 0 <= v < self.n) or not (rows[u] >> v) & 1:
                raise ValueError(f"not an edge: ({u}, {v})")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._from_rows(self.n, rows)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph._from_rows(
            self.n, (full & ~row & ~(1 << v) for v, row in enumerate(self._adj))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def min_degree(g: Graph) -> int:
    """Minimum degree; requires at least one vertex."""
    if g.n < 1:
        raise ValueError("min_degree needs a nonempty graph")
    return min(g.degrees)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    out: list[list[int]] = []
    unseen = (1 << g.n) - 1
    adj = g.adj_bits
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            frontier = grow & ~comp
            comp |= frontier
        out.append(list(_bits(comp)))
        unseen &= ~comp
    return out


def external_neighborhood(g: Graph, s: Iterable[int]) -> set[int]:
    """N(S): vertices outside S with at least one neighbor in S."""
    smask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex out of range: {v}")
        smask |= 1 << v
    union = 0
    for v in _bits(smask):
        union |= g.adj_bits[v]
    return set(_bits(union & ~smask))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are relabeled to g.n .. g.n+h.n-1."""
    rows = list(g.adj_bits) + [row << g.n for row in h.adj_bits]
    return Graph._from_rows(g.n + h.n, rows)


# ---------------------------------------------------------------------------
# named generators


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph._from_rows(n, (full & ~(1 << v) for v in range(n)))


def bipartite_graph(a: int, b: int) -> Graph:
    """Complete bipartite graph; part A is 0..a-1, part B is a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("bipartite graph needs a, b >= 1")
    amask = (1 << a) - 1
    bmask = ((1 << b) - 1) << a
    rows = [bmask] * a + [amask] * b
    return Graph._from_rows(a + b, rows)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def fan_example_graph(k: int, l: int) -> Graph:
    """Family separating the hole threshold from connectivity conditions.

    Vertex layout: hub a = 0, clique B = 1..k+l, independent set
    C = k+l+1..2k+l, clique D = 2k+l+1..2k+2l+1.  Edges: a-B, B-B, B-C,
    C-D, D-D.  For l >= 1 and k >= l+3 the graph has minimum degree
    k+l >= max(k+1, 2l+3), which equals its bipartite-hole number, so it is
    Hamiltonian -- yet its connectivity k is strictly below its independence
    number k+1, so connectivity-based Hamiltonicity conditions reject it.
    """
    if l < 1 or k < l + 3:
        raise ValueError("fan example needs l >= 1 and k >= l + 3")
    b = range(1, k + l + 1)
    c = range(k + l + 1, 2 * k + l + 1)
    d = range(2 * k + l + 1, 2 * k + 2 * l + 2)
    edges = [(0, v) for v in b]
    edges += [(u, v) for u in b for v in b if u < v]
    edges += [(u, v) for u in b for v in c]
    edges += [(u, v) for u in c for v in d]
    edges += [(u, v) for u in d for v in d if u < v]
    return Graph(2 * k + 2 * l + 2, edges)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample: one uniform draw per vertex pair in lexicographic
    order, edge present iff the draw is < p.  Same (n, p, seed) always gives
    the same graph."""
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"gnp needs 0 <= p <= 1, got {p}")
    if seed is None:
        raise ValueError("gnp requires a seed")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


_TOKEN = re.compile(r"[(),]|[^\s(),]+")


def generate(spec: str, seed: int | None = None) -> Graph:
    """Build a graph from a family spec string.

    Atomic families: ``complete N``, ``bipartite A B``, ``cycle N``,
    ``path N``, ``petersen``, ``fan-example K L``, ``gnp N P`` (requires
    ``seed``).  Composites: ``complement-of (SPEC)`` and
    ``disjoint-union (SPEC) (SPEC)``.  Every ``gnp`` occurrence uses the
    same ``seed`` argument.
    """
    toks = _TOKEN.findall(spec)
    g, pos = _parse_spec(toks, 0, seed)
    if pos != len(toks):
        raise ValueError(f"trailing tokens in spec: {' '.join(toks[pos:])}")
    return g


def _parse_spec(toks: list[str], pos: int, seed: int | None) -> tuple[Graph, int]:
    def number(kind):
        nonlocal pos
        if pos >= len(toks):
            raise ValueError("spec ended while expecting a number")
        try:
            val = kind(toks[pos])
        except ValueError:
            raise ValueError(f"expected a number, got {toks[pos]!r}") from None
        pos += 1
        return val

    def subspec():
        nonlocal pos
        while pos < len(toks) and toks[pos] == ",":
            pos += 1
        if pos >= len(toks) or toks[pos] != "(":
            raise ValueError("expected '(' introducing a sub-spec")
        pos += 1
        sub, pos = _parse_spec(toks, pos, seed)
        if pos >= len(toks) or toks[pos] != ")":
            raise ValueError("expected ')' closing a sub-spec")
        pos += 1
        return sub

    if pos >= len(toks):
        raise ValueError("empty family spec")
    name = toks[pos]
    pos += 1
    if name == "complete":
        return complete_graph(number(int)), pos
    if name == "bipartite":
        return bipartite_graph(number(int), number(int)), pos
    if name == "cycle":
        return cycle_graph(number(int)), pos
    if name == "path":
        return path_graph(number(int)), pos
    if name == "petersen":
        return petersen_graph(), pos
    if name == "fan-example":
        return fan_example_graph(number(int), number(int)), pos
    if name == "gnp":
        n = number(int)
        p = number(float)
        return gnp_graph(n, p, seed), pos
    if name == "complement-of":
        return subspec().complement(), pos
    if name == "disjoint-union":
        left = subspec()
        right = subspec()
        return disjoint_union(left, right), pos
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header ``n m`` then m lines ``u v``.

    Blank lines and ``#`` comments are skipped.  Errors carry the 1-based
    physical line number of the offending input line.
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError("expected header 'n m'", lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError("expected header 'n m'", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("header counts must be >= 0", lineno)
            header = (n, m)
            continue
        if len(edges) == m:
            raise GraphFormatError(f"more than {m} edge lines", lineno)
        if len(fields) != 2:
            raise GraphFormatError("expected edge 'u v'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError("expected edge 'u v'", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge {u} {v}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing header 'n m'")
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph: header plus lexicographically sorted edges."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)
