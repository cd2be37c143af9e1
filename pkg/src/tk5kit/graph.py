"""Core graph type, separations, and the graph6 line format.

Vertices are always the dense ints 0..n-1.  Operations that renumber
(induced subgraphs, contractions) return an explicit remap table instead of
carrying external ids around.  Adjacency is kept as one bitmask per vertex,
which keeps the exhaustive searches elsewhere in the package fast enough to
run at corpus scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError

MAX_VERTICES = 65535  # graphs beyond this are out of scope for the toolkit


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertex ids 0..n-1.

    ``adj[v]`` is the neighbor bitmask of v.  Loops and parallel edges
    cannot be represented, so every constructed Graph is automatically
    simple.  ``labels``, when present, maps each id to an external name and
    plays no role in any algorithm.
    """

    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.adj)
        if n > MAX_VERTICES:
            raise DomainError(f"graph too large: {n} vertices")
        full = (1 << n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise DomainError(f"adjacency of {v} references vertices >= {n}")
            if m >> v & 1:
                raise DomainError(f"loop at vertex {v}")
        for v, m in enumerate(self.adj):
            for w in bits(m):
                if not self.adj[w] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {w}")
        if self.labels is not None and len(self.labels) != n:
            raise DomainError("labels length does not match vertex count")

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, m in enumerate(self.adj):
            for w in bits(m >> (v + 1) << (v + 1)):
                yield (v, w)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(tuple(adj), tuple(labels) if labels is not None else None)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(tuple(adj), self.labels)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(tuple(adj), self.labels)

    # -- connectivity helpers (bitmask) ------------------------------------

    def component_mask(self, start: int, allowed: int | None = None) -> int:
        """Vertex mask of the component of ``start`` inside ``allowed``."""
        if allowed is None:
            allowed = self.vertex_mask
        if not allowed >> start & 1:
            raise DomainError(f"start vertex {start} not in allowed set")
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v] & allowed
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def components(self, allowed: int | None = None) -> list[int]:
        """Component masks inside ``allowed``, ordered by least vertex."""
        if allowed is None:
            allowed = self.vertex_mask
        comps = []
        rest = allowed
        while rest:
            v = (rest & -rest).bit_length() - 1
            c = self.component_mask(v, allowed)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == self.vertex_mask

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# derived graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InducedSubgraph:
    """Induced subgraph together with its id remap (new id -> old id)."""

    graph: Graph
    old_ids: tuple[int, ...]

    def to_old(self, v: int) -> int:
        return self.old_ids[v]

    def to_new(self, old: int) -> int:
        return self.old_ids.index(old)


def induced(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Induced subgraph on ``vertices``; new ids follow ascending old ids."""
    old = tuple(sorted(set(vertices)))
    for v in old:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(old)}
    keep = mask_of(old)
    adj = []
    for v in old:
        m = g.adj[v] & keep
        adj.append(mask_of(pos[w] for w in bits(m)))
    labels = tuple(g.labels[v] for v in old) if g.labels is not None else None
    return InducedSubgraph(Graph(tuple(adj), labels), old)


@dataclass(frozen=True)
class ContractionSpec:
    """Vertex set to be contracted to a single new vertex."""

    target: frozenset[int]

    def __post_init__(self):
        if len(self.target) < 2:
            raise DomainError("contraction target needs at least two vertices")


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    z: int                       # id of the merged vertex in the result
    old_to_new: tuple[int, ...]  # old id -> new id (targets all map to z)


def contract(g: Graph, spec: ContractionSpec | Iterable[int]) -> ContractionResult:
    """Contract a connected vertex set to one vertex ``z`` (placed last).

    The target must induce a connected subgraph; surviving vertices keep
    their relative order and are renumbered densely.
    """
    if not isinstance(spec, ContractionSpec):
        spec = ContractionSpec(frozenset(spec))
    tmask = mask_of(spec.target)
    for v in spec.target:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    start = min(spec.target)
    if g.component_mask(start, tmask) != tmask:
        raise DomainError("contraction target is not connected")
    survivors = [v for v in range(g.n) if not tmask >> v & 1]
    z = len(survivors)
    old_to_new = [0] * g.n
    for i, v in enumerate(survivors):
        old_to_new[v] = i
    for v in spec.target:
        old_to_new[v] = z
    edges = set()
    for u, v in g.edges():
        nu, nv = old_to_new[u], old_to_new[v]
        if nu != nv:
            edges.add((min(nu, nv), max(nu, nv)))
    return ContractionResult(Graph.from_edges(z + 1, sorted(edges)), z, tuple(old_to_new))


def delete_apex_edges(g: Graph, a: int, keep: Iterable[int]) -> Graph:
    """Delete every edge at ``a`` except those to ``keep``.

    ``keep`` must be a subset of N(a); anything else is a malformed call.
    """
    keep = frozenset(keep)
    if not 0 <= a < g.n:
        raise DomainError(f"vertex {a} out of range")
    kmask = mask_of(keep)
    if kmask & ~g.adj[a]:
        extra = sorted(set(keep) - set(bits(g.adj[a])))
        raise DomainError(f"keep set not contained in N({a}): {extra}")
    drop = [(a, v) for v in bits(g.adj[a] & ~kmask)]
    return g.remove_edges(drop)


# ---------------------------------------------------------------------------
# separations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Separation:
    """A separation (G1, G2) recorded by its two side vertex sets.

    side1 | side2 covers the graph, the cut is side1 & side2, no edge joins
    side1-cut to side2-cut, and neither side contains the other.  Edges with
    both ends in the cut are conventionally charged to side 1 when sides are
    materialized as graphs.
    """

    side1: frozenset[int]
    side2: frozenset[int]

    @property
    def cut(self) -> frozenset[int]:
        return self.side1 & self.side2

    @property
    def order(self) -> int:
        return len(self.cut)

    @property
    def interior1(self) -> frozenset[int]:
        return self.side1 - self.side2

    @property
    def interior2(self) -> frozenset[int]:
        return self.side2 - self.side1

    @staticmethod
    def check(g: Graph, side1: Iterable[int], side2: Iterable[int]) -> "Separation":
        s1 = frozenset(side1)
        s2 = frozenset(side2)
        for v in s1 | s2:
            if not 0 <= v < g.n:
                raise DomainError(f"vertex {v} out of range")
        if s1 | s2 != set(range(g.n)):
            raise DomainError("sides do not cover the vertex set")
        if s1 <= s2 or s2 <= s1:
            raise DomainError("one side contains the other")
        m1 = mask_of(s1 - s2)
        m2 = mask_of(s2 - s1)
        for v in bits(m1):
            if g.adj[v] & m2:
                w = next(bits(g.adj[v] & m2))
                raise DomainError(f"edge ({v},{w}) crosses the separation")
        return Separation(s1, s2)

    def validate(self, g: Graph) -> None:
        Separation.check(g, self.side1, self.side2)

    def side_graph(self, g: Graph, which: int) -> InducedSubgraph:
        """Side as a graph.  Cut-internal edges belong to side 1 only."""
        if which == 1:
            return induced(g, self.side1)
        if which == 2:
            sub = induced(g, self.side2)
            cut_new = [sub.to_new(v) for v in self.cut]
            drop = [(u, v) for u, v in itertools.combinations(sorted(cut_new), 2)
                    if sub.graph.has_edge(u, v)]
            return InducedSubgraph(sub.graph.remove_edges(drop), sub.old_ids)
        raise DomainError("side index must be 1 or 2")


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<')."""
    if isinstance(line, str):
        data = line.strip().encode("ascii", errors="strict")
    else:
        data = line.strip()
    base = 0
    if data.startswith(b">>graph6<<"):
        base = 10
        data = data[10:]
    if not data:
        raise ParseError("empty graph6 line", base)
    pos = 0
    if data[0] == 126:  # '~' long-form size
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", base + len(data))
        if data[1] == 126:
            raise ParseError("graph too large for this toolkit", base + 1)
        n = 0
        for i in range(1, 4):
            c = data[i] - 63
            if not 0 <= c < 64:
                raise ParseError(f"invalid graph6 byte {data[i]!r}", base + i)
            n = n << 6 | c
        pos = 4
    else:
        n = data[0] - 63
        if not 0 <= n < 63:
            raise ParseError(f"invalid graph6 size byte {data[0]!r}", base)
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"graph6 body has {len(data) - pos} bytes, expected {nbytes} for n={n}",
            base + pos)
    bitstream = 0
    for i in range(pos, len(data)):
        c = data[i] - 63
        if not 0 <= c < 64:
            raise ParseError(f"invalid graph6 byte {data[i]!r}", base + i)
        bitstream = bitstream << 6 | c
    pad = nbytes * 6 - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", base + len(data) - 1)
    bitstream >>= pad
    adj = [0] * n
    # column-major upper triangle, most significant bit first
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(tuple(adj))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n < 63:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        raise DomainError(f"graph too large for graph6: n={n}")
    bitstream = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        col = g.adj[j] & ((1 << j) - 1)
        for i in range(j):
            bitstream = bitstream << 1 | (col >> i & 1)
    pad = (6 - nbits % 6) % 6
    bitstream <<= pad
    body = bytearray()
    for shift in range(nbits + pad - 6, -1, -6):
        body.append((bitstream >> shift & 63) + 63)
    return (head + bytes(body)).decode("ascii")


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks and '#' comments."""
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield parse_graph6(line)
