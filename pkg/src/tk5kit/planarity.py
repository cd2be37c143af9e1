"""Planarity testing, combinatorial embeddings, and boundary-constrained
embeddings.

The embedding backend is networkx; everything returned to callers is a
plain frozen dataclass (rotation system, face walks, or a subdivision
witness) so results can be checked and serialized without the backend.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .connectivity import is_kA_connected, two_disjoint_paths
from .errors import DomainError, HypothesisError, ViolationError
from .graph import Graph


@dataclass(frozen=True)
class Embedding:
    """Combinatorial embedding: clockwise neighbour order per vertex.

    ``outer_face`` is the index into ``faces`` of the distinguished outer
    face when one has been fixed (boundary-constrained embeddings); None
    for a free embedding of the sphere.
    """

    rotation: tuple[tuple[int, ...], ...]
    outer_face: int | None = None

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """All facial walks, one per face, as closed vertex walks (the
        first vertex is not repeated at the end).  The walk length equals
        the number of edge incidences of the face, so a bridge appears
        twice in its face's walk."""
        index = [{w: i for i, w in enumerate(nbrs)}
                 for nbrs in self.rotation]
        seen: set[tuple[int, int]] = set()
        out = []
        for u0 in range(self.n):
            for v0 in self.rotation[u0]:
                if (u0, v0) in seen:
                    continue
                walk = []
                u, v = u0, v0
                while (u, v) not in seen:
                    seen.add((u, v))
                    walk.append(u)
                    nbrs = self.rotation[v]
                    u, v = v, nbrs[(index[v][u] - 1) % len(nbrs)]
                out.append(tuple(walk))
        if not out:
            out.append(())
        return tuple(out)

    def faces_at(self, v: int) -> tuple[tuple[int, ...], ...]:
        return tuple(f for f in self.faces if v in f)

    def face_degree(self, face: int) -> int:
        """Edge incidences of a face; a bridge on the face counts twice."""
        return len(self.faces[face])

    @property
    def outer_walk(self) -> tuple[int, ...] | None:
        return None if self.outer_face is None else self.faces[self.outer_face]


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision witnessing nonplanarity.

    kind 'tk5': five branch vertices joined pairwise by ten paths.
    kind 'tk33': six branch vertices in two triples, the nine paths
    joining opposite triples.
    Paths share no vertices except the branch vertices at their ends.
    """

    kind: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PlanarityReport:
    embedding: Embedding | None
    witness: KuratowskiWitness | None

    @property
    def planar(self) -> bool:
        return self.embedding is not None


def check_subdivision_witness(g: Graph, w: KuratowskiWitness) -> str | None:
    """Structural re-check of a subdivision witness against g alone.

    Returns None if valid, else the first failing condition.
    """
    if w.kind == "tk5":
        k, want_pairs = 5, {frozenset(p) for p in
                            itertools.combinations(range(5), 2)}
    elif w.kind == "tk33":
        k, want_pairs = 6, {frozenset((i, j)) for i in range(3)
                            for j in range(3, 6)}
    else:
        return f"unknown kind {w.kind!r}"
    if len(w.branch) != k or len(set(w.branch)) != k:
        return f"expected {k} distinct branch vertices"
    if not all(0 <= v < g.n for v in w.branch):
        return "branch vertex out of range"
    pos = {v: i for i, v in enumerate(w.branch)}
    seen_pairs = set()
    interior_seen: set[int] = set()
    for path in w.paths:
        if len(path) < 2:
            return "path with fewer than two vertices"
        a, b = path[0], path[-1]
        if a not in pos or b not in pos:
            return "path endpoint is not a branch vertex"
        pair = frozenset((pos[a], pos[b]))
        if len(pair) != 2 or pair not in want_pairs:
            return f"unexpected branch pair {sorted((a, b))}"
        if pair in seen_pairs:
            return f"duplicate path for branch pair {sorted((a, b))}"
        seen_pairs.add(pair)
        for u, v in zip(path, path[1:]):
            if not g.has_edge(u, v):
                return f"missing edge {u}-{v}"
        inner = path[1:-1]
        if len(set(inner)) != len(inner):
            return "path revisits a vertex"
        for v in inner:
            if v in pos:
                return "path passes through a branch vertex"
            if v in interior_seen:
                return f"vertex {v} shared by two paths"
        interior_seen.update(inner)
    if seen_pairs != want_pairs:
        return "missing branch pairs"
    return None


def _to_networkx(g: Graph):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def _witness_from_subgraph(K) -> KuratowskiWitness:
    """Split a Kuratowski subgraph into branch vertices and linking paths."""
    degs = {v: d for v, d in K.degree() if d > 0}
    maxdeg = max(degs.values())
    branch = sorted(v for v, d in degs.items() if d >= 3)
    paths = {}
    for b in branch:
        for w in K.neighbors(b):
            path, prev, cur = [b], b, w
            while cur not in branch:
                path.append(cur)
                nxt = next(x for x in K.neighbors(cur) if x != prev)
                prev, cur = cur, nxt
            path.append(cur)
            key = (min(b, cur), max(b, cur))
            if key not in paths or path < list(paths[key]):
                paths[key] = tuple(path)
    if maxdeg == 4:
        kind = "tk5"
        order = tuple(branch)
    else:
        kind = "tk33"
        # split the six branch vertices into the two triples
        first = branch[0]
        adj_pairs = {frozenset(k) for k in paths}
        side_a = [first]
        side_b = [v for v in branch if frozenset((first, v)) in adj_pairs]
        side_a += [v for v in branch if v != first and v not in side_b]
        order = tuple(sorted(side_a)) + tuple(sorted(side_b))
    return KuratowskiWitness(kind, order, tuple(sorted(paths.values())))


def embed_planar(g: Graph) -> PlanarityReport:
    """Planarity test: an embedding, or a subdivision witness of K5/K3,3."""
    ok, cert = nx.check_planarity(_to_networkx(g), counterexample=True)
    if ok:
        data = cert.get_data()
        rotation = tuple(tuple(data.get(v, ())) for v in range(g.n))
        return PlanarityReport(Embedding(rotation), None)
    witness = _witness_from_subgraph(cert)
    err = check_subdivision_witness(g, witness)
    if err is not None:
        raise DomainError(f"backend produced an invalid witness: {err}")
    return PlanarityReport(None, witness)


# ---------------------------------------------------------------------------
# boundary-constrained embeddings
# ---------------------------------------------------------------------------

def _validate_boundary(g: Graph, boundary) -> list[int]:
    bd = list(boundary)
    if len(set(bd)) != len(bd):
        raise DomainError("boundary vertices must be distinct")
    for v in bd:
        if not 0 <= v < g.n:
            raise DomainError(f"boundary vertex {v} out of range")
    return bd


def plane_with_boundary(g: Graph, boundary) -> Embedding | None:
    """An embedding of connected g with all of ``boundary`` on the outer
    face, or None.  Equivalent to planarity of g plus an apex joined to
    the boundary set."""
    bd = _validate_boundary(g, boundary)
    if not g.is_connected():
        raise DomainError("plane_with_boundary requires a connected graph")
    if not bd:
        rep = embed_planar(g)
        if rep.embedding is None:
            return None
        return Embedding(rep.embedding.rotation, outer_face=0)
    apex = g.n
    h = Graph.from_edges(g.n + 1, list(g.edges()) + [(apex, v) for v in bd])
    rep = embed_planar(h)
    if rep.embedding is None:
        return None
    rotation = tuple(tuple(w for w in rep.embedding.rotation[v] if w != apex)
                     for v in range(g.n))
    emb = Embedding(rotation)
    bset = set(bd)
    for i, face in enumerate(emb.faces):
        if bset <= set(face) or (not face and g.n == 1):
            return Embedding(rotation, outer_face=i)
    raise DomainError("no face covers the boundary after apex removal")


def _cyclic_subsequence(walk: tuple[int, ...], order: list[int]) -> bool:
    """True if ``order`` appears as a cyclic subsequence of ``walk`` in
    either orientation."""
    k = len(order)
    if k == 0:
        return True
    for direction in (order, order[::-1]):
        for rot in range(k):
            target = direction[rot:] + direction[:rot]
            # scan the walk twice to allow wrap-around
            idx = 0
            for v in walk + walk:
                if v == target[idx]:
                    idx += 1
                    if idx == k:
                        break
            if idx == k:
                return True
    return False


def plane_in_cyclic_order(g: Graph, order) -> Embedding | None:
    """An embedding of connected g with the given vertices on the outer
    face in exactly the given cyclic order (either orientation), or None.

    Tested by attaching a fresh cycle c_1..c_k with c_i pinned to order[i]
    and an apex on the c_i: that graph is planar precisely when the
    requested embedding exists.
    """
    seq = _validate_boundary(g, order)
    if len(seq) < 3:
        raise DomainError("cyclic order needs at least three vertices")
    if not g.is_connected():
        raise DomainError("plane_in_cyclic_order requires a connected graph")
    k = len(seq)
    apex = g.n + k
    extra = []
    for i, v in enumerate(seq):
        ci = g.n + i
        extra += [(ci, v), (ci, g.n + (i + 1) % k), (apex, ci)]
    h = Graph.from_edges(g.n + k + 1, list(g.edges()) + extra)
    rep = embed_planar(h)
    if rep.embedding is None:
        return None
    rotation = tuple(tuple(w for w in rep.embedding.rotation[v] if w < g.n)
                     for v in range(g.n))
    emb = Embedding(rotation)
    for i, face in enumerate(emb.faces):
        if set(seq) <= set(face) and _cyclic_subsequence(face, seq):
            return Embedding(rotation, outer_face=i)
    raise DomainError("no face realizes the cyclic order after gadget removal")


# ---------------------------------------------------------------------------
# the two-disjoint-paths dichotomy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinkageVerdict:
    """Outcome of the two-disjoint-paths dichotomy.

    kind 'linked': ``paths`` holds an s1..t1 and an s2..t2 path sharing no
    vertices at all.  kind 'planar_in_order': ``embedding`` realizes the
    four terminals on the outer face in the order s1, s2, t1, t2 (which is
    exactly what forbids the crossing linkage).  The other field is None.
    """

    kind: str
    paths: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    embedding: Embedding | None = None


def two_linkage(g: Graph, s1: int, s2: int, t1: int, t2: int) -> LinkageVerdict:
    """Decide between disjoint s1-t1 / s2-t2 paths and planarity with the
    terminals outer in order s1, s2, t1, t2.

    For graphs in which every cut of fewer than four vertices leaves only
    components meeting the terminal set, exactly one alternative holds;
    that hypothesis is checked and a failure is reported with its witness
    cut.
    """
    terminals = (s1, s2, t1, t2)
    if len(set(terminals)) != 4:
        raise DomainError("two_linkage requires four distinct terminals")
    for v in terminals:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    report = is_kA_connected(g, 4, terminals)
    if not report:
        raise HypothesisError(
            "(4, {s1,s2,t1,t2})-connected",
            f"cut {report.cut} strands {report.stranded}",
            witness=report.cut)
    pair = two_disjoint_paths(g, s1, t1, s2, t2)
    if pair is not None:
        return LinkageVerdict("linked", paths=pair)
    emb = plane_in_cyclic_order(g, [s1, s2, t1, t2])
    if emb is None:
        raise ViolationError(
            "two-linkage dichotomy",
            "neither disjoint paths nor an outer-face embedding in "
            f"terminal order exists for terminals {terminals}")
    return LinkageVerdict("planar_in_order", embedding=emb)


def cofacial_cycle(emb: Embedding, w: int) -> tuple[int, ...] | None:
    """The cycle induced by all vertices sharing a face with interior
    vertex w, or None when those vertices do not induce a cycle.

    The cycle is reported as a vertex tuple starting at its smallest
    vertex, in the orientation whose second vertex is smaller.
    """
    if not 0 <= w < emb.n:
        raise DomainError(f"vertex {w} out of range")
    if emb.outer_face is not None and w in emb.outer_walk:
        raise DomainError("cofacial_cycle requires an interior vertex")
    around = {v for face in emb.faces_at(w) for v in face} - {w}
    if len(around) < 3:
        return None
    nbrs = {v: sorted(set(emb.rotation[v]) & around) for v in around}
    if any(len(ns) != 2 for ns in nbrs.values()):
        return None
    start = min(around)
    cycle = [start, nbrs[start][0]]
    while True:
        a, b = cycle[-2], cycle[-1]
        nxt = nbrs[b][1] if nbrs[b][0] == a else nbrs[b][0]
        if nxt == start:
            break
        cycle.append(nxt)
    if len(cycle) != len(around):
        return None
    return tuple(cycle)
