"""Subdivided-K5 search, the square-and-ring gadget, and wheel
configurations.

A TK5 certificate names five branch vertices and ten paths, one per
branch pair, pairwise disjoint except at shared branch ends; the union is
then a subdivision of K5.  Certificates are validated by an independent
checker that re-examines every edge against the host graph, so a
certificate never has to be trusted.

Three producers live here.  ``find_tk5`` is an exhaustive backtracking
search over candidate branch sets, suitable for small hosts only.
``gadget_tk5`` is constructive: when a graph contains the square-and-ring
gadget as one side of a 5-separation it builds a TK5 through three
prescribed corners of the square, without searching the far side for
anything beyond a fan.  ``find_w4_configuration`` does not build a TK5 at
all; it locates a wheel-like configuration (a hub, a cycle around it, and
spoke paths into a 5-element terminal set) that downstream arguments
consume.

Every search charges its node expansions to a ``StepBudget``; when the
allowance runs out ``BudgetExhausted`` is raised, so a ``None`` answer
always means the search actually finished.  Neighbours are explored in
ascending id order throughout, making all answers deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .connectivity import fan, find_separation, is_k_connected, is_kA_connected
from .errors import BudgetExhausted, DomainError, HypothesisError, ViolationError
from .graph import Graph, bits, delete_apex_edges, induced, mask_of
from .planarity import cofacial_cycle, embed_planar, plane_in_cyclic_order, \
    plane_with_boundary

DEFAULT_BUDGET = 250_000
MAX_SEARCH_N = 16


class StepBudget:
    """Cooperative step counter shared by nested searches.

    Each backtracking loop charges its expansions here and the search
    raises ``BudgetExhausted`` the moment the allowance is gone, instead
    of silently returning a half-explored 'not found'.
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit <= 0:
            raise DomainError("budget limit must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExhausted(self.used)

    @property
    def remaining(self) -> int:
        return max(self.limit - self.used, 0)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tk5Certificate:
    """Five branch vertices plus the ten branch-pair paths.

    ``paths[i]`` joins the i-th pair of ``branch`` in lexicographic pair
    order, oriented from the smaller branch vertex.  ``forbidden_branch``
    records vertices the producer promised not to use as branch vertices;
    ``apex_keep`` (a vertex and the neighbours kept) records that the
    certificate lives in ``delete_apex_edges(g, a, keep)`` rather than in
    the full host.
    """

    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    forbidden_branch: frozenset[int] = frozenset()
    apex_keep: tuple[int, tuple[int, ...]] | None = None

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(sorted(self.branch)))
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))
        object.__setattr__(self, "forbidden_branch",
                           frozenset(self.forbidden_branch))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)


def check_tk5(g: Graph, cert: Tk5Certificate) -> str | None:
    """Re-validate a certificate against g from scratch; None when valid,
    else the first failing condition.

    The check shares no state with the producers: edges are looked up in
    the (possibly apex-restricted) host, path ends are matched against the
    branch pairs, and disjointness is recomputed pair by pair.
    """
    branch = cert.branch
    if len(branch) != 5 or len(set(branch)) != 5:
        return f"branch {branch} is not five distinct vertices"
    for v in branch:
        if not 0 <= v < g.n:
            return f"branch vertex {v} out of range"
    bad = set(cert.forbidden_branch) & set(branch)
    if bad:
        return f"forbidden vertex {min(bad)} used as a branch vertex"
    host = g
    if cert.apex_keep is not None:
        a, keep = cert.apex_keep
        try:
            host = delete_apex_edges(g, a, keep)
        except DomainError as exc:
            return f"apex restriction unusable: {exc}"
    pairs = list(itertools.combinations(branch, 2))
    if len(cert.paths) != 10:
        return f"expected 10 paths, got {len(cert.paths)}"
    bset = set(branch)
    for (s, t), path in zip(pairs, cert.paths):
        if len(path) < 2 or path[0] != s or path[-1] != t:
            return f"path {path} does not join the pair ({s},{t})"
        if len(set(path)) != len(path):
            return f"path for ({s},{t}) revisits a vertex"
        for u, v in zip(path, path[1:]):
            if not host.has_edge(u, v):
                return f"edge {u}-{v} of the ({s},{t}) path is not in the host"
        inner = set(path[1:-1]) & bset
        if inner:
            return f"branch vertex {min(inner)} is interior to the ({s},{t}) path"
    for i, j in itertools.combinations(range(10), 2):
        allowed = set(pairs[i]) & set(pairs[j])
        extra = set(cert.paths[i]) & set(cert.paths[j]) - allowed
        if extra:
            return (f"paths for {pairs[i]} and {pairs[j]} share vertex "
                    f"{min(extra)}")
    return None


def assemble_tk5(g: Graph, parts, branch, forbidden_branch=()) -> Tk5Certificate:
    """Merge path and subgraph parts into a validated certificate.

    Each part contributes edges: a vertex tuple/list is read as a path, a
    Graph contributes all its edges, a PathSystem all its paths' edges.
    Edges absent from g are dropped (parts may be drawn in a supergraph);
    the surviving union must decompose into exactly one path per branch
    pair, otherwise a ``ViolationError`` states which pair is missing or
    doubled, or which vertex carries the wrong degree.
    """
    branch = tuple(sorted(set(branch)))
    if len(branch) != 5:
        raise DomainError(f"need five branch vertices, got {branch}")
    for v in branch:
        if not 0 <= v < g.n:
            raise DomainError(f"branch vertex {v} out of range")
    forb = frozenset(forbidden_branch)
    if forb & set(branch):
        raise DomainError("a forbidden vertex appears in the branch set")

    edges: set[tuple[int, int]] = set()

    def add_path(seq) -> None:
        for u, v in zip(seq, seq[1:]):
            if g.has_edge(u, v):
                edges.add((min(u, v), max(u, v)))

    for part in parts:
        if isinstance(part, Graph):
            for u, v in part.edges():
                if g.has_edge(u, v):
                    edges.add((u, v))
        elif hasattr(part, "paths"):
            for p in part.paths:
                add_path(p)
        elif isinstance(part, (tuple, list)):
            add_path(part)
        else:
            raise DomainError(f"cannot read edges from part {part!r}")

    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for v in nbrs:
        nbrs[v].sort()

    bset = set(branch)
    for b in branch:
        d = len(nbrs.get(b, ()))
        if d != 4:
            raise ViolationError(
                "ten-path assembly",
                f"branch vertex {b} has degree {d} in the union")
    for v, around in nbrs.items():
        if v not in bset and len(around) != 2:
            raise ViolationError(
                "ten-path assembly",
                f"vertex {v} has degree {len(around)} in the union")

    seen: set[tuple[int, int]] = set()
    found: dict[tuple[int, int], tuple[int, ...]] = {}
    for b in branch:
        for w in nbrs[b]:
            if (min(b, w), max(b, w)) in seen:
                continue
            path = [b, w]
            seen.add((min(b, w), max(b, w)))
            while path[-1] not in bset:
                prev, cur = path[-2], path[-1]
                nxt = [x for x in nbrs[cur] if x != prev]
                path.append(nxt[0])
                seen.add((min(cur, nxt[0]), max(cur, nxt[0])))
            end = path[-1]
            if end == b:
                raise ViolationError(
                    "ten-path assembly",
                    f"the union closes a cycle back onto branch vertex {b}")
            key = (min(b, end), max(b, end))
            if key in found:
                raise ViolationError(
                    "ten-path assembly",
                    f"branch pair {key} is joined by two paths")
            found[key] = tuple(path if b < end else path[::-1])
    missing = set(itertools.combinations(branch, 2)) - set(found)
    if missing:
        raise ViolationError(
            "ten-path assembly", f"branch pair {min(missing)} has no path")
    if len(seen) != len(edges):
        loose = min(v for u, v in edges - seen)
        raise ViolationError(
            "ten-path assembly",
            f"the union contains a cycle avoiding the branch set "
            f"(through vertex {loose})")

    cert = Tk5Certificate(
        branch, tuple(found[p] for p in itertools.combinations(branch, 2)),
        forb)
    err = check_tk5(g, cert)
    if err is not None:
        raise ViolationError("assembled certificate validity", err)
    return cert


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

def _paths_between(g: Graph, s: int, t: int, blocked: int, budget: StepBudget):
    """Yield every s-t path whose interior avoids ``blocked``, in
    lexicographic order of the vertex sequence."""

    def walk(v, onpath, path):
        budget.spend()
        for w in g.neighbors(v):
            if w == t:
                yield path + (t,)
            elif not (blocked | onpath) >> w & 1:
                yield from walk(w, onpath | 1 << w, path + (w,))

    yield from walk(s, 1 << s, (s,))


def _link_branch(g: Graph, branch, budget: StepBudget):
    """Ten internally disjoint paths joining all pairs of ``branch``, or
    None; pairs are filled in lexicographic order, lowest path first."""
    pairs = list(itertools.combinations(branch, 2))
    base = mask_of(branch)

    def place(i, used, acc):
        if i == len(pairs):
            return tuple(acc)
        s, t = pairs[i]
        for p in _paths_between(g, s, t, base | used, budget):
            got = place(i + 1, used | mask_of(p[1:-1]), acc + [p])
            if got is not None:
                return got
        return None

    return place(0, 0, [])


def find_tk5(g: Graph, forbidden_branch=(), budget: StepBudget | None = None
             ) -> Tk5Certificate | None:
    """A TK5 certificate whose branch vertices avoid ``forbidden_branch``,
    or None when no such subdivision exists.

    Exhaustive and exact, hence restricted to hosts with at most
    ``MAX_SEARCH_N`` vertices; larger inputs are refused outright rather
    than half-searched.  Planar hosts are dismissed without branch
    enumeration.  A ``BudgetExhausted`` escape means the verdict is
    unknown, never 'none'.
    """
    forb = frozenset(forbidden_branch)
    for v in forb:
        if not 0 <= v < g.n:
            raise DomainError(f"forbidden vertex {v} out of range")
    if g.n > MAX_SEARCH_N:
        raise DomainError(
            f"refusing exhaustive TK5 search on {g.n} > {MAX_SEARCH_N} vertices")
    if budget is None:
        budget = StepBudget()
    if embed_planar(g).planar:
        return None
    cand = [v for v in range(g.n) if v not in forb and g.degree(v) >= 4]
    for branch in itertools.combinations(cand, 5):
        budget.spend(len(branch))
        rest = set(branch)
        if any(fan(g, b, rest - {b}).count < 4 for b in branch):
            continue
        paths = _link_branch(g, branch, budget)
        if paths is not None:
            return Tk5Certificate(branch, paths, forb)
    return None


# ---------------------------------------------------------------------------
# the square-and-ring gadget
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GadgetSpec:
    """Vertex labels of the square-and-ring gadget inside a host graph.

    The gadget has an outer ring a1 b1 a2 b2 a3 b3 a4 b4, an inner square
    b1 b2 b3 b4, and an apex a joined to every b; sixteen edges in all.
    The a-vertices and the apex form the cut towards the rest of the host,
    the b-vertices are private to the gadget.
    """

    a: int
    a_ring: tuple[int, int, int, int]
    b_ring: tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "a_ring", tuple(self.a_ring))
        object.__setattr__(self, "b_ring", tuple(self.b_ring))
        labels = (self.a,) + self.a_ring + self.b_ring
        if len(labels) != 9 or len(set(labels)) != 9:
            raise DomainError("gadget labels must be nine distinct vertices")
        if any(v < 0 for v in labels):
            raise DomainError("gadget labels must be non-negative")

    @property
    def cut(self) -> frozenset[int]:
        return frozenset((self.a,) + self.a_ring)

    @property
    def vertices(self) -> frozenset[int]:
        return self.cut | frozenset(self.b_ring)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(4):
            ai, bi = self.a_ring[i], self.b_ring[i]
            out.append((min(ai, bi), max(ai, bi)))
            aj = self.a_ring[(i + 1) % 4]
            out.append((min(bi, aj), max(bi, aj)))
            bj = self.b_ring[(i + 1) % 4]
            out.append((min(bi, bj), max(bi, bj)))
            out.append((min(self.a, bi), max(self.a, bi)))
        return tuple(sorted(set(out)))

    def ring_neighbors(self, i: int) -> frozenset[int]:
        """The prescribed neighbourhood of ``b_ring[i]`` in any host."""
        return frozenset((self.a, self.a_ring[i], self.a_ring[(i + 1) % 4],
                          self.b_ring[(i + 1) % 4], self.b_ring[(i - 1) % 4]))

    def check_in(self, g: Graph) -> str | None:
        """None when g contains the gadget with the b-vertices private to
        it, else the first discrepancy."""
        for v in self.vertices:
            if v >= g.n:
                return f"gadget vertex {v} out of range"
        for i in range(4):
            bi = self.b_ring[i]
            want = self.ring_neighbors(i)
            got = frozenset(g.neighbors(bi))
            if got != want:
                return (f"square vertex {bi} has neighbours {sorted(got)}, "
                        f"expected {sorted(want)}")
        return None

    def reflected(self) -> "GadgetSpec":
        """The relabelling under the gadget's reflection, which swaps the
        ring ends and fixes the apex and the square's even corners."""
        a1, a2, a3, a4 = self.a_ring
        b1, b2, b3, b4 = self.b_ring
        return GadgetSpec(self.a, (a4, a3, a2, a1), (b3, b2, b1, b4))


@dataclass(frozen=True)
class BuiltGadget:
    graph: Graph
    spec: GadgetSpec


_CUT_KEYS = ("a", "a1", "a2", "a3", "a4")


def build_gadget(attachment: Graph | None = None,
                 cut_map: dict | None = None) -> BuiltGadget:
    """The square-and-ring gadget, bare or glued onto an attachment.

    Bare: nine vertices with apex 0, ring 1..4 and square 5..8.  Glued:
    ``cut_map`` names which attachment vertices play 'a', 'a1'..'a4', and
    the four square vertices are appended after the attachment's; the
    result keeps every attachment edge.
    """
    if attachment is None:
        if cut_map is not None:
            raise DomainError("a cut map needs an attachment to map into")
        spec = GadgetSpec(0, (1, 2, 3, 4), (5, 6, 7, 8))
        return BuiltGadget(Graph.from_edges(9, spec.edges()), spec)
    if cut_map is None:
        raise DomainError("gluing requires a cut map")
    if sorted(cut_map) != sorted(_CUT_KEYS):
        raise DomainError(f"cut map must name exactly {_CUT_KEYS}")
    shared = [cut_map[k] for k in _CUT_KEYS]
    if len(set(shared)) != 5:
        raise DomainError("cut map must name five distinct shared vertices")
    for v in shared:
        if not 0 <= v < attachment.n:
            raise DomainError(f"shared vertex {v} outside the attachment")
    spec = GadgetSpec(shared[0], tuple(shared[1:]),
                      tuple(range(attachment.n, attachment.n + 4)))
    g = Graph.from_edges(attachment.n + 4,
                         list(attachment.edges()) + list(spec.edges()))
    return BuiltGadget(g, spec)


def match_gadget(g: Graph, a_set=None) -> GadgetSpec | None:
    """The labelling under which g *is* the bare gadget, or None.

    With ``a_set`` given, the gadget's cut must additionally equal that
    set.  Only whole-graph matches are reported; gadgets sitting inside a
    larger host are recognised through their separations instead.
    """
    if g.n != 9 or g.m != 16:
        return None
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(g.degree(v), []).append(v)
    if (sorted(by_deg) != [2, 4, 5] or len(by_deg[2]) != 4
            or len(by_deg[4]) != 1 or len(by_deg[5]) != 4):
        return None
    a = by_deg[4][0]
    squares = by_deg[5]
    if set(g.neighbors(a)) != set(squares):
        return None
    b1 = min(squares)
    wings = [x for x in squares if g.has_edge(b1, x)]
    if len(wings) != 2:
        return None
    b2, b4 = min(wings), max(wings)
    b3 = next(x for x in squares if x not in (b1, b2, b4))
    ring = []
    for left, right in ((b4, b1), (b1, b2), (b2, b3), (b3, b4)):
        joint = [x for x in by_deg[2]
                 if g.has_edge(x, left) and g.has_edge(x, right)]
        if len(joint) != 1:
            return None
        ring.append(joint[0])
    spec = GadgetSpec(a, tuple(ring), (b1, b2, b3, b4))
    if spec.check_in(g) is not None or set(spec.edges()) != set(g.edges()):
        return None
    if a_set is not None and frozenset(a_set) != spec.cut:
        return None
    return spec


def _first_path(g: Graph, s: int, t: int, blocked: int) -> tuple[int, ...] | None:
    """Lexicographically first s-t path avoiding ``blocked`` internally."""
    sentinel = StepBudget(1 << 30)
    for p in _paths_between(g, s, t, blocked, sentinel):
        return p
    return None


def gadget_tk5(g: Graph, spec: GadgetSpec, u1: int, u2: int) -> Tk5Certificate:
    """A TK5 through the gadget using only the apex edges towards three
    square corners and the two chosen neighbours.

    The host must be 5-connected, nonplanar, contain the gadget per
    ``spec`` with at least seven vertices outside the square, and u1, u2
    must be apex neighbours other than the first three square corners.
    The certificate lives in ``delete_apex_edges(g, spec.a, {b1, b2, b3,
    u1, u2})``, its branch vertices are the apex, those three corners and
    one of the chosen neighbours.  The construction is case analysis, not
    search: the far side only ever supplies a fan or a single path.
    """
    err = spec.check_in(g)
    if err is not None:
        raise HypothesisError("gadget side", err)
    if g.n - 4 < 7:
        raise HypothesisError(
            "attachment size",
            f"only {g.n - 4} vertices outside the square, need at least 7")
    report = is_k_connected(g, 5)
    if not report.satisfied:
        raise HypothesisError(
            "5-connected", f"cut {sorted(report.cut)} disconnects the host",
            witness=report)
    if embed_planar(g).planar:
        raise HypothesisError("nonplanar", "the host graph is planar")
    b1, b2, b3, b4 = spec.b_ring
    allowed = set(g.neighbors(spec.a)) - {b1, b2, b3}
    for u in (u1, u2):
        if u not in allowed:
            raise DomainError(
                f"vertex {u} is not an apex neighbour outside the first "
                f"three square corners")
    if u1 == u2 == b4:
        raise DomainError(
            "at least one chosen neighbour must differ from the fourth "
            "square corner")
    keep = {b1, b2, b3, u1, u2}
    host = delete_apex_edges(g, spec.a, keep)
    if u1 == b4:
        u1, u2 = u2, u1
    s = spec
    if u1 in (s.a_ring[2], s.a_ring[3]):
        s = s.reflected()
    a = s.a
    a1, a2, a3, a4 = s.a_ring
    b1, b2, b3, b4 = s.b_ring

    side = induced(g, [v for v in range(g.n)
                       if v not in s.b_ring and v != a])
    direct = [(a, x) for x in sorted((b1, b2, b3, u1))] + \
        [(b1, b2), (b2, b3)]
    bridge = (b1, b4, b3)

    if u1 == a1:
        res = fan(side.graph, side.to_new(a1),
                  (side.to_new(a2), side.to_new(a3)))
        if res.count < 2:
            raise ViolationError(
                "two independent ring paths in the attachment",
                f"only {res.count} paths from {a1} towards {a2},{a3} beside "
                f"the apex; blocking cut {sorted(side.to_old(v) for v in res.cut)}")
        by_end = {side.to_old(p[-1]): tuple(side.to_old(v) for v in p)
                  for p in res.paths}
        parts = direct + [(u1, b1), by_end[a2] + (b2,), by_end[a3] + (b3,),
                          bridge]
    elif u1 == a2:
        r = _first_path(side.graph, side.to_new(a2), side.to_new(a3), 0)
        if r is None:
            raise ViolationError(
                "a ring path in the attachment",
                f"no path from {a2} to {a3} beside the apex")
        parts = direct + [(u1, b1), (u1, b2),
                          tuple(side.to_old(v) for v in r) + (b3,), bridge]
    else:
        targets = tuple(side.to_new(x) for x in s.a_ring)
        res = fan(side.graph, side.to_new(u1), targets)
        if res.count < 4:
            raise ViolationError(
                "a four-fan from the chosen neighbour onto the ring",
                f"only {res.count} paths from {u1}; blocking cut "
                f"{sorted(side.to_old(v) for v in res.cut)}")
        by_end = {side.to_old(p[-1]): tuple(side.to_old(v) for v in p)
                  for p in res.paths}
        parts = direct + [by_end[a1] + (b1,), by_end[a2] + (b2,),
                          by_end[a3] + (b3,), bridge]

    cert = assemble_tk5(host, parts, (a, b1, b2, b3, u1))
    cert = replace(cert, apex_keep=(spec.a, tuple(sorted(keep))))
    err = check_tk5(g, cert)
    if err is not None:
        raise ViolationError("gadget certificate validity", err)
    return cert


# ---------------------------------------------------------------------------
# wheel configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class W4Configuration:
    """A hub, a cycle around it, and spoke paths into the terminal set.

    ``variant`` is 'plain' (four spokes, cycle and hub outside the
    terminals), 'apex1' (three spokes in the apex complement) or 'apex2'
    (four spokes that may pass through the apex; the cycle still avoids
    it).  Spokes pairwise share only the hub and each meets the cycle in
    exactly one vertex; in the apex variants a spoke meets the terminal
    set only at its far end.
    """

    variant: str
    hub: int
    cycle: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cycle", tuple(self.cycle))
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))

    def validate(self, g: Graph, a_set, a: int | None = None) -> str | None:
        aset = frozenset(a_set)
        if self.variant not in ("plain", "apex1", "apex2"):
            return f"unknown variant {self.variant!r}"
        if self.variant != "plain":
            if a is None or a not in aset:
                return "apex variants need the apex among the terminals"
        want = 3 if self.variant == "apex1" else 4
        if len(self.paths) != want:
            return f"expected {want} spokes, got {len(self.paths)}"
        if not 0 <= self.hub < g.n or self.hub in aset:
            return f"hub {self.hub} must be a non-terminal vertex"
        cyc = set(self.cycle)
        if len(self.cycle) < 3 or len(cyc) != len(self.cycle):
            return f"cycle {self.cycle} is not a simple cycle"
        if self.hub in cyc:
            return "the hub lies on its own cycle"
        if self.variant == "plain" and cyc & aset:
            return "the cycle touches the terminal set"
        if self.variant != "plain" and a in cyc:
            return "the cycle passes through the apex"
        for u, v in zip(self.cycle, self.cycle[1:] + self.cycle[:1]):
            if not g.has_edge(u, v):
                return f"cycle edge {u}-{v} missing"
        for path in self.paths:
            if len(path) < 2 or path[0] != self.hub:
                return f"spoke {path} does not start at the hub"
            if len(set(path)) != len(path):
                return f"spoke {path} revisits a vertex"
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    return f"spoke edge {u}-{v} missing"
            if self.variant == "apex1" and a in path:
                return "an apex1 spoke passes through the apex"
            end = path[-1]
            if self.variant == "apex1":
                if end not in aset - {a}:
                    return f"spoke ends at {end}, not a terminal beside the apex"
            elif end not in aset:
                return f"spoke ends at {end}, not a terminal"
            if self.variant != "plain" and len(set(path) & aset) != 1:
                return f"spoke {path} meets the terminal set beyond its end"
            hits = set(path) & cyc
            if len(hits) != 1:
                return (f"spoke {path} meets the cycle in {len(hits)} "
                        f"vertices, expected exactly one")
        for p, q in itertools.combinations(self.paths, 2):
            shared = set(p) & set(q)
            if shared != {self.hub}:
                return f"spokes {p} and {q} share {sorted(shared - {self.hub})}"
        return None


def _spoke_systems(g: Graph, hub: int, cycle, anchors, count: int,
                   endpoint_only: bool, budget: StepBudget):
    """Yield systems of ``count`` spokes from ``hub`` into ``anchors``,
    pairwise sharing only the hub, each crossing ``cycle`` exactly once.

    With ``endpoint_only`` a spoke touches the anchor set solely at its
    final vertex.  Systems are produced with first steps in ascending
    order, each spoke lexicographically minimal first.
    """
    cyc = mask_of(cycle)
    amask = mask_of(anchors)

    def grow(path, onpath, hits, used):
        budget.spend()
        v = path[-1]
        for w in g.neighbors(v):
            if w == hub or (used | onpath) >> w & 1:
                continue
            h = hits + (cyc >> w & 1)
            if h > 1:
                continue
            if amask >> w & 1:
                if h == 1:
                    yield path + (w,)
                if endpoint_only:
                    continue
            yield from grow(path + (w,), onpath | 1 << w, h, used)

    def build(idx, used, floor, acc):
        if idx == count:
            yield tuple(acc)
            return
        budget.spend()
        for first in g.neighbors(hub):
            if first <= floor or used >> first & 1:
                continue
            h = cyc >> first & 1
            seed = (hub, first)
            if amask >> first & 1:
                if h == 1:
                    yield from build(idx + 1, used | 1 << first, first,
                                     acc + [seed])
                if endpoint_only:
                    continue
            for p in grow(seed, 1 << first, h, used):
                yield from build(idx + 1, used | mask_of(p[1:]), first,
                                 acc + [p])

    yield from build(0, 0, -1, [])


def _simple_cycles(g: Graph, allowed: int, budget: StepBudget):
    """Yield each simple cycle inside the ``allowed`` mask exactly once,
    as a tuple starting at its smallest vertex."""
    for s in sorted(bits(allowed & g.vertex_mask)):

        def walk(v, onpath, path):
            budget.spend()
            for w in g.neighbors(v):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w > s and allowed >> w & 1 and not onpath >> w & 1:
                    yield from walk(w, onpath | 1 << w, path + [w])

        yield from walk(s, 1 << s, [s])


def _check_five(g: Graph, a_set) -> tuple[int, ...]:
    terms = tuple(a_set)
    if len(terms) != 5 or len(set(terms)) != 5:
        raise DomainError("the terminal set must be five distinct vertices")
    for v in terms:
        if not 0 <= v < g.n:
            raise DomainError(f"terminal {v} out of range")
    return terms


def _require_anchored(g: Graph, a_set) -> None:
    report = is_kA_connected(g, 5, a_set)
    if not report.satisfied:
        raise HypothesisError(
            "(5,A)-connected",
            f"cut {sorted(report.cut)} strands a terminal-free component",
            witness=report)


def _forbid_wide_separation(g: Graph, a_set, name: str) -> None:
    """Raise unless no order-5 separation keeps all terminals on one side
    while the other holds at least seven vertices."""
    try:
        sep = find_separation(g, 5, must_side1=sorted(a_set),
                              minimize="side1")
    except DomainError as exc:
        raise HypothesisError(name, f"not decidable here: {exc}")
    if sep is not None and g.n + sep.order - len(sep.side1) >= 7:
        raise HypothesisError(
            name,
            f"cut {sorted(sep.cut)} leaves {g.n + sep.order - len(sep.side1)} "
            f"vertices opposite the terminals", witness=sep)


def _ring_order_ok(ring, a1, a2, a3, a4, between) -> bool:
    """True when a1, a2, a3, all of ``between``, a4 occur on the cycle
    ``ring`` in this cyclic order (either orientation)."""
    order = list(ring)
    for orient in (order, order[::-1]):
        if a1 not in orient:
            return False
        k = orient.index(a1)
        pos = {v: i for i, v in enumerate(orient[k:] + orient[:k])}
        if any(v not in pos for v in (a2, a3, a4)) or \
                any(v not in pos for v in between):
            continue
        lo = [pos[v] for v in between]
        if pos[a2] < pos[a3] and (not lo or pos[a3] < min(lo)) and \
                (max(lo) < pos[a4] if lo else pos[a3] < pos[a4]):
            return True
    return False


def find_w4_configuration(g: Graph, a_set, variant: str = "plain",
                          a: int | None = None, required_ends=None,
                          budget: StepBudget | None = None
                          ) -> W4Configuration | None:
    """A wheel configuration on five terminals, or None when an exhaustive
    search finds none.

    'plain' wants the host plane with the terminals on the outer face in
    the order given, and two named terminals (``required_ends``, by
    default the first and last) among the spoke ends.  'apex1' looks in
    the complement of apex ``a`` for a three-spoke configuration hubbed at
    an interior neighbour of the apex; 'apex2' additionally assumes the
    complement has no dense four-block and asks for four spokes with the
    hub's cycle clear of the outer face.  Hypothesis failures raise
    ``HypothesisError`` naming the condition; a host that *is* the bare
    gadget is the apex2 variant's own exceptional outcome and yields None
    (recognise it with ``match_gadget``).
    """
    if variant not in ("plain", "apex1", "apex2"):
        raise DomainError(f"unknown variant {variant!r}")
    terms = _check_five(g, a_set)
    aset = frozenset(terms)
    if budget is None:
        budget = StepBudget()
    if g.n < 7:
        raise HypothesisError(
            "host size", f"need at least 7 vertices, got {g.n}")
    if variant == "plain":
        if a is not None:
            raise DomainError("the plain variant takes no apex")
        return _find_w4_plain(g, terms, required_ends, budget)
    if required_ends is not None:
        raise DomainError("required ends apply to the plain variant only")
    if a is None or a not in aset:
        raise DomainError("apex variants need the apex among the terminals")
    if not g.is_connected():
        raise HypothesisError("connected host", "the host is disconnected")
    _require_anchored(g, aset)
    if variant == "apex1":
        return _find_w4_apex1(g, aset, a, budget)
    return _find_w4_apex2(g, aset, a, budget)


def _find_w4_plain(g: Graph, terms, required_ends, budget):
    aset = frozenset(terms)
    _require_anchored(g, aset)
    emb = plane_in_cyclic_order(g, terms)
    if emb is None:
        raise HypothesisError(
            "plane with the terminals in order",
            f"no embedding puts {terms} on the outer face in this order")
    if required_ends is None:
        required_ends = (terms[0], terms[4])
    lo, hi = required_ends
    if lo not in aset or hi not in aset or lo == hi:
        raise DomainError("required ends must be two distinct terminals")
    amask = mask_of(aset)
    outer = set(emb.outer_walk or ())

    def attempt(w, c):
        for system in _spoke_systems(g, w, c, aset, 4, False, budget):
            ends = {p[-1] for p in system}
            if lo in ends and hi in ends:
                return W4Configuration("plain", w, c, system)
        return None

    # cofacial cycles first: on plane instances the hub's face neighbours
    # are the natural candidate, and they are cheap for every w
    cofacial: dict[int, tuple[int, ...]] = {}
    hubs = [w for w in range(g.n) if not amask >> w & 1]
    for w in hubs:
        if w in outer:
            continue
        c = cofacial_cycle(emb, w)
        if c is not None and not set(c) & aset:
            cofacial[w] = c
            cfg = attempt(w, c)
            if cfg is not None:
                return cfg
    # any cycle will do for this variant, so fall back to exhaustion
    for w in hubs:
        allowed = g.vertex_mask & ~amask & ~(1 << w)
        for c in _simple_cycles(g, allowed, budget):
            if c == cofacial.get(w):
                continue
            cfg = attempt(w, c)
            if cfg is not None:
                return cfg
    return None


def _find_w4_apex1(g: Graph, aset, a, budget):
    side = induced(g, [v for v in range(g.n) if v != a])
    rest = sorted(side.to_new(x) for x in aset - {a})
    if not side.graph.is_connected():
        raise HypothesisError(
            "plane complement",
            "removing the apex disconnects the host")
    emb = plane_with_boundary(side.graph, rest)
    if emb is None:
        raise HypothesisError(
            "plane complement",
            "the apex complement has no embedding with the other terminals "
            "on the outer face")
    _forbid_wide_separation(g, aset, "no wide separation beside the terminals")
    outer = set(emb.outer_walk or ())
    for w in sorted(g.neighbors(a)):
        wn = side.to_new(w)
        if wn in outer:
            continue
        c = cofacial_cycle(emb, wn)
        if c is None:
            continue
        for system in _spoke_systems(side.graph, wn, c, rest, 3, True,
                                     budget):
            back = tuple(tuple(side.to_old(v) for v in p) for p in system)
            return W4Configuration(
                "apex1", w, tuple(side.to_old(v) for v in c), back)
    return None


def _find_w4_apex2(g: Graph, aset, a, budget):
    from .discharging import find_k4_minus
    dense = find_k4_minus(g, forbidden=(a,))
    if dense is not None:
        raise HypothesisError(
            "no dense four-block beside the apex",
            f"vertices {sorted(dense.vertices)} span one", witness=dense)
    side = induced(g, [v for v in range(g.n) if v != a])
    boundary = sorted(set(side.to_new(x) for x in (aset - {a}) |
                          set(g.neighbors(a))))
    if not side.graph.is_connected():
        raise HypothesisError(
            "plane complement",
            "removing the apex disconnects the host")
    emb = plane_with_boundary(side.graph, boundary)
    if emb is None:
        raise HypothesisError(
            "plane complement",
            "the apex complement has no embedding with the other terminals "
            "and the apex neighbours on the outer face")
    _forbid_wide_separation(g, aset, "no wide separation beside the terminals")
    if not is_k_connected(side.graph, 2).satisfied:
        raise ViolationError(
            "two-connected complement",
            "the apex complement should be 2-connected under these "
            "hypotheses but is not")
    if match_gadget(g, a_set=aset) is not None:
        return None
    walk = emb.outer_walk or ()
    if len(set(walk)) != len(walk):
        raise ViolationError(
            "outer cycle of the complement",
            f"the outer walk {walk} repeats a vertex")
    ring = tuple(side.to_old(v) for v in walk)
    outer = set(walk)
    others = sorted(aset - {a})
    for w in range(g.n):
        if w == a or w in aset:
            continue
        wn = side.to_new(w)
        if wn in outer:
            continue
        c = cofacial_cycle(emb, wn)
        if c is None or set(c) & outer:
            continue
        cyc_old = tuple(side.to_old(v) for v in c)
        for system in _spoke_systems(g, w, cyc_old, aset, 4, True, budget):
            apexed = [p for p in system if a in p]
            if not apexed:
                return W4Configuration("apex2", w, cyc_old, system)
            p1 = apexed[0]
            hit_ends = {p[-1] for p in system if p is not p1}
            free = [x for x in others if x not in hit_ends]
            if len(free) != 1:
                continue
            a1 = free[0]
            between = [v for v in p1 if v in set(ring)]
            for a2, a3, a4 in itertools.permutations(hit_ends, 3):
                if _ring_order_ok(ring, a1, a2, a3, a4, between):
                    return W4Configuration("apex2", w, cyc_old, system)
    return None
