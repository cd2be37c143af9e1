"""Rooted tree feasibility and the structure of infeasible instances.

The object of study is a quadruple (g, u1, u2, a_set): two distinguished
branch vertices and four prescribed leaves.  The question is whether g
contains a subdivision of the six-vertex tree with two adjacent degree-3
vertices in which u1, u2 carry degree 3 and the a_set vertices carry
degree 1.  ``th_feasible`` answers with an explicit five-path witness;
``classify_quadruple`` refines every "no" into one of three checkable
reasons: a cut of at most two vertices shielding one branch vertex from
everything else that matters, a cut of at most four shielding both, or an
obstruction decomposition of one of four types built around the leaves.

Edges joining two leaves are ignored throughout the classification: a
leaf has degree 1 in the rooted tree, so such an edge can never carry
tree material, and it can never block anything either.  Obstruction
decompositions are therefore stated for the graph with those edges
removed (``strip_anchor_edges``); separations found there are verbatim
separations of the original graph because both ends of every stripped
edge land inside the big side.

A cycle dichotomy rides along: in a 2-connected graph, either some cycle
visits three prescribed vertices, or one of three small-cut
configurations certifies that none does.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .connectivity import (CycleObstruction, PathSystem,
                           check_cycle_obstruction, cycle_through, fan,
                           is_kA_connected)
from .errors import DomainError, HypothesisError, ViolationError
from .graph import Graph, Separation, bits, mask_of


# ---------------------------------------------------------------------------
# quadruples and witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quadruple:
    """A graph with two branch vertices and four leaf anchors.

    The six distinguished vertices must be distinct; everything else about
    g is unconstrained (it need not even be connected).
    """

    g: Graph
    u1: int
    u2: int
    a_set: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "a_set", frozenset(self.a_set))
        for v in (self.u1, self.u2, *self.a_set):
            if not 0 <= v < self.g.n:
                raise DomainError(f"vertex {v} out of range")
        if self.u1 == self.u2:
            raise DomainError("branch vertices must be distinct")
        if len(self.a_set) != 4:
            raise DomainError(f"need exactly 4 anchors, got {len(self.a_set)}")
        if self.u1 in self.a_set or self.u2 in self.a_set:
            raise DomainError("branch vertices may not be anchors")

    @property
    def anchors(self) -> tuple[int, ...]:
        return tuple(sorted(self.a_set))


def strip_anchor_edges(g: Graph, anchors) -> Graph:
    """g minus every edge with both ends in ``anchors``.

    Rooted-tree feasibility and the quadruple classification are invariant
    under this: anchors only ever appear as path endpoints.
    """
    aset = set(anchors)
    return g.remove_edges([(v, w) for v, w in g.edges()
                           if v in aset and w in aset])


@dataclass(frozen=True)
class THWitness:
    """Five paths realizing the rooted subdivided tree.

    ``paths[0]`` runs from u1 to u2 (the subdivided middle edge),
    ``paths[1]``/``paths[2]`` from u1 to two anchors, ``paths[3]``/
    ``paths[4]`` from u2 to the other two.  The paths are internally
    disjoint: the three at u1 share exactly u1, the three at u2 share
    exactly u2, and cross pairs of legs share nothing.
    """

    paths: tuple[tuple[int, ...], ...]

    def validate(self, q: Quadruple) -> str | None:
        """Check every property against the quadruple from scratch;
        None when valid, else the first failing condition."""
        if len(self.paths) != 5:
            return f"expected 5 paths, got {len(self.paths)}"
        for path in self.paths:
            if len(path) < 2 or len(set(path)) != len(path):
                return f"path {path} is not a simple path"
            for v in path:
                if not 0 <= v < q.g.n:
                    return f"vertex {v} out of range"
            for v, w in zip(path, path[1:]):
                if not q.g.has_edge(v, w):
                    return f"missing edge {v}-{w}"
        conn, l1a, l1b, l2a, l2b = self.paths
        if conn[0] != q.u1 or conn[-1] != q.u2:
            return "middle path does not join the branch vertices"
        if l1a[0] != q.u1 or l1b[0] != q.u1:
            return "a u1 leg does not start at u1"
        if l2a[0] != q.u2 or l2b[0] != q.u2:
            return "a u2 leg does not start at u2"
        leaves = (l1a[-1], l1b[-1], l2a[-1], l2b[-1])
        if set(leaves) != q.a_set or len(set(leaves)) != 4:
            return f"leg endpoints {sorted(leaves)} are not the anchors"
        # the pairwise intersection table *is* the degree condition: it
        # forces u1, u2 to degree 3, anchors to degree 1, and everything
        # else to degree at most 2
        want = {(0, 1): {q.u1}, (0, 2): {q.u1}, (1, 2): {q.u1},
                (0, 3): {q.u2}, (0, 4): {q.u2}, (3, 4): {q.u2},
                (1, 3): set(), (1, 4): set(), (2, 3): set(), (2, 4): set()}
        for (i, j), expect in want.items():
            got = set(self.paths[i]) & set(self.paths[j])
            if got != expect:
                return (f"paths {i} and {j} share {sorted(got)}, "
                        f"expected {sorted(expect)}")
        return None


def th_feasible(q: Quadruple) -> THWitness | None:
    """A rooted-tree witness, or None when no subdivision exists.

    The search is exhaustive and deterministic: middle path first, then
    the u1 legs, then the u2 legs, always extending towards the lowest
    available vertex id, so equal inputs yield equal witnesses.  Anchors
    and branch vertices are terminal-only: no path may cross one.
    """
    g = q.g
    terminal = mask_of(q.a_set) | 1 << q.u1 | 1 << q.u2

    def paths_to(src: int, goal: int, used: int):
        # simple paths src -> goal whose interior avoids every terminal
        # and every used vertex, in lexicographic order of vertex choices
        stack = [(src, used | 1 << src, (src,))]
        while stack:
            v, mask, path = stack.pop()
            for w in reversed(g.neighbors(v)):
                if mask >> w & 1:
                    continue
                if w == goal:
                    yield path + (w,)
                elif not terminal >> w & 1:
                    stack.append((w, mask | 1 << w, path + (w,)))

    for conn in paths_to(q.u1, q.u2, 0):
        used_c = mask_of(conn)
        for a, b in itertools.combinations(q.anchors, 2):
            c, d = sorted(q.a_set - {a, b})
            for p1 in paths_to(q.u1, a, used_c & ~(1 << q.u1)):
                m1 = used_c | mask_of(p1)
                for p2 in paths_to(q.u1, b, m1 & ~(1 << q.u1)):
                    m2 = m1 | mask_of(p2)
                    for p3 in paths_to(q.u2, c, m2 & ~(1 << q.u2)):
                        m3 = m2 | mask_of(p3)
                        for p4 in paths_to(q.u2, d, m3 & ~(1 << q.u2)):
                            return THWitness((conn, p1, p2, p3, p4))
    return None


# ---------------------------------------------------------------------------
# obstruction decompositions
# ---------------------------------------------------------------------------

# port pattern per type: number of middle parts, anchors per part, and
# |side ∩ part| for each (side, part) pair
_PATTERNS: dict[str, tuple[int, tuple[int, ...], dict[tuple[int, int], int]]] = {
    "I": (3, (1, 1, 2), {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1,
                         (0, 2): 2, (1, 2): 1}),
    "II": (2, (1, 3), {(0, 0): 1, (1, 0): 1, (0, 1): 2, (1, 1): 2}),
    "III": (2, (2, 2), {(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1}),
    "IV": (4, (1, 1, 1, 1), {(j, i): 1 for j in range(2) for i in range(4)}),
}


@dataclass(frozen=True)
class ObstructionDecomposition:
    """Two sides and two-to-four middle parts certifying infeasibility.

    ``kind`` is one of 'I', 'II', 'III', 'IV', naming which port pattern
    the decomposition realizes.  Vertex sets are stated for the graph with
    anchor-anchor edges removed; sides and parts are subgraphs, so an edge
    lying inside two of the sets is simply assigned to one of them.
    """

    kind: str
    side1: frozenset[int]
    side2: frozenset[int]
    middle_parts: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.middle_parts)


def check_obstruction(q: Quadruple, dec: ObstructionDecomposition) -> str | None:
    """Re-derive every decomposition condition from scratch.

    Checks the six structural conditions, the singleton-part consequence
    (a one-vertex part is an anchor sitting in both sides), and the port
    counts of the claimed type.  Returns None when valid, else the first
    failing condition.  Shares no state with the search.
    """
    if dec.kind not in _PATTERNS:
        return f"unknown kind {dec.kind!r}"
    g = strip_anchor_edges(q.g, q.a_set)
    u1_side, u2_side = set(dec.side1), set(dec.side2)
    parts = [set(p) for p in dec.middle_parts]
    if not 2 <= len(parts) <= 4:
        return f"{len(parts)} middle parts is out of range"
    middle = set().union(*parts)
    for group in (u1_side, u2_side, middle):
        for v in group:
            if not 0 <= v < g.n:
                return f"vertex {v} out of range"
    if u1_side | u2_side | middle != set(range(g.n)):
        return "sides and parts do not cover the vertex set"
    for i, j in itertools.combinations(range(len(parts)), 2):
        if parts[i] & parts[j]:
            return f"parts {i} and {j} overlap"
    # every non-anchor edge must fit inside at least one side or part;
    # one candidate is enough, since subgraphs can share an edge's home
    sets = [u1_side, u2_side] + parts
    for v, w in g.edges():
        if v in q.a_set or w in q.a_set:
            continue
        if not any(v in s and w in s for s in sets):
            return f"edge {v}-{w} lies in no side or part"
    if not u1_side & u2_side <= q.a_set:
        return "sides meet outside the anchors"
    if not q.a_set <= middle:
        return "an anchor is in no middle part"
    if q.u1 not in u1_side or q.u1 in middle:
        return "u1 must be in side 1 and in no part"
    if q.u2 not in u2_side or q.u2 in middle:
        return "u2 must be in side 2 and in no part"
    for i, part in enumerate(parts):
        pa = part & q.a_set
        ports = part & (u1_side | u2_side)
        if not pa:
            return f"part {i} contains no anchor"
        if not len(pa) <= len(ports) <= len(pa) + 1:
            return f"part {i} has {len(ports)} side vertices for {len(pa)} anchors"
        if len(part) >= 2:
            if ports & q.a_set:
                return f"part {i} has an anchor on a side"
            for a in pa:
                for w in g.neighbors(a):
                    if w not in part:
                        return f"anchor {a} of part {i} has the neighbor {w} outside"
        else:
            a = next(iter(part))
            if a not in q.a_set or a not in u1_side or a not in u2_side:
                return f"singleton part {i} must be an anchor in both sides"
    k, acounts, pcounts = _PATTERNS[dec.kind]
    if len(parts) != k:
        return f"type {dec.kind} wants {k} parts, got {len(parts)}"
    for i, part in enumerate(parts):
        if len(part & q.a_set) != acounts[i]:
            return f"type {dec.kind} wants {acounts[i]} anchors in part {i}"
    # the rooted tree is symmetric in its branch vertices, so the port
    # counts are prescribed only up to swapping the two sides
    got = {(j, i): len((u1_side if j == 0 else u2_side) & parts[i])
           for j in range(2) for i in range(k)}
    flipped = {(1 - j, i): want for (j, i), want in pcounts.items()}
    if got != pcounts and got != flipped:
        return f"side-part counts {got} fit type {dec.kind} in no orientation"
    return None


def _anchor_groupings(anchors: tuple[int, ...], sizes: tuple[int, ...]):
    """Ordered partitions of the anchors into groups of the given sizes,
    in lexicographic order."""
    if not sizes:
        yield ()
        return
    for head in itertools.combinations(anchors, sizes[0]):
        rest = tuple(v for v in anchors if v not in head)
        for tail in _anchor_groupings(rest, sizes[1:]):
            yield (frozenset(head),) + tail


def _find_obstruction(q: Quadruple) -> ObstructionDecomposition | None:
    """Exhaustive reconstruction of a typed decomposition, trying type I
    through IV and, within a type, anchor groupings and free-vertex
    placements in a fixed order."""
    free = [v for v in range(q.g.n)
            if v not in q.a_set and v not in (q.u1, q.u2)]
    for kind, (k, acounts, pcounts) in _PATTERNS.items():
        labels = [("S", 0), ("S", 1)]
        labels += [(tag, i) for i in range(k) for tag in ("A", "S0A", "S1A")]
        for groups in _anchor_groupings(q.anchors, acounts):
            for combo in itertools.product(labels, repeat=len(free)):
                sides = [{q.u1}, {q.u2}]
                parts = [set(gp) for gp in groups]
                for v, (tag, i) in zip(free, combo):
                    if tag == "S":
                        sides[i].add(v)
                    else:
                        parts[i].add(v)
                        if tag == "S0A":
                            sides[0].add(v)
                        elif tag == "S1A":
                            sides[1].add(v)
                for i in range(k):
                    if len(parts[i]) == 1:
                        a = next(iter(parts[i]))
                        sides[0].add(a)
                        sides[1].add(a)
                dec = ObstructionDecomposition(
                    kind, frozenset(sides[0]), frozenset(sides[1]),
                    tuple(frozenset(p) for p in parts))
                if check_obstruction(q, dec) is None:
                    return dec
    return None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadrupleVerdict:
    """Outcome of the classification; exactly one payload is set.

    kind 'feasible': ``witness`` realizes the rooted tree.
    kind 'small_side_separation': ``separation`` has order at most 2,
    one branch vertex interior to side 1, and the anchors plus the other
    branch vertex on side 2.
    kind 'four_cut_separation': ``separation`` has order at most 4, both
    branch vertices interior to side 1, and the anchors on side 2.
    kind 'obstruction': ``obstruction`` is a validated decomposition.
    """

    kind: str
    witness: THWitness | None = None
    separation: Separation | None = None
    obstruction: ObstructionDecomposition | None = None


def _small_side_separation(q: Quadruple) -> Separation | None:
    """A separation of order <= 2 with some u_i interior to side 1 and
    the four anchors and the other branch vertex on side 2, smallest cut
    first, u1 before u2."""
    g = q.g
    for inner, outer in ((q.u1, q.u2), (q.u2, q.u1)):
        others = [v for v in range(g.n) if v != inner]
        shielded = q.a_set | {outer}
        for size in range(3):
            for cut in itertools.combinations(others, size):
                cmask = mask_of(cut)
                comp = g.component_mask(inner, g.vertex_mask & ~cmask)
                if any(comp >> x & 1 for x in shielded if not cmask >> x & 1):
                    continue
                side1 = frozenset(bits(comp | cmask))
                side2 = frozenset(v for v in range(g.n) if not comp >> v & 1)
                return Separation(side1, side2)
    return None


def _four_cut_separation(q: Quadruple) -> Separation | None:
    """A separation of order <= 4 with both branch vertices interior to
    side 1 and the anchors on side 2, smallest cut first.  Components
    touching neither branch vertex are charged to side 2, so only a cut
    swallowing everything else is rejected as improper."""
    g = q.g
    others = [v for v in range(g.n) if v not in (q.u1, q.u2)]
    for size in range(5):
        for cut in itertools.combinations(others, size):
            cmask = mask_of(cut)
            rest = g.vertex_mask & ~cmask
            comp = (g.component_mask(q.u1, rest)
                    | g.component_mask(q.u2, rest))
            if any(comp >> a & 1 for a in q.a_set if not cmask >> a & 1):
                continue
            if not g.vertex_mask & ~comp & ~cmask:
                continue
            side1 = frozenset(bits(comp | cmask))
            side2 = frozenset(v for v in range(g.n) if not comp >> v & 1)
            return Separation(side1, side2)
    return None


def classify_quadruple(q: Quadruple) -> QuadrupleVerdict:
    """Feasibility witness, small separation, or typed obstruction.

    The checks run in a fixed order: the order-<= 2 separation first (it
    already implies infeasibility: of the three paths a witness sends out
    of the shielded branch vertex, pairwise meeting only there, a 2-cut
    stops at most two), then the feasibility search, then the order-<= 4
    separation (which feasible quadruples *can* have, hence the order),
    then the obstruction reconstruction on the anchor-stripped graph.  An
    infeasible quadruple escaping all four raises ViolationError.
    """
    sep = _small_side_separation(q)
    if sep is not None:
        return QuadrupleVerdict("small_side_separation", separation=sep)
    wit = th_feasible(q)
    if wit is not None:
        return QuadrupleVerdict("feasible", witness=wit)
    sep = _four_cut_separation(q)
    if sep is not None:
        return QuadrupleVerdict("four_cut_separation", separation=sep)
    dec = _find_obstruction(q)
    if dec is not None:
        return QuadrupleVerdict("obstruction", obstruction=dec)
    raise ViolationError(
        "infeasible quadruples decompose",
        f"no separation, witness, or obstruction on n={q.g.n}, "
        f"u1={q.u1}, u2={q.u2}, anchors={q.anchors}")


def type4_fan_property(q: Quadruple, dec: ObstructionDecomposition,
                       i: int, a: int) -> PathSystem:
    """Four independent paths promised by a type IV decomposition: one
    from u_i to the anchor ``a``, three from the other branch vertex to
    the other three anchors.

    Requires a valid type IV decomposition, i in {1, 2}, ``a`` an anchor,
    and the graph (4, anchors)-connected; failure of the last raises
    HypothesisError, and failure of the guaranteed path system raises
    ViolationError.
    """
    if i not in (1, 2):
        raise DomainError(f"side index must be 1 or 2, got {i}")
    if a not in q.a_set:
        raise DomainError(f"{a} is not an anchor")
    if dec.kind != "IV":
        raise DomainError(f"expected a type IV decomposition, got {dec.kind}")
    err = check_obstruction(q, dec)
    if err is not None:
        raise DomainError(f"invalid decomposition: {err}")
    report = is_kA_connected(q.g, 4, q.a_set)
    if not report.satisfied:
        raise HypothesisError("(4,A)-connected",
                              f"threshold {report.k}", witness=report)
    g = q.g
    near = q.u1 if i == 1 else q.u2
    far = q.u2 if i == 1 else q.u1
    rest = sorted(q.a_set - {a})
    # the near path may not cross the far branch vertex or any other
    # anchor (they are endpoints of the remaining paths)
    blocked = mask_of(rest) | 1 << far
    stack = [(near, (1 << near) | blocked, (near,))]
    while stack:
        v, mask, path = stack.pop()
        for w in reversed(g.neighbors(v)):
            if mask >> w & 1:
                continue
            if w == a:
                found = path + (a,)
                legs = fan(g, far, rest, forbidden=found)
                if legs.count == 3:
                    ordered = tuple(sorted(legs.paths, key=lambda p: p[-1]))
                    return PathSystem((found,) + ordered, "independent")
            else:
                stack.append((w, mask | 1 << w, path + (w,)))
    raise ViolationError(
        "type IV fan property",
        f"no u_{i} path to {a} extends to a 3-fan from u_{3 - i}")


# ---------------------------------------------------------------------------
# cycles through three prescribed vertices
# ---------------------------------------------------------------------------

_CASE_OF_KIND = {"one_cut": "i", "shared_vertex": "ii", "disjoint_cuts": "iii"}
_KIND_OF_CASE = {v: k for k, v in _CASE_OF_KIND.items()}


@dataclass(frozen=True)
class ThreeCycleObstruction:
    """Why no cycle visits the three prescribed vertices.

    case 'i': one 2-cut whose removal puts the three vertices into three
    different parts.  case 'ii': three 2-cuts through one common vertex,
    each stranding its own prescribed vertex in ``parts``.  case 'iii':
    three pairwise disjoint 2-cuts whose stranded parts leave exactly two
    components behind, each meeting every cut once.
    """

    case: str
    cuts: tuple[tuple[int, ...], ...]
    parts: tuple[tuple[int, ...], ...]


def check_three_cycle_obstruction(g: Graph, y1: int, y2: int, y3: int,
                                  ob: ThreeCycleObstruction) -> str | None:
    """Re-derive every obstruction condition; None when valid."""
    if ob.case not in _KIND_OF_CASE:
        return f"unknown case {ob.case!r}"
    inner = CycleObstruction(_KIND_OF_CASE[ob.case], ob.cuts, ob.parts)
    return check_cycle_obstruction(g, y1, y2, y3, inner)


def cycle_through_three(g: Graph, y1: int, y2: int, y3: int
                        ) -> tuple[int, ...] | ThreeCycleObstruction:
    """A cycle through three prescribed vertices of a 2-connected graph,
    or the obstruction explaining why none exists."""
    res = cycle_through(g, y1, y2, y3)
    if res.cycle is not None:
        return res.cycle
    ob = res.obstruction
    return ThreeCycleObstruction(_CASE_OF_KIND[ob.kind], ob.cuts, ob.lobes)
