"""Charge bookkeeping on plane graphs and K4-minus detection.

Every vertex and face of a connected plane graph starts with charge
4 - degree, for a grand total of 8; triangular faces then send 1/2 to two
incident vertices chosen by a pluggable recipient rule.  Charges are exact
``Fraction`` values throughout, so the totals are checked to be *equal* to
8, never merely close.

The same module hosts the verifiers whose conclusions are K4-minus
witnesses or separations: a boundary-anchored 5-set always leaves a
K4-minus after deleting one anchor, a planar-apart-from-one-vertex 6-set
yields a K4-minus or a 5-separation, and contracting a small clique of a
minimally nonplanar graph leaves a K4-minus outside it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .connectivity import is_k_connected, is_kA_connected
from .errors import DomainError, HypothesisError, ViolationError
from .graph import Graph, Separation, bits, contract, induced, mask_of
from .planarity import Embedding, embed_planar, plane_with_boundary

Element = tuple[str, int]          # ('v', vertex id) or ('f', face index)
RecipientRule = Callable[[tuple[int, ...]], tuple[int, int]]


# ---------------------------------------------------------------------------
# charge ledger
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChargeState:
    """Initial and redistributed charges of one plane graph.

    Keys are ('v', id) for vertices and ('f', index) for faces.  ``tau``
    differs from ``sigma`` only by the 1/2-transfers recorded in
    ``triangle_assignments`` (face index -> its two recipient vertices).
    """

    sigma: Mapping[Element, Fraction]
    tau: Mapping[Element, Fraction]
    triangle_assignments: Mapping[int, tuple[int, int]]

    @property
    def sigma_total(self) -> Fraction:
        return sum(self.sigma.values(), Fraction(0))

    @property
    def tau_total(self) -> Fraction:
        return sum(self.tau.values(), Fraction(0))


def rule_lowest_ids(walk: tuple[int, ...]) -> tuple[int, int]:
    """Send the triangle's charge to its two lowest-id vertices."""
    a, b = sorted(set(walk))[:2]
    return a, b


def rule_avoiding(avoid) -> RecipientRule:
    """Recipient rule sending charge to the two lowest-id face vertices
    outside ``avoid`` (boundary sets, neighbourhoods of a designated
    vertex, ...).  The rule fails loudly when a triangle does not have two
    spare vertices; callers relying on it must guarantee that situation
    cannot occur, or catch the failure and use it (some proofs turn
    exactly this failure into their next case)."""
    blocked = frozenset(avoid)

    def rule(walk: tuple[int, ...]) -> tuple[int, int]:
        free = sorted(set(walk) - blocked)
        if len(free) < 2:
            raise DomainError(
                f"triangle {tuple(walk)} has fewer than two vertices "
                f"outside the avoided set")
        return free[0], free[1]

    return rule


def discharge(emb: Embedding, recipient_rule: RecipientRule = rule_lowest_ids
              ) -> ChargeState:
    """Compute initial charges 4-d on vertices and faces and move 1/2 from
    every triangular face to the two incident vertices chosen by the rule.

    Both totals equal 8 for every connected plane graph (a restatement of
    Euler's formula); the redistribution never changes the total.
    """
    edges = {(v, w) for v, nbrs in enumerate(emb.rotation) for w in nbrs}
    skeleton = Graph.from_edges(emb.n, [(v, w) for v, w in edges if v < w])
    if not skeleton.is_connected():
        raise DomainError("discharge requires a connected embedding")
    sigma: dict[Element, Fraction] = {}
    for v in range(emb.n):
        sigma[("v", v)] = Fraction(4 - len(emb.rotation[v]))
    for i, walk in enumerate(emb.faces):
        sigma[("f", i)] = Fraction(4 - len(walk))
    tau = dict(sigma)
    assignments: dict[int, tuple[int, int]] = {}
    for i, walk in enumerate(emb.faces):
        if len(walk) != 3 or len(set(walk)) != 3:
            continue
        r1, r2 = recipient_rule(walk)
        if r1 == r2 or r1 not in walk or r2 not in walk:
            raise DomainError(
                f"recipient rule returned {(r1, r2)} for face {walk}")
        assignments[i] = (r1, r2)
        tau[("f", i)] -= 1
        tau[("v", r1)] += Fraction(1, 2)
        tau[("v", r2)] += Fraction(1, 2)
    return ChargeState(sigma, tau, assignments)


def tau_bound(d: int) -> Fraction:
    """Largest possible redistributed charge of a degree-d vertex of a
    plane graph containing no K4-minus: such a vertex lies on at most
    floor(d/2) facial triangles, so tau(v) <= 4 - d + floor(d/2)/2."""
    if d < 0:
        raise DomainError("degree must be nonnegative")
    k, r = divmod(d, 4)
    return (Fraction(4), Fraction(3), Fraction(5, 2), Fraction(3, 2))[r] - 3 * k


# ---------------------------------------------------------------------------
# K4-minus detection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class K4MinusWitness:
    """Four vertices spanning at least five of their six pairs.

    ``edges`` lists the five present pairs used by the witness and
    ``missing_pair`` the one unconstrained pair (which may incidentally be
    an edge too, when the four vertices span a full K4).
    """

    vertices: tuple[int, int, int, int]
    edges: tuple[tuple[int, int], ...]
    missing_pair: tuple[int, int]

    def validate(self, g: Graph, forbidden=()) -> str | None:
        """Check the witness against g alone; None when valid."""
        if len(set(self.vertices)) != 4:
            return "vertices are not four distinct ids"
        if set(self.vertices) & set(forbidden):
            return "witness touches a forbidden vertex"
        pairs = {frozenset(p) for p in
                 itertools.combinations(self.vertices, 2)}
        listed = [frozenset(e) for e in self.edges]
        if len(listed) != 5 or len(set(listed)) != 5:
            return "expected five distinct edges"
        if set(listed) | {frozenset(self.missing_pair)} != pairs:
            return "edges plus missing pair do not cover all six pairs"
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return f"edge {u}-{v} not in the graph"
        return None


def find_k4_minus(g: Graph, forbidden=()) -> K4MinusWitness | None:
    """First K4-minus avoiding ``forbidden``, scanning edges and their
    common-neighbour pairs in ascending order; None when none exists."""
    blocked = mask_of(forbidden)
    if blocked & ~g.vertex_mask:
        raise DomainError("forbidden vertex out of range")
    for u, v in g.edges():
        if blocked >> u & 1 or blocked >> v & 1:
            continue
        common = list(bits(g.adj[u] & g.adj[v] & ~blocked))
        for x, y in itertools.combinations(common, 2):
            edges = tuple(sorted(
                (min(p), max(p)) for p in ((u, v), (u, x), (v, x), (u, y), (v, y))))
            return K4MinusWitness((u, v, x, y), edges, (x, y))
    return None


# ---------------------------------------------------------------------------
# statement verifiers
# ---------------------------------------------------------------------------

def _require(condition: bool, name: str, detail: str = "", witness=None) -> None:
    if not condition:
        raise HypothesisError(name, detail, witness)


def verify_planarside(g: Graph, a_set, a: int) -> K4MinusWitness:
    """For a 5-set A on a common face of a (5,A)-connected graph with at
    least 7 vertices, produce a K4-minus in g - a for the given a in A.

    The statement guarantees one exists; its absence is raised as a
    violation rather than returned.
    """
    anchors = frozenset(a_set)
    _require(len(anchors) == 5, "|A| = 5", f"got {len(anchors)}")
    _require(a in anchors, "a in A", f"{a} not in {sorted(anchors)}")
    _require(g.n >= 7, "|V| >= 7", f"got {g.n}")
    rep = is_kA_connected(g, 5, anchors)
    _require(rep.satisfied, "(5,A)-connected",
             f"cut {rep.cut} strands {rep.stranded}", witness=rep.cut)
    _require(g.is_connected() and plane_with_boundary(g, anchors) is not None,
             "(G,A) planar")
    witness = find_k4_minus(g, forbidden=(a,))
    if witness is None:
        raise ViolationError(
            "boundary-anchored K4-minus statement",
            f"no K4-minus in G - {a} despite all hypotheses holding")
    return witness


def verify_6cut2(g: Graph, a_set, a: int) -> K4MinusWitness | Separation:
    """For a 6-set A and a in A with g - a planar keeping A - a on a face,
    (5,A)-connected and at least 8 vertices: a K4-minus certificate (in
    g - a, or through a with a in the degree-2 position), else a
    5-separation through a with A on side 1, side 2 of size >= 7 and
    side-2-minus-a planar with its cut on a face.
    """
    anchors = frozenset(a_set)
    _require(len(anchors) == 6, "|A| = 6", f"got {len(anchors)}")
    _require(a in anchors, "a in A", f"{a} not in {sorted(anchors)}")
    _require(g.n >= 8, "|V| >= 8", f"got {g.n}")
    sub = induced(g, set(range(g.n)) - {a})
    boundary = [sub.to_new(v) for v in sorted(anchors - {a})]
    _require(sub.graph.is_connected() and
             plane_with_boundary(sub.graph, boundary) is not None,
             "(G - a, A - a) planar")
    rep = is_kA_connected(g, 5, anchors)
    _require(rep.satisfied, "(5,A)-connected",
             f"cut {rep.cut} strands {rep.stranded}", witness=rep.cut)

    plain = find_k4_minus(g, forbidden=(a,))
    if plain is not None:
        return plain
    at_a = _k4_minus_through(g, a)
    if at_a is not None:
        return at_a
    sep = _apex_separation(g, anchors, a)
    if sep is not None:
        return sep
    raise ViolationError(
        "six-anchor K4-minus-or-separation statement",
        "no K4-minus and no qualifying 5-separation found")


def _k4_minus_through(g: Graph, a: int) -> K4MinusWitness | None:
    """A K4-minus using a with degree exactly 2: a triangle xyz with two
    of its corners adjacent to a, the unconstrained pair being a-z."""
    for x, y in itertools.combinations(sorted(bits(g.adj[a])), 2):
        if not g.has_edge(x, y):
            continue
        for z in bits(g.adj[x] & g.adj[y]):
            if z == a:
                continue
            edges = tuple(sorted(
                (min(p), max(p)) for p in ((a, x), (a, y), (x, y), (x, z), (y, z))))
            return K4MinusWitness((a, x, y, z), edges, (min(a, z), max(a, z)))
    return None


def _apex_separation(g: Graph, anchors: frozenset[int], a: int
                     ) -> Separation | None:
    """A 5-separation through a with all anchors on side 1, side 2 of size
    at least 7, and side 2 minus a planar with the rest of the cut on one
    face.  Exhausts 5-cuts through a and component groupings."""
    rest = sorted(set(range(g.n)) - {a})
    for four in itertools.combinations(rest, 4):
        cut = frozenset((a, *four))
        away = g.vertex_mask & ~mask_of(cut)
        comp_masks = g.components(away)
        side1_base = 0
        free = []
        for cm in comp_masks:
            if cm & mask_of(anchors - cut):
                side1_base |= cm
            else:
                free.append(cm)
        if not side1_base:
            continue
        for take in range(1 << len(free)):
            m2 = 0
            for i, cm in enumerate(free):
                if take >> i & 1:
                    m2 |= cm
            if not m2:
                continue
            side2 = cut | set(bits(m2))
            if len(side2) < 7:
                continue
            side2_sub = induced(g, side2 - {a})
            boundary = [side2_sub.to_new(v) for v in sorted(cut - {a})]
            if not side2_sub.graph.is_connected():
                continue
            if plane_with_boundary(side2_sub.graph, boundary) is None:
                continue
            side1 = set(range(g.n)) - set(bits(m2))
            try:
                return Separation.check(g, side1, side2)
            except DomainError:
                continue
    return None


def verify_contraction_prop(g: Graph, t) -> K4MinusWitness:
    """For a 5-connected nonplanar g and a 2- or 3-clique T whose
    contraction is 5-connected and planar: a K4-minus avoiding T."""
    tset = frozenset(t)
    _require(len(tset) in (2, 3), "T induces K2 or K3",
             f"|T| = {len(tset)}")
    _require(all(g.has_edge(u, v) for u, v in itertools.combinations(tset, 2)),
             "T induces K2 or K3", "a pair of T is non-adjacent")
    rep = is_k_connected(g, 5)
    _require(rep.satisfied, "G 5-connected", f"connectivity {rep.k}",
             witness=rep.cut)
    _require(not embed_planar(g).planar, "G nonplanar")
    quotient = contract(g, tset).graph
    qrep = is_k_connected(quotient, 5)
    _require(qrep.satisfied, "G/T 5-connected",
             f"connectivity {qrep.k}", witness=qrep.cut)
    _require(embed_planar(quotient).planar, "G/T planar")
    witness = find_k4_minus(g, forbidden=tset)
    if witness is None:
        raise ViolationError(
            "clique-contraction K4-minus statement",
            f"no K4-minus in G - {sorted(tset)} despite all hypotheses")
    return witness
