"""Vertex-disjoint path systems, connectivity reports, and prescribed-vertex
cycles.

All path searches are deterministic: neighbours are explored in ascending
id order, so repeated runs return identical witnesses.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import DomainError, HypothesisError
from .graph import Graph, Separation, bits, mask_of

_INF = 1 << 30


@dataclass(frozen=True)
class MengerResult:
    """Maximum system of disjoint paths together with a matching cut.

    ``paths`` are vertex tuples.  ``cut`` is a vertex set meeting every
    source-sink path, with len(cut) == len(paths); equality of the two
    sizes is the certificate that both are optimal.
    """

    paths: tuple[tuple[int, ...], ...]
    cut: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.paths)


class _UnitFlow:
    """Unit-vertex-capacity flow network over a split graph.

    Vertex v becomes nodes 2v (in) and 2v+1 (out) joined by a unit arc;
    graph edges become infinite arcs between out and in nodes, so every
    minimum cut consists of split arcs and reads back as a vertex set.

    ``absorbing`` vertices keep their unit arc and any sink attachment but
    lose their outgoing edge arcs, so a path stops at the first absorbing
    vertex it meets.  Flow values are unchanged by absorption when the
    absorbing set is the sink set (truncating a path system at first
    contact keeps it disjoint with distinct ends).
    """

    def __init__(self, g: Graph, removed: frozenset[int],
                 absorbing: frozenset[int] = frozenset()):
        n = g.n
        self.g = g
        self.n = n
        self.removed = removed
        self.source = 2 * n
        self.sink = 2 * n + 1
        self.cap: dict[tuple[int, int], int] = {}
        self.flow: dict[tuple[int, int], int] = {}
        self.adj: list[list[int]] = [[] for _ in range(2 * n + 2)]
        for v in range(n):
            if v in removed:
                continue
            self._arc(2 * v, 2 * v + 1, 1)
            if v in absorbing:
                continue
            for w in g.neighbors(v):
                if w not in removed:
                    self._arc(2 * v + 1, 2 * w, _INF)

    def _arc(self, x: int, y: int, c: int) -> None:
        if (x, y) not in self.cap:
            self.cap[(x, y)] = self.cap[(y, x)] = 0
            self.flow[(x, y)] = self.flow[(y, x)] = 0
            self.adj[x].append(y)
            self.adj[y].append(x)
        self.cap[(x, y)] += c

    def attach_source(self, v: int) -> None:
        if v not in self.removed:
            self._arc(self.source, 2 * v, _INF)

    def attach_sink(self, v: int) -> None:
        if v not in self.removed:
            self._arc(2 * v + 1, self.sink, _INF)

    def _residual(self, x: int, y: int) -> int:
        return self.cap[(x, y)] - self.flow[(x, y)]

    def run(self, limit: int) -> int:
        for node in range(len(self.adj)):
            self.adj[node].sort()
        value = 0
        while value < limit:
            parent = {self.source: self.source}
            q = deque([self.source])
            while q and self.sink not in parent:
                x = q.popleft()
                for y in self.adj[x]:
                    if y not in parent and self._residual(x, y) > 0:
                        parent[y] = x
                        q.append(y)
            if self.sink not in parent:
                break
            y = self.sink
            while y != self.source:
                x = parent[y]
                self.flow[(x, y)] += 1
                self.flow[(y, x)] -= 1
                y = x
            value += 1
        return value

    def paths(self) -> list[list[int]]:
        """Decompose the flow into source-sink node paths, reading off the
        original vertex of every in-node passed."""
        out = []
        for first in sorted(self.adj[self.source]):
            while self.flow[(self.source, first)] > 0:
                self.flow[(self.source, first)] -= 1
                node, trail = first, []
                while node != self.sink:
                    if node < 2 * self.n and node % 2 == 0:
                        trail.append(node // 2)
                    nxt = next(y for y in self.adj[node]
                               if y != self.source and self.flow[(node, y)] > 0)
                    self.flow[(node, nxt)] -= 1
                    node = nxt
                out.append(trail)
        return out

    def cut(self) -> tuple[int, ...]:
        seen = {self.source}
        q = deque([self.source])
        while q:
            x = q.popleft()
            for y in self.adj[x]:
                if y not in seen and self._residual(x, y) > 0:
                    seen.add(y)
                    q.append(y)
        return tuple(v for v in range(self.n)
                     if v not in self.removed
                     and 2 * v in seen and 2 * v + 1 not in seen)


def menger(g: Graph, sources, sinks, forbidden=(), limit: int | None = None) -> MengerResult:
    """Maximum fully vertex-disjoint path system from ``sources`` to
    ``sinks`` avoiding ``forbidden``, with a minimum cut of equal size.

    A vertex in both ``sources`` and ``sinks`` yields a one-vertex path.
    The cut never contains forbidden vertices.  When ``limit`` is given the
    search stops at that many paths (the cut is then only meaningful if
    fewer were found).
    """
    removed = frozenset(forbidden)
    src = sorted(set(sources) - removed)
    dst = sorted(set(sinks) - removed)
    for v in itertools.chain(src, dst, removed):
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    net = _UnitFlow(g, removed)
    for v in src:
        net.attach_source(v)
    for v in dst:
        net.attach_sink(v)
    want = min(len(src), len(dst))
    net.run(want if limit is None else min(limit, want))
    cut = net.cut()
    return MengerResult(tuple(tuple(p) for p in net.paths()), cut)


def fan(g: Graph, root: int, targets, forbidden=()) -> MengerResult:
    """Maximum system of paths from ``root`` to distinct targets, disjoint
    except at ``root`` and meeting the target set only at their ends, plus
    a minimum root-avoiding cut."""
    if root in targets:
        raise DomainError("fan root may not be a target")
    removed = frozenset(forbidden) | {root}
    dst = sorted(set(targets) - removed)
    for v in itertools.chain(dst, removed, [root]):
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    net = _UnitFlow(g, removed, absorbing=frozenset(dst))
    for w in g.neighbors(root):
        net.attach_source(w)
    for v in dst:
        net.attach_sink(v)
    net.run(len(dst))
    cut = net.cut()
    return MengerResult(tuple((root,) + tuple(p) for p in net.paths()), cut)


def internally_disjoint(g: Graph, u: int, v: int, forbidden=()) -> MengerResult:
    """Maximum system of internally disjoint u-v paths and a minimum cut
    avoiding both endpoints.  A u-v edge contributes the two-vertex path."""
    if u == v:
        raise DomainError("endpoints must differ")
    removed = frozenset(forbidden) | {u, v}
    net = _UnitFlow(g, removed)
    for w in g.neighbors(u):
        net.attach_source(w)
    for w in g.neighbors(v):
        net.attach_sink(w)
    net.run(g.n)
    cut = net.cut()
    paths = [(u,) + tuple(p) + (v,) for p in net.paths()]
    if g.has_edge(u, v):
        paths.insert(0, (u, v))
    return MengerResult(tuple(paths), cut)


# ---------------------------------------------------------------------------
# named path systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathSystem:
    """A collection of paths with a declared disjointness regime.

    ``disjointness`` is 'independent' (two paths may meet only in a vertex
    that is an endpoint of both) or 'fully-disjoint' (no shared vertices at
    all).  ``hub`` optionally names a vertex every path must start at.
    """

    paths: tuple[tuple[int, ...], ...]
    disjointness: str
    hub: int | None = None

    def validate(self, g: Graph) -> str | None:
        """Check every declared property against g; None when valid, else
        the first failing condition."""
        if self.disjointness not in ("independent", "fully-disjoint"):
            return f"unknown disjointness {self.disjointness!r}"
        for path in self.paths:
            if not path:
                return "empty path"
            if len(set(path)) != len(path):
                return f"path {path} revisits a vertex"
            for v in path:
                if not 0 <= v < g.n:
                    return f"vertex {v} out of range"
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    return f"missing edge {u}-{v}"
            if self.hub is not None and path[0] != self.hub:
                return f"path {path} does not start at the hub"
        for p, q in itertools.combinations(self.paths, 2):
            shared = set(p) & set(q)
            if self.disjointness == "fully-disjoint" and shared:
                return f"paths share vertices {sorted(shared)}"
            for v in shared:
                if v not in (p[0], p[-1]) or v not in (q[0], q[-1]):
                    return f"vertex {v} is interior to a second path"
        return None

    @property
    def ends(self) -> tuple[int, ...]:
        return tuple(p[-1] for p in self.paths)


def independent_paths(g: Graph, u: int, targets, count: int
                      ) -> PathSystem | tuple[int, ...]:
    """``count`` paths from u to distinct targets, pairwise sharing only u
    and internally disjoint from the target set, or a cut certifying that
    fewer exist.

    The cut avoids u and meets every u-target path; its size is the true
    maximum, so callers can read off the deficiency.
    """
    dst = sorted(set(targets))
    if u in dst:
        raise DomainError("source may not be a target")
    if count > len(dst):
        raise DomainError(f"asked for {count} paths to {len(dst)} targets")
    for v in itertools.chain(dst, [u]):
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    net = _UnitFlow(g, frozenset((u,)), absorbing=frozenset(dst))
    for w in g.neighbors(u):
        net.attach_source(w)
    for v in dst:
        net.attach_sink(v)
    got = net.run(count)
    if got < count:
        return net.cut()
    paths = tuple((u,) + tuple(p) for p in net.paths())
    return PathSystem(paths, "independent", hub=u)


def perfect_reroute(g: Graph, u: int, a_set, pinned, n: int) -> PathSystem:
    """An n-path fan from u to ``a_set`` whose first paths end at the
    ``pinned`` anchors, in the order given.

    Classical fan rerouting: if u has an n-fan to a_set and a |pinned|-fan
    to the pinned anchors, it has an n-fan using all pinned anchors as
    ends.  Realized by seeding a flow with the pinned fan and augmenting:
    a saturated pinned endpoint can never lose its flow (its out-node has
    no other incoming residual arc), so augmentation only ever adds ends.
    """
    anchors = sorted(set(a_set))
    want = list(pinned)
    if u in anchors:
        raise DomainError("fan root may not be an anchor")
    if len(set(want)) != len(want) or not set(want) <= set(anchors):
        raise DomainError("pinned anchors must be distinct members of a_set")
    if not 0 <= n <= len(anchors):
        raise DomainError(f"cannot fan {n} paths into {len(anchors)} anchors")
    if len(want) > n:
        raise DomainError("more pinned anchors than requested paths")
    for v in itertools.chain(anchors, [u]):
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    net = _UnitFlow(g, frozenset((u,)), absorbing=frozenset(anchors))
    for w in g.neighbors(u):
        net.attach_source(w)
    for v in want:
        net.attach_sink(v)
    if net.run(len(want)) < len(want):
        raise HypothesisError(
            f"{len(want)}-fan to the pinned anchors",
            f"at most {len(net.cut())} such paths exist", witness=net.cut())
    for v in anchors:
        if v not in want:
            net.attach_sink(v)
    if len(want) + net.run(n - len(want)) < n:
        raise HypothesisError(
            f"{n}-fan to the anchor set",
            f"at most {len(net.cut())} such paths exist", witness=net.cut())
    by_end = {p[-1]: (u,) + tuple(p) for p in net.paths()}
    order = want + sorted(set(by_end) - set(want))
    return PathSystem(tuple(by_end[v] for v in order), "independent", hub=u)


# ---------------------------------------------------------------------------
# connectivity reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConnectivityReport:
    """Outcome of a connectivity test, with the exact threshold.

    ``k`` is the largest integer for which the queried property holds
    (the connectivity, or the anchored connectivity), independent of the
    threshold that was asked for.  On failure ``cut`` is a witness vertex
    set realizing k and ``stranded`` is the vertex set of a component of
    g - cut demonstrating the violation; for failures caused purely by a
    size bound the cut is None.
    """

    satisfied: bool
    k: int
    cut: tuple[int, ...] | None = None
    stranded: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.satisfied


def _component_tuple(g: Graph, v: int, cut) -> tuple[int, ...]:
    allowed = g.vertex_mask & ~mask_of(cut)
    return tuple(sorted(bits(g.component_mask(v, allowed))))


def is_k_connected(g: Graph, k: int) -> ConnectivityReport:
    """Report whether g has connectivity at least k, and what the
    connectivity actually is (n-1 for complete graphs)."""
    if g.n == 0:
        return ConnectivityReport(k <= 0, 0)
    if not g.is_connected():
        return ConnectivityReport(k <= 0, 0, (), _component_tuple(g, 0, ()))
    best: MengerResult | None = None
    pair = None
    for u, v in itertools.combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        res = internally_disjoint(g, u, v)
        if best is None or res.count < best.count:
            best, pair = res, (u, v)
    if best is None:
        kappa = g.n - 1
        return ConnectivityReport(k <= kappa, kappa)
    if k <= best.count:
        return ConnectivityReport(True, best.count)
    return ConnectivityReport(False, best.count, best.cut,
                              _component_tuple(g, pair[0], best.cut))


def is_kA_connected(g: Graph, k: int, anchors) -> ConnectivityReport:
    """Report whether every cut of fewer than k vertices leaves only
    components that meet ``anchors``, plus the exact threshold (the
    smallest fan count from a non-anchor into the anchor set).

    The cut in a failure report may include anchor vertices; the stranded
    component contains none.  With no vertices outside the anchor set the
    property is vacuous and k is reported as the vertex count.
    """
    amask = mask_of(anchors)
    for v in sorted(set(anchors)):
        if not 0 <= v < g.n:
            raise DomainError(f"anchor {v} out of range")
    targets = sorted(bits(amask))
    best: MengerResult | None = None
    origin = None
    for v in range(g.n):
        if amask >> v & 1:
            continue
        res = fan(g, v, targets)
        if best is None or res.count < best.count:
            best, origin = res, v
    if best is None:
        return ConnectivityReport(True, g.n)
    if k <= best.count:
        return ConnectivityReport(True, best.count)
    return ConnectivityReport(False, best.count, best.cut,
                              _component_tuple(g, origin, best.cut))


# ---------------------------------------------------------------------------
# separations
# ---------------------------------------------------------------------------

def find_separation(g: Graph, order_max: int, must_side1=(), must_side2=(),
                    minimize: str = "none", max_n: int = 16) -> Separation | None:
    """A separation of order at most ``order_max`` with the given vertices
    on the given sides, or None.

    Exhausts candidate cuts, so the answer is exact: with minimize
    'side1'/'side2' the returned separation has the fewest vertices on
    that side over all qualifying separations (ties broken by the sorted
    vertex tuple); with 'none' the first qualifying separation in cut
    enumeration order is returned.  Vertices in a must set may end up in
    the cut, which belongs to both sides.
    """
    if minimize not in ("none", "side1", "side2"):
        raise DomainError(f"unknown minimize mode {minimize!r}")
    if g.n > max_n:
        raise DomainError(f"refusing exhaustive cut search on {g.n} > {max_n} vertices")
    m1 = mask_of(must_side1)
    m2 = mask_of(must_side2)
    if (m1 | m2) & ~g.vertex_mask:
        raise DomainError("required vertex out of range")

    best: tuple[int, tuple[int, ...], Separation] | None = None

    def offer(side1: int, side2: int) -> Separation | None:
        nonlocal best
        try:
            sep = Separation.check(g, bits(side1), bits(side2))
        except DomainError:
            return None
        if minimize == "none":
            return sep
        tracked = side1 if minimize == "side1" else side2
        key = (bin(tracked).count("1"), tuple(sorted(bits(tracked))))
        if best is None or key < best[:2]:
            best = key + (sep,)
        return None

    for size in range(min(order_max, g.n) + 1):
        for cut in itertools.combinations(range(g.n), size):
            cmask = mask_of(cut)
            rest = g.vertex_mask & ~cmask
            comps1 = comps2 = 0
            free = []
            ok = True
            seen = 0
            for v in range(g.n):
                if not rest >> v & 1 or seen >> v & 1:
                    continue
                cm = g.component_mask(v, rest)
                seen |= cm
                hit1, hit2 = cm & m1, cm & m2
                if hit1 and hit2:
                    ok = False
                    break
                if hit1:
                    comps1 |= cm
                elif hit2:
                    comps2 |= cm
                else:
                    free.append(cm)
            if not ok:
                continue
            # all free components on one side, then each single free
            # component alone on a side (the single pull covers the case
            # where that side would otherwise have no interior); an
            # optimal side never takes more than one free component
            allfree = sum(free)
            assignments = [(comps1, comps2 | allfree), (comps1 | allfree, comps2)]
            for cm in free:
                assignments.append((comps1 | cm, comps2 | (allfree & ~cm)))
                assignments.append((comps1 | (allfree & ~cm), comps2 | cm))
            for in1, in2 in assignments:
                found = offer(in1 | cmask, in2 | cmask)
                if found is not None:
                    return found
    return None if best is None else best[2]

def _bfs_path(g: Graph, start: int, goal: int, blocked: int) -> list[int] | None:
    """Shortest start-goal path whose internal vertices avoid ``blocked``
    (endpoint bits in the mask are ignored)."""
    blocked &= ~(1 << start | 1 << goal)
    if start == goal:
        return [start]
    prev = {start: start}
    q = deque([start])
    while q:
        x = q.popleft()
        for y in bits(g.adj[x] & ~blocked):
            if y not in prev:
                prev[y] = x
                if y == goal:
                    path = [y]
                    while path[-1] != start:
                        path.append(prev[path[-1]])
                    return path[::-1]
                q.append(y)
    return None


def two_disjoint_paths(g: Graph, s1: int, t1: int, s2: int, t2: int
                       ) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two vertex-disjoint paths s1..t1 and s2..t2, or None.

    Exhaustive backtracking over the first path with a reachability prune;
    exact on all inputs, intended for the moderate sizes this package
    works at.
    """
    terminals = (s1, t1, s2, t2)
    if len(set(terminals)) != 4:
        raise DomainError("two_disjoint_paths requires four distinct terminals")
    for v in terminals:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")

    def extend(path: list[int], used: int):
        head = path[-1]
        if head == t1:
            tail = _bfs_path(g, s2, t2, used)
            return (tuple(path), tuple(tail)) if tail is not None else None
        if _bfs_path(g, s2, t2, used) is None:
            return None
        for w in g.neighbors(head):
            if used >> w & 1 or w == s2 or w == t2:
                continue
            found = extend(path + [w], used | 1 << w)
            if found is not None:
                return found
        return None

    return extend([s1], 1 << s1)


# ---------------------------------------------------------------------------
# cycles through three prescribed vertices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleObstruction:
    """A structure certifying that no cycle passes through y1, y2, y3.

    kind 'one_cut': a single 2-element cut whose removal leaves the three
    vertices in three different lobes.
    kind 'shared_vertex': three 2-element cuts that pairwise meet in one
    common vertex, each stranding its own vertex in a private lobe.
    kind 'disjoint_cuts': three pairwise disjoint 2-element cuts whose
    lobes leave a remainder of exactly two components, each holding one
    endpoint of every cut.

    ``cuts`` has one entry in the first kind, three otherwise (cuts[i]
    strands y_i); ``lobes[i]`` is the stranded vertex set around y_i, a
    union of components of g minus the corresponding cut.
    """

    kind: str
    cuts: tuple[tuple[int, ...], ...]
    lobes: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CycleThroughResult:
    cycle: tuple[int, ...] | None
    obstruction: CycleObstruction | None


def check_cycle_obstruction(g: Graph, y1: int, y2: int, y3: int,
                            ob: CycleObstruction) -> str | None:
    """Re-derive every condition of an obstruction from scratch.

    Returns None when the structure is valid, else a short description of
    the first failing condition.  Shares no state with the search.
    """
    ys = (y1, y2, y3)
    if ob.kind not in ("one_cut", "shared_vertex", "disjoint_cuts"):
        return f"unknown kind {ob.kind!r}"
    if len(ob.cuts) != (1 if ob.kind == "one_cut" else 3) or len(ob.lobes) != 3:
        return "wrong number of cuts or lobes"
    cuts = [frozenset(c) for c in ob.cuts]
    if ob.kind == "one_cut":
        cuts = cuts * 3
    lobes = [frozenset(d) for d in ob.lobes]
    for i in range(3):
        if len(cuts[i]) != 2 or not all(0 <= v < g.n for v in cuts[i]):
            return f"cut {i} is not a 2-element vertex set"
        if ys[i] not in lobes[i]:
            return f"lobe {i} misses its prescribed vertex"
        if lobes[i] & cuts[i]:
            return f"lobe {i} meets its own cut"
        # union of components of g - cut: no edge may leave the lobe
        # except into the cut
        outside = g.vertex_mask & ~mask_of(lobes[i]) & ~mask_of(cuts[i])
        for v in lobes[i]:
            if g.adj[v] & outside:
                return f"lobe {i} is not a union of components of its cut"
    for i, j in itertools.combinations(range(3), 2):
        if lobes[i] & lobes[j]:
            return f"lobes {i} and {j} overlap"
    if ob.kind == "one_cut":
        return None
    if ob.kind == "shared_vertex":
        common = cuts[0] & cuts[1] & cuts[2]
        if len(common) != 1:
            return "cuts do not share exactly one vertex"
        z = next(iter(common))
        if len((cuts[0] | cuts[1] | cuts[2]) - {z}) != 3:
            return "cut remainders are not pairwise disjoint"
        return None
    if len(cuts[0] | cuts[1] | cuts[2]) != 6:
        return "cuts are not pairwise disjoint"
    remainder = g.vertex_mask & ~mask_of(lobes[0] | lobes[1] | lobes[2])
    comp_masks = []
    seen = 0
    for v in range(g.n):
        if remainder >> v & 1 and not seen >> v & 1:
            cm = g.component_mask(v, remainder)
            comp_masks.append(cm)
            seen |= cm
    if len(comp_masks) != 2:
        return f"remainder has {len(comp_masks)} components, wanted 2"
    for cm in comp_masks:
        for i in range(3):
            if sum(1 for v in cuts[i] if cm >> v & 1) != 1:
                return "a remainder component does not split every cut"
    return None


def _find_cycle_through(g: Graph, y1: int, y2: int, y3: int) -> tuple[int, ...] | None:
    """First cycle through y1, y2, y3 in backtracking order, as a vertex
    tuple starting at y1, or None.  The cycle is assembled from a y1..y2
    segment, a y2..y3 segment, and a shortest closing y3..y1 segment."""

    def viable(used: int, a: int, b: int) -> bool:
        return _bfs_path(g, a, b, used) is not None

    def leg2(first: list[int], used: int):
        def extend(path: list[int], used: int):
            head = path[-1]
            if head == y3:
                tail = _bfs_path(g, y3, y1, used)
                if tail is not None:
                    return tuple(first + path[1:] + tail[1:-1])
                return None
            for w in g.neighbors(head):
                if used >> w & 1 or w == y1:
                    continue
                nxt = used | 1 << w
                if w != y3 and not (viable(nxt, w, y3) and viable(nxt, y3, y1)):
                    continue
                found = extend(path + [w], nxt)
                if found is not None:
                    return found
            return None

        return extend([y2], used)

    def leg1(path: list[int], used: int):
        head = path[-1]
        if head == y2:
            return leg2(path, used)
        for w in g.neighbors(head):
            if used >> w & 1 or w == y3:
                continue
            nxt = used | 1 << w
            if w != y2 and not viable(nxt, w, y2):
                continue
            if not (viable(nxt, y2, y3) and viable(nxt, y3, y1)):
                continue
            found = leg1(path + [w], nxt)
            if found is not None:
                return found
        return None

    return leg1([y1], 1 << y1)


def _separating_pairs(g: Graph, ys: tuple[int, int, int]):
    """For each y_i, every 2-set whose removal strands y_i in a component
    missing the other two prescribed vertices, with that component mask."""
    out: list[list[tuple[frozenset[int], int]]] = [[], [], []]
    for p, q in itertools.combinations(range(g.n), 2):
        if p in ys or q in ys:
            continue
        allowed = g.vertex_mask & ~(1 << p | 1 << q)
        for i, y in enumerate(ys):
            cm = g.component_mask(y, allowed)
            if cm != allowed and not any(cm >> o & 1 for o in ys if o != y):
                out[i].append((frozenset((p, q)), cm))
    return out


def _obstruction_search(g: Graph, y1: int, y2: int, y3: int) -> CycleObstruction | None:
    ys = (y1, y2, y3)
    cand = _separating_pairs(g, ys)

    def tup(mask: int) -> tuple[int, ...]:
        return tuple(sorted(bits(mask)))

    def attempt(kind, cuts, lobes) -> CycleObstruction | None:
        ob = CycleObstruction(kind,
                              tuple(tuple(sorted(c)) for c in cuts),
                              tuple(tup(m) for m in lobes))
        if check_cycle_obstruction(g, y1, y2, y3, ob) is None:
            return ob
        return None

    # one cut, three lobes
    for cut1, cm1 in cand[0]:
        for cut2, cm2 in cand[1]:
            if cut2 != cut1 or cm2 & cm1:
                continue
            for cut3, cm3 in cand[2]:
                if cut3 == cut1 and not cm3 & (cm1 | cm2):
                    found = attempt("one_cut", [cut1], [cm1, cm2, cm3])
                    if found:
                        return found

    # three cuts through a shared vertex
    for cut1, cm1 in cand[0]:
        for cut2, cm2 in cand[1]:
            shared = cut1 & cut2
            if len(shared) != 1 or cm1 & cm2:
                continue
            for cut3, cm3 in cand[2]:
                if cut3 & cut1 != shared or cut3 & cut2 != shared:
                    continue
                if cut3 in (cut1, cut2) or cm3 & (cm1 | cm2):
                    continue
                found = attempt("shared_vertex", [cut1, cut2, cut3],
                                [cm1, cm2, cm3])
                if found:
                    return found

    # three pairwise disjoint cuts
    for cut1, cm1 in cand[0]:
        for cut2, cm2 in cand[1]:
            if cut1 & cut2 or cm1 & cm2:
                continue
            for cut3, cm3 in cand[2]:
                if cut3 & (cut1 | cut2) or cm3 & (cm1 | cm2):
                    continue
                cuts = [cut1, cut2, cut3]
                lobes = [cm1, cm2, cm3]
                # grow each lobe by the prescribed-vertex-free side
                # components that would otherwise bridge the two halves
                # of its own cut through the remainder
                grown = []
                for i in range(3):
                    mask, handled = lobes[i], lobes[i]
                    allowed = g.vertex_mask & ~mask_of(cuts[i])
                    p, q = sorted(cuts[i])
                    for v in range(g.n):
                        if not allowed >> v & 1 or handled >> v & 1:
                            continue
                        cm = g.component_mask(v, allowed)
                        handled |= cm
                        if any(cm >> o & 1 for o in ys):
                            continue
                        if g.adj[p] & cm and g.adj[q] & cm:
                            mask |= cm
                    grown.append(mask)
                found = attempt("disjoint_cuts", cuts, grown)
                if found:
                    return found
    return None


def cycle_through(g: Graph, y1: int, y2: int, y3: int) -> CycleThroughResult:
    """Find a cycle through three prescribed vertices of a 2-connected
    graph, or a checkable obstruction explaining why none exists.

    Exactly one of the result fields is set.  Obstructions satisfy
    check_cycle_obstruction and certify on their own that no such cycle
    exists.
    """
    if len({y1, y2, y3}) != 3:
        raise DomainError("cycle_through requires three distinct vertices")
    for v in (y1, y2, y3):
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range")
    if not is_k_connected(g, 2):
        raise DomainError("cycle_through requires a 2-connected graph")
    cyc = _find_cycle_through(g, y1, y2, y3)
    if cyc is not None:
        return CycleThroughResult(cyc, None)
    ob = _obstruction_search(g, y1, y2, y3)
    if ob is None:
        raise DomainError(
            "no cycle and no obstruction found; this contradicts the "
            "dichotomy for 2-connected graphs")
    return CycleThroughResult(None, ob)
