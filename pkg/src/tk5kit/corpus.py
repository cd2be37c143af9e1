"""Named graphs and seeded instance generators.

Everything here is deterministic: generators take an explicit seed and the
named constructors are fixed.  The generators are used by the test suite,
the demo scripts, and the corpus subcommands of the CLI.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

import networkx as nx

from .graph import Graph, bits, mask_of

# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------

def from_networkx(G) -> Graph:
    """Relabel an arbitrary networkx graph onto dense ids 0..n-1."""
    nodes = list(G.nodes())
    try:
        nodes.sort()
    except TypeError:
        nodes.sort(key=str)
    pos = {u: i for i, u in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in G.edges()])


def to_networkx(g: Graph):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a rim cycle 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid_graph(rows: int, cols: int) -> Graph:
    def vid(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph.from_edges(rows * cols, edges)


def petersen_graph() -> Graph:
    return from_networkx(nx.petersen_graph())


def octahedron_graph() -> Graph:
    return from_networkx(nx.octahedral_graph())


def icosahedron_graph() -> Graph:
    return from_networkx(nx.icosahedral_graph())


def cuboctahedron_graph() -> Graph:
    # the line graph of the 3-cube: 12 vertices, 4-regular, each edge in
    # exactly one triangle (so no subgraph K4 minus an edge)
    return from_networkx(nx.line_graph(nx.hypercube_graph(3)))


def diamond_graph() -> Graph:
    """K4 minus one edge (two triangles sharing an edge)."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def theta_graph(paths: int = 3) -> Graph:
    """Two hubs 0,1 joined by ``paths`` internally disjoint length-2 paths."""
    edges = []
    for i in range(paths):
        mid = 2 + i
        edges += [(0, mid), (mid, 1)]
    return Graph.from_edges(2 + paths, edges)


def prism_subdivided() -> Graph:
    """Triangular prism with all three vertical edges subdivided.

    Vertices: triangle 0,1,2; triangle 3,4,5; subdivision vertices 6,7,8
    with 6 on 0-3, 7 on 1-4, 8 on 2-5.  No cycle passes through all of
    6,7,8 (any such cycle would cross between the triangles an odd number
    of times).
    """
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
             (0, 6), (6, 3), (1, 7), (7, 4), (2, 8), (8, 5)]
    return Graph.from_edges(9, edges)


def tripod_shared_hub() -> Graph:
    """Hub 0 adjacent to rim 1,2,3 (triangle) and to pendants 4,5,6 with
    pendant i+3 also adjacent to rim vertex i.  No cycle through 4,5,6."""
    edges = [(1, 2), (2, 3), (1, 3)]
    edges += [(0, 1), (0, 2), (0, 3)]
    edges += [(0, 4), (4, 1), (0, 5), (5, 2), (0, 6), (6, 3)]
    return Graph.from_edges(7, edges)


def rooted_tree_h() -> Graph:
    """The 6-vertex tree with two adjacent degree-3 vertices 0,1 and
    leaves 2,3 (under 0) and 4,5 (under 1)."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def two_star_graph() -> Graph:
    """Stars from 0 and 1 onto the shared leaves 2,3,4,5 (no 0-1 edge)."""
    return Graph.from_edges(6, [(0, i) for i in range(2, 6)] +
                            [(1, i) for i in range(2, 6)])


def icosa_minus_vertex() -> tuple[Graph, tuple[int, ...]]:
    """Icosahedron minus one vertex, with the exposed 5-cycle as boundary.

    This is the smallest graph that is planar with a 5-element boundary set
    on one face while no cut of fewer than five vertices strands a
    boundary-free component.
    """
    ico = icosahedron_graph()
    drop = 0
    ring = ico.neighbors(drop)
    keep = [v for v in range(ico.n) if v != drop]
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in ico.edges() if u != drop and v != drop]
    g = Graph.from_edges(11, edges)
    return g, tuple(sorted(pos[v] for v in ring))


def pentagonal_drum() -> tuple[Graph, tuple[int, ...]]:
    """Boundary 5-cycle, two stacked antiprism rings, and a cap (n=16)."""
    a = list(range(5))           # boundary
    y = list(range(5, 10))       # first ring
    z = list(range(10, 15))      # second ring
    w = 15                       # cap
    edges = []
    for i in range(5):
        edges += [(a[i], a[(i + 1) % 5]), (y[i], y[(i + 1) % 5]),
                  (z[i], z[(i + 1) % 5])]
        edges += [(y[i], a[i]), (y[i], a[(i + 1) % 5])]
        edges += [(z[i], y[i]), (z[i], y[(i + 1) % 5])]
        edges += [(w, z[i])]
    return Graph.from_edges(16, edges), tuple(a)


# ---------------------------------------------------------------------------
# atlas and random graphs
# ---------------------------------------------------------------------------

_ATLAS_CACHE: list[Graph] | None = None


def atlas_connected(min_n: int = 1, max_n: int = 7) -> list[Graph]:
    """Every connected graph with at most seven vertices, one per
    isomorphism class (exhaustive catalog)."""
    global _ATLAS_CACHE
    if _ATLAS_CACHE is None:
        out = []
        for G in nx.graph_atlas_g()[1:]:
            if G.number_of_nodes() > 0 and nx.is_connected(G):
                out.append(from_networkx(G))
        _ATLAS_CACHE = out
    return [g for g in _ATLAS_CACHE if min_n <= g.n <= max_n]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random,
                           tries: int = 200) -> Graph:
    for _ in range(tries):
        g = random_graph(n, p, rng)
        if g.is_connected():
            return g
    # fall back: thread a random spanning path through a sparse draw
    g = random_graph(n, p, rng)
    order = list(range(n))
    rng.shuffle(order)
    return g.add_edges([(order[i], order[i + 1]) for i in range(n - 1)])


def random_planar_connected(n: int, rng: random.Random) -> Graph:
    """Random connected planar graph grown by filtered edge insertion."""
    g = path_graph(n)
    pairs = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if not g.has_edge(u, v)]
    rng.shuffle(pairs)
    G = to_networkx(g)
    for u, v in pairs:
        if rng.random() < 0.6:
            G.add_edge(u, v)
            if not nx.check_planarity(G)[0]:
                G.remove_edge(u, v)
    return from_networkx(G)


def k5_subdivision(extra: int, rng: random.Random) -> Graph:
    """Subdivide random edges of K5 with ``extra`` new vertices total."""
    edges = {(u, v) for u, v in itertools.combinations(range(5), 2)}
    n = 5
    for _ in range(extra):
        u, v = rng.choice(sorted(edges))
        edges.remove((u, v))
        edges.add((min(u, n), max(u, n)))
        edges.add((min(v, n), max(v, n)))
        n += 1
    return Graph.from_edges(n, sorted(edges))


# ---------------------------------------------------------------------------
# filtered instance streams (lazy imports keep this module below the
# algorithm modules in the dependency order)
# ---------------------------------------------------------------------------

def boundary_five_instances(count: int, seed: int = 0) -> list[tuple[Graph, tuple[int, ...]]]:
    """Planar graphs with a 5-element boundary set on a common face such
    that every cut of fewer than 5 vertices leaves only boundary-touching
    components.  Grown from the icosahedron-minus-vertex base by random
    diagonal flips, filtered back through the hypothesis oracles."""
    from .connectivity import is_kA_connected
    from .planarity import plane_with_boundary

    base, a_set = icosa_minus_vertex()
    rng = random.Random(seed)
    amask = mask_of(a_set)
    out = [(base, a_set)]
    seen = {base.adj}
    attempts = 0
    while len(out) < count and attempts < count * 60:
        attempts += 1
        g = out[rng.randrange(len(out))][0]
        flips = rng.randrange(1, 4)
        ok = True
        for _ in range(flips):
            cand = [(u, v) for u, v in g.edges()
                    if not (amask >> u & 1 and amask >> v & 1)]
            rng.shuffle(cand)
            flipped = None
            for u, v in cand:
                common = [w for w in bits(g.adj[u] & g.adj[v])]
                if len(common) != 2:
                    continue
                w1, w2 = common
                if g.has_edge(w1, w2):
                    continue
                flipped = g.remove_edges([(u, v)]).add_edges([(w1, w2)])
                break
            if flipped is None:
                ok = False
                break
            g = flipped
        if not ok or g.adj in seen:
            continue
        if any(g.degree(v) < 5 for v in range(g.n) if not amask >> v & 1):
            continue
        if plane_with_boundary(g, a_set) is None:
            continue
        if not is_kA_connected(g, 5, a_set).satisfied:
            continue
        seen.add(g.adj)
        out.append((g, a_set))
    return out[:count]


def quadruple_samples(count: int, seed: int = 0) -> Iterator[tuple[Graph, int, int, frozenset[int]]]:
    """Random (g, u1, u2, A) quadruples on at most 8 vertices."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randrange(6, 9)
        g = random_graph(n, rng.uniform(0.2, 0.85), rng)
        ids = rng.sample(range(n), 6)
        yield g, ids[0], ids[1], frozenset(ids[2:])


def linkage_samples(count: int, seed: int = 0) -> Iterator[tuple[Graph, int, int, int, int]]:
    """Random instances passing the (4, {s1,s2,t1,t2})-connectivity filter."""
    from .connectivity import is_kA_connected
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randrange(6, 10)
        g = random_graph(n, rng.uniform(0.35, 0.9), rng)
        s1, s2, t1, t2 = rng.sample(range(n), 4)
        if not is_kA_connected(g, 4, (s1, s2, t1, t2)).satisfied:
            continue
        produced += 1
        yield g, s1, s2, t1, t2


def two_connected_triples(count: int, seed: int = 0) -> Iterator[tuple[Graph, int, int, int]]:
    """Random 2-connected graphs with a distinguished vertex triple."""
    from .connectivity import is_k_connected
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randrange(5, 10)
        g = random_graph(n, rng.uniform(0.25, 0.8), rng)
        if not is_k_connected(g, 2).satisfied:
            continue
        y1, y2, y3 = rng.sample(range(n), 3)
        produced += 1
        yield g, y1, y2, y3


# ---------------------------------------------------------------------------
# separation instances for the theorem verifiers
# ---------------------------------------------------------------------------

def _boost_min_degree(adj: list[int], flexible: list[int], floor: int,
                      rng: random.Random) -> None:
    """Add edges among ``flexible`` vertices until each has degree >= floor."""
    for v in flexible:
        others = [w for w in flexible if w != v and not adj[v] >> w & 1]
        rng.shuffle(others)
        while adj[v].bit_count() < floor and others:
            w = others.pop()
            adj[v] |= 1 << w
            adj[w] |= 1 << v


def _planar_side_graph(boundary: list[int], interior: list[int],
                       rng: random.Random) -> list[tuple[int, int]]:
    """Random planar graph on boundary+interior with the boundary on one
    face: grown from a template by oracle-filtered edge insertion."""
    from .planarity import plane_with_boundary
    verts = boundary + interior
    pos = {v: i for i, v in enumerate(verts)}
    nb, ni = len(boundary), len(interior)
    edges = set()
    # template: boundary cycle with interior path threaded inside
    for i in range(nb):
        edges.add((min(i, (i + 1) % nb), max(i, (i + 1) % nb)))
    for i in range(ni - 1):
        edges.add((nb + i, nb + i + 1))
    for i in range(ni):
        edges.add((i % nb, nb + i))
        edges.add(((i + 1) % nb, nb + i))
    cand = [(u, v) for u, v in itertools.combinations(range(nb + ni), 2)
            if (u, v) not in edges]
    rng.shuffle(cand)
    g = Graph.from_edges(nb + ni, sorted(edges))
    for u, v in cand:
        if rng.random() > 0.7:
            continue
        g2 = g.add_edges([(u, v)])
        if plane_with_boundary(g2, range(nb)) is not None:
            g = g2
    return [(verts[u], verts[v]) for u, v in g.edges()]


def separation_instances(kind: str, count: int, seed: int = 0,
                         n_max: int = 14) -> list[dict]:
    """Instances for the separation-based theorem verifiers.

    kind='apex_side': 5-connected nonplanar g with a 5-separation, a in the
    cut, side 2 minus a planar with the rest of the cut on one face.
    kind='triangle_cut': 5-connected nonplanar g with a 5-separation whose
    cut induces a triangle a,a1,a2.
    Both plant two triangles on a shared edge inside side 1 so that a
    certificate search always terminates quickly.
    """
    from .connectivity import is_k_connected
    from .planarity import embed_planar

    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < count * 120:
        attempts += 1
        k1 = rng.randrange(2, max(3, n_max - 9))
        k2 = rng.randrange(2, 5)
        n = 5 + k1 + k2
        if n > n_max:
            continue
        cut = list(range(5))
        int1 = list(range(5, 5 + k1))
        int2 = list(range(5 + k1, n))
        a = 0
        adj = [0] * n
        def add(u, v):
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        # side 2
        if kind == "apex_side":
            for u, v in _planar_side_graph([1, 2, 3, 4], int2, rng):
                add(u, v)
            for v in int2:
                add(a, v)      # apex edges keep side-2 interior degrees up
        else:
            for u, v in itertools.combinations([1, 2, 3, 4] + int2, 2):
                if rng.random() < 0.8:
                    add(u, v)
            for v in int2:
                if rng.random() < 0.8:
                    add(a, v)
            add(0, 1), add(0, 2), add(1, 2)   # the triangle a,a1,a2
        # side 1: dense random with a planted double triangle
        for u, v in itertools.combinations(cut + int1, 2):
            if rng.random() < 0.72:
                add(u, v)
        p, q = int1[0], int1[1]
        for u, v in [(p, q), (p, 1), (q, 1), (p, 2), (q, 2)]:
            add(u, v)
        _boost_min_degree(adj, cut + int1, 5, rng)
        if any(adj[v].bit_count() < 5 for v in range(n)):
            continue
        # side-2 interior must not see side-1 interior
        m1, m2 = mask_of(int1), mask_of(int2)
        if any(adj[v] & m2 for v in int1):
            continue
        g = Graph(tuple(adj))
        if not is_k_connected(g, 5).satisfied:
            continue
        if embed_planar(g).embedding is not None:
            continue
        inst = {
            "graph": g,
            "side1": frozenset(cut + int1),
            "side2": frozenset(cut + int2),
            "a": a,
        }
        if kind == "triangle_cut":
            inst["a1"], inst["a2"] = 1, 2
            us = [v for v in bits(g.adj[a]) if v not in (1, 2)][:3]
            if len(us) < 3:
                continue
            inst["u"] = tuple(us)
        out.append(inst)
    return out


def gadget_side_instances(count: int, seed: int = 0) -> list[dict]:
    """Graphs built by gluing the 9-vertex gadget onto a dense attachment,
    filtered to be 5-connected and nonplanar."""
    from .connectivity import is_k_connected
    from .planarity import embed_planar
    from .tk5 import build_gadget

    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < count * 80:
        attempts += 1
        k1 = rng.randrange(2, 6)
        side1 = Graph.from_edges(
            5 + k1,
            [(u, v) for u, v in itertools.combinations(range(5 + k1), 2)
             if rng.random() < 0.82])
        adj = list(side1.adj)
        _boost_min_degree(adj, list(range(5 + k1)), 6, rng)
        side1 = Graph(tuple(adj))
        built = build_gadget(side1, {"a": 0, "a1": 1, "a2": 2, "a3": 3, "a4": 4})
        g = built.graph
        if any(g.degree(v) < 5 for v in range(g.n)):
            continue
        if not is_k_connected(g, 5).satisfied:
            continue
        if embed_planar(g).embedding is not None:
            continue
        out.append({"graph": g, "spec": built.spec, "side1_n": side1.n})
    return out


def gadget_bipartite_instance() -> dict:
    """Gadget glued to a K4-minus-free attachment: cut {a,a1..a4}, interior
    y1,y2,y3 adjacent to a and to every a_i.  The resulting graph is
    5-connected, nonplanar, and has no K4-minus in g - a, so only the
    gadget-separation outcome of the apex-side theorem can fire."""
    from .tk5 import build_gadget
    side1 = Graph.from_edges(
        8,
        [(0, i) for i in (1, 2, 3, 4)] +
        [(i, j) for i in (1, 2, 3, 4) for j in (5, 6, 7)] +
        [(0, j) for j in (5, 6, 7)])
    built = build_gadget(side1, {"a": 0, "a1": 1, "a2": 2, "a3": 3, "a4": 4})
    return {"graph": built.graph, "spec": built.spec, "side1_n": side1.n}
