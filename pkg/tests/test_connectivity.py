"""Path systems, connectivity reports, and prescribed-vertex cycles."""

import itertools
import random

import networkx as nx
import pytest

import _brute as brute
from tk5kit import corpus
from tk5kit.connectivity import (
    CycleObstruction, PathSystem, check_cycle_obstruction, cycle_through,
    fan, find_separation, independent_paths, internally_disjoint,
    is_k_connected, is_kA_connected, menger, perfect_reroute,
    two_disjoint_paths,
)
from tk5kit.errors import DomainError, HypothesisError
from tk5kit.graph import Graph, bits, mask_of


def _assert_disjoint_paths(g, paths, shared=()):
    seen = set(shared)
    for p in paths:
        for u, v in zip(p, p[1:]):
            assert g.has_edge(u, v), f"missing edge {u}-{v}"
        body = [v for v in p if v not in shared]
        assert len(set(body)) == len(body)
        assert not (set(body) & seen)
        seen.update(body)


class TestMenger:
    def test_counts_match_brute_force(self):
        rng = random.Random(11)
        for _ in range(120):
            n = rng.randrange(4, 8)
            g = corpus.random_graph(n, rng.uniform(0.2, 0.9), rng)
            srcs = rng.sample(range(n), rng.randrange(1, 4))
            dsts = rng.sample(range(n), rng.randrange(1, 4))
            res = menger(g, srcs, dsts)
            assert res.count == brute.max_disjoint_paths(g, srcs, dsts)
            assert len(res.cut) == res.count
            _assert_disjoint_paths(g, res.paths)
            for p in res.paths:
                assert p[0] in srcs and p[-1] in dsts

    def test_cut_actually_separates(self):
        rng = random.Random(13)
        for _ in range(80):
            n = rng.randrange(5, 9)
            g = corpus.random_graph(n, rng.uniform(0.2, 0.8), rng)
            srcs, dsts = [0, 1], [n - 2, n - 1]
            res = menger(g, srcs, dsts)
            cut = set(res.cut)
            comps = brute.components(g, cut)
            for c in comps:
                assert not (c & set(srcs) - cut and c & set(dsts) - cut) or \
                    (set(srcs) & set(dsts) & c)
            assert not (set(srcs) & set(dsts)) - cut or res.count >= 1

    def test_one_vertex_paths(self):
        # vertex 1 is both a source and a sink; it forms a path by itself
        # and blocks the only other route, so the maximum system is 1
        g = corpus.path_graph(3)
        res = menger(g, [0, 1], [1, 2])
        assert res.count == 1
        assert res.paths == ((1,),)
        assert res.cut == (1,)

    def test_deterministic(self):
        g = corpus.petersen_graph()
        a = menger(g, [0, 1, 2], [5, 6, 7])
        b = menger(g, [0, 1, 2], [5, 6, 7])
        assert a == b


def test_fan_matches_local_cut_definition():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randrange(4, 8)
        g = corpus.random_graph(n, rng.uniform(0.25, 0.9), rng)
        v = rng.randrange(n)
        anchors = [w for w in rng.sample(range(n), rng.randrange(1, 4))
                   if w != v]
        if not anchors:
            continue
        res = fan(g, v, anchors)
        assert res.count == brute.fan_size(g, v, anchors)
        _assert_disjoint_paths(g, res.paths, shared={v})
        assert v not in res.cut
        for p in res.paths:
            assert p[0] == v and p[-1] in anchors


def test_internally_disjoint_matches_networkx():
    rng = random.Random(19)
    for _ in range(100):
        n = rng.randrange(4, 9)
        g = corpus.random_graph(n, rng.uniform(0.2, 0.9), rng)
        u, v = rng.sample(range(n), 2)
        res = internally_disjoint(g, u, v)
        G = corpus.to_networkx(g)
        assert res.count == nx.algorithms.connectivity.local_node_connectivity(
            G, u, v)
        _assert_disjoint_paths(g, res.paths, shared={u, v})


class TestConnectivityReports:
    def test_k_connected_matches_brute(self):
        rng = random.Random(23)
        graphs = corpus.atlas_connected(2, 5) + [
            corpus.random_graph(rng.randrange(3, 8), rng.uniform(0.2, 0.9), rng)
            for _ in range(60)]
        for g in graphs:
            for k in (1, 2, 3, 4):
                rep = is_k_connected(g, k)
                assert bool(rep) == brute.is_k_connected(g, k), (g.adj, k)
                if not rep and rep.cut is not None and g.n > k:
                    assert len(rep.cut) < k
                    comps = brute.components(g, set(rep.cut))
                    assert frozenset(rep.stranded) in comps
                    assert len(comps) > 1

    def test_k_connected_matches_networkx(self):
        rng = random.Random(29)
        for _ in range(40):
            g = corpus.random_graph(rng.randrange(4, 9), rng.uniform(0.3, 0.9), rng)
            kappa = nx.node_connectivity(corpus.to_networkx(g))
            for k in (1, 2, 3, 4, 5):
                assert bool(is_k_connected(g, k)) == (kappa >= k and g.n > k)

    def test_kA_connected_matches_brute(self):
        rng = random.Random(31)
        for _ in range(120):
            n = rng.randrange(4, 8)
            g = corpus.random_graph(n, rng.uniform(0.2, 0.9), rng)
            anchors = rng.sample(range(n), rng.randrange(1, n))
            for k in (2, 3, 5):
                rep = is_kA_connected(g, k, anchors)
                assert bool(rep) == brute.is_kA_connected(g, k, anchors), \
                    (g.adj, anchors, k)
                if not rep:
                    assert len(rep.cut) < k
                    assert not set(rep.stranded) & set(anchors)
                    comps = brute.components(g, set(rep.cut))
                    assert frozenset(rep.stranded) in comps

    def test_boundary_anchor_examples(self):
        g, a = corpus.icosa_minus_vertex()
        assert is_kA_connected(g, 5, a)
        # removing one ring edge opens a 4-cut around a ring vertex
        v = next(v for v in range(g.n) if v not in a)
        w = next(w for w in g.neighbors(v) if w not in a)
        assert not is_kA_connected(g.remove_edges([(v, w)]), 5, a)


class TestTwoDisjointPaths:
    def test_matches_brute(self):
        rng = random.Random(37)
        for _ in range(150):
            n = rng.randrange(4, 8)
            g = corpus.random_graph(n, rng.uniform(0.15, 0.9), rng)
            s1, t1, s2, t2 = rng.sample(range(n), 4)
            got = two_disjoint_paths(g, s1, t1, s2, t2)
            want = brute.has_two_disjoint_paths(g, s1, t1, s2, t2)
            assert (got is not None) == want
            if got:
                p1, p2 = got
                assert p1[0] == s1 and p1[-1] == t1
                assert p2[0] == s2 and p2[-1] == t2
                _assert_disjoint_paths(g, [p1, p2])

    def test_terminals_must_be_distinct(self):
        with pytest.raises(DomainError):
            two_disjoint_paths(corpus.cycle_graph(5), 0, 1, 0, 2)

    def test_crossing_pairs_on_a_cycle(self):
        c = corpus.cycle_graph(8)
        assert two_disjoint_paths(c, 0, 2, 4, 6) is not None
        assert two_disjoint_paths(c, 0, 4, 2, 6) is None


class TestCycleThrough:
    def test_requires_two_connected(self):
        with pytest.raises(DomainError):
            cycle_through(corpus.path_graph(4), 0, 1, 2)

    def test_triangle_and_complete(self):
        res = cycle_through(corpus.complete_graph(5), 0, 2, 4)
        assert res.cycle is not None and {0, 2, 4} <= set(res.cycle)

    def test_known_obstruction_kinds(self):
        cases = [
            (corpus.theta_graph(3), (2, 3, 4), "one_cut"),
            (corpus.tripod_shared_hub(), (4, 5, 6), "shared_vertex"),
            (corpus.prism_subdivided(), (6, 7, 8), "disjoint_cuts"),
        ]
        for g, ys, kind in cases:
            res = cycle_through(g, *ys)
            assert res.cycle is None
            assert res.obstruction.kind == kind
            assert check_cycle_obstruction(g, *ys, res.obstruction) is None

    def test_obstruction_checker_rejects_mutations(self):
        g = corpus.prism_subdivided()
        ob = cycle_through(g, 6, 7, 8).obstruction
        bad = CycleObstruction(ob.kind, ob.cuts, (ob.lobes[0], ob.lobes[0],
                                                  ob.lobes[2]))
        assert check_cycle_obstruction(g, 6, 7, 8, bad) is not None
        bad2 = CycleObstruction("one_cut", ob.cuts[:1], ob.lobes)
        assert check_cycle_obstruction(g, 6, 7, 8, bad2) is not None

    def test_matches_brute_on_random_graphs(self):
        rng = random.Random(41)
        checked = obstructed = 0
        while checked < 110:
            n = rng.randrange(5, 9)
            g = corpus.random_graph(n, rng.uniform(0.25, 0.7), rng)
            if not is_k_connected(g, 2):
                continue
            if checked % 2:
                # subdividing three edges and aiming at the new vertices
                # makes no-cycle instances common
                edges = list(g.edges())
                if len(edges) < 3:
                    continue
                picks = rng.sample(edges, 3)
                g = g.remove_edges(picks)
                extra = []
                for i, (u, v) in enumerate(picks):
                    mid = n + i
                    extra += [(u, mid), (mid, v)]
                g = Graph.from_edges(n + 3, list(g.edges()) + extra)
                y1, y2, y3 = n, n + 1, n + 2
            else:
                y1, y2, y3 = rng.sample(range(n), 3)
            checked += 1
            res = cycle_through(g, y1, y2, y3)
            want = brute.has_cycle_through(g, y1, y2, y3)
            assert (res.cycle is not None) == want
            if res.cycle is not None:
                cyc = res.cycle
                assert {y1, y2, y3} <= set(cyc)
                assert len(set(cyc)) == len(cyc)
                for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                    assert g.has_edge(u, v)
            else:
                obstructed += 1
                assert check_cycle_obstruction(g, y1, y2, y3,
                                               res.obstruction) is None
        assert obstructed >= 3, "sample never exercised the obstruction path"


class TestReportThreshold:
    def test_connectivity_value_is_exact(self):
        rng = random.Random(171)
        for _ in range(120):
            n = rng.randrange(2, 8)
            g = corpus.random_graph(n, rng.uniform(0.15, 0.95), rng)
            rep = is_k_connected(g, 2)
            assert rep.k == max(k for k in range(n + 1)
                                if brute.is_k_connected(g, k) or k == 0)

    def test_anchored_value_is_exact(self):
        rng = random.Random(173)
        for _ in range(120):
            n = rng.randrange(3, 8)
            g = corpus.random_graph(n, rng.uniform(0.15, 0.9), rng)
            anchors = rng.sample(range(n), rng.randrange(1, n))
            rep = is_kA_connected(g, 3, anchors)
            for k in range(n + 1):
                assert brute.is_kA_connected(g, k, anchors) == (k <= rep.k)

    def test_all_vertices_anchored_is_vacuous(self):
        g = corpus.cycle_graph(5)
        rep = is_kA_connected(g, 9, range(5))
        assert rep.satisfied and rep.k == 5


class TestIndependentPaths:
    def test_against_fan_counts(self):
        rng = random.Random(191)
        for _ in range(150):
            n = rng.randrange(4, 9)
            g = corpus.random_graph(n, rng.uniform(0.2, 0.85), rng)
            u = rng.randrange(n)
            targets = [v for v in range(n)
                       if v != u and rng.random() < 0.5]
            if not targets:
                continue
            cap = brute.fan_size(g, u, targets)
            for count in range(len(targets) + 1):
                got = independent_paths(g, u, targets, count)
                if count <= cap:
                    assert isinstance(got, PathSystem)
                    assert got.validate(g) is None
                    assert got.hub == u and len(got.paths) == count
                    ends = got.ends
                    assert len(set(ends)) == count
                    assert set(ends) <= set(targets)
                    for p in got.paths:
                        assert not set(p[1:-1]) & set(targets)
                else:
                    assert isinstance(got, tuple)
                    assert len(got) == cap and u not in got
                    comp = next(c for c in brute.components(g, set(got))
                                if u in c)
                    assert not comp & (set(targets) - set(got))

    def test_validation(self):
        g = corpus.cycle_graph(4)
        with pytest.raises(DomainError):
            independent_paths(g, 0, [0, 2], 1)
        with pytest.raises(DomainError):
            independent_paths(g, 0, [1, 2], 3)


class TestPerfectReroute:
    def test_wheel_pins_rim_anchors(self):
        w = corpus.wheel_graph(6)
        ps = perfect_reroute(w, 0, range(1, 7), [3, 5], 4)
        assert ps.validate(w) is None
        assert [p[-1] for p in ps.paths[:2]] == [3, 5]
        assert len(ps.paths) == 4 and ps.hub == 0

    def test_agrees_with_both_hypothesis_oracles(self):
        rng = random.Random(193)
        checked_ok = checked_fail = 0
        for _ in range(250):
            n = rng.randrange(5, 9)
            g = corpus.random_graph(n, rng.uniform(0.3, 0.9), rng)
            u = rng.randrange(n)
            anchors = [v for v in range(n) if v != u and rng.random() < 0.55]
            if len(anchors) < 2:
                continue
            k = rng.randrange(1, min(3, len(anchors)) + 1)
            pinned = rng.sample(anchors, k)
            want = rng.randrange(k, len(anchors) + 1)
            shaved = Graph.from_edges(
                g.n, [e for e in g.edges()
                      if not set(e) & (set(anchors) - set(pinned))])
            pin_cap = brute.fan_size(shaved, u, pinned)
            cap = brute.fan_size(g, u, anchors)
            try:
                ps = perfect_reroute(g, u, anchors, pinned, want)
            except HypothesisError:
                assert pin_cap < k or cap < want
                checked_fail += 1
                continue
            assert pin_cap >= k and cap >= want
            assert ps.validate(g) is None
            assert [p[-1] for p in ps.paths[:k]] == pinned
            assert len(set(ps.ends)) == want and set(ps.ends) <= set(anchors)
            for p in ps.paths:
                assert not set(p[1:-1]) & set(anchors)
            checked_ok += 1
        assert checked_ok > 30 and checked_fail > 30

    def test_rejects_malformed_requests(self):
        g = corpus.wheel_graph(5)
        with pytest.raises(DomainError):
            perfect_reroute(g, 0, [1, 2, 3], [4], 2)
        with pytest.raises(DomainError):
            perfect_reroute(g, 0, [1, 2], [1, 2], 1)
        with pytest.raises(DomainError):
            perfect_reroute(g, 0, [1, 2], [1], 3)


class TestFindSeparation:
    def test_minimization_matches_exhaustive_search(self):
        rng = random.Random(197)
        for _ in range(80):
            n = rng.randrange(4, 8)
            g = corpus.random_graph(n, rng.uniform(0.15, 0.7), rng)
            omax = rng.randrange(0, 4)
            must1 = rng.sample(range(n), rng.randrange(0, 3))
            must2 = rng.sample(range(n), rng.randrange(0, 3))
            for mode, side in (("side1", 1), ("side2", 2)):
                sep = find_separation(g, omax, must1, must2, minimize=mode)
                best = brute.min_separation_side(g, omax, must1, must2, side)
                if sep is None:
                    assert best is None
                    continue
                sep.validate(g)
                assert sep.order <= omax
                assert set(must1) <= sep.side1 and set(must2) <= sep.side2
                got = sep.side1 if side == 1 else sep.side2
                assert len(got) == best

    def test_first_hit_mode_agrees_on_existence(self):
        rng = random.Random(199)
        for _ in range(80):
            n = rng.randrange(4, 8)
            g = corpus.random_graph(n, rng.uniform(0.15, 0.7), rng)
            must1 = rng.sample(range(n), 2)
            must2 = rng.sample(range(n), 2)
            sep = find_separation(g, 3, must1, must2)
            best = brute.min_separation_side(g, 3, must1, must2, 1)
            assert (sep is None) == (best is None)
            if sep is not None:
                sep.validate(g)
                assert sep.order <= 3

    def test_size_guard(self):
        with pytest.raises(DomainError):
            find_separation(corpus.cycle_graph(17), 2)
        assert find_separation(corpus.cycle_graph(17), 2, max_n=17) is not None
