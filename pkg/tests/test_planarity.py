"""Embeddings, subdivision witnesses, and boundary-constrained planarity."""

import random

import networkx as nx
import pytest

import _brute as brute
from tk5kit import corpus
from tk5kit.errors import DomainError, HypothesisError
from tk5kit.planarity import (
    KuratowskiWitness, check_subdivision_witness, cofacial_cycle,
    embed_planar, plane_in_cyclic_order, plane_with_boundary, two_linkage,
)


def test_euler_formula_on_atlas():
    for g in corpus.atlas_connected(2, 7)[::5]:
        rep = embed_planar(g)
        if rep.planar:
            assert g.n - g.m + len(rep.embedding.faces) == 2
            assert sum(len(f) for f in rep.embedding.faces) == 2 * g.m


def test_agreement_with_backend_on_random_graphs():
    rng = random.Random(5)
    for _ in range(120):
        n = rng.randrange(3, 10)
        g = corpus.random_graph(n, rng.uniform(0.2, 0.8), rng)
        rep = embed_planar(g)
        assert rep.planar == nx.check_planarity(corpus.to_networkx(g))[0]
        assert rep.planar == (rep.witness is None)


def test_face_walks_use_real_edges():
    g = corpus.icosahedron_graph()
    emb = embed_planar(g).embedding
    assert len(emb.faces) == 20
    for face in emb.faces:
        assert len(face) == 3
        for u, v in zip(face, face[1:] + face[:1]):
            assert g.has_edge(u, v)
    assert len(emb.faces_at(0)) == g.degree(0)


def test_bridge_counts_twice_in_face_walk():
    g = corpus.path_graph(3)
    emb = embed_planar(g).embedding
    assert len(emb.faces) == 1
    assert len(emb.faces[0]) == 4


class TestWitnesses:
    @pytest.mark.parametrize("build,kind", [
        (lambda: corpus.complete_graph(5), "tk5"),
        (lambda: corpus.complete_bipartite(3, 3), "tk33"),
        (lambda: corpus.petersen_graph(), "tk33"),
    ])
    def test_witness_kinds(self, build, kind):
        g = build()
        rep = embed_planar(g)
        assert not rep.planar
        assert rep.witness.kind == kind
        assert check_subdivision_witness(g, rep.witness) is None

    def test_witnesses_on_random_nonplanar(self):
        rng = random.Random(59)
        found = 0
        while found < 40:
            g = corpus.random_graph(rng.randrange(6, 11),
                                    rng.uniform(0.4, 0.8), rng)
            rep = embed_planar(g)
            if rep.planar:
                continue
            found += 1
            assert check_subdivision_witness(g, rep.witness) is None
            sizes = {"tk5": 5, "tk33": 6}
            assert len(rep.witness.branch) == sizes[rep.witness.kind]
            assert len(rep.witness.paths) == {"tk5": 10, "tk33": 9}[rep.witness.kind]

    def test_checker_rejects_mutations(self):
        g = corpus.complete_graph(5)
        w = embed_planar(g).witness
        assert check_subdivision_witness(g, KuratowskiWitness(
            "tk33", w.branch, w.paths)) is not None
        assert check_subdivision_witness(g, KuratowskiWitness(
            w.kind, w.branch, w.paths[:-1])) is not None
        assert check_subdivision_witness(g, KuratowskiWitness(
            w.kind, w.branch, w.paths[:-1] + ((9, 9),))) is not None
        dup = w.paths + (w.paths[0],)
        assert check_subdivision_witness(g, KuratowskiWitness(
            w.kind, w.branch, dup)) is not None


class TestPlaneWithBoundary:
    def test_against_apex_oracle(self):
        rng = random.Random(61)
        for _ in range(100):
            n = rng.randrange(4, 9)
            g = corpus.random_connected_graph(n, rng.uniform(0.25, 0.7), rng)
            boundary = rng.sample(range(n), rng.randrange(2, min(n, 6)))
            got = plane_with_boundary(g, boundary)
            assert (got is not None) == brute.is_planar_with_all_on_face(
                g, boundary)
            if got is not None:
                assert set(boundary) <= set(got.outer_walk)
                walk = got.outer_walk
                for u, v in zip(walk, walk[1:] + walk[:1]):
                    assert g.has_edge(u, v)

    def test_wheel_rim_yes_hub_no(self):
        w = corpus.wheel_graph(5)
        assert plane_with_boundary(w, range(1, 6)) is not None
        assert plane_with_boundary(w, range(6)) is None

    def test_chorded_hexagon_keeps_all_six_reachable(self):
        # the chord can be drawn outside the hexagon, so one face still
        # carries all six vertices
        g = corpus.cycle_graph(6).add_edges([(0, 3)])
        res = plane_with_boundary(g, range(6))
        assert res is not None
        assert set(res.outer_walk) == set(range(6))

    def test_two_crossing_chords_block_the_boundary(self):
        g = corpus.cycle_graph(6).add_edges([(0, 3), (1, 4)])
        assert plane_with_boundary(g, range(6)) is None

    def test_boundary_corpus_instances(self):
        g, a = corpus.icosa_minus_vertex()
        res = plane_with_boundary(g, a)
        assert res is not None and set(a) <= set(res.outer_walk)
        drum, da = corpus.pentagonal_drum()
        assert plane_with_boundary(drum, da) is not None
        assert plane_with_boundary(corpus.complete_graph(5), [0, 1]) is None

    def test_validation(self):
        g = corpus.cycle_graph(4)
        with pytest.raises(DomainError):
            plane_with_boundary(g, [0, 0])
        with pytest.raises(DomainError):
            plane_with_boundary(g, [7])
        with pytest.raises(DomainError):
            plane_with_boundary(Graph_from_two_parts(), [0, 1])


def Graph_from_two_parts():
    from tk5kit.graph import Graph
    return Graph.from_edges(4, [(0, 1), (2, 3)])


class TestPlaneInCyclicOrder:
    def test_square_orders(self):
        c4 = corpus.cycle_graph(4)
        assert plane_in_cyclic_order(c4, [0, 1, 2, 3]) is not None
        assert plane_in_cyclic_order(c4, [0, 2, 1, 3]) is None

    def test_reflection_is_allowed(self):
        c5 = corpus.cycle_graph(5)
        assert plane_in_cyclic_order(c5, [0, 4, 3, 2, 1]) is not None

    def test_hexagon_with_chord(self):
        g = corpus.cycle_graph(6).add_edges([(0, 3)])
        assert plane_in_cyclic_order(g, [0, 1, 2, 3]) is not None
        # drawing the chord outside keeps 1,2,4,5 on one face in ring order
        assert plane_in_cyclic_order(g, [1, 2, 4, 5]) is not None
        # but no embedding interleaves the two sides of the chord
        assert plane_in_cyclic_order(g, [1, 4, 2, 5]) is None

    def test_matches_boundary_test_when_order_free(self):
        # if some cyclic order works, the unordered boundary test must too
        rng = random.Random(67)
        import itertools as it
        for _ in range(40):
            n = rng.randrange(4, 8)
            g = corpus.random_connected_graph(n, rng.uniform(0.3, 0.7), rng)
            pts = rng.sample(range(n), 4)
            orders = set()
            any_order = False
            for perm in it.permutations(pts[1:]):
                order = [pts[0], *perm]
                if plane_in_cyclic_order(g, order) is not None:
                    any_order = True
            assert any_order == (plane_with_boundary(g, pts) is not None)


class TestTwoLinkage:
    def test_k4_is_linked_by_edges(self):
        v = two_linkage(corpus.complete_graph(4), 0, 1, 2, 3)
        assert v.kind == "linked" and v.embedding is None
        p1, p2 = v.paths
        assert p1 == (0, 2) and p2 == (1, 3)

    def test_square_blocks_the_crossing_pair(self):
        # terminals in ring order: each demand path would use up the ring
        v = two_linkage(corpus.cycle_graph(4), 0, 1, 2, 3)
        assert v.kind == "planar_in_order" and v.paths is None
        walk = v.embedding.outer_walk
        assert set(walk) == {0, 1, 2, 3}

    def test_grid_corners_fail_the_connectivity_hypothesis(self):
        # degree-3 edge midpoints are separated from the corner terminals
        # by their three neighbours, so the dichotomy hypothesis fails even
        # though both of its branches still happen to be decidable
        g = corpus.grid_graph(3, 3)
        with pytest.raises(HypothesisError) as info:
            two_linkage(g, 0, 2, 8, 6)
        assert len(info.value.witness) <= 3
        assert not brute.has_two_disjoint_paths(g, 0, 8, 2, 6)
        assert plane_in_cyclic_order(g, [0, 2, 8, 6]) is not None

    def test_dichotomy_is_exclusive_on_filtered_samples(self):
        for g, s1, s2, t1, t2 in corpus.linkage_samples(120, seed=41):
            v = two_linkage(g, s1, s2, t1, t2)
            linked = brute.has_two_disjoint_paths(g, s1, t1, s2, t2)
            planar = plane_in_cyclic_order(g, [s1, s2, t1, t2]) is not None
            assert linked != planar
            assert v.kind == ("linked" if linked else "planar_in_order")
            if v.kind == "linked":
                pa, pb = v.paths
                assert pa[0] == s1 and pa[-1] == t1
                assert pb[0] == s2 and pb[-1] == t2
                assert not set(pa) & set(pb)

    def test_terminals_must_be_distinct(self):
        with pytest.raises(DomainError):
            two_linkage(corpus.complete_graph(5), 0, 1, 2, 2)


class TestCofacialCycle:
    def test_wheel_hub_sees_the_rim(self):
        emb = embed_planar(corpus.wheel_graph(5)).embedding
        cyc = cofacial_cycle(emb, 0)
        assert cyc is not None and set(cyc) == set(range(1, 6))
        assert len(cyc) == 5

    def test_octahedron_link_is_a_square(self):
        g = corpus.octahedron_graph()
        emb = embed_planar(g).embedding
        for w in range(6):
            cyc = cofacial_cycle(emb, w)
            assert cyc is not None and len(cyc) == 4
            assert set(cyc) == set(range(6)) - {w} - \
                {next(v for v in range(6) if not g.has_edge(w, v) and v != w)}

    def test_grid_centre_sees_all_eight(self):
        emb = embed_planar(corpus.grid_graph(3, 3)).embedding
        cyc = cofacial_cycle(emb, 4)
        assert cyc is not None and len(cyc) == 8
        assert set(cyc) == set(range(9)) - {4}

    def test_chorded_rim_is_not_a_cycle(self):
        g = corpus.wheel_graph(5).add_edges([(1, 3)])
        emb = embed_planar(g).embedding
        assert cofacial_cycle(emb, 0) is None

    def test_outer_vertices_are_rejected(self):
        g = corpus.grid_graph(3, 3)
        emb = plane_with_boundary(g, [0, 2, 8, 6])
        assert cofacial_cycle(emb, 4) is not None
        with pytest.raises(DomainError):
            cofacial_cycle(emb, 0)
