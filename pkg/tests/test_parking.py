import pytest

from homflytop.planegraph import build_dual
from homflytop.arborescence import build_arb_tree
from homflytop.laurent import Laurent1, Laurent2
from homflytop.parking import (
    relative_indegree,
    is_parking_function,
    enumerate_parking,
    parking_enumerator,
    parking_for_dual,
    parking_from_leaf,
    arborescence_from_parking,
    leaf_enumerator,
    tutte,
    doubled_digraph,
    tutte_doubled_identity,
    tutte_dual_identity,
)
from homflytop.fixtures import single_edge, bigon, theta, k32_three_strand


def k32_rooted():
    _, dual = k32_three_strand()
    return dual


class TestRelativeIndegree:
    def test_k32_singletons(self):
        dual = k32_rooted()
        others = [r for r in range(3) if r != dual.r0]
        for r in others:
            assert relative_indegree(dual.arcs(), {r}, r) == 2

    def test_k32_pair(self):
        dual = k32_rooted()
        others = {r for r in range(3) if r != dual.r0}
        for r in others:
            assert relative_indegree(dual.arcs(), others, r) == 1

    def test_bigon(self):
        _, dual = bigon()
        other = 1 - dual.r0
        assert relative_indegree(dual.arcs(), {other}, other) == 1

    def test_membership_required(self):
        dual = k32_rooted()
        with pytest.raises(ValueError):
            relative_indegree(dual.arcs(), {0}, 1)


class TestParkingPredicate:
    def test_k32_values(self):
        dual = k32_rooted()
        others = sorted(r for r in range(3) if r != dual.r0)
        a, b = others

        def check(x, y):
            return is_parking_function({a: x, b: y}, 3, dual.arcs(), dual.r0)

        assert check(0, 0) and check(0, 1) and check(1, 0)
        assert not check(1, 1)
        assert not check(2, 0)

    def test_empty_domain_is_vacuously_parking(self):
        _, dual = single_edge()
        assert is_parking_function({}, 1, dual.arcs(), dual.r0)

    def test_wrong_domain_rejected(self):
        dual = k32_rooted()
        with pytest.raises(ValueError):
            is_parking_function({0: 0}, 3, dual.arcs(), dual.r0)


class TestEnumeration:
    def test_single_edge(self):
        _, dual = single_edge()
        parkings, p = parking_for_dual(dual)
        assert parkings == [{}]
        assert p == 1

    def test_bigon(self):
        _, dual = bigon()
        _, p = parking_for_dual(dual)
        assert p == 1

    def test_k32(self):
        dual = k32_rooted()
        parkings, p = parking_for_dual(dual)
        assert p == Laurent1({0: 1, 1: 2}, "u")
        assert len(parkings) == 3
        assert p.eval_int(1) == 3

    def test_root_independence(self, graph_corpus):
        for g in graph_corpus[:60]:
            dual = build_dual(g, kappa_edge=0)
            values = set()
            for r0 in range(dual.n_vertices):
                kappas = [c for c in range(dual.n_edges) if dual.head[c] == r0]
                if not kappas:
                    continue
                rooted = dual.with_root(r0, kappas[0])
                _, p = parking_for_dual(rooted)
                values.add(p)
            assert len(values) == 1


class TestBijection:
    def test_k32_leaf_images(self):
        dual = k32_rooted()
        tree = build_arb_tree(dual)
        images = {}
        for leaf in tree.leaves:
            if leaf.leaf_type != "I":
                continue
            pi = parking_from_leaf(dual, leaf.a, leaf.s)
            images[leaf.a] = pi
            assert sum(pi.values()) == len(leaf.s)
        clocked = tree.type_one_leaves()[0][0]
        assert set(images[clocked].values()) == {0}
        assert sorted(tuple(sorted(v.items())) for v in images.values()) == sorted(
            tuple(sorted(v.items())) for v in enumerate_parking(3, dual.arcs(), dual.r0)
        )

    def test_round_trip_both_ways(self, graph_corpus):
        for g in graph_corpus[:60]:
            dual = build_dual(g, kappa_edge=0)
            tree = build_arb_tree(dual)
            leaf_set = set()
            for leaf in tree.leaves:
                if leaf.leaf_type != "I":
                    continue
                pi = parking_from_leaf(dual, leaf.a, leaf.s)
                assert arborescence_from_parking(dual, pi) == leaf.a
                assert sum(pi.values()) == len(leaf.s)
                leaf_set.add(leaf.a)
            parkings, p = parking_for_dual(dual)
            for pi in parkings:
                a = arborescence_from_parking(dual, pi)
                assert a in leaf_set
                leaf = next(l for l in tree.leaves if l.leaf_type == "I" and l.a == a)
                assert parking_from_leaf(dual, leaf.a, leaf.s) == pi
            assert len(parkings) == len(leaf_set)
            assert leaf_enumerator(tree) == p

    def test_non_parking_input_rejected(self):
        dual = k32_rooted()
        others = sorted(r for r in range(3) if r != dual.r0)
        with pytest.raises(ValueError):
            arborescence_from_parking(dual, {others[0]: 1, others[1]: 1})


class TestTutte:
    def test_bridge(self):
        assert tutte(2, [(0, 1)]) == Laurent2({(1, 0): 1}, ("x", "y"))

    def test_loop(self):
        assert tutte(1, [(0, 0)]) == Laurent2({(0, 1): 1}, ("x", "y"))

    def test_triangle(self):
        t = tutte(3, [(0, 1), (1, 2), (0, 2)])
        assert t == Laurent2({(2, 0): 1, (1, 0): 1, (0, 1): 1}, ("x", "y"))

    def test_three_parallel_edges(self):
        t = tutte(2, [(0, 1)] * 3)
        assert t == Laurent2({(1, 0): 1, (0, 1): 1, (0, 2): 1}, ("x", "y"))

    def test_spanning_tree_count(self):
        t = tutte(3, [(0, 1), (1, 2), (0, 2)])
        assert t.eval_int(1, 1) == 3

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            tutte(4, [(0, 1), (2, 3)])

    def test_cap(self):
        with pytest.raises(ValueError):
            tutte(2, [(0, 1)] * 11)


class TestTutteIdentities:
    def test_doubled_single_edge(self):
        assert tutte_doubled_identity(2, [(0, 1)])

    def test_doubled_triangle_value(self):
        edges = [(0, 1), (1, 2), (0, 2)]
        _, arcs = doubled_digraph(3, edges)
        p = parking_enumerator(enumerate_parking(3, arcs, 0))
        assert p == Laurent1({0: 1, 1: 2}, "u")
        assert tutte_doubled_identity(3, edges)

    def test_doubled_identity_all_roots(self):
        edges = [(0, 1), (1, 2), (0, 2), (0, 1)]
        for r0 in range(3):
            assert tutte_doubled_identity(3, edges, r0)

    def test_dual_identity_k32(self):
        dual = k32_rooted()
        assert tutte_dual_identity(dual)

    def test_dual_identity_bigon(self):
        _, dual = bigon()
        assert tutte_dual_identity(dual)

    def test_dual_identity_requires_degree_two(self):
        _, dual = theta()
        with pytest.raises(ValueError):
            tutte_dual_identity(dual)

    def test_dual_identity_on_corpus(self, graph_corpus):
        tested = 0
        for g in graph_corpus:
            degrees = {e: 0 for e in g.e_vertices}
            for e, _ in g.edges:
                degrees[e] += 1
            if any(d != 2 for d in degrees.values()):
                continue
            dual = build_dual(g, kappa_edge=0)
            assert tutte_dual_identity(dual)
            tested += 1
        assert tested > 0
