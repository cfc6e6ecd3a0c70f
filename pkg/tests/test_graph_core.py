import random

import pytest

from kvedom import (
    Graph,
    InputError,
    bfs_rooted,
    closed_neighborhood,
    connected_components,
    edge_cover_set,
    feasible,
    first_violated_edge,
    gen_random_graph,
    gen_random_tree,
    induced_subgraph,
    is_chordal,
    tree_center,
    verify_kve,
)
from support import brute_force_chordal, nonisomorphic_graphs

P5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K2 = Graph(2, [(0, 1)])
K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def random_graph(rng, max_n=10):
    n = rng.randint(1, max_n)
    return gen_random_graph(n, rng.random(), rng.randrange(1 << 30))


class TestGraphType:
    def test_adjacency_sorted_and_m_derived(self):
        g = Graph(4, [(3, 1), (0, 2), (1, 0)])
        assert g.m == 3
        assert g.adj[1] == (0, 3)
        assert g.edges == ((1, 3), (0, 2), (0, 1))
        assert sum(len(a) for a in g.adj) == 2 * g.m

    def test_rejects_self_loop(self):
        with pytest.raises(InputError):
            Graph(2, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(InputError):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            Graph(2, [(0, 2)])

    def test_degenerate_graphs_are_legal(self):
        assert Graph(0, []).m == 0
        assert Graph(3, []).max_degree() == 0


class TestNeighbourhoods:
    def test_closed_neighborhood_k2(self):
        assert closed_neighborhood(K2, 0) == [0, 1]

    def test_closed_neighborhood_path_interior(self):
        assert closed_neighborhood(P5, 2) == [1, 2, 3]

    def test_closed_neighborhood_isolated(self):
        assert closed_neighborhood(Graph(1, []), 0) == [0]

    def test_closed_neighborhood_bad_vertex(self):
        with pytest.raises(InputError):
            closed_neighborhood(K2, 2)

    def test_edge_cover_set_examples(self):
        assert edge_cover_set(K2, (0, 1)) == [0, 1]
        assert edge_cover_set(P5, (0, 1)) == [0, 1, 2]
        assert edge_cover_set(P5, (1, 2)) == [0, 1, 2, 3]

    def test_edge_cover_set_rejects_non_edge(self):
        with pytest.raises(InputError):
            edge_cover_set(P5, (0, 2))

    def test_cover_is_union_of_closed_neighbourhoods(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng)
            for e in g.edges:
                u, v = e
                expect = sorted(
                    set(closed_neighborhood(g, u)) | set(closed_neighborhood(g, v))
                )
                got = edge_cover_set(g, e)
                assert got == expect
                assert len(got) >= 2


class TestVerifier:
    def test_k2_examples(self):
        assert verify_kve(K2, [0], 1) is True
        assert verify_kve(K2, [], 1) is False

    def test_p5_derived_example(self):
        # direct check of all 4 edge cover sets confirms {1,2,3} at k=2
        assert verify_kve(P5, [1, 2, 3], 2) is True

    def test_edgeless_vacuous(self):
        assert verify_kve(Graph(4, []), [], 3) is True

    def test_rejects_unsorted_set(self):
        with pytest.raises(InputError):
            verify_kve(P5, [2, 1], 1)

    def test_first_violated_edge_reports_input_order(self):
        assert first_violated_edge(P5, [2], 2) == (0, 1)

    def test_superset_monotone(self):
        rng = random.Random(11)
        for _ in range(200):
            g = random_graph(rng)
            k = rng.randint(1, 3)
            base = sorted(rng.sample(range(g.n), rng.randint(0, g.n)))
            if verify_kve(g, base, k):
                extra = sorted(set(base) | {rng.randrange(g.n)})
                assert verify_kve(g, extra, k)
                if k >= 2:
                    assert verify_kve(g, base, k - 1)

    def test_full_vertex_set_matches_feasible(self):
        rng = random.Random(13)
        for _ in range(200):
            g = random_graph(rng)
            k = rng.randint(1, 4)
            assert verify_kve(g, list(range(g.n)), k) == feasible(g, k)


class TestFeasible:
    def test_k2(self):
        assert feasible(K2, 2) is True
        assert feasible(K2, 3) is False

    def test_p5_leaf_edges_cap_at_three(self):
        # smallest cover set over the edges of P5, by enumeration
        smallest = min(len(edge_cover_set(P5, e)) for e in P5.edges)
        assert smallest == 3
        assert feasible(P5, 3) is True
        assert feasible(P5, 4) is False


class TestChordal:
    def test_complete_graph(self):
        assert is_chordal(K4) is True

    def test_four_cycle(self):
        assert is_chordal(C4) is False

    def test_against_brute_force_small(self):
        for n in range(1, 7):
            for g in nonisomorphic_graphs(n):
                assert is_chordal(g) == brute_force_chordal(g), g.edges

    def test_against_brute_force_random(self):
        rng = random.Random(5)
        for _ in range(120):
            n = rng.randint(7, 8)
            g = gen_random_graph(n, rng.uniform(0.2, 0.8), rng.randrange(1 << 30))
            assert is_chordal(g) == brute_force_chordal(g), g.edges


class TestBfsRooted:
    def test_p3_parents_and_order(self):
        t = bfs_rooted(Graph(3, [(0, 1), (1, 2)]), 0)
        assert t.parent == (-1, 0, 1)
        assert t.order[-1] == 0

    def test_star_leaves_before_center(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        t = bfs_rooted(star, 0)
        assert t.order.index(0) == 3

    def test_p5_rooted_mid(self):
        t = bfs_rooted(P5, 2)
        assert t.order[-1] == 2
        depth = t.depths()
        trail = [depth[v] for v in t.order]
        assert trail == sorted(trail, reverse=True)

    def test_depths_non_increasing_random(self):
        rng = random.Random(3)
        for _ in range(50):
            g = gen_random_tree(rng.randint(1, 40), rng.randrange(1 << 30))
            t = bfs_rooted(g, rng.randrange(g.n))
            depth = t.depths()
            trail = [depth[v] for v in t.order]
            assert trail == sorted(trail, reverse=True)

    def test_rejects_cycle(self):
        with pytest.raises(InputError):
            bfs_rooted(C4, 0)

    def test_rejects_disconnected(self):
        with pytest.raises(InputError):
            bfs_rooted(Graph(4, [(0, 1), (2, 3), (1, 2), (0, 3)][:2]), 0)


class TestGenerators:
    def test_single_vertex_tree(self):
        g = gen_random_tree(1, 12345)
        assert (g.n, g.m) == (1, 0)

    def test_trees_are_trees(self):
        rng = random.Random(1)
        for _ in range(100):
            n = rng.randint(1, 60)
            g = gen_random_tree(n, rng.randrange(1 << 30))
            assert g.m == g.n - 1
            assert len(connected_components(g)) == 1

    def test_tree_variety(self):
        shapes = {gen_random_tree(4, seed).edges for seed in range(200)}
        assert len(shapes) >= 10

    def test_edgeless_and_complete(self):
        assert gen_random_graph(5, 0.0, 9).m == 0
        g = gen_random_graph(4, 1.0, 9)
        assert g.m == 6

    def test_determinism(self):
        a = gen_random_graph(12, 0.4, 77)
        b = gen_random_graph(12, 0.4, 77)
        assert a == b
        assert gen_random_tree(9, 31) == gen_random_tree(9, 31)

    def test_bad_parameters(self):
        with pytest.raises(InputError):
            gen_random_tree(0, 1)
        with pytest.raises(InputError):
            gen_random_graph(3, 1.5, 1)


class TestComponentsAndCenter:
    def test_components(self):
        g = Graph(5, [(0, 1), (3, 4)])
        assert connected_components(g) == [[0, 1], [2], [3, 4]]

    def test_induced_subgraph_remaps(self):
        g = Graph(5, [(0, 1), (3, 4), (1, 3)])
        sub, old = induced_subgraph(g, [1, 3, 4])
        assert old == [1, 3, 4]
        assert sub.edges == ((1, 2), (0, 1))

    def test_tree_center_path(self):
        assert tree_center(P5) == 2
        p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert tree_center(p4) == 1  # two centers, smaller id wins

    def test_tree_center_star(self):
        star = Graph(6, [(0, i) for i in range(1, 6)])
        assert tree_center(star) == 0
