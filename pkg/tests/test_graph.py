from __future__ import annotations

import random

import pytest

from rsplits.bitset import VertexSet
from rsplits.bruteforce import brute_cut_rank
from rsplits.graph import (
    Graph,
    cut_rank,
    format_graph,
    is_r_rank_connected,
    is_r_split,
    is_trivial_cut,
    parse_graph,
)
from rsplits.limits import TooLargeError


class TestCutRank:
    def test_rank_two_cut(self, nine_vertex_graph):
        x = VertexSet.of(9, [1, 2, 3, 4, 5])
        assert cut_rank(nine_vertex_graph, x) == 2
        assert brute_cut_rank(nine_vertex_graph, frozenset({1, 2, 3, 4, 5})) == 2

    def test_empty_and_full_sides(self, nine_vertex_graph):
        assert cut_rank(nine_vertex_graph, VertexSet.empty(9)) == 0
        assert cut_rank(nine_vertex_graph, VertexSet.full(9)) == 0

    def test_path_middle_vertex(self):
        path = Graph.from_edges(3, [(1, 2), (2, 3)])
        assert cut_rank(path, VertexSet.of(3, [2])) == 1

    def test_agrees_with_complement(self, nine_vertex_graph):
        rng = random.Random(5)
        for _ in range(50):
            x = VertexSet(9, rng.getrandbits(9))
            assert cut_rank(nine_vertex_graph, x) == cut_rank(nine_vertex_graph, x.complement())

    def test_agrees_with_dense_elimination(self):
        rng = random.Random(11)
        for _ in range(80):
            n = rng.randint(1, 8)
            edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.5]
            g = Graph.from_edges(n, edges)
            x = VertexSet(n, rng.getrandbits(n))
            assert cut_rank(g, x) == brute_cut_rank(g, frozenset(x.members()))


class TestSplitPredicates:
    def test_two_split_not_one_split(self, nine_vertex_graph):
        x = VertexSet.of(9, [1, 2, 3, 4, 5])
        assert is_r_split(nine_vertex_graph, x, 2)
        assert not is_r_split(nine_vertex_graph, x, 1)

    def test_opposite_cycle_vertices_are_a_split(self, c4):
        assert is_r_split(c4, VertexSet.of(4, [1, 3]), 1)

    def test_trivial_cut_examples(self, nine_vertex_graph):
        assert is_trivial_cut(nine_vertex_graph, VertexSet.of(9, [9]))
        assert not is_trivial_cut(nine_vertex_graph, VertexSet.of(9, [1, 2, 3, 4, 5]))
        assert is_trivial_cut(nine_vertex_graph, VertexSet.empty(9))


class TestRankConnectivity:
    def test_five_cycle_is_two_rank_connected(self, c5):
        assert is_r_rank_connected(c5, 2)

    def test_bipartite_twins_break_it(self, k33):
        assert not is_r_rank_connected(k33, 2)

    def test_connected_graphs_are_one_rank_connected(self):
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randint(2, 8)
            edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.6]
            g = Graph.from_edges(n, edges)
            if g.is_connected():
                assert is_r_rank_connected(g, 1)

    def test_disconnected_graph_fails_r1(self):
        g = Graph.from_edges(4, [(1, 2), (3, 4)])
        assert not is_r_rank_connected(g, 1)

    def test_r0_is_vacuous(self, k33):
        assert is_r_rank_connected(k33, 0)

    def test_cap_refused(self):
        g = Graph(30, tuple(0 for _ in range(30)))
        with pytest.raises(TooLargeError, match="too large for exhaustive check"):
            is_r_rank_connected(g, 1)


class TestGraphConstruction:
    def test_symmetry_enforced(self):
        with pytest.raises(ValueError):
            Graph(2, (2, 0))

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_submodularity_on_random_instances(self):
        rng = random.Random(17)
        for _ in range(150):
            n = rng.randint(1, 8)
            edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.5]
            g = Graph.from_edges(n, edges)
            x = VertexSet(n, rng.getrandbits(n))
            y = VertexSet(n, rng.getrandbits(n))
            assert cut_rank(g, x | y) + cut_rank(g, x & y) <= cut_rank(g, x) + cut_rank(g, y)


class TestGraphFormat:
    def test_round_trip(self, nine_vertex_graph):
        assert parse_graph(format_graph(nine_vertex_graph)) == nine_vertex_graph

    def test_comments_and_blank_lines(self):
        text = "# a graph\n\n3 2\n# edges follow\n1 2\n2 3\n"
        g = parse_graph(text)
        assert g.edges() == [(1, 2), (2, 3)]

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            parse_graph("2 2\n1 2\n1 2\n")

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            parse_graph("2 1\n1 1\n")

    def test_rejects_unordered_edge(self):
        with pytest.raises(ValueError):
            parse_graph("3 1\n3 2\n")

    def test_rejects_wrong_edge_count(self):
        with pytest.raises(ValueError, match="promises"):
            parse_graph("3 2\n1 2\n")
