import numpy as np
import pytest

from dcmetrics import GraphBuildError, build_graph, profile, validate
from conftest import random_graph


class TestBuild:
    def test_toy_construction(self, toy):
        assert toy.n == 6
        assert toy.edge_count == 6
        assert not toy.directed
        # weighted degree of the hub
        prof = profile(toy)
        assert prof.strength_map()["B"] == 11

    def test_symmetric_lookup(self, toy):
        assert toy.weight("A", "B") == toy.weight("B", "A") == 2.0
        assert toy.weight("A", "C") == 0.0

    def test_parallel_edges_merge(self):
        g = build_graph([("A", "B", 1), ("A", "B", 1)])
        assert g.edge_count == 1
        assert g.weight("A", "B") == 2.0
        assert g.build_report.merged_edges == 1

    def test_reversed_parallel_edge_merges_undirected(self):
        g = build_graph([("A", "B", 1), ("B", "A", 2)])
        assert g.edge_count == 1
        assert g.weight("A", "B") == 3.0

    def test_reciprocal_arcs_stay_distinct_directed(self):
        g = build_graph([("A", "B", 1), ("B", "A", 2)], directed=True)
        assert g.edge_count == 2
        assert g.weight("A", "B") == 1.0
        assert g.weight("B", "A") == 2.0

    def test_self_loop_dropped(self):
        g = build_graph([("A", "A", 3), ("A", "B", 1)], directed=True)
        assert g.edge_count == 1
        assert g.build_report.self_loops_dropped == 1

    def test_rejects_non_positive_weight(self):
        with pytest.raises(GraphBuildError, match="non-positive"):
            build_graph([("A", "B", 0.0)])
        with pytest.raises(GraphBuildError, match="'A' -> 'B'"):
            build_graph([("A", "B", -2)])

    def test_rejects_empty_edge_list(self):
        with pytest.raises(GraphBuildError, match="empty edge list"):
            build_graph([])
        with pytest.raises(GraphBuildError):
            build_graph([], nodes=["A", "B"])

    def test_rejects_bad_labels(self):
        with pytest.raises(GraphBuildError):
            build_graph([("", "B", 1)])

    def test_node_order_is_first_appearance(self):
        g = build_graph([("X", "C", 1), ("A", "X", 2)])
        assert g.nodes == ("X", "C", "A")

    def test_explicit_isolates(self):
        g = build_graph([("A", "B", 1)], nodes=["Z", "A"])
        assert g.nodes == ("Z", "A", "B")
        assert g.isolates() == {"Z"}


class TestProfile:
    def test_toy_degrees(self, toy):
        prof = profile(toy)
        assert prof.degree_map() == {"A": 2, "B": 4, "C": 2, "D": 2, "E": 1, "F": 1}

    def test_toy_globals(self, toy):
        prof = profile(toy)
        assert prof.min_weight == 2.0
        assert prof.max_weight == 5.0
        assert prof.total_weight == 21.0

    def test_directed_toy(self, toy_directed):
        prof = profile(toy_directed)
        i = toy_directed.index_of("B")
        assert prof.out_degree[i] == 4
        assert prof.in_degree[i] == 1
        assert prof.total_weight == 30.0

    def test_degree_sum_is_twice_edge_count(self, toy):
        prof = profile(toy)
        assert prof.degree.sum() == 2 * toy.edge_count

    def test_directed_degree_sums_match_arcs(self, toy_directed):
        prof = profile(toy_directed)
        assert prof.out_degree.sum() == prof.in_degree.sum() == toy_directed.edge_count

    @pytest.mark.parametrize("directed", [False, True])
    def test_degree_sum_invariant_random(self, directed):
        rng = np.random.default_rng(7)
        for _ in range(10):
            g = random_graph(rng, int(rng.integers(3, 15)), directed=directed)
            prof = profile(g)
            if directed:
                assert prof.out_degree.sum() == prof.in_degree.sum() == g.edge_count
            else:
                assert prof.degree.sum() == 2 * g.edge_count
            assert prof.min_weight <= prof.max_weight
            assert prof.total_weight >= g.edge_count * prof.min_weight

    def test_build_is_edge_order_insensitive(self):
        rng = np.random.default_rng(11)
        g = random_graph(rng, 12)
        edges = list(g.edges())
        for seed in range(5):
            perm = np.random.default_rng(seed).permutation(len(edges))
            g2 = build_graph([edges[i] for i in perm])
            p1, p2 = profile(g), profile(g2)
            assert p1.degree_map() == p2.degree_map()
            assert p1.strength_map() == p2.strength_map()
            assert p1.total_weight == p2.total_weight


class TestValidate:
    def test_toy_is_clean(self, toy):
        report = validate(toy)
        assert report.ok
        assert report.flags == ()

    def test_sub_unit_weight_flagged(self):
        g = build_graph([("A", "B", 0.5), ("B", "C", 2)])
        report = validate(g)
        assert not report.ok
        assert report.sub_unit_weight_edges == (("A", "B", 0.5),)
        assert any("0.5" in f for f in report.flags)

    def test_disconnected_flagged(self):
        g = build_graph([("A", "B", 1), ("C", "D", 1)])
        report = validate(g)
        assert not report.connected
        assert any("not connected" in f for f in report.flags)

    def test_homogeneous_weights_flagged(self):
        g = build_graph([("A", "B", 3), ("B", "C", 3)])
        assert validate(g).weight_homogeneous

    def test_isolates_flagged(self):
        g = build_graph([("A", "B", 1)], nodes=["Z"])
        report = validate(g)
        assert report.isolated_nodes == ("Z",)
