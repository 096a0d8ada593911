import hashlib

import pytest

from dcmetrics import builtin_dataset, profile, rank, write_edge_list
from dcmetrics.datasets import DATASET_NAMES
from reference_values import FLORENTINE_FAMILIES, FLORENTINE_RANKS


class TestCatalog:
    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError, match="unknown dataset"):
            builtin_dataset("karate")

    def test_shapes(self):
        expect = {
            "toy-undirected": (6, 6, False),
            "toy-directed": (6, 8, True),
            "florentine": (15, 20, False),
            "zachary": (34, 78, False),
        }
        for name, (n, m, directed) in expect.items():
            g = builtin_dataset(name)
            assert (g.n, g.edge_count, g.directed) == (n, m, directed)

    def test_checksums_pinned(self):
        # constants are immutable; any edit to the embedded data trips here
        digests = {
            name: hashlib.sha256(write_edge_list(builtin_dataset(name)).encode()).hexdigest()[:16]
            for name in DATASET_NAMES
        }
        assert digests == {
            "toy-undirected": "95c956b731f6f2ae",
            "toy-directed": "a27e3d7e4b8310f9",
            "florentine": "e9d22030df8f4832",
            "zachary": "25712fa68a88f760",
        }


class TestExportedFiles:
    def test_repo_data_files_are_current(self):
        # data/ ships the datasets for external tooling; regenerate with
        # `dcmetrics datasets --export-dir data` if this trips
        from pathlib import Path

        data_dir = Path(__file__).resolve().parent.parent / "data"
        for name in DATASET_NAMES:
            path = data_dir / f"{name}.tsv"
            assert path.exists(), f"missing {path}"
            assert path.read_text(encoding="utf-8") == write_edge_list(builtin_dataset(name))


class TestToyNetworks:
    def test_weighted_degrees_match_published(self):
        prof = profile(builtin_dataset("toy-undirected"))
        assert prof.strength_map() == {"A": 7, "B": 11, "C": 7, "D": 7, "E": 5, "F": 5}

    def test_directed_toy_profile(self):
        g = builtin_dataset("toy-directed")
        prof = profile(g)
        assert prof.total_weight == 30.0
        degs = {lab: (int(prof.out_degree[i]), int(prof.in_degree[i]))
                for i, lab in enumerate(g.nodes)}
        assert degs["B"] == (4, 1)
        assert degs["E"] == (0, 1)


class TestFlorentine:
    def test_degree_ranking_matches_published(self, florentine):
        from dcmetrics import degree_centrality

        ranks = rank(degree_centrality(florentine))
        got = tuple(ranks[f] for f in FLORENTINE_FAMILIES)
        assert got == FLORENTINE_RANKS["degree"]

    def test_unweighted(self, florentine):
        assert profile(florentine).max_weight == 1.0


class TestZachary:
    def test_weight_range(self, zachary):
        prof = profile(zachary)
        assert prof.min_weight == 1.0
        assert prof.max_weight == 7.0
        assert prof.total_weight == 231.0

    def test_hubs(self, zachary):
        deg = profile(zachary).degree_map()
        assert deg["33"] == 17
        assert deg["0"] == 16
