import json

import pytest

from dcmetrics.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_toy_csv_b_row(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--dataset", "toy-undirected",
            "--metrics", "d1,d2,d3,d4,d5", "--alpha", "1",
        )
        assert code == 0
        row = next(line for line in out.splitlines() if line.startswith("B,"))
        cells = [f"{float(x):.3f}" for x in row.split(",")[1:]]
        assert cells == ["5.882", "1.893", "9.876", "6.714", "2.500"]

    def test_json_and_csv_agree(self, capsys, tmp_path):
        args = ["compute", "--dataset", "toy-undirected", "--metrics", "d1", "--alpha", "2"]
        code, csv_out, _ = run(capsys, *args, "--format", "csv")
        assert code == 0
        code, json_out, _ = run(capsys, *args, "--format", "json")
        assert code == 0
        payload = json.loads(json_out)
        b_index = payload["nodes"].index("B")
        csv_b = float(next(l for l in csv_out.splitlines() if l.startswith("B,")).split(",")[1])
        assert csv_b == pytest.approx(payload["columns"][0]["values"][b_index], rel=1e-5)

    def test_directed_defaults_to_both_directions(self, capsys):
        code, out, _ = run(capsys, "compute", "--dataset", "toy-directed", "--metrics", "d1")
        assert code == 0
        header = out.splitlines()[0]
        assert "d1-in@1" in header and "d1-out@1" in header

    def test_normalize(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--dataset", "toy-undirected",
            "--metrics", "d5", "--alpha", "1", "--normalize",
        )
        assert code == 0
        assert "d5@1:norm" in out.splitlines()[0]
        b = float(next(l for l in out.splitlines() if l.startswith("B,")).split(",")[1])
        assert b == pytest.approx(0.479, abs=5e-4)

    def test_normalize_baselines_is_data_error(self, capsys):
        code, _, err = run(
            capsys, "compute", "--dataset", "toy-undirected",
            "--metrics", "degree", "--normalize",
        )
        assert code == 1
        assert "normalize" in err

    def test_baselines_group(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--dataset", "toy-undirected", "--metrics", "baselines",
        )
        assert code == 0
        header = out.splitlines()[0]
        for name in ("degree", "closeness", "betweenness", "eigenvector", "constraint", "effective-size"):
            assert name in header

    def test_missing_file_is_exit_1(self, capsys, tmp_path):
        code, _, err = run(capsys, "compute", "--input", str(tmp_path / "nope.tsv"), "--metrics", "d1")
        assert code == 1
        assert "nope.tsv" in err

    def test_usage_error_is_exit_2(self, capsys):
        assert run(capsys, "compute", "--metrics", "d1")[0] == 2  # no input source
        assert run(capsys, "nonsense")[0] == 2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "scores.csv"
        code, out, _ = run(
            capsys, "compute", "--dataset", "toy-undirected", "--metrics", "d1",
            "-o", str(target),
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("node,d1@1")

    def test_gexf_input(self, capsys, tmp_path):
        gexf = tmp_path / "g.gexf"
        gexf.write_text(
            '<gexf><graph defaultedgetype="undirected">'
            '<nodes><node id="a"/><node id="b"/><node id="c"/></nodes>'
            '<edges><edge source="a" target="b" weight="2"/>'
            '<edge source="b" target="c"/></edges></graph></gexf>'
        )
        code, out, _ = run(capsys, "compute", "--input", str(gexf), "--metrics", "d1")
        assert code == 0
        assert out.startswith("node,d1@1")


class TestDirectedExplicitness:
    def test_rank_requires_direction_on_directed(self, capsys):
        code, _, err = run(capsys, "rank", "--dataset", "toy-directed", "--metric", "d1")
        assert code == 1
        assert "--direction" in err

    def test_rank_with_explicit_direction(self, capsys):
        code, out, _ = run(
            capsys, "rank", "--dataset", "toy-directed", "--metric", "d1",
            "--direction", "out",
        )
        assert code == 0
        assert out.splitlines()[1].startswith("1,A,")  # A tops the out ranking

    def test_relaxed_alpha_flag(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--dataset", "toy-undirected", "--metrics", "d1",
            "--alpha", "0.5", "--relaxed-alpha",
        )
        assert code == 0
        assert out.splitlines()[0] == "node,d1@0.5"


class TestBounds:
    def test_d5_example(self, capsys):
        code, out, _ = run(capsys, "bounds", "--metric", "d5", "--n", "6", "--alpha", "1")
        assert code == 0
        assert out.strip() == "lower=0.2 upper=5"

    def test_invalid_params_exit_1(self, capsys):
        code, _, err = run(capsys, "bounds", "--metric", "d1", "--n", "1")
        assert code == 1
        assert "n must be" in err


class TestRank:
    def test_competition(self, capsys):
        code, out, _ = run(
            capsys, "rank", "--dataset", "toy-undirected", "--metric", "degree",
            "--tie-rule", "competition",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "rank,node,score"
        assert lines[1].startswith("1,B,")
        # A, C, D tie at rank 2; E and F at 5
        assert {l.split(",")[0] for l in lines[2:5]} == {"2"}
        assert {l.split(",")[0] for l in lines[5:]} == {"5"}


class TestCompare:
    def test_matrix_symmetric_unit_diagonal(self, capsys):
        code, out, _ = run(
            capsys, "compare", "--dataset", "zachary",
            "--metrics", "d1,degree", "--alpha", "1", "--weighted",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "metric,d1,weighted-degree"
        first = lines[1].split(",")
        assert first[0] == "d1"
        assert float(first[1]) == 1.0
        assert float(first[2]) == pytest.approx(0.974, abs=0.02)


class TestCompareTwoGraphs:
    def test_same_graph_correlates_perfectly(self, capsys, tmp_path):
        from dcmetrics import builtin_dataset, write_edge_list

        path = tmp_path / "toy.tsv"
        path.write_text(write_edge_list(builtin_dataset("toy-undirected")))
        code, out, _ = run(
            capsys, "compare", "--input", str(path), "--input2", str(path),
            "--metrics", "d1",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "metric,d1@a,d1@b"
        assert float(lines[1].split(",")[2]) == 1.0

    def test_two_graph_mode_needs_single_metric(self, capsys, tmp_path):
        from dcmetrics import builtin_dataset, write_edge_list

        path = tmp_path / "toy.tsv"
        path.write_text(write_edge_list(builtin_dataset("toy-undirected")))
        code, _, err = run(
            capsys, "compare", "--input", str(path), "--input2", str(path),
            "--metrics", "d1,d2",
        )
        assert code == 1
        assert "exactly one metric" in err


class TestGenerateAndSweep:
    def test_generate_echoes_seed_and_is_reproducible(self, capsys, tmp_path):
        code, out1, _ = run(capsys, "generate", "--n", "20", "--m-attach", "2",
                            "--weight-low", "1", "--weight-high", "9", "--seed", "42")
        assert code == 0
        assert "seed=42" in out1.splitlines()[0]
        code, out2, _ = run(capsys, "generate", "--n", "20", "--m-attach", "2",
                            "--weight-low", "1", "--weight-high", "9", "--seed", "42")
        assert out1 == out2

    def test_seed_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("DISTINCT_SEED", "7")
        code, out, _ = run(capsys, "generate", "--n", "10", "--m-attach", "1")
        assert code == 0
        assert "seed=7" in out.splitlines()[0]

    def test_generate_then_compute_round_trip(self, capsys, tmp_path):
        path = tmp_path / "ba.tsv"
        code, _, _ = run(capsys, "generate", "--n", "15", "--m-attach", "2",
                         "--seed", "3", "-o", str(path))
        assert code == 0
        code, out, _ = run(capsys, "compute", "--input", str(path), "--metrics", "d1")
        assert code == 0
        assert len(out.strip().splitlines()) == 16

    def test_sweep_csv_and_svg(self, capsys, tmp_path):
        svg1 = tmp_path / "a.svg"
        svg2 = tmp_path / "b.svg"
        args = ["sweep", "--n", "20", "--m-attach", "2", "--weight-low", "1",
                "--weight-high", "9", "--ensemble", "2", "--alphas", "1,2",
                "--seed", "5", "--svg"]
        code, out1, _ = run(capsys, *args, str(svg1))
        assert code == 0
        assert out1.splitlines()[0] == "# sweep seed=5 ensemble=2"
        assert "dc_metric,baseline,alpha,mean_spearman" in out1
        code, out2, _ = run(capsys, *args, str(svg2))
        assert out1 == out2
        assert svg1.read_bytes() == svg2.read_bytes()  # byte-identical SVG
        assert svg1.read_text().startswith("<svg")


class TestDatasets:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "datasets")
        assert code == 0
        assert "zachary: 34 nodes, 78 edges" in out

    def test_export(self, capsys, tmp_path):
        code, out, _ = run(capsys, "datasets", "--export-dir", str(tmp_path / "data"))
        assert code == 0
        files = sorted(p.name for p in (tmp_path / "data").iterdir())
        assert files == ["florentine.tsv", "toy-directed.tsv", "toy-undirected.tsv", "zachary.tsv"]
