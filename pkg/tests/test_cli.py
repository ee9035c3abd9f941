import json

import numpy as np
import pytest

import boxdim as bd
from boxdim.cli import main, read_series_csv, write_series_csv


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_level1(self, tmp_path, capsys):
        out = tmp_path / "s1.txt"
        code, stdout, _ = run_cli(["gen", "sierpinski", "--level", "1", "-o", str(out)], capsys)
        assert code == 0
        assert "16 nodes, 36 edges" in stdout
        g = bd.read_edge_list(out)
        assert (g.node_count, g.edge_count) == (16, 36)

    def test_level0(self, tmp_path, capsys):
        out = tmp_path / "s0.txt"
        code, stdout, _ = run_cli(["gen", "sierpinski", "--level", "0", "-o", str(out)], capsys)
        assert code == 0
        g = bd.read_edge_list(out)
        assert (g.node_count, g.edge_count) == (4, 6)

    def test_level_above_cap(self, tmp_path, capsys):
        out = tmp_path / "nope.txt"
        code, _, stderr = run_cli(["gen", "sierpinski", "--level", "99", "-o", str(out)], capsys)
        assert code == 2
        assert "level above cap" in stderr
        assert not out.exists()


@pytest.fixture
def karate_file(tmp_path, karate):
    path = tmp_path / "karate.txt"
    bd.save_edge_list(karate, path)
    return path


class TestDim:
    def test_karate_repulsion(self, karate_file, tmp_path, capsys):
        csv = tmp_path / "series.csv"
        js = tmp_path / "summary.json"
        code, stdout, _ = run_cli(
            [
                "dim", "--input", str(karate_file), "--method", "repulsion",
                "--trials", "120", "--seed", "42",
                "--csv", str(csv), "--json", str(js), "--threads", "1",
            ],
            capsys,
        )
        assert code == 0
        assert "D_F" in stdout
        summary = json.loads(js.read_text())
        assert summary["nodes"] == 34
        assert summary["edges"] == 78
        est = summary["methods"]["repulsion"]
        assert 0.7 < est["dimension"] < 1.4
        assert summary["config"]["seed"] == 42
        assert summary["version"] == bd.__version__

        header = csv.read_text().splitlines()[0]
        assert header == "l_B,mean_NB,std_NB,min_NB,max_NB"

    def test_csv_round_trip_reproduces_dimension(self, karate_file, tmp_path, capsys):
        csv = tmp_path / "series.csv"
        js = tmp_path / "summary.json"
        code, _, _ = run_cli(
            [
                "dim", "--input", str(karate_file), "--method", "hop",
                "--trials", "80", "--seed", "7",
                "--csv", str(csv), "--json", str(js), "--threads", "1",
            ],
            capsys,
        )
        assert code == 0
        sizes, means = read_series_csv(csv)
        x = np.log(np.asarray(sizes, dtype=float))
        y = np.log(np.asarray(means))
        xc = x - x.mean()
        slope = float(xc @ (y - y.mean())) / float(xc @ xc)
        reported = json.loads(js.read_text())["methods"]["hop"]["dimension"]
        assert -slope == reported

    def test_degenerate_input_exit_3(self, tmp_path, capsys):
        tri = tmp_path / "tri.txt"
        tri.write_text("1 2\n2 3\n3 1\n")
        code, _, stderr = run_cli(
            ["dim", "--input", str(tri), "--trials", "5"], capsys
        )
        assert code == 3
        assert "degenerate scaling range" in stderr

    def test_missing_file_exit_2(self, tmp_path, capsys):
        missing = tmp_path / "absent.txt"
        code, _, stderr = run_cli(["dim", "--input", str(missing)], capsys)
        assert code == 2
        assert str(missing) in stderr

    def test_unparseable_file_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 2\noops\n")
        code, _, stderr = run_cli(["dim", "--input", str(bad)], capsys)
        assert code == 2
        assert "line 2" in stderr

    def test_bad_trials_exit_2(self, karate_file, capsys):
        code, _, stderr = run_cli(
            ["dim", "--input", str(karate_file), "--trials", "0"], capsys
        )
        assert code == 2
        assert "--trials" in stderr

    def test_generated_input(self, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, stdout, _ = run_cli(
            ["dim", "--gen", "sierpinski:2", "--method", "hop", "--trials", "20", "--threads", "1"],
            capsys,
        )
        assert code == 0
        assert (tmp_path / "sierpinski2.hop.csv").exists()

    def test_bad_generator_spec(self, capsys):
        code, _, stderr = run_cli(["dim", "--gen", "menger:2", "--trials", "5"], capsys)
        assert code == 2
        assert "menger" in stderr

    def test_byte_identical_csv_across_runs_and_threads(self, karate_file, tmp_path, capsys):
        blobs = []
        for tag, threads in (("a", "1"), ("b", "8"), ("c", "1")):
            csv = tmp_path / f"{tag}.csv"
            code, _, _ = run_cli(
                [
                    "dim", "--input", str(karate_file), "--method", "repulsion",
                    "--trials", "60", "--seed", "11",
                    "--csv", str(csv), "--json", str(tmp_path / f"{tag}.json"),
                    "--threads", threads,
                ],
                capsys,
            )
            assert code == 0
            blobs.append(csv.read_bytes())
        assert blobs[0] == blobs[1] == blobs[2]

    def test_dump_matrix(self, karate_file, tmp_path, capsys):
        dump = tmp_path / "matrix.csv"
        code, _, _ = run_cli(
            [
                "dim", "--input", str(karate_file), "--method", "hop",
                "--trials", "5", "--csv", str(tmp_path / "s.csv"),
                "--json", str(tmp_path / "s.json"), "--threads", "1",
                "--dump-matrix", str(dump),
            ],
            capsys,
        )
        assert code == 0
        rows = dump.read_text().strip().splitlines()
        assert len(rows) == 34
        first = [int(x) for x in rows[0].split(",")]
        assert len(first) == 34
        assert first[0] == 0

    def test_fit_range_respected(self, karate_file, tmp_path, capsys):
        js = tmp_path / "s.json"
        code, _, _ = run_cli(
            [
                "dim", "--input", str(karate_file), "--method", "hop",
                "--trials", "20", "--fit-range", "1", "3",
                "--csv", str(tmp_path / "s.csv"), "--json", str(js), "--threads", "1",
            ],
            capsys,
        )
        assert code == 0
        assert json.loads(js.read_text())["methods"]["hop"]["points_used"] == 3


class TestCompare:
    def test_karate_two_rows(self, karate_file, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, stdout, _ = run_cli(
            ["compare", "--input", str(karate_file), "--trials", "100", "--seed", "42", "--threads", "2"],
            capsys,
        )
        assert code == 0
        lines = [ln for ln in stdout.splitlines() if ln.strip()]
        assert lines[0].split()[:2] == ["method", "D_F"]
        table = {ln.split()[0]: float(ln.split()[1]) for ln in lines[1:3]}
        assert set(table) == {"repulsion", "hop"}
        assert table["repulsion"] < table["hop"]
        assert (tmp_path / "karate.repulsion.csv").exists()
        assert (tmp_path / "karate.hop.csv").exists()

    def test_missing_input_exit_2(self, capsys):
        code, _, stderr = run_cli(["compare", "--input", "/no/such/file.txt"], capsys)
        assert code == 2
        assert "/no/such/file.txt" in stderr


def test_write_read_series_csv_round_trip(tmp_path, karate):
    dm = bd.all_pairs(karate, bd.HOP)
    sizes = (1, 2, 3, 4, 5)
    counts = bd.covering_counts(dm, sizes, trials=9, master_seed=1)
    from boxdim.dimension import series_from_counts

    series = series_from_counts(dm, sizes, counts, 34, 78)
    path = tmp_path / "series.csv"
    write_series_csv(series, path)
    back_sizes, back_means = read_series_csv(path)
    assert back_sizes == list(sizes)
    assert back_means == [s.mean for s in series.stats]
