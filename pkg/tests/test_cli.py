import io
import json

import pytest

from dominator import cli
from dominator.graph import generate, write_edge_list
from dominator.graph6 import write_graph6


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def heawood_file(tmp_path):
    path = tmp_path / "heawood.g6"
    path.write_text(write_graph6(generate("heawood")) + "\n")
    return str(path)


@pytest.fixture()
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(write_edge_list(generate("cycle", n=4)))
    return str(path)


class TestGen:
    def test_gen_heawood_edgelist(self, capsys):
        code, out, _ = run(capsys, "gen", "heawood")
        assert code == 0
        assert out.splitlines()[0] == "14"
        assert len(out.splitlines()) == 22

    def test_gen_graph6(self, capsys):
        code, out, _ = run(capsys, "gen", "cycle", "-n", "4",
                           "--format", "graph6")
        assert code == 0
        assert out.strip() == write_graph6(generate("cycle", n=4))

    def test_gen_random_needs_seed(self, capsys, monkeypatch):
        monkeypatch.delenv("DOMINATOR_SEED", raising=False)
        code, _, err = run(capsys, "gen", "random_regular",
                           "-n", "10", "-r", "3")
        assert code == 1
        assert err.startswith("error: usage:")

    def test_gen_seed_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("DOMINATOR_SEED", "5")
        code, out1, _ = run(capsys, "gen", "random_regular",
                            "-n", "10", "-r", "3")
        assert code == 0
        code, out2, _ = run(capsys, "gen", "random_regular",
                            "-n", "10", "-r", "3")
        assert out1 == out2

    def test_gen_reproducible(self, capsys):
        _, out1, _ = run(capsys, "gen", "random_regular", "-n", "20",
                         "-r", "3", "--seed", "9")
        _, out2, _ = run(capsys, "gen", "random_regular", "-n", "20",
                         "-r", "3", "--seed", "9")
        assert out1 == out2


class TestVerifyGamma:
    def test_verify_ok(self, capsys, c4_file):
        code, out, _ = run(capsys, "verify", c4_file,
                           "--set", "0,1,2,3", "-a", "2", "-b", "2")
        assert code == 0 and out.strip() == "dominating"

    def test_verify_fails(self, capsys, c4_file):
        code, out, _ = run(capsys, "verify", c4_file,
                           "--set", "0", "-a", "1", "-b", "1")
        assert code == 2 and out.strip() == "not-dominating"

    def test_gamma_heawood(self, capsys, heawood_file):
        code, out, _ = run(capsys, "gamma", heawood_file,
                           "-a", "2", "-b", "2")
        assert code == 0
        assert out.splitlines()[0] == "12"

    def test_gamma_stdin_pipe(self, capsys, monkeypatch):
        text = write_edge_list(generate("heawood"))
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        code, out, _ = run(capsys, "gamma", "-", "-a", "2", "-b", "2")
        assert code == 0 and out.splitlines()[0] == "12"

    def test_gamma_stdin_graph6_autodetect(self, capsys, monkeypatch):
        text = write_graph6(generate("petersen")) + "\n"
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        code, out, _ = run(capsys, "gamma", "-", "-a", "2", "-b", "3")
        assert code == 0 and out.splitlines()[0] == "9"

    def test_gamma_infeasible_exit2(self, capsys, tmp_path):
        path = tmp_path / "k2.txt"
        path.write_text("2\n0 1\n")
        code, _, err = run(capsys, "gamma", str(path), "-a", "2", "-b", "1")
        assert code == 2 and "infeasible" in err

    def test_gamma_budget_exit3(self, capsys, heawood_file):
        code, _, err = run(capsys, "gamma", heawood_file, "-a", "2",
                           "-b", "2", "--node-limit", "3")
        assert code == 3 and "budget-exceeded" in err

    def test_bad_file_exit1(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("3\n0 0\n")
        code, _, err = run(capsys, "gamma", str(path), "-a", "1", "-b", "1")
        assert code == 1 and err.startswith("error:")


class TestTuran:
    def test_heawood_certificate(self, capsys, heawood_file):
        code, out, _ = run(capsys, "turan", heawood_file,
                           "--strategy", "tt22_min3")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == "dominator/1"
        assert payload["verified"] is True
        assert payload["size"] <= 12
        assert (payload["a"], payload["b"]) == (2, 2)

    def test_seeded_chooser_reproducible(self, capsys, heawood_file):
        args = ("turan", heawood_file, "--strategy", "tt22_min3",
                "--chooser", "seeded_random", "--seed", "3")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_strategy_precondition_exit1(self, capsys, c4_file):
        code, _, err = run(capsys, "turan", c4_file,
                           "--strategy", "tt22_min3")
        assert code == 1 and err.startswith("error:")


class TestLllTable:
    def test_default_is_table1(self, capsys):
        code, out, _ = run(capsys, "lll-table")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 16  # header + 15 rows
        header = lines[0].split("\t")
        assert header[:5] == ["delta", "Delta", "a", "b", "minimal_N"]
        row = dict(zip(header, lines[1].split("\t")))
        assert (row["delta"], row["minimal_N"]) == ("7", "4")
        assert (row["bound_num"], row["bound_den"]) == ("3", "4")

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "lll-table", "--output", "json")
        payload = json.loads(out)
        assert payload["schema"] == "dominator/1"
        assert len(payload["rows"]) == 15

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "lll-table", "--delta", "9",
                           "--Delta", "11", "-a", "2", "-b", "2")
        assert code == 0
        assert out.strip().splitlines()[1].split("\t")[4] == "3"

    def test_rows_file(self, capsys, tmp_path):
        path = tmp_path / "rows.txt"
        path.write_text("# rows\n14 14 2 2\n8 8 2 1\n")
        code, out, _ = run(capsys, "lll-table", "--rows", str(path))
        lines = out.strip().splitlines()
        assert len(lines) == 3
        assert lines[1].split("\t")[4] == "2"
        assert lines[2].split("\t")[4] == "3"


class TestLllRun:
    def test_run_and_extract(self, capsys, tmp_path):
        g = generate("random_regular", n=60, r=7, seed=1)
        path = tmp_path / "g.txt"
        path.write_text(write_edge_list(g))
        code, out, _ = run(capsys, "lll-run", str(path), "-N", "4",
                           "-a", "2", "-b", "2", "--seed", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["verified"] is True
        assert payload["size"] <= 45  # n - ceil(n/4)

    def test_budget_exit3(self, capsys, heawood_file):
        code, _, err = run(capsys, "lll-run", heawood_file, "-N", "2",
                           "-a", "2", "-b", "2", "--seed", "1",
                           "--max-resamples", "50")
        assert code == 3 and "resample-budget-exceeded" in err

    def test_reproducible(self, capsys, tmp_path):
        g = generate("random_regular", n=40, r=7, seed=4)
        path = tmp_path / "g.txt"
        path.write_text(write_edge_list(g))
        args = ("lll-run", str(path), "-N", "4", "-a", "2", "-b", "2",
                "--seed", "8")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestBounds:
    def test_heawood_table(self, capsys, heawood_file):
        code, out, _ = run(capsys, "bounds", heawood_file,
                           "-a", "2", "-b", "2")
        assert code == 0
        exact_line = next(l for l in out.splitlines()
                          if l.startswith("exact"))
        assert exact_line.startswith("exact\tTrue\t12")

    def test_assume_flag(self, capsys, heawood_file):
        code, out, _ = run(capsys, "bounds", heawood_file, "-a", "2",
                           "-b", "2", "--assume", "projective_incidence",
                           "--output", "json")
        payload = json.loads(out)
        proj = next(r for r in payload["rows"]
                    if r["method"] == "ali_projective")
        assert proj["value"] == 12.0
        assert "equality" in proj["reason"]

    def test_json(self, capsys, heawood_file):
        code, out, _ = run(capsys, "bounds", heawood_file,
                           "-a", "2", "-b", "2", "--output", "json")
        payload = json.loads(out)
        methods = {r["method"] for r in payload["rows"]}
        assert {"exact", "turan", "lll"} <= methods
