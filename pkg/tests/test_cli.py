import json

import pytest

from twistr.cli import SCHEMA, main


def run(tmp_path, *argv):
    tmp_path.mkdir(parents=True, exist_ok=True)
    out = tmp_path / "out.json"
    code = main(list(argv) + ["--out", str(out)])
    return code, out


class TestVerify:
    def test_seed_pair_full_pipeline(self, tmp_path):
        code, out = run(tmp_path, "verify", "--family", "a2even", "--l", "2",
                        "--k", "1", "--r", "1", "--seed", "7", "--samples", "3")
        assert code == 0
        report = json.loads(out.read_text())
        assert report["schema"] == SCHEMA and report["ok"]
        stages = {s["stage"]: s for s in report["stages"]}
        assert set(stages) == {"relations", "decomposition", "graph",
                               "eigenvalues", "solve", "yang-baxter",
                               "unitarity", "parity", "spectral-agreement"}
        assert len(stages["yang-baxter"]["certificates"]) == 3
        assert all(s["ok"] for s in report["stages"])

    def test_non_seed_pair_skips_solve(self, tmp_path):
        code, out = run(tmp_path, "verify", "--family", "d2", "--l", "2",
                        "--a", "1", "--b", "2", "--samples", "1")
        assert code == 0
        report = json.loads(out.read_text())
        stages = {s["stage"]: s for s in report["stages"]}
        assert stages["graph"]["ok"] and stages["eigenvalues"]["ok"]
        for name in ("solve", "yang-baxter", "unitarity", "parity",
                     "spectral-agreement"):
            assert stages[name]["skipped"] == "non-seed pair"

    def test_rank_validation(self, capsys):
        assert main(["verify", "--family", "a2odd", "--l", "2"]) == 2
        assert "l >= 3" in capsys.readouterr().err

    def test_parameter_validation(self, capsys):
        assert main(["verify", "--family", "a2even", "--l", "2",
                     "--k", "2", "--r", "5"]) == 2

    def test_default_params_are_seed(self, tmp_path):
        code, out = run(tmp_path, "verify", "--family", "d2", "--l", "2",
                        "--samples", "1")
        assert code == 0
        assert json.loads(out.read_text())["config"]["params"] == [1, 1]

    def test_determinism(self, tmp_path):
        args = ("verify", "--family", "a2even", "--l", "1", "--seed", "5",
                "--samples", "2")
        _, a = run(tmp_path / "a", *args)
        _, b = run(tmp_path / "b", *args)
        assert a.read_bytes() == b.read_bytes()

    def test_seed_changes_samples(self, tmp_path):
        _, a = run(tmp_path / "a", "verify", "--family", "a2even", "--l", "1",
                   "--seed", "1", "--samples", "1")
        _, b = run(tmp_path / "b", "verify", "--family", "a2even", "--l", "1",
                   "--seed", "2", "--samples", "1")
        assert a.read_bytes() != b.read_bytes()


class TestExport:
    def test_graph_json(self, tmp_path):
        code, out = run(tmp_path, "export", "graph", "--family", "a2odd",
                        "--l", "3", "--k", "1", "--r", "1")
        assert code == 0
        g = json.loads(out.read_text())
        assert len(g["nodes"]) == 3 and len(g["edges"]) == 2
        parities = {n["weight"]: n["parity"] for n in g["nodes"]}
        assert parities == {"(2,0,0)": 1, "(1,1,0)": -1, "(0,0,0)": -1}

    def test_graph_dot(self, tmp_path):
        code, out = run(tmp_path, "export", "graph", "--family", "a2even",
                        "--l", "2", "--format", "dot")
        assert code == 0
        assert out.read_text().startswith("graph tpg {")

    def test_eigenvalues_symbolic(self, tmp_path):
        code, out = run(tmp_path, "export", "eigenvalues", "--family",
                        "a2even", "--l", "2", "--k", "1", "--r", "1")
        assert code == 0
        table = json.loads(out.read_text())
        assert table["u"] == "u"
        assert table["eigenvalues"]["(2,0)"] == "1"
        assert len(table["eigenvalues"]) == 3

    def test_eigenvalues_numeric_deterministic(self, tmp_path):
        args = ("export", "eigenvalues", "--family", "d2", "--l", "2",
                "--mode", "numeric", "--seed", "9")
        _, a = run(tmp_path / "a", *args)
        _, b = run(tmp_path / "b", *args)
        assert a.read_bytes() == b.read_bytes()

    def test_rmatrix_sparse_json(self, tmp_path):
        code, out = run(tmp_path, "export", "rmatrix", "--family", "a2even",
                        "--l", "1", "--seed", "2")
        assert code == 0
        r = json.loads(out.read_text())
        assert r["dim"] == 9 and r["nullity"] == 1
        # weight conservation leaves at most 3 + 3*2 + ... nonzeros; spot check
        assert all(len(t) == 3 for t in r["R"])

    def test_rmatrix_requires_seed_pair(self, capsys):
        assert main(["export", "rmatrix", "--family", "d2", "--l", "2",
                     "--a", "1", "--b", "2"]) == 2

    def test_rep_json(self, tmp_path):
        code, out = run(tmp_path, "export", "rep", "--family", "d2", "--l", "2")
        assert code == 0
        r = json.loads(out.read_text())
        assert r["dim"] == 4 and len(r["e"]) == 3
        assert r["highest_weight"] == "(1/2,1/2)"

    def test_unsupported_format(self, capsys):
        assert main(["export", "eigenvalues", "--family", "a2even", "--l", "2",
                     "--format", "dot"]) == 2


class TestUsage:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit):
            main([])

    def test_bad_family(self):
        with pytest.raises(SystemExit):
            main(["verify", "--family", "e8", "--l", "8"])
