import json
import subprocess
import sys

import pytest

from homrep import parse_edge_list
from homrep.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    return str(path)


class TestInfo:
    def test_k4_text(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "info", "--input", k4_file)
        assert code == 0
        assert "betti: 3" in out and "cutvertices: none" in out

    def test_k4_json(self, capsys):
        code, out, _ = run_cli(capsys, "info", "--family", "complete", "4", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["betti"] == 3
        assert data["blocks"] == [[0, 1, 2, 3]]
        assert data["bridges"] == []

    def test_decorated_square_periodic(self, capsys, tmp_path):
        gen_code, gen_out, _ = run_cli(
            capsys, "gen", "4", "2", "[-1,0]", "[-1,0,1]")
        assert gen_code == 0
        path = tmp_path / "dec.txt"
        path.write_text(gen_out)
        code, out, _ = run_cli(capsys, "info", "--input", str(path), "--json")
        assert code == 0
        data = json.loads(out)
        assert data["unicyclic"] and data["periodic"] and data["period"] == 2
        assert len(data["pendant_trees"]) == 4

    def test_disconnected_input_exit_2(self, capsys, tmp_path):
        path = tmp_path / "d.txt"
        path.write_text("0 1\n2 3\n")
        code, _, err = run_cli(capsys, "info", "--input", str(path))
        assert code == 2 and "connected" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "info", "--input", "/no/such/file")
        assert code == 2 and "error" in err

    def test_parse_error_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 zero\n")
        code, _, err = run_cli(capsys, "info", "--input", str(path))
        assert code == 2 and "line 1" in err

    def test_g6_input(self, capsys):
        code, out, _ = run_cli(capsys, "info", "--g6", "D?{", "--json")
        assert code == 0
        assert json.loads(out)["betti"] == 0


class TestRep:
    def test_c4_text(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "--family", "cycle", "4")
        assert code == 0
        assert "group order: 8" in out
        assert "kernel size: 4" in out
        assert "faithful: False" in out

    def test_k4_json_matrices(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "--family", "complete", "4", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["group_order"] == 24 and data["faithful"]
        assert len(data["matrices"]) == 24
        assert all(m["matrix"]["dim"] == 3 for m in data["matrices"])
        assert data["kernel"] == [[0, 1, 2, 3]]

    def test_star_empty_matrices(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "--family", "star", "3", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["betti"] == 0 and len(data["kernel"]) == 6
        assert all(m["matrix"]["rows"] == [] for m in data["matrices"])

    def test_kernel_only_filters(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "--family", "cycle", "5",
                               "--kernel-only", "--json")
        data = json.loads(out)
        assert code == 0
        assert len(data["matrices"]) == 5 == len(data["kernel"])

    def test_cap_exceeded_exit_4(self, capsys):
        code, _, err = run_cli(capsys, "rep", "--family", "complete", "4",
                               "--cap", "5")
        assert code == 4 and "cap" in err

    def test_random_tree_seed_reported(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "--family", "cycle", "4",
                               "--tree", "rand", "--seed", "3")
        assert code == 0 and "seed 3" in out

    def test_mod_p_section(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "--family", "cycle", "4",
                               "--mod-p", "3", "--json")
        data = json.loads(out)
        assert code == 0 and data["mod_p"]["p"] == 3
        rows = [m["matrix"]["rows"] for m in data["mod_p"]["matrices"]]
        assert [[2]] in rows  # reflections reduce to [-1] = [2] mod 3

    def test_mod_p_rejects_composite(self, capsys):
        code, _, err = run_cli(capsys, "rep", "--family", "cycle", "4",
                               "--mod-p", "4")
        assert code == 2 and "prime" in err

    def test_json_edges_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "--family", "bowtie", "5", "--json")
        data = json.loads(out)
        text = "n {}\n".format(data["n"]) + "\n".join(
            f"{u} {v}" for u, v in data["edges"])
        from homrep import named_family
        assert parse_edge_list(text) == named_family("bowtie", 5)


class TestClassify:
    def test_faithful_exit_0(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--family", "complete", "4")
        assert code == 0 and out.strip() == "faithful"

    def test_not_faithful_exit_3(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--family", "path", "3")
        assert code == 3 and "TreeWithSymmetry" in out

    def test_cycle_json(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--family", "cycle", "6", "--json")
        data = json.loads(out)
        assert code == 3
        assert data == {"faithful": False, "reason": "PeriodicUnicyclic",
                        "witness": {"period": 1}}

    def test_bowtie_faithful(self, capsys):
        code, _, _ = run_cli(capsys, "classify", "--family", "bowtie", "5")
        assert code == 0


class TestVerify:
    def test_n_max_4(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "4", "--json")
        data = json.loads(out)
        assert code == 0 and data["ok"]
        assert data["graphs"] == {"2": 1, "3": 4, "4": 38}
        assert all(c["violations"] == 0 for c in data["criteria"].values())

    def test_text_report(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "3")
        assert code == 0
        assert "n=3: 4 graphs" in out
        assert "classify_oracle" in out

    def test_guard_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--n-max", "9")
        assert code == 2 and "n_max" in err

    def test_seed_flag_parsed(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "3",
                               "--seeds", "2,4", "--json")
        assert code == 0 and json.loads(out)["ok"]


class TestGen:
    def test_decorated_square(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "4", "2", "[-1,0]", "[-1,0,1]")
        assert code == 0
        g = parse_edge_list(out)
        assert g.n == 10
        assert "# rho: 2 3 0 1 7 8 9 4 5 6" in out
        assert "# order: 2" in out

    def test_three_distinct_chains(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "6", "3",
                               "[-1]", "[-1,0]", "[-1,0,1]")
        assert code == 0
        assert "# order: 2" in out

    def test_constraint_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "3", "3", "[-1]", "[-1]", "[-1]")
        assert code == 2 and "smaller" in err

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "6", "1", "[-1]", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["order"] == 6 and data["rho"] == [1, 2, 3, 4, 5, 0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "homrep", "classify", "--family", "complete", "4"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "faithful"
