import json

import numpy as np
import pytest

from oddqft.cli import main
from oddqft.pipeline import load_state, save_state


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestParams:
    def test_happy_path(self, capsys):
        rc, out, _ = run(capsys, "params", "--n", "13", "--epsilon", "0.10")
        assert rc == 0
        assert "g=26" in out
        assert "m=25" in out and "l=15" in out
        assert "27" in out and "29" in out

    def test_rejects_even_N(self, capsys):
        rc, _, err = run(capsys, "params", "--n", "12", "--epsilon", "0.1")
        assert rc == 2
        assert "odd" in err

    def test_second_table_cell(self, capsys):
        rc, out, _ = run(capsys, "params", "--n", "25", "--epsilon", "0.30")
        assert rc == 0
        assert "g=22" in out and "m=22" in out and "l=12" in out


class TestTable1:
    def test_rows_and_stability(self, capsys, tmp_path):
        p1, p2 = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
        assert run(capsys, "table1", "--out", p1)[0] == 0
        assert run(capsys, "table1", "--out", p2)[0] == 0
        body1 = open(p1, "rb").read()
        assert body1 == open(p2, "rb").read()
        lines = body1.decode().splitlines()
        assert len(lines) == 43
        assert lines[0] == "N,epsilon,g,m,l"
        assert "101,0.05,33,33,18" in lines
        assert "251,0.2,29,29,15" in lines
        assert "13,0.1,26,25,15" in lines


class TestSimulate:
    def test_small_run_with_csv(self, capsys, tmp_path):
        out_csv = str(tmp_path / "trials.csv")
        rc, out, _ = run(
            capsys,
            "simulate", "--n", "13", "--m", "9", "--l", "4",
            "--trials", "5", "--seed", "3", "--out", out_csv,
        )
        assert rc == 0
        assert "violations=0" in out
        lines = open(out_csv).read().splitlines()
        assert lines[0] == "trial,error,bound,tv"
        assert len(lines) == 6

    def test_guard_refuses_large_m(self, capsys):
        rc, _, err = run(capsys, "simulate", "--n", "13", "--m", "25", "--l", "15", "--trials", "1")
        assert rc == 2
        assert "force-large" in err

    def test_deterministic_csv(self, capsys, tmp_path):
        a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
        args = ["simulate", "--n", "13", "--m", "9", "--l", "4", "--trials", "4", "--seed", "1"]
        run(capsys, *args, "--out", a)
        run(capsys, *args, "--out", b)
        assert open(a, "rb").read() == open(b, "rb").read()


class TestVerifyCommand:
    def test_counterexample_probe_denominator(self, capsys):
        rc, out, _ = run(capsys, "verify", "--lemma", "denominator_sum", "--M", "256", "--N", "13")
        assert rc == 0
        assert "PASS" in out

    def test_counterexample_probe_distance(self, capsys):
        rc, out, _ = run(
            capsys, "verify", "--lemma", "distance_lower_bound", "--M", "128", "--N", "37"
        )
        assert rc == 0
        assert "PASS" in out

    def test_small_grid(self, capsys, tmp_path):
        out_csv = str(tmp_path / "verify.csv")
        rc, out, _ = run(
            capsys,
            "verify", "--grid", "N=13..13,m=8..9,l=4..4",
            "--lemma", "set_properties", "--lemma", "delta_ket",
            "--out", out_csv,
        )
        assert rc == 0
        assert "summary: pass=4 fail=0" in out
        lines = open(out_csv).read().splitlines()
        assert lines[0] == "lemma,N,M,L,status,instances,violations,max_slack"
        assert len(lines) == 5

    def test_bad_grid_spec(self, capsys):
        rc, _, err = run(capsys, "verify", "--grid", "q=1..2")
        assert rc == 2
        assert "grid" in err


class TestTransform:
    def test_round_trip_and_report(self, capsys, tmp_path):
        in_path = str(tmp_path / "in.json")
        out_path = str(tmp_path / "out.json")
        u = np.zeros(13, dtype=complex)
        u[0] = 1
        save_state(in_path, u)
        rc, out, _ = run(capsys, "transform", in_path, "--m", "11", "--l", "4", "--out", out_path)
        assert rc == 0
        report = json.load(open(out_path + ".report.json"))
        assert set(report) == {"error", "bound", "tv", "tv_bound"}
        assert report["error"] <= 0.21
        assert report["tv"] <= report["tv_bound"]
        grid = load_state(out_path)
        # re-read state has identical amplitudes up to the unit renormalization
        assert abs(np.linalg.norm(grid) - 1) < 1e-9
        saved = json.load(open(out_path))
        assert saved["n"] == len(saved["amplitudes"])

    def test_rejects_malformed_input(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("not json at all")
        rc, _, err = run(capsys, "transform", str(bad), "--m", "9", "--l", "4", "--out", str(tmp_path / "o.json"))
        assert rc == 2

    def test_rejects_zero_norm_input(self, capsys, tmp_path):
        in_path = str(tmp_path / "zero.json")
        save_state(in_path, np.zeros(13, dtype=complex))
        rc, _, err = run(capsys, "transform", in_path, "--m", "9", "--l", "4", "--out", str(tmp_path / "o.json"))
        assert rc == 2
        assert "norm" in err


class TestTable2:
    def test_theorem_mode_small(self, capsys, tmp_path):
        out_csv = str(tmp_path / "t2.csv")
        rc, _, _ = run(
            capsys, "table2", "--mode", "theorem", "--trials", "2", "--seed", "0",
            "--out", out_csv,
        )
        assert rc == 0
        lines = open(out_csv).read().splitlines()
        assert len(lines) == 7
        assert lines[0] == "N,epsilon,m,l,observed_max_error,best_m,best_l,best_observed"
        assert lines[1].startswith("13,0.4,19,11,")
        assert lines[3].startswith("13,0.2,22,13,")
