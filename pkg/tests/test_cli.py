import json
import os

import pytest

from gapedit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip().splitlines()
    return code, [json.loads(line) for line in out if line.startswith("{")]


@pytest.fixture
def small_pair(tmp_path, capsys):
    stem = tmp_path / "s"
    code, recs = run(capsys, "gen", "--n", "256", "--sigma", "64",
                     "--edits", "4", "--seed", "3", "--out", str(stem))
    assert code == 0
    return stem


class TestGen:
    def test_small(self, tmp_path, capsys):
        stem = tmp_path / "x"
        code, recs = run(capsys, "gen", "--n", "128", "--sigma", "16",
                         "--edits", "2", "--seed", "1", "--out", str(stem),
                         "--exact")
        assert code == 0
        assert recs[0]["label"] == "small" and recs[0]["exact_ed"] <= 2
        assert stem.with_suffix(".a").stat().st_size == 128

    def test_large(self, tmp_path, capsys):
        stem = tmp_path / "y"
        code, recs = run(capsys, "gen", "--n", "256", "--sigma", "64",
                         "--label", "large", "--threshold", "128",
                         "--seed", "1", "--out", str(stem))
        assert code == 0 and recs[0]["threshold"] == 128


class TestExact:
    def test_distance(self, small_pair, capsys):
        code, recs = run(capsys, "exact", str(small_pair) + ".a",
                         str(small_pair) + ".b", "--sigma", "64")
        assert code == 0 and 0 < recs[0]["distance"] <= 4

    def test_at_most(self, small_pair, capsys):
        code, recs = run(capsys, "exact", str(small_pair) + ".a",
                         str(small_pair) + ".b", "--sigma", "64",
                         "--at-most", "4")
        assert code == 0 and recs[0]["within"] is True


class TestGapAndWave:
    def test_gap_all_modes(self, small_pair, capsys):
        for mode in ("exact", "noprep", "onesided", "twosided"):
            code, recs = run(capsys, "gap", str(small_pair) + ".a",
                             str(small_pair) + ".b", "--k", "4",
                             "--mode", mode, "--seed", "9", "--sigma", "64")
            assert code == 0 and recs[0]["verdict"] == "small"
            assert recs[0]["schema"] == 1

    def test_wave(self, small_pair, capsys):
        code, recs = run(capsys, "wave", str(small_pair) + ".a",
                         str(small_pair) + ".b", "--k", "9", "--ell", "3",
                         "--mode", "noprep", "--seed", "9", "--sigma", "64")
        assert code == 0 and recs[0]["verdict"] == "small"

    def test_record_file(self, small_pair, tmp_path, capsys):
        rec = tmp_path / "runs.jsonl"
        code, _ = run(capsys, "--record", str(rec), "gap",
                      str(small_pair) + ".a", str(small_pair) + ".b",
                      "--k", "4", "--seed", "1", "--sigma", "64")
        assert code == 0
        lines = rec.read_text().strip().splitlines()
        assert len(lines) == 1 and json.loads(lines[0])["command"] == "gap"

    def test_env_seed(self, small_pair, capsys, monkeypatch):
        monkeypatch.setenv("GAPEDIT_SEED", "123")
        code, recs = run(capsys, "gap", str(small_pair) + ".a",
                         str(small_pair) + ".b", "--k", "4", "--sigma", "64")
        assert code == 0 and recs[0]["seed"] == 123

    def test_warns_on_oversized_k(self, small_pair, capsys):
        main(["gap", str(small_pair) + ".a", str(small_pair) + ".b",
              "--k", "64", "--mode", "exact", "--sigma", "64"])
        assert "warning" in capsys.readouterr().err


class TestBenchAndSelftest:
    def test_bench_grid(self, capsys):
        code, recs = run(capsys, "bench", "--ns", "128", "256",
                         "--ks", "4", "--trials", "2", "--seed", "5")
        assert code == 0 and len(recs) == 2
        assert all(r["small"] == 2 for r in recs)

    def test_selftest_passes(self, capsys):
        assert main(["selftest", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert "selftest: ok" in out
        assert "FAIL" not in out
