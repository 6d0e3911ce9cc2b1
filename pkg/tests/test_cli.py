import os

import pytest

from canalcount.cli import main
from conftest import function_of


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_xor(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "2", "--table", "0110")
        assert code == 0
        assert "m=2 k=0 r=0" in out
        assert "(non-canalizing)" in out

    def test_identity_bidirectional(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "1", "--table", "01")
        assert code == 0
        assert "m=1 k=1 r=1" in out
        assert "layer 1: x1 (a=0 -> b=0) [bidirectional]" in out

    def test_paper_example(self, capsys, paper_example):
        code, out, _ = run_cli(
            capsys, "classify", "--n", "4", "--table", paper_example.to_binary()
        )
        assert code == 0
        assert "m=4 k=2 r=1" in out
        assert "layer 1: x1 (a=1 -> b=1), x2 (a=0 -> b=1)" in out
        assert "core: 0110 (x3 x4)" in out

    def test_parse_failure_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--n", "2", "--table", "01")
        assert code == 1
        assert err


class TestCount:
    def test_max_n_3(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--max-n", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,m,k,r,count"
        assert "3,3,1,1,24" in lines

    def test_max_n_0(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--max-n", "0")
        assert code == 0
        assert out.splitlines()[1:] == ["0,0,0,0,2"]

    def test_ncf_rows_n4(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--max-n", "4", "--n", "4", "--m", "4", "--k", "4"
        )
        assert code == 0
        rows = [line.split(",") for line in out.splitlines()[1:]]
        assert sum(int(row[4]) for row in rows) == 736

    def test_cap(self, capsys):
        code, _, err = run_cli(capsys, "count", "--max-n", "17")
        assert code == 1 and "capped" in err


class TestCensus:
    def test_n3_matches(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--n", "3")
        assert code == 0
        assert "all cells match" in out

    def test_outdir_files(self, capsys, tmp_path):
        code, _, _ = run_cli(
            capsys, "census", "--n", "2", "--outdir", str(tmp_path)
        )
        assert code == 0
        assert (tmp_path / "census_n2_histogram.csv").exists()
        assert (tmp_path / "census_n2_comparison.csv").exists()

    def test_sampled(self, capsys):
        code, out, _ = run_cli(
            capsys, "census", "--n", "2", "--samples", "200", "--seed", "5"
        )
        assert code == 0
        assert "sampled census: n=2 samples=200 seed=5" in out

    def test_exhaustive_cap_without_checkpoint(self, capsys):
        code, _, err = run_cli(capsys, "census", "--n", "5")
        assert code == 1
        assert "census_resumable" in err or "capped" in err

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        import canalcount.cli as cli_mod
        from canalcount.enumeration import CountTable, build_table

        def tampered(max_n):
            table = build_table(max_n)
            cells = dict(table.cells)
            cells[(2, 2, 2, 1)] += 1
            return CountTable(max_n=max_n, cells=cells)

        monkeypatch.setattr(cli_mod, "build_table", tampered)
        code, out, _ = run_cli(capsys, "census", "--n", "2")
        assert code == 2
        assert "mismatched" in out

    def test_resumable(self, capsys, tmp_path):
        ckpt = str(tmp_path / "n2.ckpt")
        code, out, _ = run_cli(
            capsys,
            "census", "--n", "2", "--checkpoint", ckpt,
            "--chunk-size", "5", "--max-chunks", "2",
        )
        assert code == 0 and "incomplete" in out
        code, out, _ = run_cli(
            capsys,
            "census", "--n", "2", "--checkpoint", ckpt, "--chunk-size", "5",
        )
        assert code == 0 and "all cells match" in out


class TestPrevalence:
    def test_delta_sign_pattern(self, capsys):
        code, out, _ = run_cli(capsys, "prevalence", "--max-n", "5")
        assert code == 0
        lines = out.splitlines()
        signs = [float(line.split(",")[5]) > 0 for line in lines[1:]]
        assert signs == [False, False, True, True, True]

    def test_pretty(self, capsys):
        code, out, _ = run_cli(
            capsys, "prevalence", "--max-n", "2", "--format", "pretty"
        )
        assert code == 0
        assert "n=1:" in out and "delta_can=-1" in out

    def test_byte_identical_reruns(self, capsys):
        _, first, _ = run_cli(capsys, "prevalence", "--max-n", "4")
        _, second, _ = run_cli(capsys, "prevalence", "--max-n", "4")
        assert first == second


class TestFigures:
    def test_writes_csvs_and_charts(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "figures", "--max-n", "3", "--outdir", str(tmp_path)
        )
        assert code == 0
        names = {os.path.basename(line) for line in out.splitlines()}
        assert names == {
            "fig1_depth_all.csv",
            "fig2_depth_nondegenerate.csv",
            "fig3_delta.csv",
            "fig1_depth_all.png",
            "fig2_depth_nondegenerate.png",
            "fig3_delta.png",
        }

    def test_unwritable_outdir(self, capsys, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        code, _, err = run_cli(
            capsys, "figures", "--max-n", "2", "--outdir", str(blocker)
        )
        assert code == 1 and err


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 1

    def test_missing_required_flag(self, capsys):
        assert run_cli(capsys, "classify", "--n", "2")[0] == 1

    @pytest.mark.parametrize("flag", ["--n"])
    def test_bad_int(self, capsys, flag):
        assert run_cli(capsys, "classify", flag, "two", "--table", "01")[0] == 1
