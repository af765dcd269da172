import io

import pytest

from revarith.cli import run
from revarith.designs import DesignId, build_half
from revarith.netlist import parse, serialize


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


class TestListing:
    def test_gates(self):
        code, text = call("gates")
        assert code == 0
        for name in ("NOT", "FG", "PG", "TR", "F"):
            assert name in text

    def test_gates_tsv(self):
        code, text = call("gates", "--tsv")
        rows = text.splitlines()
        assert code == 0 and len(rows) == 7
        assert all(len(r.split("\t")) == 5 for r in rows)

    def test_truth_fg(self):
        code, text = call("truth", "FG", "--tsv")
        rows = [r.split("\t") for r in text.splitlines()]
        assert code == 0
        assert rows[0] == ["A", "B", "P", "Q"]
        assert [r[2:] for r in rows[1:]] == [["0", "0"], ["1", "1"],
                                             ["0", "1"], ["1", "0"]]

    def test_truth_three_line(self):
        code, text = call("truth", "TR", "--tsv")
        assert code == 0 and len(text.splitlines()) == 9


class TestBuildSim:
    def test_build_stdout_matches_serialize(self):
        code, text = call("build", "--design", "2", "--unit", "half")
        assert code == 0
        assert text == serialize(build_half(DesignId.D2))

    def test_build_file_round_trip(self, tmp_path):
        f = tmp_path / "d3.revnet"
        assert call("build", "--design", "3", "--width", "4",
                    "--out", str(f))[0] == 0
        c = parse(f.read_text())
        assert c.name == "d3_ripple4"
        assert serialize(c) == f.read_text()

    def test_sim_mode(self, tmp_path):
        f = tmp_path / "h.revnet"
        call("build", "--design", "2", "--unit", "half", "--out", str(f))
        code, text = call("sim", "--file", str(f), "--set", "A=1,B=1",
                          "--mode", "sub")
        assert code == 0
        assert "S_D=0" in text and "C_B=0" in text

    def test_sim_raw_ctrl(self, tmp_path):
        f = tmp_path / "h.revnet"
        call("build", "--design", "3", "--unit", "half", "--out", str(f))
        code, text = call("sim", "--file", str(f), "--set",
                          "A=1,B=1,ctrl=0")
        assert code == 0 and "C_B=1" in text

    def test_sim_missing_input(self, tmp_path):
        f = tmp_path / "h.revnet"
        call("build", "--design", "3", "--unit", "half", "--out", str(f))
        assert call("sim", "--file", str(f), "--set", "A=1")[0] == 2

    def test_sim_bad_file(self, tmp_path):
        f = tmp_path / "bad.revnet"
        f.write_text(".version 1\n.name x\n")
        assert call("sim", "--file", str(f))[0] == 2
        assert call("sim", "--file", str(tmp_path / "nope"))[0] == 2


class TestVerify:
    def test_exhaustive_eight_bit(self):
        code, text = call("verify", "--design", "3", "--width", "8",
                          "--exhaustive")
        assert code == 0
        assert "131072 vectors checked, 0 mismatches" in text

    def test_sampled(self):
        code, text = call("verify", "--design", "1", "--width", "32",
                          "--samples", "500", "--seed", "3", "--tsv")
        assert code == 0
        assert text.splitlines()[1].split("\t")[3] == "1000"

    def test_jobs(self):
        assert call("verify", "--design", "2", "--width", "6",
                    "--jobs", "2")[0] == 0

    def test_usage_errors(self):
        assert call("verify", "--design", "4")[0] == 2
        assert call("verify", "--design", "1", "--width", "20",
                    "--exhaustive")[0] == 2
        assert call("verify", "--design", "1", "--jobs", "0")[0] == 2


class TestMetrics:
    def test_paper_accounting_default(self):
        code, text = call("metrics", "--design", "1", "--width", "8", "--tsv")
        assert code == 0
        assert text.splitlines()[1].split("\t")[2:] == ["60", "23", "38",
                                                        "159"]

    def test_as_built(self):
        code, text = call("metrics", "--design", "3", "--width", "8",
                          "--as-built", "--tsv")
        assert text.splitlines()[1].split("\t")[2:] == ["31", "8", "16", "76"]

    def test_unit(self):
        code, text = call("metrics", "--design", "2", "--unit", "full",
                          "--tsv")
        assert text.splitlines()[1].split("\t")[2:] == ["4", "1", "3", "14"]

    def test_exclusive_flags(self):
        assert call("metrics", "--design", "1", "--paper-accounting",
                    "--as-built")[0] == 2


class TestQuantum:
    def test_decompose_fredkin(self):
        code, text = call("decompose", "FREDKIN", "--tsv")
        fields = dict(r.split("\t") for r in text.splitlines())
        assert code == 0
        assert fields["unitary_match"] == "true"
        assert (fields["grouped_cost"], fields["catalog_cost"]) == ("5", "5")

    def test_search_short(self):
        code, text = call("search", "TOFFOLI", "--max-len", "2")
        assert code == 0 and "no sequence" in text

    def test_search_rejects_two_line_gate(self):
        assert call("search", "FG")[0] == 2


class TestEquivCompare:
    def test_equiv(self, tmp_path):
        f1, f2 = tmp_path / "a.revnet", tmp_path / "b.revnet"
        call("build", "--design", "2", "--unit", "full", "--out", str(f1))
        call("build", "--design", "2", "--unit", "full", "--out", str(f2))
        assert call("equiv", str(f1), str(f2)) == (0, "equivalent\n")

    def test_not_equiv(self, tmp_path):
        f1, f2 = tmp_path / "a.revnet", tmp_path / "b.revnet"
        call("build", "--design", "2", "--unit", "full", "--out", str(f1))
        call("build", "--design", "3", "--unit", "full", "--out", str(f2))
        assert call("equiv", str(f1), str(f2)) == (1, "not equivalent\n")

    def test_equiv_interface_mismatch(self, tmp_path):
        f1, f2 = tmp_path / "a.revnet", tmp_path / "b.revnet"
        call("build", "--design", "3", "--unit", "half", "--out", str(f1))
        call("build", "--design", "3", "--unit", "full", "--out", str(f2))
        assert call("equiv", str(f1), str(f2))[0] == 2

    def test_compare(self):
        code, text = call("compare", "--paper")
        assert code == 0
        assert text.endswith("result: all values reproduced\n")


class TestDispatch:
    def test_unknown_subcommand(self):
        assert call("frobnicate")[0] == 2

    def test_unknown_flag(self):
        assert call("gates", "--bogus")[0] == 2

    def test_unknown_gate(self):
        assert call("truth", "XYZ")[0] == 2

    def test_help_exits_zero(self):
        assert call("--help")[0] == 0

    @pytest.mark.parametrize("argv", [
        ("gates",), ("truth", "PG"), ("compare", "--paper", "--tsv"),
        ("metrics", "--design", "2", "--width", "16"),
        ("decompose", "TR"), ("build", "--design", "1", "--width", "3"),
    ])
    def test_byte_identical(self, argv):
        assert call(*argv) == call(*argv)
