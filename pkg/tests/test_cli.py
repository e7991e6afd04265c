import csv
import io

import pytest

from eaqec.cli import main, parse_range
from eaqec.codes import dump_code, get_code


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCode:
    def test_show(self, capsys):
        code, out, _ = run(capsys, "code", "show", "--code", "five_qubit")
        assert code == 0
        assert "n=5 k=1 c=0 d=3" in out and "s = 2" in out

    def test_show_eaqec(self, capsys):
        code, out, _ = run(capsys, "code", "show", "--code", "bowen_3_1_2")
        assert code == 0 and "XZZ|XI" in out

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "code", "show", "--file", str(tmp_path / "none.txt"))
        assert code == 2 and "no such code file" in err

    def test_unknown_code(self, capsys):
        code, _, err = run(capsys, "code", "show", "--code", "nothing_here")
        assert code == 2 and "unknown code" in err

    def test_transform_round_trip(self, capsys, tmp_path):
        out_path = tmp_path / "ea.txt"
        code, _, _ = run(capsys, "code", "transform", "--code", "five_qubit", "--c", "2", "--out", str(out_path))
        assert code == 0
        code, out, _ = run(capsys, "code", "show", "--file", str(out_path))
        assert code == 0 and "n=3 k=1 c=2" in out

    def test_transform_too_many(self, capsys):
        code, _, err = run(capsys, "code", "transform", "--code", "five_qubit", "--c", "3")
        assert code == 3 and "at most 2" in err

    def test_bounds(self, capsys):
        code, out, _ = run(capsys, "code", "bounds", "--n", "7", "--k", "1", "--d", "5", "--c", "2")
        assert code == 0
        assert "hamming_ea: 211 <= 256 holds" in out
        assert "hamming_std: 352 <= 256 fails" in out

    def test_invariant_exit(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("n=5 k=1 d=5 nondegenerate\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n")
        code, _, err = run(capsys, "code", "show", "--file", str(path))
        assert code == 4 and "invariant" in err


class TestTable:
    def test_build(self, capsys):
        code, out, _ = run(capsys, "table", "build", "--code", "bowen_3_1_2")
        assert code == 0 and "entries: 16" in out

    def test_export(self, capsys):
        code, out, _ = run(capsys, "table", "export", "--code", "bit_flip", "--pa", "0.1")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and len(rows) == 5 and rows[1][:2] == ["00", "III"]

    def test_minprob(self, capsys):
        code, out, _ = run(capsys, "table", "build", "--code", "bowen_3_1_2", "--strategy", "minprob",
                           "--pa", "0.01", "--pb", "0.3")
        assert code == 0 and "(0, 2): 9" in out


class TestFidelity:
    def test_poly(self, capsys):
        code, out, _ = run(capsys, "fidelity", "poly", "--code", "five_qubit")
        assert (code, out.strip()) == (0, "1, 0, -45/8, 75/8, -45/8, 9/8")

    @pytest.mark.parametrize("pa, want", [("0", "1.0"), ("1", "0.25")])
    def test_exact_endpoints(self, capsys, pa, want):
        code, out, _ = run(capsys, "fidelity", "exact", "--code", "five_qubit", "--pa", pa)
        assert (code, out.strip()) == (0, want)

    def test_mc_deterministic(self, capsys):
        args = ("fidelity", "mc", "--code", "five_qubit", "--pa", "0.1", "--N", "20000", "--seed", "4")
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args, "--workers", "3")
        assert a == b and a.startswith("estimate ")

    def test_bounds(self, capsys):
        code, out, _ = run(capsys, "fidelity", "bounds", "--code", "steane", "--pa", "0.1")
        vals = dict(line.split() for line in out.splitlines())
        assert code == 0
        assert float(vals["rep_bound"]) <= float(vals["exact"])
        assert float(vals["distance_bound"]) <= float(vals["exact"])

    def test_capability_exit(self, capsys, tmp_path):
        path = tmp_path / "big.txt"
        path.write_text("\n".join("I" * i + "ZZ" + "I" * (14 - i) for i in range(15)))
        code, _, err = run(capsys, "fidelity", "exact", "--file", str(path), "--pa", "0.1")
        assert code == 3 and "limited to 14" in err

    def test_bad_rate(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["fidelity", "exact", "--code", "five_qubit", "--pa", "2"])
        assert exc.value.code == 2


class TestSweep:
    def test_two_schemes(self, capsys, tmp_path):
        out_path = tmp_path / "s.csv"
        code, _, _ = run(capsys, "sweep", "--scheme", "bowen_3_1_2", "--scheme", "ea_repetition_3_1_2",
                         "--pa", "0.1:0.9:5", "--ratio", "1", "--out", str(out_path))
        rows = list(csv.reader(out_path.open()))
        assert code == 0
        assert rows[0] == ["p_a", "p_b", "bowen_3_1_2", "ea_repetition_3_1_2"]
        assert len(rows) == 6
        diffs = [float(r[2]) - float(r[3]) for r in rows[1:]]
        assert max(diffs) > 0 > min(diffs)

    def test_origin(self, capsys):
        code, out, _ = run(capsys, "sweep", "--code", "five_qubit", "--code", "steane", "--pa", "0")
        assert out.splitlines()[1] == "0,0,1,1"

    def test_rerun_identical(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            run(capsys, "sweep", "--code", "five_qubit", "--pa", "0:0.5:3", "--method", "mc",
                "--N", "5000", "--seed", "9", "--out", str(p))
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_mc_unsupported(self, capsys):
        code, _, _ = run(capsys, "sweep", "--scheme", "seq:bowen_3_1_2+four_two_two", "--pa", "0.1", "--method", "mc")
        assert code == 3

    def test_no_scheme(self, capsys):
        code, _, _ = run(capsys, "sweep", "--pa", "0.1")
        assert code == 2

    def test_range_parsing(self):
        assert parse_range("0:1:3") == [0.0, 0.5, 1.0]
        assert parse_range("0.2") == [0.2]


class TestCompare:
    def test_columns(self, capsys):
        code, out, _ = run(capsys, "compare", "--scheme", "ea_repetition_3_1_2", "--scheme", "bowen_3_1_2",
                           "--pa", "0.1", "--ratio", "1")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0][-2:] == ["best", "bowen_3_1_2-ea_repetition_3_1_2"]
        assert rows[1][-2] == "bowen_3_1_2"

    def test_mismatched_k(self, capsys):
        code, _, err = run(capsys, "compare", "--code", "five_qubit", "--code", "four_two_two", "--pa", "0.1")
        assert code == 2 and "different numbers" in err


class TestDistill:
    def test_fidelity(self, capsys):
        code, out, _ = run(capsys, "distill", "fidelity", "--code", "five_qubit", "--pc", "1")
        assert (code, out.strip()) == (0, "0.25")

    def test_compose_trivial(self, capsys):
        code, out, _ = run(capsys, "distill", "compose", "--code", "four_two_two", "--outer", "bowen_3_1_2",
                           "--pa", "0.1", "--pc", "0")
        assert code == 0 and 0 < float(out) < 1

    def test_compose_needs_outer(self, capsys):
        code, _, _ = run(capsys, "distill", "compose", "--code", "four_two_two")
        assert code == 2

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "five.txt"
        path.write_text(dump_code(get_code("five_qubit")))
        code, out, _ = run(capsys, "distill", "fidelity", "--file", str(path), "--pc", "0")
        assert (code, out.strip()) == (0, "1.0")
