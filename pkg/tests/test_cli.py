from __future__ import annotations

import io
import subprocess
import sys
from pathlib import Path

import pytest

from grooming.bounds import known_M
from grooming.cli import emit_table, main
from grooming.graph import complete_graph, cycle_graph, parse_graph, petersen_graph, write_graph
from grooming.partition import AdmAssignment, parse_partition, verify_partition

WITNESS = Path(__file__).parent / "fixtures" / "m33_witness.cert"


def run(argv, capsys, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def petersen_file(tmp_path):
    p = tmp_path / "petersen.txt"
    p.write_text(write_graph(petersen_graph()))
    return p


class TestTable:
    def test_cells(self):
        grid = {(C, d): known_M(C, d) for C in range(1, 7) for d in range(1, 7)}
        text = emit_table(grid)
        rows = {line.split()[0]: line.split()[1:] for line in text.splitlines()[1:7]}
        assert rows["C=3"][2] == "3"
        assert rows["C=4"][2] == "2?"
        assert rows["C=5"][5] == "≥4"
        assert rows["C=1"] == ["1", "2", "3", "4", "5", "6"]

    def test_one_footnote_per_cell(self, capsys):
        code, out, _ = run(["bounds", "--C", "1..6", "--delta", "1..6"], capsys)
        assert code == 0
        assert sum(line.startswith("[C=") for line in out.splitlines()) == 36

    def test_porcelain(self, capsys):
        _, out, _ = run(["bounds", "--C", "4", "--delta", "3", "--porcelain"], capsys)
        assert out == "cell C 4 delta 3 lo 2 hi 3 status conjectured show 2?\n"


class TestDecompose:
    def test_petersen_cubic(self, capsys, petersen_file):
        code, out, _ = run(["decompose", "--method", "cubic", "--grooming", "3", "--input", str(petersen_file)], capsys)
        assert code == 0
        lines = out.splitlines()
        assert sum(line.startswith("B: ") for line in lines) == 5
        assert lines[-1] == "cost 20 max-appearances 2"

    @pytest.mark.parametrize("method, C", [("cubic", 3), ("linear-forest", 5)])
    def test_output_reverifies(self, capsys, petersen_file, method, C):
        _, out, _ = run(["decompose", "--method", method, "--grooming", str(C), "--input", str(petersen_file)], capsys)
        p = parse_partition(petersen_graph(), C, out)
        assert verify_partition(p, AdmAssignment.uniform(10, 2))

    def test_degree2_from_stdin(self, capsys, monkeypatch):
        code, out, _ = run(
            ["decompose", "--method", "degree2", "--grooming", "3", "--singles", "0,1"],
            capsys,
            stdin=write_graph(cycle_graph(8)),
            monkeypatch=monkeypatch,
        )
        assert code == 0
        p = parse_partition(cycle_graph(8), 3, out)
        assert p.appearances()[0] == p.appearances()[1] == 1

    def test_precondition_is_a_usage_error(self, capsys, tmp_path):
        f = tmp_path / "k4.txt"
        f.write_text(write_graph(complete_graph(4)))
        code, _, err = run(["decompose", "--method", "degree2", "--grooming", "3", "--input", str(f)], capsys)
        assert code == 2 and "degree" in err

    def test_porcelain_fields(self, capsys, petersen_file):
        _, out, _ = run(["decompose", "--method", "cubic", "--grooming", "3", "--porcelain", "--input", str(petersen_file)], capsys)
        lines = out.splitlines()
        assert lines[0].startswith("part 0 ") and lines[-2:] == ["cost 20", "max-appearances 2"]


class TestSolvers:
    def test_solve_worst_case(self, capsys):
        code, out, _ = run(["solve-worst-case", "5", "3", "2"], capsys)
        assert code == 0 and out.splitlines()[0] == "optimum 8"

    def test_solve_worst_case_class(self, capsys):
        _, out, _ = run(["solve-worst-case", "4", "3", "3", "--class", "bridgeless-cubic"], capsys)
        assert out.splitlines()[0] == "optimum 7"

    def test_worst_case_limit(self, capsys):
        code, _, err = run(["solve-worst-case", "9", "3", "2"], capsys)
        assert code == 2 and "limit" in err

    def test_solve_graph(self, capsys, tmp_path):
        f = tmp_path / "k4.txt"
        f.write_text(write_graph(complete_graph(4)))
        code, out, _ = run(["solve-graph", "--grooming", "3", "--input", str(f)], capsys)
        assert code == 0 and out.splitlines()[0] == "optimum 7"
        p = parse_partition(complete_graph(4), 3, out)
        assert p.cost() == 7

    def test_check_feasible_and_infeasible(self, capsys, tmp_path):
        f = tmp_path / "c4.txt"
        f.write_text(write_graph(cycle_graph(4)) + "".join(f"A {v} 2\n" for v in range(4)))
        code, out, _ = run(["check", "--grooming", "2", "--input", str(f)], capsys)
        assert code == 0 and out.startswith("feasible")
        f.write_text(write_graph(cycle_graph(4)) + "".join(f"A {v} 1\n" for v in range(4)))
        code, out, _ = run(["check", "--grooming", "3", "--input", str(f)], capsys)
        assert code == 1 and out.startswith("infeasible")

    def test_check_missing_caps(self, capsys, tmp_path):
        f = tmp_path / "c4.txt"
        f.write_text(write_graph(cycle_graph(4)) + "A 0 2\n")
        code, _, err = run(["check", "--grooming", "2", "--input", str(f)], capsys)
        assert code == 2 and "vertex 1" in err
        code, _, _ = run(["check", "--grooming", "2", "--default-cap", "2", "--input", str(f)], capsys)
        assert code == 0


class TestHarnessCommands:
    def test_tightness(self, capsys):
        code, out, _ = run(["tightness", "--n", "6", "--grooming", "3"], capsys)
        assert code == 0 and out.splitlines()[-1] == "VERIFIED"
        code, out, _ = run(["tightness", "--n", "4", "--grooming", "4"], capsys)
        assert code == 1 and out.splitlines()[-1].startswith("REFUTED-BY")

    def test_witness_none_small(self, capsys):
        code, out, _ = run(["witness", "m33", "--max-n", "8"], capsys)
        assert code == 0 and out.startswith("claim no-M(3,3)>2-witness-up-to-n 8")

    def test_witness_requires_max_n(self, capsys):
        code, _, err = run(["witness", "m33"], capsys)
        assert code == 2 and "--max-n" in err

    def test_conjecture_resume(self, capsys, tmp_path):
        ckpt = tmp_path / "c.ckpt"
        code, _, err = run(["conjecture", "4-3", "--max-n", "6", "--resume", str(ckpt), "--stop-after", "20"], capsys)
        assert code == 2 and "resume" in err and ckpt.exists()
        code, out, _ = run(["conjecture", "4-3", "--max-n", "6", "--resume", str(ckpt)], capsys)
        assert code == 0
        _, fresh, _ = run(["conjecture", "4-3", "--max-n", "6"], capsys)
        assert out == fresh

    def test_verify_fixture(self, capsys):
        code, out, _ = run(["verify", "--input", str(WITNESS)], capsys)
        assert code == 0 and out.splitlines()[-1] == "OK"

    def test_verify_forged(self, capsys, tmp_path):
        forged = tmp_path / "f.cert"
        forged.write_text("claim M(3,3)>2-witness\ngraph\n" + write_graph(petersen_graph()) + "end\nVERIFIED\n")
        code, out, _ = run(["verify", "--input", str(forged)], capsys)
        assert code == 1 and "FAILED" in out


class TestPlumbing:
    def test_missing_file(self, capsys):
        code, _, err = run(["solve-graph", "--grooming", "3", "--input", "/no/such/file"], capsys)
        assert code == 2 and "/no/such/file" in err

    def test_bad_graph_names_line(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("n 2\ne 0 0\n")
        code, _, err = run(["solve-graph", "--grooming", "3", "--input", str(f)], capsys)
        assert code == 2 and "line 2" in err and "self-loop" in err

    def test_usage_error_names_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["decompose", "--method", "bogus", "--grooming", "3"])
        assert info.value.code == 2
        assert "--method" in capsys.readouterr().err

    def test_workers_must_be_positive(self, capsys):
        code, _, err = run(["bounds", "--workers", "0"], capsys)
        assert code == 2 and "--workers" in err

    def test_seed_in_header(self, capsys):
        _, out, _ = run(["solve-worst-case", "4", "2", "2", "--seed", "7"], capsys)
        assert out.splitlines()[0] == "# solve-worst-case seed 7"

    def test_byte_identical_runs(self, capsys, petersen_file):
        argv = ["decompose", "--method", "linear-forest", "--grooming", "5", "--input", str(petersen_file)]
        assert run(argv, capsys)[1] == run(argv, capsys)[1]

    def test_output_file(self, capsys, tmp_path):
        out_path = tmp_path / "t.txt"
        code, out, _ = run(["bounds", "--output", str(out_path)], capsys)
        assert code == 0 and out == "" and "C=3" in out_path.read_text()

    def test_module_entry_point(self, petersen_file):
        r = subprocess.run(
            [sys.executable, "-m", "grooming", "decompose", "--method", "cubic", "--grooming", "3", "--input", str(petersen_file)],
            capture_output=True,
            text=True,
        )
        assert r.returncode == 0 and r.stdout.endswith("cost 20 max-appearances 2\n")
        assert parse_graph(petersen_file.read_text()) == petersen_graph()
