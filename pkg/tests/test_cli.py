import io
import json
import subprocess
import sys

import pytest

from dfrieze.cli import main
from dfrieze.matrix import matrix_fast, parse_matrix
from dfrieze.polygon import build_dangulation, format_dangulation

from conftest import DECAGON_MATRIX, DODECAGON_MATRIX

OCTAGON = "# octagon\n8 3\n1 4\n2 4\n4 6\n1 6\n1 7\n"
DECAGON = "10 4\n2 5\n5 8\n1 8\n"
DODECAGON = "12 4\n1 4\n4 7\n7 12\n8 11\n"


@pytest.fixture
def run(tmp_path, capsys):
    def _run(*argv, text=None):
        args = list(argv)
        if text is not None:
            path = tmp_path / "input.txt"
            path.write_text(text)
            args.insert(1, str(path))
        out = io.StringIO()
        code = main(args, out)
        return code, out.getvalue(), capsys.readouterr().err
    return _run


def test_validate(run):
    code, out, _ = run("validate", text=OCTAGON)
    assert code == 0
    assert out.splitlines()[0] == "n=8 d=3 m=5, 6 faces"


@pytest.mark.parametrize("text,name", [
    ("9 4\n", "InvalidSize"),
    ("4 3\n1 3\n2 4\n", "CrossingDiagonals"),
    ("6 4\n1 3\n", "NotDAngulation"),
    ("6 4\n1 4\n1 4\n", "NotDAngulation"),
    ("six four\n", "ParseError"),
])
def test_validate_errors(run, text, name):
    code, _, err = run("validate", text=text)
    assert code == 2
    assert name in err


def test_missing_file_is_usage_error(run):
    code, _, err = run("validate", "/nonexistent/file")
    assert code == 3


def test_bad_subcommand_exit_code():
    proc = subprocess.run([sys.executable, "-m", "dfrieze", "nonsense"], capture_output=True, text=True)
    assert proc.returncode == 3


def test_stdin_input():
    proc = subprocess.run([sys.executable, "-m", "dfrieze", "matrix"], input=DODECAGON,
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_matrix(proc.stdout).rows() == DODECAGON_MATRIX


@pytest.mark.parametrize("text,golden", [(DECAGON, DECAGON_MATRIX), (DODECAGON, DODECAGON_MATRIX)])
def test_matrix_methods_agree(run, text, golden):
    outputs = [run("matrix", "--method", m, text=text)[1] for m in ("fast", "brute", "glue")]
    assert outputs[0] == outputs[1] == outputs[2]
    assert parse_matrix(outputs[0]).rows() == golden


def test_matrix_single_gon(run):
    code, out, _ = run("matrix", text="5 5\n")
    assert out == "0 1 1 1 1\n1 0 1 1 1\n1 1 0 1 1\n1 1 1 0 1\n1 1 1 1 0\n"


def test_matrix_round_trip_structured(run):
    T = build_dangulation(12, 4, [(1, 4), (4, 7), (7, 12), (8, 11)])
    code, out, _ = run("matrix", "--format", "structured", text=DODECAGON)
    doc = json.loads(out)
    assert doc["entries"] == [x for row in matrix_fast(T).rows() for x in row]


def test_brute_size_limit(run):
    big = format_dangulation(build_dangulation(16, 3, [(1, k) for k in range(3, 16)]))
    code, _, err = run("matrix", "--method", "brute", text=big)
    assert code == 3 and "SizeLimit" in err
    code, out, _ = run("matrix", "--method", "glue", text=big)
    assert code == 0


@pytest.mark.parametrize("text,det,divs", [
    (OCTAGON, "-64", "1^2 2^6"),
    (DECAGON, "-81", "1^6 3^4"),
    (DODECAGON, "-243", "1^7 3^5"),
])
def test_invariants(run, text, det, divs):
    code, out, _ = run("invariants", text=text)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == f"det {det}"
    assert lines[1] == f"divisors {divs}"
    assert lines[-1] == "PASS"


def test_invariants_structured(run):
    code, out, _ = run("invariants", "--format", "structured", text=OCTAGON)
    doc = json.loads(out)
    assert doc["passed"] and doc["determinant"] == -64


def test_frieze(run):
    code, out, _ = run("frieze", "--columns", "5", text="5 3\n2 4\n2 5\n")
    assert code == 0
    assert len(out.splitlines()) == 4
    assert out.splitlines()[1].split() == ["3", "1", "2", "2", "1"]


def test_minors(run):
    code, out, _ = run("minors", text=DODECAGON)
    grid = [[int(x) for x in line.split()] for line in out.splitlines()]
    assert [j + 1 for j, x in enumerate(grid[3]) if x == 1] == [1, 3, 5, 7, 11]
    code, out, _ = run("minors", "--format", "structured", text=DODECAGON)
    doc = json.loads(out)
    ones = sum(x == 1 for row in doc["minors"] for x in row)
    assert ones == len(doc["witnesses"])
    w = next(w for w in doc["witnesses"] if (w["e"], w["f"]) == (4, 1))
    assert w["sequence"] == [[4, 5], [4, 7], [1, 4], [1, 2]]


def test_hinge_command(tmp_path, capsys):
    path = tmp_path / "t.txt"
    path.write_text(DODECAGON)
    out = io.StringIO()
    assert main(["hinge", str(path), "4", "1"], out) == 0
    assert out.getvalue().splitlines()[0] == "(4,5) (4,7) (1,4) (1,2)"
    out = io.StringIO()
    assert main(["hinge", str(path), "4", "12"], out) == 0
    assert out.getvalue() == "none\n"
    assert main(["hinge", str(path), "4", "4"], io.StringIO()) == 3


def test_enumerate(run):
    code, out, _ = run("enumerate", "6", "4")
    assert out == "6 4\n1 4\n\n6 4\n2 5\n\n6 4\n3 6\n"
    code, out, _ = run("enumerate", "12", "3", "--count")
    assert out == "16796\n"
    code, _, err = run("enumerate", "9", "4")
    assert code == 2


def test_verify_small(run):
    code, out, _ = run("verify", "--dmax", "4", "--nmax", "8")
    assert code == 0
    assert out.splitlines()[-1] == "OK"


def test_verify_job_count_does_not_change_report(run):
    args = ("verify", "--dmin", "3", "--dmax", "5", "--nmax", "9", "--format", "structured")
    one = run(*args, "--jobs", "1")[1]
    two = run(*args, "--jobs", "2")[1]
    assert one == two
    assert json.loads(one)["failures"] == []


def test_verify_rejects_unknown_check(run):
    code, _, err = run("verify", "--checks", "symmetry,bogus")
    assert code == 3


def test_outputs_are_reproducible(run):
    first = [run(cmd, text=DODECAGON)[1] for cmd in ("matrix", "frieze", "minors", "invariants")]
    second = [run(cmd, text=DODECAGON)[1] for cmd in ("matrix", "frieze", "minors", "invariants")]
    assert first == second
