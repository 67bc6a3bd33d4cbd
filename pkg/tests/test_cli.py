import json

from magtree.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coproduct_command(capsys):
    code, out, err = run(capsys, "coproduct", "--bound", "2", "1*x1")
    assert code == 0
    assert out == "1*x1#1 + 1*1#x1\n"


def test_shuffle_command(capsys):
    code, out, _ = run(capsys, "shuffle", "--bound", "2", "1*x1", "1*x2")
    assert code == 0
    assert out == "1*(x1 x2) + 1*(x2 x1)\n"


def test_trees_command_counts(capsys):
    code, out, _ = run(capsys, "trees", "--n", "4", "--bound", "omega")
    assert code == 0
    assert len(out.strip().splitlines()) == 11


def test_prim_command_json(capsys):
    code, out, _ = run(capsys, "prim", "--n", "3", "--bound", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["dimension"] == 8
    assert len(payload["basis"]) == 8


def test_character_command(capsys):
    code, out, _ = run(capsys, "character", "--n", "4", "--bound", "omega")
    assert code == 0
    assert out.strip() == "8*s[1,1,1,1] + 25*s[2,1,1] + 16*s[2,2] + 25*s[3,1] + 8*s[4]"
    code, oracle_out, _ = run(capsys, "character", "--n", "3", "--bound", "2", "--oracle")
    assert code == 0
    assert oracle_out.strip() == "1*s[1,1,1] + 3*s[2,1] + 1*s[3]"


def test_sequences_csv(capsys):
    code, out, _ = run(capsys, "sequences", "--max-degree", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,catalan")
    assert lines[4].split(",")[:3] == ["4", "5", "11"]


def test_byte_identical_reruns(capsys):
    first = run(capsys, "prim", "--n", "3", "--bound", "omega", "--format", "json")
    second = run(capsys, "prim", "--n", "3", "--bound", "omega", "--format", "json")
    assert first == second
    third = run(capsys, "sequences", "--max-degree", "8", "--format", "json")
    fourth = run(capsys, "sequences", "--max-degree", "8", "--format", "json")
    assert third == fourth


def test_byte_identical_across_processes():
    import subprocess
    import sys

    cmd = [sys.executable, "-m", "magtree.cli", "prim", "--n", "3", "--bound", "2",
           "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1]


def test_golden_outputs(capsys):
    code, out, _ = run(capsys, "trees", "--n", "3", "--bound", "omega")
    assert code == 0
    assert out == "(x1 x1 x1)\n(x1 (x1 x1))\n((x1 x1) x1)\n"
    code, out, _ = run(capsys, "prim", "--n", "2", "--bound", "2", "--format", "json")
    assert out == (
        '{\n'
        '  "schema": 1,\n'
        '  "command": "prim",\n'
        '  "bound": "2",\n'
        '  "n": 2,\n'
        '  "labels": "multilinear",\n'
        '  "dimension": 1,\n'
        '  "basis": [\n'
        '    "-1*(x1 x2) + 1*(x2 x1)"\n'
        '  ]\n'
        '}\n'
    )


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "PASS  overall" in out
    assert "FAIL" not in out


def test_verify_rejects_csv(capsys):
    code, _, err = run(capsys, "verify", "--format", "csv")
    assert code == 2
    assert "csv" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "coproduct", "--bound", "2", "1*x1 +")
    assert code == 2
    assert "error" in err


def test_bad_bound_exit_code(capsys):
    code, _, err = run(capsys, "trees", "--n", "3", "--bound", "1")
    assert code == 2
    code, _, err = run(capsys, "trees", "--n", "3", "--bound", "seven")
    assert code == 2


def test_cell_cap_exit_code(capsys):
    code, _, err = run(capsys, "prim", "--n", "4", "--bound", "2", "--cell-cap", "10")
    assert code == 3
    assert "resource" in err


def test_vars_multiset(capsys):
    code, out, _ = run(capsys, "prim", "--n", "3", "--bound", "2", "--vars", "x1,x1,x2")
    assert code == 0
    assert out.splitlines()[0] == "dimension 4"
    code, _, err = run(capsys, "prim", "--n", "2", "--bound", "2", "--vars", "x1,x1,x2")
    assert code == 2
