"""CLI contract checks against the files in ``tests/golden``.

Run this module directly to rewrite the expected outputs after an
intentional format change.
"""

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from treesink import cli
from treesink.fileformat import ParseError, dumps, loads, parse, serialize
from treesink.oracles import evac_time
from treesink.tree import path

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "solve_path3_k1": ["solve", "path3.txt", "--k", "1"],
    "solve_path3_k3": ["solve", "path3.txt", "--k", "3"],
    "solve_path3_fast_json": ["solve", "path3.txt", "--algo", "fast", "--json"],
    "solve_commented": ["solve", "commented.txt"],
    "check_path3_t1": ["check", "path3.txt", "--threshold", "1"],
    "check_path3_t0": ["check", "path3.txt", "--threshold", "0"],
    "check_path3_k3_t0": ["check", "path3.txt", "--k", "3", "--threshold", "0"],
    "partition_path4_03": ["partition", "path4.txt", "--sinks", "0,3"],
    "partition_path3_all": ["partition", "path3.txt", "--sinks", "0,1,2"],
    "partition_path4_0": ["partition", "path4.txt", "--sinks", "0"],
    "validate_random12": ["validate", "random12.txt"],
}


def normalize(text: str) -> str:
    """Drop the timing field, the only nondeterministic part of a report."""
    out = []
    for line in text.splitlines(True):
        if line.startswith("{"):
            doc = json.loads(line)
            doc.pop("wall_time_ms", None)
            out.append(json.dumps(doc, sort_keys=True) + "\n")
        elif not line.startswith("wall_time_ms"):
            out.append(line)
    return "".join(out)


def run(argv):
    argv = [str(GOLDEN / a) if a.endswith(".txt") else a for a in argv]
    out = io.StringIO()
    code = cli.main(argv, out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_report(name):
    code, text = run(CASES[name])
    assert f"exit {code}\n" + normalize(text) == (GOLDEN / f"{name}.out").read_text()


def test_solve_path3_values():
    code, text = run(["solve", "path3.txt", "--k", "1", "--json"])
    doc = json.loads(text)
    assert code == 0 and doc["cost"] == 1 and doc["sinks"] == [1]
    assert doc["wall_time_ms"] >= 0 and doc["oracle_calls"] > 0


def test_report_blocks_reverify():
    inst = loads((GOLDEN / "commented.txt").read_text())
    doc = json.loads(run(["solve", "commented.txt", "--json"])[1])
    for s, block in doc["blocks"]:
        assert evac_time(inst, set(block), s) <= doc["cost"]


# -- exit codes ----------------------------------------------------------------

def test_exit_infeasible():
    assert run(["check", "path3.txt", "--threshold", "0"])[0] == 3


def test_exit_parse_error_names_the_line(capsys):
    assert run(["solve", "malformed.txt"])[0] == 1
    assert "line 3" in capsys.readouterr().err


def test_exit_missing_file(tmp_path):
    assert cli.main(["solve", str(tmp_path / "nope.txt")], io.StringIO()) == 1


def test_exit_usage_error():
    assert cli.main(["solve"], io.StringIO()) == 1
    assert cli.main(["frobnicate", "x"], io.StringIO()) == 1


@pytest.mark.parametrize("name", ["cycle.txt", "zero_cap.txt"])
def test_exit_invalid_instance(name):
    assert run(["solve", name])[0] == 2


def test_exit_bad_sinks():
    assert run(["partition", "path4.txt", "--sinks", "0,9"])[0] == 2


def test_exit_validation_mismatch(monkeypatch):
    real = cli.OPTIMIZERS["fast"]

    def off_by_one(inst, oracle, k=None, stats=None):
        cost, conf = real(inst, oracle, k, stats)
        return cost + 1, conf

    monkeypatch.setitem(cli.OPTIMIZERS, "fast", off_by_one)
    code, text = run(["validate", "random12.txt"])
    assert code == 4 and "mismatch" in text


def test_validate_above_cap_is_solver_only(capsys):
    code, text = run(["validate", "gen_n50_seed7.txt"])
    assert code == 0
    assert "cap" in capsys.readouterr().err


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "treesink.cli", "check",
                           str(GOLDEN / "path3.txt"), "--threshold", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 3


# -- file format ----------------------------------------------------------------

@pytest.mark.parametrize("name", ["path3.txt", "path4.txt", "commented.txt", "gen_n50_seed7.txt"])
def test_round_trip_is_byte_identical(name):
    text = (GOLDEN / name).read_text()
    assert serialize(parse(text)) == text


def test_missing_weights_default_to_zero():
    inst = loads("n 2\nedge 0 1 1 1\nweight 1 4\n")
    assert inst.weights == [0, 4] and inst.k == 1


@pytest.mark.parametrize("text,line", [
    ("n 2\nedge 0 1 1\n", 2),
    ("n 2\nn 2\n", 2),
    ("k 1\n", 2),
    ("n 2\nvertex 0\n", 2),
    ("n 2\nweight 0 1\nweight 0 2\n", 3),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.line == line


def test_dumps_of_fixture():
    assert dumps(path(3)) == (GOLDEN / "path3.txt").read_text()


# -- generation ----------------------------------------------------------------

def test_gen_path_matches_fixture():
    code, text = run(["gen", "--n", "3", "--shape", "path"])
    assert code == 0 and text == (GOLDEN / "path3.txt").read_text()


def test_gen_is_deterministic():
    args = ["gen", "--n", "50", "--seed", "7", "--max-tau", "5", "--max-cap", "3", "--max-w", "9"]
    assert run(args)[1] == run(args)[1] == (GOLDEN / "gen_n50_seed7.txt").read_text()


@pytest.mark.parametrize("shape", cli.SHAPES)
def test_gen_shapes_parse_back(shape):
    text = run(["gen", "--n", "20", "--seed", "1", "--shape", shape])[1]
    assert dumps(loads(text)) == text


def test_gen_single_vertex_solves_at_zero(tmp_path):
    f = tmp_path / "one.txt"
    f.write_text(run(["gen", "--n", "1"])[1])
    for k in ("1", "3"):
        doc = json.loads(run(["solve", str(f), "--k", k, "--json"])[1])
        assert doc["cost"] == 0 and doc["sinks"] == [0]


def test_gen_rejects_bad_size():
    assert run(["gen", "--n", "0"])[0] == 2


if __name__ == "__main__":
    for name, argv in CASES.items():
        code, text = run(argv)
        (GOLDEN / f"{name}.out").write_text(f"exit {code}\n" + normalize(text))
        print(name, code)
