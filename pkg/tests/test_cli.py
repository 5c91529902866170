import json

import pytest

from gpw.cli import main
from gpw.harness import FAIL, PASS, _identity_claim, run_suite
from gpw.polynomials import parse
from gpw.constructions import z3xz5_merged_grading


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_check_text(capsys):
    assert run(capsys, "check", "pauli-m2", "-g", "[x1@e,x2@e]") == (0, "HOLDS\n")
    code, out = run(capsys, "check", "example-3-18", "-g", "[x1@e,x2@e]", "--expect", "holds")
    assert code == 1 and out.startswith("FAILS")


def test_check_ungraded(capsys):
    code, out = run(capsys, "check", "grassmann:3", "-g", "[x1@e,x2@e,x3@e]", "--ungraded")
    assert (code, out) == (0, "HOLDS\n")


def test_analyze_quaternions(capsys):
    code, out = run(capsys, "analyze", "quaternion")
    assert code == 0
    assert out.splitlines()[0] == "neutral central: yes; commutator ideal: not nilpotent; Lie solvable: no"


def test_build_validate_round_trip(tmp_path, capsys):
    path = tmp_path / "q.alg"
    assert run(capsys, "build", "quaternion", "-o", str(path))[0] == 0
    assert run(capsys, "validate", str(path)) == (0, "valid\n")
    path.write_text(path.read_text().replace("1 1 -> [(0, -1)]", "1 1 -> [(1, -1)]"))
    code, out = run(capsys, "validate", str(path))
    assert code == 1 and "grading" in out


def test_search_and_canon2(capsys):
    code, out = run(capsys, "search", "nilspan", "--degrees", "(1),(1)")
    assert code == 0 and out.startswith("2 independent identities")
    code, out = run(capsys, "canon2", "pauli-m2", "-g", "[x1@e,x2@e]", "--report", "json")
    assert code == 0 and json.loads(out)["gamma"]
    assert run(capsys, "canon2", "pauli-m2", "-g", "x1@(1,1)*x2@(1,1)")[0] == 1


def test_envelope(capsys):
    code, out = run(capsys, "envelope", "w3-lifted", "-n", "6", "--report", "json")
    assert code == 0 and json.loads(out)["dim"] == 95


def test_usage_and_resource_exit_codes(capsys, monkeypatch):
    assert main(["check", "no-such-algebra", "-g", "x1@e"]) == 2
    assert main(["check", "pauli-m2", "-g", "x1@("]) == 2
    assert main(["verify", "no-such-suite"]) == 2
    monkeypatch.setenv("GPW_MAX_EVALS", "10")
    assert main(["check", "m:3", "-g", "[x1@e,x2@e,x3@e]", "--ungraded"]) == 3
    capsys.readouterr()


def test_verify_json_is_deterministic(capsys):
    first = run(capsys, "verify", "lemma-3-04", "--report", "json")
    second = run(capsys, "verify", "lemma-3-04", "--report", "json")
    assert first == second and first[0] == 0
    assert all(r["status"] == PASS for r in json.loads(first[1]))
    assert "runtime" not in first[1]


def test_verify_text_lines(capsys):
    code, out = run(capsys, "verify", "theorem-3-30")
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("summary")]
    assert lines and all(l.startswith("PASS") for l in lines)
    assert any("w3" in l for l in lines)


def test_problem_star_is_exploratory(capsys):
    code, out = run(capsys, "verify", "problem-star")
    assert code == 0 and "out-of-scope" in out and "FAIL " not in out


def test_failure_reproducer_replays(capsys):
    # a deliberately wrong expectation yields a fail report whose reproducer replays via the CLI
    G = z3xz5_merged_grading().group
    g = parse("[x1@e, x2@e]", G)
    status, details, rep = _identity_claim("example-3-18", g, True)()
    assert status == FAIL
    code, out = run(capsys, "check", rep["algebra"], "-g", rep["polynomial"], "--report", "json")
    payload = json.loads(out)
    assert payload["verdict"] == "FAILS"
    assert list(payload["witness"]["assignment"].values()) == rep["witness"]


@pytest.mark.parametrize("suite", ["examples", "theorem-3-06", "prop-3-28", "lemma-3-23", "radical"])
def test_suites_pass(suite):
    reports = run_suite(suite)
    assert reports and all(r.status == PASS for r in reports), [r.line() for r in reports if r.status != PASS]
