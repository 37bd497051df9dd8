import json
import subprocess
import sys
from pathlib import Path

import pytest

from frobcover import formats
from frobcover.cli import main
from frobcover.errors import InputError

INPUTS = Path(__file__).resolve().parent.parent / "inputs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_malformed_json_reports_position():
    with pytest.raises(InputError, match="line"):
        formats.loads('{"X": [1, 2,]}')


def test_missing_key_names_path():
    with pytest.raises(InputError, match="coefficients"):
        formats.parse_polynomial({})


def test_covering_round_trip_through_json():
    c = formats.parse_covering(formats.load(INPUTS / "branched_cover.json"))
    again = formats.parse_covering(json.loads(json.dumps(formats.dump_covering(c))))
    assert again == c


def test_algebra_round_trip():
    A = formats.parse_algebra({"points": ["p", "q"]})
    B = formats.parse_algebra(formats.dump_algebra(A))
    assert B.c == A.c and B.dim == 2


def test_check_frobenius_pass(capsys):
    code, out = run(capsys, "check-frobenius", INPUTS / "evaluations.json")
    assert code == 0 and out["failed"] == 0


def test_check_frobenius_fail_exit_one(capsys):
    code, out = run(capsys, "check-frobenius", INPUTS / "ring_hom.json")
    assert code == 1
    assert {"check": "is_frobenius", "witness": "f(1)"} in out["witnesses"]


def test_check_frobenius_degree_override(capsys):
    code, out = run(capsys, "check-frobenius", INPUTS / "ring_hom.json", "--n", "1")
    assert code == 0  # a ring homomorphism is Frobenius of degree 1
    assert "series_identity" in [r["check"] for r in out["checks"]]


def test_build_cover_interval(capsys, tmp_path):
    dot = tmp_path / "c.dot"
    code, out = run(capsys, "build-cover", INPUTS / "interval_example.json", "--dot", dot)
    assert code == 0
    assert len(out["covering"]["X"]) == 13 and len(out["covering"]["Y"]) == 5
    assert out["minimal_degree"] == 5
    assert dot.read_text().startswith("graph")


def test_build_cover_incompatible(capsys):
    code, out = run(capsys, "build-cover", INPUTS / "incompatible.json")
    assert code == 1
    assert out["witnesses"] == [{"check": "compatible_sequence", "witness": [1, 2]}]


def test_build_cover_group(capsys):
    code, out = run(capsys, "build-cover", INPUTS / "dihedral.json")
    assert code == 0 and out["covering"]["n"] == 4


def test_check_cover_and_transfer(capsys):
    assert run(capsys, "check-cover", INPUTS / "branched_cover.json")[0] == 0
    code, out = run(capsys, "check-transfer", INPUTS / "branched_cover.json")
    assert code == 0
    names = [r["check"] for r in out["checks"]]
    assert "theorem_5_2_roundtrip" in names


def test_poly_cover(capsys):
    code, out = run(capsys, "poly-cover", INPUTS / "cubic.json")
    assert code == 0
    assert len(out["tau"]) == 7


def test_poly_cover_zero_epsilon_fails_gracefully(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"coefficients": [0, -3, 0, 1], "samples": [[3.1, 2.7], [-1.3, 0.4]]}))
    code, out = run(capsys, "poly-cover", p, "--epsilon", "0")
    assert code == 1
    assert out["failed"] == 1


def test_resolve(capsys):
    code, out = run(capsys, "resolve", INPUTS / "branched_cover.json")
    assert code == 0 and out["labellings"] == 3


def test_resolve_cap_exit_three(capsys):
    code, out = run(capsys, "resolve", INPUTS / "interval_example.json", "--max-size", "5")
    assert code == 3 and out is None


def test_bad_input_exit_two(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "check-cover", p)[0] == 2
    p.write_text(json.dumps({"X": ["a"], "Y": ["u"], "h": {}, "t": {"u": {"a": 1}}, "n": 1}))
    assert run(capsys, "check-cover", p)[0] == 2


def test_max_n_cap_exit_three(capsys):
    assert run(capsys, "check-frobenius", INPUTS / "evaluations.json", "--max-n", "1")[0] == 3


def test_suite_subset_and_determinism(capsys):
    first = run(capsys, "suite", "--only", "4", "7", "--seed", "3")
    second = run(capsys, "suite", "--only", "4", "7", "--seed", "3")
    assert first == second
    assert first[0] == 0
    assert len(first[1]["checks"]) == 2


def test_timings_flag(capsys):
    _, out = run(capsys, "suite", "--only", "4", "--timings")
    assert all("elapsed" in r for r in out["checks"])


def test_module_entry_point(tmp_path):
    out = tmp_path / "r.json"
    proc = subprocess.run([sys.executable, "-m", "frobcover", "check-cover", str(INPUTS / "branched_cover.json"),
                           "--out", str(out)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(out.read_text())["failed"] == 0
