import json

import jsonschema
import pytest

from gplab.cli import main
from gplab.natset import parse_set_file
from gplab.report import SCHEMA_ID, CheckRecord, SuiteReport, strip_timing, to_jsonable, validate
from gplab.suites import environment, resolve, run_suite, suite_ids


def check_cli_determinism(tmp_path):
    """Replay reproduces a report, and --jobs does not change it."""
    out = tmp_path / "diag.json"
    assert main(["verify", "--suite", "§4-diagonal", "--out", str(out), "--format", "json"]) == 0
    doc = json.loads(out.read_text())
    validate(doc)
    assert doc["schema"] == SCHEMA_ID and doc["summary"]["fail"] == 0

    again = tmp_path / "again.json"
    assert main(["verify", "--replay", str(out), "--out", str(again)]) == 0
    assert strip_timing(json.loads(again.read_text())) == strip_timing(doc)

    for sid in ("§9-thickness", "§4-diagonal"):
        env = environment(sid)
        one = run_suite(sid, env, jobs=1).to_json()
        two = run_suite(sid, env, jobs=2).to_json()
        assert strip_timing(one) == strip_timing(two)


def test_cli_determinism(tmp_path):
    check_cli_determinism(tmp_path)


def test_suite_ids_and_errors():
    assert set(suite_ids()) == {
        "T1.1-rotation", "T1.2-rotation", "L6.2-grid", "T7.2-bound",
        "§4-diagonal", "§8-examples", "§9-thickness", "L8.1-translates",
    }
    assert resolve("S4-diagonal") == "§4-diagonal"
    with pytest.raises(KeyError):
        run_suite("T9.9-nothing")


def test_unknown_suite_on_cli(capsys):
    assert main(["verify", "--suite", "nope"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_report_schema():
    rep = SuiteReport("demo", {"window": 10, "seed": 1, "bounds": {}}, [
        CheckRecord("a", {}, "pass", {"x": 1}, 0.1),
        CheckRecord("b", {}, "inconclusive", None, 0.0),
    ])
    doc = rep.to_json()
    assert doc["summary"] == {"pass": 1, "fail": 0, "inconclusive": 1}
    assert not rep.failed
    bad = dict(doc, checks=[dict(doc["checks"][0], verdict="maybe")])
    with pytest.raises(jsonschema.ValidationError):
        validate(bad)
    with pytest.raises(ValueError):
        CheckRecord("c", {}, "maybe")
    assert "wall_time" not in strip_timing(doc)["checks"][0]
    assert "wall_time" in doc["checks"][0]


def test_to_jsonable():
    from fractions import Fraction

    from gplab.ipcalc import FsSpec

    assert to_jsonable({1: Fraction(1, 2), "s": {3, 1}, "w": FsSpec((1, 2))}) == {
        "1": "1/2",
        "s": [1, 3],
        "w": {"generators": [1, 2], "sums": [1, 2, 3]},
    }


@pytest.mark.parametrize("sid", ["§4-diagonal", "§9-thickness", "L8.1-translates", "T7.2-bound"])
def test_fast_suites_pass(sid):
    env = environment(sid, window=5000 if sid == "L8.1-translates" else None)
    rep = run_suite(sid, env)
    assert not rep.failed, rep.text()
    validate(rep.to_json())


def test_gen_round_trip(tmp_path, capsys):
    path = tmp_path / "a.txt"
    assert main(["gen", "example-8.4", "--window", "2000", "--out", str(path)]) == 0
    A = parse_set_file(path)
    assert A.hi == 2000 and 3 not in A and 1 in A
    side = json.loads((tmp_path / "a.txt.json").read_text())
    validate(side)
    assert side["checks"][0]["verdict"] == "pass"
    text = path.read_text()
    assert text.startswith("# generated by gplab gen example-8.4\nwindow 2000\n")

    assert main(["gen", "example-8.2", "--window", "2000", "--pairs", "1,2"]) == 0
    out = capsys.readouterr().out
    assert "window 2000" in out


def test_returns_and_analyze(tmp_path, capsys):
    path = tmp_path / "r.txt"
    assert main(["returns", "--system", "rot k=4", "--point", "2", "--open", "states 0", "--window", "40", "--set-out", str(path), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["checks"][0]["witness"]["members"] == [2, 6, 10, 14, 18, 22, 26, 30, 34, 38]
    assert parse_set_file(path).members == tuple(range(2, 41, 4))

    assert main(["returns", "--system", "torus alpha=golden", "--open", "interval 0 1/2", "--window", "10", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert 2 in doc["checks"][0]["witness"]["members"] and 1 not in doc["checks"][0]["witness"]["members"]

    assert main(["analyze", str(path), "--coset", "coprime 2 2", "--s-bound", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    by_id = {c["id"]: c for c in doc["checks"]}
    assert by_id["gap"]["witness"]["max_gap"] == 4
    assert by_id["window-rank"]["verdict"] in ("pass", "inconclusive")


def test_witness_command(tmp_path, capsys):
    assert main(["witness", "--N", "4", "--t", "2", "--F", "3,5"]) == 0
    out = capsys.readouterr().out
    assert "pass" in out and '"a": 7' in out
    A = tmp_path / "a.txt"
    A.write_text("window 400\n" + "".join(f"{m}\n" for m in range(4, 401, 4)))
    assert main(["witness", "--N", "4", "--t", "2", "--F", "3,5", "--set-file", str(A), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["checks"][1]["witness"]["ratio"] == "1"
    assert main(["witness", "--N", "4", "--t", "1", "--F", "2"]) == 2


def test_bad_set_file_reports_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("abc\n")
    assert main(["analyze", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err
