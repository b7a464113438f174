import csv
import json
from pathlib import Path

import pytest

from markovcalc.cli import main

FUNCTIONS = Path(__file__).resolve().parent.parent / "functions"
WITNESSES = FUNCTIONS / "witnesses"


def fn(name: str) -> str:
    return str(FUNCTIONS / f"{name}.fn")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, command, *argv):
    code, out, _ = run(capsys, command, "--json", *argv)
    assert code == 0
    return json.loads(out)


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", fn("lemma1"), "1/2")
    assert code == 0
    assert out.splitlines()[0] == "lemma1(1/2) = [1/2, 1]"


@pytest.mark.parametrize("name, t, value", [("lemma1", "0", {"lo": "0", "hi": "1"}),
                                            ("degenerate", "5", {"lo": "5", "hi": "5"})])
def test_eval_json(capsys, name, t, value):
    assert run_json(capsys, "eval", fn(name), t) == {"function": name, "t": t, "value": value}


def test_eval_at_an_irrational_point(capsys):
    payload = run_json(capsys, "eval", fn("lemma1"), "sqrt2/4")
    assert payload["value"] == {"lo": "0", "hi": "1+1/4*sqrt2"}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["eval", fn("lemma1"), "2"], 3),
        (["eval", fn("lemma1"), "1/0"], 2),
        (["eval", fn("missing"), "0"], 2),
        (["diff", fn("lemma1"), "1"], 3),
        (["diff", fn("lemma1"), "0", "--depth", "7"], 2),
        (["demo", "nope"], 2),
        (["scan", fn("smooth_pair"), "--from", "1/2", "--to", "0"], 2),
        (["frobnicate"], 2),
        ([], 2),
    ],
)
def test_exit_codes(capsys, argv, expected):
    code, _, err = run(capsys, *argv)
    assert code == expected
    assert err


def test_parse_errors_exit_with_usage_code(capsys, tmp_path):
    bad = tmp_path / "bad.fn"
    bad.write_text("f = t +\ng = t\nomega = (0, 1)\n", encoding="utf-8")
    code, _, err = run(capsys, "eval", bad, "1/2")
    assert code == 2
    assert "1:" in err


def test_version(capsys):
    assert main(["--version"]) == 0


def test_diff_lemma1(capsys):
    payload = run_json(capsys, "diff", fn("lemma1"), "0")
    assert payload["derivative"]["verdict"] == "EXISTS"
    assert payload["derivative"]["value"] == {"lo": "0", "hi": "1"}
    assert payload["derivative"]["approximate"] is False
    assert {d["verdict"] for d in payload["one_sided"].values()} == {"NOT_EXISTS_OSCILLATING"}
    assert payload["mode"] == "exact"


def test_diff_nonexistence_is_an_answer(capsys):
    code, out, _ = run(capsys, "diff", fn("unit_jump"), "0")
    assert code == 0
    assert out.startswith("dunit_jump(0): NOT_EXISTS_DIVERGENT")


def test_diff_negative_point(capsys):
    payload = run_json(capsys, "diff", fn("smooth_pair"), "--", "-1/2")
    assert payload["x"] == "-1/2"
    assert payload["derivative"]["verdict"] == "EXISTS"


def test_diff_in_float_mode(capsys):
    payload = run_json(capsys, "diff", fn("abs_pair"), "0", "--mode", "float")
    assert payload["mode"] == "float"
    assert payload["derivative"]["value"] == {"lo": "-1.0", "hi": "1.0"}


def test_diff_verify_and_csv(capsys, tmp_path):
    trace = tmp_path / "trace.csv"
    code, out, _ = run(capsys, "diff", fn("smooth_pair"), "0", "--side", "right", "--verify", "--csv", trace)
    assert code == 0
    assert "oracle: agrees (64 points)" in out
    with trace.open(encoding="utf-8") as stream:
        rows = list(csv.reader(stream))
    assert rows[0] == ["t_float", "lo_float", "hi_float", "t_exact", "lo_exact", "hi_exact"]
    assert len(rows) == 65


def test_classify(capsys):
    report = run_json(capsys, "classify", fn("lemma1"), "0")["report"]
    assert report["case"] == "CASE_C_BEYOND_THEOREM1"
    report = run_json(capsys, "classify", fn("abs_pair"), "0")["report"]
    assert report["case"] == "CASE_B_CROSSED_DERIVATIVES"
    assert report["dpm_holds"] is True


def test_classify_with_witness(capsys):
    report = run_json(capsys, "classify", fn("abs_pair"), "0", "--witness", "f")["report"]
    assert report["ufa_checked"] is True
    report = run_json(capsys, "classify", fn("lemma1"), "0", "--witness", "g-f")["report"]
    assert report["ufa_checked"] is False
    assert "witness g-f" in report["evidence"]


def test_json_output_is_deterministic(capsys):
    argv = ("classify", fn("smooth_pair"), "1/3", "--json")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    first = run(capsys, "diff", fn("lemma1"), "0", "--json")
    assert first == run(capsys, "diff", fn("lemma1"), "0", "--json")


@pytest.mark.parametrize("name", ["lemma1", "theorem2", "dpm", "lemcont"])
def test_demos(capsys, name):
    code, out, _ = run(capsys, "demo", name)
    assert code == 0
    assert out.strip()


def test_lemma1_demo_shows_four_cases(capsys):
    _, out, _ = run(capsys, "demo", "lemma1")
    assert sum(1 for line in out.splitlines() if line.endswith("/ t = [0, 1]")) == 4


def test_scan(capsys):
    scan = run_json(capsys, "scan", fn("smooth_pair"), "--from", "0", "--to", "1/2", "--points", "3")["scan"]
    assert [p["x"] for p in scan["points"]] == ["1/8", "1/4", "3/8"]
    assert scan["consistent"] is True


@pytest.mark.parametrize(
    "name, witness, accepted",
    [
        ("abs_pair", "f_continuous", {"left": True, "right": True}),
        ("smooth_pair", "length_continuous", {"left": True, "right": True}),
        ("lemma1", "f_continuous", {"left": False, "right": False}),
    ],
)
def test_witness(capsys, name, witness, accepted):
    payload = run_json(capsys, "witness", fn(name), WITNESSES / f"{witness}.wit", "0")
    assert payload["accepted"] == accepted


def test_witness_one_side(capsys):
    code, out, _ = run(capsys, "witness", fn("unit_jump"), WITNESSES / "f_continuous.wit", "0", "--side", "right")
    assert code == 0
    assert out.strip() == "right: accepted"


def test_diff_marks_values_reached_by_tolerance(capsys):
    payload = run_json(capsys, "diff", fn("smooth_pair"), "0")
    assert payload["derivative"]["approximate"] is True
    code, out, _ = run(capsys, "diff", fn("smooth_pair"), "0")
    assert code == 0
    assert "(approximate: last quotient within tolerance, not a settled limit)" in out


def test_failed_demo_check_exits_with_code_4(capsys, monkeypatch):
    from markovcalc.cli import demos
    from markovcalc.core.interval import Interval
    from markovcalc.core.quadnum import QuadNum

    monkeypatch.setattr(demos, "difference_quotient", lambda F, x, t: Interval(QuadNum(0), QuadNum(2)))
    with pytest.raises(AssertionError, match="expected"):
        demos.demo_lemma1(None)
    code, _, err = run(capsys, "demo", "lemma1")
    assert code == 4
    assert err
