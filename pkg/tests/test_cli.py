import csv
import io
import json

import pytest

from lhall.cli import main, run


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    try:
        code = run(list(argv), stdout=out, stderr=err)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, _ = call(*argv)
    return code, json.loads(out)


def test_delta_all():
    code, rep = report("delta", "--seq", "2,3", "--method", "all")
    assert code == 0
    assert rep["delta"] == ["1", "4", "1"]
    assert rep["values"]["agree"] is True
    assert list(rep) == ["s", "command", "method", "delta", "values",
                         "counterexamples", "elapsed_ms"]


def test_delta_lecture_preset():
    code, rep = report("delta", "--seq", "lecture:4", "--method", "par")
    assert code == 0 and rep["delta"] == ["1", "11", "11", "1", "0"]


@pytest.mark.parametrize("argv", [
    ("delta", "--seq", "0,2"),
    ("delta", "--seq", "3,2", "--method", "asc"),
    ("delta", "--seq", "2,3", "--method", "bogus"),
    ("map", "--seq", "2,3", "--op", "rem", "--input", "1,1"),
    ("verify", "--seq", "2,3", "--property", "grading"),
    ("verify", "--seq", "2,3", "--property", "prop64"),
    ("ehrhart", "--seq", "2,3", "--t", "-1"),
])
def test_invalid_input_exit_2(argv):
    assert call(*argv)[0] == 2


def test_domain_violation_names_inequality():
    code, _, err = call("map", "--seq", "2,3", "--op", "rem", "--input", "1,1")
    assert code == 2 and "band condition failed at i=1" in err


def test_size_cap_exit_3(monkeypatch):
    assert call("enumerate", "--seq", "50,50,50,50,50,50")[0] == 3
    assert call("enumerate", "--seq", "4,4", "--max-points", "15")[0] == 3
    monkeypatch.setenv("LHALL_MAX_POINTS", "15")
    assert call("enumerate", "--seq", "4,4")[0] == 3
    assert call("enumerate", "--seq", "4,4", "--max-points", "16")[0] == 0


def test_ehrhart():
    code, rep = report("ehrhart", "--seq", "anti:5", "--t", "3", "--method", "both")
    assert code == 0
    assert rep["values"]["direct"] == rep["values"]["from_delta"] == "1024"
    assert report("ehrhart", "--seq", "2,3", "--t", "0")[1]["values"]["direct"] == "1"
    assert report("ehrhart", "--seq", "2,3", "--t", "1", "--method", "both")[1][
        "values"]["from_delta"] == "7"


def test_enumerate_json_and_csv():
    code, rep = report("enumerate", "--seq", "2,3")
    assert rep["values"]["points"] == [[str(v) for v in x] for x in
                                       [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (1, 4)]]
    code, rep = report("enumerate", "--seq", "2,3", "--star")
    assert rep["values"]["grading"] == ["1", "4", "1"]
    code, out, _ = call("enumerate", "--seq", "2,3", "--star", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["x1", "x2", "x3", "level"]
    assert len(rows) == 7 and all(r[-1] == r[-2] for r in rows[1:])


def test_enumerate_round_trip():
    from lhall.parbox import par_contains
    _, out, _ = call("enumerate", "--seq", "3,1,4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert len(rows) == 12
    assert all(par_contains((3, 1, 4), tuple(int(v) for v in r[:-1])) for r in rows)


def test_map_ops():
    assert report("map", "--seq", "2,3", "--op", "rem", "--input", "1,4")[1][
        "values"]["output"] == ["1", "1"]
    code, rep = report("map", "--seq", "2,3", "--op", "gamma", "--input", "1,4,2")
    assert rep["values"]["output"] == ["2", "3", "2"]
    assert rep["values"]["trace"]["phi_word"] == ["1", "2"]
    cases = {
        ("rem-inv", "1,1", None): ["1", "4"],
        ("rem-bar", "1,4", None): ["1", "2"],
        ("phi", "1,2", None): ["1", "1"],
        ("phi", "1,2", "1,0"): ["0", "1"],
        ("rem", "1,4", "1,1"): ["0", "2"],
        ("rem-inv", "0,2", "1,1"): ["1", "4"],
        ("reversal-point", "1,2", None): ["1", "1"],
    }
    for (op, inp, q), expected in cases.items():
        argv = ["map", "--seq", "2,3", "--op", op, "--input", inp]
        if q:
            argv += ["--q", q]
        code, rep = report(*argv)
        assert code == 0 and rep["values"]["output"] == expected, (op, inp, q)
    code, rep = report("map", "--seq", "lecture:3", "--op", "prop64", "--input", "0,1,4,2")
    assert rep["values"]["output"] == ["2", "1", "0"]
    assert rep["values"]["trace"]["des_output"] == "2"


@pytest.mark.parametrize("seq, prop", [
    ("3,1,4", "rev"), ("2,3,1", "grading"), ("lecture:4", "prop64"),
    ("2,3,2", "bijection"), ("2,2,3", "tilde"), ("1,3,2", "s1"),
    ("2,3,4", "volume"), ("2,3", "series"), ("3,1,2", "reversal-delta"),
])
def test_verify_passes(seq, prop):
    code, rep = report("verify", "--seq", seq, "--property", prop)
    assert code == 0, rep
    assert rep["values"]["verdict"] == "pass" and rep["counterexamples"] == []


def test_verify_prop64_count():
    assert report("verify", "--seq", "lecture:4", "--property", "prop64")[1][
        "values"]["checked"] == "24"


def test_failing_verification_exits_1(monkeypatch):
    from lhall import ehrhart
    monkeypatch.setattr(ehrhart, "series_check", lambda *a, **k: False)
    code, rep = report("verify", "--seq", "2,3", "--property", "series")
    assert code == 1 and rep["values"]["verdict"] == "fail"
    assert rep["counterexamples"]


def test_delta_mismatch_exits_1(monkeypatch):
    from lhall import ehrhart
    real = ehrhart.METHODS["des"]
    monkeypatch.setitem(ehrhart.METHODS, "des", lambda s, **kw: ehrhart.DeltaVector(
        s, (0,) + real(s, **kw).entries[1:]))
    code, rep = report("delta", "--seq", "2,3", "--method", "all")
    assert code == 1 and rep["values"]["agree"] is False and rep["counterexamples"]


def test_parallel_output_identical():
    for argv in (["delta", "--seq", "3,2,4,2", "--method", "all"],
                 ["enumerate", "--seq", "2,3,2", "--star"],
                 ["verify", "--seq", "3,1,4", "--property", "rev"]):
        assert call(*argv)[1] == call(*argv, "--parallel")[1]


def test_plain_and_timing():
    code, out, _ = call("delta", "--seq", "2,3", "--format", "plain")
    assert "delta = 1,4,1" in out
    code, rep = report("delta", "--seq", "2,3", "--timing")
    assert float(rep["elapsed_ms"]) >= 0


def test_main_reports_usage_errors():
    assert main(["nonsense"]) == 2
    assert main(["delta"]) == 2
