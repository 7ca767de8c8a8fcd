import json

import pytest

from curveskein import cli
from curveskein.checks import MatchReport
from curveskein.curves import branch, germ, homfly_P
from curveskein.scalars import SkeinScalar

CUSP = {"branches": [{"pairs": [[2, 3]], "coeffs": ["1"]}], "axis": False}
NODE = {"branches": [{"pairs": [[1, 1]], "coeffs": ["1"]},
                     {"pairs": [[1, 1]], "coeffs": ["-1"]}]}
SMALL = {"q": 6, "Q": 2, "lam": 2, "N": 6}


def scalar_from_json(obj):
    num = {(t["v"], t["s"]): int(t["coeff"]) for t in obj["terms"]}
    return SkeinScalar(num, tuple(obj["denominator"]))


def test_homfly_job_round_trips_the_value():
    r = cli.run({"task": "homfly", "curve": CUSP})
    assert r["status"] == "ok"
    got = scalar_from_json(r["result"])
    assert got == homfly_P(germ([branch([(2, 3)])]))
    assert json.loads(json.dumps(r)) == r


def test_colored_job():
    r = cli.run({"task": "colored", "curve": CUSP, "labels": [[2]]})
    assert r["status"] == "ok" and r["result"]["terms"]


def test_zcurve_kind_forms_agree():
    explicit = cli.run({"task": "zcurve", "kind": [2, 3],
                        "orders": {"N": 5}})
    classified = cli.run({"task": "zcurve", "curve": CUSP,
                          "orders": {"N": 5}})
    assert explicit["result"] == classified["result"]
    smooth = cli.run({"task": "zcurve", "kind": "smooth",
                      "orders": {"N": 3}})
    rows = smooth["result"]["coefficients"]
    assert [row["n"] for row in rows] == [0, 1, 2, 3]


def test_zcurve_needs_a_kind_for_odd_germs():
    out = cli._guarded({"task": "zcurve", "curve": {
        "branches": [{"pairs": [[1, 1]]}, {"pairs": [[2, 3]]}]}})
    assert out["status"] == "error" and out["error"]["field"] == "curve"


def test_check_tasks_pass():
    jobs = [
        {"task": "check-flop", "mu": [1], "orders": SMALL},
        {"task": "check-skein-flop", "mu": [2], "orders": SMALL},
        {"task": "check-skein-flop", "curve": NODE, "orders": SMALL},
        {"task": "check-blowup", "curve": CUSP, "orders": {"lam": 2}},
        {"task": "check-theorem1", "curve": CUSP, "orders": {"N": 6}},
        {"task": "check-theorem2-low", "curve": CUSP, "mode": "self",
         "orders": {"N": 6}},
    ]
    summary = cli.batch(jobs)
    assert (summary["passed"], summary["failed"], summary["errors"]) == \
        (len(jobs), 0, 0)
    assert cli._exit_code(summary) == 0
    for r in summary["results"]:
        assert r["result"]["status"] == "pass"
        assert json.loads(json.dumps(r)) == r


def test_determinism_excluding_seconds():
    job = {"task": "check-flop", "mu": [2], "orders": SMALL}
    a, b = cli.run(job), cli.run(job)
    a.pop("seconds"), b.pop("seconds")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


@pytest.mark.parametrize("job,field", [
    ({"task": "nope"}, "task"),
    ({"task": "homfly"}, "curve"),
    ({"task": "homfly", "curve": {"branches": [{"pairs": [[2]]}]}},
     "curve.branches[0].pairs[0]"),
    ({"task": "homfly", "curve": {"branches": [
        {"pairs": [[2, 3]], "coeffs": ["x"]}]}},
     "curve.branches[0].coeffs[0]"),
    ({"task": "homfly", "curve": CUSP, "labels": [["a"]]}, "labels[0]"),
    ({"task": "homfly", "curve": CUSP, "orders": {"zz": 1}}, "orders.zz"),
    ({"task": "homfly", "curve": CUSP, "orders": {"q": 0}}, "orders.q"),
    ({"task": "check-theorem2-low", "curve": CUSP, "mode": "x"}, "mode"),
    ({"task": "check-flop", "mu": "x"}, "mu"),
])
def test_field_errors_carry_their_path(job, field):
    out = cli._guarded(job)
    assert out["status"] == "error"
    assert out["error"]["field"] == field


def test_semantic_errors_are_reported_not_raised():
    out = cli._guarded({"task": "homfly", "curve": CUSP, "labels": [[2]]})
    assert out["status"] == "error" and out["error"]["message"]


def test_orders_override_wins():
    job = {"task": "zcurve", "kind": "node", "orders": {"N": 3}}
    r = cli.run(job, orders_override={"N": 5})
    assert r["result"]["coefficients"][-1]["n"] == 5


def test_batch_failure_counts(monkeypatch):
    monkeypatch.setattr(cli, "vertex_flop_check",
                        lambda *a: MatchReport("vertex_flop", False,
                                               first_mismatch="q^1"))
    summary = cli.batch([{"task": "check-flop", "mu": [1]},
                         {"task": "zcurve", "kind": "smooth",
                          "orders": {"N": 2}}])
    assert (summary["passed"], summary["failed"]) == (1, 1)
    assert cli._exit_code(summary) == 1


def test_main_single_job(tmp_path):
    inp = tmp_path / "job.json"
    out = tmp_path / "out.json"
    inp.write_text(json.dumps({"curve": CUSP}))
    code = cli.main(["--task", "homfly", "--input", str(inp),
                     "--output", str(out)])
    assert code == 0
    text = out.read_text()
    payload = json.loads(text)
    assert payload["status"] == "ok"
    # canonical bytes: sorted keys, two-space indent, trailing newline
    assert text == json.dumps(payload, indent=2, sort_keys=True) + "\n"


def test_main_suite_and_orders_flag(tmp_path, capsys):
    suite = tmp_path / "suite.json"
    suite.write_text(json.dumps(
        [{"task": "check-flop", "mu": [1], "orders": {"q": 20, "Q": 2,
                                                      "lam": 2}}]))
    code = cli.main(["--suite", str(suite), "--orders", "q=6"])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["passed"] == 1
    assert summary["results"][0]["result"]["orders"]["q_order"] == 6


def test_main_empty_suite_exits_zero(tmp_path, capsys):
    suite = tmp_path / "empty.json"
    suite.write_text("[]")
    assert cli.main(["--suite", str(suite)]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] == 0


def test_main_error_paths(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["--input", str(bad)]) == 2
    capsys.readouterr()
    missing = tmp_path / "absent.json"
    assert cli.main(["--input", str(missing)]) == 2
    capsys.readouterr()
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"task": "homfly", "curve": CUSP}))
    assert cli.main(["--input", str(job), "--orders", "q=abc"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["error"]["field"] == "--orders"


def test_main_single_failure_exit(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(cli, "vertex_flop_check",
                        lambda *a: MatchReport("vertex_flop", False))
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"task": "check-flop", "mu": [1]}))
    assert cli.main(["--input", str(job)]) == 1
    assert json.loads(capsys.readouterr().out)["status"] == "fail"
