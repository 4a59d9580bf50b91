import pathlib

import pytest

import kleinpencil as kp

REPO = pathlib.Path(__file__).resolve().parents[2]


def test_registry_shape():
    ids = kp.claim_ids()
    assert len(ids) == 16
    assert ids == sorted(ids)
    assert "hessian-klein" in ids and "mori-audit" in ids
    assert "mori" in kp.claim_tags("mori-audit")
    with pytest.raises(ValueError):
        kp.claim_tags("no-such-claim")


def test_single_claim():
    r = kp.run_claim("hessian-klein")
    assert r["status"] == "pass"
    assert r["evidence"]["constant"] == "-54"
    assert r["citations"]


def test_tag_filter():
    rows = kp.run_all("mori")
    assert [r["id"] for r in rows] == ["delpezzo-degree", "mori-audit"]
    assert all(r["status"] == "pass" for r in rows)


def test_full_report():
    doc = kp.report()
    assert doc["version"] == 1
    assert len(doc["results"]) == 16
    assert all(r["status"] == "pass" for r in doc["results"])
    text = kp.report_text()
    assert all(r["id"] in text for r in doc["results"])


def test_options_fail_soft():
    r = kp.run_claim("inv6-H", field_order=85)
    assert r["status"] == "error"
    assert "multiple of 84" in r["evidence"]["message"]


def test_curve_files():
    path = str(REPO / "data" / "curves" / "klein_quartic.json")
    assert kp.curve_check(path)
    doc = kp.curve(path)
    assert doc["degree"] == 4
    assert len(doc["terms"]) == 3


def test_mori_sweep():
    rows = kp.mori_sweep()
    assert len(rows) == 216
    live = [r for r in rows if r["feasible"]]
    assert len(live) == 9
    assert all(r["n"] == 0 and r["fibers"] in (0, 7) for r in live)
    assert all(r["reason"] == "" for r in live)


def test_axioms():
    table = kp.axioms()
    assert len(table) == 10
    assert [a["id"] for a in table] == sorted(a["id"] for a in table)
    assert all(a["statement"] and a["source"] for a in table)


def test_cyc_arith():
    one = [[0, "1"]]
    assert kp.cyc_arith("mul", [[12, "1"]], [[72, "1"]]) == one
    assert kp.cyc_arith("add", [[0, "1/2"]], [[0, "1/2"]]) == one
    assert kp.cyc_arith("div", [[5, "7/3"]], [[5, "7/3"]]) == one
    assert kp.cyc_arith("sub", [[3, "2"]], [[3, "2"]]) == []
    with pytest.raises(ValueError):
        kp.cyc_arith("pow", one, one)
