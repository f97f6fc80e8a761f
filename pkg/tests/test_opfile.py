import json

import pytest

from mongeops.errors import DimensionMismatch, InputError, ParseError
from mongeops.opfile import dumps, load_transform, loads
from mongeops.report import DISCREPANCY, FAIL, NOTE, PASS, Report, render_structured, render_text

WKI = {
    "n": 2,
    "coordinates": ["p", "q"],
    "g": [["q^2+1", "-p*q"], ["-p*q", "p^2+1"]],
}


def doc(**changes):
    out = dict(WKI)
    out.update(changes)
    return json.dumps(out)


# ------------------ operator files ------------------

def test_missing_tails_means_derived():
    of = loads(doc())
    assert of.tails is None and of.connection is None
    op = of.operator()
    (w,) = op.nonzero_tails
    assert w.product(0, 1, 0, 1) == of.parse("1/(p^2+q^2+1)")


def test_empty_tails_means_local():
    op = loads(doc(tails=[])).operator()
    assert op.nonzero_tails == []


def test_radicand_may_use_det_g():
    of = loads(doc(tails=[{"matrix": [["0", "1"], ["-1", "0"]], "radicand": "1/det_g"}]))
    (w,) = of.tails
    assert w.radicand * of.metric.det == of.parse("1")


def test_parameters_and_nonzero_flag():
    text = doc(parameters=["a", {"name": "b", "nonzero": True}],
               g=[["a", "0"], ["0", "b"]])
    of = loads(text)
    assert [p.name for p in of.ctx.parameters] == ["a", "b"]
    assert of.parse("1/b") * of.parse("b") == of.parse("1")
    with pytest.raises(ParseError, match="not declared nonzero"):
        of.parse("1/a")


@pytest.mark.parametrize("text, error", [
    ("{not json", InputError),
    (json.dumps([1, 2]), InputError),
    (doc(n=3), DimensionMismatch),
    (doc(g=[["1", "0"]]), DimensionMismatch),
    (json.dumps({"n": 2, "coordinates": ["p", "q"]}), InputError),
    (doc(g=[["q^2+", "0"], ["0", "1"]]), ParseError),
])
def test_bad_files(text, error):
    with pytest.raises(error):
        loads(text)


def test_dump_then_load_keeps_the_operator():
    of = loads(doc(name="WKI"))
    op = of.operator()
    again = loads(dumps(op, of.extras))
    assert again.extras == {"name": "WKI"}
    assert again.connection == op.connection
    assert again.tails[0].same_up_to_sign(op.tails[0])


def test_dumps_can_leave_out_c():
    text = dumps(loads(doc()).operator(), with_c=False)
    assert "c" not in json.loads(text)


def test_transform_file_forms(tmp_path):
    ctx = loads(doc()).ctx
    rows = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps(rows))
    wrapped = tmp_path / "wrapped.json"
    wrapped.write_text(json.dumps({"matrix": rows}))
    assert load_transform(str(bare), ctx) == load_transform(str(wrapped), ctx)
    with pytest.raises(DimensionMismatch):
        small = tmp_path / "small.json"
        small.write_text(json.dumps([["1", "0"], ["0", "1"]]))
        load_transform(str(small), ctx)


# ------------------ reports ------------------

def test_only_failures_fail_a_report():
    report = Report("r")
    report.add("a", PASS)
    report.add("b", NOTE, "something to know")
    report.section("inner").add("c", DISCREPANCY, "printed form differs")
    assert report.overall == PASS
    report.sections[0].check("d", False, "residual 1")
    assert report.overall == FAIL and report.count(FAIL) == 1


def test_unknown_status_is_rejected():
    with pytest.raises(ValueError):
        Report("r").add("a", "MAYBE")


def test_renderers():
    report = Report("catalog")
    report.section("WKI").check("Monge metric", True)
    text = render_text(report)
    assert "== catalog ==  PASS" in text and "PASS        Monge metric" in text
    structured = json.loads(render_structured(report))
    assert structured["sections"][0]["items"] == [{"label": "Monge metric", "status": "PASS"}]


def test_text_header_counts_discrepancies():
    report = Report("catalog")
    entry = report.section("[1(12)2]")
    entry.check("Monge metric", True)
    entry.add("determinant", DISCREPANCY, "det g = -lam")
    assert report.overall == PASS
    assert report.headline == "PASS (1 DISCREPANCY)"
    text = render_text(report)
    assert "== catalog ==  PASS (1 DISCREPANCY)" in text
    assert "== [1(12)2] ==  PASS (1 DISCREPANCY)" in text
