import json

import models
import services.sweep


def _record(**kwargs) -> models.SweepRecord:
    values = dict(n=10, p=2.0, alpha=0.1, dn_numeric=3.0, lower_cert=2.9, upper_cert=3.1, qp=4.0, iterations=12, residual=1e-11)
    values.update(kwargs)

    return models.SweepRecord(**values)


def test_format_value():
    assert services.sweep.format_value(None) == ""
    assert services.sweep.format_value(True) == "true"
    assert services.sweep.format_value(False) == "false"
    assert services.sweep.format_value(7) == "7"
    assert services.sweep.format_value(0.1) == "0.10000000000000001"
    assert float(services.sweep.format_value(1.0 / 3.0)) == 1.0 / 3.0


def test_render_records_csv():
    text = services.sweep.render_records([_record(sandwich_lo_pass=True, sandwich_hi_pass=False)])
    lines = text.split("\n")

    assert lines[0] == "n,p,alpha,dn_numeric,lower_cert,upper_cert,qp,sandwich_lo_pass,sandwich_hi_pass,iterations,residual,seconds"
    assert lines[1].startswith("10,2,")
    assert lines[1].endswith(",true,false,12,9.9999999999999994e-12,")
    assert text.endswith("\n") and "\r" not in text


def test_render_records_json():
    text = services.sweep.render_records([_record()], "json", single=True)
    obj = json.loads(text)

    assert list(obj) == models.sweep_record.COLUMNS
    assert obj["sandwich_lo_pass"] is None
    assert obj["seconds"] is None


def test_render_dict_cell():
    text = services.sweep.render(["id", "budgets"], [{"id": "x", "budgets": {"lower": 0.5, "upper": 0.25}}])

    assert text.split("\n")[1] == "x,lower=0.5;upper=0.25"


def test_render_json_non_finite():
    text = services.sweep.render(["b", "L", "budgets"], [{"b": float("inf"), "L": 800.0, "budgets": {"lower": float("nan"), "upper": 0.5}}], "json", single=True)
    obj = json.loads(text)

    assert "Infinity" not in text and "NaN" not in text
    assert obj == {"b": None, "L": 800.0, "budgets": {"lower": None, "upper": 0.5}}
