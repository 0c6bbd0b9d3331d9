import csv
import io
import json

import typer.testing

import c.hardy_cli

runner = typer.testing.CliRunner()


def _rows(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def test_alpha_log_length():
    result = runner.invoke(c.hardy_cli.app, ["alpha", "--L", "3.14159265", "--p", "2"])

    assert result.exit_code == 0

    row = _rows(result.stdout)[0]

    assert abs(float(row["alpha"]) - 0.6976) < 1e-3


def test_alpha_endpoints_match_log_length():
    by_length = runner.invoke(c.hardy_cli.app, ["alpha", "--L", "3.141592653589793", "--format", "json"])
    by_endpoints = runner.invoke(c.hardy_cli.app, ["alpha", "--a", "1", "--b", "23.140692632779267", "--format", "json"])

    assert by_length.exit_code == 0 and by_endpoints.exit_code == 0
    assert abs(json.loads(by_length.stdout)["alpha"] - json.loads(by_endpoints.stdout)["alpha"]) < 1e-12


def test_alpha_usage_error():
    result = runner.invoke(c.hardy_cli.app, ["alpha", "--L", "0"])

    assert result.exit_code == 2
    assert "L must be positive" in result.output


def test_continuous_bad_interval():
    result = runner.invoke(c.hardy_cli.app, ["continuous", "--a", "5", "--b", "2"])

    assert result.exit_code == 2


def test_discrete_n1():
    result = runner.invoke(c.hardy_cli.app, ["discrete", "--n", "1", "--p", "7"])

    assert result.exit_code == 0

    row = _rows(result.stdout)[0]

    assert float(row["dn_numeric"]) == 1.0
    assert row["sandwich_lo_pass"] == ""


def test_discrete_usage_error():
    result = runner.invoke(c.hardy_cli.app, ["discrete", "--n", "0"])

    assert result.exit_code == 2
    assert "n must be at least 1" in result.output


def test_rate_too_few_points():
    result = runner.invoke(c.hardy_cli.app, ["rate", "--n-grid", "10,20,30,40"])

    assert result.exit_code == 2


def test_rate_small_grid(tmp_path, cache_file: str):
    records = str(tmp_path / "records.csv")
    result = runner.invoke(c.hardy_cli.app, ["rate", "--n-grid", "8:128:5", "--records", records, "--threads", "2"])

    assert result.exit_code == 0

    fit = _rows(result.stdout)[0]

    assert fit["model"] == "two_term"
    assert int(fit["points"]) == 5

    with open(records) as file:
        assert [int(row["n"]) for row in _rows(file.read())] == [8, 16, 32, 64, 128]


def test_lemmas_unknown_id():
    result = runner.invoke(c.hardy_cli.app, ["lemmas", "--ids", "L2_99"])

    assert result.exit_code == 2


def test_lemmas_reproducible():
    args = ["lemmas", "--ids", "L2_1,L2_3", "--samples", "500", "--seed", "7", "--threads", "2"]

    first = runner.invoke(c.hardy_cli.app, args)
    second = runner.invoke(c.hardy_cli.app, args)

    assert first.exit_code == 0
    assert first.stdout == second.stdout

    rows = _rows(first.stdout)

    assert [row["id"] for row in rows] == ["L2_1", "L2_3"]
    assert all(int(row["failures"]) == 0 for row in rows)
    assert all(float(row["min_margin"]) >= -1e-12 for row in rows)
    assert rows[0]["seconds"] == ""


def test_rate_malformed_grid():
    for grid in ["1000:10", "1000:10:5", "ten,20,30,40,50"]:
        result = runner.invoke(c.hardy_cli.app, ["rate", "--n-grid", grid])

        assert result.exit_code == 2
        assert "invalid n grid" in result.output


def test_continuous_json_unbounded_b():
    result = runner.invoke(c.hardy_cli.app, ["continuous", "--L", "800", "--format", "json"])

    assert "Infinity" not in result.stdout

    obj = json.loads(result.stdout)

    assert obj["b"] is None
    assert obj["L"] == 800.0
