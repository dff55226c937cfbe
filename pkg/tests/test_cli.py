import csv
import io
import json

import pytest
from click.testing import CliRunner

from app.cli.main import cli


def _flat_document(tmp_path):
    def points(latency):
        return {"kind": "points", "points": [[0.0, latency], [0.95, latency]]}

    doc = {
        "schema_version": 1,
        "label": "flat",
        "b_p": 38.4,
        "b_s": 19.2,
        "primary_curve": points(80.0),
        "salvage_curve": points(130.0),
        "link": {
            "premium_ns": 100.0,
            "ingress_share": 0.6,
            "ingress_curve": points(60.0),
            "egress_curve": points(40.0),
        },
    }
    path = tmp_path / "flat.json"
    path.write_text(json.dumps(doc))
    return path


def _csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.fixture
def runner():
    return CliRunner()


def test_utility_rows(runner):
    result = runner.invoke(cli, ["utility", "--n", "16", "--p", "0.2", "--x", "1,4", "--samples", "2000"])
    assert result.exit_code == 0, result.output
    rows = _csv_rows(result.stdout)
    assert [float(r["x"]) for r in rows] == [1.0, 4.0]
    assert float(rows[0]["utility_analytic"]) == pytest.approx(0.971853, abs=1e-6)
    assert float(rows[1]["utility_analytic"]) == pytest.approx(0.720284, abs=1e-6)


def test_utility_solo_topology(runner):
    result = runner.invoke(
        cli, ["utility", "--n", "1..16", "--p", "0.3", "--topology", "solo", "--samples", "500"]
    )
    assert result.exit_code == 0, result.output
    rows = _csv_rows(result.stdout)
    assert len(rows) == 1
    assert int(rows[0]["n"]) == 1
    assert float(rows[0]["utility_analytic"]) == 0.3


def test_utility_rejects_bad_range(runner):
    result = runner.invoke(cli, ["utility", "--n", "4..2", "--p", "0.2"])
    assert result.exit_code == 1


def test_amat_on_flat_curves(runner, tmp_path):
    config = str(_flat_document(tmp_path))
    result = runner.invoke(cli, ["amat", "--r", "0.6", "--demand", "10", "--config", config])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["amat_ns"] == pytest.approx(140.0)
    assert payload["feasible"] is True

    result = runner.invoke(cli, ["amat", "--r", "1", "--demand", "10", "--config", config])
    assert json.loads(result.stdout)["amat_ns"] == pytest.approx(80.0)


def test_amat_infeasible_exits_3(runner):
    result = runner.invoke(cli, ["amat", "--r", "1", "--demand", "40"])
    assert result.exit_code == 3
    payload = json.loads(result.stdout)
    assert payload["amat_ns"] is None
    assert payload["feasible"] is False


def test_amat_split_out_of_range_exits_1(runner):
    result = runner.invoke(cli, ["amat", "--r", "1.5", "--demand", "10"])
    assert result.exit_code == 1


def test_missing_config_exits_2(runner, tmp_path):
    result = runner.invoke(cli, ["amat", "--r", "1", "--demand", "10", "--config", str(tmp_path / "nope.json")])
    assert result.exit_code == 2


def test_non_utf8_config_exits_2(runner, tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes('{"schema_version": 1, "label": "caf\u00e9"}'.encode("latin-1"))
    result = runner.invoke(cli, ["amat", "--r", "1", "--demand", "10", "--config", str(path)])
    assert result.exit_code == 2
    assert "not UTF-8" in result.output


def test_non_utf8_curve_csv_exits_2(runner, tmp_path):
    (tmp_path / "latin1.csv").write_bytes(b"utilization,latency_ns\n0.0,118\n0.5,12\xe95\n")
    doc = json.loads(_flat_document(tmp_path).read_text())
    doc["primary_curve"] = {"kind": "csv", "path": "latin1.csv"}
    config = tmp_path / "csv.json"
    config.write_text(json.dumps(doc))
    result = runner.invoke(cli, ["amat", "--r", "1", "--demand", "10", "--config", str(config)])
    assert result.exit_code == 2
    assert "row 2: not UTF-8" in result.output


def test_gen_curves_then_plan(runner, tmp_path, configs_dir):
    out = tmp_path / "curves.json"
    result = runner.invoke(cli, ["gen-curves", "--levels", "0.5,1", "--points", "8", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["curves"] == 16
    manifest = json.loads((tmp_path / "curves.manifest.json").read_text())
    assert manifest["command"] == "gen-curves"
    assert manifest["outputs"] == [str(out)]

    low = runner.invoke(cli, ["plan", "--curves", str(out), "--demand", "5"])
    assert low.exit_code == 0, low.output
    assert json.loads(low.stdout)["r_star"] == 1.0

    bound = runner.invoke(
        cli,
        [
            "plan",
            "--curves", str(out),
            "--server", str(configs_dir / "server_idle.json"),
            "--workload", str(configs_dir / "workload_memory_bound.json"),
        ],
    )
    assert bound.exit_code == 0, bound.output
    assert json.loads(bound.stdout)["r_star"] < 1.0

    over = runner.invoke(cli, ["plan", "--curves", str(out), "--demand", "200"])
    assert over.exit_code == 3
    assert json.loads(over.stdout)["capacity_exceeded"] is True


def test_gen_curves_is_deterministic(runner, tmp_path):
    args = ["gen-curves", "--levels", "0.5,1", "--points", "5"]
    runner.invoke(cli, args + ["--out", str(tmp_path / "a.json")])
    runner.invoke(cli, args + ["--out", str(tmp_path / "b.json")])
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_plan_needs_exactly_one_demand_source(runner, tmp_path):
    out = tmp_path / "curves.json"
    runner.invoke(cli, ["gen-curves", "--levels", "1", "--points", "4", "--out", str(out)])
    assert runner.invoke(cli, ["plan", "--curves", str(out)]).exit_code == 1


def test_plan_rejects_other_schema_version(runner, tmp_path):
    out = tmp_path / "curves.json"
    runner.invoke(cli, ["gen-curves", "--levels", "1", "--points", "4", "--out", str(out)])
    raw = json.loads(out.read_text())
    raw["schema_version"] = 2
    out.write_text(json.dumps(raw))
    result = runner.invoke(cli, ["plan", "--curves", str(out), "--demand", "5"])
    assert result.exit_code == 2


def test_simulate_is_reproducible(runner, tmp_path, configs_dir):
    config = str(configs_dir / "sim_memory_bound.json")
    for name in ("a", "b"):
        result = runner.invoke(
            cli, ["simulate", "--config", config, "--intervals", "50", "--out-dir", str(tmp_path / name)]
        )
        assert result.exit_code == 0, result.output
    a, b = tmp_path / "a", tmp_path / "b"
    assert (a / "metrics.csv").read_bytes() == (b / "metrics.csv").read_bytes()
    assert (a / "summary.json").read_text() == (b / "summary.json").read_text()
    assert len(_csv_rows((a / "metrics.csv").read_text())) == 50
    manifest = json.loads((a / "manifest.json").read_text())
    assert manifest["seed"] == 7
    assert json.loads(result.stdout)["n_intervals"] == 50


def test_simulate_io_spill(runner, tmp_path, configs_dir):
    config = str(configs_dir / "sim_memory_bound.json")
    summaries = {}
    for io_level in ("low_low", "high_high"):
        result = runner.invoke(
            cli,
            ["simulate", "--config", config, "--io", io_level, "--intervals", "50",
             "--out-dir", str(tmp_path / io_level)],
        )
        assert result.exit_code == 0, result.output
        summaries[io_level] = json.loads(result.stdout)
    assert summaries["high_high"]["mean_primary_demand_gbps"] > summaries["low_low"]["mean_primary_demand_gbps"]
    assert summaries["high_high"]["mean_u_p"] < 0.95
    assert summaries["high_high"]["mean_amat_ns"] > summaries["low_low"]["mean_amat_ns"]
    assert isinstance(summaries["high_high"]["saturated"], bool)


def test_simulate_rejects_unknown_io_scenario(runner, configs_dir, tmp_path):
    result = runner.invoke(
        cli,
        ["simulate", "--config", str(configs_dir / "sim_memory_bound.json"), "--io", "loud_low",
         "--out-dir", str(tmp_path)],
    )
    assert result.exit_code == 1


def test_split_curve_is_non_increasing(runner):
    result = runner.invoke(cli, ["split-curve", "--demand-max", "52", "--points", "14"])
    assert result.exit_code == 0, result.output
    rows = _csv_rows(result.stdout)
    by_variant = {}
    for row in rows:
        by_variant.setdefault(row["variant"], []).append(float(row["r_star"]))
    assert len(by_variant) == 4
    assert "50 ns @ 50% boost" in by_variant
    for splits in by_variant.values():
        assert len(splits) == 14
        assert splits[0] == 1.0
        assert all(a >= b for a, b in zip(splits, splits[1:]))
