import json

import pandas as pd
import pytest

from app.exceptions import InvalidConfig, SchemaMismatch
from app.experiments import (
    aggregate_reports,
    load_config,
    load_report,
    report_path,
    run_experiment,
    write_summary,
)
from app.stats import StatReport, check_bands


@pytest.fixture
def oracle_report(tmp_path):
    config = load_config(
        {"experiment": "oracle", "box": 4, "replicates": 2, "out": str(tmp_path)},
        environ={},
    )
    run_experiment(config)
    return report_path(tmp_path, "oracle")


def test_single_report_gives_one_row(oracle_report, tmp_path):
    table = aggregate_reports([oracle_report])
    assert len(table) == 1
    assert table.loc[0, "estimator"] == "oracle"
    assert table.loc[0, "value.passage_mismatches"] == 0
    assert table.loc[0, "high.passage_mismatches"] == 0
    summary = write_summary(table, tmp_path / "summary")
    assert pd.read_csv(summary).shape[0] == 1


def test_report_round_trips_through_json(oracle_report):
    report = load_report(oracle_report)
    assert report.passed
    assert report.to_json() == oracle_report.read_text()


def test_infinite_bands_survive_json():
    report = StatReport(
        estimator="vr",
        n=64,
        replicates=100,
        seeds=[0],
        values={"tail_ratio": float("inf")},
        tolerances={"tail_ratio": (5.0, float("inf"))},
    )
    restored = StatReport.from_json(report.to_json())
    assert restored.tolerances["tail_ratio"] == (5.0, float("inf"))
    assert restored.values["tail_ratio"] is None


def test_mismatched_schema_version_is_rejected(oracle_report):
    data = json.loads(oracle_report.read_text())
    data["schema_version"] = 99
    oracle_report.write_text(json.dumps(data))
    with pytest.raises(SchemaMismatch):
        aggregate_reports([oracle_report])


def test_malformed_reports_are_rejected(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(SchemaMismatch):
        load_report(path)
    path.write_text(json.dumps({"schema_version": 1}))
    with pytest.raises(SchemaMismatch):
        load_report(path)
    with pytest.raises(InvalidConfig):
        aggregate_reports([])


def test_check_bands():
    bands = {"a": (0.0, 1.0), "b": (2.0, 3.0)}
    assert check_bands({"a": 0.5, "b": 2.0}, bands) == (True, [])
    passed, notes = check_bands({"a": 2.0}, bands, soft=("a",))
    assert not passed
    assert notes[0].startswith("warning: a=2.0")
    assert notes[1].startswith("b=nan")
