import json
import logging
from pathlib import Path
from typing import Sequence

import pandas as pd

from ..exceptions import InvalidConfig, SchemaMismatch
from ..namespaces import files_ns
from ..stats import StatReport
from ..utils import PATH, create_directory


def load_report(path: PATH) -> StatReport:
    try:
        return StatReport.from_json(Path(path).read_text())
    except (json.JSONDecodeError, KeyError) as error:
        raise SchemaMismatch(f"{path} is not a report: {error}") from error


def aggregate_reports(paths: Sequence[PATH]) -> pd.DataFrame:
    """
    One summary row per report, with its values, tolerance bands and
    pass flag. Every report must carry the current schema version.
    """
    if not paths:
        raise InvalidConfig("no reports to aggregate")
    reports = [load_report(path) for path in paths]
    return pd.concat([report.to_frame() for report in reports], ignore_index=True)


def write_summary(table: pd.DataFrame, out: PATH) -> Path:
    path = Path(out, files_ns.SUMMARY)
    create_directory(path)
    table.to_csv(path, index=False, float_format=files_ns.FLOAT_FORMAT)
    logging.info(f"summary saved -- {path}")
    return path
