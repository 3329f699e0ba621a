import logging
from dataclasses import dataclass, field
from functools import wraps
from pathlib import Path
from typing import Callable

import pandas as pd

from ..namespaces import files_ns
from ..stats import StatReport
from ..utils import create_directory
from .config import ExperimentConfig


@dataclass
class ExperimentResult:
    report: StatReport
    tables: dict[str, pd.DataFrame] = field(default_factory=dict)


EXPERIMENT = Callable[[ExperimentConfig], ExperimentResult]


def report_path(out: Path, experiment: str) -> Path:
    return Path(out, files_ns.REPORTS_FOLDER, f"{experiment}{files_ns.REPORT_EXT}")


def save_results(f: EXPERIMENT) -> EXPERIMENT:
    """
    Writes the report of an experiment as JSON and each of its tables as CSV
    under the configured output folder. File names depend only on the
    experiment, so reruns overwrite byte-identical files.
    """

    @wraps(f)
    def wrapper(config: ExperimentConfig) -> ExperimentResult:
        out = f(config)

        path = report_path(config.out, config.experiment)
        create_directory(path)
        path.write_text(out.report.to_json())
        logging.info(f"report saved -- {path}")

        folder = Path(config.out, files_ns.TABLES_FOLDER)
        for name, table in out.tables.items():
            create_directory(folder)
            table_path = folder / f"{config.experiment}_{name}{files_ns.TABLE_EXT}"
            table.to_csv(table_path, index=False, float_format=files_ns.FLOAT_FORMAT)
        return out

    return wrapper
