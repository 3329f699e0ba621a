import logging

from ..namespaces import exit_ns
from .config import ExperimentConfig
from .metadata import ExperimentMetaData
from .registry import EXPERIMENTS, insufficient_replicates


def run_experiment(config: ExperimentConfig) -> int:
    """
    Runs the configured experiment, writing its JSON report and CSV tables.

    Parameters:
        config : ExperimentConfig
            Validated configuration.

    Returns:
        int
            0 when every hard tolerance band holds, 2 otherwise. Configuration,
            domain and I/O errors propagate to the caller.
    """
    meta = ExperimentMetaData(config.experiment)
    if config.replicates < meta.min_replicates:
        result = insufficient_replicates(config)
    else:
        logging.info(
            f"{config.experiment} started -- box: {config.box}, "
            f"replicates: {config.replicates}, workers: {config.workers}"
        )
        result = EXPERIMENTS[config.experiment](config)

    report = result.report
    for note in report.notes:
        logging.warning(f"{config.experiment} -- {note}")
    if report.passed:
        logging.info(f"{config.experiment} passed")
        return exit_ns.PASS
    logging.info(f"{config.experiment} failed")
    return exit_ns.FAIL
