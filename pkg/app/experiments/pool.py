from typing import Callable, TypeVar

from joblib import Parallel, delayed

from ..lattice import Seed
from .config import ExperimentConfig

T = TypeVar("T")


def replicate_seeds(config: ExperimentConfig) -> list[Seed]:
    return [Seed(config.seed, r) for r in range(config.replicates)]


def map_replicates(
    config: ExperimentConfig, task: Callable[[ExperimentConfig, Seed], T]
) -> list[T]:
    """
    Runs task once per replicate seed and returns results in replicate
    order, whatever the number of workers. Tasks must be module-level
    functions so that worker processes can import them.
    """
    seeds = replicate_seeds(config)
    if config.workers == 1:
        return [task(config, seed) for seed in seeds]
    parallel = Parallel(n_jobs=config.workers)
    return parallel(delayed(task)(config, seed) for seed in seeds)
