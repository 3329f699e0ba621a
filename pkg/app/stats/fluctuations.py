import logging
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ..exceptions import InsufficientData, WindowViolation
from ..lattice import Seed, StorageMode, WeightField, passage_time
from .fitting import ExponentFit, fit_exponent
from .tails import TailCurve, tail_curve


def corner_passage_samples(
    seeds: Sequence[Seed],
    sizes: Sequence[int],
    storage_mode: StorageMode | str = StorageMode.ON_DEMAND,
) -> dict[int, np.ndarray]:
    """T(0, (m, m)) for each size m, one sample per seed"""
    samples = {}
    for m in sizes:
        values = []
        for seed in seeds:
            field = WeightField(m + 1, seed=seed, storage_mode=storage_mode)
            values.append(passage_time(field, (0, 0), (m, m)))
        samples[int(m)] = np.array(values)
        logging.info(f"corner passage -- size: {m}, replicates: {len(seeds)}")
    return samples


def law_of_large_numbers(samples: Mapping[int, np.ndarray], size: int) -> float:
    """Mean of T(0, (m, m)) / m, close to 4 from below"""
    values = np.asarray(samples[size], dtype=np.float64)
    if len(values) == 0:
        raise InsufficientData(f"no passage samples at size {size}")
    return math.fsum(values) / len(values) / size


def passage_fluctuation_profile(samples: Mapping[int, np.ndarray]) -> ExponentFit:
    """Fits the standard deviation of T(0, (m, m)) against m, slope near 1/3"""
    pairs = []
    for size in sorted(samples):
        values = np.asarray(samples[size], dtype=np.float64)
        if len(values) < 2:
            raise InsufficientData(f"need at least 2 replicates at size {size}")
        pairs.append((size, float(np.std(values, ddof=1))))
    return fit_exponent(pairs)


@dataclass
class TransversalProfile:
    fit: ExponentFit
    # upper tail of sup |x| / m^(2/3) at the largest span
    tail: TailCurve


def transversal_sups(chain: np.ndarray, spans: Sequence[int]) -> np.ndarray:
    """
    sup over the first 2m levels of |x| = |di - dj| / 2 along a chain, for
    each span m. The chain starts at its own origin.
    """
    chain = np.asarray(chain)
    x = np.abs((chain[:, 0] - chain[0, 0]) - (chain[:, 1] - chain[0, 1])) / 2.0
    running = np.maximum.accumulate(x)
    spans = np.asarray(spans, dtype=np.int64)
    if len(spans) and 2 * spans.max() >= len(chain):
        raise WindowViolation(
            f"span {spans.max()} needs {2 * spans.max()} levels, chain has {len(chain) - 1}"
        )
    return running[2 * spans]


def transversal_profile(
    chains: Sequence[np.ndarray], spans: Sequence[int], thresholds: Sequence[float]
) -> TransversalProfile:
    """Fits E sup |x(Gamma_0)| against the span, slope near 2/3"""
    if not chains:
        raise InsufficientData("no geodesics to measure")
    sups = np.array([transversal_sups(chain, spans) for chain in chains])
    means = [math.fsum(column) / len(column) for column in sups.T]
    fit = fit_exponent(zip(spans, means))
    largest = int(np.argmax(spans))
    normalized = sups[:, largest] / spans[largest] ** (2 / 3)
    return TransversalProfile(fit=fit, tail=tail_curve(normalized, thresholds))
