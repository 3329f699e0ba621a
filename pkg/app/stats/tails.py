from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..exceptions import InsufficientData
from ..lattice import SuccessorForest, coalescence_levels, volume_right

MIN_TAIL_SAMPLES = 100


@dataclass
class TailCurve:
    """Empirical P(X <= threshold) when lower, else P(X > threshold)"""

    thresholds: np.ndarray
    survival: np.ndarray
    sample_count: int
    lower: bool = False

    def to_dict(self) -> dict:
        return {
            "thresholds": [float(t) for t in self.thresholds],
            "survival": [float(s) for s in self.survival],
            "sample_count": self.sample_count,
            "lower": self.lower,
        }


def tail_curve(
    samples: Sequence[float], thresholds: Sequence[float], lower: bool = False
) -> TailCurve:
    values = np.sort(np.asarray(samples, dtype=np.float64))
    if len(values) == 0:
        raise InsufficientData("a tail curve needs at least one sample")
    grid = np.sort(np.asarray(thresholds, dtype=np.float64))
    at_or_below = np.searchsorted(values, grid, side="right") / len(values)
    survival = at_or_below if lower else 1.0 - at_or_below
    return TailCurve(
        thresholds=grid, survival=survival, sample_count=len(values), lower=lower
    )


def vr_tail(samples: Sequence[float], epsilon_grid: Sequence[float]) -> TailCurve:
    """Lower tail P(V <= eps) of normalized V_R samples"""
    if len(samples) < MIN_TAIL_SAMPLES:
        raise InsufficientData(
            f"need at least {MIN_TAIL_SAMPLES} samples, got {len(samples)}"
        )
    return tail_curve(samples, epsilon_grid, lower=True)


def volume_right_samples(
    forest: SuccessorForest, base: tuple[int, int], times: Sequence[int]
) -> np.ndarray:
    """
    V_R(Gamma; m) / m^(5/3) of the geodesic of base for each time m, with
    horizon level(base) + 2m.
    """
    cl = coalescence_levels(forest, base)
    start = base[0] + base[1]
    return np.array(
        [volume_right(forest, cl, base, start + 2 * m) / m ** (5 / 3) for m in times]
    )
