from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.stats import linregress

from ..exceptions import DegenerateScales, InsufficientData

MIN_SCALES = 3


@dataclass
class ExponentFit:
    """Least-squares fit of log(means) against log(scales)"""

    scales: np.ndarray
    means: np.ndarray
    slope: float
    intercept: float
    stderr: float
    r2: float

    def to_dict(self) -> dict:
        return {
            "scales": [float(s) for s in self.scales],
            "means": [float(m) for m in self.means],
            "slope": self.slope,
            "intercept": self.intercept,
            "stderr": self.stderr,
            "r2": self.r2,
        }


def fit_exponent(pairs: Iterable[tuple[float, float]]) -> ExponentFit:
    """
    OLS slope of a log-log relation.

    Parameters:
        pairs : iterable of (scale, mean)
            Strictly positive scales and means, at least three distinct scales.

    Returns:
        ExponentFit
            Slope, intercept, standard error of the slope and r^2.

    Raises:
        DegenerateScales
            When a scale or mean is not strictly positive.
        InsufficientData
            When fewer than three distinct scales are given.
    """
    data = np.asarray(list(pairs), dtype=np.float64).reshape(-1, 2)
    scales, means = data[:, 0], data[:, 1]
    if not (np.all(np.isfinite(data)) and np.all(data > 0)):
        raise DegenerateScales("scales and means must be finite and positive")
    if len(np.unique(scales)) < MIN_SCALES:
        raise InsufficientData(
            f"need at least {MIN_SCALES} distinct scales, got {len(np.unique(scales))}"
        )

    log_means = np.log(means)
    if np.ptp(log_means) == 0.0:
        # linregress leaves r undefined on constant data
        return ExponentFit(scales, means, 0.0, float(log_means[0]), 0.0, 1.0)
    result = linregress(np.log(scales), log_means)
    return ExponentFit(
        scales=scales,
        means=means,
        slope=float(result.slope),
        intercept=float(result.intercept),
        stderr=float(result.stderr),
        r2=float(result.rvalue**2),
    )
