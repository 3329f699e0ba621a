import logging
import math
from typing import Optional

import numpy as np
from scipy.stats import kstest

from ..curve import RescaledFrame, trusted_window_mask
from ..exceptions import InsufficientData, WindowViolation
from ..lattice import ValueGrid
from ..namespaces import experiments_ns, keys_ns
from .report import StatReport

MIN_INCREMENTS = 100
# X - Y for independent exp(1/2) variables is Laplace with scale 2
LAPLACE_SCALE = 2.0


def busemann_increments(
    grid: ValueGrid, level: int, half_window: int, center: Optional[int] = None
) -> np.ndarray:
    """
    Increments B(v_{i+1}, v_0) - B(v_i, v_0) = G(v_{i+1}) - G(v_i) along the
    anti-diagonal v_i = (i, level - i), for i in [center - w, center + w).
    The centre defaults to the diagonal point level // 2.
    """
    center = level // 2 if center is None else center
    lo, hi = center - half_window, center + half_window
    side = grid.shape[0]
    mask = trusted_window_mask(side)
    i = np.arange(lo, hi + 1)
    j = level - i
    if lo < 0 or j.min() < 0 or hi >= side or j.max() >= side or not mask[i, j].all():
        raise WindowViolation(
            f"level {level}, i in [{lo}, {hi}] leaves the trusted window of a {side}-box"
        )
    values = grid.values[i, j]
    if not np.isfinite(values).all():
        raise WindowViolation(f"level {level} is not below the root {grid.root}")
    return np.diff(values)


def increment_statistics(increments: np.ndarray) -> dict[str, float]:
    """Mean, unbiased variance and KS distance to the Laplace(0, 2) law"""
    if len(increments) < MIN_INCREMENTS:
        raise InsufficientData(
            f"need at least {MIN_INCREMENTS} increments, got {len(increments)}"
        )
    mean = math.fsum(increments) / len(increments)
    variance = math.fsum((increments - mean) ** 2) / (len(increments) - 1)
    ks = kstest(increments, "laplace", args=(0.0, LAPLACE_SCALE)).statistic
    return {
        "count": float(len(increments)),
        "mean": mean,
        "variance": variance,
        "ks": float(ks),
    }


def busemann_increment_test(
    frame: RescaledFrame, grid: ValueGrid, level: int, half_window: int
) -> StatReport:
    """
    Checks the walk x -> B((x, level), (x0, level)) against a two sided
    random walk with Laplace(0, 2) increments: mean 0 and variance 8.
    """
    increments = busemann_increments(grid, level, half_window)
    values = increment_statistics(increments)
    logging.info(
        f"busemann walk -- level: {level}, increments: {len(increments)}, "
        f"mean: {values['mean']:.4f}, variance: {values['variance']:.4f}"
    )
    bands = dict(experiments_ns.BUSEMANN[keys_ns.TOLERANCES])
    bands.pop("consistency_error")
    report = StatReport(
        estimator="busemann_increment_test",
        n=frame.side,
        replicates=1,
        seeds=[],
        params={"level": level, "half_window": half_window, "scale": frame.n},
        values=values,
        tolerances=bands,
    )
    return report.evaluate()
