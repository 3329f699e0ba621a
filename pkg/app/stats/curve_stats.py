"""
Statistics of rescaled curves.

A curve path is any callable mapping an array of volumes v to the arrays
(x, t) of rescaled coordinates, such as RescaledCurve. The coordinate "u"
is the time t and "h" is the space x.
"""
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.stats import ks_2samp

from ..exceptions import DomainError, InsufficientData, WindowViolation
from .fitting import ExponentFit, fit_exponent
from .tails import TailCurve, tail_curve

CurvePath = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]
COORDINATES = ("u", "h")


def _coordinate(path: CurvePath, v: np.ndarray, coordinate: str) -> np.ndarray:
    if coordinate not in COORDINATES:
        raise DomainError(f"coordinate must be one of {COORDINATES}, got {coordinate}")
    x, t = path(np.asarray(v, dtype=np.float64))
    return t if coordinate == "u" else x


def curve_scaling_profile(
    paths: Sequence[CurvePath], v_grid: Sequence[float], coordinate: str
) -> ExponentFit:
    """
    Fits E|eta_c(v) - eta_c(0)| against v over replicate curves.

    Parameters:
        paths : sequence of curve paths
            One rescaled curve per replicate.
        v_grid : sequence of float
            Positive volumes, dyadic in practice.
        coordinate : str
            "u" for the time coordinate, "h" for the space coordinate.

    Returns:
        ExponentFit
            Expected slope 3/5 for u and 2/5 for h.
    """
    rows = [scaling_displacements(path, v_grid, coordinate) for path in paths]
    return fit_scaling(v_grid, rows)


def scaling_displacements(
    path: CurvePath, v_grid: Sequence[float], coordinate: str
) -> np.ndarray:
    """|eta_c(v) - eta_c(0)| for each v of one curve"""
    start = _coordinate(path, np.zeros(1), coordinate)[0]
    return np.abs(_coordinate(path, np.asarray(v_grid, np.float64), coordinate) - start)


def fit_scaling(v_grid: Sequence[float], rows: Sequence[np.ndarray]) -> ExponentFit:
    """Fits replicate means of displacement rows, summed in replicate order"""
    if not len(rows):
        raise InsufficientData("no curves to average")
    means = [math.fsum(column) / len(rows) for column in np.asarray(rows).T]
    return fit_exponent(zip(v_grid, means))


def variation_increment(
    path: CurvePath, v: np.ndarray, eps: np.ndarray, alpha: float
) -> np.ndarray:
    """In^alpha_v(eta, eps) = |du|^(alpha/3) + |dh|^(alpha/2)"""
    v = np.asarray(v, dtype=np.float64)
    x0, t0 = path(v)
    x1, t1 = path(v + np.asarray(eps, dtype=np.float64))
    return np.abs(t1 - t0) ** (alpha / 3) + np.abs(x1 - x0) ** (alpha / 2)


@dataclass
class VariationSample:
    interval: tuple[float, float]
    rate: float
    alpha: float
    value: float
    point_count: int

    @property
    def per_volume(self) -> float:
        return self.value / (self.interval[1] - self.interval[0])


def variation_sum(
    path: CurvePath,
    interval: tuple[float, float],
    rate: float,
    alpha: float,
    sample_seed: int | Sequence[int],
) -> VariationSample:
    """
    Sum of In^alpha increments over the gaps of a rate-m Poisson process on
    the interval. The points depend only on the sample seed, so sums for
    several alphas with one seed share their partition.
    """
    a, b = float(interval[0]), float(interval[1])
    if not b > a:
        raise InsufficientData(f"interval [{a}, {b}] is empty")
    if rate <= 0:
        raise DomainError(f"rate must be positive, got {rate}")
    rng = np.random.default_rng(sample_seed)
    count = int(rng.poisson(rate * (b - a)))
    points = np.sort(rng.uniform(a, b, count))
    if count < 2:
        value = 0.0
    else:
        increments = variation_increment(path, points[:-1], np.diff(points), alpha)
        value = math.fsum(increments)
    return VariationSample(
        interval=(a, b),
        rate=float(rate),
        alpha=float(alpha),
        value=value,
        point_count=count,
    )


def variation_constant(samples: Sequence[VariationSample]) -> float:
    """Estimate of E In^5_0(eta, 1) from alpha = 5 sums, per unit volume"""
    critical = [s.per_volume for s in samples if s.alpha == 5.0]
    if not critical:
        raise InsufficientData("no alpha = 5 samples to estimate the constant")
    return math.fsum(critical) / len(critical)


def holder_modulus(
    path: CurvePath,
    delta_grid: Sequence[float],
    pairs: int,
    sample_seed: int | Sequence[int],
    volume: Optional[float] = None,
) -> ExponentFit:
    """
    Fits the intrinsic modulus of continuity against delta.

    For each delta the modulus is the largest d_in(eta(v), eta(w)) over
    sampled pairs with |v - w| <= delta inside [-volume, volume]; it is made
    non-decreasing in delta before fitting. The slope tends to 1/5 from
    above.
    """
    volume = getattr(path, "volume", None) if volume is None else volume
    if volume is None:
        raise WindowViolation("the curve path has no volume window")
    deltas = np.sort(np.asarray(delta_grid, dtype=np.float64))
    if len(deltas) and deltas[-1] >= 2 * volume:
        raise WindowViolation(f"delta {deltas[-1]} exceeds the volume window {volume}")

    rng = np.random.default_rng(sample_seed)
    moduli = []
    running = 0.0
    for delta in deltas:
        v = rng.uniform(-volume, volume - delta, pairs)
        w = v + rng.uniform(0.0, 1.0, pairs) * delta
        xv, tv = path(v)
        xw, tw = path(w)
        distances = np.abs(xv - xw) ** 0.5 + np.abs(tv - tw) ** (1 / 3)
        running = max(running, float(distances.max()))
        moduli.append(running)
    return fit_exponent(zip(deltas, moduli))


def two_sample_ks(first: Sequence[float], second: Sequence[float]) -> float:
    if len(first) < 2 or len(second) < 2:
        raise InsufficientData("a two-sample test needs at least two replicates")
    return float(ks_2samp(np.asarray(first), np.asarray(second)).statistic)


def reflection_samples(path: CurvePath, v: float = 1.0) -> tuple[float, float]:
    """eta_u(v) and -eta_u(-v) of one curve"""
    t = _coordinate(path, np.array([v, -v]), "u")
    return float(t[0]), float(-t[1])


def reflection_symmetry_test(paths: Sequence[CurvePath], v: float = 1.0) -> float:
    """KS distance between eta_u(v) and -eta_u(-v) across replicates"""
    samples = np.array([reflection_samples(path, v) for path in paths]).reshape(-1, 2)
    return two_sample_ks(samples[:, 0], samples[:, 1])


def translation_samples(path: CurvePath, v0: float, v: float) -> np.ndarray:
    """
    Rows (u, h) of [eta(v0 + v) - eta(v0), eta(v) - eta(0)] for one curve.
    """
    x, t = path(np.array([0.0, v, v0, v0 + v]))
    return np.array([[t[3] - t[2], t[1] - t[0]], [x[3] - x[2], x[1] - x[0]]])


def translation_ks(samples: Sequence[np.ndarray]) -> float:
    """Largest KS distance over both coordinates of stacked translation samples"""
    stacked = np.asarray(samples).reshape(-1, 2, 2)
    return max(
        two_sample_ks(stacked[:, c, 0], stacked[:, c, 1])
        for c in range(len(COORDINATES))
    )


def translation_invariance_test(
    paths: Sequence[CurvePath], v0: float, v: float
) -> float:
    """
    Largest KS distance, over both coordinates, between eta(v0 + v) - eta(v0)
    and eta(v) - eta(0) across replicates.
    """
    return translation_ks([translation_samples(path, v0, v) for path in paths])


def coordinate_tail(
    paths: Sequence[CurvePath],
    coordinate: str,
    thresholds: Sequence[float],
    v: float = 1.0,
) -> TailCurve:
    """Upper tail of |eta_c(v)| across replicates"""
    samples = [abs(_coordinate(p, np.array([v]), coordinate)[0]) for p in paths]
    return tail_curve(samples, thresholds, lower=False)
