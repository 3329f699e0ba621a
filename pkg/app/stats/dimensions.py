from enum import Enum
from typing import Optional, Sequence

import numpy as np

from ..curve import (
    PeanoCurve,
    RescaledFrame,
    cell_area,
    rescale_arrays,
    trusted_volume,
    trusted_window_mask,
)
from ..exceptions import DegenerateScales, InsufficientData
from ..lattice import SuccessorForest
from .fitting import ExponentFit, fit_exponent


class PullbackTarget(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    GEODESIC = "geodesic"
    WINDOW = "window"


def _check_scales(scale_grid: Sequence[float]) -> np.ndarray:
    scales = np.asarray(scale_grid, dtype=np.float64)
    distinct = len(np.unique(scales)) == len(scales)
    if len(scales) < 3 or not (scales > 0).all() or not distinct:
        raise DegenerateScales(
            f"need at least 3 distinct positive scales, got {list(scale_grid)}"
        )
    return scales


def _occupied(coords: np.ndarray, sizes: np.ndarray) -> int:
    boxes = np.floor(coords / sizes).astype(np.int64)
    return len(np.unique(boxes, axis=0))


def box_count_dimension(points: np.ndarray, scale_grid: Sequence[float]) -> ExponentFit:
    """
    Box-counting dimension in Euclidean coordinates: the slope of the number
    of occupied eps-boxes against 1/eps.

    Parameters:
        points : np.ndarray
            Shape (k, d), or (k,) for points on a line.
        scale_grid : sequence of float
            Box sizes eps.
    """
    scales = _check_scales(scale_grid)
    coords = np.asarray(points, dtype=np.float64)
    coords = coords.reshape(len(coords), -1)
    if len(coords) == 0:
        raise InsufficientData("box counting needs at least one point")
    counts = [_occupied(coords, np.full(coords.shape[1], eps)) for eps in scales]
    return fit_exponent(zip(1.0 / scales, counts))


def intrinsic_box_dimension(
    x: np.ndarray, t: np.ndarray, scale_grid: Sequence[float]
) -> ExponentFit:
    """Box counting with eps^2 x eps^3 boxes, the balls of the intrinsic metric"""
    scales = _check_scales(scale_grid)
    coords = np.column_stack([np.asarray(x, np.float64), np.asarray(t, np.float64)])
    if len(coords) == 0:
        raise InsufficientData("box counting needs at least one point")
    counts = [_occupied(coords, np.array([eps**2, eps**3])) for eps in scales]
    return fit_exponent(zip(1.0 / scales, counts))


def target_mask(
    frame: RescaledFrame,
    target: PullbackTarget,
    value: float = 0.0,
    forest: Optional[SuccessorForest] = None,
) -> np.ndarray:
    """
    Cells meeting a target set: the line t = value, the line x = value, the
    geodesic of the frame origin, or every cell.
    """
    target = PullbackTarget(target)
    shape = (frame.side, frame.side)
    i, j = np.indices(shape)
    di, dj = i - frame.origin[0], j - frame.origin[1]
    if target is PullbackTarget.HORIZONTAL:
        level = np.ceil(value * frame.time_unit - 0.5)
        return di + dj == level
    if target is PullbackTarget.VERTICAL:
        # a cell spans (d - 1, d + 1] in di - dj
        d = value * frame.space_unit
        return (di - dj >= d - 1) & (di - dj < d + 1)
    if target is PullbackTarget.GEODESIC:
        if forest is None:
            raise InsufficientData("the geodesic target needs a forest")
        chain = forest.chain(frame.origin).vertices
        mask = np.zeros(shape, dtype=bool)
        mask[chain[:, 0], chain[:, 1]] = True
        return mask
    return np.ones(shape, dtype=bool)


def pullback_indices(
    frame: RescaledFrame,
    curve: PeanoCurve,
    target: PullbackTarget,
    value: float = 0.0,
    forest: Optional[SuccessorForest] = None,
    volume: Optional[float] = None,
) -> np.ndarray:
    """
    Sorted curve volumes of the trusted cells meeting the target, restricted
    to the volume window [-volume, volume].
    """
    volume = trusted_volume(frame, curve) if volume is None else volume
    mask = target_mask(frame, target, value, forest or curve.forest)
    mask &= trusted_window_mask(frame.side)
    ids = np.flatnonzero(mask.ravel())
    v = (curve.inverse[ids] - curve.origin_index) * cell_area(frame)
    v = np.sort(v[np.abs(v) <= volume])
    if len(v) == 0:
        raise InsufficientData(
            f"{PullbackTarget(target).value} target misses the window"
        )
    return v


def target_points(
    frame: RescaledFrame,
    target: PullbackTarget,
    value: float = 0.0,
    forest: Optional[SuccessorForest] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Rescaled (x, t) of the trusted cells meeting the target"""
    mask = target_mask(frame, target, value, forest) & trusted_window_mask(frame.side)
    i, j = np.nonzero(mask)
    return rescale_arrays(frame, i, j)
