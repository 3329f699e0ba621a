"""
Maps between lattice vertices and KPZ-rescaled coordinates (x, t).

Relative to the frame origin, a vertex displaced by (di, dj) sits at
t = (di + dj) / (2n) and x = (di - dj) 2^(-5/3) n^(-2/3). Passage times are
centred by twice the level difference and scaled by 2^(-4/3) n^(-1/3).
"""
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..exceptions import DomainError, OrderingError, OutOfBoxError, WindowViolation
from ..lattice import SuccessorForest, ValueGrid, WeightField, busemann, passage_time
from ..namespaces import lattice_ns
from ..utils import check_in_box
from .peano import PeanoCurve, curve_lookup

Vertex = tuple[int, int]
REAL = Union[float, np.ndarray]

SPACE_POWER = 2.0 ** (5 / 3)
PASSAGE_SCALE = 2.0 ** (-4 / 3)


@dataclass(frozen=True)
class RescaledPoint:
    x: float
    t: float


@dataclass(frozen=True)
class RescaledFrame:
    """
    Affine frame of a side-N box. n is a real scale parameter, usually N / 2,
    and origin is the vertex mapped to (0, 0).
    """

    n: float
    origin: Vertex
    side: int

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise DomainError(f"scale must be positive, got {self.n}")
        check_in_box(self.origin, (self.side, self.side))

    @property
    def space_unit(self) -> float:
        """Lattice value of di - dj per unit of x"""
        return SPACE_POWER * self.n ** (2 / 3)

    @property
    def time_unit(self) -> float:
        """Lattice levels per unit of t"""
        return 2.0 * self.n

    @property
    def passage_scale(self) -> float:
        return PASSAGE_SCALE * self.n ** (-1 / 3)


def default_frame(side: int, n: Optional[float] = None) -> RescaledFrame:
    """Frame with scale side / 2 centred at (side // 4, side // 4)"""
    return RescaledFrame(
        n=side / 2 if n is None else float(n),
        origin=(side // 4, side // 4),
        side=side,
    )


def cell_area(frame: RescaledFrame) -> float:
    """Rescaled area of one lattice cell, 2^(-5/3) n^(-5/3)"""
    return 1.0 / (frame.time_unit * frame.space_unit / 2.0)


def rescale_arrays(
    frame: RescaledFrame, i: np.ndarray, j: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    di = np.asarray(i, dtype=np.float64) - frame.origin[0]
    dj = np.asarray(j, dtype=np.float64) - frame.origin[1]
    return (di - dj) / frame.space_unit, (di + dj) / frame.time_unit


def to_rescaled(frame: RescaledFrame, p: Vertex) -> RescaledPoint:
    check_in_box(p, (frame.side, frame.side))
    x, t = rescale_arrays(frame, np.array(p[0]), np.array(p[1]))
    return RescaledPoint(x=float(x), t=float(t))


def to_lattice(frame: RescaledFrame, z: RescaledPoint) -> Vertex:
    """
    Nearest vertex under the Box tiling: the level sum is rounded with
    half-open window (-1/2, 1/2] and the difference, which must share its
    parity, with window (-1, 1].
    """
    sigma = z.t * frame.time_unit
    delta = z.x * frame.space_unit
    s = math.ceil(sigma - 0.5)
    d = s + 2 * math.ceil((delta - 1 - s) / 2)
    p = (frame.origin[0] + (s + d) // 2, frame.origin[1] + (s - d) // 2)
    if not (0 <= p[0] < frame.side and 0 <= p[1] < frame.side):
        raise OutOfBoxError(f"({z.x}, {z.t}) maps to {p} outside the {frame.side}-box")
    return p


def normalize_passage(frame: RescaledFrame, value: REAL, level_gap: REAL) -> REAL:
    """2^(-4/3) n^(-1/3) (T - 2 * level_gap)"""
    return frame.passage_scale * (np.asarray(value) - 2.0 * np.asarray(level_gap))


def rescaled_passage(
    frame: RescaledFrame, field: WeightField, z1: RescaledPoint, z2: RescaledPoint
) -> float:
    if z1.t > z2.t:
        raise OrderingError(f"t = {z1.t} is after t = {z2.t}")
    p, q = to_lattice(frame, z1), to_lattice(frame, z2)
    value = passage_time(field, p, q)
    return float(normalize_passage(frame, value, sum(q) - sum(p)))


def rescaled_busemann(
    frame: RescaledFrame, grid: ValueGrid, z1: RescaledPoint, z2: RescaledPoint
) -> float:
    p, q = to_lattice(frame, z1), to_lattice(frame, z2)
    return float(normalize_passage(frame, busemann(grid, p, q), sum(q) - sum(p)))


def intrinsic_distance(z1: RescaledPoint, z2: RescaledPoint) -> float:
    """d_in = |dx|^(1/2) + |dt|^(1/3)"""
    return float(intrinsic_increment(z1.x - z2.x, z1.t - z2.t))


def intrinsic_increment(dx: REAL, dt: REAL) -> REAL:
    return np.abs(dx) ** 0.5 + np.abs(dt) ** (1 / 3)


def trusted_window_mask(side: int) -> np.ndarray:
    """Vertices with i + j <= side and |i - j| <= side^0.9"""
    i, j = np.indices((side, side))
    margin = side**lattice_ns.TRUSTED_TRANSVERSAL_POWER
    return (i + j <= side) & (np.abs(i - j) <= margin)


def trusted_volume(frame: RescaledFrame, curve: PeanoCurve) -> float:
    """
    Largest V such that every cell with curve parameter in [-V, V] lies in
    the trusted window.
    """
    trusted = trusted_window_mask(frame.side).ravel()[curve.order]
    origin = curve.origin_index
    if not trusted[origin]:
        return 0.0
    untrusted = np.flatnonzero(~trusted)
    before = untrusted[untrusted < origin]
    after = untrusted[untrusted > origin]
    left = origin - (before.max() + 1) if len(before) else origin
    right = (after.min() - 1) - origin if len(after) else len(trusted) - 1 - origin
    return min(left, right) * cell_area(frame)


def curve_volume_index(frame: RescaledFrame, v: REAL) -> np.ndarray:
    """Signed curve index of volume v, rounded half up"""
    return np.floor(np.asarray(v, dtype=np.float64) / cell_area(frame) + 0.5).astype(
        np.int64
    )


def rescaled_curve_param(
    frame: RescaledFrame, curve: PeanoCurve, v: float
) -> RescaledPoint:
    k = int(curve_volume_index(frame, v))
    return to_rescaled(frame, curve_lookup(curve, k))


class RescaledCurve:
    """
    Vectorized v -> (x, t) evaluation of a curve, restricted to the
    trusted volume window [-volume, volume].
    """

    def __init__(
        self, frame: RescaledFrame, curve: PeanoCurve, volume: Optional[float] = None
    ) -> None:
        if curve.origin != frame.origin:
            raise WindowViolation(
                f"curve origin {curve.origin} differs from frame origin {frame.origin}"
            )
        self.frame = frame
        self.curve = curve
        self.volume = trusted_volume(frame, curve) if volume is None else volume

    def __call__(self, v: REAL) -> tuple[np.ndarray, np.ndarray]:
        v = np.asarray(v, dtype=np.float64)
        if v.size and np.abs(v).max() > self.volume:
            raise WindowViolation(
                f"|v| up to {np.abs(v).max():.4g} leaves the trusted window "
                f"[-{self.volume:.4g}, {self.volume:.4g}]"
            )
        i, j = self.curve.lookup_many(curve_volume_index(self.frame, v))
        return rescale_arrays(self.frame, i, j)

    def point(self, v: float) -> RescaledPoint:
        x, t = self(np.array([v]))
        return RescaledPoint(x=float(x[0]), t=float(t[0]))


def rescaled_curve(frame: RescaledFrame, curve: PeanoCurve) -> RescaledCurve:
    return RescaledCurve(frame, curve)


def rescaled_geodesic(
    frame: RescaledFrame,
    forest: SuccessorForest,
    start: Optional[Vertex] = None,
    trusted_only: bool = True,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Geodesic of start (the frame origin by default) as rescaled (x, t)
    arrays ordered by time, cut at the first vertex leaving the trusted
    window when trusted_only is set.
    """
    start = frame.origin if start is None else start
    chain = forest.chain(start).vertices
    if trusted_only:
        mask = trusted_window_mask(frame.side)[chain[:, 0], chain[:, 1]]
        outside = np.flatnonzero(~mask)
        if len(outside):
            chain = chain[: outside[0]]
    return rescale_arrays(frame, chain[:, 0], chain[:, 1])
