from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from ..exceptions import InvalidForest, OrderingError, OutOfRangeIndex
from ..lattice import SuccessorForest
from ..lattice.kernels import inorder
from ..utils import check_in_box
from .rays import ray

Vertex = tuple[int, int]


@dataclass
class PeanoCurve:
    """
    Discrete area-parametrized Peano curve: a total order of the vertices
    of a box.

    Signed index k refers to position origin_index + k of order, so the
    origin vertex has index 0 and neighbouring indices are one cell apart.
    """

    order: np.ndarray
    shape: tuple[int, int]
    origin_index: int = 0
    forest: Optional[SuccessorForest] = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.order = np.asarray(self.order, dtype=np.int64)
        size = self.shape[0] * self.shape[1]
        if len(self.order) != size:
            raise InvalidForest(f"curve visits {len(self.order)} of {size} vertices")
        if not 0 <= self.origin_index < size:
            raise OutOfRangeIndex(
                f"origin index {self.origin_index} is outside the curve"
            )
        self.inverse = np.full(size, -1, dtype=np.int64)
        self.inverse[self.order] = np.arange(size, dtype=np.int64)
        if (self.inverse < 0).any():
            raise InvalidForest("curve order is not a bijection of the box")

    def __len__(self) -> int:
        return len(self.order)

    @property
    def first_index(self) -> int:
        return -self.origin_index

    @property
    def last_index(self) -> int:
        return len(self.order) - 1 - self.origin_index

    @property
    def origin(self) -> Vertex:
        return self._vertex(int(self.order[self.origin_index]))

    def positions(self, ks: np.ndarray) -> np.ndarray:
        """Raw positions in order of signed indices, range checked"""
        positions = np.asarray(ks, dtype=np.int64) + self.origin_index
        if positions.size and (positions.min() < 0 or positions.max() >= len(self)):
            raise OutOfRangeIndex(
                f"indices must lie in [{self.first_index}, {self.last_index}]"
            )
        return positions

    def lookup_many(self, ks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Vertex coordinates (i, j) of many signed indices at once"""
        ids = self.order[self.positions(ks)]
        return np.divmod(ids, self.shape[1])

    def with_origin(self, origin: Vertex) -> "PeanoCurve":
        check_in_box(origin, self.shape)
        index = int(self.inverse[origin[0] * self.shape[1] + origin[1]])
        return replace(self, origin_index=index)

    def _vertex(self, linear_id: int) -> Vertex:
        i, j = divmod(linear_id, self.shape[1])
        return (int(i), int(j))


def peano_order(forest: SuccessorForest, origin: Optional[Vertex] = None) -> PeanoCurve:
    """
    In-order traversal of the geodesic tree.

    At each vertex the subtree of the child arriving horizontally (v - e1)
    comes first, then the vertex, then the subtree of the child arriving
    vertically (v - e2).

    Parameters:
        forest : SuccessorForest
            Spanning tree rooted at its top-right vertex.
        origin : tuple, optional
            Vertex given index 0. Defaults to the first vertex of the order.

    Returns:
        PeanoCurve
    """
    order, count = inorder(forest.steps)
    size = forest.shape[0] * forest.shape[1]
    if count != size:
        raise InvalidForest(f"traversal reached {count} of {size} vertices")
    curve = PeanoCurve(order=order, shape=forest.shape, forest=forest)
    if origin is not None:
        curve = curve.with_origin(origin)
    return curve


def curve_lookup(curve: PeanoCurve, k: int) -> Vertex:
    position = int(curve.positions(np.array([k]))[0])
    return curve._vertex(int(curve.order[position]))


def curve_index(curve: PeanoCurve, p: Vertex) -> int:
    check_in_box(p, curve.shape)
    return int(curve.inverse[p[0] * curve.shape[1] + p[1]]) - curve.origin_index


def prefix_region(curve: PeanoCurve, k: int) -> np.ndarray:
    """Bitmap of the vertices with index <= k"""
    position = int(curve.positions(np.array([k]))[0])
    return (curve.inverse <= position).reshape(curve.shape)


def segment_region(curve: PeanoCurve, k1: int, k2: int) -> np.ndarray:
    """Bitmap of the vertices with k1 <= index <= k2"""
    if k1 > k2:
        raise OrderingError(f"segment start {k1} is after its end {k2}")
    lo, hi = curve.positions(np.array([k1, k2]))
    return ((curve.inverse >= lo) & (curve.inverse <= hi)).reshape(curve.shape)


def boundary_rays(curve: PeanoCurve, k1: int, k2: int) -> np.ndarray:
    """
    Bitmap of the cells covered by the rays of the two segment endpoints,
    the discrete boundary of the curve segment [k1, k2].
    """
    if k1 >= k2:
        raise OrderingError(f"boundary needs k1 < k2, got {k1} and {k2}")
    if curve.forest is None:
        raise InvalidForest("curve was built without its forest")
    first = ray(curve.forest, curve_lookup(curve, k1))
    second = ray(curve.forest, curve_lookup(curve, k2))
    return first.cells(curve.shape) | second.cells(curve.shape)
