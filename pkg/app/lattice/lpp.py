from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from ..exceptions import DisplacementTooLarge, InvalidForest
from ..namespaces import lattice_ns
from ..utils import check_in_box, check_ordered
from .field import WeightField
from .kernels import corner_passage, row_sweep, value_sweep

Vertex = tuple[int, int]


@dataclass
class ValueGrid:
    """
    Last-passage values to a root, G(v) = T(v, root).

    The first vertex of a path carries no weight, so G(root) = 0 and
    G(v) = max(X[v + e1] + G(v + e1), X[v + e2] + G(v + e2)).
    Vertices that are not below the root hold -inf.
    """

    root: Vertex
    values: np.ndarray

    @property
    def box(self) -> int:
        return self.values.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape  # type: ignore

    @property
    def region_shape(self) -> tuple[int, int]:
        """Shape of the rectangle [0, root] where values are finite"""
        return (self.root[0] + 1, self.root[1] + 1)

    def value(self, v: Vertex) -> float:
        check_in_box(v, self.shape)
        return float(self.values[v])


@dataclass
class LatticePath:
    """Up-right lattice path stored as a (k, 2) integer array"""

    vertices: np.ndarray

    def __post_init__(self) -> None:
        self.vertices = np.asarray(self.vertices, dtype=np.int64).reshape(-1, 2)
        steps = np.diff(self.vertices, axis=0)
        unit = (steps.sum(axis=1) == 1) & (steps.min(axis=1, initial=0) == 0)
        if steps.size and not unit.all():
            raise InvalidForest("path steps must be +e1 or +e2")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Vertex]:
        return (tuple(v) for v in self.vertices.tolist())  # type: ignore

    @property
    def start(self) -> Vertex:
        return tuple(self.vertices[0])  # type: ignore

    @property
    def end(self) -> Vertex:
        return tuple(self.vertices[-1])  # type: ignore

    @property
    def steps(self) -> np.ndarray:
        """0 for a right step, 1 for an up step"""
        return np.diff(self.vertices, axis=0)[:, 1].astype(np.uint8)

    def weight(self, field: WeightField) -> float:
        """Sum of the weights of every vertex but the first"""
        return float(sum(field.weight(i, j) for i, j in self.vertices[1:].tolist()))


def value_grid(field: WeightField, root: Optional[Vertex] = None) -> ValueGrid:
    """
    Computes G(v) = T(v, root) for every vertex by a backward sweep, one row
    of weights at a time.

    Parameters:
        field : WeightField
            Weights of the box. Rows are streamed, so an on-demand field is
            never materialized.
        root : tuple, optional
            Target vertex. Defaults to the top-right corner.

    Returns:
        ValueGrid: values with -inf at vertices that are not below the root
    """
    if root is None:
        root = (field.side - 1, field.side - 1)
    check_in_box(root, field.shape)
    ri, rj = int(root[0]), int(root[1])
    values = np.full(field.shape, -np.inf)
    next_weights = np.zeros(rj + 1)
    next_values = np.full(rj + 1, -np.inf)
    for i in range(ri, -1, -1):
        weights = field.row(i)[: rj + 1]
        row_sweep(weights, next_weights, next_values, values[i, : rj + 1], i == ri)
        next_weights, next_values = weights, values[i, : rj + 1]
    return ValueGrid(root=(ri, rj), values=values)


def passage_time(field: WeightField, p: Vertex, q: Vertex) -> float:
    """
    Maximum weight over up-right paths from p to q, excluding X_p.

    Computed over the rectangle [p, q] with two rolling rows; equals the
    entry of value_grid(field, q) at p exactly.
    """
    check_in_box(p, field.shape)
    check_in_box(q, field.shape)
    check_ordered(p, q)
    if p == q:
        return 0.0
    block = field.block(p[0], q[0], p[1], q[1])
    return float(corner_passage(block))


def geodesic_between(field: WeightField, p: Vertex, q: Vertex) -> LatticePath:
    """Geodesic from p to q, argmax steps traced forward with ties going up"""
    check_in_box(p, field.shape)
    check_in_box(q, field.shape)
    check_ordered(p, q)
    if p == q:
        return LatticePath(np.array([p]))
    block = field.block(p[0], q[0], p[1], q[1])
    ri, rj = q[0] - p[0], q[1] - p[1]
    values = value_sweep(block, ri, rj)

    vertices = [(0, 0)]
    i, j = 0, 0
    while (i, j) != (ri, rj):
        up = block[i, j + 1] + values[i, j + 1] if j < rj else -np.inf
        right = block[i + 1, j] + values[i + 1, j] if i < ri else -np.inf
        if up >= right:
            j += 1
        else:
            i += 1
        vertices.append((i, j))
    return LatticePath(np.array(vertices) + np.array(p))


def brute_force_passage(
    field: WeightField, p: Vertex, q: Vertex
) -> tuple[float, LatticePath]:
    """
    Exhaustive enumeration of all up-right paths from p to q.

    Returns the maximal weight and the first path attaining it. Guarded to
    displacements of at most 8 per axis.
    """
    check_in_box(p, field.shape)
    check_in_box(q, field.shape)
    check_ordered(p, q)
    di, dj = q[0] - p[0], q[1] - p[1]
    limit = lattice_ns.MAX_BRUTE_FORCE_DISPLACEMENT
    if di > limit or dj > limit:
        raise DisplacementTooLarge(
            f"displacement ({di}, {dj}) exceeds {limit} per axis"
        )
    block = field.block(p[0], q[0], p[1], q[1])

    best_weight = -np.inf
    best_path = None
    for right_positions in combinations(range(di + dj), di):
        rights = set(right_positions)
        i, j = 0, 0
        weight = 0.0
        vertices = [(0, 0)]
        for k in range(di + dj):
            if k in rights:
                i += 1
            else:
                j += 1
            weight += block[i, j]
            vertices.append((i, j))
        if weight > best_weight:
            best_weight = weight
            best_path = vertices
    return float(best_weight), LatticePath(np.array(best_path) + np.array(p))
