import logging
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..exceptions import DomainError, InvalidForest, OutOfBoxError
from ..namespaces import lattice_ns
from ..utils import check_in_box, check_shape
from .field import WeightField
from .kernels import coalescence_sweep, follow_chain
from .lpp import LatticePath, ValueGrid

Vertex = tuple[int, int]


class _PackedBits:
    """
    One bit per entry of a 2d array, packed little-endian into bytes.

    Only the packed bytes are kept. steps unpacks a fresh uint8 copy on every
    access, so callers that scan the bits bind it once.
    """

    def __init__(self, bits: np.ndarray) -> None:
        bits = np.asarray(bits)
        if bits.ndim != 2:
            raise InvalidForest(f"step bits must be 2d, got shape {bits.shape}")
        if bits.size and not np.isin(bits, (0, 1)).all():
            raise InvalidForest("step bits must be 0 or 1")
        self.shape: tuple[int, int] = (int(bits.shape[0]), int(bits.shape[1]))
        self._packed = np.packbits(bits.astype(np.uint8).ravel(), bitorder="little")

    @property
    def steps(self) -> np.ndarray:
        size = self.shape[0] * self.shape[1]
        bits = np.unpackbits(self._packed, count=size, bitorder="little")
        return bits.reshape(self.shape)

    @property
    def nbytes(self) -> int:
        return int(self._packed.nbytes)

    def step(self, v: Vertex) -> int:
        check_in_box(v, self.shape)
        index = int(v[0]) * self.shape[1] + int(v[1])
        return int(self._packed[index >> 3] >> (index & 7)) & 1


class SuccessorForest(_PackedBits):
    """
    Geodesic tree of the box [0, root]: one bit per vertex, 0 for a step
    right (e1) and 1 for a step up (e2). The root is the top-right vertex and
    its bit carries no meaning.

    Vertices on the top row must step right and vertices on the right column
    must step up, so every chain reaches the root.
    """

    def __init__(self, steps: np.ndarray) -> None:
        super().__init__(steps)
        nx, ny = self.shape
        if nx == 0 or ny == 0:
            raise InvalidForest("a forest needs at least one vertex")
        bits = self.steps
        if (bits[: nx - 1, ny - 1] != lattice_ns.RIGHT).any():
            raise InvalidForest("top row vertices must step right")
        if (bits[nx - 1, : ny - 1] != lattice_ns.UP).any():
            raise InvalidForest("right column vertices must step up")

    @property
    def root(self) -> Vertex:
        return (self.shape[0] - 1, self.shape[1] - 1)

    def successor(self, v: Vertex) -> Vertex:
        if v == self.root:
            raise DomainError("the root has no successor")
        if self.step(v) == lattice_ns.UP:
            return (v[0], v[1] + 1)
        return (v[0] + 1, v[1])

    def chain(self, p: Vertex) -> LatticePath:
        """Successor chain from p to the root, the discrete geodesic of p"""
        check_in_box(p, self.shape)
        return LatticePath(follow_chain(self.steps, int(p[0]), int(p[1])))


class DualForest(_PackedBits):
    """
    Interface tree on dual vertices (i + 1/2, j + 1/2), stored at index
    (i, j). Bit 0 steps left (-e1), bit 1 steps down (-e2). Dual steps leaving
    the box end on the boundary.
    """

    def dual_successor(self, c: Vertex) -> tuple[float, float]:
        """Dual vertex reached from cell c, as half-integer coordinates"""
        a, b = c
        if self.step(c) == lattice_ns.DOWN:
            return (a + 0.5, b - 0.5)
        return (a - 0.5, b + 0.5)


def successor_map(field: WeightField, grid: ValueGrid) -> SuccessorForest:
    """
    Argmax steps of the value grid, cropped to the rectangle [0, root].

    A vertex steps up when X[v + e2] + G(v + e2) >= X[v + e1] + G(v + e1),
    which is the comparison value_grid made, so ties go up in both places.
    Neighbours outside the rectangle count as -inf, which forces the top row
    right and the right column up. Weights are read two rows at a time.
    """
    check_shape(grid.values, field.shape, "value grid")
    ri, rj = grid.root
    steps = np.empty((ri + 1, rj + 1), dtype=np.uint8)
    rows = field.iter_rows(0, ri + 1)
    current = next(rows)[: rj + 1] + grid.values[0, : rj + 1]
    for i in range(ri + 1):
        if i < ri:
            following = next(rows)[: rj + 1] + grid.values[i + 1, : rj + 1]
        else:
            following = np.full(rj + 1, -np.inf)
        up = np.append(current[1:], -np.inf)
        steps[i] = up >= following
        current = following
    steps[ri, rj] = lattice_ns.RIGHT
    logging.debug(f"successor map built -- root: {grid.root}")
    return SuccessorForest(steps)


def dual_successor_map(forest: SuccessorForest) -> DualForest:
    """Dual cell (i, j) steps down iff succ(i, j) is up, else left"""
    return DualForest(forest.steps[:-1, :-1].copy())


def tree_edges(forest: SuccessorForest) -> tuple[np.ndarray, np.ndarray]:
    """
    Lattice edges used by the tree.

    Returns:
        horizontal : np.ndarray
            Shape (nx - 1, ny), True where edge (i, j) -> (i + 1, j) is used.
        vertical : np.ndarray
            Shape (nx, ny - 1), True where edge (i, j) -> (i, j + 1) is used.
    """
    steps = forest.steps
    horizontal = steps[:-1, :] == lattice_ns.RIGHT
    vertical = steps[:, :-1] == lattice_ns.UP
    return horizontal, vertical


def dual_crossed_edges(
    dual: DualForest, shape: tuple[int, int]
) -> tuple[np.ndarray, np.ndarray]:
    """Lattice edges crossed by dual steps, in the layout of tree_edges"""
    nx, ny = shape
    steps = dual.steps
    check_shape(steps, (max(nx - 1, 0), max(ny - 1, 0)), "dual forest")
    horizontal = np.zeros((nx - 1, ny), dtype=bool)
    vertical = np.zeros((nx, ny - 1), dtype=bool)
    # a down step from (a + 1/2, b + 1/2) crosses (a, b) -> (a + 1, b)
    horizontal[:, :-1] = steps == lattice_ns.DOWN
    # a left step crosses (a, b) -> (a, b + 1)
    vertical[:-1, :] = steps == lattice_ns.LEFT
    return horizontal, vertical


def check_duality(forest: SuccessorForest, dual: DualForest) -> int:
    """
    Number of lattice edges that are both used by the tree and crossed by a
    dual step, or neither. Zero when the two sets partition all edges.
    """
    tree_h, tree_v = tree_edges(forest)
    dual_h, dual_v = dual_crossed_edges(dual, forest.shape)
    return int(np.count_nonzero(tree_h == dual_h) + np.count_nonzero(tree_v == dual_v))


def is_spanning_tree(forest: SuccessorForest) -> bool:
    """Successor edges connect all vertices, with one edge per non-root vertex"""
    nx, ny = forest.shape
    size = nx * ny
    if size == 1:
        return True
    ids = np.arange(size).reshape(nx, ny)
    steps = forest.steps
    targets = np.where(steps == lattice_ns.UP, ids + 1, ids + ny)
    sources = np.delete(ids.ravel(), size - 1)
    targets = np.delete(targets.ravel(), size - 1)
    if (targets >= size).any():
        return False
    graph = coo_matrix(
        (np.ones(len(sources), dtype=np.int8), (sources, targets)), shape=(size, size)
    )
    count, _ = connected_components(graph, directed=False)
    return count == 1


def coalescence_point(forest: SuccessorForest, p: Vertex, q: Vertex) -> Vertex:
    """First common vertex of the successor chains of p and q"""
    check_in_box(p, forest.shape)
    check_in_box(q, forest.shape)
    p, q = (int(p[0]), int(p[1])), (int(q[0]), int(q[1]))
    while p != q:
        if sum(p) <= sum(q):
            p = forest.successor(p)
        else:
            q = forest.successor(q)
    return p


def busemann(grid: ValueGrid, p: Vertex, q: Vertex) -> float:
    """B(p, q) = G(p) - G(q), exact because geodesics share their suffix"""
    gp, gq = grid.value(p), grid.value(q)
    if not (np.isfinite(gp) and np.isfinite(gq)):
        raise OutOfBoxError(f"{p} or {q} cannot reach the root {grid.root}")
    return gp - gq


@dataclass
class CoalescenceGrid:
    """Level at which each vertex's chain first meets the chain of base"""

    base: Vertex
    levels: np.ndarray

    def level(self, v: Vertex) -> int:
        check_in_box(v, self.levels.shape)  # type: ignore
        return int(self.levels[v])


def coalescence_levels(forest: SuccessorForest, base: Vertex) -> CoalescenceGrid:
    check_in_box(base, forest.shape)
    levels = coalescence_sweep(forest.steps, int(base[0]), int(base[1]))
    return CoalescenceGrid(base=(int(base[0]), int(base[1])), levels=levels)


def volume_right(
    forest: SuccessorForest,
    cl: CoalescenceGrid,
    base: Vertex,
    horizon_level: int,
) -> int:
    """
    V_R of the geodesic of base up to a level.

    Counts vertices q with level(base) <= level(q) <= horizon_level that lie
    on or to the right of the chain of base at their level and whose own
    chain has joined it by horizon_level.

    Parameters:
        forest : SuccessorForest
            Geodesic tree.
        cl : CoalescenceGrid
            Coalescence levels computed for the same base.
        base : tuple
            Start vertex of the geodesic.
        horizon_level : int
            Last level counted, inclusive.

    Returns:
        int
            Number of vertices.
    """
    check_in_box(base, forest.shape)
    if tuple(cl.base) != tuple(base):
        raise DomainError(f"coalescence grid was built for {cl.base}, not {base}")
    start = base[0] + base[1]
    top = sum(forest.root)
    if horizon_level > top:
        raise OutOfBoxError(f"horizon {horizon_level} is beyond the root level {top}")
    if horizon_level < start:
        raise DomainError(f"horizon {horizon_level} is below the base level {start}")

    nx, ny = forest.shape
    chain = follow_chain(forest.steps, int(base[0]), int(base[1]))
    chain_i = np.full(nx + ny - 1, np.iinfo(np.int64).max, dtype=np.int64)
    chain_i[start : start + len(chain)] = chain[:, 0]

    i, j = np.indices(forest.shape)
    level = i + j
    inside = (level >= start) & (level <= horizon_level)
    mask = inside & (i >= chain_i[level]) & (cl.levels <= horizon_level)
    return int(np.count_nonzero(mask))
