"""
Explicit rays: the dual path down-left from the corner p - (1/2, 1/2)
joined with the geodesic of p. A ray splits every level of the box into a
left and a right part, and the left parts form the prefix of the curve that
ends at p.
"""
from dataclasses import dataclass

import numpy as np

from ..lattice import LatticePath, SuccessorForest
from ..namespaces import lattice_ns
from ..utils import check_in_box

Vertex = tuple[int, int]


@dataclass
class Ray:
    vertex: Vertex
    # dual vertices (a + 1/2, b + 1/2) stored as (a, b), from the corner downwards
    dual_path: np.ndarray
    chain: LatticePath

    def cells(self, shape: tuple[int, int]) -> np.ndarray:
        """Bitmap of the cells the ray passes through, points off the box dropped"""
        bitmap = np.zeros(shape, dtype=bool)
        bitmap[self.chain.vertices[:, 0], self.chain.vertices[:, 1]] = True
        a, b = self.dual_path[:, 0], self.dual_path[:, 1]
        inside = (a >= 0) & (a < shape[0]) & (b >= 0) & (b < shape[1])
        bitmap[a[inside], b[inside]] = True
        return bitmap


def _dual_path(forest: SuccessorForest, p: Vertex) -> np.ndarray:
    steps = forest.steps
    a, b = p[0] - 1, p[1] - 1
    path = []
    while a + b + 1 >= 0:
        path.append((a, b))
        if a < 0:
            b -= 1
        elif b < 0:
            a -= 1
        elif steps[a, b] == lattice_ns.DOWN:
            b -= 1
        else:
            a -= 1
    return np.array(path, dtype=np.int64).reshape(-1, 2)


def ray(forest: SuccessorForest, p: Vertex) -> Ray:
    check_in_box(p, forest.shape)
    p = (int(p[0]), int(p[1]))
    return Ray(vertex=p, dual_path=_dual_path(forest, p), chain=forest.chain(p))


def left_thresholds(forest: SuccessorForest, p: Vertex) -> np.ndarray:
    """
    Per level, the largest i of a vertex lying left of the ray of p.

    Below p the dual path separates level a + b + 1 between i = a and
    i = a + 1. At the level of p the vertex itself is left. Above p a chain
    vertex is left only when the chain entered it from below.
    """
    r = ray(forest, p)
    nx, ny = forest.shape
    level_p = p[0] + p[1]
    thresholds = np.empty(nx + ny - 1, dtype=np.int64)

    if len(r.dual_path):
        levels = r.dual_path.sum(axis=1) + 1
        thresholds[levels] = r.dual_path[:, 0]
    thresholds[level_p] = p[0]

    chain = r.chain.vertices
    if len(chain) > 1:
        entered_up = np.diff(chain, axis=0)[:, 1] == 1
        above = chain[1:]
        thresholds[level_p + 1 :] = np.where(entered_up, above[:, 0], above[:, 0] - 1)
    return thresholds


def ray_left_region(forest: SuccessorForest, p: Vertex) -> np.ndarray:
    """Bitmap of the vertices on or left of the ray of p"""
    thresholds = left_thresholds(forest, p)
    i, j = np.indices(forest.shape)
    return i <= thresholds[i + j]


def ray_precedes(forest: SuccessorForest, p: Vertex, q: Vertex) -> bool:
    """True when p lies strictly left of the ray of q"""
    check_in_box(p, forest.shape)
    if tuple(p) == tuple(q):
        return False
    thresholds = left_thresholds(forest, q)
    return bool(p[0] <= thresholds[p[0] + p[1]])
