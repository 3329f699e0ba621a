import numpy as np

from ..exceptions import DimensionMismatch, OrderingError, OutOfBoxError

Vertex = tuple[int, int]


def check_in_box(vertex: Vertex, shape: tuple[int, int]) -> None:
    i, j = vertex
    if not (0 <= i < shape[0] and 0 <= j < shape[1]):
        raise OutOfBoxError(f"vertex {vertex} is outside the box of shape {shape}")


def check_ordered(p: Vertex, q: Vertex) -> None:
    if p[0] > q[0] or p[1] > q[1]:
        raise OrderingError(f"{p} is not coordinatewise below {q}")


def check_shape(array: np.ndarray, shape: tuple[int, int], name: str) -> None:
    if array.shape != tuple(shape):
        raise DimensionMismatch(
            f"{name} has shape {array.shape}, expected {tuple(shape)}"
        )
