import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

import numpy as np

from ..exceptions import DomainError, OutOfBoxError
from ..namespaces import lattice_ns

UINT64_LIMIT = 2**64
# Philox4x64 emits four 64-bit words per counter value
PHILOX_BLOCK = 4
UNIFORM_SCALE = 2.0**-53

REAL = Union[float, np.ndarray]


class StorageMode(str, Enum):
    MATERIALIZED = lattice_ns.STORAGE_MATERIALIZED
    ON_DEMAND = lattice_ns.STORAGE_ON_DEMAND


@dataclass(frozen=True)
class Seed:
    """Reproducibility key of one weight field: a base seed and a replicate id"""

    base: int
    replicate: int = 0

    def __post_init__(self) -> None:
        for name in ("base", "replicate"):
            value = getattr(self, name)
            if not 0 <= value < UINT64_LIMIT:
                raise DomainError(f"{name} must be a 64-bit unsigned integer")

    @property
    def key(self) -> int:
        """128-bit Philox key, replicate in the high word"""
        return self.base | (self.replicate << 64)


def exp_inverse_cdf(u: REAL) -> REAL:
    """
    Inverse CDF of the exp(1) law.

    Parameters:
        u : float or np.ndarray
            Uniform draw(s) in [0, 1).

    Returns:
        float or np.ndarray
            -ln(1 - u), computed with log1p so that u = 0 maps to 0.

    Raises:
        DomainError
            When any u lies outside [0, 1).
    """
    arr = np.asarray(u, dtype=np.float64)
    if not np.all((arr >= 0.0) & (arr < 1.0)):
        raise DomainError("uniform draws must lie in [0, 1)")
    out = -np.log1p(-arr)
    if out.ndim == 0:
        return float(out)
    return out


def uniforms_from_raw(raw: np.ndarray) -> np.ndarray:
    """Top 53 bits of each raw word scaled to [0, 1)"""
    return (raw >> np.uint64(11)).astype(np.float64) * UNIFORM_SCALE


class WeightField:
    """
    Field of i.i.d. exp(1) weights on a side x side box of vertices.

    Cell (i, j) is draw number i * side + j of a Philox4x64 stream keyed by
    the seed, so any cell or row can be produced without the rest of the
    field. In materialized mode the whole field is kept in memory, in
    on-demand mode rows are regenerated on access. Both modes produce the
    same values.
    """

    def __init__(
        self,
        side: int,
        seed: Optional[Seed] = None,
        storage_mode: StorageMode | str = StorageMode.MATERIALIZED,
    ) -> None:
        """
        Parameters:
            side : int
                Number of vertices per axis, at least 2.
            seed : Seed, optional
                Field seed. Defaults to Seed(0).
            storage_mode : StorageMode or str, optional
                "materialized" (default) or "on-demand".
        """
        if side < 2:
            raise DomainError(f"side must be at least 2, got {side}")
        self.side = int(side)
        self.seed = seed if seed is not None else Seed(0)
        self.storage_mode = StorageMode(storage_mode)
        self._weights: Optional[np.ndarray] = None
        if self.storage_mode is StorageMode.MATERIALIZED:
            self._weights = self._materialize()

    @classmethod
    def from_array(cls, weights: np.ndarray) -> "WeightField":
        """Builds a materialized field from explicit weights (tests, oracles)"""
        arr = np.array(weights, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 2:
            raise DomainError(f"weights must be a square array, got {arr.shape}")
        field = cls.__new__(cls)
        field.side = arr.shape[0]
        field.seed = None
        field.storage_mode = StorageMode.MATERIALIZED
        field._weights = arr
        return field

    @property
    def shape(self) -> tuple[int, int]:
        return (self.side, self.side)

    def contains(self, i: int, j: int) -> bool:
        return 0 <= i < self.side and 0 <= j < self.side

    def weight(self, i: int, j: int) -> float:
        if not self.contains(i, j):
            raise OutOfBoxError(f"({i}, {j}) is outside the {self.side}-box")
        if self._weights is not None:
            return float(self._weights[i, j])
        return float(self._draw(i * self.side + j, 1)[0])

    def row(self, i: int) -> np.ndarray:
        if not 0 <= i < self.side:
            raise OutOfBoxError(f"row {i} is outside the {self.side}-box")
        if self._weights is not None:
            return self._weights[i].copy()
        return self._draw(i * self.side, self.side)

    def iter_rows(
        self, start: int = 0, stop: Optional[int] = None
    ) -> Iterator[np.ndarray]:
        """Streams rows in counter order without keeping the field"""
        stop = self.side if stop is None else stop
        for i in range(start, stop):
            yield self.row(i)

    def block(self, i0: int, i1: int, j0: int, j1: int) -> np.ndarray:
        """Weights of the rectangle [i0, i1] x [j0, j1], bounds inclusive"""
        if not (self.contains(i0, j0) and self.contains(i1, j1)):
            raise OutOfBoxError(
                f"block [{i0}, {i1}] x [{j0}, {j1}] leaves the {self.side}-box"
            )
        if self._weights is not None:
            return self._weights[i0 : i1 + 1, j0 : j1 + 1].copy()
        rows = [self._draw(i * self.side + j0, j1 - j0 + 1) for i in range(i0, i1 + 1)]
        return np.stack(rows)

    def diagonal(self, level: int) -> np.ndarray:
        """Weights along the anti-diagonal i + j = level, ordered by i"""
        lo = max(0, level - (self.side - 1))
        hi = min(self.side - 1, level)
        if lo > hi:
            raise OutOfBoxError(f"level {level} does not meet the {self.side}-box")
        i = np.arange(lo, hi + 1)
        if self._weights is not None:
            return self._weights[i, level - i].copy()
        cells = i * self.side + (level - i)
        return np.concatenate([self._draw(int(cell), 1) for cell in cells])

    def to_array(self) -> np.ndarray:
        if self._weights is not None:
            return self._weights
        return self._materialize()

    def _materialize(self) -> np.ndarray:
        logging.debug(f"generating {self.side}-box weights -- seed: {self.seed}")
        rows = [self._draw(i * self.side, self.side) for i in range(self.side)]
        return np.stack(rows)

    def _draw(self, start: int, count: int) -> np.ndarray:
        """Weights of cells start, ..., start + count - 1 in counter order"""
        block, offset = divmod(start, PHILOX_BLOCK)
        generator = np.random.Philox(key=self.seed.key, counter=block)
        raw = generator.random_raw(offset + count)[offset:]
        return exp_inverse_cdf(uniforms_from_raw(raw))
