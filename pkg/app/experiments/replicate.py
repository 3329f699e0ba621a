import logging
from dataclasses import dataclass
from functools import cached_property

from ..curve import (
    PeanoCurve,
    RescaledCurve,
    RescaledFrame,
    default_frame,
    peano_order,
    rescaled_curve,
)
from ..lattice import (
    DualForest,
    Seed,
    StorageMode,
    SuccessorForest,
    ValueGrid,
    WeightField,
    dual_successor_map,
    successor_map,
    value_grid,
)


@dataclass
class Replicate:
    """
    One replicate of the pipeline field -> grid -> forest -> dual -> curve.
    Later stages are built on first access.
    """

    field: WeightField
    frame: RescaledFrame

    @cached_property
    def grid(self) -> ValueGrid:
        return value_grid(self.field)

    @cached_property
    def forest(self) -> SuccessorForest:
        return successor_map(self.field, self.grid)

    @cached_property
    def dual(self) -> DualForest:
        return dual_successor_map(self.forest)

    @cached_property
    def curve(self) -> PeanoCurve:
        return peano_order(self.forest, origin=self.frame.origin)

    @cached_property
    def path(self) -> RescaledCurve:
        return rescaled_curve(self.frame, self.curve)


def build_replicate(
    box: int,
    seed: Seed,
    scale: float | None = None,
    storage_mode: StorageMode | str = StorageMode.MATERIALIZED,
) -> Replicate:
    logging.info(f"{seed.replicate} replicate -- seed: {seed.base}, box: {box}")
    field = WeightField(box, seed=seed, storage_mode=storage_mode)
    return Replicate(field=field, frame=default_frame(box, scale))
