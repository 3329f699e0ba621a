from .field import Seed, StorageMode, WeightField, exp_inverse_cdf
from .forest import (
    CoalescenceGrid,
    DualForest,
    SuccessorForest,
    busemann,
    check_duality,
    coalescence_levels,
    coalescence_point,
    dual_crossed_edges,
    dual_successor_map,
    is_spanning_tree,
    successor_map,
    tree_edges,
    volume_right,
)
from .lpp import (
    LatticePath,
    ValueGrid,
    brute_force_passage,
    geodesic_between,
    passage_time,
    value_grid,
)
