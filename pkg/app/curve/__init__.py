from .dump import read_curve_dump, write_curve_dump
from .peano import (
    PeanoCurve,
    boundary_rays,
    curve_index,
    curve_lookup,
    peano_order,
    prefix_region,
    segment_region,
)
from .rays import Ray, ray, ray_left_region, ray_precedes
from .rescale import (
    RescaledCurve,
    RescaledFrame,
    RescaledPoint,
    cell_area,
    default_frame,
    intrinsic_distance,
    intrinsic_increment,
    rescale_arrays,
    rescaled_busemann,
    rescaled_curve,
    rescaled_curve_param,
    rescaled_geodesic,
    rescaled_passage,
    to_lattice,
    to_rescaled,
    trusted_volume,
    trusted_window_mask,
)
