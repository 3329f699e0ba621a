from .busemann import busemann_increment_test, busemann_increments, increment_statistics
from .curve_stats import (
    VariationSample,
    coordinate_tail,
    curve_scaling_profile,
    fit_scaling,
    holder_modulus,
    reflection_samples,
    reflection_symmetry_test,
    scaling_displacements,
    translation_invariance_test,
    translation_ks,
    translation_samples,
    two_sample_ks,
    variation_constant,
    variation_increment,
    variation_sum,
)
from .dimensions import (
    PullbackTarget,
    box_count_dimension,
    intrinsic_box_dimension,
    pullback_indices,
    target_mask,
    target_points,
)
from .fitting import ExponentFit, fit_exponent
from .fluctuations import (
    TransversalProfile,
    corner_passage_samples,
    law_of_large_numbers,
    passage_fluctuation_profile,
    transversal_profile,
    transversal_sups,
)
from .report import StatReport, check_bands
from .tails import TailCurve, tail_curve, volume_right_samples, vr_tail
