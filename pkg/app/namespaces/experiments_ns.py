from argparse import Namespace

keys_ns = Namespace(
    DEFAULTS="DEFAULTS",
    TOLERANCES="TOLERANCES",
    SOFT="SOFT",
    MIN_REPLICATES="MIN_REPLICATES",
    MIN_BOX="MIN_BOX",
    MAX_BOX="MAX_BOX",
)

_THIRD = 1 / 3
_TWO_THIRDS = 2 / 3
_FOUR_THIRDS = 4 / 3

# tolerance bands are closed intervals (low, high) on the reported value
experiments_ns = Namespace(
    ORACLE={
        keys_ns.DEFAULTS: {"box": 7, "replicates": 1000, "pairs": 10},
        keys_ns.TOLERANCES: {
            "passage_mismatches": (0, 0),
            "geodesic_mismatches": (0, 0),
            "order_mismatches": (0, 0),
            "duality_violations": (0, 0),
            "prefix_violations": (0, 0),
        },
        keys_ns.MIN_REPLICATES: 1,
        keys_ns.MIN_BOX: 2,
        # ray regions are quadratic per checked vertex
        keys_ns.MAX_BOX: 256,
    },
    BUSEMANN={
        keys_ns.DEFAULTS: {"box": 2048, "replicates": 12, "half_window": 470},
        keys_ns.TOLERANCES: {
            "mean": (-0.1, 0.1),
            "variance": (7.2, 8.8),
            "ks": (0.0, 0.05),
            "consistency_error": (0.0, 1e-9),
        },
        keys_ns.MIN_REPLICATES: 1,
        keys_ns.MIN_BOX: 64,
    },
    EXPONENTS={
        keys_ns.DEFAULTS: {
            "box": 2048,
            "replicates": 50,
            "v_grid": [2.0**-k for k in range(10, -1, -1)],
            "delta_grid": [2.0**-k for k in range(12, 1, -1)],
            "passage_sizes": [250, 500, 1000, 2000],
            "transversal_spans": [16, 32, 64, 128, 256, 512],
            "box_scales": [2.0**-k for k in range(2, 8)],
            "holder_pairs": 100000,
            "lln_size": 1000,
            "reflection_volume": 1.0,
            "translation_shift": 0.5,
            "translation_span": 0.25,
            "boundary_volume": 0.25,
            "tail_volume": 1.0,
            "tail_thresholds": [0.25, 0.5, 1.0, 1.5, 2.0, 3.0],
        },
        keys_ns.TOLERANCES: {
            "slope_u": (0.55, 0.65),
            "slope_h": (0.35, 0.45),
            "lln": (3.9, 4.0),
            "fluctuation_slope": (_THIRD - 0.08, _THIRD + 0.08),
            "transversal_slope": (_TWO_THIRDS - 0.08, _TWO_THIRDS + 0.08),
            "holder_slope": (0.16, 0.22),
            "geodesic_dimension": (_FOUR_THIRDS - 0.15, _FOUR_THIRDS + 0.15),
            "boundary_dimension": (_FOUR_THIRDS - 0.15, _FOUR_THIRDS + 0.15),
            "translation_ks": (0.0, 0.08),
            "reflection_ks": (0.0, 0.08),
        },
        keys_ns.SOFT: ["geodesic_dimension", "boundary_dimension"],
        keys_ns.MIN_REPLICATES: 3,
        keys_ns.MIN_BOX: 64,
    },
    VARIATION={
        keys_ns.DEFAULTS: {
            "box": 2048,
            "replicates": 30,
            "interval": [0.0, 0.5],
            "rates": [100.0, 1000.0, 10000.0],
            "alphas": [4.0, 5.0, 6.0],
        },
        keys_ns.TOLERANCES: {
            "critical_spread": (1.0, 1.5),
            "constant_ratio": (1 / 1.5, 1.5),
            "subcritical_growth": (3.0, float("inf")),
            "supercritical_decay": (3.0, float("inf")),
        },
        keys_ns.MIN_REPLICATES: 3,
        keys_ns.MIN_BOX: 64,
    },
    PULLBACK={
        keys_ns.DEFAULTS: {
            "box": 2048,
            "replicates": 10,
            "line_time": 0.25,
            "line_space": 0.0,
            "scale_grid": [2.0**-k for k in range(4, 12)],
            "intrinsic_scales": [2.0**-k for k in range(1, 5)],
        },
        keys_ns.TOLERANCES: {
            "horizontal": (0.32, 0.48),
            "vertical": (0.52, 0.68),
            "geodesic": (0.0, 0.68),
            "lower_bound_margin": (-0.1, float("inf")),
        },
        keys_ns.MIN_REPLICATES: 1,
        keys_ns.MIN_BOX: 64,
    },
    VR={
        keys_ns.DEFAULTS: {
            "box": 2048,
            "replicates": 200,
            "times": [256, 512],
            "epsilon_grid": [0.01, 0.03, 0.1, 0.3],
            "tail_ratio_epsilons": [0.03, 0.3],
        },
        keys_ns.TOLERANCES: {
            "ks": (0.0, 0.1),
            "tail_ratio": (5.0, float("inf")),
            # later tail lies below the earlier one up to Monte Carlo noise
            "stabilization_gap": (float("-inf"), 0.05),
        },
        keys_ns.MIN_REPLICATES: 100,
        keys_ns.MIN_BOX: 64,
    },
    RENDER={
        keys_ns.DEFAULTS: {
            "box": 512,
            "replicates": 1,
            "window": [-0.5, 0.5, -0.2, 0.2],
            "volume": [-0.05, 0.05],
        },
        keys_ns.TOLERANCES: {},
        keys_ns.MIN_REPLICATES: 1,
        keys_ns.MIN_BOX: 16,
    },
    GEN={
        keys_ns.DEFAULTS: {"box": 256, "replicates": 1},
        keys_ns.TOLERANCES: {"duality_violations": (0, 0)},
        keys_ns.MIN_REPLICATES: 1,
        keys_ns.MIN_BOX: 2,
    },
    BENCH={
        keys_ns.DEFAULTS: {"box": 256, "replicates": 1, "sizes": [256, 512, 1024]},
        keys_ns.TOLERANCES: {},
        keys_ns.MIN_REPLICATES: 1,
        keys_ns.MIN_BOX: 16,
    },
)
