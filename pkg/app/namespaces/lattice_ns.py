from argparse import Namespace

lattice_ns = Namespace(
    RIGHT=0,
    UP=1,
    LEFT=0,
    DOWN=1,
    MAX_BRUTE_FORCE_DISPLACEMENT=8,
    TRUSTED_TRANSVERSAL_POWER=0.9,
    STORAGE_MATERIALIZED="materialized",
    STORAGE_ON_DEMAND="on-demand",
    # bytes per vertex held by one replicate: float64 weights (materialized
    # only) and values, unpacked successor bytes, int64 curve order and inverse
    WEIGHT_BYTES=8,
    VALUE_BYTES=8,
    STEP_BYTES=1,
    CURVE_BYTES=16,
)
