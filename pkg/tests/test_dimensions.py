import numpy as np
import pytest

from app.curve import default_frame, peano_order
from app.exceptions import DegenerateScales, InsufficientData
from app.stats import (
    PullbackTarget,
    box_count_dimension,
    intrinsic_box_dimension,
    pullback_indices,
    target_mask,
    target_points,
)

SCALES = [2.0**-k for k in range(2, 6)]


def test_filled_square_has_dimension_two():
    i, j = np.indices((256, 256))
    points = np.column_stack([i.ravel(), j.ravel()]) / 256
    assert box_count_dimension(points, SCALES).slope == pytest.approx(2.0)


def test_segment_has_dimension_one():
    points = np.arange(256) / 256
    assert box_count_dimension(points, SCALES).slope == pytest.approx(1.0)


def test_vertical_segment_has_intrinsic_dimension_three():
    t = np.arange(4096) / 4096
    fit = intrinsic_box_dimension(np.zeros_like(t), t, [2.0**-k for k in range(1, 5)])
    assert fit.slope == pytest.approx(3.0)


def test_horizontal_segment_has_intrinsic_dimension_two():
    x = np.arange(4096) / 4096
    fit = intrinsic_box_dimension(x, np.zeros_like(x), [2.0**-k for k in range(1, 5)])
    assert fit.slope == pytest.approx(2.0)


@pytest.mark.parametrize("scales", [[0.5, 0.25], [0.5, 0.5, 0.25], [0.5, 0.0, 0.25]])
def test_bad_scale_grids_are_degenerate(scales):
    with pytest.raises(DegenerateScales):
        box_count_dimension(np.zeros((4, 2)), scales)


def test_box_counting_needs_points():
    with pytest.raises(InsufficientData):
        box_count_dimension(np.zeros((0, 2)), SCALES)


def test_target_masks(small_forest):
    frame = default_frame(16)
    horizontal = target_mask(frame, PullbackTarget.HORIZONTAL)
    i, j = np.nonzero(horizontal)
    assert ((i + j) == 8).all() and len(i) == 9
    vertical = target_mask(frame, "vertical")
    i, j = np.nonzero(vertical)
    assert ((i - j == 0) | (i - j == -1)).all()
    geodesic = target_mask(frame, PullbackTarget.GEODESIC, forest=small_forest)
    assert geodesic.sum() == len(small_forest.chain(frame.origin))
    assert target_mask(frame, PullbackTarget.WINDOW).all()
    with pytest.raises(InsufficientData):
        target_mask(frame, PullbackTarget.GEODESIC)


def test_pullback_of_the_window_covers_the_volume(small_forest):
    frame = default_frame(16)
    curve = peano_order(small_forest, origin=frame.origin)
    v = pullback_indices(frame, curve, PullbackTarget.WINDOW, volume=0.05)
    assert (np.diff(v) > 0).all()
    assert 0.0 in v
    assert np.abs(v).max() <= 0.05


def test_pullback_of_the_geodesic_contains_the_origin(small_forest):
    frame = default_frame(16)
    curve = peano_order(small_forest, origin=frame.origin)
    v = pullback_indices(frame, curve, PullbackTarget.GEODESIC, volume=1.0)
    assert 0.0 in v


def test_target_points_of_the_horizontal_line():
    x, t = target_points(default_frame(16), PullbackTarget.HORIZONTAL, value=0.25)
    np.testing.assert_allclose(t, 0.25)
    assert len(x) > 0
