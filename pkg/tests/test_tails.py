import numpy as np
import pytest

from app.exceptions import InsufficientData
from app.stats import tail_curve, volume_right_samples, vr_tail


def test_upper_and_lower_tails():
    samples = [0.1, 0.2, 0.2, 0.4]
    upper = tail_curve(samples, [0.2, 0.0, 0.5])
    assert upper.thresholds.tolist() == [0.0, 0.2, 0.5]
    assert upper.survival.tolist() == [1.0, 0.25, 0.0]
    lower = tail_curve(samples, [0.0, 0.2, 0.5], lower=True)
    assert lower.survival.tolist() == [0.0, 0.75, 1.0]
    assert lower.to_dict()["lower"] is True


def test_tail_curve_needs_samples():
    with pytest.raises(InsufficientData):
        tail_curve([], [1.0])


def test_vr_tail_is_a_monotone_probability():
    samples = np.random.default_rng(3).exponential(1.0, 500)
    tail = vr_tail(samples, [0.3, 0.01, 0.1, 0.03])
    assert tail.lower
    assert tail.sample_count == 500
    assert ((tail.survival >= 0) & (tail.survival <= 1)).all()
    assert (np.diff(tail.survival) >= 0).all()


def test_vr_tail_needs_a_hundred_samples():
    with pytest.raises(InsufficientData):
        vr_tail(np.ones(99), [0.1])


def test_volume_right_samples_of_the_corner(corner_forest):
    np.testing.assert_allclose(volume_right_samples(corner_forest, (0, 0), [1]), [4.0])


def test_volume_right_grows_with_time(small_forest):
    samples = volume_right_samples(small_forest, (2, 2), [1, 2, 4, 6])
    raw = samples * np.array([1, 2, 4, 6]) ** (5 / 3)
    assert (raw >= 1).all()
    assert (np.diff(raw) >= 0).all()
