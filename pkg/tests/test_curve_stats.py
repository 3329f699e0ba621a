from math import gamma

import numpy as np
import pytest

from app.exceptions import DomainError, InsufficientData, WindowViolation
from app.stats import (
    coordinate_tail,
    curve_scaling_profile,
    holder_modulus,
    reflection_symmetry_test,
    scaling_displacements,
    translation_invariance_test,
    two_sample_ks,
    variation_constant,
    variation_sum,
)

V_GRID = [2.0**-k for k in range(6, 0, -1)]


class PowerPath:
    """x = c sign(v)|v|^(2/5), t = c sign(v)|v|^(3/5) on [-volume, volume]"""

    def __init__(self, c: float = 1.0, volume: float = 1.0) -> None:
        self.c = c
        self.volume = volume

    def __call__(self, v):
        v = np.asarray(v, dtype=np.float64)
        return (
            self.c * np.sign(v) * np.abs(v) ** 0.4,
            self.c * np.sign(v) * np.abs(v) ** 0.6,
        )


class LinePath:
    """x = 0, t = c v"""

    def __init__(self, c: float = 1.0, volume: float = 1.0) -> None:
        self.c = c
        self.volume = volume

    def __call__(self, v):
        v = np.asarray(v, dtype=np.float64)
        return np.zeros_like(v), self.c * v


def test_scaling_slopes_of_a_power_path():
    paths = [PowerPath(c) for c in (0.5, 1.0, 2.0)]
    assert curve_scaling_profile(paths, V_GRID, "u").slope == pytest.approx(0.6)
    assert curve_scaling_profile(paths, V_GRID, "h").slope == pytest.approx(0.4)


def test_scaling_displacements_are_measured_from_zero():
    np.testing.assert_allclose(
        scaling_displacements(LinePath(3.0), [0.25, 0.5], "u"), [0.75, 1.5]
    )
    with pytest.raises(DomainError):
        scaling_displacements(LinePath(), [0.25], "z")


def test_constant_path_has_no_variation():
    def still(v):
        return np.zeros_like(v), np.zeros_like(v)

    sample = variation_sum(still, (0, 1), 500, 5.0, 1)
    assert sample.value == 0.0
    assert sample.point_count > 0


def test_variation_of_a_line_telescopes():
    sample = variation_sum(LinePath(), (0.0, 1.0), 2000, 3.0, [4, 2])
    # alpha = 3 gives |dt|, which sums to the span of the Poisson points
    assert 0.99 < sample.value <= 1.0
    assert sample.per_volume == sample.value


def test_alphas_share_the_poisson_points():
    counts = {
        alpha: variation_sum(PowerPath(), (-0.5, 0.5), 300, alpha, 9).point_count
        for alpha in (4.0, 5.0, 6.0)
    }
    assert len(set(counts.values())) == 1


def test_variation_sum_rejects_bad_arguments():
    with pytest.raises(InsufficientData):
        variation_sum(LinePath(), (1.0, 1.0), 10, 5.0, 0)
    with pytest.raises(DomainError):
        variation_sum(LinePath(), (0.0, 1.0), 0, 5.0, 0)


def test_variation_constant_averages_alpha_five():
    samples = [
        variation_sum(LinePath(), (0.0, 0.5), 100, alpha, 3)
        for alpha in (4.0, 5.0, 6.0)
    ]
    assert variation_constant(samples) == pytest.approx(samples[1].value / 0.5)
    with pytest.raises(InsufficientData):
        variation_constant(samples[:1])


@pytest.mark.STATISTICAL
def test_critical_variation_of_a_vertical_line():
    # exp(m) gaps give E gap^(5/3) = Gamma(8/3) m^(-5/3), about 0.015 in total
    expected = gamma(8 / 3) * 1000 ** (-2 / 3)
    values = [
        variation_sum(LinePath(), (0.0, 1.0), 1000, 5.0, seed).value
        for seed in range(20)
    ]
    assert np.mean(values) == pytest.approx(expected, rel=0.05)


def test_holder_modulus_of_a_line():
    deltas = [2.0**-k for k in range(8, 2, -1)]
    fit = holder_modulus(LinePath(volume=1.0), deltas, 2000, 0)
    # d_in of a line is |dt|^(1/3)
    assert fit.slope == pytest.approx(1 / 3, abs=0.01)


def test_holder_modulus_stays_in_the_window():
    with pytest.raises(WindowViolation):
        holder_modulus(LinePath(volume=0.25), [0.1, 0.2, 0.5], 10, 0)
    with pytest.raises(WindowViolation):
        holder_modulus(lambda v: (v, v), [0.1, 0.2, 0.3], 10, 0)


def test_symmetric_paths_pass_the_reflection_test():
    paths = [PowerPath(c) for c in (0.5, 1.0, 1.5, 2.0)]
    assert reflection_symmetry_test(paths) == 0.0


def test_lines_are_translation_invariant():
    paths = [LinePath(c) for c in (0.5, 1.0, 1.5, 2.0)]
    assert translation_invariance_test(paths, 0.25, 0.5) == 0.0


def test_power_paths_are_not_translation_invariant():
    paths = [PowerPath(c) for c in (0.5, 1.0, 1.5, 2.0)]
    assert translation_invariance_test(paths, 0.25, 0.5) > 0.0


def test_two_sample_ks():
    assert two_sample_ks([1.0, 2.0], [1.0, 2.0]) == 0.0
    assert two_sample_ks([0.0, 1.0], [5.0, 6.0]) == 1.0
    with pytest.raises(InsufficientData):
        two_sample_ks([1.0], [1.0, 2.0])


def test_coordinate_tail():
    paths = [LinePath(c) for c in (1.0, 2.0, 3.0, 4.0)]
    tail = coordinate_tail(paths, "u", [2.5, 0.5, 10.0])
    assert tail.thresholds.tolist() == [0.5, 2.5, 10.0]
    assert tail.survival.tolist() == [1.0, 0.5, 0.0]
    assert tail.sample_count == 4
