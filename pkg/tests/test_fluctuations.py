import numpy as np
import pytest

from app.exceptions import InsufficientData, WindowViolation
from app.lattice import Seed, WeightField, passage_time
from app.stats import (
    corner_passage_samples,
    law_of_large_numbers,
    passage_fluctuation_profile,
    transversal_profile,
    transversal_sups,
)

STAIRCASE = np.array([(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)])


def test_transversal_sups_of_a_staircase():
    np.testing.assert_allclose(transversal_sups(STAIRCASE, [1, 2]), [1.0, 1.0])
    np.testing.assert_allclose(transversal_sups(STAIRCASE + 5, [1]), [1.0])
    with pytest.raises(WindowViolation):
        transversal_sups(STAIRCASE, [3])


def test_transversal_profile_of_growing_chains():
    # the chain leaves the diagonal linearly, so the slope is one
    chain = np.column_stack([np.arange(65), np.zeros(65, dtype=int)])
    profile = transversal_profile([chain, chain], [4, 8, 16, 32], [1.0])
    assert profile.fit.slope == pytest.approx(1.0)
    assert profile.tail.sample_count == 2
    with pytest.raises(InsufficientData):
        transversal_profile([], [4, 8, 16], [1.0])


def test_corner_passage_samples_match_direct_passage_times():
    seeds = [Seed(1, r) for r in range(3)]
    samples = corner_passage_samples(seeds, [4, 9])
    assert set(samples) == {4, 9}
    for seed, value in zip(seeds, samples[9]):
        field = WeightField(10, seed=seed)
        assert value == passage_time(field, (0, 0), (9, 9))


def test_fluctuations_need_two_replicates():
    samples = corner_passage_samples([Seed(0)], [4, 8, 16])
    with pytest.raises(InsufficientData):
        passage_fluctuation_profile(samples)
    with pytest.raises(InsufficientData):
        law_of_large_numbers({4: np.array([])}, 4)


@pytest.mark.STATISTICAL
def test_passage_time_per_step_approaches_four():
    samples = corner_passage_samples([Seed(2, r) for r in range(6)], [200])
    assert 3.6 < law_of_large_numbers(samples, 200) < 4.05
