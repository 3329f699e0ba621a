import numpy as np
import pytest

from app.experiments import build_replicate
from app.lattice import (
    Seed,
    WeightField,
    dual_successor_map,
    successor_map,
    value_grid,
)


@pytest.fixture
def corner_field() -> WeightField:
    """2x2 box with X(0,0)=0.5, X(0,1)=2, X(1,0)=1, X(1,1)=3"""
    return WeightField.from_array(np.array([[0.5, 2.0], [1.0, 3.0]]))


@pytest.fixture
def corner_forest(corner_field):
    return successor_map(corner_field, value_grid(corner_field))


@pytest.fixture
def small_field() -> WeightField:
    return WeightField(16, seed=Seed(7))


@pytest.fixture
def small_forest(small_field):
    return successor_map(small_field, value_grid(small_field))


@pytest.fixture
def small_dual(small_forest):
    return dual_successor_map(small_forest)


@pytest.fixture(scope="module")
def replicate():
    """A built 128-box replicate, shared by the tests of a module"""
    return build_replicate(128, Seed(11, 0))
