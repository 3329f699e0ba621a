import numpy as np
import pytest

from app.exceptions import DomainError, InvalidForest, OutOfBoxError
from app.lattice import (
    DualForest,
    Seed,
    StorageMode,
    SuccessorForest,
    WeightField,
    busemann,
    check_duality,
    coalescence_levels,
    coalescence_point,
    dual_successor_map,
    is_spanning_tree,
    passage_time,
    successor_map,
    tree_edges,
    value_grid,
    volume_right,
)
from app.namespaces import lattice_ns


def test_corner_forest_steps(corner_forest):
    assert corner_forest.root == (1, 1)
    assert corner_forest.successor((0, 0)) == (0, 1)
    assert corner_forest.successor((0, 1)) == (1, 1)
    assert corner_forest.successor((1, 0)) == (1, 1)
    with pytest.raises(DomainError):
        corner_forest.successor((1, 1))


def test_corner_dual_steps_down(corner_forest):
    dual = dual_successor_map(corner_forest)
    assert dual.shape == (1, 1)
    assert dual.step((0, 0)) == lattice_ns.DOWN
    assert dual.dual_successor((0, 0)) == (0.5, -0.5)
    assert check_duality(corner_forest, dual) == 0


def test_corner_coalescence_and_busemann(corner_field, corner_forest):
    grid = value_grid(corner_field)
    assert coalescence_point(corner_forest, (0, 0), (1, 0)) == (1, 1)
    assert coalescence_point(corner_forest, (0, 0), (0, 1)) == (0, 1)
    assert busemann(grid, (0, 0), (1, 0)) == 2.0
    cl = coalescence_levels(corner_forest, (0, 0))
    assert cl.level((1, 0)) == 2
    assert cl.level((0, 1)) == 1
    assert cl.level((0, 0)) == 0


def test_corner_volume_right(corner_forest):
    cl = coalescence_levels(corner_forest, (0, 0))
    assert volume_right(corner_forest, cl, (0, 0), 2) == 4
    assert volume_right(corner_forest, cl, (0, 0), 0) == 1
    with pytest.raises(OutOfBoxError):
        volume_right(corner_forest, cl, (0, 0), 3)
    with pytest.raises(DomainError):
        volume_right(corner_forest, cl, (1, 0), 2)


def test_chains_follow_the_value_grid(small_field, small_forest):
    grid = value_grid(small_field)
    for p in [(0, 0), (3, 9), (15, 0), (7, 7)]:
        chain = small_forest.chain(p)
        assert chain.end == small_forest.root
        assert chain.weight(small_field) == pytest.approx(grid.value(p), abs=1e-9)


def test_random_forests_are_spanning_and_dual(small_forest, small_dual):
    assert is_spanning_tree(small_forest)
    assert check_duality(small_forest, small_dual) == 0
    horizontal, vertical = tree_edges(small_forest)
    # one outgoing edge per non-root vertex
    assert horizontal.sum() + vertical.sum() == 16 * 16 - 1


@pytest.mark.parametrize("seed", range(10))
def test_duality_holds_for_inner_roots(seed):
    field = WeightField(12, seed=Seed(seed, 2))
    forest = successor_map(field, value_grid(field, root=(8, 5)))
    assert forest.shape == (9, 6)
    assert is_spanning_tree(forest)
    assert check_duality(forest, dual_successor_map(forest)) == 0


def test_flipped_dual_bit_breaks_duality(small_forest):
    bits = small_forest.steps[:-1, :-1].copy()
    bits[4, 4] ^= 1
    assert check_duality(small_forest, DualForest(bits)) == 2


def test_geodesics_coalesce_at_their_first_common_vertex(small_forest):
    p, q = (0, 5), (5, 0)
    meet = coalescence_point(small_forest, p, q)
    chain_p = list(small_forest.chain(p))
    chain_q = list(small_forest.chain(q))
    assert meet in chain_p and meet in chain_q
    assert chain_p[chain_p.index(meet) :] == chain_q[chain_q.index(meet) :]
    assert chain_p[chain_p.index(meet) - 1] not in chain_q


def test_busemann_is_additive(small_field):
    grid = value_grid(small_field)
    p, q, r = (0, 0), (4, 6), (10, 3)
    total = busemann(grid, p, q) + busemann(grid, q, r)
    assert busemann(grid, p, r) == pytest.approx(total, abs=1e-9)


def test_busemann_needs_reachable_vertices(small_field):
    grid = value_grid(small_field, root=(5, 5))
    with pytest.raises(OutOfBoxError):
        busemann(grid, (0, 0), (9, 9))


def test_invalid_forests_are_rejected():
    with pytest.raises(InvalidForest):
        SuccessorForest(np.ones((2, 2), dtype=np.uint8))
    with pytest.raises(InvalidForest):
        SuccessorForest(np.zeros((2, 2), dtype=np.uint8))
    with pytest.raises(InvalidForest):
        SuccessorForest(np.full((2, 2), 2, dtype=np.uint8))
    with pytest.raises(InvalidForest):
        SuccessorForest(np.zeros((0, 3), dtype=np.uint8))


def test_forest_packs_one_bit_per_vertex(small_forest):
    assert small_forest.nbytes == 16 * 16 // 8


def test_on_demand_fields_are_streamed_row_by_row(monkeypatch):
    materialized = WeightField(64, seed=Seed(3))
    on_demand = WeightField(64, seed=Seed(3), storage_mode=StorageMode.ON_DEMAND)
    expected_grid = value_grid(materialized)
    expected_forest = successor_map(materialized, expected_grid)

    def refuse(self):
        raise AssertionError("on-demand weights were materialized")

    monkeypatch.setattr(WeightField, "_materialize", refuse)
    grid = value_grid(on_demand)
    forest = successor_map(on_demand, grid)
    np.testing.assert_array_equal(grid.values, expected_grid.values)
    np.testing.assert_array_equal(forest.steps, expected_forest.steps)


def test_single_bits_read_from_the_packed_bytes(small_forest):
    steps = small_forest.steps
    for v in [(0, 0), (0, 7), (3, 9), (7, 15), (15, 2), (14, 14)]:
        assert small_forest.step(v) == steps[v]


@pytest.mark.parametrize("base", [(0, 0), (3, 7), (10, 2)])
def test_coalescence_levels_match_pairwise_coalescence(small_forest, base):
    cl = coalescence_levels(small_forest, base)
    for q in np.ndindex(small_forest.shape):
        assert cl.level(q) == sum(coalescence_point(small_forest, base, q))


def _volume_right_by_enumeration(forest, base, horizon):
    chain_i = {i + j: i for i, j in forest.chain(base)}
    start = sum(base)
    count = 0
    for q in np.ndindex(forest.shape):
        level = sum(q)
        if not start <= level <= horizon:
            continue
        joined = sum(coalescence_point(forest, base, q)) <= horizon
        if q[0] >= chain_i[level] and joined:
            count += 1
    return count


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("base", [(0, 0), (2, 5)])
def test_volume_right_matches_enumeration(seed, base):
    field = WeightField(12, seed=Seed(seed, 5))
    forest = successor_map(field, value_grid(field))
    cl = coalescence_levels(forest, base)
    for horizon in range(sum(base), sum(forest.root) + 1, 3):
        expected = _volume_right_by_enumeration(forest, base, horizon)
        assert volume_right(forest, cl, base, horizon) == expected


def test_busemann_matches_passage_times_to_the_coalescence_point(
    small_field, small_forest
):
    grid = value_grid(small_field)
    for p, q in [((0, 0), (5, 0)), ((2, 9), (8, 1)), ((0, 12), (12, 0))]:
        c = coalescence_point(small_forest, p, q)
        through_c = passage_time(small_field, p, c) - passage_time(small_field, q, c)
        assert busemann(grid, p, q) == pytest.approx(through_c, abs=1e-9)
