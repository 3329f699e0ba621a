import numpy as np

from app.curve import curve_index, peano_order, ray, ray_left_region, ray_precedes


def test_left_region_is_the_curve_prefix(small_forest):
    curve = peano_order(small_forest)
    nx, ny = small_forest.shape
    for i in range(nx):
        for j in range(ny):
            region = ray_left_region(small_forest, (i, j))
            assert region.sum() - 1 == curve.inverse[i * ny + j]
            np.testing.assert_array_equal(
                region.ravel(), curve.inverse <= curve.inverse[i * ny + j]
            )


def test_ray_order_matches_curve_order(small_forest):
    curve = peano_order(small_forest)
    rng = np.random.default_rng(4)
    for _ in range(200):
        p = tuple(int(c) for c in rng.integers(0, 16, 2))
        q = tuple(int(c) for c in rng.integers(0, 16, 2))
        expected = curve_index(curve, p) < curve_index(curve, q)
        assert ray_precedes(small_forest, p, q) == expected


def test_ray_of_the_corner_vertex(corner_forest):
    r = ray(corner_forest, (1, 1))
    assert r.dual_path.tolist() == [[0, 0], [0, -1]]
    assert list(r.chain) == [(1, 1)]
    np.testing.assert_array_equal(r.cells((2, 2)), [[True, False], [False, True]])


def test_ray_of_the_bottom_left_vertex_has_no_dual_path(corner_forest):
    r = ray(corner_forest, (0, 0))
    assert r.dual_path.tolist() == []
    assert list(r.chain) == [(0, 0), (0, 1), (1, 1)]


def test_ray_cells_drop_dual_points_off_the_box(small_forest):
    for p in [(8, 8), (3, 12), (12, 3), (15, 15), (1, 1)]:
        r = ray(small_forest, p)
        a, b = r.dual_path[:, 0], r.dual_path[:, 1]
        assert ((a < 0) | (b < 0)).any()
        visited = {tuple(v) for v in r.chain.vertices.tolist()}
        visited |= {(x, y) for x, y in r.dual_path.tolist() if x >= 0 and y >= 0}
        marked = {tuple(c) for c in np.argwhere(r.cells(small_forest.shape)).tolist()}
        assert marked == visited
