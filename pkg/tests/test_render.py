import numpy as np
import pytest

from app.curve import cell_area
from app.exceptions import WindowViolation
from app.experiments import RenderSpec, render_svg
from app.experiments.render import curve_points, dual_segments, tree_segments

WINDOW = (-0.5, 0.5, -0.2, 0.2)


def test_scene_counts(replicate, tmp_path):
    path = tmp_path / "scene.svg"
    counts = render_svg(RenderSpec(window=WINDOW), replicate, path)
    assert counts["tree_edges"] > 0
    assert counts["dual_edges"] > 0
    assert counts["curve_points"] == 0
    assert path.read_text().lstrip().startswith("<?xml")


def test_segments_are_unit_steps(replicate):
    spec = RenderSpec(window=WINDOW)
    frame = replicate.frame
    for segments in (tree_segments(spec, replicate), dual_segments(spec, replicate)):
        dx = (segments[:, 1, 0] - segments[:, 0, 0]) * frame.space_unit
        dt = (segments[:, 1, 1] - segments[:, 0, 1]) * frame.time_unit
        np.testing.assert_allclose(np.abs(dx), 1.0)
        np.testing.assert_allclose(np.abs(dt), 1.0)


def test_curve_segment_inside_the_trusted_volume(replicate, tmp_path):
    volume = min(0.001, replicate.path.volume)
    spec = RenderSpec(window=WINDOW, volume=(-volume, volume))
    points = curve_points(spec, replicate)
    if volume > 0:
        assert len(points) == 2 * round(volume / cell_area(replicate.frame)) + 1
    counts = render_svg(spec, replicate, tmp_path / "curve.svg")
    assert counts["curve_points"] == len(points)


def test_same_scene_gives_identical_bytes(replicate, tmp_path):
    spec = RenderSpec(window=WINDOW)
    first = render_svg(spec, replicate, tmp_path / "a.svg")
    second = render_svg(spec, replicate, tmp_path / "b.svg")
    assert first == second
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


@pytest.mark.parametrize(
    "window",
    [(0.5, -0.5, -0.2, 0.2), (-0.5, 0.5, 0.0, 5.0), (-9.0, 9.0, -0.2, 0.2)],
)
def test_windows_must_stay_trusted(replicate, tmp_path, window):
    with pytest.raises(WindowViolation):
        render_svg(RenderSpec(window=window), replicate, tmp_path / "bad.svg")
    assert not (tmp_path / "bad.svg").exists()
