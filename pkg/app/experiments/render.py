import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from matplotlib import rc_context
from matplotlib.collections import LineCollection
from matplotlib.figure import Figure

from ..curve import RescaledPoint, rescale_arrays, to_lattice, trusted_window_mask
from ..curve.rescale import curve_volume_index
from ..exceptions import OutOfBoxError, WindowViolation
from ..namespaces import lattice_ns
from ..utils import PATH, create_directory
from .replicate import Replicate


SVG_SALT = "mated-trees"


@dataclass
class RenderSpec:
    """Scene window (x_min, x_max, t_min, t_max) and curve volume range"""

    window: tuple[float, float, float, float]
    volume: tuple[float, float] = (0.0, 0.0)
    tree_color: str = "blue"
    dual_color: str = "red"
    curve_color: str = "green"
    line_width: float = 0.3
    size_inches: tuple[float, float] = (8.0, 6.0)

    def check(self, replicate: Replicate) -> None:
        """The four window corners must map to trusted vertices"""
        x0, x1, t0, t1 = self.window
        if not (x0 < x1 and t0 < t1):
            raise WindowViolation(f"window {self.window} is empty")
        frame = replicate.frame
        trusted = trusted_window_mask(frame.side)
        for x in (x0, x1):
            for t in (t0, t1):
                try:
                    p = to_lattice(frame, RescaledPoint(x=x, t=t))
                except OutOfBoxError as error:
                    raise WindowViolation(
                        f"window corner ({x}, {t}) is outside the box"
                    ) from error
                if not trusted[p]:
                    raise WindowViolation(
                        f"window corner ({x}, {t}) is outside the trusted region"
                    )


def _inside(spec: RenderSpec, x: np.ndarray, t: np.ndarray) -> np.ndarray:
    x0, x1, t0, t1 = spec.window
    return (x >= x0) & (x <= x1) & (t >= t0) & (t <= t1)


def tree_segments(spec: RenderSpec, replicate: Replicate) -> np.ndarray:
    """Segments from each vertex in the window to its successor"""
    frame, steps = replicate.frame, replicate.forest.steps
    i, j = np.indices(steps.shape)
    x, t = rescale_arrays(frame, i, j)
    mask = _inside(spec, x, t)
    mask[replicate.forest.root] = False
    i, j = i[mask], j[mask]
    up = steps[i, j] == lattice_ns.UP
    ends = rescale_arrays(frame, np.where(up, i, i + 1), np.where(up, j + 1, j))
    return np.stack(
        [np.column_stack([x[mask], t[mask]]), np.column_stack(ends)], axis=1
    )


def dual_segments(spec: RenderSpec, replicate: Replicate) -> np.ndarray:
    """Segments from each dual vertex (a + 1/2, b + 1/2) in the window"""
    frame, steps = replicate.frame, replicate.dual.steps
    a, b = np.indices(steps.shape)
    x, t = rescale_arrays(frame, a + 0.5, b + 0.5)
    mask = _inside(spec, x, t)
    a, b = a[mask], b[mask]
    down = steps[a, b] == lattice_ns.DOWN
    ends = rescale_arrays(
        frame, np.where(down, a + 0.5, a - 0.5), np.where(down, b - 0.5, b + 0.5)
    )
    return np.stack(
        [np.column_stack([x[mask], t[mask]]), np.column_stack(ends)], axis=1
    )


def curve_points(spec: RenderSpec, replicate: Replicate) -> np.ndarray:
    """Curve vertices with volume in [v1, v2], in curve order"""
    v1, v2 = spec.volume
    if not v2 > v1:
        return np.empty((0, 2))
    k1, k2 = curve_volume_index(replicate.frame, np.array([v1, v2]))
    i, j = replicate.curve.lookup_many(np.arange(k1, k2 + 1))
    return np.column_stack(rescale_arrays(replicate.frame, i, j))


def render_svg(spec: RenderSpec, replicate: Replicate, path: PATH) -> dict[str, int]:
    """
    Draws the tree (blue), the dual tree (red) and the curve segment (green)
    in rescaled coordinates, x horizontal and t upwards.

    Returns:
        dict
            Number of drawn tree edges, dual edges and curve points.
    """
    spec.check(replicate)
    tree = tree_segments(spec, replicate)
    dual = dual_segments(spec, replicate)
    curve = curve_points(spec, replicate)

    path = Path(path)
    create_directory(path)
    width = spec.line_width
    with rc_context({"svg.hashsalt": SVG_SALT}):
        fig = Figure(figsize=spec.size_inches)
        ax = fig.subplots()
        for segments, color in ((tree, spec.tree_color), (dual, spec.dual_color)):
            ax.add_collection(LineCollection(segments, colors=color, linewidths=width))
        if len(curve):
            x, t = curve[:, 0], curve[:, 1]
            ax.plot(x, t, color=spec.curve_color, linewidth=2 * width)
        x0, x1, t0, t1 = spec.window
        ax.set_xlim(x0, x1)
        ax.set_ylim(t0, t1)
        ax.set_xlabel("x")
        ax.set_ylabel("t")
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
    logging.info(f"render saved -- {path}")
    return {
        "tree_edges": len(tree),
        "dual_edges": len(dual),
        "curve_points": len(curve),
    }
