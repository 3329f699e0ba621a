"""
Experiment registry.

Every experiment farms a module-level task over the replicate seeds with
map_replicates, aggregates the task results in replicate order and returns
a StatReport together with its CSV tables. save_results writes both under
the configured output folder.
"""
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from time import perf_counter
from typing import Optional

import numpy as np
import pandas as pd
from scipy import ndimage

from ..curve import (
    boundary_rays,
    default_frame,
    prefix_region,
    ray_left_region,
    rescale_arrays,
    rescaled_geodesic,
    trusted_volume,
    trusted_window_mask,
    write_curve_dump,
)
from ..curve.rescale import curve_volume_index
from ..exceptions import InsufficientData, WindowViolation
from ..lattice import (
    Seed,
    WeightField,
    brute_force_passage,
    busemann,
    check_duality,
    coalescence_point,
    geodesic_between,
    is_spanning_tree,
    passage_time,
    value_grid,
)
from ..namespaces import files_ns, lattice_ns
from ..stats import (
    PullbackTarget,
    StatReport,
    VariationSample,
    box_count_dimension,
    busemann_increment_test,
    busemann_increments,
    corner_passage_samples,
    fit_exponent,
    fit_scaling,
    holder_modulus,
    increment_statistics,
    intrinsic_box_dimension,
    law_of_large_numbers,
    passage_fluctuation_profile,
    pullback_indices,
    reflection_samples,
    scaling_displacements,
    tail_curve,
    target_points,
    translation_ks,
    translation_samples,
    transversal_profile,
    two_sample_ks,
    variation_constant,
    variation_sum,
    volume_right_samples,
    vr_tail,
)
from .config import ExperimentConfig
from .decorators import EXPERIMENT, ExperimentResult, save_results
from .metadata import ExperimentMetaData
from .pool import map_replicates
from .render import RenderSpec, render_svg
from .replicate import Replicate, build_replicate

Vertex = tuple[int, int]

EXACT_TOLERANCE = 1e-9
CONSISTENCY_PAIRS = 10
# boxes up to this side check every vertex and every prefix
EXHAUSTIVE_BOX = 8
ORACLE_COUNTS = (
    "passage_mismatches",
    "geodesic_mismatches",
    "order_mismatches",
    "duality_violations",
    "prefix_violations",
)
BENCH_STAGES = ("grid", "forest", "dual", "curve")


def _new_report(config: ExperimentConfig, meta: ExperimentMetaData) -> StatReport:
    return StatReport(
        estimator=config.experiment,
        n=config.box,
        replicates=config.replicates,
        seeds=[config.seed],
        params={"scale": config.n, **config.params},
        tolerances=dict(meta.tolerances),
    )


def _floats(config: ExperimentConfig, name: str) -> np.ndarray:
    return np.atleast_1d(np.asarray(config.param(name), dtype=np.float64))


def _ints(config: ExperimentConfig, name: str) -> np.ndarray:
    return np.atleast_1d(np.asarray(config.param(name), dtype=np.int64))


def _rng(seed: Seed, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed.base, seed.replicate, stream])


def _replicate(config: ExperimentConfig, seed: Seed) -> Replicate:
    return build_replicate(config.box, seed, config.scale, config.storage_mode)


def _mean(values) -> float:
    values = list(values)
    return math.fsum(values) / len(values) if values else float("nan")


def _enough(
    report: StatReport, meta: ExperimentMetaData, kept: int, total: int
) -> bool:
    """Fails the report when too few replicates stayed inside the window"""
    if kept < total:
        report.notes.append(f"{total - kept} replicates left the trusted window")
    if kept < meta.min_replicates:
        report.fail(
            f"insufficient replicates: {kept} usable, {meta.min_replicates} needed"
        )
        return False
    return True


# oracle


def _duality_violations(replicate: Replicate) -> int:
    spanning = is_spanning_tree(replicate.forest)
    return check_duality(replicate.forest, replicate.dual) + int(not spanning)


def _random_pair(rng: np.random.Generator, side: int) -> tuple[Vertex, Vertex]:
    reach = min(side - 1, lattice_ns.MAX_BRUTE_FORCE_DISPLACEMENT)
    di, dj = (int(d) for d in rng.integers(0, reach + 1, 2))
    p = (int(rng.integers(0, side - di)), int(rng.integers(0, side - dj)))
    return p, (p[0] + di, p[1] + dj)


def _oracle_task(config: ExperimentConfig, seed: Seed) -> dict[str, int]:
    replicate = _replicate(config, seed)
    field, grid, forest, curve = (
        replicate.field,
        replicate.grid,
        replicate.forest,
        replicate.curve,
    )
    side = config.box
    rng = _rng(seed)
    counts = dict.fromkeys(ORACLE_COUNTS, 0)

    pairs = [_random_pair(rng, side) for _ in range(int(config.param("pairs")))]
    if side - 1 <= lattice_ns.MAX_BRUTE_FORCE_DISPLACEMENT:
        pairs.append(((0, 0), forest.root))
    for p, q in pairs:
        exact, _ = brute_force_passage(field, p, q)
        dp = passage_time(field, p, q)
        swept = value_grid(field, q).value(p)
        if max(abs(dp - exact), abs(swept - exact)) > EXACT_TOLERANCE:
            counts["passage_mismatches"] += 1
        path = geodesic_between(field, p, q)
        if (
            path.start != p
            or path.end != q
            or abs(path.weight(field) - dp) > EXACT_TOLERANCE
        ):
            counts["geodesic_mismatches"] += 1
    chain = forest.chain((0, 0))
    if abs(chain.weight(field) - grid.value((0, 0))) > EXACT_TOLERANCE:
        counts["geodesic_mismatches"] += 1

    counts["duality_violations"] = _duality_violations(replicate)

    size = side * side
    if side <= EXHAUSTIVE_BOX:
        ids = np.arange(size)
    else:
        ids = rng.choice(size, int(config.param("pairs")), replace=False)
    for vertex_id in ids.tolist():
        p = divmod(vertex_id, side)
        if ray_left_region(forest, p).sum() - 1 != curve.inverse[vertex_id]:
            counts["order_mismatches"] += 1
        # the prefix ending at p, as a signed index
        k = int(curve.inverse[vertex_id]) - curve.origin_index
        _, components = ndimage.label(prefix_region(curve, k))
        if components != 1:
            counts["prefix_violations"] += 1
    return {**counts, "pairs": len(pairs), "vertices": len(ids)}


@save_results
def oracle(config: ExperimentConfig) -> ExperimentResult:
    """Exact checks of the DP, the geodesics, the duality and the curve order"""
    meta = ExperimentMetaData(config.experiment)
    rows = map_replicates(config, _oracle_task)
    table = pd.DataFrame(rows)
    table.insert(0, "replicate", range(len(rows)))

    report = _new_report(config, meta)
    report.values = {name: int(table[name].sum()) for name in ORACLE_COUNTS}
    report.values["checked_pairs"] = int(table["pairs"].sum())
    report.values["checked_vertices"] = int(table["vertices"].sum())
    return ExperimentResult(report.evaluate(meta.soft), {"replicates": table})


def _gen_task(config: ExperimentConfig, seed: Seed) -> dict:
    replicate = _replicate(config, seed)
    name = f"replicate_{seed.replicate}{files_ns.DUMP_EXT}"
    write_curve_dump(replicate.curve, Path(config.out, files_ns.DUMPS_FOLDER, name))
    return {
        "replicate": seed.replicate,
        "box": config.box,
        "passage": float(replicate.grid.values[0, 0]),
        "origin_index": replicate.curve.origin_index,
        "trusted_volume": trusted_volume(replicate.frame, replicate.curve),
        "duality_violations": _duality_violations(replicate),
        "forest_bytes": replicate.forest.nbytes,
    }


@save_results
def gen(config: ExperimentConfig) -> ExperimentResult:
    """Builds every replicate, dumps its curve and tabulates a summary"""
    meta = ExperimentMetaData(config.experiment)
    table = pd.DataFrame(map_replicates(config, _gen_task))
    report = _new_report(config, meta)
    report.values = {
        "duality_violations": int(table["duality_violations"].sum()),
        "mean_passage": _mean(table["passage"]),
    }
    return ExperimentResult(report.evaluate(meta.soft), {"summary": table})


# busemann


def _consistency_error(replicate: Replicate, rng: np.random.Generator) -> float:
    """
    Largest relative gap between B(p, q) = G(p) - G(q) and T(p, c) - T(q, c)
    over random trusted pairs, c being their coalescence point.
    """
    trusted = np.argwhere(trusted_window_mask(replicate.frame.side))
    worst = 0.0
    for _ in range(CONSISTENCY_PAIRS):
        a, b = trusted[rng.integers(0, len(trusted), 2)]
        p, q = (int(a[0]), int(a[1])), (int(b[0]), int(b[1]))
        c = coalescence_point(replicate.forest, p, q)
        direct = busemann(replicate.grid, p, q)
        field = replicate.field
        through = passage_time(field, p, c) - passage_time(field, q, c)
        scale = max(1.0, abs(replicate.grid.value(p)))
        worst = max(worst, abs(direct - through) / scale)
    return worst


def _busemann_task(config: ExperimentConfig, seed: Seed) -> tuple[np.ndarray, dict]:
    replicate = _replicate(config, seed)
    level, half_window = config.box, int(config.param("half_window"))
    increments = busemann_increments(replicate.grid, level, half_window)
    row = busemann_increment_test(replicate.frame, replicate.grid, level, half_window)
    error = _consistency_error(replicate, _rng(seed))
    values = {**row.values, "consistency_error": error}
    return increments, values


@save_results
def busemann_walk(config: ExperimentConfig) -> ExperimentResult:
    """Pooled Busemann increments on the middle anti-diagonal of every replicate"""
    meta = ExperimentMetaData(config.experiment)
    results = map_replicates(config, _busemann_task)
    increments = np.concatenate([increments for increments, _ in results])

    report = _new_report(config, meta)
    report.values = increment_statistics(increments)
    errors = [row["consistency_error"] for _, row in results]
    report.values["consistency_error"] = max(errors)
    table = pd.DataFrame([row for _, row in results])
    table.insert(0, "replicate", range(len(results)))
    return ExperimentResult(report.evaluate(meta.soft), {"replicates": table})


# exponents


@dataclass
class CurveSample:
    """Per-replicate measurements feeding the exponent fits"""

    u: np.ndarray
    h: np.ndarray
    reflection: tuple[float, float]
    translation: np.ndarray
    endpoint: tuple[float, float]
    holder: np.ndarray
    chain: np.ndarray
    geodesic_dimension: float
    boundary_dimension: float


def _boundary_dimension(
    replicate: Replicate, volume: float, scales: np.ndarray
) -> float:
    frame = replicate.frame
    if volume > replicate.path.volume:
        raise WindowViolation(
            f"boundary volume {volume} exceeds the window {replicate.path.volume:.4g}"
        )
    k1, k2 = (int(k) for k in curve_volume_index(frame, np.array([-volume, volume])))
    cells = boundary_rays(replicate.curve, k1, k2) & trusted_window_mask(frame.side)
    i, j = np.nonzero(cells)
    points = np.column_stack(rescale_arrays(frame, i, j))
    return box_count_dimension(points, scales).slope


def _curve_task(config: ExperimentConfig, seed: Seed) -> Optional[CurveSample]:
    replicate = _replicate(config, seed)
    frame, path = replicate.frame, replicate.path
    v_grid = _floats(config, "v_grid")
    scales = _floats(config, "box_scales")
    try:
        x, t = path(np.array([float(config.param("tail_volume"))]))
        geodesic = np.column_stack(rescaled_geodesic(frame, replicate.forest))
        return CurveSample(
            u=scaling_displacements(path, v_grid, "u"),
            h=scaling_displacements(path, v_grid, "h"),
            reflection=reflection_samples(
                path, float(config.param("reflection_volume"))
            ),
            translation=translation_samples(
                path,
                float(config.param("translation_shift")),
                float(config.param("translation_span")),
            ),
            endpoint=(abs(float(t[0])), abs(float(x[0]))),
            holder=holder_modulus(
                path,
                _floats(config, "delta_grid"),
                int(config.param("holder_pairs")),
                [seed.base, seed.replicate],
            ).means,
            chain=replicate.forest.chain(frame.origin).vertices,
            geodesic_dimension=box_count_dimension(geodesic, scales).slope,
            boundary_dimension=_boundary_dimension(
                replicate, float(config.param("boundary_volume")), scales
            ),
        )
    except WindowViolation as error:
        logging.warning(f"{seed.replicate} replicate skipped -- {error}")
        return None


def _passage_task(config: ExperimentConfig, seed: Seed) -> dict[int, np.ndarray]:
    return corner_passage_samples([seed], _ints(config, "passage_sizes"))


@save_results
def exponents(config: ExperimentConfig) -> ExperimentResult:
    """
    Scaling exponents: curve coordinates (3/5, 2/5), passage time law of
    large numbers and fluctuations (1/3), transversal fluctuations (2/3),
    intrinsic Hoelder modulus (1/5), fractal dimensions (4/3) and the
    translation and reflection symmetries.
    """
    meta = ExperimentMetaData(config.experiment)
    report = _new_report(config, meta)
    sizes = _ints(config, "passage_sizes")
    passages = map_replicates(config, _passage_task)
    samples = {int(m): np.concatenate([p[int(m)] for p in passages]) for m in sizes}
    fluctuation = passage_fluctuation_profile(samples)
    passage_table = pd.DataFrame(
        {
            "size": sizes,
            "mean": [_mean(samples[int(m)]) for m in sizes],
            "std": [float(np.std(samples[int(m)], ddof=1)) for m in sizes],
        }
    )

    curves = [s for s in map_replicates(config, _curve_task) if s is not None]
    tables = {"passage": passage_table}
    if not _enough(report, meta, len(curves), config.replicates):
        return ExperimentResult(report, tables)

    v_grid = _floats(config, "v_grid")
    fit_u = fit_scaling(v_grid, [s.u for s in curves])
    fit_h = fit_scaling(v_grid, [s.h for s in curves])
    deltas = np.sort(_floats(config, "delta_grid"))
    moduli = [_mean(column) for column in np.array([s.holder for s in curves]).T]
    holder = fit_exponent(zip(deltas, moduli))
    spans = _ints(config, "transversal_spans")
    transversal = transversal_profile(
        [s.chain for s in curves], spans, _floats(config, "tail_thresholds")
    )
    reflection = np.array([s.reflection for s in curves])

    report.slope, report.stderr = fit_u.slope, fit_u.stderr
    report.values = {
        "slope_u": fit_u.slope,
        "slope_h": fit_h.slope,
        "lln": law_of_large_numbers(samples, int(config.param("lln_size"))),
        "fluctuation_slope": fluctuation.slope,
        "transversal_slope": transversal.fit.slope,
        "holder_slope": holder.slope,
        "geodesic_dimension": _mean(s.geodesic_dimension for s in curves),
        "boundary_dimension": _mean(s.boundary_dimension for s in curves),
        "translation_ks": translation_ks([s.translation for s in curves]),
        "reflection_ks": two_sample_ks(reflection[:, 0], reflection[:, 1]),
        "usable_replicates": len(curves),
    }

    thresholds = _floats(config, "tail_thresholds")
    endpoints = np.array([s.endpoint for s in curves])
    tails = []
    for column, name in enumerate(("u", "h")):
        tail = tail_curve(endpoints[:, column], thresholds)
        tails += [
            {"coordinate": name, "threshold": x, "survival": p}
            for x, p in zip(tail.thresholds, tail.survival)
        ]
    tables.update(
        {
            "scaling": pd.DataFrame(
                {"v": v_grid, "mean_u": fit_u.means, "mean_h": fit_h.means}
            ),
            "holder": pd.DataFrame({"delta": deltas, "modulus": moduli}),
            "transversal": pd.DataFrame(
                {"span": spans, "mean_sup": transversal.fit.means}
            ),
            "transversal_tail": pd.DataFrame(
                {
                    "threshold": transversal.tail.thresholds,
                    "survival": transversal.tail.survival,
                }
            ),
            "coordinate_tail": pd.DataFrame(tails),
        }
    )
    return ExperimentResult(report.evaluate(meta.soft), tables)


# variation


def _variation_task(config: ExperimentConfig, seed: Seed) -> list[VariationSample]:
    replicate = _replicate(config, seed)
    interval = tuple(_floats(config, "interval")[:2])
    samples = []
    try:
        for r, rate in enumerate(_floats(config, "rates")):
            # one Poisson partition per rate, shared by every alpha
            for alpha in _floats(config, "alphas"):
                samples.append(
                    variation_sum(
                        replicate.path,
                        interval,
                        rate,
                        alpha,
                        [seed.base, seed.replicate, r],
                    )
                )
    except WindowViolation as error:
        logging.warning(f"{seed.replicate} replicate skipped -- {error}")
        return []
    return samples


@save_results
def variation(config: ExperimentConfig) -> ExperimentResult:
    """Sums of In^alpha over Poisson partitions for alpha 4, 5 and 6"""
    meta = ExperimentMetaData(config.experiment)
    report = _new_report(config, meta)
    results = map_replicates(config, _variation_task)
    kept = [samples for samples in results if samples]
    rows = [
        {
            "replicate": r,
            "alpha": s.alpha,
            "rate": s.rate,
            "value": s.value,
            "point_count": s.point_count,
        }
        for r, samples in enumerate(results)
        for s in samples
    ]
    table = pd.DataFrame(rows)
    if not _enough(report, meta, len(kept), config.replicates):
        return ExperimentResult(report, {"samples": table})

    means = table.groupby(["alpha", "rate"], sort=True)["value"].agg(_mean)
    rates = np.sort(_floats(config, "rates"))
    lo, hi = rates[0], rates[-1]

    constant = variation_constant([s for samples in kept for s in samples])
    a, b = _floats(config, "interval")[:2]
    critical = means.loc[5.0].to_numpy()
    ratios = critical / (constant * (b - a))
    report.values = {
        "constant": constant,
        "critical_spread": float(critical.max() / critical.min()),
        "constant_ratio": float(ratios[np.argmax(np.abs(np.log(ratios)))]),
    }
    if 4.0 in means.index:
        report.values["subcritical_growth"] = float(means[(4.0, hi)] / means[(4.0, lo)])
    if 6.0 in means.index:
        decay = means[(6.0, lo)] / means[(6.0, hi)]
        report.values["supercritical_decay"] = float(decay)
    summary = means.rename("mean").reset_index()
    tables = {"samples": table, "means": summary}
    return ExperimentResult(report.evaluate(meta.soft), tables)


# pullback


def _pullback_targets(config: ExperimentConfig) -> list[tuple[PullbackTarget, float]]:
    return [
        (PullbackTarget.HORIZONTAL, float(config.param("line_time"))),
        (PullbackTarget.VERTICAL, float(config.param("line_space"))),
        (PullbackTarget.GEODESIC, 0.0),
        (PullbackTarget.WINDOW, 0.0),
    ]


def _pullback_task(
    config: ExperimentConfig, seed: Seed
) -> Optional[dict[str, float]]:
    replicate = _replicate(config, seed)
    frame, curve, forest = replicate.frame, replicate.curve, replicate.forest
    volume = trusted_volume(frame, curve)
    scales = _floats(config, "scale_grid")
    intrinsic_scales = _floats(config, "intrinsic_scales")
    values = {}
    for target, value in _pullback_targets(config):
        try:
            v = pullback_indices(frame, curve, target, value, forest, volume)
        except InsufficientData as error:
            logging.warning(f"{seed.replicate} replicate skipped -- {error}")
            return None
        values[target.value] = box_count_dimension(v, scales).slope
        if target is not PullbackTarget.WINDOW:
            x, t = target_points(frame, target, value, forest)
            dimension = intrinsic_box_dimension(x, t, intrinsic_scales).slope
            values[f"intrinsic_{target.value}"] = dimension
    return values


@save_results
def pullback(config: ExperimentConfig) -> ExperimentResult:
    """Dimensions of the volumes at which the curve meets lines and the geodesic"""
    meta = ExperimentMetaData(config.experiment)
    rows = map_replicates(config, _pullback_task)
    report = _new_report(config, meta)
    kept = [row for row in rows if row is not None]
    if not _enough(report, meta, len(kept), config.replicates):
        return ExperimentResult(report)

    table = pd.DataFrame(kept)
    report.values = {name: _mean(table[name]) for name in table.columns}
    report.values["lower_bound_margin"] = min(
        report.values[target.value] - report.values[f"intrinsic_{target.value}"] / 5
        for target, _ in _pullback_targets(config)
        if target is not PullbackTarget.WINDOW
    )
    table.insert(0, "replicate", range(len(table)))
    return ExperimentResult(report.evaluate(meta.soft), {"replicates": table})


# volume right


def _vr_task(config: ExperimentConfig, seed: Seed) -> np.ndarray:
    replicate = _replicate(config, seed)
    return volume_right_samples(
        replicate.forest, replicate.frame.origin, _ints(config, "times")
    )


@save_results
def vr(config: ExperimentConfig) -> ExperimentResult:
    """Stabilization and lower tail of V_R(Gamma; m) / m^(5/3)"""
    meta = ExperimentMetaData(config.experiment)
    times = _ints(config, "times")
    samples = np.array(map_replicates(config, _vr_task)).reshape(-1, len(times))
    epsilons = _floats(config, "epsilon_grid")
    tails = [vr_tail(samples[:, k], epsilons) for k in range(len(times))]
    low, high = vr_tail(samples[:, -1], _floats(config, "tail_ratio_epsilons")).survival

    report = _new_report(config, meta)
    report.values = {
        "ks": two_sample_ks(samples[:, 0], samples[:, -1]),
        "tail_ratio": float(high / low) if low > 0 else float("inf"),
        "stabilization_gap": float(np.max(tails[-1].survival - tails[0].survival)),
    }
    tail_rows = [
        {"time": int(m), "epsilon": e, "probability": p}
        for m, tail in zip(times, tails)
        for e, p in zip(tail.thresholds, tail.survival)
    ]
    tables = {
        "samples": pd.DataFrame(samples, columns=[f"time_{m}" for m in times]),
        "tails": pd.DataFrame(tail_rows),
    }
    return ExperimentResult(report.evaluate(meta.soft), tables)


# render and bench


@save_results
def render(config: ExperimentConfig) -> ExperimentResult:
    """Scene of the first replicate as SVG"""
    meta = ExperimentMetaData(config.experiment)
    replicate = _replicate(config, Seed(config.seed, 0))
    spec = RenderSpec(
        window=tuple(_floats(config, "window")[:4]),
        volume=tuple(_floats(config, "volume")[:2]),
    )
    name = f"{config.experiment}{files_ns.SVG_EXT}"
    path = Path(config.out, files_ns.RENDERS_FOLDER, name)
    counts = render_svg(spec, replicate, path)
    report = _new_report(config, meta)
    report.values = dict(counts)
    return ExperimentResult(report.evaluate(meta.soft))


def _bench_size(config: ExperimentConfig, size: int) -> list[dict]:
    seed = Seed(config.seed, 0)
    start = perf_counter()
    field = WeightField(size, seed=seed, storage_mode=config.storage_mode)
    # an on-demand field draws its rows here and drops them again
    for _ in field.iter_rows():
        pass
    rows = [{"size": size, "stage": "field", "seconds": perf_counter() - start}]
    replicate = Replicate(field=field, frame=default_frame(size))
    for stage in BENCH_STAGES:
        start = perf_counter()
        getattr(replicate, stage)
        rows.append({"size": size, "stage": stage, "seconds": perf_counter() - start})
    total = sum(row["seconds"] for row in rows)
    logging.info(f"bench -- size: {size}, seconds: {total:.3f}")
    return rows


@save_results
def bench(config: ExperimentConfig) -> ExperimentResult:
    """
    Wall-clock seconds per pipeline stage and size. The first size includes
    the one-off kernel compilation. Timings are not reproducible.
    """
    meta = ExperimentMetaData(config.experiment)
    rows = [_bench_size(config, int(size)) for size in _ints(config, "sizes")]
    table = pd.DataFrame([row for size_rows in rows for row in size_rows])
    report = _new_report(config, meta)
    totals = table.groupby("size")["seconds"].sum()
    report.values = {f"seconds_{size}": float(s) for size, s in totals.items()}
    return ExperimentResult(report.evaluate(meta.soft), {"timings": table})


@save_results
def insufficient_replicates(config: ExperimentConfig) -> ExperimentResult:
    """Failed report for a run below the replicate minimum of its experiment"""
    meta = ExperimentMetaData(config.experiment)
    report = _new_report(config, meta).fail(
        f"insufficient replicates: {config.replicates} given, "
        f"{meta.min_replicates} needed"
    )
    return ExperimentResult(report)


EXPERIMENTS: dict[str, EXPERIMENT] = {
    "oracle": oracle,
    "busemann": busemann_walk,
    "exponents": exponents,
    "variation": variation,
    "pullback": pullback,
    "vr": vr,
    "render": render,
    "bench": bench,
    "gen": gen,
}
