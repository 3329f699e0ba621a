from .aggregate import aggregate_reports, load_report, write_summary
from .cli import build_parser, main
from .config import ExperimentConfig, load_config, parse_value
from .decorators import ExperimentResult, report_path, save_results
from .metadata import ExperimentMetaData
from .pool import map_replicates, replicate_seeds
from .registry import EXPERIMENTS
from .render import RenderSpec, render_svg
from .replicate import Replicate, build_replicate
from .runner import run_experiment
