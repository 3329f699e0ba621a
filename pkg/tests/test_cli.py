import pytest

from app.experiments import build_parser, main, report_path
from app.namespaces import exit_ns, files_ns


def test_unknown_experiment_is_an_error(tmp_path):
    assert main(["run", "--experiment", "mystery", "--out", str(tmp_path)]) == 1


def test_invalid_flags_are_an_error(tmp_path):
    assert main(["run", "--experiment", "oracle", "--box", "1"]) == exit_ns.ERROR
    assert main(["gen", "--box", "8", "--config", str(tmp_path / "none.cfg")]) == 1


def test_run_and_aggregate(tmp_path):
    args = ["--box", "5", "--replicates", "3", "--out", str(tmp_path)]
    assert main(["run", "--experiment", "oracle", *args]) == exit_ns.PASS
    assert main(["gen", *args, "--storage-mode", "on-demand"]) == exit_ns.PASS
    reports = [str(report_path(tmp_path, name)) for name in ("oracle", "gen")]
    assert main(["aggregate", *reports, "--out", str(tmp_path)]) == exit_ns.PASS
    assert (tmp_path / files_ns.SUMMARY).exists()


def test_parser_needs_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
    args = build_parser().parse_args(["render", "--seed", "3", "--verbose"])
    assert args.seed == 3 and args.verbose
