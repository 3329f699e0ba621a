import pytest

from app.exceptions import InvalidConfig, MemoryBudgetExceeded, UnknownExperiment
from app.experiments import ExperimentMetaData, load_config, parse_value
from app.experiments.config import bytes_per_vertex
from app.lattice import StorageMode
from app.namespaces import experiments_ns


@pytest.mark.parametrize(
    "text, value",
    [
        ("7", 7),
        (" 0.25 ", 0.25),
        ("on-demand", "on-demand"),
        ("1, 2.5,3", [1, 2.5, 3]),
        ("4,", [4]),
    ],
)
def test_parse_value(text, value):
    assert parse_value(text) == value


def test_defaults_come_from_the_experiment_namespace():
    config = load_config({"experiment": "oracle"}, environ={})
    assert config.box == 7
    assert config.replicates == 1000
    assert config.params == {"pairs": 10}
    assert config.n == 3.5
    assert config.workers == 1


def test_file_then_environment_then_flags(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("experiment = oracle\nbox = 6\nreplicates = 5\nseed = 3\n")
    config = load_config(config_path=path, environ={})
    assert (config.box, config.replicates, config.seed) == (6, 5, 3)

    environ = {"MTL_BOX": "5", "MTL_SEED": "4", "HOME": "/root"}
    config = load_config(config_path=path, environ=environ)
    assert (config.box, config.replicates, config.seed) == (5, 5, 4)

    config = load_config({"box": 4, "seed": None}, config_path=path, environ=environ)
    assert (config.box, config.replicates, config.seed) == (4, 5, 4)


def test_config_file_with_a_section_and_list_values(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text("[mtl]\nexperiment = variation\nalphas = 4, 5\nbox = 64\n")
    config = load_config(config_path=path, environ={})
    assert config.param("alphas") == [4, 5]
    assert config.param("rates") == experiments_ns.VARIATION["DEFAULTS"]["rates"]


def test_experiment_names_are_case_insensitive():
    assert load_config({"experiment": "GEN"}, environ={}).experiment == "gen"


def test_missing_and_unknown_experiments():
    with pytest.raises(InvalidConfig):
        load_config({}, environ={})
    with pytest.raises(UnknownExperiment):
        load_config({"experiment": "mystery"}, environ={})


def test_unknown_parameters_are_rejected(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("experiment = oracle\nhalf_window = 10\n")
    with pytest.raises(InvalidConfig, match="half_window"):
        load_config(config_path=path, environ={})


def test_missing_config_file(tmp_path):
    with pytest.raises(InvalidConfig):
        load_config({"experiment": "oracle"}, tmp_path / "absent.cfg", environ={})


@pytest.mark.parametrize(
    "flags",
    [
        {"box": 1},
        {"box": 300},
        {"replicates": 0},
        {"workers": 0},
        {"seed": -1},
        {"scale": 5.0},
        {"storage_mode": "disk"},
        {"box": "seven"},
    ],
)
def test_invalid_values(flags):
    with pytest.raises(InvalidConfig):
        load_config({"experiment": "oracle", **flags}, environ={})


def test_memory_guard_suggests_on_demand_storage():
    with pytest.raises(MemoryBudgetExceeded, match="on-demand"):
        load_config({"experiment": "gen", "box": 17000}, environ={})
    config = load_config(
        {"experiment": "gen", "box": 17000, "storage_mode": "on-demand"}, environ={}
    )
    assert config.storage_mode == "on-demand"


def test_memory_guard_counts_every_worker_and_the_curve():
    assert bytes_per_vertex(StorageMode.MATERIALIZED) == 33
    assert bytes_per_vertex(StorageMode.ON_DEMAND) == 25
    with pytest.raises(MemoryBudgetExceeded, match="smaller --box"):
        load_config(
            {"experiment": "gen", "box": 30000, "storage_mode": "on-demand"},
            environ={},
        )
    with pytest.raises(MemoryBudgetExceeded, match="fewer --workers"):
        load_config(
            {
                "experiment": "gen",
                "box": 12000,
                "workers": 4,
                "storage_mode": "on-demand",
            },
            environ={},
        )


def test_metadata_of_every_experiment():
    for name in ("oracle", "busemann", "exponents", "variation", "pullback", "vr"):
        meta = ExperimentMetaData(name)
        assert meta.tolerances
        assert meta.min_replicates >= 1
    assert ExperimentMetaData("exponents").soft == (
        "geodesic_dimension",
        "boundary_dimension",
    )
    assert ExperimentMetaData("oracle").max_box == 256
