"""
Experiment configuration.

Values are resolved with increasing precedence from the experiment defaults,
a flat key = value file (section header optional), MTL_* environment
variables and command-line flags.
"""
import configparser
import logging
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Mapping, Optional

from ..exceptions import InvalidConfig, MemoryBudgetExceeded
from ..lattice import StorageMode
from ..namespaces import files_ns, lattice_ns
from ..utils import PATH
from .metadata import ExperimentMetaData

DEFAULT_MEMORY_CAP = 8 * 2**30


def bytes_per_vertex(mode: StorageMode) -> int:
    """Peak bytes per vertex of one replicate, weights only when materialized"""
    per_vertex = lattice_ns.VALUE_BYTES + lattice_ns.STEP_BYTES + lattice_ns.CURVE_BYTES
    if mode is StorageMode.MATERIALIZED:
        per_vertex += lattice_ns.WEIGHT_BYTES
    return per_vertex


@dataclass
class ExperimentConfig:
    experiment: str
    box: int
    replicates: int
    scale: Optional[float] = None
    seed: int = 0
    out: Path = Path(files_ns.OUTPUT_FOLDER)
    workers: int = 1
    storage_mode: str = StorageMode.MATERIALIZED.value
    memory_cap: int = DEFAULT_MEMORY_CAP
    params: dict = field(default_factory=dict)

    @property
    def n(self) -> float:
        return self.box / 2 if self.scale is None else float(self.scale)

    def param(self, name: str) -> Any:
        return self.params[name]

    def validate(self, meta: Optional[ExperimentMetaData] = None) -> "ExperimentConfig":
        """Raises InvalidConfig or MemoryBudgetExceeded with a hint on the fix"""
        meta = meta or ExperimentMetaData(self.experiment)
        if self.box < meta.min_box:
            raise InvalidConfig(
                f"{self.experiment} needs --box of at least {meta.min_box}, got {self.box}"
            )
        if meta.max_box is not None and self.box > meta.max_box:
            raise InvalidConfig(
                f"{self.experiment} allows --box up to {meta.max_box}, got {self.box}"
            )
        if not 0 < self.n <= self.box / 2:
            raise InvalidConfig(f"--scale must lie in (0, box / 2], got {self.n}")
        if self.replicates < 1:
            raise InvalidConfig(
                f"--replicates must be at least 1, got {self.replicates}"
            )
        if self.workers < 1:
            raise InvalidConfig(f"--workers must be at least 1, got {self.workers}")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfig("--seed must be a 64-bit unsigned integer")
        try:
            mode = StorageMode(self.storage_mode)
        except ValueError as error:
            raise InvalidConfig(f"unknown storage mode {self.storage_mode}") from error

        per_vertex = bytes_per_vertex(mode)
        # each worker builds its own replicate
        needed = self.box**2 * per_vertex * self.workers
        if needed > self.memory_cap:
            on_demand = self.box**2 * self.workers * bytes_per_vertex(
                StorageMode.ON_DEMAND
            )
            hint = (
                "try --storage-mode on-demand"
                if mode is StorageMode.MATERIALIZED and on_demand <= self.memory_cap
                else "use a smaller --box, fewer --workers or raise memory_cap"
            )
            raise MemoryBudgetExceeded(
                f"a {self.box}-box needs {needed} bytes, cap is {self.memory_cap}; {hint}"
            )
        return self


def parse_value(text: str) -> Any:
    """Comma separated text becomes a list, numerals become int or float"""
    text = text.strip()
    if "," in text:
        return [parse_value(part) for part in text.split(",") if part.strip()]
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def read_config_file(path: PATH) -> dict[str, Any]:
    path = Path(path)
    if not path.is_file():
        raise InvalidConfig(f"config file {path} does not exist")
    text = path.read_text()
    if not text.lstrip().startswith("["):
        text = f"[{files_ns.CONFIG_SECTION}]\n{text}"
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text)
    except configparser.Error as error:
        raise InvalidConfig(f"cannot parse {path}: {error}") from error
    values = {}
    for section in parser.sections():
        for key, value in parser.items(section):
            values[key.replace("-", "_")] = parse_value(value)
    return values


def read_environment(environ: Mapping[str, str]) -> dict[str, Any]:
    prefix = files_ns.ENV_PREFIX
    return {
        key[len(prefix) :].lower(): parse_value(value)
        for key, value in environ.items()
        if key.startswith(prefix)
    }


def load_config(
    flags: Optional[Mapping[str, Any]] = None,
    config_path: Optional[PATH] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> ExperimentConfig:
    """
    Resolves an ExperimentConfig.

    Parameters:
        flags : mapping, optional
            Command-line values, None entries are ignored.
        config_path : path, optional
            Flat key = value file.
        environ : mapping, optional
            Environment, defaults to os.environ.

    Returns:
        ExperimentConfig
            Validated configuration.
    """
    environ = os.environ if environ is None else environ
    layers = [
        read_config_file(config_path) if config_path else {},
        read_environment(environ),
        {k: v for k, v in (flags or {}).items() if v is not None},
    ]
    merged: dict[str, Any] = {}
    for layer in layers:
        merged.update(layer)

    if "experiment" not in merged:
        raise InvalidConfig("no experiment given, use --experiment or MTL_EXPERIMENT")
    meta = ExperimentMetaData(str(merged["experiment"]))
    resolved = {**meta.defaults, **merged}

    known = {f.name for f in fields(ExperimentConfig)} - {"params"}
    params = {k: v for k, v in resolved.items() if k not in known}
    unknown = set(params) - set(meta.defaults)
    if unknown:
        raise InvalidConfig(
            f"unknown parameters for {meta.experiment}: {', '.join(sorted(unknown))}; "
            f"known are {', '.join(sorted(meta.defaults))}"
        )

    values = {k: v for k, v in resolved.items() if k in known}
    values["experiment"] = meta.experiment.lower()
    values["out"] = Path(values.get("out", files_ns.OUTPUT_FOLDER))
    try:
        config = ExperimentConfig(params=params, **values)
        config.box, config.replicates = int(config.box), int(config.replicates)
        config.seed, config.workers = int(config.seed), int(config.workers)
    except (TypeError, ValueError) as error:
        raise InvalidConfig(f"invalid configuration: {error}") from error
    logging.debug(f"configuration resolved -- {config}")
    return config.validate(meta)
