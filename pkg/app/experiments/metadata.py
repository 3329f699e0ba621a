from dataclasses import dataclass

from ..exceptions import ExperimentNamespaceException, UnknownExperiment
from ..namespaces import experiments_ns, keys_ns


@dataclass
class ExperimentMetaData:
    experiment: str

    def __post_init__(self) -> None:
        experiment = self._get_experiment_ns()
        self.defaults: dict = dict(self._get_key(experiment, keys_ns.DEFAULTS))
        self.tolerances: dict = dict(self._get_key(experiment, keys_ns.TOLERANCES))
        self.soft = tuple(experiment.get(keys_ns.SOFT, ()))
        self.min_replicates: int = experiment.get(keys_ns.MIN_REPLICATES, 1)
        self.min_box: int = experiment.get(keys_ns.MIN_BOX, 2)
        self.max_box = experiment.get(keys_ns.MAX_BOX)

    def _get_experiment_ns(self) -> dict:
        ns: dict = vars(experiments_ns)
        key = self.experiment.upper()

        if key not in ns:
            known = ", ".join(sorted(k.lower() for k in ns))
            raise UnknownExperiment(
                f"{self.experiment} is unknown, choose from {known}"
            )

        return ns[key]

    def _get_key(self, ns: dict, key: str) -> dict:
        if key not in ns:
            raise ExperimentNamespaceException(
                f"{self.experiment} is missing {key} key in the namespace"
            )

        return ns[key]
