class ExperimentException(Exception):
    ...


class InvalidConfig(ExperimentException):
    ...


class UnknownExperiment(ExperimentException):
    ...


class ExperimentNamespaceException(ExperimentException):
    ...


class SchemaMismatch(ExperimentException):
    ...


class MemoryBudgetExceeded(ExperimentException):
    ...


class DumpFormatError(ExperimentException):
    ...
