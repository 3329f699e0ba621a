from .experiment_exceptions import (
    DumpFormatError,
    ExperimentException,
    ExperimentNamespaceException,
    InvalidConfig,
    MemoryBudgetExceeded,
    SchemaMismatch,
    UnknownExperiment,
)
from .lattice_exceptions import (
    DimensionMismatch,
    DisplacementTooLarge,
    DomainError,
    InvalidForest,
    LatticeException,
    OrderingError,
    OutOfBoxError,
    OutOfRangeIndex,
)
from .stats_exceptions import (
    DegenerateScales,
    EstimatorException,
    InsufficientData,
    WindowViolation,
)
