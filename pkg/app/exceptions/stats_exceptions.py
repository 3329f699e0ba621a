class EstimatorException(Exception):
    ...


class InsufficientData(EstimatorException, ValueError):
    ...


class WindowViolation(EstimatorException, ValueError):
    ...


class DegenerateScales(EstimatorException, ValueError):
    ...
