class LatticeException(Exception):
    ...


class DomainError(LatticeException, ValueError):
    ...


class OutOfBoxError(LatticeException, IndexError):
    ...


class OrderingError(LatticeException, ValueError):
    ...


class DisplacementTooLarge(LatticeException, ValueError):
    ...


class DimensionMismatch(LatticeException, ValueError):
    ...


class InvalidForest(LatticeException):
    ...


class OutOfRangeIndex(LatticeException, IndexError):
    ...
