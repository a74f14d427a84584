"""Exception hierarchy shared across the package."""


class EngineError(Exception):
    """Base class for all intent-engine errors."""


class DataError(EngineError):
    """Malformed or inconsistent input data (files, records, labels)."""


class ShapeError(EngineError):
    """Tensor shape mismatch at a layer boundary."""

    def __init__(self, layer: str, expected, got):
        self.layer = layer
        self.expected = expected
        self.got = got
        super().__init__(f"{layer}: expected input shape {expected}, got {got}")


class TrainingError(EngineError):
    """Non-finite loss or gradient encountered during optimization."""


class GradCheckError(EngineError):
    """Gradient check cannot run on the given graph (e.g. active dropout)."""


class BundleError(EngineError):
    """Model bundle is unreadable: bad version, checksum, or layout."""


class ZeroVarianceError(EngineError):
    """Correlation requested on a constant sequence."""
