class QraLabException(Exception):
    """Base class for all exceptions raised by qralab."""

    message: str

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ConfigurationError(QraLabException):
    """Raised when a configuration value is invalid, e.g. a qubit count outside 1..14, a
    probability outside [0, 1] or an experiment spec that cannot be run.
    """


class QubitIndexError(QraLabException, IndexError):
    """Raised when a qubit index is out of range, or when a two-qubit operation is given the same
    qubit twice.
    """


class ModeError(QraLabException):
    """Raised when a density-matrix-only operation is applied to a pure state."""


class DataError(QraLabException):
    """Raised when input data is malformed: length mismatches, out-of-range expectation values,
    empty or degenerate statistical samples.
    """


class DecoderStateError(QraLabException):
    """Raised when a per-position decoder is used before it is frozen, or modified after."""


class ExperimentIOError(QraLabException):
    """Raised when reading or writing experiment files fails. The message names the path."""

    path: str

    def __init__(self, message: str, path: str):
        super().__init__(f"{message}: {path}")
        self.path = path
