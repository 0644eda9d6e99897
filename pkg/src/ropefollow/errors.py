"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid static configuration (rope parameters, experiment spec, ...)."""


class EnvironmentGenerationError(RuntimeError):
    """Randomization failed to produce a settled rope within the retry budget."""


class UsageError(RuntimeError):
    """An API was called out of contract (step after done, backward before forward, ...)."""


class DegenerateInputError(ValueError):
    """Not enough data to compute the requested quantity."""


class TrajectoryFormatError(ValueError):
    """A trajectory dump could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
