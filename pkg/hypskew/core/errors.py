class DomainError(ValueError):
    r"""Input lies outside the domain of an operation.

    Raised for points on or outside the unit circle,
    points not in the upper half-plane,
    and parameters outside their admissible range.

    Examples:
        >>> import hypskew
        >>> try:
        ...     hypskew.dist_disk(0, 1)
        ... except DomainError as ex:
        ...     print(ex)
        Point 1 is not inside the unit disk.

    """


class DegenerateError(ValueError):
    r"""Geometric input is degenerate.

    E.g. coincident vertices,
    or a side length below ``1e-14``.

    """


class DegenerateGeometryWarning(UserWarning):
    r"""Degenerate input that was handled by convention."""


class NumericError(ArithmeticError):
    r"""Floating point range exceeded.

    Raised when a computation saturates at the unit circle,
    e.g. a pseudo-hyperbolic distance of ``1 - 1e-15`` or larger.

    """


class SolverError(NumericError):
    r"""Bracketed solver failed to bracket or converge."""


class NoProgressError(NumericError):
    r"""Chain descent did not decrease the distance to the target."""


class MapRangeError(ValueError):
    r"""Map under test sent a sample outside its target domain."""


class ConfigError(ValueError):
    r"""Experiment configuration is invalid."""


class EquivarianceError(ValueError):
    r"""Lift is not equivariant under the covering groups.

    Args:
        message: error message
        sample: sample point with the largest violation
        deviation: hyperbolic distance between
            :math:`f(g z)` and :math:`h f(z)`
            at ``sample``

    """

    def __init__(
        self,
        message: str,
        *,
        sample: complex,
        deviation: float,
    ):
        self.sample = sample
        r"""Sample point with the largest violation."""
        self.deviation = deviation
        r"""Largest deviation from equivariance."""

        super().__init__(message)


class ExperimentError(Exception):
    r"""Wrapper for any error raised by an experiment operation.

    Args:
        exception: exception raised by the operation
        operation: name of the failing operation
        sample: description of the failing sample

    Examples:
        >>> import hypskew
        >>> try:
        ...     hypskew.cli.call_operation(
        ...         hypskew.dist_disk, 0, 2, operation="dist_disk"
        ...     )
        ... except ExperimentError as ex:
        ...     ex.exception
        DomainError('Point 2 is not inside the unit disk.')

    """

    def __init__(
        self,
        exception: Exception,
        *,
        operation: str,
        sample: str = None,
    ):
        self.exception = exception
        r"""Exception raised by the operation."""
        self.operation = operation
        r"""Name of the failing operation."""
        self.sample = sample
        r"""Description of the failing sample."""

        message = f"Operation '{operation}' failed"
        if sample is not None:
            message += f" on sample {sample}"
        message += f": {exception}"
        super().__init__(message)
