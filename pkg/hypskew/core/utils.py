from collections.abc import Callable
import math

import numpy as np

import audeer

from hypskew.core.errors import DomainError
from hypskew.core.errors import ExperimentError


BOUNDARY_TOLERANCE = 1e-15
r"""Points with modulus at or above ``1 - BOUNDARY_TOLERANCE`` are rejected."""

DEGENERATE_LENGTH = 1e-14
r"""Side lengths below this value count as degenerate."""

CHUNK_SIZE = 1000
r"""Number of samples evaluated in one task."""

GOLDEN_RATIO = (math.sqrt(5) - 1) / 2


def call_operation(
    function: Callable,
    *args,
    operation: str,
    sample: str = None,
    **kwargs,
) -> object:
    r"""Call operation of an experiment.

    Any exception raised by ``function``
    is wrapped in a :class:`hypskew.ExperimentError`,
    which names the operation
    and the sample it failed on.

    Args:
        function: function to call
        *args: positional args of ``function``
        operation: name of the operation
        sample: description of the processed sample
        **kwargs: keyword arguments of ``function``

    Returns:
        return value(s) of ``function``

    Raises:
        ExperimentError: if ``function`` raises an error

    """
    try:
        return function(*args, **kwargs)
    except Exception as ex:
        raise ExperimentError(ex, operation=operation, sample=sample) from ex


def check_count(
    value: int,
    name: str,
    minimum: int = 1,
) -> int:
    r"""Check value is an integer of at least ``minimum``."""
    if int(value) != value or value < minimum:
        raise DomainError(f"{name} must be an integer of at least {minimum}.")
    return int(value)


def check_in_disk(
    z: object,
    *,
    name: str = "Point",
) -> complex | np.ndarray:
    r"""Convert to complex and check it is inside the unit disk.

    Args:
        z: point(s) of the disk
        name: name used in the error message

    Returns:
        complex number or array of complex numbers

    Raises:
        DomainError: if a point is on or outside the unit circle

    """
    z = to_complex(z)
    modulus = np.abs(z)
    if np.ndim(z) == 0:
        if not modulus < 1 - BOUNDARY_TOLERANCE:
            raise DomainError(
                f"{name} {format_point(z)} is not inside the unit disk."
            )
    elif not np.all(modulus < 1 - BOUNDARY_TOLERANCE):
        bad = z.flat[int(np.argmax(~(modulus < 1 - BOUNDARY_TOLERANCE)))]
        raise DomainError(f"{name} {format_point(bad)} is not inside the unit disk.")
    return z


def check_in_halfplane(
    w: object,
    *,
    name: str = "Point",
) -> complex | np.ndarray:
    r"""Convert to complex and check it is in the upper half-plane.

    Args:
        w: point(s) of the upper half-plane
        name: name used in the error message

    Returns:
        complex number or array of complex numbers

    Raises:
        DomainError: if a point has non-positive imaginary part

    """
    w = to_complex(w)
    imag = np.imag(w)
    if not np.all(imag > 0):
        bad = w if np.ndim(w) == 0 else w.flat[int(np.argmax(~(imag > 0)))]
        raise DomainError(
            f"{name} {format_point(bad)} is not in the upper half-plane."
        )
    return w


def check_positive(
    value: float,
    name: str,
) -> float:
    r"""Check value is a finite positive real."""
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be positive, got {value}.")
    return value


def format_point(z: complex) -> str:
    r"""Format complex number for messages.

    Examples:
        >>> format_point(1)
        '1'
        >>> format_point(0.5 - 0.25j)
        '0.5-0.25i'

    """
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}i"


def golden_section_search(
    function: Callable[[float], float],
    lower: float,
    upper: float,
    *,
    iterations: int = 30,
    maximize: bool = False,
) -> tuple[float, float]:
    r"""Golden-section search on an interval.

    The bracket shrinks by the golden ratio
    in every iteration.
    ``function`` is assumed to be unimodal
    on ``[lower, upper]``.

    Args:
        function: scalar function
        lower: lower end of the bracket
        upper: upper end of the bracket
        iterations: number of bracket reductions
        maximize: search maximum instead of minimum

    Returns:
        location and value of the best evaluated point

    Examples:
        >>> x, fx = golden_section_search(lambda x: (x - 1) ** 2, 0, 3)
        >>> round(x, 5), round(fx, 8)
        (1.0, 0.0)

    """
    sign = -1.0 if maximize else 1.0

    def objective(x):
        return sign * function(x)

    x1 = upper - GOLDEN_RATIO * (upper - lower)
    x2 = lower + GOLDEN_RATIO * (upper - lower)
    f1 = objective(x1)
    f2 = objective(x2)
    for _ in range(iterations):
        if f2 > f1:
            upper = x2
            x2, f2 = x1, f1
            x1 = upper - GOLDEN_RATIO * (upper - lower)
            f1 = objective(x1)
        else:
            lower = x1
            x1, f1 = x2, f2
            x2 = lower + GOLDEN_RATIO * (upper - lower)
            f2 = objective(x2)

    if f1 <= f2:
        return x1, sign * f1
    return x2, sign * f2


def point_to_list(z: complex) -> list[float]:
    r"""Real and imaginary part of a point as JSON compatible list."""
    return [float(z.real), float(z.imag)]


def run_chunks(
    job: Callable,
    arrays: list[np.ndarray],
    description: str,
    num_workers: int,
    verbose: bool,
) -> list:
    r"""Run job on consecutive chunks of sample arrays.

    Every task receives
    :data:`CHUNK_SIZE` samples of every array.
    Results are returned in chunk order,
    independent of ``num_workers``.

    Args:
        job: function taking one chunk per array
        arrays: sample arrays of equal length
        description: description shown in the progress bar
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        results of all tasks

    """
    size = len(arrays[0])
    params = [
        ([array[i : i + CHUNK_SIZE] for array in arrays], {})
        for i in range(0, size, CHUNK_SIZE)
    ]
    return audeer.run_tasks(
        job,
        params=params,
        num_workers=num_workers,
        progress_bar=verbose,
        task_description=description,
    )


def to_complex(z: object) -> complex | np.ndarray:
    r"""Convert point(s) to complex representation.

    Accepts numbers,
    objects implementing ``__complex__``
    like :class:`hypskew.HPoint`,
    and (nested) sequences or arrays of those.

    """
    if isinstance(z, np.ndarray):
        if z.dtype == object:
            return np.array([complex(p) for p in z.flat], dtype=complex).reshape(
                z.shape
            )
        return z.astype(complex, copy=False)
    if isinstance(z, (list, tuple)):
        return np.array([to_complex(p) for p in z], dtype=complex)
    return complex(z)
