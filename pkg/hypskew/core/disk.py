from collections.abc import Sequence
import math

import numpy as np

from hypskew.core import utils
from hypskew.core.errors import DomainError
from hypskew.core.errors import NumericError


class HPoint:
    r"""Point of the hyperbolic disk.

    Immutable point :math:`x + iy`
    with :math:`x^2 + y^2 < 1`.
    It can be used
    wherever a complex number is expected,
    e.g. ``complex(point)``.

    Args:
        x: real part
        y: imaginary part

    Raises:
        DomainError: if the point is not inside the unit disk

    Examples:
        >>> point = HPoint(0.5, 0.25)
        >>> point
        HPoint(0.5, 0.25)
        >>> complex(point)
        (0.5+0.25j)

    """

    __slots__ = ("_x", "_y")

    def __init__(
        self,
        x: float,
        y: float = 0.0,
    ):
        z = utils.check_in_disk(complex(x, y))
        self._x = z.real
        self._y = z.imag

    def __complex__(self) -> complex:  # noqa: D105
        return complex(self._x, self._y)

    def __eq__(self, other: object) -> bool:  # noqa: D105
        if not isinstance(other, HPoint):
            return NotImplemented
        return self._x == other._x and self._y == other._y

    def __hash__(self) -> int:  # noqa: D105
        return hash((self._x, self._y))

    def __repr__(self) -> str:  # noqa: D105
        return f"HPoint({self._x!r}, {self._y!r})"

    @property
    def x(self) -> float:
        r"""Real part."""
        return self._x

    @property
    def y(self) -> float:
        r"""Imaginary part."""
        return self._y

    @classmethod
    def from_complex(cls, z: complex) -> "HPoint":
        r"""Create point from complex number."""
        z = complex(z)
        return cls(z.real, z.imag)


class BallPoint:
    r"""Point of the hyperbolic ball in dimension 2 or 3.

    Args:
        *coords: coordinates with Euclidean norm below 1

    Raises:
        DomainError: if the dimension is not 2 or 3,
            or the point is not inside the unit ball

    Examples:
        >>> BallPoint(0.1, 0.2, 0.3)
        BallPoint(0.1, 0.2, 0.3)

    """

    __slots__ = ("_coords",)

    def __init__(self, *coords: float):
        if len(coords) not in (2, 3):
            raise DomainError(
                f"Ball points need 2 or 3 coordinates, got {len(coords)}."
            )
        coords = tuple(float(c) for c in coords)
        if not math.hypot(*coords) < 1 - utils.BOUNDARY_TOLERANCE:
            raise DomainError(f"Point {coords} is not inside the unit ball.")
        self._coords = coords

    def __array__(self, dtype=None, copy=None) -> np.ndarray:  # noqa: D105
        return np.array(self._coords, dtype=dtype)

    def __eq__(self, other: object) -> bool:  # noqa: D105
        if not isinstance(other, BallPoint):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:  # noqa: D105
        return hash(self._coords)

    def __repr__(self) -> str:  # noqa: D105
        return f"BallPoint({', '.join(repr(c) for c in self._coords)})"

    @property
    def coords(self) -> tuple[float, ...]:
        r"""Coordinates."""
        return self._coords

    @property
    def dimension(self) -> int:
        r"""Dimension of the ball."""
        return len(self._coords)


def bilipschitz_constants(radius: float) -> tuple[float, float]:
    r"""Comparison constants of hyperbolic and Euclidean distance.

    On the Euclidean disk of radius :math:`\tanh(R/2)`,
    which equals the hyperbolic ball :math:`B_\rho(0, R)`,
    the hyperbolic distance :math:`\rho`
    and Euclidean distance :math:`d` satisfy
    :math:`c_1 d \le \rho \le c_2 d`
    with :math:`c_1 = 2`
    and :math:`c_2 = 2 \cosh^2(R/2)`.

    Args:
        radius: hyperbolic radius :math:`R`

    Returns:
        lower and upper constant

    Raises:
        DomainError: if ``radius`` is not positive

    Examples:
        >>> c1, c2 = bilipschitz_constants(1.0)
        >>> c1, round(c2, 6)
        (2.0, 2.543081)

    """
    radius = utils.check_positive(radius, "Radius")
    return 2.0, 2 * math.cosh(radius / 2) ** 2


def cayley_to_disk(w: complex | np.ndarray) -> complex | np.ndarray:
    r"""Map upper half-plane to unit disk.

    :math:`w \mapsto (w - i) / (w + i)`.

    Args:
        w: point(s) of the upper half-plane

    Returns:
        point(s) of the disk

    Raises:
        DomainError: if a point is not in the upper half-plane

    Examples:
        >>> cayley_to_disk(1j)
        0j

    """
    w = utils.check_in_halfplane(w)
    return (w - 1j) / (w + 1j)


def cayley_to_halfplane(z: complex | np.ndarray) -> complex | np.ndarray:
    r"""Map unit disk to upper half-plane.

    :math:`z \mapsto i (1 + z) / (1 - z)`,
    inverse of :func:`cayley_to_disk`.

    Args:
        z: point(s) of the disk

    Returns:
        point(s) of the upper half-plane

    Raises:
        DomainError: if a point is not inside the unit disk

    Examples:
        >>> cayley_to_halfplane(0)
        1j

    """
    z = utils.check_in_disk(z)
    return 1j * (1 + z) / (1 - z)


def dist_ball(
    u: BallPoint | Sequence[float] | np.ndarray,
    v: BallPoint | Sequence[float] | np.ndarray,
) -> float | np.ndarray:
    r"""Hyperbolic distance in the unit ball.

    .. math::

        \rho(u, v) = 2 \operatorname{arsinh}
        \frac{|u - v|}{\sqrt{(1 - |u|^2)(1 - |v|^2)}}

    The last axis holds the coordinates,
    leading axes are broadcast.

    Args:
        u: point(s) of the ball
        v: point(s) of the ball

    Returns:
        hyperbolic distance(s)

    Raises:
        DomainError: if dimensions do not match
            or a point is not inside the unit ball

    Examples:
        >>> round(float(dist_ball([0, 0, 0], [0.5, 0, 0])), 6)
        1.098612

    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape[-1:] != v.shape[-1:] or u.shape[-1] not in (2, 3):
        raise DomainError(
            f"Ball points must have matching dimension 2 or 3, "
            f"got {u.shape[-1]} and {v.shape[-1]}."
        )
    norm_u = np.sum(u**2, axis=-1)
    norm_v = np.sum(v**2, axis=-1)
    for norm in (norm_u, norm_v):
        if not np.all(np.sqrt(norm) < 1 - utils.BOUNDARY_TOLERANCE):
            raise DomainError("Point is not inside the unit ball.")
    diff = np.sqrt(np.sum((u - v) ** 2, axis=-1))
    return 2 * np.arcsinh(diff / np.sqrt((1 - norm_u) * (1 - norm_v)))


def dist_disk(
    z: complex | HPoint | np.ndarray,
    w: complex | HPoint | np.ndarray,
) -> float | np.ndarray:
    r"""Hyperbolic distance in the unit disk.

    .. math::

        \rho(z, w) = 2 \operatorname{artanh}
        \left| \frac{z - w}{1 - \bar{w} z} \right|

    The metric has curvature :math:`-1`.
    Arrays are broadcast against each other.

    Args:
        z: point(s) of the disk
        w: point(s) of the disk

    Returns:
        hyperbolic distance(s)

    Raises:
        DomainError: if a point is not inside the unit disk
        NumericError: if the pseudo-hyperbolic distance
            reaches ``1 - 1e-15``

    Examples:
        >>> round(float(dist_disk(0, 0.5)), 6)
        1.098612
        >>> float(dist_disk(0.3j, 0.3j))
        0.0

    """
    p = pseudo_distance(z, w)
    if np.any(p >= 1 - utils.BOUNDARY_TOLERANCE):
        raise NumericError(
            "Pseudo-hyperbolic distance saturates at 1, "
            "points are too close to the boundary."
        )
    return 2 * np.arctanh(p)


def dist_halfplane(
    w1: complex | np.ndarray,
    w2: complex | np.ndarray,
) -> float | np.ndarray:
    r"""Hyperbolic distance in the upper half-plane.

    .. math::

        \rho(w_1, w_2) = 2 \operatorname{arsinh}
        \frac{|w_1 - w_2|}{2 \sqrt{\operatorname{Im} w_1 \operatorname{Im} w_2}}

    The half-plane is isometric to the disk
    via :func:`cayley_to_disk`.

    Args:
        w1: point(s) of the upper half-plane
        w2: point(s) of the upper half-plane

    Returns:
        hyperbolic distance(s)

    Raises:
        DomainError: if a point is not in the upper half-plane

    Examples:
        >>> round(float(dist_halfplane(1j, 2j)), 6)
        0.693147

    """
    w1 = utils.check_in_halfplane(w1)
    w2 = utils.check_in_halfplane(w2)
    scale = 2 * np.sqrt(np.imag(w1) * np.imag(w2))
    return 2 * np.arcsinh(np.abs(w1 - w2) / scale)


def hyperbolic_density(z: complex | np.ndarray) -> float | np.ndarray:
    r"""Density :math:`2 / (1 - |z|^2)` of the hyperbolic metric.

    Examples:
        >>> float(hyperbolic_density(0))
        2.0

    """
    z = utils.check_in_disk(z)
    return 2 / (1 - np.abs(z) ** 2)


def koebe_ratio(z: complex | np.ndarray) -> float | np.ndarray:
    r"""Ratio of hyperbolic and quasihyperbolic density.

    Equals :math:`2 / (1 + |z|)`,
    which lies in :math:`(1, 2]`.

    Examples:
        >>> float(koebe_ratio(0))
        2.0

    """
    return hyperbolic_density(z) / quasihyperbolic_density(z)


def pseudo_distance(
    z: complex | HPoint | np.ndarray,
    w: complex | HPoint | np.ndarray,
) -> float | np.ndarray:
    r"""Pseudo-hyperbolic distance :math:`|z - w| / |1 - \bar{w} z|`."""
    z = utils.check_in_disk(z)
    w = utils.check_in_disk(w)
    return np.abs(z - w) / np.abs(1 - np.conj(w) * z)


def quasihyperbolic_density(z: complex | np.ndarray) -> float | np.ndarray:
    r"""Density :math:`1 / (1 - |z|)` of the quasihyperbolic metric.

    It is the reciprocal distance to the boundary.

    """
    z = utils.check_in_disk(z)
    return 1 / (1 - np.abs(z))


def sample_ball(
    rng: np.random.Generator,
    size: int,
    *,
    center: complex = 0.0,
    radius: float = 1.0,
) -> np.ndarray:
    r"""Sample points uniformly w.r.t. hyperbolic area.

    Points are drawn from the hyperbolic ball
    :math:`B_\rho(c, R)`,
    whose area element in geodesic polar coordinates
    is :math:`\sinh \rho \, d\rho \, d\theta`.

    Args:
        rng: random number generator
        size: number of samples
        center: center :math:`c` of the ball
        radius: hyperbolic radius :math:`R`

    Returns:
        array of sampled points

    """
    radius = utils.check_positive(radius, "Radius")
    center = utils.check_in_disk(center, name="Center")
    u = rng.uniform(size=size)
    theta = rng.uniform(0, 2 * math.pi, size=size)
    rho = np.arccosh(1 + u * (math.cosh(radius) - 1))
    z = np.tanh(rho / 2) * np.exp(1j * theta)
    return (z + center) / (1 + np.conj(center) * z)
