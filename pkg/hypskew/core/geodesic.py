import math
import warnings

import numpy as np

from hypskew.core import utils
from hypskew.core.disk import HPoint
from hypskew.core.disk import dist_disk
from hypskew.core.errors import DegenerateError
from hypskew.core.errors import DegenerateGeometryWarning
from hypskew.core.mobius import MobiusMap


class GeodesicSegment:
    r"""Geodesic segment between two points of the disk.

    The segment is stored
    together with the isometry
    that moves ``start`` to the origin
    and ``end`` onto the positive real axis.
    A segment with coincident end points
    degenerates to a point.

    Args:
        start: start point
        end: end point

    Raises:
        DomainError: if a point is not inside the unit disk

    Examples:
        >>> segment = GeodesicSegment(0, 0.5)
        >>> round(float(segment.length), 6)
        1.098612
        >>> round(abs(segment.midpoint()), 6)
        0.267949

    """

    def __init__(
        self,
        start: complex | HPoint,
        end: complex | HPoint,
    ):
        start = complex(utils.check_in_disk(start))
        end = complex(utils.check_in_disk(end))
        moved = MobiusMap.moving_to_origin(start)(end)
        self.start = start
        r"""Start point."""
        self.end = end
        r"""End point."""
        self._normalize = MobiusMap(-np.angle(moved), start)
        self._denormalize = self._normalize.inverse()
        self._end = abs(moved)

    @property
    def length(self) -> float:
        r"""Hyperbolic length."""
        return 2 * math.atanh(self._end)

    def distance_to(self, z: complex | np.ndarray) -> float | np.ndarray:
        r"""Hyperbolic distance from point(s) to the segment.

        After normalization
        the segment is :math:`[0, b]` on the real axis.
        The nearest point of the full geodesic
        is the foot of the perpendicular,
        if it falls outside :math:`[0, b]`
        the nearest end point is used instead.

        Args:
            z: point(s) of the disk

        Returns:
            hyperbolic distance(s)

        """
        z = self._normalize(z)
        x = np.real(z)
        y = np.imag(z)
        norm = np.abs(z) ** 2
        root = np.sqrt(np.maximum((1 + norm) ** 2 - 4 * x**2, 0))
        foot = 2 * x / ((1 + norm) + root)
        to_line = np.arcsinh(2 * np.abs(y) / (1 - norm))
        to_start = dist_disk(z, 0)
        to_end = dist_disk(z, self._end)
        distance = np.where(
            foot <= 0,
            to_start,
            np.where(foot >= self._end, to_end, to_line),
        )
        if np.ndim(distance) == 0:
            return float(distance)
        return distance

    def midpoint(self) -> complex:
        r"""Point halfway along the segment."""
        return self.point_at(0.5)

    def point_at(self, fraction: float | np.ndarray) -> complex | np.ndarray:
        r"""Point at a fraction of the length from ``start``.

        Args:
            fraction: fraction(s) of the length,
                values outside :math:`[0, 1]`
                extend the segment along its geodesic

        Returns:
            point(s) of the disk

        """
        fraction = np.asarray(fraction, dtype=float)
        local = np.tanh(fraction * math.atanh(self._end)).astype(complex)
        return self._denormalize(local)

    def signed_offset(self, z: complex | np.ndarray) -> float | np.ndarray:
        r"""Imaginary part of point(s) after normalization.

        Positive on the left of the segment
        when walking from ``start`` to ``end``.

        """
        return np.imag(self._normalize(z))

    def point_at_distance(
        self,
        distance: float | np.ndarray,
    ) -> complex | np.ndarray:
        r"""Point at hyperbolic distance from ``start`` towards ``end``."""
        distance = np.asarray(distance, dtype=float)
        local = np.tanh(distance / 2).astype(complex)
        return self._denormalize(local)


def angle_at_vertex(
    w1: complex | HPoint,
    w2: complex | HPoint,
    w3: complex | HPoint,
) -> float:
    r"""Interior angle at ``w1`` of a hyperbolic triangle.

    ``w1`` is moved to the origin,
    where geodesics through it are straight lines,
    and the angle is read off
    from the arguments of the images of ``w2`` and ``w3``.

    Args:
        w1: vertex carrying the angle
        w2: second vertex
        w3: third vertex

    Returns:
        angle in :math:`[0, \pi]`

    Raises:
        DegenerateError: if ``w2`` or ``w3`` coincides with ``w1``

    Examples:
        >>> round(angle_at_vertex(0, 0.5, 0.5j), 6)
        1.570796

    """
    if min(dist_disk(w1, w2), dist_disk(w1, w3)) < utils.DEGENERATE_LENGTH:
        raise DegenerateError("Angle is undefined at a coincident vertex.")
    move = MobiusMap.moving_to_origin(w1)
    u2 = move(w2)
    u3 = move(w3)
    return abs(float(np.angle(u3 * np.conj(u2))))


def geodesic_midpoint(
    p: complex | HPoint,
    q: complex | HPoint,
) -> complex:
    r"""Midpoint of the geodesic segment from ``p`` to ``q``.

    For :math:`p = q`
    the point itself is returned
    and a :class:`hypskew.DegenerateGeometryWarning` is issued.

    Examples:
        >>> m = geodesic_midpoint(-0.5, 0.5)
        >>> abs(m) < 1e-15
        True

    """
    if dist_disk(p, q) == 0:
        warnings.warn(
            "Midpoint of coincident points is the point itself.",
            category=DegenerateGeometryWarning,
            stacklevel=2,
        )
        return complex(utils.check_in_disk(p))
    return GeodesicSegment(p, q).midpoint()


def law_of_cosines_angle(
    a: float,
    b: float,
    c: float,
) -> float:
    r"""Angle between sides ``a`` and ``b`` opposite to side ``c``.

    Hyperbolic law of cosines
    :math:`\cos\gamma = (\cosh a \cosh b - \cosh c) / (\sinh a \sinh b)`.

    Examples:
        >>> round(law_of_cosines_angle(1.0, 1.0, 1.0), 4)
        0.9188

    """
    for name, value in (("a", a), ("b", b), ("c", c)):
        utils.check_positive(value, f"Side {name}")
    cosine = (math.cosh(a) * math.cosh(b) - math.cosh(c)) / (
        math.sinh(a) * math.sinh(b)
    )
    return math.acos(min(1.0, max(-1.0, cosine)))
