from collections.abc import Sequence
import functools
import math
import threading

import numpy as np
from scipy import optimize

from hypskew.core import utils
from hypskew.core.disk import HPoint
from hypskew.core.disk import dist_disk
from hypskew.core.errors import DegenerateError
from hypskew.core.errors import DomainError
from hypskew.core.errors import SolverError
from hypskew.core.geodesic import GeodesicSegment
from hypskew.core.geodesic import geodesic_midpoint
from hypskew.core.mobius import MobiusMap


SIDE_TOLERANCE = 1e-9
r"""Relative tolerance for equal side lengths of equilateral triangles."""

INSIDE_TOLERANCE = 1e-12
r"""Points this close to a side count as inside."""

OMEGA = complex(-0.5, math.sqrt(3) / 2)
r"""Primitive third root of unity."""


class Triangle:
    r"""Geodesic triangle in the disk.

    Args:
        v1: first vertex
        v2: second vertex
        v3: third vertex

    Raises:
        DomainError: if a vertex is not inside the unit disk

    Examples:
        >>> triangle = Triangle(0, 0.5, 0.5j)
        >>> [round(float(side), 6) for side in triangle.sides]
        [1.098612, 1.680715, 1.098612]

    """

    def __init__(
        self,
        v1: complex | HPoint,
        v2: complex | HPoint,
        v3: complex | HPoint,
    ):
        self._vertices = tuple(complex(utils.check_in_disk(v)) for v in (v1, v2, v3))

    def __repr__(self) -> str:  # noqa: D105
        vertices = ", ".join(repr(v) for v in self._vertices)
        return f"{self.__class__.__name__}({vertices})"

    @functools.cached_property
    def interior_point(self) -> complex:
        r"""Point in the interior of the triangle.

        Midpoint of the median from the first vertex.

        """
        v1, v2, v3 = self._vertices
        return geodesic_midpoint(v1, geodesic_midpoint(v2, v3))

    @property
    def is_degenerate(self) -> bool:
        r"""Two vertices coincide."""
        return min(self.sides) < utils.DEGENERATE_LENGTH

    @functools.cached_property
    def segments(self) -> tuple[GeodesicSegment, ...]:
        r"""Sides as geodesic segments.

        Ordered as
        :math:`(v_1, v_2)`,
        :math:`(v_2, v_3)`,
        :math:`(v_3, v_1)`.

        """
        v1, v2, v3 = self._vertices
        return (
            GeodesicSegment(v1, v2),
            GeodesicSegment(v2, v3),
            GeodesicSegment(v3, v1),
        )

    @functools.cached_property
    def sides(self) -> tuple[float, float, float]:
        r"""Side lengths ordered as :attr:`segments`."""
        v1, v2, v3 = self._vertices
        return (
            float(dist_disk(v1, v2)),
            float(dist_disk(v2, v3)),
            float(dist_disk(v3, v1)),
        )

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        r"""Vertices."""
        return self._vertices

    def contains(self, p: complex | np.ndarray) -> bool | np.ndarray:
        r"""Check if point(s) lie in the closed triangle.

        See :func:`hypskew.contains_point`.

        """
        if self.is_degenerate:
            raise DegenerateError("Containment is undefined for degenerate triangles.")
        inside = True
        for segment in self.segments:
            reference = segment.signed_offset(self.interior_point)
            side = segment.signed_offset(p) * math.copysign(1.0, reference)
            inside = inside & (side >= -INSIDE_TOLERANCE)
        if np.ndim(inside) == 0:
            return bool(inside)
        return inside

    def distance_to(self, p: complex | np.ndarray) -> float | np.ndarray:
        r"""Hyperbolic distance from point(s) to the closed triangle.

        See :func:`hypskew.dist_to_triangle`.

        """
        inside = self.contains(p)
        boundary = np.minimum.reduce(
            [np.asarray(segment.distance_to(p)) for segment in self.segments]
        )
        distance = np.where(inside, 0.0, boundary)
        if np.ndim(distance) == 0:
            return float(distance)
        return distance

    def transformed(self, mobius: MobiusMap) -> "Triangle":
        r"""Image of the triangle under a Möbius map."""
        return self.__class__(*mobius(np.array(self._vertices)))


class EqTriangle(Triangle):
    r"""Equilateral geodesic triangle.

    All three sides agree
    up to a relative tolerance of ``1e-9``.

    Args:
        v1: first vertex
        v2: second vertex
        v3: third vertex

    Raises:
        DomainError: if a vertex is not inside the unit disk,
            or the sides differ
        DegenerateError: if two vertices coincide

    Examples:
        >>> triangle = equilateral_from_side(1.0)
        >>> round(triangle.side, 12)
        1.0
        >>> abs(triangle.centroid) < 1e-15
        True

    """

    def __init__(
        self,
        v1: complex | HPoint,
        v2: complex | HPoint,
        v3: complex | HPoint,
    ):
        super().__init__(v1, v2, v3)
        sides = self.sides
        if min(sides) < utils.DEGENERATE_LENGTH:
            raise DegenerateError("Equilateral triangle has coincident vertices.")
        side = sum(sides) / 3
        if max(sides) - min(sides) > SIDE_TOLERANCE * max(1.0, side):
            raise DomainError(
                f"Triangle is not equilateral, side lengths are {sides}."
            )
        self._side = side

    @property
    def angle(self) -> float:
        r"""Interior angle at every vertex."""
        return side_to_angle(self._side)

    @functools.cached_property
    def centroid(self) -> complex:
        r"""Intersection point of the medians.

        It is at distance :math:`2 \operatorname{artanh} t`
        from every vertex,
        where :math:`t` is :attr:`vertex_modulus`.

        """
        v1, v2, v3 = self._vertices
        median = GeodesicSegment(v1, geodesic_midpoint(v2, v3))
        return complex(median.point_at_distance(2 * math.atanh(self.vertex_modulus)))

    @property
    def interior_point(self) -> complex:
        r"""Centroid of the triangle."""
        return self.centroid

    @property
    def side(self) -> float:
        r"""Side length."""
        return self._side

    @functools.cached_property
    def vertex_modulus(self) -> float:
        r"""Vertex modulus :math:`t` of the congruent triangle centred at 0."""
        return side_to_vertex(self._side)

    def transformed(self, mobius: MobiusMap) -> "EqTriangle":
        r"""Image of the triangle under a Möbius map.

        Centroid and vertex modulus are carried over.

        """
        triangle = EqTriangle(*mobius(np.array(self._vertices)))
        triangle.__dict__["centroid"] = mobius(self.centroid)
        triangle.__dict__["vertex_modulus"] = self.vertex_modulus
        return triangle


def centroid(triangle: EqTriangle) -> complex:
    r"""Centroid of an equilateral triangle.

    Args:
        triangle: equilateral triangle

    Returns:
        intersection point of the medians

    """
    return triangle.centroid


def contains_point(
    triangle: Triangle,
    p: complex | np.ndarray,
) -> bool | np.ndarray:
    r"""Check if point(s) lie in the closed triangle.

    For every side
    the disk is normalized
    so that the side lies on the real axis.
    The point is inside
    if its imaginary part has the same sign
    as the one of an interior reference point
    for all three sides.
    Points within ``1e-12`` of a side count as inside.

    Args:
        triangle: triangle
        p: point(s) of the disk

    Returns:
        ``True`` for points inside the triangle

    Raises:
        DegenerateError: if the triangle is degenerate

    Examples:
        >>> triangle = equilateral_from_side(1.0)
        >>> contains_point(triangle, 0)
        True
        >>> contains_point(triangle, 0.5)
        False

    """
    return triangle.contains(p)


@functools.lru_cache(maxsize=1)
def _compute_delta_constant() -> float:
    grid = np.linspace(1e-3, 1.0, 1000)

    def ratio(r: float) -> float:
        radius = inscribed_radii(side_to_vertex(r))[1]
        return radius / (2 * r)

    values = np.array([ratio(r) for r in grid])
    index = int(np.argmin(values))
    lower = grid[max(index - 1, 0)]
    upper = grid[min(index + 1, len(grid) - 1)]
    result = optimize.minimize_scalar(
        ratio,
        bounds=(lower, upper),
        method="bounded",
        options={"xatol": 1e-10},
    )
    return float(min(values[index], result.fun))


_delta_lock = threading.Lock()


def delta_constant() -> float:
    r"""Ratio of inscribed ball radius and twice the side.

    The minimum over side lengths :math:`0 < r \le 1`
    of :math:`\tilde{R}(r) / (2r)`,
    where :math:`\tilde{R}(r)` is the hyperbolic radius
    of the largest ball inscribed
    in an equilateral triangle of side :math:`r`.
    Every point of a chain triangle is at least
    :math:`2 \delta r` away from its boundary
    when measured from the centroid.

    The value is computed on first use
    and cached.

    Returns:
        constant :math:`\delta`

    Examples:
        >>> round(delta_constant(), 5)
        0.13187

    """
    with _delta_lock:
        return _compute_delta_constant()


def dist_to_triangle(
    p: complex | np.ndarray,
    triangle: Triangle,
) -> float | np.ndarray:
    r"""Hyperbolic distance from point(s) to a closed triangle.

    Zero inside the triangle,
    otherwise the distance to the nearest side.

    Args:
        p: point(s) of the disk
        triangle: triangle

    Returns:
        hyperbolic distance(s)

    Examples:
        >>> triangle = equilateral_from_side(1.0)
        >>> dist_to_triangle(0, triangle)
        0.0

    """
    return triangle.distance_to(p)


def equilateral_from_side(
    r: float,
    placement: MobiusMap = None,
) -> EqTriangle:
    r"""Equilateral triangle of given side.

    The canonical triangle
    has vertices :math:`t, t\omega, t\omega^2`
    with :math:`\omega = e^{2\pi i / 3}`
    and :math:`t` from :func:`side_to_vertex`.
    Its centroid is the origin.

    Args:
        r: side length
        placement: isometry applied to the canonical triangle,
            e.g. :meth:`hypskew.MobiusMap.placement`

    Returns:
        equilateral triangle

    Raises:
        DomainError: if ``r`` is not positive
        SolverError: if :math:`t` cannot be determined

    """
    t = side_to_vertex(r)
    vertices = np.array([t, t * OMEGA, t * OMEGA.conjugate()])
    center = 0j
    if placement is not None:
        vertices = placement(vertices)
        center = placement(0j)
    triangle = EqTriangle(*vertices)
    triangle.__dict__["centroid"] = center
    triangle.__dict__["vertex_modulus"] = t
    return triangle


def inscribed_radii(t: float) -> tuple[float, float]:
    r"""Radius of the ball inscribed in the canonical triangle.

    The canonical triangle has vertices
    :math:`t, t\omega, t\omega^2`.
    The nearest boundary point to the origin
    is the midpoint of a side,
    its modulus is

    .. math::

        R = \frac{t}{1 + t^2 + \sqrt{1 + t^2 + t^4}}.

    Args:
        t: vertex modulus with :math:`0 < t < 1`

    Returns:
        Euclidean radius :math:`R`
        and hyperbolic radius :math:`2 \operatorname{artanh} R`

    Raises:
        DomainError: if ``t`` is not in :math:`(0, 1)`

    Examples:
        >>> euclidean, hyperbolic = inscribed_radii(0.5)
        >>> round(euclidean, 6)
        0.208712

    """
    t = float(t)
    if not 0 < t < 1:
        raise DomainError(f"Vertex modulus must be in (0, 1), got {t}.")
    radius = t / (1 + t**2 + math.sqrt(1 + t**2 + t**4))
    return radius, 2 * math.atanh(radius)


def side_to_angle(r: float) -> float:
    r"""Interior angle of an equilateral triangle of side ``r``.

    .. math::

        \alpha = \cos^{-1} \frac{1 + \tanh^2(r/2)}{2}

    For :math:`0 < r \le 1`
    the angle lies in :math:`(2\pi/7, \pi/3)`,
    so seven triangles around a vertex
    cover a full turn.

    Args:
        r: side length

    Returns:
        angle

    Raises:
        DomainError: if ``r`` is not positive

    Examples:
        >>> round(side_to_angle(1.0), 4)
        0.9188

    """
    r = utils.check_positive(r, "Side length")
    return math.acos((1 + math.tanh(r / 2) ** 2) / 2)


def side_to_vertex(r: float) -> float:
    r"""Vertex modulus of the canonical triangle of side ``r``.

    Solves :math:`u(t) = \tanh(r/2)`
    with :math:`u(t) = t\sqrt{3} / \sqrt{1 + t^2 + t^4}`,
    the pseudo-hyperbolic distance
    between :math:`t` and :math:`t\omega`,
    by Brent's method on :math:`[0, 1]`.

    Args:
        r: side length

    Returns:
        vertex modulus :math:`t`

    Raises:
        DomainError: if ``r`` is not positive
        SolverError: if the equation cannot be solved
            in floating point precision

    Examples:
        >>> round(side_to_vertex(1.0), 6)
        0.27766

    """
    r = utils.check_positive(r, "Side length")
    target = math.tanh(r / 2)
    if target >= 1 - utils.BOUNDARY_TOLERANCE:
        raise SolverError(f"Side length {r} is too large to be resolved.")
    try:
        t, info = optimize.brentq(
            lambda t: _side_pseudo_distance(t) - target,
            0.0,
            1.0,
            xtol=1e-300,
            maxiter=200,
            full_output=True,
            disp=False,
        )
    except (ValueError, RuntimeError) as ex:
        raise SolverError(f"Vertex modulus for side {r} not found: {ex}") from ex
    if not info.converged:
        raise SolverError(f"Vertex modulus for side {r} did not converge.")
    return float(t)


def skew_euclid(triangle: Triangle | Sequence[complex]) -> float:
    r"""Euclidean skew of a triangle.

    Ratio of the longest and shortest Euclidean side.

    Raises:
        DegenerateError: if two vertices coincide

    """
    v1, v2, v3 = _vertices(triangle)
    sides = (abs(v1 - v2), abs(v2 - v3), abs(v3 - v1))
    if min(sides) == 0:
        raise DegenerateError("Skew is undefined for coincident vertices.")
    return max(sides) / min(sides)


def skew_hyp(triangle: Triangle | Sequence[complex]) -> float:
    r"""Hyperbolic skew of a triangle.

    Ratio of the longest and shortest hyperbolic side.
    Equilateral triangles have skew 1.

    Args:
        triangle: triangle or sequence of three vertices

    Returns:
        skew

    Raises:
        DegenerateError: if the shortest side is below ``1e-14``

    Examples:
        >>> round(skew_hyp([0, 0.5, 0.5j]), 6)
        1.529846

    """
    if isinstance(triangle, Triangle):
        sides = triangle.sides
    else:
        sides = Triangle(*triangle).sides
    if min(sides) < utils.DEGENERATE_LENGTH:
        raise DegenerateError("Skew is undefined for degenerate triangles.")
    return max(sides) / min(sides)


def vertex_to_angle(x: float) -> float:
    r"""Interior angle of the canonical triangle with vertex modulus ``x``.

    Equals :math:`\cos^{-1}((1 + x^2)/2)`
    with :math:`x = \tanh(r/2)`.

    Raises:
        DomainError: if ``x`` is not in :math:`(0, 1)`

    """
    x = float(x)
    if not 0 < x < 1:
        raise DomainError(f"Modulus must be in (0, 1), got {x}.")
    return math.acos((1 + x**2) / 2)


def vertex_to_side(t: float) -> float:
    r"""Side length of the canonical triangle with vertex modulus ``t``.

    Inverse of :func:`side_to_vertex`.

    Raises:
        DomainError: if ``t`` is not in :math:`(0, 1)`

    """
    t = float(t)
    if not 0 < t < 1:
        raise DomainError(f"Vertex modulus must be in (0, 1), got {t}.")
    return 2 * math.atanh(_side_pseudo_distance(t))


def _side_pseudo_distance(t: float) -> float:
    return t * math.sqrt(3) / math.sqrt(1 + t**2 + t**4)


def _vertices(triangle: Triangle | Sequence[complex]) -> tuple[complex, ...]:
    if isinstance(triangle, Triangle):
        return triangle.vertices
    return tuple(complex(v) for v in utils.to_complex(triangle))
