import dataclasses
import math

import numpy as np

from hypskew.core import utils
from hypskew.core.disk import HPoint
from hypskew.core.disk import dist_disk
from hypskew.core.errors import DomainError
from hypskew.core.errors import NoProgressError
from hypskew.core.mobius import MobiusMap
from hypskew.core.triangle import EqTriangle


MAX_SIDE = 1.0
r"""Largest side length for which chains are built."""

SHARED_VERTEX_TOLERANCE = 1e-10
r"""Largest distance between vertices counted as shared."""

SIDE_TOLERANCE = 1e-9
r"""Largest deviation of side lengths within a chain."""

TIE_TOLERANCE = 1e-12
r"""Distances closer than this to the minimum count as tied."""


class TriangleChain:
    r"""Chain of equilateral triangles.

    Consecutive triangles share a full side,
    all triangles have the same side length,
    and the last triangle contains the target.
    The chain is not validated on creation,
    use :func:`hypskew.validate_chain`.

    Args:
        triangles: ordered triangles
        target: target point
        distances: distance from ``target``
            to every triangle
        round_ends: indices of the triangles
            chosen at the end of each descent round

    Examples:
        >>> import hypskew
        >>> triangle = hypskew.equilateral_from_side(0.5)
        >>> chain = build_chain(triangle, 0)
        >>> len(chain)
        1

    """

    def __init__(
        self,
        triangles: list[EqTriangle],
        target: complex | HPoint,
        distances: list[float],
        round_ends: list[int] = None,
    ):
        self.triangles = list(triangles)
        r"""Ordered triangles."""
        self.target = complex(target)
        r"""Target point."""
        self.distances = [float(d) for d in distances]
        r"""Distance from target to every triangle."""
        self.round_ends = list(round_ends or [])
        r"""Indices of triangles chosen at the end of each descent round."""

    def __getitem__(self, index: int) -> EqTriangle:  # noqa: D105
        return self.triangles[index]

    def __len__(self) -> int:  # noqa: D105
        return len(self.triangles)

    def __repr__(self) -> str:  # noqa: D105
        return (
            f"TriangleChain("
            f"length={len(self)}, "
            f"side={self.side!r}, "
            f"target={self.target!r}"
            f")"
        )

    @property
    def bound(self) -> int:
        r"""Upper bound :math:`\max\{7, \lceil 700 \rho(p, T) / r \rceil\}`.

        :math:`\rho(p, T)` is the distance of the target
        to the first triangle.

        """
        return length_bound(self.distances[0], self.side)

    @property
    def side(self) -> float:
        r"""Side length of the first triangle."""
        return self.triangles[0].side

    def to_dict(self) -> dict:
        r"""Serialize chain to a JSON compatible dictionary."""
        return {
            "side": self.side,
            "target": [self.target.real, self.target.imag],
            "length": len(self),
            "bound": self.bound,
            "distances": self.distances,
            "round_ends": self.round_ends,
            "triangles": [
                [[v.real, v.imag] for v in triangle.vertices]
                for triangle in self.triangles
            ],
        }


@dataclasses.dataclass(frozen=True)
class ChainValidation:
    r"""Result of :func:`hypskew.validate_chain`.

    Args:
        passed: all chain conditions hold
        reason: first violated condition,
            ``'equal-side'``,
            ``'side-sharing'``,
            ``'containment'``,
            or ``'empty'``
        index: index of the triangle violating the condition

    """

    passed: bool
    reason: str = None
    index: int = None

    def __bool__(self) -> bool:  # noqa: D105
        return self.passed


def build_chain(
    triangle: EqTriangle,
    p: complex | HPoint,
) -> TriangleChain:
    r"""Connect an equilateral triangle to a point by a triangle chain.

    Every descent round rotates
    the current triangle seven times
    about its vertex nearest to ``p``
    and continues with the fan member
    closest to ``p``,
    ties are broken by the lowest fan index.
    The fan covers the ball
    around that vertex
    with the height of the triangle as radius,
    so every round decreases the distance to ``p``
    by more than :math:`r/100`.
    The resulting chain has at most
    :math:`\max\{7, \lceil 700 \rho(p, T) / r \rceil\}` triangles.

    Args:
        triangle: first triangle of the chain,
            with side length at most 1
        p: target point

    Returns:
        triangle chain

    Raises:
        DomainError: if the side length exceeds 1
            or ``p`` is not inside the unit disk
        NoProgressError: if a round does not reduce
            the distance to ``p``

    Examples:
        >>> import hypskew
        >>> triangle = hypskew.equilateral_from_side(0.5)
        >>> chain = build_chain(triangle, 0.6)
        >>> chain[-1].contains(0.6)
        True

    """
    side = triangle.side
    if side > MAX_SIDE + SIDE_TOLERANCE:
        raise DomainError(f"Chains need side length at most 1, got {side}.")
    p = complex(utils.check_in_disk(p, name="Target"))

    distance = triangle.distance_to(p)
    triangles = [triangle]
    distances = [distance]
    round_ends = [0]
    max_rounds = math.ceil(100 * distance / side) + 1

    current = triangle
    while distance > 0:
        if len(round_ends) > max_rounds:
            raise NoProgressError(
                f"Chain did not reach target {utils.format_point(p)} "
                f"within {max_rounds} rounds."
            )
        vertex = _first_minimum(dist_disk(np.array(current.vertices), p))
        fan = fan_about_vertex(current, vertex + 1)
        fan_distances = [member.distance_to(p) for member in fan]
        best = _first_minimum(fan_distances)
        if not fan_distances[best] < distance:
            raise NoProgressError(
                f"Rotation about vertex {vertex + 1} did not reduce "
                f"distance {distance} to target {utils.format_point(p)}."
            )
        triangles.extend(fan[: best + 1])
        distances.extend(fan_distances[: best + 1])
        round_ends.append(len(triangles) - 1)
        current = fan[best]
        distance = fan_distances[best]

    return TriangleChain(triangles, p, distances, round_ends)


def fan_about_vertex(
    triangle: EqTriangle,
    vertex: int,
    count: int = 7,
    *,
    clockwise: bool = True,
) -> list[EqTriangle]:
    r"""Rotate a triangle repeatedly about one of its vertices.

    Every member is the previous one
    rotated by the interior angle,
    a Euclidean rotation conjugated by :math:`A_v`.
    Consecutive members share a side,
    whose vertices are copied exactly.
    Seven members and the triangle itself
    cover a full neighborhood of the vertex.

    Args:
        triangle: equilateral triangle
        vertex: index of the vertex, 1, 2, or 3
        count: number of members, at most 7
        clockwise: rotation direction

    Returns:
        fan members

    Raises:
        DomainError: if ``vertex`` or ``count`` is invalid

    Examples:
        >>> import hypskew
        >>> triangle = hypskew.equilateral_from_side(1.0)
        >>> fan = fan_about_vertex(triangle, 1, 3)
        >>> len(fan)
        3
        >>> fan[0].vertices[0] == triangle.vertices[0]
        True

    """
    if vertex not in (1, 2, 3):
        raise DomainError(f"Vertex index must be 1, 2, or 3, got {vertex}.")
    if not 1 <= count <= 7:
        raise DomainError(f"Fan size must be between 1 and 7, got {count}.")

    center_index = vertex - 1
    others = [i for i in range(3) if i != center_index]
    vertices = list(triangle.vertices)
    center = vertices[center_index]

    move = MobiusMap.moving_to_origin(center)
    phases = [float(np.angle(move(vertices[i]))) for i in others]
    turn = math.remainder(phases[1] - phases[0], 2 * math.pi)
    # leading vertex is counter-clockwise of trailing vertex by the angle
    if turn > 0:
        leading, trailing = others[1], others[0]
    else:
        leading, trailing = others[0], others[1]
    angle = abs(turn)
    if clockwise:
        moving, fixed = leading, trailing
        angle = -angle
    else:
        moving, fixed = trailing, leading
    rotation = move.inverse().compose(MobiusMap.rotation(angle)).compose(move)

    fan = []
    previous = vertices[fixed]
    centroid = triangle.centroid
    for _ in range(count):
        new = rotation(previous)
        centroid = rotation(centroid)
        members = [0j, 0j, 0j]
        members[center_index] = center
        members[moving] = previous
        members[fixed] = new
        member = EqTriangle(*members)
        member.__dict__["vertex_modulus"] = triangle.vertex_modulus
        member.__dict__["centroid"] = centroid
        fan.append(member)
        previous = new
    return fan


def length_bound(distance: float, side: float) -> int:
    r"""Bound :math:`\max\{7, \lceil 700 d / r \rceil\}` on chain length.

    Examples:
        >>> length_bound(1.0, 1.0)
        700

    """
    return max(7, math.ceil(700 * distance / side))


def validate_chain(chain: TriangleChain) -> ChainValidation:
    r"""Check all conditions of a triangle chain.

    Side lengths and shared vertices
    are recomputed from the vertices.
    The first violated condition is reported.

    Args:
        chain: triangle chain

    Returns:
        validation result

    Examples:
        >>> import hypskew
        >>> triangle = hypskew.equilateral_from_side(0.5)
        >>> validate_chain(build_chain(triangle, 0.6))
        ChainValidation(passed=True, reason=None, index=None)

    """
    if len(chain) == 0:
        return ChainValidation(False, "empty", None)

    side = None
    previous = None
    for index, triangle in enumerate(chain.triangles):
        v1, v2, v3 = triangle.vertices
        sides = [
            float(dist_disk(v1, v2)),
            float(dist_disk(v2, v3)),
            float(dist_disk(v3, v1)),
        ]
        if side is None:
            side = sides[0]
        if max(abs(s - side) for s in sides) > SIDE_TOLERANCE * max(1.0, side):
            return ChainValidation(False, "equal-side", index)
        if previous is not None and _shared_vertices(previous, triangle) < 2:
            return ChainValidation(False, "side-sharing", index)
        previous = triangle

    if not chain.triangles[-1].contains(chain.target):
        return ChainValidation(False, "containment", len(chain) - 1)
    return ChainValidation(True)


def _shared_vertices(first: EqTriangle, second: EqTriangle) -> int:
    shared = 0
    for v in first.vertices:
        distances = dist_disk(np.array(second.vertices), v)
        if np.min(distances) < SHARED_VERTEX_TOLERANCE:
            shared += 1
    return shared


def _first_minimum(values: list[float] | np.ndarray) -> int:
    # lowest index among values tied with the minimum
    values = np.asarray(values, dtype=float)
    threshold = values.min() + TIE_TOLERANCE * max(1.0, float(values.min()))
    return int(np.flatnonzero(values <= threshold)[0])
