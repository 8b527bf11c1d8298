from collections.abc import Sequence
import math

import numpy as np

from hypskew.core import utils
from hypskew.core.disk import HPoint
from hypskew.core.disk import cayley_to_halfplane
from hypskew.core.disk import dist_halfplane
from hypskew.core.disk import sample_ball
from hypskew.core.distortion import power_eta
from hypskew.core.distortion import sample_triples
from hypskew.core.errors import DegenerateError
from hypskew.core.errors import DomainError
from hypskew.core.errors import EquivarianceError
from hypskew.core.maps import MapUnderTest
from hypskew.core.mobius import MobiusMap
from hypskew.core.report import DistortionReport
from hypskew.core.triangle import EqTriangle
from hypskew.core.triangle import equilateral_from_side


EQUIVARIANCE_TOLERANCE = 1e-9
r"""Largest hyperbolic deviation accepted by :func:`descend_map`."""

TIE_TOLERANCE = 1e-12
r"""Relative tolerance under which orbit distances count as tied."""


class CyclicGroup:
    r"""Cyclic group generated by a hyperbolic translation.

    In the upper half-plane
    the generator is :math:`g(w) = \lambda w`,
    in the disk
    :math:`g(z) = (z + a) / (1 + az)`,
    both with translation length

    .. math::

        \ell = \log \lambda = \log \frac{1 + a}{1 - a}.

    The axis of the generator is
    the imaginary axis in the half-plane
    and the real diameter in the disk.
    The two models are related by :func:`hypskew.cayley_to_halfplane`.
    Points of the quotient annulus
    are represented by their lifts.

    Args:
        translation_length: translation length :math:`\ell`
        model: ``'disk'`` or ``'halfplane'``,
            the model in which lifts are given

    Raises:
        DomainError: if ``translation_length`` is not positive
            or ``model`` is not supported

    Examples:
        >>> group = CyclicGroup.from_disk_parameter(0.5)
        >>> round(group.translation_length, 6)
        1.098612
        >>> round(group.multiplier, 12)
        3.0

    """

    def __init__(
        self,
        translation_length: float,
        *,
        model: str = "disk",
    ):
        if model not in ("disk", "halfplane"):
            raise DomainError(f"Model must be 'disk' or 'halfplane', got '{model}'.")
        self.translation_length = utils.check_positive(
            translation_length,
            "Translation length",
        )
        r"""Translation length :math:`\ell` of the generator."""
        self.model = model
        r"""Model in which lifts are given."""

    def __eq__(self, other: object) -> bool:  # noqa: D105
        if not isinstance(other, CyclicGroup):
            return NotImplemented
        return (
            self.translation_length == other.translation_length
            and self.model == other.model
        )

    def __hash__(self) -> int:  # noqa: D105
        return hash((self.translation_length, self.model))

    def __repr__(self) -> str:  # noqa: D105
        return (
            f"CyclicGroup("
            f"{self.translation_length!r}, "
            f"model='{self.model}'"
            f")"
        )

    @property
    def disk_parameter(self) -> float:
        r"""Parameter :math:`a = \tanh(\ell / 2)` of the disk generator."""
        return math.tanh(self.translation_length / 2)

    @property
    def multiplier(self) -> float:
        r"""Multiplier :math:`\lambda = e^\ell` of the half-plane generator."""
        return math.exp(self.translation_length)

    @classmethod
    def from_disk_parameter(cls, a: float) -> "CyclicGroup":
        r"""Group generated by :math:`z \mapsto (z + a) / (1 + az)` in the disk.

        Raises:
            DomainError: if :math:`a \notin (0, 1)`

        """
        a = float(a)
        if not 0 < a < 1:
            raise DomainError(f"Disk parameter must be in (0, 1), got {a}.")
        return cls(math.log((1 + a) / (1 - a)), model="disk")

    @classmethod
    def from_multiplier(cls, multiplier: float) -> "CyclicGroup":
        r"""Group generated by :math:`w \mapsto \lambda w` in the half-plane.

        Raises:
            DomainError: if :math:`\lambda \le 1`

        Examples:
            >>> CyclicGroup.from_multiplier(2.0).model
            'halfplane'

        """
        multiplier = float(multiplier)
        if not (math.isfinite(multiplier) and multiplier > 1):
            raise DomainError(f"Multiplier must be above 1, got {multiplier}.")
        return cls(math.log(multiplier), model="halfplane")

    def apply(
        self,
        z: complex | HPoint | np.ndarray,
        k: int = 1,
    ) -> complex | np.ndarray:
        r"""Apply :math:`g^k` to point(s) of the model.

        In the disk :math:`g^k(z) = (z + a_k) / (1 + a_k z)`
        with :math:`a_k = \tanh(k \ell / 2)`.

        Args:
            z: point(s) of the model
            k: power of the generator

        Returns:
            image point(s)

        Raises:
            DomainError: if a point is not in the model

        Examples:
            >>> group = CyclicGroup.from_disk_parameter(0.5)
            >>> round(group.apply(0).real, 12)
            0.5

        """
        z = self.check(z)
        if self.model == "halfplane":
            image = z * math.exp(k * self.translation_length)
        else:
            a_k = math.tanh(k * self.translation_length / 2)
            image = (z + a_k) / (1 + a_k * z)
        if np.ndim(image) == 0:
            return complex(image)
        return image

    def as_map(self, k: int = 1) -> MapUnderTest:
        r"""Power :math:`g^k` of the generator as map under test.

        Examples:
            >>> group = CyclicGroup.from_multiplier(2.0)
            >>> round(group.as_map(2)(1j).imag, 12)
            4.0

        """
        k = int(k)

        def function(z):
            return self.apply(z, k)

        def inverse(z):
            return self.apply(z, -k)

        return MapUnderTest(
            f"generator^{k}",
            function,
            claimed_K=1.0,
            inverse=inverse,
            domain=self.model,
        )

    def check(self, z: complex | HPoint | np.ndarray) -> complex | np.ndarray:
        r"""Convert point(s) to complex and check they lie in the model.

        Raises:
            DomainError: if a point is not in the model

        """
        if self.model == "disk":
            return utils.check_in_disk(z)
        return utils.check_in_halfplane(z)

    def distance(
        self,
        x: complex | HPoint | np.ndarray,
        y: complex | HPoint | np.ndarray,
        *,
        window: int = None,
    ) -> float | np.ndarray:
        r"""Covering distance between lifts.

        See :func:`hypskew.quotient.quotient_dist`.
        Arrays are broadcast against each other.

        Args:
            x: lift(s) of the first point(s)
            y: lift(s) of the second point(s)
            window: search at least the powers
                :math:`|k| \le` ``window``

        Returns:
            distance(s) in the quotient

        """
        distance, _ = _orbit_minimum(
            self.to_halfplane(x),
            self.to_halfplane(y),
            self.translation_length,
            window=window,
        )
        if np.ndim(distance) == 0:
            return float(distance)
        return distance

    def injectivity_radius(
        self,
        z: complex | HPoint | np.ndarray,
    ) -> float | np.ndarray:
        r"""Half the displacement :math:`\rho(z, g z) / 2` of the generator.

        The ball of this radius about :math:`z`
        embeds into the quotient.
        It is smallest on the axis,
        where it equals :math:`\ell / 2`.

        Examples:
            >>> group = CyclicGroup.from_disk_parameter(0.5)
            >>> round(float(group.injectivity_radius(0)), 6)
            0.549306

        """
        w = self.to_halfplane(z)
        return dist_halfplane(w, w * self.multiplier) / 2

    def to_halfplane(self, z: complex | HPoint | np.ndarray) -> complex | np.ndarray:
        r"""Convert point(s) of the model to the half-plane."""
        z = self.check(z)
        if self.model == "disk":
            return cayley_to_halfplane(z)
        return z


class QuotientPoint:
    r"""Point of the quotient annulus.

    Args:
        representative: lift in the model of ``group``
        group: covering group

    Raises:
        DomainError: if ``representative`` is not in the model

    Examples:
        >>> group = CyclicGroup.from_disk_parameter(0.5)
        >>> QuotientPoint(0.25, group)
        QuotientPoint((0.25+0j), CyclicGroup(1.0986122886681098, model='disk'))

    """

    def __init__(
        self,
        representative: complex | HPoint,
        group: CyclicGroup,
    ):
        self.representative = complex(group.check(representative))
        r"""Lift in the model of the group."""
        self.group = group
        r"""Covering group."""

    def __repr__(self) -> str:  # noqa: D105
        return f"QuotientPoint({self.representative!r}, {self.group!r})"

    def lift(self, k: int) -> complex:
        r"""Lift :math:`g^k` applied to the representative."""
        return self.group.apply(self.representative, k)


class DescendedMap:
    r"""Map between quotients descended from an equivariant lift.

    Created by :func:`hypskew.quotient.descend_map`.

    Args:
        lift: map between the models
        source: covering group of the domain
        target: covering group of the range
        deviation: largest measured deviation from equivariance

    """

    def __init__(
        self,
        lift: MapUnderTest,
        source: CyclicGroup,
        target: CyclicGroup,
        deviation: float = 0.0,
    ):
        self.lift = lift
        r"""Map between the models."""
        self.source = source
        r"""Covering group of the domain."""
        self.target = target
        r"""Covering group of the range."""
        self.deviation = float(deviation)
        r"""Largest measured deviation from equivariance."""

    def __call__(self, p: QuotientPoint) -> QuotientPoint:
        r"""Apply map to a point of the source quotient.

        Raises:
            DomainError: if ``p`` belongs to another quotient

        """
        if p.group != self.source:
            raise DomainError("Point does not belong to the source quotient.")
        return QuotientPoint(self.lift(p.representative), self.target)

    def __repr__(self) -> str:  # noqa: D105
        return (
            f"DescendedMap("
            f"'{self.lift.name}', "
            f"{self.source!r}, "
            f"{self.target!r}"
            f")"
        )

    @property
    def claimed_K(self) -> float:  # noqa: N802
        r"""Claimed distortion constant of the lift."""
        return self.lift.claimed_K


def descend_map(
    f_lift: MapUnderTest,
    G: CyclicGroup,  # noqa: N803
    H: CyclicGroup,  # noqa: N803
    *,
    samples: int = 1000,
    seed: int = 0,
) -> DescendedMap:
    r"""Descend an equivariant map to the quotients.

    A map :math:`\tilde f` with :math:`\tilde f(g z) = h \tilde f(z)`
    for the generators :math:`g` of ``G`` and :math:`h` of ``H``
    induces a well-defined map
    from the quotient of ``G`` to the quotient of ``H``.
    Equivariance is checked
    on points sampled uniformly w.r.t. hyperbolic area
    in the ball of radius 3 about the basepoint,
    a hyperbolic deviation above 1e-9 is rejected.

    Args:
        f_lift: map in the model of ``G`` and ``H``
        G: covering group of the domain
        H: covering group of the range
        samples: number of sample points
        seed: seed of the random number generator

    Returns:
        descended map

    Raises:
        DomainError: if models of the map and the groups differ
        EquivarianceError: if equivariance fails on a sample

    Examples:
        >>> import hypskew
        >>> group = CyclicGroup.from_multiplier(2.0)
        >>> stretch = hypskew.make_map(hypskew.MapSpec("halfplane_stretch", [2]))
        >>> descend_map(stretch, group, CyclicGroup.from_multiplier(4.0))
        DescendedMap('halfplane_stretch(K=2)', ...)

    """
    if not f_lift.domain == G.model == H.model:
        raise DomainError(
            f"Map domain '{f_lift.domain}' and group models "
            f"'{G.model}', '{H.model}' must agree."
        )
    samples = utils.check_count(samples, "Samples")
    points = sample_ball(np.random.default_rng(seed), samples, radius=3.0)
    if G.model == "halfplane":
        points = cayley_to_halfplane(points)

    left = H.to_halfplane(f_lift(G.apply(points)))
    right = H.to_halfplane(H.apply(f_lift(points)))
    deviation = dist_halfplane(left, right)
    worst = int(np.argmax(deviation))
    if not deviation[worst] <= EQUIVARIANCE_TOLERANCE:
        raise EquivarianceError(
            f"Map '{f_lift.name}' is not equivariant, "
            f"deviation {deviation[worst]:g} "
            f"at {utils.format_point(points[worst])}.",
            sample=complex(points[worst]),
            deviation=float(deviation[worst]),
        )
    return DescendedMap(f_lift, G, H, float(deviation[worst]))


def nearest_lifts(
    p: QuotientPoint,
    q: QuotientPoint,
) -> tuple[float, list[int]]:
    r"""Covering distance and all minimizing powers of the generator.

    Powers :math:`k` whose distance
    :math:`\rho(x, g^k y)` agrees with the minimum
    up to a relative tolerance of 1e-12
    are all reported as ties.

    Args:
        p: first point
        q: second point

    Returns:
        distance and sorted minimizing powers

    Raises:
        DomainError: if the points belong to different quotients

    Examples:
        >>> group = CyclicGroup.from_disk_parameter(0.5)
        >>> distance, powers = nearest_lifts(
        ...     QuotientPoint(0, group),
        ...     QuotientPoint(0.25, group),
        ... )
        >>> round(distance, 6), powers
        (0.510826, [0])

    """
    group = _common_group(p, q)
    distance, powers = _orbit_minimum(
        group.to_halfplane(p.representative),
        group.to_halfplane(q.representative),
        group.translation_length,
        ties=True,
    )
    return float(distance), powers


def quotient_dist(p: QuotientPoint, q: QuotientPoint) -> float:
    r"""Distance in the quotient annulus.

    .. math::

        \rho_M(p, q) = \min_k \rho(x, g^k y)

    for lifts :math:`x` of :math:`p` and :math:`y` of :math:`q`.
    The search over :math:`k` stops once
    :math:`|k| \ell` exceeds the best distance
    plus the distances of :math:`x` and :math:`y`
    to the basepoint,
    since then
    :math:`\rho(x, g^k y) \ge |k| \ell - \rho(o, x) - \rho(o, y)`.

    Args:
        p: first point
        q: second point

    Returns:
        distance

    Raises:
        DomainError: if the points belong to different quotients

    Examples:
        >>> group = CyclicGroup.from_disk_parameter(0.5)
        >>> p = QuotientPoint(0, group)
        >>> round(quotient_dist(p, QuotientPoint(0.5, group)), 12)
        0.0

    """
    distance, _ = nearest_lifts(p, q)
    return distance


def quotient_qs_scan(
    fd: DescendedMap,
    triples: int = 1000,
    seed: int = 0,
    *,
    K: float = None,  # noqa: N803
    radius: float = 3.0,
    num_workers: int = 1,
    verbose: bool = False,
) -> DistortionReport:
    r"""Scan quasisymmetry ratios of a descended map.

    Triples are sampled
    as in :func:`hypskew.qs_ratio_scan`
    and measured with the covering distances
    of source and target.
    The least :math:`C`
    with ratio :math:`\le C \max\{t^K, t^{1/K}\}`
    is fitted,
    as well as the constant ``'C_lift'``
    of the lift on the same triples.
    Samples exceeding
    :math:`\tilde\eta(1) \tilde\eta(t)`
    with :math:`\tilde\eta` the fitted power function of the lift
    are counted as ``'violations'``.

    Args:
        fd: descended map
        triples: number of triples
        seed: seed of the random number generator
        K: distortion constant,
            defaults to ``fd.claimed_K``
        radius: radius of the sampling balls
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        report with fitted constants
        ``'C'``, ``'C_lift'``, ``'K'``, and ``'violations'``

    Raises:
        DomainError: if no distortion constant is available
        DegenerateError: if a quotient distance vanishes

    """
    if K is None:
        K = fd.claimed_K
    if K is None:
        raise DomainError(f"Map '{fd.lift.name}' has no claimed distortion constant.")
    K = float(K)
    u, v, w = sample_triples(np.random.default_rng(seed), triples, radius=radius)
    if fd.source.model == "halfplane":
        u, v, w = (cayley_to_halfplane(z) for z in (u, v, w))

    source = fd.source
    target = fd.target

    def job(u, v, w):
        fu, fv, fw = fd.lift(u), fd.lift(v), fd.lift(w)
        hu, hv, hw = (source.to_halfplane(z) for z in (u, v, w))
        gu, gv, gw = (target.to_halfplane(z) for z in (fu, fv, fw))
        near = source.distance(u, w)
        image_near = target.distance(fu, fw)
        if min(np.min(near), np.min(image_near)) < utils.DEGENERATE_LENGTH:
            raise DegenerateError("Sampled triple is degenerate in the quotient.")
        return (
            source.distance(u, v) / near,
            target.distance(fu, fv) / image_near,
            dist_halfplane(hu, hv) / dist_halfplane(hu, hw),
            dist_halfplane(gu, gv) / dist_halfplane(gu, gw),
        )

    results = utils.run_chunks(
        job, [u, v, w], "Scan quotient ratios", num_workers, verbose
    )
    t, ratio, t_lift, ratio_lift = (
        np.concatenate([r[i] for r in results]) for i in range(4)
    )

    normalized = ratio / power_eta(t, 1.0, K)
    C = float(np.max(normalized))  # noqa: N806
    C_lift = float(np.max(ratio_lift / power_eta(t_lift, 1.0, K)))  # noqa: N806
    bound = power_eta(1.0, C_lift, K) * power_eta(t, C_lift, K)
    violations = int(np.sum(ratio > bound * (1 + EQUIVARIANCE_TOLERANCE)))
    worst = int(np.argmax(normalized))
    return DistortionReport(
        "quotient-qs-scan",
        seed,
        locations=u,
        scales=t,
        values=ratio,
        fitted_constants={
            "C": C,
            "C_lift": C_lift,
            "K": K,
            "violations": violations,
        },
        details={
            "worst": {
                "u": utils.point_to_list(u[worst]),
                "v": utils.point_to_list(v[worst]),
                "w": utils.point_to_list(w[worst]),
                "t": float(t[worst]),
                "ratio": float(ratio[worst]),
            },
        },
    )


def quotient_skew(
    fd: DescendedMap,
    triangle: EqTriangle | Sequence[complex],
) -> float:
    r"""Skew of the image of a small equilateral triangle in the quotient.

    The triangle is given by lifts of its vertices
    in the disk,
    and converted to the half-plane
    if the source group uses that model.
    Its side has to be below :math:`\ell / 2`,
    so it embeds isometrically into the quotient.
    The skew is measured with the covering distance of the target.

    Args:
        fd: descended map
        triangle: equilateral triangle in the disk

    Returns:
        hyperbolic skew in the target quotient

    Raises:
        DomainError: if the side is not below :math:`\ell / 2`
        DegenerateError: if the image is degenerate

    Examples:
        >>> import hypskew
        >>> group = CyclicGroup.from_disk_parameter(0.5)
        >>> identity = hypskew.make_map(hypskew.MapSpec("identity"))
        >>> fd = descend_map(identity, group, group)
        >>> round(quotient_skew(fd, hypskew.equilateral_from_side(0.3)), 9)
        1.0

    """
    if not isinstance(triangle, EqTriangle):
        triangle = EqTriangle(*triangle)
    skews = _quotient_skews(fd, np.array([triangle.vertices]))
    return float(skews[0])


def quotient_skew_scan(
    fd: DescendedMap,
    triangles: int = 1000,
    seed: int = 0,
    *,
    radius: float = 2.0,
    num_workers: int = 1,
    verbose: bool = False,
) -> DistortionReport:
    r"""Scan image skew of small triangles in the quotient.

    Side lengths are drawn uniformly
    between 1% and 99% of :math:`\min\{1, \ell / 2\}`.
    Centroids are drawn uniformly
    w.r.t. hyperbolic area
    in the ball of radius ``radius`` about 0,
    orientations uniformly.

    Args:
        fd: descended map
        triangles: number of triangles
        seed: seed of the random number generator
        radius: radius of the sampling ball
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        report with samples centroid, side, and skew,
        and fitted constant ``'sigma'``

    """
    triangles = utils.check_count(triangles, "Number of triangles")
    rng = np.random.default_rng(seed)
    largest = min(1.0, fd.source.translation_length / 2)
    sides = rng.uniform(0.01 * largest, 0.99 * largest, size=triangles)
    centers = sample_ball(rng, triangles, radius=radius)
    angles = rng.uniform(0, 2 * math.pi, size=triangles)
    vertices = np.array(
        [
            equilateral_from_side(r, MobiusMap.placement(c, angle)).vertices
            for r, c, angle in zip(sides, centers, angles)
        ]
    )

    def job(vertices):
        return _quotient_skews(fd, vertices)

    results = utils.run_chunks(
        job, [vertices], "Scan quotient skew", num_workers, verbose
    )
    skews = np.concatenate(results)
    worst = int(np.argmax(skews))
    return DistortionReport(
        "quotient-skew",
        seed,
        locations=centers,
        scales=sides,
        values=skews,
        fitted_constants={"sigma": float(skews[worst])},
        details={
            "worst": {
                "vertices": [utils.point_to_list(z) for z in vertices[worst]],
                "side": float(sides[worst]),
                "skew": float(skews[worst]),
            },
        },
    )


def _common_group(p: QuotientPoint, q: QuotientPoint) -> CyclicGroup:
    if p.group != q.group:
        raise DomainError(
            f"Points belong to different quotients, {p.group!r} and {q.group!r}."
        )
    return p.group


def _orbit_minimum(
    x: complex | np.ndarray,
    y: complex | np.ndarray,
    translation_length: float,
    *,
    window: int = None,
    ties: bool = False,
) -> tuple[float | np.ndarray, list[int]]:
    # x, y are lifts in the half-plane,
    # the generator is w -> exp(l) w with basepoint i on its axis
    x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
    direct = dist_halfplane(x, y)
    reach = direct + dist_halfplane(1j, x) + dist_halfplane(1j, y)
    required = int(math.floor(np.max(reach) / translation_length)) + 1
    window = max(required, window or 0)
    powers = np.arange(-window, window + 1)
    shape = (len(powers),) + (1,) * x.ndim
    translated = y[np.newaxis] * np.exp(powers * translation_length).reshape(shape)
    distances = dist_halfplane(x[np.newaxis], translated)
    minimum = np.min(distances, axis=0)
    if not ties:
        return minimum, []
    tolerance = TIE_TOLERANCE * max(1.0, float(minimum))
    tied = [int(k) for k, d in zip(powers, distances) if d - minimum <= tolerance]
    return minimum, tied


def _quotient_skews(fd: DescendedMap, vertices: np.ndarray) -> np.ndarray:
    # vertices: (n, 3) lifts in the disk
    source = fd.source
    points = vertices
    if source.model == "halfplane":
        points = cayley_to_halfplane(vertices)
    shifted = np.roll(points, -1, axis=1)
    sides = source.distance(points, shifted)
    limit = source.translation_length / 2
    if np.max(sides) >= limit:
        raise DomainError(
            f"Triangle side {np.max(sides):g} must be below "
            f"half the translation length {limit:g}."
        )
    images = fd.lift(points)
    image_sides = fd.target.distance(images, np.roll(images, -1, axis=1))
    if np.min(image_sides) < utils.DEGENERATE_LENGTH:
        raise DegenerateError("Image of a triangle is degenerate in the quotient.")
    return np.max(image_sides, axis=1) / np.min(image_sides, axis=1)
