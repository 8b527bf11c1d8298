from collections.abc import Callable
from collections.abc import Sequence
import math

import numpy as np

import audeer

from hypskew.core import utils
from hypskew.core.disk import HPoint
from hypskew.core.disk import dist_disk
from hypskew.core.disk import sample_ball
from hypskew.core.errors import DegenerateError
from hypskew.core.errors import DomainError
from hypskew.core.errors import NumericError
from hypskew.core.report import DistortionReport
from hypskew.core.triangle import OMEGA
from hypskew.core.triangle import Triangle
from hypskew.core.triangle import side_to_vertex


MAX_CIRCLE_RADIUS = 35.0
r"""Largest radius of hyperbolic circles.

Larger circles are not resolved in double precision.

"""

MAX_TRIPLE_DISTANCE = 8.0
r"""Largest distance of the middle point of a sampled triple."""


def angle_perturbation_bound(
    t: float,
    xi: float = 0.01,
) -> float:
    r"""Deviation of a perturbed equilateral angle from :math:`2\pi/3`.

    The triangle with vertices
    :math:`v_1 = 0`,
    :math:`v_2 = \tanh(t/2) e^{i\pi/3}`,
    and :math:`v_3 = \bar{v}_2`
    has two sides of length :math:`t`
    meeting at an angle of :math:`2\pi/3`.
    If every vertex moves
    by less than :math:`t\xi`,
    the sides at :math:`w_1`
    lie in :math:`((1 - 2\xi) t, (1 + 2\xi) t)`
    and the opposite side
    differs by less than :math:`2\xi t`
    from :math:`\rho(v_2, v_3)`.
    The law of cosines is evaluated
    at all corners of these intervals,
    which encloses the angle at :math:`w_1`.

    Args:
        t: side length with :math:`0 < t \le 1`
        xi: relative perturbation size with :math:`0 < \xi < 1/2`

    Returns:
        bound :math:`\epsilon` on :math:`|2\pi/3 - \varphi|`

    Raises:
        DomainError: if ``t`` or ``xi`` is out of range

    Examples:
        >>> 0.1 < angle_perturbation_bound(1.0, 0.01) < 0.2
        True

    """
    t = utils.check_positive(t, "Side length")
    if t > 1:
        raise DomainError(f"Side length must be at most 1, got {t}.")
    if not 0 < xi < 0.5:
        raise DomainError(f"Perturbation size must be in (0, 0.5), got {xi}.")

    v2 = math.tanh(t / 2) * complex(math.cos(math.pi / 3), math.sin(math.pi / 3))
    opposite = float(dist_disk(v2, v2.conjugate()))
    sides = ((1 - 2 * xi) * t, (1 + 2 * xi) * t)
    opposites = (opposite - 2 * xi * t, opposite + 2 * xi * t)

    numerators = (
        math.cosh(sides[0]) ** 2 - math.cosh(opposites[1]),
        math.cosh(sides[1]) ** 2 - math.cosh(opposites[0]),
    )
    denominators = (math.sinh(sides[0]) ** 2, math.sinh(sides[1]) ** 2)
    cosines = [n / d for n in numerators for d in denominators]
    low = math.acos(min(1.0, max(-1.0, max(cosines))))
    high = math.acos(min(1.0, max(-1.0, min(cosines))))
    target = 2 * math.pi / 3
    return max(abs(low - target), abs(high - target))


def euclidean_ratio(
    f: Callable,
    u: complex,
    v: complex,
    w: complex,
) -> float:
    r"""Euclidean three-point ratio :math:`|fu - fv| / |fu - fw|`."""
    fu, fv, fw = f(np.array([u, v, w], dtype=complex))
    return float(abs(fu - fv) / abs(fu - fw))


def growth_bounds_fit(
    f: Callable,
    pairs: int = 1000,
    seed: int = 0,
    *,
    K: float = None,  # noqa: N803
    radius: float = 3.0,
    num_workers: int = 1,
    verbose: bool = False,
) -> DistortionReport:
    r"""Fit growth constants of a map.

    For sampled pairs :math:`(x, y)`
    the least :math:`C_1` and greatest :math:`C_2` with

    .. math::

        C_2 \min\{\rho^K, \rho\}
        \le \rho(f x, f y) \le
        C_1 \max\{\rho^{1/K}, \rho\},
        \quad \rho = \rho(x, y)

    are determined.
    :math:`x` is drawn uniformly
    w.r.t. hyperbolic area
    in the ball of radius ``radius`` about 0,
    :math:`y` at a log-uniform distance
    between 0.01 and 5 from :math:`x`.

    Args:
        f: vectorized map of the disk
        pairs: number of pairs
        seed: seed of the random number generator
        K: distortion constant,
            defaults to ``f.claimed_K``
        radius: radius of the sampling ball
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        report with fitted constants ``'C1'``, ``'C2'``, ``'K'``,
        samples hold :math:`x`,
        :math:`\rho(x, y)`,
        and :math:`\rho(fx, fy)`

    Raises:
        DomainError: if no distortion constant is available

    """
    K = _claimed_K(f, K)
    pairs = utils.check_count(pairs, "Number of pairs")
    rng = np.random.default_rng(seed)
    x = sample_ball(rng, pairs, radius=radius)
    distance = np.exp(rng.uniform(math.log(0.01), math.log(5.0), size=pairs))
    theta = rng.uniform(0, 2 * math.pi, size=pairs)
    y = hyperbolic_circle_point(x, distance, theta)

    def job(x, y):
        return dist_disk(x, y), dist_disk(f(x), f(y))

    results = utils.run_chunks(
        job, [x, y], "Fit growth bounds", num_workers, verbose
    )
    rho = np.concatenate([r[0] for r in results])
    image = np.concatenate([r[1] for r in results])

    upper = image / np.maximum(rho ** (1 / K), rho)
    lower = image / np.minimum(rho**K, rho)
    i_upper = int(np.argmax(upper))
    i_lower = int(np.argmin(lower))
    return DistortionReport(
        "growth-fit",
        seed,
        locations=x,
        scales=rho,
        values=image,
        fitted_constants={
            "C1": float(upper[i_upper]),
            "C2": float(lower[i_lower]),
            "K": K,
        },
        details={
            "argmax": _pair_details(x[i_upper], y[i_upper], rho[i_upper]),
            "argmin": _pair_details(x[i_lower], y[i_lower], rho[i_lower]),
        },
    )


def growth_eta_bound(
    t: float | np.ndarray,
    C1: float,  # noqa: N803
    C2: float,  # noqa: N803
    K: float,  # noqa: N803
) -> float | np.ndarray:
    r"""Large-scale distortion bound from growth constants.

    .. math::

        \max\{C_1 t^K / C_2, C_1 t^{1/K} / C_2\}

    with :math:`C_1`, :math:`C_2`, :math:`K`
    as fitted by :func:`hypskew.growth_bounds_fit`.
    Empirical values of :func:`hypskew.ratio_bound_scan`
    at large radii stay below it.

    Raises:
        DomainError: if ``C2`` is not positive

    Examples:
        >>> growth_eta_bound(4.0, 2.0, 1.0, 2.0)
        32.0

    """
    C2 = utils.check_positive(C2, "Constant C2")
    return power_eta(t, C1 / C2, K)


def h_euclid(
    f: Callable,
    x: complex | HPoint,
    r: float,
    samples: int = 256,
) -> float:
    r"""Euclidean linear distortion.

    Ratio of largest and smallest Euclidean distance
    :math:`|f(x) - f(y)|`
    over sampled :math:`y` on the Euclidean circle
    :math:`|y - x| = r`.

    Raises:
        DomainError: if the circle leaves the disk
        DegenerateError: if an image distance vanishes

    """
    x = complex(utils.check_in_disk(x))
    r = utils.check_positive(r, "Radius")
    if abs(x) + r >= 1:
        raise DomainError(f"Circle of radius {r} about {x} leaves the disk.")
    theta = np.linspace(
        0, 2 * math.pi, utils.check_count(samples, "Samples", 8), endpoint=False
    )
    distances = np.abs(f(x + r * np.exp(1j * theta)) - f(np.array([x]))[0])
    if np.min(distances) < utils.DEGENERATE_LENGTH:
        raise DegenerateError(f"Image of circle about {x} degenerates.")
    return float(np.max(distances) / np.min(distances))


def h_rho(
    f: Callable,
    x: complex | HPoint,
    r: float,
    samples: int = 256,
    *,
    refine: int = 30,
) -> float:
    r"""Hyperbolic linear distortion :math:`H_\rho(x, r)`.

    Ratio of largest and smallest distance
    :math:`\rho(f(x), f(y))`
    over :math:`y` on the hyperbolic circle
    :math:`\rho(x, y) = r`.
    The circle is sampled at ``samples`` angles,
    the discrete extrema are refined
    by golden-section search
    between the neighboring samples.

    Args:
        f: vectorized map of the disk
        x: center of the circle
        r: radius of the circle
        samples: number of angles,
            at least 8
        refine: number of golden-section iterations

    Returns:
        linear distortion, at least 1

    Raises:
        DegenerateError: if an image distance is below ``1e-14``

    Examples:
        >>> import hypskew
        >>> mobius = hypskew.MobiusMap(0.3, 0.2j)
        >>> round(h_rho(mobius, 0.1, 0.5), 9)
        1.0

    """
    x = complex(utils.check_in_disk(x))
    center = f(np.array([x]))[0]
    largest, smallest = _circle_extrema(
        _image_circle_distance(f, center, x, r),
        utils.check_count(samples, "Samples", 8),
        refine,
    )
    if smallest < utils.DEGENERATE_LENGTH:
        raise DegenerateError(
            f"Image of circle of radius {r} about {utils.format_point(x)} "
            f"degenerates."
        )
    return largest / smallest


def h_rho_scan(
    f: Callable,
    r_grid: Sequence[float],
    points: int = 16,
    seed: int = 0,
    *,
    radius: float = 3.0,
    samples: int = 256,
    num_workers: int = 1,
    verbose: bool = False,
) -> DistortionReport:
    r"""Linear distortion at random centers for every radius.

    Centers are drawn uniformly
    w.r.t. hyperbolic area
    in the ball of radius ``radius`` about 0.

    Args:
        f: vectorized map of the disk
        r_grid: circle radii
        points: number of centers per radius
        seed: seed of the random number generator
        radius: radius of the sampling ball
        samples: number of angles per circle
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        report with samples
        center, radius, and :math:`H_\rho`

    """
    r_grid = [utils.check_positive(r, "Radius") for r in r_grid]
    points = utils.check_count(points, "Number of points")
    rng = np.random.default_rng(seed)
    centers = sample_ball(rng, len(r_grid) * points, radius=radius)
    scales = np.repeat(r_grid, points)
    values = audeer.run_tasks(
        h_rho,
        params=[([f, x, r, samples], {}) for x, r in zip(centers, scales)],
        num_workers=num_workers,
        progress_bar=verbose,
        task_description="Scan linear distortion",
    )
    return DistortionReport(
        "hrho-scan",
        seed,
        locations=centers,
        scales=scales,
        values=values,
    )


def hyperbolic_circle_point(
    x: complex | HPoint | np.ndarray,
    r: float | np.ndarray,
    theta: float | np.ndarray,
) -> complex | np.ndarray:
    r"""Point on the hyperbolic circle of radius ``r`` about ``x``.

    Equals :math:`A_x^{-1}(\tanh(r/2) e^{i\theta})`.
    Arguments are broadcast.

    Args:
        x: center(s)
        r: radius (radii)
        theta: angle(s)

    Returns:
        point(s) on the circle(s)

    Raises:
        DomainError: if a radius is not positive
        NumericError: if a radius exceeds 35

    Examples:
        >>> round(abs(hyperbolic_circle_point(0, math.log(3), 0)), 12)
        0.5

    """
    x = utils.check_in_disk(x, name="Center")
    r = np.asarray(r, dtype=float)
    if not np.all(r > 0):
        raise DomainError("Circle radius must be positive.")
    if np.any(r > MAX_CIRCLE_RADIUS):
        raise NumericError(
            f"Circle radius above {MAX_CIRCLE_RADIUS} saturates at the boundary."
        )
    z = np.tanh(r / 2) * np.exp(1j * np.asarray(theta, dtype=float))
    point = (z + x) / (1 + np.conj(x) * z)
    if np.ndim(point) == 0:
        return complex(point)
    return point


def hyperbolic_ratio(
    f: Callable,
    u: complex,
    v: complex,
    w: complex,
) -> float:
    r"""Hyperbolic three-point ratio :math:`\rho(fu, fv) / \rho(fu, fw)`."""
    fu, fv, fw = f(np.array([u, v, w], dtype=complex))
    return float(dist_disk(fu, fv) / dist_disk(fu, fw))


def image_skew(
    f: Callable,
    triangle: Triangle,
) -> float:
    r"""Hyperbolic skew of the image of a triangle's vertices.

    Raises:
        DegenerateError: if two image vertices coincide

    """
    images = f(np.array(triangle.vertices))
    sides = dist_disk(images, np.roll(images, -1))
    if np.min(sides) < utils.DEGENERATE_LENGTH:
        raise DegenerateError(f"Image of {triangle} is degenerate.")
    return float(np.max(sides) / np.min(sides))


def power_eta(
    t: float | np.ndarray,
    C: float,  # noqa: N803
    K: float,  # noqa: N803
) -> float | np.ndarray:
    r"""Power distortion function :math:`\eta(t) = C \max\{t^K, t^{1/K}\}`.

    Examples:
        >>> power_eta(4.0, 1.0, 2.0)
        16.0
        >>> power_eta(0.25, 1.0, 2.0)
        0.5

    """
    t = np.asarray(t, dtype=float)
    value = C * np.maximum(t**K, t ** (1 / K))
    if np.ndim(value) == 0:
        return float(value)
    return value


def qs_ratio_scan(
    f: Callable,
    triples: int = 1000,
    seed: int = 0,
    *,
    K: float = None,  # noqa: N803
    radius: float = 3.0,
    num_workers: int = 1,
    verbose: bool = False,
) -> DistortionReport:
    r"""Scan quasisymmetry ratios of a map.

    For sampled triples :math:`(u, v, w)`
    the ratio :math:`\rho(fu, fv) / \rho(fu, fw)`
    is compared with :math:`t = \rho(u, v) / \rho(u, w)`.
    The least :math:`C`
    with ratio :math:`\le C \max\{t^K, t^{1/K}\}`
    is fitted.

    A center :math:`c` is drawn
    uniformly w.r.t. hyperbolic area
    in the ball of radius ``radius`` about 0,
    :math:`u` and :math:`w` in the ball of the same radius about :math:`c`.
    :math:`v` lies on the geodesic ray from :math:`u` through :math:`w`
    at :math:`s \rho(u, w)`
    with :math:`s` log-uniform in :math:`[1/20, 20]`,
    which covers :math:`t < 1` and :math:`t > 1`.

    Args:
        f: vectorized map of the disk
        triples: number of triples
        seed: seed of the random number generator
        K: distortion constant,
            defaults to ``f.claimed_K``
        radius: radius of the sampling balls
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        report with fitted constants ``'C'`` and ``'K'``,
        samples hold :math:`u`, :math:`t`, and the ratio

    Raises:
        DomainError: if no distortion constant is available
        DegenerateError: if an image distance vanishes

    Examples:
        >>> import hypskew
        >>> mobius = hypskew.make_map(hypskew.MapSpec("mobius", [0.5]))
        >>> report = qs_ratio_scan(mobius, 100)
        >>> round(report.fitted_constants["C"], 9)
        1.0

    """
    K = _claimed_K(f, K)
    u, v, w = sample_triples(np.random.default_rng(seed), triples, radius=radius)

    def job(u, v, w):
        fu, fv, fw = f(u), f(v), f(w)
        near = dist_disk(fu, fw)
        if np.min(near) < utils.DEGENERATE_LENGTH:
            raise DegenerateError("Image of a sampled triple is degenerate.")
        return dist_disk(u, v) / dist_disk(u, w), dist_disk(fu, fv) / near

    results = utils.run_chunks(job, [u, v, w], "Scan ratios", num_workers, verbose)
    t = np.concatenate([r[0] for r in results])
    ratio = np.concatenate([r[1] for r in results])

    normalized = ratio / power_eta(t, 1.0, K)
    worst = int(np.argmax(normalized))
    return DistortionReport(
        "qs-scan",
        seed,
        locations=u,
        scales=t,
        values=ratio,
        fitted_constants={"C": float(normalized[worst]), "K": K},
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


def ratio_bound_scan(
    f: Callable,
    t: float,
    r_grid: Sequence[float],
    samples: int = 256,
    *,
    refine: int = 30,
) -> DistortionReport:
    r"""Scan :math:`L_\rho(0, tr) / \ell_\rho(0, r)` for a map fixing 0.

    :math:`L_\rho(0, s)` is the largest,
    :math:`\ell_\rho(0, s)` the smallest
    distance of :math:`f(0)` to the image
    of the circle of radius :math:`s` about 0.
    The supremum is an empirical value
    of the distortion function at ``t``.

    Args:
        f: vectorized map of the disk with :math:`f(0) = 0`
        t: ratio of radii
        r_grid: radii :math:`r`
        samples: number of angles per circle
        refine: number of golden-section iterations

    Returns:
        report with samples radius and ratio,
        and fitted constant ``'eta'``

    Raises:
        DomainError: if :math:`|f(0)| > 10^{-12}`

    """
    t = utils.check_positive(t, "Ratio")
    r_grid = [utils.check_positive(r, "Radius") for r in r_grid]
    origin = f(np.array([0j]))[0]
    if abs(origin) > 1e-12:
        raise DomainError(f"Map does not fix 0, f(0) = {utils.format_point(origin)}.")
    samples = utils.check_count(samples, "Samples", 8)

    values = []
    for r in r_grid:
        outer = _image_circle_distance(f, origin, 0j, t * r)
        inner = _image_circle_distance(f, origin, 0j, r)
        largest, _ = _circle_extrema(outer, samples, refine)
        _, smallest = _circle_extrema(inner, samples, refine)
        values.append(largest / smallest)

    report = DistortionReport(
        "ratio-bound",
        0,
        locations=np.zeros(len(r_grid)),
        scales=r_grid,
        values=values,
    )
    report.fitted_constants = {"t": t, "eta": report.supremum}
    return report


def sample_triples(
    rng: np.random.Generator,
    triples: int,
    *,
    radius: float = 3.0,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    r"""Sample point triples for quasisymmetry scans.

    See :func:`hypskew.qs_ratio_scan`.

    Returns:
        arrays :math:`u`, :math:`v`, :math:`w`

    """
    triples = utils.check_count(triples, "Number of triples")
    centers = sample_ball(rng, triples, radius=radius)
    u = _sample_around(rng, centers, radius)
    w = _sample_around(rng, centers, radius)
    scale = np.exp(rng.uniform(math.log(1 / 20), math.log(20), size=triples))
    distance = np.minimum(scale * dist_disk(u, w), MAX_TRIPLE_DISTANCE)
    moved = (w - u) / (1 - np.conj(u) * w)
    v = hyperbolic_circle_point(u, distance, np.angle(moved))
    return u, v, w


def skew_scan(
    f: Callable,
    r_grid: Sequence[float],
    placements: int = 16,
    seed: int = 0,
    *,
    radius: float = 3.0,
    center_modulus: float = None,
    num_workers: int = 1,
    verbose: bool = False,
) -> DistortionReport:
    r"""Hyperbolic skew of images of equilateral triangles.

    For every side length
    ``placements`` equilateral triangles
    are placed at random centers
    with random rotation.
    The supremum of the image skew
    is an empirical lower bound
    for the skew constant :math:`\sigma` of the map.

    Args:
        f: vectorized map of the disk
        r_grid: side lengths
        placements: number of triangles per side length
        seed: seed of the random number generator
        radius: centers are drawn uniformly
            w.r.t. hyperbolic area
            in the ball of this radius about 0
        center_modulus: if given,
            centers are drawn on the circle of this Euclidean radius
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        report with samples centroid, side length, and image skew

    Raises:
        DegenerateError: if an image triangle is degenerate

    Examples:
        >>> import hypskew
        >>> identity = hypskew.make_map(hypskew.MapSpec("identity"))
        >>> round(skew_scan(identity, [0.5, 1.0], 4).supremum, 9)
        1.0

    """
    r_grid = [utils.check_positive(r, "Side length") for r in r_grid]
    placements = utils.check_count(placements, "Number of placements")
    rng = np.random.default_rng(seed)
    count = len(r_grid) * placements
    if center_modulus is None:
        centers = sample_ball(rng, count, radius=radius)
    else:
        if not 0 <= center_modulus < 1:
            raise DomainError(
                f"Center modulus must be in [0, 1), got {center_modulus}."
            )
        centers = center_modulus * np.exp(1j * rng.uniform(0, 2 * math.pi, count))
    angles = rng.uniform(0, 2 * math.pi, size=count)
    scales = np.repeat(r_grid, placements)

    def job(r, centers, angles):
        t = side_to_vertex(r)
        canonical = t * np.array([1, OMEGA, OMEGA.conjugate()])
        rotated = np.exp(1j * angles)[:, np.newaxis] * canonical
        c = centers[:, np.newaxis]
        vertices = (rotated + c) / (1 + np.conj(c) * rotated)
        images = f(vertices.ravel()).reshape(vertices.shape)
        sides = dist_disk(images, np.roll(images, -1, axis=1))
        shortest = np.min(sides, axis=1)
        if np.min(shortest) < utils.DEGENERATE_LENGTH:
            index = int(np.argmin(shortest))
            raise DegenerateError(
                f"Image of triangle with side {r} centred at "
                f"{utils.format_point(centers[index])} is degenerate."
            )
        return np.max(sides, axis=1) / shortest

    params = [
        ([r, centers[i : i + placements], angles[i : i + placements]], {})
        for r, i in zip(r_grid, range(0, count, placements))
    ]
    values = audeer.run_tasks(
        job,
        params=params,
        num_workers=num_workers,
        progress_bar=verbose,
        task_description="Scan skew",
    )
    values = np.concatenate(values)
    worst = int(np.argmax(values))
    return DistortionReport(
        "skew-scan",
        seed,
        locations=centers,
        scales=scales,
        values=values,
        details={
            "worst": {
                "center": utils.point_to_list(centers[worst]),
                "angle": float(angles[worst]),
                "side": float(scales[worst]),
                "skew": float(values[worst]),
            },
        },
    )


def _circle_extrema(
    distance: Callable[[np.ndarray], np.ndarray],
    samples: int,
    refine: int,
) -> tuple[float, float]:
    theta = np.linspace(0, 2 * math.pi, samples, endpoint=False)
    values = distance(theta)
    step = 2 * math.pi / samples

    def scalar(angle):
        return float(distance(np.array([angle]))[0])

    i_max = int(np.argmax(values))
    i_min = int(np.argmin(values))
    _, largest = utils.golden_section_search(
        scalar,
        theta[i_max] - step,
        theta[i_max] + step,
        iterations=refine,
        maximize=True,
    )
    _, smallest = utils.golden_section_search(
        scalar,
        theta[i_min] - step,
        theta[i_min] + step,
        iterations=refine,
    )
    return max(float(values[i_max]), largest), min(float(values[i_min]), smallest)


def _claimed_K(f: Callable, K: float) -> float:  # noqa: N802, N803
    if K is None:
        K = getattr(f, "claimed_K", None)
    if K is None:
        raise DomainError(
            f"Map '{getattr(f, 'name', f)}' has no claimed distortion constant K."
        )
    K = float(K)
    if K < 1:
        raise DomainError(f"Distortion constant K must be at least 1, got {K}.")
    return K


def _image_circle_distance(
    f: Callable,
    image: complex,
    x: complex,
    r: float,
) -> Callable[[np.ndarray], np.ndarray]:
    def distance(theta):
        return dist_disk(image, f(hyperbolic_circle_point(x, r, theta)))

    return distance


def _pair_details(x: complex, y: complex, rho: float) -> dict:
    return {
        "x": utils.point_to_list(x),
        "y": utils.point_to_list(y),
        "rho": float(rho),
    }


def _sample_around(
    rng: np.random.Generator,
    centers: np.ndarray,
    radius: float,
) -> np.ndarray:
    points = sample_ball(rng, len(centers), radius=radius)
    return (points + centers) / (1 + np.conj(centers) * points)
