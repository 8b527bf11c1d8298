import dataclasses
import math

import numpy as np

import audeer

from hypskew.core import utils
from hypskew.core.chain import build_chain
from hypskew.core.chain import validate_chain
from hypskew.core.disk import dist_ball
from hypskew.core.disk import dist_disk
from hypskew.core.disk import sample_ball
from hypskew.core.distortion import euclidean_ratio
from hypskew.core.distortion import growth_bounds_fit
from hypskew.core.distortion import h_rho
from hypskew.core.distortion import hyperbolic_circle_point
from hypskew.core.distortion import hyperbolic_ratio
from hypskew.core.distortion import power_eta
from hypskew.core.distortion import qs_ratio_scan
from hypskew.core.distortion import skew_scan
from hypskew.core.maps import MapSpec
from hypskew.core.maps import make_map
from hypskew.core.mobius import MobiusMap
from hypskew.core.quotient import CyclicGroup
from hypskew.core.quotient import descend_map
from hypskew.core.quotient import quotient_skew_scan
from hypskew.core.rotation import RotationMap
from hypskew.core.rotation import beltrami_fd
from hypskew.core.rotation import beltrami_rot0_exact
from hypskew.core.rotation import rot0
from hypskew.core.triangle import delta_constant
from hypskew.core.triangle import equilateral_from_side
from hypskew.core.triangle import inscribed_radii
from hypskew.core.triangle import side_to_angle
from hypskew.core.triangle import skew_hyp


@dataclasses.dataclass(frozen=True)
class LemmaResult:
    r"""Outcome of one check of :func:`hypskew.cli.verify_lemmas`.

    Args:
        name: name of the check
        passed: all conditions hold
        detail: measured values

    """

    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        r"""Serialize result to a JSON compatible dictionary."""
        return dataclasses.asdict(self)


def check_angle_window(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Interior angles of triangles with side up to 1 lie in the seven-fold window.

    Angles on a grid of sides in :math:`(0, 1]`
    lie strictly in :math:`(2\pi/7, \pi/3)`,
    and the angle at side 1
    is :math:`\cos^{-1}((1 + \tanh^2(1/2))/2)`.

    """
    grid = np.linspace(1.0, 0.0, _count(1000, scale), endpoint=False)
    angles = np.array([side_to_angle(r) for r in grid])
    inside = bool(np.all((angles > 2 * math.pi / 7) & (angles < math.pi / 3)))
    expected = math.acos((1 + math.tanh(0.5) ** 2) / 2)
    endpoint = side_to_angle(1.0)
    passed = inside and abs(endpoint - expected) < 1e-5
    return LemmaResult(
        "angle-window",
        passed,
        f"window={inside} angle(1)={endpoint:.6f}",
    )


def check_boundary_twist(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Skew of the boundary twist grows towards the boundary.

    Triangles of side 0.1
    are centred on circles of modulus :math:`1 - 2^{-k}`,
    :math:`k = 1, \dots, 6`.

    """
    twist = make_map(MapSpec("boundary_twist"))
    suprema = [
        skew_scan(
            twist,
            [0.1],
            _count(16, scale),
            seed,
            center_modulus=1 - 2.0**-k,
        ).supremum
        for k in range(1, 7)
    ]
    increasing = all(a < b for a, b in zip(suprema, suprema[1:]))
    passed = increasing and suprema[-1] > 10
    levels = " ".join(f"{s:.3g}" for s in suprema)
    return LemmaResult("boundary-twist", passed, f"suprema={levels}")


def check_chain_length(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Chains reach random targets and respect the length bound.

    Sides are drawn from :math:`[0.2, 1]`,
    targets at distance up to 5
    from the centroid.

    """
    rng = np.random.default_rng(seed)
    count = _count(100, scale)
    failures = 0
    longest = 0
    for _ in range(count):
        r = rng.uniform(0.2, 1.0)
        center = sample_ball(rng, 1, radius=2.0)[0]
        placement = MobiusMap.placement(center, rng.uniform(0, 2 * math.pi))
        triangle = equilateral_from_side(r, placement)
        target = hyperbolic_circle_point(
            triangle.centroid,
            rng.uniform(0.01, 5.0),
            rng.uniform(0, 2 * math.pi),
        )
        chain = build_chain(triangle, target)
        longest = max(longest, len(chain))
        if not validate_chain(chain) or len(chain) > chain.bound:
            failures += 1
    return LemmaResult(
        "chain-length",
        failures == 0,
        f"chains={count} failures={failures} longest={longest}",
    )


def check_equilateral_construction(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Triples :math:`0, \tanh(r/2), \tanh(r/2) e^{i\alpha}` are equilateral."""
    grid = np.linspace(1.0, 0.0, _count(1000, scale), endpoint=False)
    worst = 0.0
    for r in grid:
        t = math.tanh(r / 2)
        vertices = np.array([0, t, t * np.exp(1j * side_to_angle(r))])
        sides = dist_disk(vertices, np.roll(vertices, -1))
        worst = max(worst, float(np.max(np.abs(sides - r))))
    return LemmaResult(
        "equilateral-construction",
        worst < 1e-10,
        f"deviation={worst:.3g}",
    )


def check_inscribed_radius(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Inscribed ball of equilateral triangles.

    The Euclidean radius :math:`R(t)`
    tends to :math:`2 - \sqrt{3}` for :math:`t \to 1`
    and :math:`R(t)/t` to :math:`1/2` for :math:`t \to 0`.
    The ball of radius :math:`2 \delta r` about the centroid
    lies in the triangle.

    """
    near_one, _ = inscribed_radii(1 - 1e-9)
    near_zero, _ = inscribed_radii(1e-6)
    limits = abs(near_one - (2 - math.sqrt(3))) < 1e-6
    limits = limits and abs(near_zero / 1e-6 - 0.5) < 1e-4
    delta = delta_constant()

    rng = np.random.default_rng(seed)
    violations = 0
    for _ in range(_count(100, scale)):
        r = rng.uniform(0.01, 1.0)
        center = sample_ball(rng, 1, radius=2.0)[0]
        placement = MobiusMap.placement(center, rng.uniform(0, 2 * math.pi))
        triangle = equilateral_from_side(r, placement)
        points = sample_ball(
            rng,
            _count(1000, scale),
            center=triangle.centroid,
            radius=2 * delta * r,
        )
        violations += int(np.sum(~triangle.contains(points)))
    return LemmaResult(
        "inscribed-radius",
        limits and delta >= 0.13 and violations == 0,
        f"delta={delta:.6f} violations={violations}",
    )


def check_isometry_controls(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Scans of Möbius maps report no distortion.

    Triples :math:`(0, -r, r)` under :math:`A_r`
    have Euclidean ratio :math:`(1 + r^2)/(1 - r^2)`
    and hyperbolic ratio 1.

    """
    mobius = make_map(MapSpec("mobius", [0.3, 0.4, -0.2]))
    values = [
        skew_scan(mobius, [0.5, 1.0], _count(16, scale), seed).supremum,
        h_rho(mobius, 0.3 + 0.2j, 0.7),
        qs_ratio_scan(mobius, _count(1000, scale), seed).fitted_constants["C"],
        growth_bounds_fit(mobius, _count(1000, scale), seed).fitted_constants["C1"],
    ]
    scans = max(abs(v - 1) for v in values)

    euclidean = 0.0
    hyperbolic = 0.0
    for r in (0.5, 0.9, 0.99):
        a_r = make_map(MapSpec("mobius", [r]))
        expected = (1 + r**2) / (1 - r**2)
        ratio = euclidean_ratio(a_r, 0, -r, r)
        euclidean = max(euclidean, abs(ratio - expected) / expected)
        hyperbolic = max(hyperbolic, abs(hyperbolic_ratio(a_r, 0, -r, r) - 1))
    return LemmaResult(
        "isometry-controls",
        scans < 1e-9 and euclidean < 1e-9 and hyperbolic < 1e-12,
        (
            f"scan-deviation={scans:.3g} "
            f"euclidean-deviation={euclidean:.3g} "
            f"hyperbolic-deviation={hyperbolic:.3g}"
        ),
    )


def check_metric_oracle(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Distances in the disk agree with distances in the 2-ball."""
    rng = np.random.default_rng(seed)
    count = _count(10_000, scale)
    z = sample_ball(rng, count, radius=3.0)
    w = sample_ball(rng, count, radius=3.0)
    disk = dist_disk(z, w)
    ball = dist_ball(
        np.stack([z.real, z.imag], axis=-1),
        np.stack([w.real, w.imag], axis=-1),
    )
    worst = float(np.max(np.abs(disk - ball)))
    return LemmaResult("metric-oracle", worst < 1e-12, f"deviation={worst:.3g}")


def check_power_quasisymmetry(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Radial stretch with K = 2 admits a seed-stable power bound.

    The constant :math:`C` of
    :math:`C \max\{t^2, t^{1/2}\}`
    is fitted for five seeds.
    A fresh set of triples
    must respect the largest fit inflated by 10%.

    """
    stretch = make_map(MapSpec("radial_stretch", [2]))
    triples = _count(100_000, scale)
    fits = [
        qs_ratio_scan(stretch, triples, seed + i).fitted_constants["C"]
        for i in range(5)
    ]
    spread = (max(fits) - min(fits)) / min(fits)
    holdout = qs_ratio_scan(stretch, triples, seed + 5)
    bound = 1.1 * max(fits) * power_eta(holdout.scales, 1.0, 2.0)
    violations = int(np.sum(holdout.values > bound))
    return LemmaResult(
        "power-quasisymmetry",
        math.isfinite(max(fits)) and spread < 0.05 and violations == 0,
        f"C={max(fits):.4f} spread={spread:.3%} violations={violations}",
    )


def check_quotient_suite(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Covering distance is a pseudometric and descends the annulus stretch.

    Checks symmetry,
    the triangle inequality,
    vanishing on fibers,
    invariance under the generator,
    and soundness of the truncated orbit search.
    The half-plane stretch with K = 2
    descends from :math:`\langle w \mapsto 2w \rangle`
    to :math:`\langle w \mapsto 4w \rangle`
    with finite quotient skew.

    """
    group = CyclicGroup.from_disk_parameter(0.5)
    rng = np.random.default_rng(seed)
    count = _count(1000, scale)
    x, y, z = (sample_ball(rng, count, radius=2.0) for _ in range(3))
    xy = group.distance(x, y)
    symmetry = float(np.max(np.abs(xy - group.distance(y, x))))
    slack = float(np.min(group.distance(x, z) + group.distance(z, y) - xy))
    fiber = float(np.max(group.distance(x, group.apply(x, 3))))
    invariance = float(np.max(np.abs(xy - group.distance(x, group.apply(y, -2)))))
    pairs = min(count, _count(100, scale))
    truncation = float(
        np.max(
            np.abs(
                group.distance(x[:pairs], y[:pairs])
                - group.distance(x[:pairs], y[:pairs], window=64)
            )
        )
    )
    pseudometric = (
        symmetry <= 1e-12
        and slack >= -1e-10
        and fiber <= 1e-12
        and invariance <= 1e-12
        and truncation <= 1e-12
    )

    stretch = make_map(MapSpec("halfplane_stretch", [2]))
    descended = descend_map(
        stretch,
        CyclicGroup.from_multiplier(2.0),
        CyclicGroup.from_multiplier(4.0),
        seed=seed,
    )
    sigma = quotient_skew_scan(descended, count, seed).fitted_constants["sigma"]
    return LemmaResult(
        "quotient-suite",
        pseudometric and math.isfinite(sigma),
        (
            f"symmetry={symmetry:.3g} slack={slack:.3g} "
            f"fiber={fiber:.3g} truncation={truncation:.3g} sigma={sigma:.4f}"
        ),
    )


def check_rotation_dilatation(seed: int, scale: float = 1.0) -> LemmaResult:
    r"""Dilatation of the rotation map and equilateral images.

    Finite differences of :func:`hypskew.rot0`
    match :math:`t^2 / \sqrt{3 - 2t^2}` on a grid with :math:`t \le 0.9`,
    and :math:`w, z, R_w(z)` is equilateral.

    """
    deviation = 0.0
    for t in np.linspace(0.9, 0.0, 20, endpoint=False):
        for theta in np.linspace(0, 2 * math.pi, 8, endpoint=False):
            z = t * np.exp(1j * theta)
            numeric = beltrami_fd(rot0, z)
            deviation = max(deviation, abs(numeric - beltrami_rot0_exact(z)))

    rng = np.random.default_rng(seed)
    skew = 0.0
    for _ in range(_count(1000, scale)):
        w, z = sample_ball(rng, 2, radius=3.0)
        if dist_disk(w, z) < 1e-6:
            continue
        skew = max(skew, abs(skew_hyp([w, z, RotationMap(w)(z)]) - 1))
    return LemmaResult(
        "rotation-dilatation",
        deviation < 1e-6 and skew < 1e-9,
        f"dilatation-deviation={deviation:.3g} skew-deviation={skew:.3g}",
    )


CHECKS = (
    check_metric_oracle,
    check_equilateral_construction,
    check_angle_window,
    check_inscribed_radius,
    check_rotation_dilatation,
    check_chain_length,
    check_isometry_controls,
    check_power_quasisymmetry,
    check_boundary_twist,
    check_quotient_suite,
)
r"""Checks run by :func:`hypskew.cli.verify_lemmas` in report order."""


def format_lemma_table(results: list[LemmaResult]) -> str:
    r"""Format results as pass/fail table.

    Examples:
        >>> print(format_lemma_table([LemmaResult("demo", True, "x=1")]))
        demo  PASS  x=1

    """
    width = max((len(result.name) for result in results), default=0)
    return "\n".join(
        f"{result.name:<{width}}  {'PASS' if result.passed else 'FAIL'}  "
        f"{result.detail}"
        for result in results
    )


def verify_lemmas(
    seed: int = 0,
    *,
    scale: float = 1.0,
    num_workers: int = 1,
    verbose: bool = False,
) -> list[LemmaResult]:
    r"""Run all geometric and distortion checks.

    A check raising an error
    is reported as failed
    with the error message as detail.

    Args:
        seed: seed of the random number generator
        scale: factor applied to all sample counts
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        results in the order of :data:`CHECKS`

    """
    scale = utils.check_positive(scale, "Scale")
    params = [([check, seed, scale], {}) for check in CHECKS]
    return audeer.run_tasks(
        _run_check,
        params=params,
        num_workers=num_workers,
        progress_bar=verbose,
        task_description="Verify lemmas",
    )


def _count(count: int, scale: float) -> int:
    return max(1, int(round(count * scale)))


def _run_check(check, seed: int, scale: float) -> LemmaResult:
    name = check.__name__.removeprefix("check_").replace("_", "-")
    try:
        return check(seed, scale)
    except Exception as ex:
        return LemmaResult(name, False, f"{type(ex).__name__}: {ex}")
