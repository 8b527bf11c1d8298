import dataclasses
import json
import math
import os

import numpy as np

import audeer

from hypskew.core import utils
from hypskew.core.chain import build_chain
from hypskew.core.chain import validate_chain
from hypskew.core.disk import cayley_to_disk
from hypskew.core.disk import cayley_to_halfplane
from hypskew.core.distortion import growth_bounds_fit
from hypskew.core.distortion import h_rho_scan
from hypskew.core.distortion import hyperbolic_circle_point
from hypskew.core.distortion import qs_ratio_scan
from hypskew.core.distortion import skew_scan
from hypskew.core.errors import ConfigError
from hypskew.core.lemmas import format_lemma_table
from hypskew.core.lemmas import verify_lemmas
from hypskew.core.maps import MapSpec
from hypskew.core.maps import make_map
from hypskew.core.mobius import MobiusMap
from hypskew.core.quotient import CyclicGroup
from hypskew.core.quotient import descend_map
from hypskew.core.quotient import quotient_qs_scan
from hypskew.core.quotient import quotient_skew_scan
from hypskew.core.report import DistortionReport
from hypskew.core.svg import Scene
from hypskew.core.svg import color_ramp
from hypskew.core.triangle import equilateral_from_side


EXPERIMENTS = (
    "chain-demo",
    "growth-fit",
    "hrho-scan",
    "qs-scan",
    "quotient-demo",
    "skew-scan",
    "verify-lemmas",
)
r"""Supported experiment kinds."""

MAX_RENDERED_POINTS = 500
r"""Largest number of sample locations drawn in a figure."""


@dataclasses.dataclass
class ExperimentConfig:
    r"""Configuration of an experiment.

    Parsed from a JSON object
    whose keys are the field names.
    Only ``experiment`` is required.

    Args:
        experiment: kind of experiment,
            see :data:`EXPERIMENTS`
        map: map under test
        seed: seed of the random number generator
        output: output directory
        render: write figures
        r_grid: side lengths or circle radii
        samples: number of placements, points, triples,
            pairs, or triangles per scan
        radius: radius of the sampling ball
        center_modulus: if given,
            ``skew-scan`` places triangle centers
            on the circle of this Euclidean radius
        circle_samples: number of angles per circle
        K: distortion constant overriding the claimed one
        side: side length of the first chain triangle
        target_distance: distance of the chain target
            to the first triangle's centroid
        multiplier: multiplier of the source group
            of ``quotient-demo``
        scale: factor applied to all sample counts
            of ``verify-lemmas``

    Raises:
        ConfigError: if a field is invalid

    Examples:
        >>> map_spec = {"kind": "mobius", "parameters": [0.5]}
        >>> config = {"experiment": "skew-scan", "map": map_spec}
        >>> config = ExperimentConfig.from_dict(config)
        >>> config.map
        MapSpec('mobius', [0.5])

    """

    experiment: str
    map: MapSpec = dataclasses.field(default_factory=lambda: MapSpec("identity"))
    seed: int = 0
    output: str = "hypskew-output"
    render: bool = False
    r_grid: list[float] = dataclasses.field(default_factory=lambda: [0.25, 0.5, 1.0])
    samples: int = 16
    radius: float = 3.0
    center_modulus: float = None
    circle_samples: int = 256
    K: float = None
    side: float = 0.5
    target_distance: float = 2.0
    multiplier: float = 2.0
    scale: float = 1.0

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(
                f"Experiment must be one of {EXPERIMENTS}, got '{self.experiment}'."
            )
        if not isinstance(self.map, MapSpec):
            raise ConfigError("Field 'map' must be a map specification.")
        _check_type("seed", self.seed, int)
        _check_type("output", self.output, str)
        _check_type("render", self.render, bool)
        _check_type("samples", self.samples, int)
        _check_type("circle_samples", self.circle_samples, int)
        if not isinstance(self.r_grid, list) or not self.r_grid:
            raise ConfigError("Field 'r_grid' must be a non-empty list of numbers.")
        for value in self.r_grid:
            _check_type("r_grid", value, float)
        for name in ("radius", "side", "target_distance", "multiplier", "scale"):
            _check_type(name, getattr(self, name), float)
        if self.K is not None:
            _check_type("K", self.K, float)
        if self.center_modulus is not None:
            _check_type("center_modulus", self.center_modulus, float)
            if not 0 <= self.center_modulus < 1:
                raise ConfigError(
                    f"Field 'center_modulus' must be in [0, 1), "
                    f"got {self.center_modulus}."
                )
        if self.seed < 0:
            raise ConfigError(f"Field 'seed' must not be negative, got {self.seed}.")
        if self.samples < 1 or self.circle_samples < 8:
            raise ConfigError(
                "Fields 'samples' and 'circle_samples' "
                "must be at least 1 and 8."
            )

    @classmethod
    def from_dict(cls, config: dict) -> "ExperimentConfig":
        r"""Create configuration from a dictionary.

        Raises:
            ConfigError: if keys are unknown or missing,
                or values are invalid

        """
        if not isinstance(config, dict):
            raise ConfigError("Experiment config must be a JSON object.")
        names = {field.name for field in dataclasses.fields(cls)}
        unknown = set(config) - names
        if unknown:
            raise ConfigError(f"Unknown config fields: {sorted(unknown)}.")
        if "experiment" not in config:
            raise ConfigError("Experiment config needs an 'experiment'.")
        config = dict(config)
        if "map" in config:
            config["map"] = MapSpec.from_dict(config["map"])
        return cls(**config)

    @classmethod
    def from_file(cls, path: str) -> "ExperimentConfig":
        r"""Read configuration from a JSON file.

        Raises:
            ConfigError: if the file cannot be read or parsed,
                or the configuration is invalid

        """
        path = audeer.path(path)
        try:
            with open(path, encoding="utf-8") as fp:
                config = json.load(fp)
        except (OSError, json.JSONDecodeError) as ex:
            raise ConfigError(f"Cannot read config file '{path}': {ex}") from ex
        return cls.from_dict(config)

    def to_dict(self) -> dict:
        r"""Serialize configuration to a JSON compatible dictionary."""
        config = dataclasses.asdict(self)
        config["map"] = self.map.to_dict()
        return config


def run_experiment(
    config: ExperimentConfig,
    *,
    num_workers: int = 1,
    verbose: bool = False,
) -> tuple[DistortionReport, dict[str, str]]:
    r"""Run experiment and write its artifacts.

    Writes :file:`report.json`
    and :file:`report.csv`
    to the output directory,
    and figures to :file:`figures/`
    if rendering is requested.
    Artifacts only depend on the configuration.

    Args:
        config: experiment configuration
        num_workers: number of parallel jobs
        verbose: show progress bar

    Returns:
        report and paths of written artifacts

    Raises:
        ExperimentError: if an operation of the experiment fails

    """
    runner = _RUNNERS[config.experiment]
    report, scene = utils.call_operation(
        runner,
        config,
        num_workers=num_workers,
        verbose=verbose,
        operation=config.experiment,
    )
    report.details["config"] = config.to_dict()

    root = audeer.mkdir(config.output)
    paths = {
        "json": report.to_json(os.path.join(root, "report.json")),
        "csv": report.to_csv(os.path.join(root, "report.csv")),
    }
    if config.render:
        name = config.experiment.replace("-", "_")
        paths["svg"] = scene.write(os.path.join(root, "figures", f"{name}.svg"))
    if verbose:
        print(audeer.format_display_message(f"Wrote artifacts to {root}"))
    return report, paths


def _chain_demo(
    config: ExperimentConfig,
    *,
    num_workers: int,
    verbose: bool,
) -> tuple[DistortionReport, Scene]:
    rng = np.random.default_rng(config.seed)
    triangle = equilateral_from_side(config.side)
    target = hyperbolic_circle_point(
        0j,
        config.target_distance,
        rng.uniform(0, 2 * math.pi),
    )
    chain = build_chain(triangle, target)
    validation = validate_chain(chain)
    report = DistortionReport(
        "chain-demo",
        config.seed,
        locations=[t.centroid for t in chain.triangles],
        scales=[chain.side] * len(chain),
        values=chain.distances,
        fitted_constants={"length": len(chain), "bound": chain.bound},
        details={
            "chain": chain.to_dict(),
            "validation": dataclasses.asdict(validation),
        },
    )
    scene = Scene()
    scene.add_chain(chain)
    return report, scene


def _growth_fit(
    config: ExperimentConfig,
    *,
    num_workers: int,
    verbose: bool,
) -> tuple[DistortionReport, Scene]:
    report = growth_bounds_fit(
        make_map(config.map),
        config.samples,
        config.seed,
        K=config.K,
        radius=config.radius,
        num_workers=num_workers,
        verbose=verbose,
    )
    return report, _sample_scene(report)


def _hrho_scan(
    config: ExperimentConfig,
    *,
    num_workers: int,
    verbose: bool,
) -> tuple[DistortionReport, Scene]:
    report = h_rho_scan(
        make_map(config.map),
        config.r_grid,
        config.samples,
        config.seed,
        radius=config.radius,
        samples=config.circle_samples,
        num_workers=num_workers,
        verbose=verbose,
    )
    return report, _sample_scene(report)


def _qs_scan(
    config: ExperimentConfig,
    *,
    num_workers: int,
    verbose: bool,
) -> tuple[DistortionReport, Scene]:
    report = qs_ratio_scan(
        make_map(config.map),
        config.samples,
        config.seed,
        K=config.K,
        radius=config.radius,
        num_workers=num_workers,
        verbose=verbose,
    )
    return report, _sample_scene(report)


def _quotient_demo(
    config: ExperimentConfig,
    *,
    num_workers: int,
    verbose: bool,
) -> tuple[DistortionReport, Scene]:
    f = make_map(config.map)
    K = config.K or f.claimed_K or 1.0  # noqa: N806
    if config.multiplier <= 1:
        raise ConfigError(
            f"Field 'multiplier' must be above 1, got {config.multiplier}."
        )
    length = math.log(config.multiplier)
    source = CyclicGroup(length, model=f.domain)
    target = CyclicGroup(K * length, model=f.domain)
    fd = descend_map(f, source, target, seed=config.seed)
    report = quotient_skew_scan(
        fd,
        config.samples,
        config.seed,
        radius=config.radius,
        num_workers=num_workers,
        verbose=verbose,
    )
    qs = quotient_qs_scan(
        fd,
        config.samples,
        config.seed,
        K=K,
        radius=config.radius,
        num_workers=num_workers,
        verbose=verbose,
    )
    report.fitted_constants.update(
        {f"qs_{key}": value for key, value in qs.fitted_constants.items()}
    )
    report.details["groups"] = {
        "source": repr(source),
        "target": repr(target),
        "deviation": fd.deviation,
    }

    scene = Scene()
    vertices = [complex(*v) for v in report.details["worst"]["vertices"]]
    scene.add_triangle(vertices)
    images = [complex(f(v)) for v in _to_model(vertices, f.domain)]
    if f.domain == "halfplane":
        images = [complex(cayley_to_disk(w)) for w in images]
    scene.add_triangle(images, stroke=color_ramp(1.0))
    return report, scene


def _skew_scan(
    config: ExperimentConfig,
    *,
    num_workers: int,
    verbose: bool,
) -> tuple[DistortionReport, Scene]:
    f = make_map(config.map)
    report = skew_scan(
        f,
        config.r_grid,
        config.samples,
        config.seed,
        radius=config.radius,
        center_modulus=config.center_modulus,
        num_workers=num_workers,
        verbose=verbose,
    )
    worst = report.details["worst"]
    center = complex(*worst["center"])
    placement_angle = worst["angle"]
    triangle = equilateral_from_side(
        worst["side"],
        MobiusMap.placement(center, placement_angle),
    )
    scene = Scene()
    scene.add_triangle(triangle)
    scene.add_triangle(f(np.array(triangle.vertices)), stroke=color_ramp(1.0))
    return report, scene


def _verify_lemmas(
    config: ExperimentConfig,
    *,
    num_workers: int,
    verbose: bool,
) -> tuple[DistortionReport, Scene]:
    results = verify_lemmas(
        config.seed,
        scale=config.scale,
        num_workers=num_workers,
        verbose=verbose,
    )
    print(format_lemma_table(results))
    report = DistortionReport(
        "verify-lemmas",
        config.seed,
        locations=np.zeros(len(results)),
        scales=np.zeros(len(results)),
        values=[float(result.passed) for result in results],
        fitted_constants={"passed": sum(result.passed for result in results)},
        details={"lemmas": [result.to_dict() for result in results]},
    )
    return report, Scene()


def _check_type(name: str, value: object, expected: type):
    if expected is float:
        valid = isinstance(value, (int, float)) and not isinstance(value, bool)
        valid = valid and math.isfinite(value)
    elif expected is int:
        valid = isinstance(value, int) and not isinstance(value, bool)
    else:
        valid = isinstance(value, expected)
    if not valid:
        raise ConfigError(
            f"Field '{name}' must be of type {expected.__name__}, got {value!r}."
        )


def _sample_scene(report: DistortionReport) -> Scene:
    scene = Scene()
    count = min(len(report), MAX_RENDERED_POINTS)
    values = report.values[:count]
    low, high = float(np.min(values)), float(np.max(values))
    span = high - low if high > low else 1.0
    for location, value in zip(report.locations[:count], values):
        scene.add_point(location, fill=color_ramp((value - low) / span))
    return scene


def _to_model(points: list[complex], model: str) -> list[complex]:
    if model == "halfplane":
        return [complex(cayley_to_halfplane(z)) for z in points]
    return points


_RUNNERS = {
    "chain-demo": _chain_demo,
    "growth-fit": _growth_fit,
    "hrho-scan": _hrho_scan,
    "qs-scan": _qs_scan,
    "quotient-demo": _quotient_demo,
    "skew-scan": _skew_scan,
    "verify-lemmas": _verify_lemmas,
}
