import argparse
import os
import sys

from hypskew.core.errors import ConfigError
from hypskew.core.errors import ExperimentError
from hypskew.core.experiment import ExperimentConfig
from hypskew.core.experiment import run_experiment


EXIT_SUCCESS = 0
r"""Exit code of a successful run."""

EXIT_VALIDATION = 2
r"""Exit code for invalid configuration, input, or map."""

EXIT_NUMERIC = 3
r"""Exit code for numeric failures and failed checks."""


def get_jobs(value: int = None) -> int:
    r"""Number of parallel jobs.

    Falls back to the environment variable
    ``HYPSKEW_JOBS``
    and to a single job.

    Args:
        value: number of jobs given on the command line

    Returns:
        number of jobs

    Raises:
        ConfigError: if the number of jobs is not a positive integer

    """
    if value is None:
        value = os.getenv("HYPSKEW_JOBS", "1")
    try:
        jobs = int(value)
    except ValueError as ex:
        raise ConfigError(
            f"Number of jobs must be a positive integer, got '{value}'."
        ) from ex
    if jobs < 1:
        raise ConfigError(f"Number of jobs must be a positive integer, got {jobs}.")
    return jobs


def main(argv: list[str] = None) -> int:
    r"""Run experiment from the command line.

    .. code-block:: console

        hypskew --config experiment.json --seed 1 --out results --render --jobs 4

    Flags override the values of the config file.

    Args:
        argv: command line arguments,
            defaults to :data:`sys.argv`

    Returns:
        exit code,
        0 on success,
        2 on validation errors,
        3 on numeric failures or failed checks

    """
    args = parse_args(argv)
    try:
        config = ExperimentConfig.from_file(args.config)
        overrides = {}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.out is not None:
            overrides["output"] = args.out
        if args.render:
            overrides["render"] = True
        if overrides:
            config = ExperimentConfig.from_dict({**config.to_dict(), **overrides})
        jobs = get_jobs(args.jobs)
    except ConfigError as ex:
        print(f"Error: {ex}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        report, paths = run_experiment(
            config,
            num_workers=jobs,
            verbose=args.verbose,
        )
    except ExperimentError as ex:
        print(f"Error: {ex}", file=sys.stderr)
        if isinstance(ex.exception, ArithmeticError):
            return EXIT_NUMERIC
        return EXIT_VALIDATION

    for kind in sorted(paths):
        print(f"{kind}: {paths[kind]}")
    if config.experiment == "verify-lemmas":
        if report.fitted_constants["passed"] < len(report):
            return EXIT_NUMERIC
    return EXIT_SUCCESS


def parse_args(argv: list[str] = None) -> argparse.Namespace:
    r"""Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="hypskew",
        description=(
            "Run distortion experiments on maps of the hyperbolic disk "
            "and write JSON, CSV, and SVG artifacts."
        ),
    )
    parser.add_argument(
        "--config",
        required=True,
        help="Path to JSON experiment config.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Seed of the random number generator, overrides the config.",
    )
    parser.add_argument(
        "--out",
        default=None,
        help="Output directory, overrides the config.",
    )
    parser.add_argument(
        "--render",
        action="store_true",
        help="Write SVG figures.",
    )
    parser.add_argument(
        "--jobs",
        default=None,
        help="Number of parallel jobs, defaults to $HYPSKEW_JOBS or 1.",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Show progress bars.",
    )
    return parser.parse_args(argv)
