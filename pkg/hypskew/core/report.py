import json
import os

import numpy as np
import pandas as pd

import audeer


CSV_COLUMNS = [
    "experiment",
    "seed",
    "sample_index",
    "location_x",
    "location_y",
    "scale",
    "value",
]
r"""Columns of the flat sample table."""


class DistortionReport:
    r"""Samples and fitted constants of a distortion scan.

    Every sample consists of
    a location in the disk,
    a scale,
    e.g. a side length or distance ratio,
    and the measured value.

    Args:
        experiment: name of the scan
        seed: seed of the random number generator
        locations: sample locations
        scales: sample scales
        values: sample values
        fitted_constants: constants fitted to the samples
        details: further JSON compatible results,
            e.g. the worst sample

    Raises:
        ValueError: if sample arrays have different lengths

    Examples:
        >>> report = DistortionReport(
        ...     "demo",
        ...     0,
        ...     locations=[0, 0.5j],
        ...     scales=[1.0, 1.0],
        ...     values=[1.0, 2.5],
        ... )
        >>> report.supremum
        2.5
        >>> report.to_frame().columns.tolist()[-3:]
        ['location_y', 'scale', 'value']

    """

    def __init__(
        self,
        experiment: str,
        seed: int,
        *,
        locations: np.ndarray,
        scales: np.ndarray,
        values: np.ndarray,
        fitted_constants: dict[str, float] = None,
        details: dict = None,
    ):
        locations = np.asarray(locations, dtype=complex).ravel()
        scales = np.asarray(scales, dtype=float).ravel()
        values = np.asarray(values, dtype=float).ravel()
        if not len(locations) == len(scales) == len(values):
            raise ValueError(
                f"Sample arrays must have equal length, "
                f"got {len(locations)}, {len(scales)}, {len(values)}."
            )

        self.experiment = experiment
        r"""Name of the scan."""
        self.seed = seed
        r"""Seed of the random number generator."""
        self.locations = locations
        r"""Sample locations."""
        self.scales = scales
        r"""Sample scales."""
        self.values = values
        r"""Sample values."""
        self.fitted_constants = dict(fitted_constants or {})
        r"""Constants fitted to the samples."""
        self.details = dict(details or {})
        r"""Further results of the scan."""

    def __len__(self) -> int:  # noqa: D105
        return len(self.values)

    def __repr__(self) -> str:  # noqa: D105
        return (
            f"DistortionReport("
            f"'{self.experiment}', "
            f"seed={self.seed}, "
            f"samples={len(self)}, "
            f"supremum={self.supremum!r}"
            f")"
        )

    @property
    def supremum(self) -> float:
        r"""Largest sample value."""
        if len(self) == 0:
            return float("nan")
        return float(np.max(self.values))

    def to_csv(self, path: str) -> str:
        r"""Write flat sample table to CSV file.

        Args:
            path: path to CSV file

        Returns:
            absolute path of the file

        """
        return write_csv(self.to_frame(), path)

    def to_dict(self) -> dict:
        r"""Serialize report to a JSON compatible dictionary."""
        return {
            "experiment": self.experiment,
            "seed": self.seed,
            "supremum": self.supremum,
            "fitted_constants": {
                key: float(value) for key, value in self.fitted_constants.items()
            },
            "details": self.details,
            "samples": [
                {
                    "sample_index": index,
                    "location_x": float(location.real),
                    "location_y": float(location.imag),
                    "scale": float(scale),
                    "value": float(value),
                }
                for index, (location, scale, value) in enumerate(
                    zip(self.locations, self.scales, self.values)
                )
            ],
        }

    def to_frame(self) -> pd.DataFrame:
        r"""Flat sample table with columns :data:`CSV_COLUMNS`."""
        return pd.DataFrame(
            {
                "experiment": self.experiment,
                "seed": self.seed,
                "sample_index": np.arange(len(self)),
                "location_x": self.locations.real,
                "location_y": self.locations.imag,
                "scale": self.scales,
                "value": self.values,
            },
            columns=CSV_COLUMNS,
        )

    def to_json(self, path: str) -> str:
        r"""Write report to JSON file.

        Args:
            path: path to JSON file

        Returns:
            absolute path of the file

        """
        return write_json(self.to_dict(), path)


def write_csv(frame: pd.DataFrame, path: str) -> str:
    r"""Write sample table to CSV file.

    Floats are written with 17 significant digits,
    which makes the output reproducible.

    Args:
        frame: sample table
        path: path to CSV file

    Returns:
        absolute path of the file

    """
    path = audeer.path(path)
    audeer.mkdir(os.path.dirname(path))
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
    return path


def write_json(obj: dict, path: str) -> str:
    r"""Write dictionary to JSON file with sorted keys.

    Args:
        obj: JSON compatible dictionary
        path: path to JSON file

    Returns:
        absolute path of the file

    """
    path = audeer.path(path)
    audeer.mkdir(os.path.dirname(path))
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        json.dump(obj, fp, indent=2, sort_keys=True)
        fp.write("\n")
    return path
