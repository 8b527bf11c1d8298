import numpy as np
import pytest

import hypskew


@pytest.fixture(scope="function")
def rng():
    """Seeded random number generator."""
    yield np.random.default_rng(0)


@pytest.fixture(scope="module")
def mobius():
    """Möbius map of the disk."""
    yield hypskew.make_map(hypskew.MapSpec("mobius", [0.3, 0.4, -0.2]))


@pytest.fixture(scope="module")
def stretch():
    """Radial stretch with K = 2."""
    yield hypskew.make_map(hypskew.MapSpec("radial_stretch", [2]))


@pytest.fixture(scope="module")
def twist():
    """Boundary twist with default constant."""
    yield hypskew.make_map(hypskew.MapSpec("boundary_twist"))


@pytest.fixture(scope="function")
def config_file(tmpdir):
    """Write experiment config to a JSON file.

    Returns a function
    that takes the config as dictionary
    and returns the path of the file.

    """

    def write(config: dict) -> str:
        return hypskew.cli.write_json(config, str(tmpdir.join("config.json")))

    yield write
