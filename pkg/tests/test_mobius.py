import cmath
import math

from hypothesis import given
from hypothesis import strategies as st
import numpy as np
import pytest

import hypskew


centers = st.builds(
    lambda r, theta: r * cmath.exp(1j * theta),
    st.floats(0, 0.9),
    st.floats(0, 2 * math.pi),
)


@pytest.mark.parametrize(
    "theta, a",
    [
        (0.0, 0.0),
        (1.0, 0.5),
        (-2.0, 0.3 - 0.4j),
        (math.pi, hypskew.HPoint(0, -0.7)),
        pytest.param(
            0.0,
            1.0,
            marks=pytest.mark.xfail(raises=hypskew.DomainError),
        ),
    ],
)
def test_mobius_map(theta, a):
    mobius = hypskew.MobiusMap(theta, a)
    a = complex(a)
    assert abs(mobius(a)) < 1e-12
    assert abs(mobius.a - a) < 1e-12
    assert abs(cmath.exp(1j * mobius.theta) - cmath.exp(1j * theta)) < 1e-12
    z = 0.2 + 0.1j
    expected = cmath.exp(1j * theta) * (z - a) / (1 - a.conjugate() * z)
    assert abs(mobius(z) - expected) < 1e-12


def test_mobius_isometry(rng, mobius):
    z = hypskew.sample_ball(rng, 1000, radius=3.0)
    w = hypskew.sample_ball(rng, 1000, radius=3.0)
    np.testing.assert_allclose(
        hypskew.dist_disk(mobius(z), mobius(w)),
        hypskew.dist_disk(z, w),
        atol=1e-10,
    )


def test_mobius_compose_invert(rng):
    first = hypskew.MobiusMap(0.3, 0.2 + 0.1j)
    second = hypskew.MobiusMap(-1.2, -0.5j)
    z = hypskew.sample_ball(rng, 100)
    composed = hypskew.mobius_compose(second, first)
    np.testing.assert_allclose(
        hypskew.mobius_apply(composed, z),
        second(first(z)),
        atol=1e-12,
    )
    inverse = hypskew.mobius_invert(composed)
    np.testing.assert_allclose(inverse(composed(z)), z, atol=1e-12)
    identity = composed.compose(inverse)
    np.testing.assert_allclose(identity(z), z, atol=1e-12)


def test_mobius_matrix():
    mobius = hypskew.MobiusMap(0.7, 0.4 + 0.2j)
    matrix = mobius.matrix
    assert abs(np.linalg.det(matrix) - 1) < 1e-12
    assert matrix[1, 0] == matrix[0, 1].conjugate()
    assert matrix[1, 1] == matrix[0, 0].conjugate()
    # copy
    matrix[0, 0] = 0
    assert mobius.matrix[0, 0] != 0
    rescaled = hypskew.MobiusMap.from_matrix(3 * mobius.matrix)
    np.testing.assert_allclose(rescaled.matrix, mobius.matrix, atol=1e-12)


@pytest.mark.parametrize(
    "center, angle",
    [
        (0.0, 0.0),
        (0.25, 1.0),
        (-0.6 + 0.3j, -2.5),
        (hypskew.HPoint(0.1, 0.8), math.pi / 3),
    ],
)
def test_mobius_placement(center, angle):
    mobius = hypskew.MobiusMap.placement(center, angle)
    assert abs(mobius(0) - complex(center)) < 1e-12
    # derivative at the origin points in direction of the angle
    step = 1e-7
    direction = mobius(step) - mobius(0)
    assert abs(direction / abs(direction) - cmath.exp(1j * angle)) < 1e-6


def test_mobius_special_maps():
    assert hypskew.MobiusMap.identity()(0.3j) == 0.3j
    assert abs(hypskew.MobiusMap.moving_to_origin(0.5j)(0.5j)) < 1e-15
    rotation = hypskew.MobiusMap.rotation(math.pi / 2)
    assert abs(rotation(0.5) - 0.5j) < 1e-15
    assert repr(rotation).startswith("MobiusMap(")


def test_mobius_domain():
    mobius = hypskew.MobiusMap(0.0, 0.5)
    with pytest.raises(hypskew.DomainError, match="not inside the unit disk"):
        mobius(np.array([0, 1.0]))


@given(centers, centers, st.floats(-math.pi, math.pi))
def test_mobius_preserves_distance(z, w, theta):
    mobius = hypskew.MobiusMap(theta, 0.5 - 0.5j)
    assert hypskew.dist_disk(mobius(z), mobius(w)) == pytest.approx(
        hypskew.dist_disk(z, w),
        abs=1e-9,
    )
