import cmath
import math

from hypothesis import given
from hypothesis import strategies as st
import numpy as np
import pytest

import hypskew


points = st.builds(
    lambda r, theta: r * cmath.exp(1j * theta),
    st.floats(0.05, 0.9),
    st.floats(0, 2 * math.pi),
)


@pytest.mark.parametrize("t", [0.1, 0.5, 0.9, 0.99])
def test_rot0(t):
    z = t * cmath.exp(0.7j)
    w = hypskew.rot0(z)
    assert abs(w) == pytest.approx(t, rel=1e-12)
    assert hypskew.skew_hyp([0, z, w]) == pytest.approx(1.0, abs=1e-9)
    assert hypskew.angle_at_vertex(0, z, w) == pytest.approx(
        float(hypskew.rotation_angle(t)),
        abs=1e-9,
    )
    assert abs(hypskew.rot0_inverse(w) - z) < 1e-12


def test_rot0_origin():
    assert hypskew.rot0(0) == 0
    assert hypskew.rot0_inverse(0) == 0
    assert hypskew.rotation_angle(0) == pytest.approx(math.pi / 3)
    with pytest.raises(hypskew.DomainError):
        hypskew.rot0(1.0)


def test_rot0_array(rng):
    z = hypskew.sample_ball(rng, 100, radius=3.0)
    w = hypskew.rot0(z)
    assert w.shape == z.shape
    np.testing.assert_allclose(np.abs(w), np.abs(z), rtol=1e-12)
    np.testing.assert_allclose(hypskew.rot0_inverse(w), z, atol=1e-12)


@pytest.mark.parametrize(
    "center, z",
    [
        (0.0, 0.5),
        (0.3j, 0.5),
        (-0.6 + 0.2j, 0.1 - 0.1j),
        (hypskew.HPoint(0.8), -0.5j),
        pytest.param(
            0.3j,
            0.3j,
            marks=pytest.mark.xfail(raises=hypskew.DegenerateError),
        ),
        pytest.param(
            1.0,
            0.5,
            marks=pytest.mark.xfail(raises=hypskew.DomainError),
        ),
    ],
)
def test_rotation_map(center, z):
    rotation = hypskew.RotationMap(center)
    w = rotation(z)
    assert hypskew.skew_hyp([center, z, w]) == pytest.approx(1.0, abs=1e-9)
    assert abs(rotation.inverse(w) - z) < 1e-10
    assert abs(hypskew.rotw(center, z) - w) < 1e-15
    assert abs(hypskew.rotw_inverse(center, w) - z) < 1e-10


def test_rotation_map_repr():
    assert repr(hypskew.RotationMap(0.5j)) == "RotationMap(0.5j)"
    assert hypskew.RotationMap().center == 0j


@pytest.mark.parametrize(
    "t, expected",
    [
        (0.5, 0.158114),
        (0.99, 0.96116),
        pytest.param(
            0.0,
            None,
            marks=pytest.mark.xfail(raises=hypskew.DomainError),
        ),
    ],
)
def test_beltrami_rot0_exact(t, expected):
    assert hypskew.beltrami_rot0_exact(t) == pytest.approx(expected, abs=1e-5)


@pytest.mark.parametrize(
    "z, tolerance",
    [
        (0.1, 1e-6),
        (0.5j, 1e-6),
        (-0.3 + 0.4j, 1e-6),
        (0.9 * cmath.exp(2j), 1e-5),
        (0.99, 1e-4),
    ],
)
def test_beltrami_rot0(z, tolerance):
    mu = hypskew.beltrami_rot0(z)
    assert abs(mu) == pytest.approx(hypskew.beltrami_rot0_exact(z), rel=1e-12)
    fd = hypskew.beltrami_fd(hypskew.rot0, z, modulus=False)
    assert abs(fd - mu) < tolerance
    assert hypskew.beltrami_fd(hypskew.rot0, z) == pytest.approx(abs(fd))


def test_beltrami_rot0_unbounded():
    t = np.array([0.9, 0.99, 0.999, 0.9999])
    mu = hypskew.beltrami_rot0_exact(t)
    assert np.all(np.diff(mu) > 0)
    assert mu[-1] > 0.999
    with pytest.raises(hypskew.DomainError):
        hypskew.beltrami_rot0(np.array([0.5, 0]))


@pytest.mark.parametrize(
    "function, z, expected",
    [
        (lambda z: z, 0.2, 0.0),
        (lambda z: z + 0.5 * np.conj(z), 0.1, 0.5),
        (lambda z: 3 * z - 1j * np.conj(z), -0.4j, 1 / 3),
        (lambda z: np.abs(z) ** 2 * z, 0.5, 0.5),
    ],
)
def test_beltrami_fd(function, z, expected):
    assert hypskew.beltrami_fd(function, z) == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize(
    "function, z, h, error",
    [
        (lambda z: z, 1.0, 1e-5, hypskew.DomainError),
        (lambda z: z, 0.0, 0.0, hypskew.DomainError),
        (lambda z: np.ones_like(z), 0.0, 1e-5, hypskew.DegenerateError),
    ],
)
def test_beltrami_fd_error(function, z, h, error):
    with pytest.raises(error):
        hypskew.beltrami_fd(function, z, h=h)


@pytest.mark.parametrize(
    "mu, expected",
    [
        (0.0, 1.0),
        (0.5, 3.0),
        (1 / 3, 2.0),
        (-0.5j, 3.0),
        pytest.param(
            1.0,
            None,
            marks=pytest.mark.xfail(raises=hypskew.DomainError),
        ),
    ],
)
def test_max_dilatation(mu, expected):
    assert hypskew.max_dilatation(mu) == pytest.approx(expected)


@given(points, points)
def test_rotation_map_equilateral(center, z):
    if hypskew.dist_disk(center, z) < 1e-6:
        return
    w = hypskew.rotw(center, z)
    assert hypskew.dist_disk(center, w) == pytest.approx(
        hypskew.dist_disk(center, z),
        rel=1e-8,
    )
    assert hypskew.dist_disk(z, w) == pytest.approx(
        hypskew.dist_disk(center, z),
        rel=1e-6,
    )
