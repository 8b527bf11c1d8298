import math

from hypothesis import given
from hypothesis import strategies as st
import numpy as np
import pytest

import hypskew


@pytest.mark.parametrize(
    "r, expected",
    [
        (1.0, 0.918798),
        (0.5, math.acos((1 + math.tanh(0.25) ** 2) / 2)),
        (1e-6, math.pi / 3),
        pytest.param(
            0.0,
            None,
            marks=pytest.mark.xfail(raises=hypskew.DomainError),
        ),
        pytest.param(
            -1.0,
            None,
            marks=pytest.mark.xfail(raises=hypskew.DomainError),
        ),
    ],
)
def test_side_to_angle(r, expected):
    assert hypskew.side_to_angle(r) == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("r", [0.01, 0.25, 0.5, 0.75, 1.0])
def test_side_to_angle_window(r):
    angle = hypskew.side_to_angle(r)
    assert 2 * math.pi / 7 < angle < math.pi / 3
    assert hypskew.vertex_to_angle(math.tanh(r / 2)) == pytest.approx(angle)


@pytest.mark.parametrize(
    "r, expected",
    [
        (1.0, 0.2776601),
        (1e-8, None),
        (5.0, None),
        pytest.param(
            0.0,
            None,
            marks=pytest.mark.xfail(raises=hypskew.DomainError),
        ),
        pytest.param(
            80.0,
            None,
            marks=pytest.mark.xfail(raises=hypskew.SolverError),
        ),
    ],
)
def test_side_to_vertex(r, expected):
    t = hypskew.side_to_vertex(r)
    assert 0 < t < 1
    if expected is not None:
        assert t == pytest.approx(expected, abs=1e-7)
    assert hypskew.vertex_to_side(t) == pytest.approx(r, rel=1e-9)


@pytest.mark.parametrize(
    "function, value",
    [
        (hypskew.vertex_to_side, 0.0),
        (hypskew.vertex_to_side, 1.0),
        (hypskew.vertex_to_angle, -0.1),
        (hypskew.inscribed_radii, 1.5),
    ],
)
def test_vertex_domain(function, value):
    with pytest.raises(hypskew.DomainError):
        function(value)


@pytest.mark.parametrize(
    "r, placement",
    [
        (1.0, None),
        (0.1, hypskew.MobiusMap.placement(0.4 + 0.3j, 0.5)),
        (0.9, hypskew.MobiusMap.placement(-0.8j, -1.0)),
        (3.0, hypskew.MobiusMap.placement(0.2)),
    ],
)
def test_equilateral_from_side(r, placement):
    triangle = hypskew.equilateral_from_side(r, placement)
    np.testing.assert_allclose(triangle.sides, r, rtol=1e-9)
    assert triangle.side == pytest.approx(r, rel=1e-9)
    assert triangle.angle == pytest.approx(hypskew.side_to_angle(r))
    assert triangle.vertex_modulus == pytest.approx(hypskew.side_to_vertex(r))
    center = hypskew.centroid(triangle)
    expected_center = 0j if placement is None else placement(0)
    assert abs(center - expected_center) < 1e-12
    radius = 2 * math.atanh(triangle.vertex_modulus)
    for vertex in triangle.vertices:
        assert hypskew.dist_disk(center, vertex) == pytest.approx(radius, rel=1e-9)
    for v1, v2, v3 in [triangle.vertices, triangle.vertices[::-1]]:
        assert hypskew.angle_at_vertex(v1, v2, v3) == pytest.approx(
            triangle.angle,
            abs=1e-9,
        )


def test_eq_triangle():
    triangle = hypskew.equilateral_from_side(0.5)
    # centroid computed from the medians
    copy = hypskew.EqTriangle(*triangle.vertices)
    assert abs(copy.centroid - triangle.centroid) < 1e-12
    moved = triangle.transformed(hypskew.MobiusMap(0.3, 0.5j))
    assert isinstance(moved, hypskew.EqTriangle)
    assert moved.side == pytest.approx(0.5, rel=1e-9)
    assert abs(moved.centroid - hypskew.MobiusMap(0.3, 0.5j)(0)) < 1e-12
    assert moved.interior_point == moved.centroid
    with pytest.raises(hypskew.DomainError, match="not equilateral"):
        hypskew.EqTriangle(0, 0.5, 0.5j)
    with pytest.raises(hypskew.DegenerateError):
        hypskew.EqTriangle(0.1, 0.1, 0.1)


def test_triangle():
    triangle = hypskew.Triangle(0, 0.5, hypskew.HPoint(0, 0.5))
    assert triangle.vertices == (0j, 0.5 + 0j, 0.5j)
    np.testing.assert_allclose(
        triangle.sides,
        [math.log(3), 1.680715, math.log(3)],
        atol=1e-6,
    )
    assert [segment.length for segment in triangle.segments] == pytest.approx(
        list(triangle.sides)
    )
    assert not triangle.is_degenerate
    assert triangle.contains(triangle.interior_point)
    assert repr(triangle) == "Triangle(0j, (0.5+0j), 0.5j)"
    assert hypskew.Triangle(0.2, 0.2, 0.5).is_degenerate
    with pytest.raises(hypskew.DomainError):
        hypskew.Triangle(0, 0.5, 1j)


@pytest.mark.parametrize(
    "p, expected",
    [
        (0, True),
        (0.5, False),
        (-0.1, True),
        (np.array([0, 0.1j, 0.9]), [True, True, False]),
    ],
)
def test_contains_point(p, expected):
    triangle = hypskew.equilateral_from_side(1.0)
    np.testing.assert_equal(hypskew.contains_point(triangle, p), expected)


def test_contains_point_vertices():
    triangle = hypskew.equilateral_from_side(1.0, hypskew.MobiusMap.placement(0.3))
    for vertex in triangle.vertices:
        assert hypskew.contains_point(triangle, vertex)
    for segment in triangle.segments:
        assert hypskew.contains_point(triangle, segment.midpoint())


def test_contains_point_degenerate():
    with pytest.raises(hypskew.DegenerateError):
        hypskew.contains_point(hypskew.Triangle(0.2, 0.2, 0.5), 0)


def test_dist_to_triangle():
    triangle = hypskew.equilateral_from_side(1.0)
    assert hypskew.dist_to_triangle(0, triangle) == 0.0
    t = triangle.vertex_modulus
    # beyond a vertex the nearest point is the vertex
    assert hypskew.dist_to_triangle(0.8, triangle) == pytest.approx(
        hypskew.dist_disk(0.8, t),
        abs=1e-12,
    )
    distances = hypskew.dist_to_triangle(np.array([0, 0.8, -0.9]), triangle)
    assert distances.shape == (3,)
    assert distances[0] == 0
    assert np.all(distances[1:] > 0)


@pytest.mark.parametrize("t", [0.1, 0.5, 0.9])
def test_inscribed_radii(t):
    euclidean, hyperbolic = hypskew.inscribed_radii(t)
    assert hyperbolic == pytest.approx(2 * math.atanh(euclidean))
    # radius reaches the midpoint of a side
    triangle = hypskew.equilateral_from_side(hypskew.vertex_to_side(t))
    midpoint = triangle.segments[0].midpoint()
    assert abs(midpoint) == pytest.approx(euclidean, rel=1e-9)


def test_delta_constant():
    delta = hypskew.delta_constant()
    assert delta == pytest.approx(0.13187, abs=1e-5)
    assert hypskew.delta_constant() == delta
    for r in np.linspace(0.01, 1.0, 25):
        radius = hypskew.inscribed_radii(hypskew.side_to_vertex(r))[1]
        assert radius >= 2 * delta * r * (1 - 1e-9)


@pytest.mark.parametrize(
    "triangle, expected",
    [
        ([0, 0.5, 0.5j], 1.529846),
        (hypskew.equilateral_from_side(0.3), 1.0),
        pytest.param(
            [0.1, 0.1, 0.5],
            None,
            marks=pytest.mark.xfail(raises=hypskew.DegenerateError),
        ),
    ],
)
def test_skew_hyp(triangle, expected):
    assert hypskew.skew_hyp(triangle) == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize(
    "triangle, expected",
    [
        ([0, 0.5, 0.5j], math.sqrt(2)),
        (hypskew.Triangle(0, 0.1, 0.05 + 0.05j * math.sqrt(3)), 1.0),
        pytest.param(
            [0.1, 0.1, 0.5],
            None,
            marks=pytest.mark.xfail(raises=hypskew.DegenerateError),
        ),
    ],
)
def test_skew_euclid(triangle, expected):
    assert hypskew.skew_euclid(triangle) == pytest.approx(expected, rel=1e-12)


@given(st.floats(0.01, 1.0), st.floats(-math.pi, math.pi))
def test_equilateral_skew_is_one(r, angle):
    placement = hypskew.MobiusMap.placement(0.5 * complex(math.cos(angle), 0), angle)
    triangle = hypskew.equilateral_from_side(r, placement)
    assert hypskew.skew_hyp(triangle) == pytest.approx(1.0, abs=1e-9)
