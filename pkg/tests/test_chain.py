import cmath
import math

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
import numpy as np
import pytest

import hypskew


@pytest.mark.parametrize(
    "side, placement, target",
    [
        (0.5, None, 0.6),
        (1.0, None, -0.8j),
        (0.1, None, 0.5 + 0.5j),
        (0.25, hypskew.MobiusMap.placement(0.7, 2.0), -0.7),
        (1.0, hypskew.MobiusMap.placement(-0.3j), hypskew.HPoint(0.9)),
    ],
)
def test_build_chain(side, placement, target):
    triangle = hypskew.equilateral_from_side(side, placement)
    chain = hypskew.build_chain(triangle, target)
    assert hypskew.validate_chain(chain)
    assert chain[0] is triangle
    assert chain.target == complex(target)
    assert chain.side == pytest.approx(side, rel=1e-9)
    assert 1 < len(chain) <= chain.bound
    assert chain.bound == hypskew.length_bound(chain.distances[0], chain.side)
    assert len(chain.distances) == len(chain)
    assert chain.distances[-1] == 0
    assert chain[-1].contains(target)
    ends = [chain.distances[i] for i in chain.round_ends]
    assert chain.round_ends[0] == 0
    assert chain.round_ends[-1] == len(chain) - 1
    assert all(np.diff(ends) < 0)


def test_build_chain_inside():
    triangle = hypskew.equilateral_from_side(0.5)
    chain = hypskew.build_chain(triangle, 0.01j)
    assert len(chain) == 1
    assert chain.distances == [0.0]
    assert chain.round_ends == [0]
    assert chain.bound == 7


@pytest.mark.parametrize(
    "side, target, error",
    [
        (1.5, 0.5, hypskew.DomainError),
        (0.5, 1.0, hypskew.DomainError),
    ],
)
def test_build_chain_error(side, target, error):
    triangle = hypskew.equilateral_from_side(side)
    with pytest.raises(error):
        hypskew.build_chain(triangle, target)


@pytest.mark.parametrize("vertex", [1, 2, 3])
@pytest.mark.parametrize("clockwise", [True, False])
def test_fan_about_vertex(vertex, clockwise):
    triangle = hypskew.equilateral_from_side(0.8, hypskew.MobiusMap.placement(0.2j))
    fan = hypskew.fan_about_vertex(triangle, vertex, clockwise=clockwise)
    assert len(fan) == 7
    center = triangle.vertices[vertex - 1]
    previous = triangle
    for member in fan:
        assert member.vertices[vertex - 1] == center
        assert member.side == pytest.approx(0.8, rel=1e-9)
        shared = set(previous.vertices) & set(member.vertices)
        assert len(shared) == 2
        assert center in shared
        # carried centroid agrees with the one computed from the medians
        copy = hypskew.EqTriangle(*member.vertices)
        assert abs(copy.centroid - member.centroid) < 1e-10
        previous = member
    # together with the triangle the fan covers a neighborhood of the vertex
    move = hypskew.MobiusMap.moving_to_origin(center)
    circle = move.inverse()(0.01 * np.exp(1j * np.linspace(0, 2 * math.pi, 64)))
    covered = np.logical_or.reduce([t.contains(circle) for t in [triangle, *fan]])
    assert np.all(covered)


def test_fan_about_vertex_direction():
    triangle = hypskew.equilateral_from_side(0.5)
    clockwise = hypskew.fan_about_vertex(triangle, 1, 1)[0]
    counter = hypskew.fan_about_vertex(triangle, 1, 1, clockwise=False)[0]
    assert clockwise.centroid.imag > 0
    assert counter.centroid.imag < 0


@pytest.mark.parametrize(
    "vertex, count",
    [
        (0, 7),
        (4, 7),
        (1, 0),
        (1, 8),
    ],
)
def test_fan_about_vertex_error(vertex, count):
    triangle = hypskew.equilateral_from_side(0.5)
    with pytest.raises(hypskew.DomainError):
        hypskew.fan_about_vertex(triangle, vertex, count)


@pytest.mark.parametrize(
    "distance, side, expected",
    [
        (0.0, 1.0, 7),
        (0.001, 1.0, 7),
        (1.0, 1.0, 700),
        (0.5, 0.25, 1400),
        (0.01, 0.5, 14),
    ],
)
def test_length_bound(distance, side, expected):
    assert hypskew.length_bound(distance, side) == expected


def test_validate_chain():
    small = hypskew.equilateral_from_side(0.3)
    triangle = hypskew.equilateral_from_side(0.5)
    elsewhere = hypskew.equilateral_from_side(0.5, hypskew.MobiusMap.placement(0.5))

    validation = hypskew.validate_chain(hypskew.TriangleChain([], 0, []))
    assert validation == hypskew.ChainValidation(False, "empty", None)
    assert not validation

    chain = hypskew.TriangleChain([triangle, small], 0, [0, 0])
    assert hypskew.validate_chain(chain) == hypskew.ChainValidation(
        False, "equal-side", 1
    )

    chain = hypskew.TriangleChain([triangle, elsewhere], 0.5, [0, 0])
    assert hypskew.validate_chain(chain) == hypskew.ChainValidation(
        False, "side-sharing", 1
    )

    chain = hypskew.TriangleChain([triangle], 0.6, [0.4])
    assert hypskew.validate_chain(chain) == hypskew.ChainValidation(
        False, "containment", 0
    )

    chain = hypskew.TriangleChain([triangle], 0, [0])
    assert hypskew.validate_chain(chain) == hypskew.ChainValidation(True)


def test_triangle_chain_to_dict():
    triangle = hypskew.equilateral_from_side(0.5)
    chain = hypskew.build_chain(triangle, 0.4j)
    data = chain.to_dict()
    assert data["length"] == len(chain)
    assert data["bound"] == chain.bound
    assert data["target"] == [0.0, 0.4]
    assert data["round_ends"] == chain.round_ends
    assert len(data["triangles"]) == len(chain)
    assert all(len(vertices) == 3 for vertices in data["triangles"])
    assert repr(chain).startswith(f"TriangleChain(length={len(chain)}, side=")


@settings(max_examples=20, deadline=None)
@given(
    st.floats(0.2, 1.0),
    st.floats(0.0, 2.0),
    st.floats(0, 2 * math.pi),
)
def test_build_chain_valid(side, distance, angle):
    triangle = hypskew.equilateral_from_side(side)
    target = math.tanh(distance / 2) * cmath.exp(1j * angle)
    chain = hypskew.build_chain(triangle, target)
    assert hypskew.validate_chain(chain)
    assert len(chain) <= chain.bound


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize(
    "mobius",
    [
        hypskew.MobiusMap(1.3, 0.5 - 0.3j),
        hypskew.MobiusMap(-2.0, 0.8j),
    ],
)
def test_build_chain_mobius_equivariant(seed, mobius):
    rng = np.random.default_rng(seed)
    side = rng.uniform(0.2, 1.0)
    distance = rng.uniform(0.0, 2.0)
    target = math.tanh(distance / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
    triangle = hypskew.equilateral_from_side(side)
    chain = hypskew.build_chain(triangle, target)
    image = hypskew.build_chain(triangle.transformed(mobius), mobius(target))
    assert len(image) == len(chain)
    assert image.round_ends == chain.round_ends
    np.testing.assert_allclose(image.distances, chain.distances, atol=1e-9)


def lowest_tied(distances):
    distances = np.asarray(distances)
    return int(np.flatnonzero(distances <= distances.min() + 1e-12)[0])


@pytest.mark.parametrize("target", [0.95, -0.9 + 0.2j, 0.7j, 0.6 - 0.6j])
def test_build_chain_lowest_fan_index(target):
    # far targets are closest to a vertex shared by two fan members
    chain = hypskew.build_chain(hypskew.equilateral_from_side(0.5), target)
    for start, end in zip(chain.round_ends[:-1], chain.round_ends[1:]):
        current = chain[start]
        vertex = lowest_tied(hypskew.dist_disk(np.array(current.vertices), target))
        fan = hypskew.fan_about_vertex(current, vertex + 1)
        distances = [member.distance_to(target) for member in fan]
        assert end - start == lowest_tied(distances) + 1


@settings(max_examples=30, deadline=None)
@given(
    st.floats(0.2, 1.0),
    st.floats(0.0, 2.0),
    st.floats(0, 2 * math.pi),
)
def test_build_chain_distance_decrease(side, distance, angle):
    triangle = hypskew.equilateral_from_side(side)
    target = math.tanh(distance / 2) * cmath.exp(1j * angle)
    chain = hypskew.build_chain(triangle, target)
    ends = [chain.distances[i] for i in chain.round_ends]
    for i in range(1, len(ends)):
        decrease = ends[i - 1] - ends[i]
        if i < len(ends) - 1:
            assert decrease >= chain.side / 100 - 1e-12
        else:
            # the last round may stop short once it reaches the target
            assert decrease >= chain.side / 100 - 1e-12 or ends[i] == 0
