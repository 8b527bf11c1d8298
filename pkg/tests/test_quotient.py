import math

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
import numpy as np
import pytest

import hypskew
from hypskew.quotient import CyclicGroup
from hypskew.quotient import QuotientPoint


@pytest.fixture(scope="module")
def group():
    """Disk group with translation length log 3."""
    yield CyclicGroup.from_disk_parameter(0.5)


@pytest.fixture(scope="module")
def halfplane_stretch():
    """Stretch of the half-plane with K = 2."""
    yield hypskew.make_map(hypskew.MapSpec("halfplane_stretch", [2]))


def test_cyclic_group(group):
    assert group.translation_length == pytest.approx(math.log(3))
    assert group.disk_parameter == pytest.approx(0.5)
    assert group.multiplier == pytest.approx(3.0)
    assert group.model == "disk"
    assert group == CyclicGroup(group.translation_length)
    assert group != CyclicGroup(group.translation_length, model="halfplane")
    assert len({group, CyclicGroup(group.translation_length)}) == 1
    assert repr(group) == "CyclicGroup(1.0986122886681098, model='disk')"

    halfplane = CyclicGroup.from_multiplier(2.0)
    assert halfplane.model == "halfplane"
    assert halfplane.translation_length == pytest.approx(math.log(2))
    assert halfplane.disk_parameter == pytest.approx(1 / 3)


@pytest.mark.parametrize(
    "create",
    [
        lambda: CyclicGroup(0.0),
        lambda: CyclicGroup(-1.0),
        lambda: CyclicGroup(1.0, model="sphere"),
        lambda: CyclicGroup.from_disk_parameter(0.0),
        lambda: CyclicGroup.from_disk_parameter(1.0),
        lambda: CyclicGroup.from_multiplier(1.0),
        lambda: CyclicGroup.from_multiplier(float("inf")),
    ],
)
def test_cyclic_group_error(create):
    with pytest.raises(hypskew.DomainError):
        create()


def test_cyclic_group_apply(group, rng):
    z = hypskew.sample_ball(rng, 100, radius=2.0)
    assert abs(group.apply(0) - 0.5) < 1e-15
    np.testing.assert_allclose(group.apply(group.apply(z)), group.apply(z, 2))
    np.testing.assert_allclose(group.apply(group.apply(z, 3), -3), z, atol=1e-12)
    # generator translates along the real diameter by its translation length
    assert hypskew.dist_disk(0, group.apply(0, 2)) == pytest.approx(
        2 * group.translation_length
    )
    # disk and half-plane model are conjugate by the Cayley transform
    np.testing.assert_allclose(
        hypskew.cayley_to_halfplane(group.apply(z)),
        group.multiplier * hypskew.cayley_to_halfplane(z),
        rtol=1e-12,
    )
    halfplane = CyclicGroup.from_multiplier(2.0)
    assert halfplane.apply(1j, 3) == pytest.approx(8j)
    with pytest.raises(hypskew.DomainError):
        halfplane.apply(-1j)
    with pytest.raises(hypskew.DomainError):
        group.apply(1.0)


def test_cyclic_group_as_map(group):
    generator = group.as_map(2)
    assert generator.claimed_K == 1.0
    assert generator.domain == "disk"
    assert generator.name == "generator^2"
    assert abs(generator(0.1) - group.apply(0.1, 2)) < 1e-15
    assert abs(generator.inverse(generator(0.1)) - 0.1) < 1e-12
    halfplane = CyclicGroup.from_multiplier(2.0).as_map(-1)
    assert halfplane.domain == "halfplane"
    assert halfplane(1j) == pytest.approx(0.5j)


def test_cyclic_group_distance(group, rng):
    x = hypskew.sample_ball(rng, 200, radius=3.0)
    y = hypskew.sample_ball(rng, 200, radius=3.0)
    distance = group.distance(x, y)
    assert distance.shape == (200,)
    assert np.all(distance <= hypskew.dist_disk(x, y) + 1e-12)
    np.testing.assert_allclose(group.distance(y, x), distance, atol=1e-12)
    for k in (-2, 1, 3):
        np.testing.assert_allclose(
            group.distance(x, group.apply(y, k)),
            distance,
            atol=1e-9,
        )
    np.testing.assert_allclose(group.distance(x, x), 0, atol=1e-7)
    np.testing.assert_allclose(group.distance(x, group.apply(x)), 0, atol=1e-7)


def test_cyclic_group_distance_window(rng):
    group = CyclicGroup(0.5)
    x = hypskew.sample_ball(rng, 500, radius=3.0)
    y = hypskew.sample_ball(rng, 500, radius=3.0)
    np.testing.assert_allclose(
        group.distance(x, y),
        group.distance(x, y, window=64),
        rtol=0,
        atol=1e-12,
    )


def test_injectivity_radius(group):
    assert group.injectivity_radius(0) == pytest.approx(0.549306, abs=1e-6)
    assert group.injectivity_radius(0.3) == pytest.approx(
        group.translation_length / 2
    )
    assert group.injectivity_radius(0.5j) > group.translation_length / 2
    halfplane = CyclicGroup.from_multiplier(2.0)
    assert halfplane.injectivity_radius(1j) == pytest.approx(math.log(2) / 2)
    assert halfplane.injectivity_radius(1 + 1j) > math.log(2) / 2


def test_quotient_point(group):
    p = QuotientPoint(hypskew.HPoint(0.25), group)
    assert p.representative == 0.25
    assert p.group is group
    assert abs(p.lift(1) - group.apply(0.25)) < 1e-15
    assert p.lift(0) == pytest.approx(0.25)
    assert repr(p) == (
        "QuotientPoint((0.25+0j), CyclicGroup(1.0986122886681098, model='disk'))"
    )
    with pytest.raises(hypskew.DomainError):
        QuotientPoint(1j, group)
    with pytest.raises(hypskew.DomainError):
        QuotientPoint(0.5, CyclicGroup.from_multiplier(2.0))


@pytest.mark.parametrize(
    "x, y, expected_distance, expected_powers",
    [
        (0, 0.25, math.log(5 / 3), [0]),
        (0, 0.5, 0.0, [-1]),
        (0.25, 0.25, 0.0, [0]),
    ],
)
def test_nearest_lifts(group, x, y, expected_distance, expected_powers):
    distance, powers = hypskew.quotient.nearest_lifts(
        QuotientPoint(x, group),
        QuotientPoint(y, group),
    )
    assert distance == pytest.approx(expected_distance, abs=1e-9)
    assert powers == expected_powers


def test_nearest_lifts_tie():
    group = CyclicGroup.from_multiplier(4.0)
    distance, powers = hypskew.quotient.nearest_lifts(
        QuotientPoint(1j, group),
        QuotientPoint(2j, group),
    )
    assert distance == pytest.approx(math.log(2))
    assert powers == [-1, 0]


def test_quotient_dist(group):
    p = QuotientPoint(0.1j, group)
    q = QuotientPoint(-0.4 + 0.2j, group)
    assert hypskew.quotient.quotient_dist(p, q) == pytest.approx(
        hypskew.quotient.quotient_dist(q, p)
    )
    assert hypskew.quotient.quotient_dist(p, QuotientPoint(p.lift(2), group)) < 1e-7
    other = CyclicGroup(2.0)
    with pytest.raises(hypskew.DomainError, match="different quotients"):
        hypskew.quotient.quotient_dist(p, QuotientPoint(0.1j, other))


def test_descend_map(halfplane_stretch):
    source = CyclicGroup.from_multiplier(2.0)
    target = CyclicGroup.from_multiplier(4.0)
    fd = hypskew.quotient.descend_map(halfplane_stretch, source, target)
    assert isinstance(fd, hypskew.quotient.DescendedMap)
    assert fd.claimed_K == 2.0
    assert fd.deviation <= 1e-9
    assert fd.source == source
    assert fd.target == target
    assert repr(fd).startswith("DescendedMap('halfplane_stretch(K=2)', ")

    p = QuotientPoint(1 + 2j, source)
    image = fd(p)
    assert image.group == target
    # lifts of the same point have images in the same orbit
    moved = fd(QuotientPoint(p.lift(3), source))
    assert hypskew.quotient.quotient_dist(image, moved) < 1e-7
    with pytest.raises(hypskew.DomainError, match="source quotient"):
        fd(QuotientPoint(1j, target))


def test_descend_map_disk(group, mobius):
    identity = hypskew.make_map(hypskew.MapSpec("identity"))
    fd = hypskew.quotient.descend_map(identity, group, group, samples=100)
    assert fd.deviation == 0
    # powers of the generator commute with the group
    fd = hypskew.quotient.descend_map(group.as_map(1), group, group)
    assert fd.claimed_K == 1.0
    with pytest.raises(hypskew.EquivarianceError) as error:
        hypskew.quotient.descend_map(mobius, group, group)
    assert error.value.deviation > 1e-9
    assert isinstance(error.value.sample, complex)


@pytest.mark.parametrize(
    "source, target",
    [
        (CyclicGroup.from_multiplier(2.0), CyclicGroup.from_multiplier(3.0)),
        (CyclicGroup.from_multiplier(2.0), CyclicGroup.from_multiplier(2.0)),
    ],
)
def test_descend_map_not_equivariant(halfplane_stretch, source, target):
    with pytest.raises(hypskew.EquivarianceError, match="not equivariant"):
        hypskew.quotient.descend_map(halfplane_stretch, source, target)


def test_descend_map_model_error(halfplane_stretch, group):
    with pytest.raises(hypskew.DomainError, match="must agree"):
        hypskew.quotient.descend_map(halfplane_stretch, group, group)
    with pytest.raises(hypskew.DomainError):
        hypskew.quotient.descend_map(
            halfplane_stretch,
            CyclicGroup.from_multiplier(2.0),
            CyclicGroup.from_multiplier(4.0),
            samples=0,
        )


def test_quotient_skew(group, halfplane_stretch):
    identity = hypskew.make_map(hypskew.MapSpec("identity"))
    fd = hypskew.quotient.descend_map(identity, group, group)
    triangle = hypskew.equilateral_from_side(0.3, hypskew.MobiusMap.placement(0.6j))
    assert hypskew.quotient.quotient_skew(fd, triangle) == pytest.approx(1.0)
    assert hypskew.quotient.quotient_skew(fd, list(triangle.vertices)) == (
        pytest.approx(1.0)
    )
    with pytest.raises(hypskew.DomainError, match="half the translation length"):
        hypskew.quotient.quotient_skew(fd, hypskew.equilateral_from_side(0.6))

    stretched = hypskew.quotient.descend_map(
        halfplane_stretch,
        CyclicGroup.from_multiplier(math.e),
        CyclicGroup.from_multiplier(math.e**2),
    )
    skew = hypskew.quotient.quotient_skew(
        stretched,
        hypskew.equilateral_from_side(0.2, hypskew.MobiusMap.placement(0.3)),
    )
    assert skew > 1


def test_quotient_skew_scan(group, halfplane_stretch):
    identity = hypskew.make_map(hypskew.MapSpec("identity"))
    fd = hypskew.quotient.descend_map(identity, group, group)
    report = hypskew.quotient.quotient_skew_scan(fd, 100)
    assert report.experiment == "quotient-skew"
    assert len(report) == 100
    assert report.fitted_constants["sigma"] == pytest.approx(1.0, abs=1e-9)
    limit = min(1.0, group.translation_length / 2)
    assert np.all(report.scales >= 0.01 * limit)
    assert np.all(report.scales <= 0.99 * limit)

    fd = hypskew.quotient.descend_map(
        halfplane_stretch,
        CyclicGroup.from_multiplier(2.0),
        CyclicGroup.from_multiplier(4.0),
    )
    report = hypskew.quotient.quotient_skew_scan(fd, 100, seed=1)
    assert np.all(report.values >= 1)
    worst = report.details["worst"]
    assert worst["skew"] == report.fitted_constants["sigma"]
    assert len(worst["vertices"]) == 3


def test_quotient_skew_scan_reproducible(group):
    fd = hypskew.quotient.descend_map(group.as_map(1), group, group)
    first = hypskew.quotient.quotient_skew_scan(fd, 1500, seed=4)
    second = hypskew.quotient.quotient_skew_scan(fd, 1500, seed=4, num_workers=2)
    np.testing.assert_array_equal(first.values, second.values)


def test_quotient_qs_scan(group, halfplane_stretch):
    identity = hypskew.make_map(hypskew.MapSpec("identity"))
    fd = hypskew.quotient.descend_map(identity, group, group)
    report = hypskew.quotient.quotient_qs_scan(fd, 200)
    assert report.experiment == "quotient-qs-scan"
    assert len(report) == 200
    constants = report.fitted_constants
    assert set(constants) == {"C", "C_lift", "K", "violations"}
    assert constants["C"] == pytest.approx(1.0, abs=1e-9)
    assert constants["C_lift"] == pytest.approx(1.0, abs=1e-9)
    assert constants["violations"] == 0

    fd = hypskew.quotient.descend_map(
        halfplane_stretch,
        CyclicGroup.from_multiplier(2.0),
        CyclicGroup.from_multiplier(4.0),
    )
    report = hypskew.quotient.quotient_qs_scan(fd, 200, seed=1)
    constants = report.fitted_constants
    assert constants["K"] == 2.0
    assert constants["C"] > 0
    assert 0 <= constants["violations"] <= 200
    bound = constants["C"] * hypskew.power_eta(report.scales, 1.0, 2.0)
    assert np.all(report.values <= bound * (1 + 1e-12))


def test_quotient_qs_scan_error(group, twist):
    # twist does not commute with the group, use a fake descended map
    fd = hypskew.quotient.DescendedMap(twist, group, group)
    with pytest.raises(hypskew.DomainError, match="no claimed distortion constant"):
        hypskew.quotient.quotient_qs_scan(fd, 10)


@settings(max_examples=25, deadline=None)
@given(
    st.floats(0.1, 3.0),
    st.integers(-3, 3),
    st.floats(-0.9, 0.9),
    st.floats(-0.9, 0.9),
)
def test_quotient_dist_invariant(translation_length, k, x, y):
    group = CyclicGroup(translation_length)
    p = QuotientPoint(complex(x, 0.2), group)
    q = QuotientPoint(complex(y, -0.3), group)
    distance = hypskew.quotient.quotient_dist(p, q)
    assert distance <= hypskew.dist_disk(p.representative, q.representative) + 1e-12
    moved = QuotientPoint(q.lift(k), group)
    assert hypskew.quotient.quotient_dist(p, moved) == pytest.approx(
        distance,
        abs=1e-8,
    )
