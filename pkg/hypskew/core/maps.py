from collections.abc import Callable
from collections.abc import Sequence
import math

import numpy as np

from hypskew.core import utils
from hypskew.core.errors import ConfigError
from hypskew.core.errors import DomainError
from hypskew.core.errors import MapRangeError
from hypskew.core.mobius import MobiusMap
from hypskew.core.rotation import RotationMap
from hypskew.core.rotation import rot0
from hypskew.core.rotation import rot0_inverse


DOMAINS = ("disk", "halfplane")
r"""Supported domains of maps under test."""

KINDS = (
    "boundary_twist",
    "composite",
    "halfplane_stretch",
    "identity",
    "mobius",
    "radial_stretch",
    "rot0",
)
r"""Supported kinds of :class:`hypskew.MapSpec`."""

DEFAULT_TWIST = 0.2
r"""Default twist constant of ``boundary_twist``."""


class MapUnderTest:
    r"""Map of the disk or upper half-plane under test.

    Inputs and outputs are checked
    to lie in the domain
    on every evaluation.

    Args:
        name: name of the map
        function: vectorized function
            acting on arrays of complex numbers
        claimed_K: claimed distortion constant
        inverse: vectorized inverse function
        domain: ``'disk'`` or ``'halfplane'``

    Raises:
        DomainError: if ``domain`` is not supported
            or ``claimed_K`` is below 1

    Examples:
        >>> square = MapUnderTest("square", lambda z: z * np.abs(z), claimed_K=2)
        >>> float(square(0.5).real)
        0.25

    """

    def __init__(
        self,
        name: str,
        function: Callable[[np.ndarray], np.ndarray],
        *,
        claimed_K: float = None,  # noqa: N803
        inverse: Callable[[np.ndarray], np.ndarray] = None,
        domain: str = "disk",
    ):
        if domain not in DOMAINS:
            raise DomainError(
                f"Domain must be one of {DOMAINS}, got '{domain}'."
            )
        if claimed_K is not None:
            claimed_K = float(claimed_K)
            if claimed_K < 1:
                raise DomainError(
                    f"Distortion constant K must be at least 1, got {claimed_K}."
                )

        self.name = name
        r"""Name of the map."""
        self.claimed_K = claimed_K
        r"""Claimed distortion constant."""
        self.domain = domain
        r"""Domain of the map."""
        self._function = function
        self._inverse = inverse

    def __call__(self, z: complex | np.ndarray) -> complex | np.ndarray:
        r"""Evaluate map.

        Args:
            z: point(s) of the domain

        Returns:
            image point(s)

        Raises:
            DomainError: if a point is not in the domain
            MapRangeError: if an image is not in the domain

        """
        return self._evaluate(self._function, z)

    def __repr__(self) -> str:  # noqa: D105
        return (
            f"MapUnderTest("
            f"'{self.name}', "
            f"claimed_K={self.claimed_K!r}, "
            f"domain='{self.domain}'"
            f")"
        )

    @property
    def has_inverse(self) -> bool:
        r"""Inverse is known in closed form."""
        return self._inverse is not None

    def inverse(self, z: complex | np.ndarray) -> complex | np.ndarray:
        r"""Evaluate inverse map.

        Raises:
            DomainError: if no inverse is known
                or a point is not in the domain
            MapRangeError: if an image is not in the domain

        """
        if self._inverse is None:
            raise DomainError(f"Map '{self.name}' has no closed form inverse.")
        return self._evaluate(self._inverse, z)

    def normalized_at(self, x: complex) -> "MapUnderTest":
        r"""Conjugate map fixing the origin.

        Returns :math:`A_{f(x)} \circ f \circ A_x^{-1}`,
        which maps 0 to 0
        and has the same distortion as :math:`f`.

        Args:
            x: point of the disk

        Returns:
            normalized map

        Raises:
            DomainError: if the map does not act on the disk

        Examples:
            >>> twist = make_map(MapSpec("boundary_twist"))
            >>> abs(twist.normalized_at(0.3)(0)) < 1e-15
            True

        """
        if self.domain != "disk":
            raise DomainError("Only maps of the disk can be normalized.")
        x = complex(utils.check_in_disk(x))
        inner = MobiusMap.moving_to_origin(x).inverse()
        outer = MobiusMap.moving_to_origin(self(np.array([x]))[0])
        inner_inverse = inner.inverse()
        outer_inverse = outer.inverse()

        def function(z):
            return outer(self(inner(z)))

        inverse = None
        if self.has_inverse:

            def inverse(z):
                return inner_inverse(self.inverse(outer_inverse(z)))

        return MapUnderTest(
            f"{self.name}@{utils.format_point(x)}",
            function,
            claimed_K=self.claimed_K,
            inverse=inverse,
        )

    def _evaluate(
        self,
        function: Callable[[np.ndarray], np.ndarray],
        z: complex | np.ndarray,
    ) -> complex | np.ndarray:
        check = _DOMAIN_CHECKS[self.domain]
        z = check(z)
        scalar = np.ndim(z) == 0
        image = np.asarray(function(np.atleast_1d(z)), dtype=complex)
        try:
            check(image, name="Image")
        except DomainError as ex:
            raise MapRangeError(f"Map '{self.name}' left its domain: {ex}") from ex
        if scalar:
            return complex(image[0])
        return image.reshape(np.shape(z))


class MapSpec:
    r"""Specification of a map under test.

    * ``identity``: no parameters, K = 1
    * ``mobius``: ``[r]`` for :math:`A_r`
      or ``[theta, ax, ay]``, K = 1
    * ``radial_stretch``: ``[K]``
    * ``halfplane_stretch``: ``[K]``
    * ``boundary_twist``: ``[c]`` with default 0.2, no K
    * ``rot0``: ``[]`` or center ``[wx, wy]``, no K
    * ``composite``: ``parts``, K is the product

    :math:`A_r(z) = (z + r) / (1 + rz)`.
    The radial stretch is :math:`z \mapsto z|z|^{K - 1}`,
    the half-plane stretch
    :math:`re^{i\theta} \mapsto r^K e^{i\theta}`.
    The boundary twist :math:`re^{i\theta} \mapsto re^{i(\theta + c/(1 - r))}`
    is not quasiconformal.

    Args:
        kind: kind of map
        parameters: real parameters
        claimed_K: overrides the claimed distortion constant
        parts: specifications of a ``composite`` map,
            applied in order

    Raises:
        ConfigError: if kind or parameters are invalid

    Examples:
        >>> MapSpec("radial_stretch", [2])
        MapSpec('radial_stretch', [2.0])

    """

    def __init__(
        self,
        kind: str,
        parameters: Sequence[float] = (),
        *,
        claimed_K: float = None,  # noqa: N803
        parts: Sequence["MapSpec"] = (),
    ):
        if kind not in KINDS:
            raise ConfigError(f"Map kind must be one of {KINDS}, got '{kind}'.")
        try:
            parameters = [float(p) for p in parameters]
        except (TypeError, ValueError) as ex:
            raise ConfigError(f"Parameters of '{kind}' must be numbers.") from ex
        if not all(math.isfinite(p) for p in parameters):
            raise ConfigError(f"Parameters of '{kind}' must be finite.")

        self.kind = kind
        r"""Kind of map."""
        self.parameters = parameters
        r"""Real parameters."""
        self.claimed_K = None if claimed_K is None else float(claimed_K)
        r"""Claimed distortion constant overriding the default."""
        self.parts = list(parts)
        r"""Specifications of composite parts."""

        self._validate()

    def __eq__(self, other: object) -> bool:  # noqa: D105
        if not isinstance(other, MapSpec):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:  # noqa: D105
        if self.kind == "composite":
            return f"MapSpec('composite', parts={self.parts!r})"
        return f"MapSpec('{self.kind}', {self.parameters!r})"

    @classmethod
    def from_dict(cls, spec: dict) -> "MapSpec":
        r"""Create specification from a dictionary.

        Keys are ``kind``,
        ``parameters``,
        ``claimed_K``,
        and ``parts``.

        Raises:
            ConfigError: if keys or values are invalid

        """
        if not isinstance(spec, dict):
            raise ConfigError(f"Map specification must be an object, got {spec!r}.")
        unknown = set(spec) - {"kind", "parameters", "claimed_K", "parts"}
        if unknown:
            raise ConfigError(f"Unknown map specification fields: {sorted(unknown)}.")
        if "kind" not in spec:
            raise ConfigError("Map specification needs a 'kind'.")
        parts = spec.get("parts", [])
        if not isinstance(parts, list):
            raise ConfigError("Map 'parts' must be a list.")
        parameters = spec.get("parameters", [])
        if not isinstance(parameters, list):
            raise ConfigError("Map 'parameters' must be a list.")
        return cls(
            spec["kind"],
            parameters,
            claimed_K=spec.get("claimed_K"),
            parts=[cls.from_dict(part) for part in parts],
        )

    def to_dict(self) -> dict:
        r"""Serialize specification to a dictionary."""
        spec = {"kind": self.kind, "parameters": self.parameters}
        if self.claimed_K is not None:
            spec["claimed_K"] = self.claimed_K
        if self.parts:
            spec["parts"] = [part.to_dict() for part in self.parts]
        return spec

    def _validate(self):
        count = len(self.parameters)
        p = self.parameters
        if self.kind in ("identity", "composite") and count > 0:
            raise ConfigError(f"Map '{self.kind}' takes no parameters.")
        if self.kind == "composite" and not self.parts:
            raise ConfigError("Composite map needs at least one part.")
        if self.kind != "composite" and self.parts:
            raise ConfigError(f"Map '{self.kind}' takes no parts.")
        if self.kind == "mobius":
            if count == 1:
                center = -p[0]
            elif count == 3:
                center = complex(p[1], p[2])
            else:
                raise ConfigError("Map 'mobius' takes [r] or [theta, ax, ay].")
            if not abs(center) < 1 - utils.BOUNDARY_TOLERANCE:
                raise ConfigError("Map 'mobius' needs a point inside the unit disk.")
        if self.kind in ("radial_stretch", "halfplane_stretch"):
            if count != 1 or p[0] < 1:
                raise ConfigError(f"Map '{self.kind}' takes [K] with K >= 1.")
        if self.kind == "boundary_twist":
            if count > 1 or (count == 1 and p[0] <= 0):
                raise ConfigError("Map 'boundary_twist' takes [c] with c > 0.")
        if self.kind == "rot0":
            if count not in (0, 2):
                raise ConfigError("Map 'rot0' takes [] or [wx, wy].")
            if count == 2 and not abs(complex(p[0], p[1])) < 1:
                raise ConfigError("Map 'rot0' needs a center inside the unit disk.")
        if self.claimed_K is not None and self.claimed_K < 1:
            raise ConfigError(
                f"Distortion constant K must be at least 1, got {self.claimed_K}."
            )


def compose_maps(maps: Sequence[MapUnderTest]) -> MapUnderTest:
    r"""Compose maps under test.

    The maps are applied in list order.
    The claimed distortion constant
    is the product of the constants of all parts,
    or none if a part has none.

    Args:
        maps: maps with the same domain

    Returns:
        composition

    Raises:
        DomainError: if ``maps`` is empty
            or the domains differ

    Examples:
        >>> stretch = make_map(MapSpec("radial_stretch", [2]))
        >>> compose_maps([stretch, stretch]).claimed_K
        4.0

    """
    maps = list(maps)
    if not maps:
        raise DomainError("Cannot compose an empty list of maps.")
    domains = {m.domain for m in maps}
    if len(domains) > 1:
        raise DomainError(f"Cannot compose maps with domains {sorted(domains)}.")

    def function(z):
        for m in maps:
            z = m(z)
        return z

    inverse = None
    if all(m.has_inverse for m in maps):

        def inverse(z):
            for m in reversed(maps):
                z = m.inverse(z)
            return z

    claimed_K = None
    if all(m.claimed_K is not None for m in maps):
        claimed_K = math.prod(m.claimed_K for m in maps)

    return MapUnderTest(
        " * ".join(m.name for m in maps),
        function,
        claimed_K=claimed_K,
        inverse=inverse,
        domain=maps[0].domain,
    )


def make_map(spec: MapSpec) -> MapUnderTest:
    r"""Create map under test from its specification.

    Args:
        spec: map specification

    Returns:
        map under test

    Examples:
        >>> mobius = make_map(MapSpec("mobius", [0.5]))
        >>> mobius(0)
        (0.5+0j)
        >>> make_map(MapSpec("radial_stretch", [2]))(0.5)
        (0.25+0j)

    """
    kind = spec.kind
    p = spec.parameters

    if kind == "composite":
        composite = compose_maps([make_map(part) for part in spec.parts])
        if spec.claimed_K is not None:
            composite.claimed_K = spec.claimed_K
        return composite

    domain = "disk"
    if kind == "identity":
        name = "identity"
        function = inverse = _identity
        claimed_K = 1.0
    elif kind == "mobius":
        if len(p) == 1:
            mobius = MobiusMap(0.0, -p[0])
            name = f"mobius(r={p[0]:g})"
        else:
            a = complex(p[1], p[2])
            mobius = MobiusMap(p[0], a)
            name = f"mobius(theta={p[0]:g}, a={utils.format_point(a)})"
        function = mobius.apply
        inverse = mobius.inverse().apply
        claimed_K = 1.0
    elif kind in ("radial_stretch", "halfplane_stretch"):
        exponent = p[0]
        name = f"{kind}(K={exponent:g})"

        def function(z, exponent=exponent):
            return radial_power(z, exponent)

        def inverse(z, exponent=exponent):
            return radial_power(z, 1 / exponent)

        claimed_K = exponent
        if kind == "halfplane_stretch":
            domain = "halfplane"
    elif kind == "boundary_twist":
        c = p[0] if p else DEFAULT_TWIST
        name = f"boundary_twist(c={c:g})"

        def function(z, c=c):
            return z * np.exp(1j * c / (1 - np.abs(z)))

        def inverse(z, c=c):
            return z * np.exp(-1j * c / (1 - np.abs(z)))

        claimed_K = None
    else:  # rot0
        if p:
            rotation = RotationMap(complex(p[0], p[1]))
            name = f"rot0({utils.format_point(rotation.center)})"
            function = rotation.apply
            inverse = rotation.inverse
        else:
            name = "rot0"
            function = rot0
            inverse = rot0_inverse
        claimed_K = None

    if spec.claimed_K is not None:
        claimed_K = spec.claimed_K
    return MapUnderTest(
        name,
        function,
        claimed_K=claimed_K,
        inverse=inverse,
        domain=domain,
    )


def radial_power(
    z: np.ndarray,
    exponent: float,
) -> np.ndarray:
    r"""Radial power :math:`z \mapsto z|z|^{K - 1}`.

    Maps 0 to 0.

    """
    z = np.asarray(z, dtype=complex)
    modulus = np.abs(z)
    scale = np.ones_like(modulus)
    nonzero = modulus > 0
    scale[nonzero] = modulus[nonzero] ** (exponent - 1)
    return z * scale


def _identity(z: np.ndarray) -> np.ndarray:
    return np.asarray(z, dtype=complex).copy()


_DOMAIN_CHECKS = {
    "disk": utils.check_in_disk,
    "halfplane": utils.check_in_halfplane,
}
