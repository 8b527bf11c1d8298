import cmath
import math

import numpy as np

from hypskew.core import utils
from hypskew.core.disk import HPoint


class MobiusMap:
    r"""Orientation-preserving isometry of the disk.

    The map

    .. math::

        z \mapsto e^{i\theta} \frac{z - a}{1 - \bar{a} z}

    with :math:`|a| < 1`.
    It is stored as a matrix of :math:`SU(1, 1)`,
    so composition is a matrix product
    and the inverse is the adjugate.

    Args:
        theta: rotation angle :math:`\theta`
        a: point :math:`a` that is mapped to the origin

    Raises:
        DomainError: if ``a`` is not inside the unit disk

    Examples:
        >>> mobius = MobiusMap(0, 0.5)
        >>> mobius(0.5)
        0j
        >>> round(float(mobius.theta), 6), mobius.a
        (0.0, (0.5+0j))

    """

    def __init__(
        self,
        theta: float = 0.0,
        a: complex | HPoint = 0.0,
    ):
        a = utils.check_in_disk(a, name="Center")
        scale = math.sqrt(1 - abs(a) ** 2)
        half = cmath.exp(0.5j * theta)
        alpha = half / scale
        beta = -half * a / scale
        self._matrix = np.array(
            [[alpha, beta], [beta.conjugate(), alpha.conjugate()]],
            dtype=complex,
        )

    def __call__(self, z: complex | np.ndarray) -> complex | np.ndarray:
        r"""Apply map, see :meth:`apply`."""
        return self.apply(z)

    def __repr__(self) -> str:  # noqa: D105
        return f"MobiusMap({self.theta!r}, {self.a!r})"

    @property
    def a(self) -> complex:
        r"""Point mapped to the origin."""
        alpha, beta = self._matrix[0]
        return complex(-beta / alpha)

    @property
    def matrix(self) -> np.ndarray:
        r"""Matrix :math:`[[\alpha, \beta], [\bar\beta, \bar\alpha]]`."""
        return self._matrix.copy()

    @property
    def theta(self) -> float:
        r"""Rotation angle in :math:`(-\pi, \pi]`."""
        alpha = self._matrix[0, 0]
        return cmath.phase(alpha / alpha.conjugate())

    def apply(self, z: complex | np.ndarray) -> complex | np.ndarray:
        r"""Apply map to point(s) of the disk.

        Args:
            z: point(s) of the disk

        Returns:
            image point(s)

        Raises:
            DomainError: if a point is not inside the unit disk

        """
        z = utils.check_in_disk(z)
        (alpha, beta), (gamma, delta) = self._matrix
        image = (alpha * z + beta) / (gamma * z + delta)
        if np.ndim(image) == 0:
            return complex(image)
        return image

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        r"""Composition that applies ``other`` first.

        Args:
            other: map applied first

        Returns:
            map :math:`z \mapsto` ``self(other(z))``

        """
        return MobiusMap.from_matrix(self._matrix @ other._matrix)

    def inverse(self) -> "MobiusMap":
        r"""Inverse map."""
        (alpha, beta), _ = self._matrix
        return MobiusMap.from_matrix(
            np.array(
                [[alpha.conjugate(), -beta], [-beta.conjugate(), alpha]],
                dtype=complex,
            )
        )

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "MobiusMap":
        r"""Create map from a matrix of :math:`SU(1, 1)`.

        Only the first row is used,
        the matrix is rescaled to unit determinant.

        """
        alpha, beta = np.asarray(matrix, dtype=complex)[0]
        det = abs(alpha) ** 2 - abs(beta) ** 2
        scale = math.sqrt(det)
        alpha = complex(alpha) / scale
        beta = complex(beta) / scale
        mobius = cls.__new__(cls)
        mobius._matrix = np.array(
            [[alpha, beta], [beta.conjugate(), alpha.conjugate()]],
            dtype=complex,
        )
        return mobius

    @classmethod
    def identity(cls) -> "MobiusMap":
        r"""Identity map."""
        return cls(0.0, 0.0)

    @classmethod
    def moving_to_origin(cls, w: complex | HPoint) -> "MobiusMap":
        r"""Map :math:`A_w(z) = (z - w) / (1 - \bar{w} z)`.

        Examples:
            >>> MobiusMap.moving_to_origin(0.5j)(0.5j)
            0j

        """
        return cls(0.0, w)

    @classmethod
    def placement(
        cls,
        center: complex | HPoint,
        angle: float = 0.0,
    ) -> "MobiusMap":
        r"""Map sending the origin to ``center`` after rotating by ``angle``.

        Equals :math:`A_c^{-1}(e^{i\varphi} z)`.

        Examples:
            >>> mobius = MobiusMap.placement(0.25, 1.0)
            >>> abs(mobius(0) - 0.25) < 1e-15
            True

        """
        center = utils.check_in_disk(center, name="Center")
        return cls(angle, -center * cmath.exp(-1j * angle))

    @classmethod
    def rotation(cls, angle: float) -> "MobiusMap":
        r"""Rotation :math:`z \mapsto e^{i\varphi} z` about the origin."""
        return cls(angle, 0.0)


def mobius_apply(
    mobius: MobiusMap,
    z: complex | np.ndarray,
) -> complex | np.ndarray:
    r"""Apply Möbius map to point(s) of the disk."""
    return mobius.apply(z)


def mobius_compose(
    second: MobiusMap,
    first: MobiusMap,
) -> MobiusMap:
    r"""Composition applying ``first``, then ``second``."""
    return second.compose(first)


def mobius_invert(mobius: MobiusMap) -> MobiusMap:
    r"""Inverse of Möbius map."""
    return mobius.inverse()
