from collections.abc import Callable

import numpy as np

from hypskew.core import utils
from hypskew.core.disk import HPoint
from hypskew.core.disk import dist_disk
from hypskew.core.errors import DegenerateError
from hypskew.core.errors import DomainError
from hypskew.core.mobius import MobiusMap


def rotation_angle(t: float | np.ndarray) -> float | np.ndarray:
    r"""Angle by which :func:`rot0` turns the circle of radius ``t``.

    Equals :math:`\cos^{-1}((1 + t^2)/2)`,
    the interior angle of the equilateral triangle
    with vertices :math:`0, z, R_0(z)` for :math:`|z| = t`.

    """
    return np.arccos((1 + np.asarray(t, dtype=float) ** 2) / 2)


def rot0(z: complex | np.ndarray) -> complex | np.ndarray:
    r"""Rotation map :math:`R_0`.

    .. math::

        R_0(z) = z \exp\left(i \cos^{-1} \frac{1 + |z|^2}{2}\right)

    Every circle :math:`|z| = t` is rotated
    by an angle depending on :math:`t`,
    such that :math:`0, z, R_0(z)`
    form an equilateral triangle.
    :math:`R_0(0) = 0`.

    Args:
        z: point(s) of the disk

    Returns:
        image point(s)

    Raises:
        DomainError: if a point is not inside the unit disk

    Examples:
        >>> w = rot0(0.5)
        >>> round(abs(w), 12), round(float(np.angle(w)), 6)
        (0.5, 0.895665)

    """
    z = utils.check_in_disk(z)
    image = z * np.exp(1j * rotation_angle(np.abs(z)))
    if np.ndim(image) == 0:
        return complex(image)
    return image


def rot0_inverse(z: complex | np.ndarray) -> complex | np.ndarray:
    r"""Inverse of :func:`rot0`."""
    z = utils.check_in_disk(z)
    image = z * np.exp(-1j * rotation_angle(np.abs(z)))
    if np.ndim(image) == 0:
        return complex(image)
    return image


class RotationMap:
    r"""Rotation map :math:`R_w` centred at a point.

    :math:`R_w = A_w^{-1} \circ R_0 \circ A_w`
    with :math:`A_w(z) = (z - w) / (1 - \bar{w} z)`.
    The triangle :math:`w, z, R_w(z)`
    is equilateral for every :math:`z \ne w`.

    Args:
        center: center :math:`w`

    Raises:
        DomainError: if ``center`` is not inside the unit disk

    Examples:
        >>> from hypskew import skew_hyp
        >>> rotation = RotationMap(0.3j)
        >>> round(skew_hyp([0.3j, 0.5, rotation(0.5)]), 10)
        1.0

    """

    def __init__(self, center: complex | HPoint = 0.0):
        center = complex(utils.check_in_disk(center, name="Center"))
        self.center = center
        r"""Center of the rotation."""
        self._move = MobiusMap.moving_to_origin(center)
        self._back = self._move.inverse()

    def __call__(self, z: complex | np.ndarray) -> complex | np.ndarray:
        r"""Apply map, see :meth:`apply`."""
        return self.apply(z)

    def __repr__(self) -> str:  # noqa: D105
        return f"RotationMap({self.center!r})"

    def apply(self, z: complex | np.ndarray) -> complex | np.ndarray:
        r"""Apply map to point(s) of the disk.

        Raises:
            DegenerateError: if a point coincides with the center

        """
        self._check_not_center(z)
        return self._back(rot0(self._move(z)))

    def inverse(self, z: complex | np.ndarray) -> complex | np.ndarray:
        r"""Apply inverse map to point(s) of the disk.

        Raises:
            DegenerateError: if a point coincides with the center

        """
        self._check_not_center(z)
        return self._back(rot0_inverse(self._move(z)))

    def _check_not_center(self, z: complex | np.ndarray):
        if np.any(dist_disk(z, self.center) < utils.DEGENERATE_LENGTH):
            raise DegenerateError(
                f"Point coincides with rotation center "
                f"{utils.format_point(self.center)}."
            )


def rotw(
    w: complex | HPoint,
    z: complex | np.ndarray,
) -> complex | np.ndarray:
    r"""Apply rotation map centred at ``w``, see :class:`hypskew.RotationMap`."""
    return RotationMap(w).apply(z)


def rotw_inverse(
    w: complex | HPoint,
    z: complex | np.ndarray,
) -> complex | np.ndarray:
    r"""Apply inverse rotation map centred at ``w``."""
    return RotationMap(w).inverse(z)


def beltrami_rot0(z: complex | np.ndarray) -> complex | np.ndarray:
    r"""Complex dilatation of :func:`rot0`.

    With :math:`z = t e^{i\theta}`,
    :math:`R_0(z) = t e^{i(\theta + g(t))}`
    and :math:`g(t) = \cos^{-1}((1 + t^2)/2)`

    .. math::

        \mu_{R_0}(z) = e^{2i\theta}
        \frac{i t g'(t)}{2 + i t g'(t)},
        \quad
        t g'(t) = \frac{-2t^2}{\sqrt{(1 - t^2)(3 + t^2)}}.

    Args:
        z: point(s) of the disk with :math:`z \ne 0`

    Returns:
        complex dilatation

    Raises:
        DomainError: if a point is the origin
            or not inside the unit disk

    """
    z = utils.check_in_disk(z)
    t = np.abs(z)
    if np.any(t == 0):
        raise DomainError("Dilatation of the rotation map is undefined at 0.")
    slope = -2 * t**2 / np.sqrt((1 - t**2) * (3 + t**2))
    mu = (z / t) ** 2 * (1j * slope) / (2 + 1j * slope)
    if np.ndim(mu) == 0:
        return complex(mu)
    return mu


def beltrami_rot0_exact(z: complex | np.ndarray) -> float | np.ndarray:
    r"""Modulus of the complex dilatation of :func:`rot0`.

    .. math::

        |\mu_{R_0}(z)| = \frac{t^2}{\sqrt{3 - 2t^2}},
        \quad t = |z|

    It tends to 1 for :math:`|z| \to 1`,
    so :func:`rot0` is not quasiconformal.

    Args:
        z: point(s) of the disk with :math:`z \ne 0`

    Returns:
        modulus of the complex dilatation

    Raises:
        DomainError: if a point is the origin
            or not inside the unit disk

    Examples:
        >>> round(float(beltrami_rot0_exact(0.5)), 6)
        0.158114

    """
    z = utils.check_in_disk(z)
    t = np.abs(z)
    if np.any(t == 0):
        raise DomainError("Dilatation of the rotation map is undefined at 0.")
    value = t**2 / np.sqrt(3 - 2 * t**2)
    if np.ndim(value) == 0:
        return float(value)
    return value


def beltrami_fd(
    function: Callable[[np.ndarray], np.ndarray],
    z: complex,
    *,
    h: float = 1e-5,
    modulus: bool = True,
) -> float | complex:
    r"""Complex dilatation by central finite differences.

    .. math::

        \mu_f = \frac{f_{\bar z}}{f_z},
        \quad
        f_z = \frac{f_x - i f_y}{2},
        \quad
        f_{\bar z} = \frac{f_x + i f_y}{2}

    The step is reduced to :math:`(1 - |z|)/4`
    close to the boundary,
    so the stencil stays inside the disk.

    Args:
        function: vectorized map of the disk
        z: point of the disk
        h: step size
        modulus: return :math:`|\mu_f|`
            instead of :math:`\mu_f`

    Returns:
        (modulus of the) complex dilatation

    Raises:
        DomainError: if ``z`` is not inside the unit disk
            or ``h`` is not positive
        DegenerateError: if :math:`f_z` vanishes

    Examples:
        >>> round(beltrami_fd(lambda z: z + 0.5 * np.conj(z), 0.1), 8)
        0.5

    """
    z = complex(utils.check_in_disk(z))
    h = utils.check_positive(h, "Step size")
    h = min(h, (1 - abs(z)) / 4)
    stencil = np.array([z + h, z - h, z + 1j * h, z - 1j * h])
    values = np.asarray(function(stencil), dtype=complex)
    f_x = (values[0] - values[1]) / (2 * h)
    f_y = (values[2] - values[3]) / (2 * h)
    f_z = (f_x - 1j * f_y) / 2
    f_zbar = (f_x + 1j * f_y) / 2
    if f_z == 0:
        raise DegenerateError(
            f"Derivative vanishes at {utils.format_point(z)}, "
            f"dilatation is undefined."
        )
    mu = complex(f_zbar / f_z)
    if modulus:
        return abs(mu)
    return mu


def max_dilatation(mu: float) -> float:
    r"""Maximal dilatation :math:`K = (1 + |\mu|) / (1 - |\mu|)`.

    Raises:
        DomainError: if :math:`|\mu| \ge 1`

    """
    mu = abs(mu)
    if mu >= 1:
        raise DomainError(f"Dilatation modulus must be below 1, got {mu}.")
    return (1 + mu) / (1 - mu)
