from collections.abc import Sequence
import math
import os

import audeer

from hypskew.core import utils
from hypskew.core.chain import TriangleChain
from hypskew.core.triangle import Triangle


CANVAS_SIZE = 1000
r"""Width and height of the view box."""

DIAMETER_TOLERANCE = 1e-9
r"""Geodesics closer than this to a diameter are drawn as straight chords."""

RAMP = ((33, 102, 172), (178, 24, 43))
r"""First and last color of the chain color ramp."""


class Scene:
    r"""Scene of geodesic polygons and points in the disk.

    Items are rendered in the order they are added.

    Examples:
        >>> scene = Scene()
        >>> scene.add_point(0)
        >>> len(scene)
        1

    """

    def __init__(self):
        self.items = []
        r"""SVG elements of the scene."""

    def __len__(self) -> int:  # noqa: D105
        return len(self.items)

    def add_chain(self, chain: TriangleChain):
        r"""Add triangles of a chain colored by their index.

        The target of the chain is added as point.

        """
        count = len(chain)
        for index, triangle in enumerate(chain.triangles):
            fraction = index / (count - 1) if count > 1 else 0.0
            self.add_triangle(triangle, stroke=color_ramp(fraction))
        self.add_point(chain.target, label="p")

    def add_geodesic(
        self,
        p: complex,
        q: complex,
        *,
        stroke: str = "#000000",
    ):
        r"""Add geodesic segment between two points."""
        p = complex(utils.check_in_disk(p))
        q = complex(utils.check_in_disk(q))
        path = f"M {_point(p)} {_segment(p, q)}"
        self.items.append(_path(path, stroke=stroke))

    def add_point(
        self,
        z: complex,
        *,
        label: str = None,
        fill: str = "#000000",
    ):
        r"""Add point with optional label."""
        z = complex(utils.check_in_disk(z))
        x, y = _to_canvas(z)
        self.items.append(
            f'<circle cx="{_number(x)}" cy="{_number(y)}" r="4.000000" '
            f'fill="{fill}" />'
        )
        if label is not None:
            self.items.append(
                f'<text x="{_number(x + 6)}" y="{_number(y - 6)}" '
                f'font-size="20">{label}</text>'
            )

    def add_triangle(
        self,
        triangle: Triangle | Sequence[complex],
        *,
        stroke: str = "#000000",
    ):
        r"""Add triangle with geodesic sides."""
        if isinstance(triangle, Triangle):
            vertices = triangle.vertices
        else:
            vertices = tuple(complex(v) for v in triangle)
        vertices = [complex(utils.check_in_disk(v, name="Vertex")) for v in vertices]
        v1, v2, v3 = vertices
        path = (
            f"M {_point(v1)} "
            f"{_segment(v1, v2)} "
            f"{_segment(v2, v3)} "
            f"{_segment(v3, v1)} Z"
        )
        self.items.append(_path(path, stroke=stroke))

    def write(self, path: str) -> str:
        r"""Write scene to SVG file.

        Args:
            path: path to SVG file

        Returns:
            absolute path of the file

        """
        path = audeer.path(path)
        audeer.mkdir(os.path.dirname(path))
        with open(path, "w", encoding="utf-8", newline="\n") as fp:
            fp.write(render_svg(self))
        return path


def color_ramp(fraction: float) -> str:
    r"""Color interpolated linearly between the ends of :data:`RAMP`.

    Examples:
        >>> color_ramp(0.0)
        '#2166ac'
        >>> color_ramp(1.0)
        '#b2182b'

    """
    fraction = min(max(float(fraction), 0.0), 1.0)
    start, end = RAMP
    rgb = tuple(round(a + fraction * (b - a)) for a, b in zip(start, end))
    return "#%02x%02x%02x" % rgb


def render_svg(scene: Scene) -> str:
    r"""Render scene to SVG document.

    The unit disk is mapped to a view box
    of :data:`CANVAS_SIZE` times :data:`CANVAS_SIZE`.
    Geodesics are drawn as circular arcs
    orthogonal to the unit circle,
    or as straight chords for diameters.
    Numbers are printed with 6 decimals,
    which makes the output stable.

    Args:
        scene: scene

    Returns:
        SVG document

    Examples:
        >>> print(render_svg(Scene()))
        <?xml version="1.0" encoding="UTF-8"?>
        <svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000" width="1000" height="1000">
        <circle cx="500.000000" cy="500.000000" r="500.000000" fill="none" stroke="#000000" stroke-width="2" />
        </svg>
        <BLANKLINE>

    """  # noqa: E501
    half = CANVAS_SIZE / 2
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="0 0 {CANVAS_SIZE} {CANVAS_SIZE}" '
            f'width="{CANVAS_SIZE}" height="{CANVAS_SIZE}">'
        ),
        (
            f'<circle cx="{_number(half)}" cy="{_number(half)}" '
            f'r="{_number(half)}" fill="none" stroke="#000000" stroke-width="2" />'
        ),
    ]
    lines.extend(scene.items)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _number(value: float) -> str:
    text = f"{value:.6f}"
    if text == "-0.000000":
        text = "0.000000"
    return text


def _path(d: str, *, stroke: str) -> str:
    return f'<path d="{d}" fill="none" stroke="{stroke}" stroke-width="1.5" />'


def _point(z: complex) -> str:
    x, y = _to_canvas(z)
    return f"{_number(x)} {_number(y)}"


def _segment(p: complex, q: complex) -> str:
    # circle through p and q orthogonal to the unit circle
    # has center c with Re(conj(c) z) = (1 + |z|^2) / 2 for z = p, q
    det = p.real * q.imag - p.imag * q.real
    if abs(det) < DIAMETER_TOLERANCE:
        return f"L {_point(q)}"
    bp = (1 + abs(p) ** 2) / 2
    bq = (1 + abs(q) ** 2) / 2
    center = complex(
        (bp * q.imag - bq * p.imag) / det,
        (bq * p.real - bp * q.real) / det,
    )
    radius = math.sqrt(abs(center) ** 2 - 1) * CANVAS_SIZE / 2
    # y axis points down on the canvas
    sweep = 0 if det > 0 else 1
    return f"A {_number(radius)} {_number(radius)} 0 0 {sweep} {_point(q)}"


def _to_canvas(z: complex) -> tuple[float, float]:
    half = CANVAS_SIZE / 2
    return half + half * z.real, half - half * z.imag
