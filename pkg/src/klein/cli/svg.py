"""Deterministic SVG diagrams of points, lines and the null structure of a space."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..algebra import Multivector
from ..errors import KleinError, UndrawableBlade
from ..geometry import Classification, Space, classify, null_lines_through
from .evaluate import parse_blade

WIDTH = 400.0
SAMPLES = 256
DEFAULT_VIEWPORT = (-2.0, 2.0, -2.0, 2.0)
_COLOURS = {"point": "#1f4e9c", "line": "#1f4e9c", "null": "#c0392b", "axis": "#999999", "shade": "#e8eef8"}


@dataclass(frozen=True)
class PlotItem:
    blade: Multivector
    color: str | None = None
    label: str | None = None

    @property
    def kind(self) -> str:
        grade = self.blade.grade_of(1e-12 * self.blade.scale())
        if grade == 1:
            return "line"
        if grade == 2:
            return "point"
        raise UndrawableBlade(f"{self.blade} is neither a point nor a line")


@dataclass(frozen=True)
class PlotSpec:
    space: Space
    items: tuple = ()
    viewport: tuple = DEFAULT_VIEWPORT
    show_null_structure: bool = False
    shade_proper: bool = False

    def __post_init__(self):
        vp = tuple(float(v) for v in self.viewport)
        if len(vp) != 4 or not all(math.isfinite(v) for v in vp):
            raise ValueError("viewport is four finite numbers [xmin, xmax, ymin, ymax]")
        if not (vp[0] < vp[1] and vp[2] < vp[3]):
            raise ValueError("viewport needs xmin < xmax and ymin < ymax")
        object.__setattr__(self, "viewport", vp)
        object.__setattr__(self, "items", tuple(self.items))
        for item in self.items:
            item.kind  # raises UndrawableBlade early

    @classmethod
    def from_json(cls, data: dict, space: Space | None = None) -> "PlotSpec":
        """Build from a decoded JSON object.

        Items are ``{"blade": <text or 8-array>, "color": ..., "label": ...}``;
        ``space`` overrides the plot spec's own ``"space"`` field.
        """
        if space is None:
            if "space" not in data:
                raise ValueError("plot spec has no space and none was given")
            space = Space.from_name(data["space"])
        items = []
        for raw in data.get("items", []):
            if not isinstance(raw, dict):
                raw = {"blade": raw}
            blade = raw["blade"]
            if isinstance(blade, str):
                blade = parse_blade(blade, space)
            else:
                blade = Multivector(blade)
            items.append(PlotItem(blade, raw.get("color"), raw.get("label")))
        return cls(
            space=space,
            items=items,
            viewport=data.get("viewport", DEFAULT_VIEWPORT),
            show_null_structure=bool(data.get("show_null_structure", False)),
            shade_proper=bool(data.get("shade_proper", False)),
        )


def _num(v: float) -> str:
    text = f"{v:.3f}"
    return "0.000" if text == "-0.000" else text


class _Canvas:
    def __init__(self, viewport):
        self.xmin, self.xmax, self.ymin, self.ymax = viewport
        self.width = WIDTH
        self.height = WIDTH * (self.ymax - self.ymin) / (self.xmax - self.xmin)

    def px(self, x: float, y: float) -> tuple:
        sx = (x - self.xmin) / (self.xmax - self.xmin) * self.width
        sy = (self.ymax - y) / (self.ymax - self.ymin) * self.height
        return sx, sy

    def inside(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    def clip_line(self, d: float, a: float, b: float):
        """End points of ``d + a x + b y = 0`` inside the viewport, or None."""
        hits = []
        if b != 0:
            for x in (self.xmin, self.xmax):
                hits.append((x, -(d + a * x) / b))
        if a != 0:
            for y in (self.ymin, self.ymax):
                hits.append((-(d + b * y) / a, y))
        tol = 1e-12 * max(abs(self.xmax - self.xmin), abs(self.ymax - self.ymin))
        hits = [
            (x, y)
            for x, y in hits
            if self.xmin - tol <= x <= self.xmax + tol and self.ymin - tol <= y <= self.ymax + tol
        ]
        if len(hits) < 2:
            return None
        # farthest pair along the line direction
        direction = np.array([b, -a])
        proj = [float(np.dot(direction, h)) for h in hits]
        lo, hi = hits[int(np.argmin(proj))], hits[int(np.argmax(proj))]
        if lo == hi:
            return None
        return lo, hi

    def path(self, xy) -> str:
        parts = []
        for k, (x, y) in enumerate(xy):
            sx, sy = self.px(x, y)
            parts.append(f"{'M' if k == 0 else 'L'}{_num(sx)} {_num(sy)}")
        return " ".join(parts)


def _null_conic(space: Space, canvas: _Canvas):
    """Sampled branches of the curve of null points, or an empty list when it has no finite points."""
    s0, s1, s2 = space.signature.sigma
    # null points satisfy s1 s2 + s2 s0 x^2 + s0 s1 y^2 = 0
    cw, cx, cy = s1 * s2, s2 * s0, s0 * s1
    if cx == 0 and cy == 0:
        return []
    if cx == cy:
        if cw * cx >= 0:
            return []
        r = math.sqrt(-cw / cx)
        t = np.linspace(0.0, 2.0 * math.pi, SAMPLES)
        return [list(zip(r * np.cos(t), r * np.sin(t)))]
    # hyperbola cx x^2 + cy y^2 = rhs, cx and cy of opposite sign
    rhs = -cw
    reach = max(abs(canvas.xmin), abs(canvas.xmax), abs(canvas.ymin), abs(canvas.ymax))
    if rhs / cy > 0:
        open_y, stretch = math.sqrt(rhs / cy), math.sqrt(rhs / -cx)
    else:
        open_y, stretch = None, math.sqrt(rhs / -cy)
    u = np.linspace(-1.0, 1.0, SAMPLES) * math.asinh(reach / stretch)
    along = stretch * np.sinh(u)
    if open_y is not None:
        ys = open_y * np.cosh(u)
        return [list(zip(along, ys)), list(zip(along, -ys))]
    xs = math.sqrt(rhs / cx) * np.cosh(u)
    return [list(zip(xs, along)), list(zip(-xs, along))]


def _shade(space: Space, canvas: _Canvas, branches) -> list:
    """Elements filling the region of proper points."""
    rect = (
        f"M{_num(0)} {_num(0)} L{_num(canvas.width)} {_num(0)} "
        f"L{_num(canvas.width)} {_num(canvas.height)} L{_num(0)} {_num(canvas.height)} Z"
    )
    origin_proper = classify(Multivector.basis(4), space) is Classification.PROPER
    if not branches:
        if not origin_proper:
            return []
        return [f'<path class="proper" d="{rect}" fill="{_COLOURS["shade"]}" stroke="none"/>']
    if len(branches) == 1:
        region = canvas.path(branches[0]) + " Z"
    else:
        # region between the two branches: walk one forwards, the other backwards
        region = canvas.path(list(branches[0]) + list(reversed(branches[1]))) + " Z"
    d = region if origin_proper else f"{rect} {region}"
    return [f'<path class="proper" d="{d}" fill="{_COLOURS["shade"]}" fill-rule="evenodd" stroke="none"/>']


def _line_element(canvas: _Canvas, blade: Multivector, css: str, colour: str, dash: bool = False):
    ends = canvas.clip_line(blade.d, blade.a, blade.b)
    if ends is None:
        return None
    (x0, y0), (x1, y1) = ends
    sx0, sy0 = canvas.px(x0, y0)
    sx1, sy1 = canvas.px(x1, y1)
    extra = ' stroke-dasharray="6 4"' if dash else ""
    return (
        f'<line class="{css}" x1="{_num(sx0)}" y1="{_num(sy0)}" x2="{_num(sx1)}" y2="{_num(sy1)}" '
        f'stroke="{colour}" stroke-width="1.5"{extra}/>'
    )


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def render_svg(spec: PlotSpec) -> str:
    """SVG 1.1 text for ``spec``; identical specs give identical bytes."""
    canvas = _Canvas(spec.viewport)
    w, h = _num(canvas.width), _num(canvas.height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<title>{_escape(spec.space.name)}</title>',
        f'<defs><clipPath id="viewport"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath></defs>',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
        '<g clip-path="url(#viewport)">',
    ]
    branches = _null_conic(spec.space, canvas) if (spec.show_null_structure or spec.shade_proper) else []
    if spec.shade_proper:
        out.extend(_shade(spec.space, canvas, branches))

    if canvas.ymin <= 0 <= canvas.ymax:
        el = _line_element(canvas, Multivector.basis(3), "axis", _COLOURS["axis"])
        if el:
            out.append(el)
    if canvas.xmin <= 0 <= canvas.xmax:
        el = _line_element(canvas, Multivector.basis(2), "axis", _COLOURS["axis"])
        if el:
            out.append(el)

    if spec.show_null_structure:
        for branch in branches:
            out.append(
                f'<path class="null-curve" d="{canvas.path(branch)}" fill="none" '
                f'stroke="{_COLOURS["null"]}" stroke-width="1.5"/>'
            )
        if spec.space.kinematic:
            for item in spec.items:
                if item.kind != "point":
                    continue
                try:
                    lines = null_lines_through(item.blade, spec.space)
                except KleinError:
                    continue
                for ln in lines:
                    el = _line_element(canvas, ln, "null-line", _COLOURS["null"], dash=True)
                    if el:
                        out.append(el)

    for item in spec.items:
        colour = item.color or _COLOURS[item.kind]
        if item.kind == "line":
            el = _line_element(canvas, item.blade, "line", colour)
            if el:
                out.append(el)
            continue
        b = item.blade
        if b.w == 0:
            continue  # ideal points sit at infinity
        x, y = b.x / b.w, b.y / b.w
        if not canvas.inside(x, y):
            continue
        sx, sy = canvas.px(x, y)
        out.append(f'<circle class="point" cx="{_num(sx)}" cy="{_num(sy)}" r="3" fill="{colour}"/>')
        if item.label:
            out.append(
                f'<text x="{_num(sx + 5)}" y="{_num(sy - 5)}" font-size="12" fill="{colour}">{_escape(item.label)}</text>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
