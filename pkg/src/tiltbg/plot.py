"""Deterministic SVG pictures of curves ``nu = 0``, walls and points in the (beta, alpha) plane.

Geometry is exact upstream; floats appear only when coordinates are written,
at 6 significant digits.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import ChernCharacter, as_rational, format_rational
from .walls import CircleWall, VerticalCurve, VerticalWall, numerical_wall, theta_curve, wall_from_json

CURVE_SAMPLES = 240


class PlotSpecError(ValueError):
    pass


@dataclass
class PlotSpec:
    beta_range: tuple[Fraction, Fraction]
    alpha_range: tuple[Fraction, Fraction]
    drawables: list[dict[str, Any]] = field(default_factory=list)
    width: int = 640
    height: int = 400

    def __post_init__(self):
        self.beta_range = tuple(as_rational(x) for x in self.beta_range)
        self.alpha_range = tuple(as_rational(x) for x in self.alpha_range)
        if not self.beta_range[0] < self.beta_range[1]:
            raise PlotSpecError("beta range is empty")
        if not self.alpha_range[0] < self.alpha_range[1]:
            raise PlotSpecError("alpha range is empty")
        if self.width <= 0 or self.height <= 0:
            raise PlotSpecError("output dimensions must be positive")

    @classmethod
    def from_json(cls, obj) -> "PlotSpec":
        return cls(
            beta_range=tuple(obj["beta_range"]),
            alpha_range=tuple(obj.get("alpha_range", ("0", "1"))),
            drawables=list(obj.get("drawables", [])),
            width=int(obj.get("width", 640)),
            height=int(obj.get("height", 400)),
        )

    def to_json(self):
        return {
            "beta_range": [format_rational(x) for x in self.beta_range],
            "alpha_range": [format_rational(x) for x in self.alpha_range],
            "drawables": self.drawables,
            "width": self.width,
            "height": self.height,
        }


def _num(x: float) -> str:
    s = f"{x:.6g}"
    return "0" if s == "-0" else s


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


class _Frame:
    def __init__(self, spec: PlotSpec):
        self.b0, self.b1 = (float(x) for x in spec.beta_range)
        self.a0, self.a1 = (float(x) for x in spec.alpha_range)
        self.w, self.h = spec.width, spec.height

    def x(self, beta: float) -> float:
        return (beta - self.b0) / (self.b1 - self.b0) * self.w

    def y(self, alpha: float) -> float:
        return self.h - (alpha - self.a0) / (self.a1 - self.a0) * self.h

    def sx(self, d: float) -> float:
        return d / (self.b1 - self.b0) * self.w

    def sy(self, d: float) -> float:
        return d / (self.a1 - self.a0) * self.h


def _polyline_paths(fr: _Frame, pts: list[tuple[float, float] | None]) -> list[str]:
    """Split a sampled curve at ``None`` gaps into SVG path data strings."""
    paths, cur = [], []
    for p in pts + [None]:
        if p is None:
            if len(cur) >= 2:
                paths.append("M" + " L".join(f"{_num(fr.x(b))},{_num(fr.y(a))}" for b, a in cur))
            cur = []
        else:
            cur.append(p)
    return paths


def _curve_elements(fr: _Frame, curve, label: str) -> list[str]:
    if isinstance(curve, VerticalCurve):
        if curve.v.ch1 <= 0:
            return []
        x = _num(fr.x(float(curve.beta)))
        return [f'<path class="curve" d="M{x},{_num(fr.y(fr.a0))} L{x},{_num(fr.y(fr.a1))}"><title>{_esc(label)}</title></path>']
    c, k = float(curve.center), float(curve.k)
    betas = [fr.b0 + (fr.b1 - fr.b0) * i / CURVE_SAMPLES for i in range(CURVE_SAMPLES + 1)]
    vertex = None
    if k >= 0:
        # Land exactly on the vertex so the branch meets the beta-axis.
        vertex = c - math.sqrt(k) if curve.v.ch0 > 0 else c + math.sqrt(k)
        if fr.b0 < vertex < fr.b1:
            betas = sorted(set(betas) | {vertex})
    pts = []
    for b in betas:
        a2 = 0.0 if b == vertex else (b - c) ** 2 - k
        on_branch = b * float(curve.v.ch0) < float(curve.v.ch1) or b == vertex
        pts.append((b, math.sqrt(a2)) if a2 >= 0 and on_branch else None)
    return [f'<path class="curve" d="{d}"><title>{_esc(label)}</title></path>' for d in _polyline_paths(fr, pts)]


def _wall_elements(fr: _Frame, wall, label: str) -> list[str]:
    if isinstance(wall, VerticalWall):
        x = _num(fr.x(float(wall.beta)))
        return [f'<path class="wall" d="M{x},{_num(fr.y(fr.a0))} L{x},{_num(fr.y(fr.a1))}"><title>{_esc(label)}</title></path>']
    assert isinstance(wall, CircleWall)
    m, r = float(wall.center), math.sqrt(float(wall.radius_sq))
    d = (
        f"M{_num(fr.x(m - r))},{_num(fr.y(0.0))} "
        f"A{_num(fr.sx(r))},{_num(fr.sy(r))} 0 0 1 {_num(fr.x(m + r))},{_num(fr.y(0.0))}"
    )
    return [f'<path class="wall" d="{d}"><title>{_esc(label)}</title></path>']


def _character(obj) -> ChernCharacter:
    return ChernCharacter.from_json(obj)


def render_svg(spec: PlotSpec) -> str:
    if not spec.drawables:
        raise PlotSpecError("nothing to draw")
    fr = _Frame(spec)
    body: list[str] = []
    texts: list[str] = []
    for i, item in enumerate(spec.drawables):
        kind = item.get("type")
        label = item.get("label", f"{kind}{i}")
        if kind == "curve":
            v = _character(item["ch"])
            body += _curve_elements(fr, theta_curve(v), label if "label" in item else f"nu=0 for {v}")
        elif kind == "wall":
            if "wall" in item:
                wall = wall_from_json(item["wall"])
            else:
                wall = numerical_wall(_character(item["ch"]), _character(item["other"]))
            body += _wall_elements(fr, wall, label)
        elif kind == "point":
            b = float(as_rational(item["beta"]))
            a = math.sqrt(float(as_rational(item["alpha_sq"])))
            body.append(f'<circle class="point" cx="{_num(fr.x(b))}" cy="{_num(fr.y(a))}" r="3"><title>{_esc(label)}</title></circle>')
            if "label" in item:
                texts.append(f'<text x="{_num(fr.x(b) + 5)}" y="{_num(fr.y(a) - 5)}">{_esc(label)}</text>')
        elif kind == "label":
            b = float(as_rational(item["beta"]))
            a = float(as_rational(item["alpha"]))
            texts.append(f'<text x="{_num(fr.x(b))}" y="{_num(fr.y(a))}">{_esc(item["text"])}</text>')
        else:
            raise PlotSpecError(f"unknown drawable type {kind!r}")

    axes = []
    if fr.a0 <= 0 <= fr.a1:
        axes.append(f'<line class="axis" x1="0" y1="{_num(fr.y(0))}" x2="{spec.width}" y2="{_num(fr.y(0))}"/>')
    if fr.b0 <= 0 <= fr.b1:
        axes.append(f'<line class="axis" x1="{_num(fr.x(0))}" y1="0" x2="{_num(fr.x(0))}" y2="{spec.height}"/>')

    style = (
        ".axis{stroke:#444;stroke-width:1}"
        ".curve{fill:none;stroke:#1f5fa8;stroke-width:1.5}"
        ".wall{fill:none;stroke:#b03a2e;stroke-width:1.5}"
        ".point{fill:#000}"
        "text{font:12px sans-serif}"
    )
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f"<style>{style}</style>",
        f'<clipPath id="frame"><rect x="0" y="0" width="{spec.width}" height="{spec.height}"/></clipPath>',
        *axes,
        '<g clip-path="url(#frame)">',
        *body,
        "</g>",
        *texts,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def load_spec(path: str) -> PlotSpec:
    with open(path) as fh:
        return PlotSpec.from_json(json.load(fh))
