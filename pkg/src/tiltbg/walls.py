"""Numerical walls, the curves ``nu = 0``, and the region V used on P^3.

Walls are loci ``nu(v) = nu(w)``; whether a wall is an actual wall of
instability is a categorical question that is not decided here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import (
    ChernCharacter,
    RationalLike,
    TiltError,
    as_rational,
    exact_sqrt,
    format_rational,
)
from .slopes import SurfacePoint, delta


class UndefinedCurveError(TiltError):
    pass


class DegenerateWallError(TiltError):
    """The two truncated classes are proportional: the wall is everywhere or nowhere."""


class EmptyWallError(TiltError):
    """The circle ``nu(v) = nu(w)`` has no point in the upper half-plane."""


@dataclass(frozen=True)
class VerticalWall:
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", as_rational(self.beta))

    def to_json(self):
        return {"kind": "vertical", "beta": format_rational(self.beta)}


@dataclass(frozen=True)
class CircleWall:
    """Upper semicircle ``(beta - center)^2 + alpha^2 = radius_sq``."""

    center: Fraction
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", as_rational(self.center))
        object.__setattr__(self, "radius_sq", as_rational(self.radius_sq))
        if self.radius_sq <= 0:
            raise EmptyWallError(f"radius_sq must be positive, got {self.radius_sq}")

    def alpha_sq_at(self, beta: Fraction) -> Fraction:
        return self.radius_sq - (beta - self.center) ** 2

    def to_json(self):
        return {
            "kind": "circle",
            "center": format_rational(self.center),
            "radius_sq": format_rational(self.radius_sq),
        }


Wall = Union[VerticalWall, CircleWall]


def wall_from_json(obj) -> Wall:
    if obj["kind"] == "vertical":
        return VerticalWall(as_rational(obj["beta"]))
    if obj["kind"] == "circle":
        return CircleWall(as_rational(obj["center"]), as_rational(obj["radius_sq"]))
    raise ValueError(f"unknown wall kind {obj['kind']!r}")


@dataclass(frozen=True)
class VerticalCurve:
    """``nu(v) = 0`` for a rank-zero class: the line ``beta = ch2/ch1``."""

    beta: Fraction
    v: ChernCharacter

    def on_branch(self, beta: Fraction) -> bool:
        return self.v.ch1 > 0

    def to_json(self):
        return {"kind": "vertical", "beta": format_rational(self.beta), "ch": self.v.to_json()}


@dataclass(frozen=True)
class HyperbolaCurve:
    """``(beta - center)^2 - alpha^2 = k`` on the branch where ``ch1^beta > 0``."""

    center: Fraction
    k: Fraction
    v: ChernCharacter

    def alpha_sq_at(self, beta: Fraction) -> Fraction:
        return (beta - self.center) ** 2 - self.k

    def on_branch(self, beta: Fraction) -> bool:
        return beta * self.v.ch0 < self.v.ch1

    @property
    def branch(self) -> str:
        return "left" if self.v.ch0 > 0 else "right"

    def to_json(self):
        return {
            "kind": "hyperbola",
            "center": format_rational(self.center),
            "k": format_rational(self.k),
            "branch": self.branch,
            "ch": self.v.to_json(),
        }


ThetaCurve = Union[VerticalCurve, HyperbolaCurve]


def curve_from_json(obj) -> ThetaCurve:
    return theta_curve(ChernCharacter.from_json(obj["ch"]))


def theta_curve(v: ChernCharacter) -> ThetaCurve:
    if v.ch0 == 0:
        if v.ch1 == 0:
            raise UndefinedCurveError(f"nu = 0 is undefined for {v}: ch0 = ch1 = 0")
        return VerticalCurve(v.ch2 / v.ch1, v)
    return HyperbolaCurve(v.ch1 / v.ch0, delta(v) / (v.h3 * v.ch0) ** 2, v)


def numerical_wall(v: ChernCharacter, w: ChernCharacter) -> Wall:
    """The locus ``nu(v) = nu(w)``.

    Cross-multiplying gives ``a (beta^2 + alpha^2)/2 - b beta + c = 0`` with the
    2x2 minors of the truncated classes.  The common factor ``h3`` cancels.
    """
    if v.ambient != w.ambient:
        raise ValueError("classes live on different threefolds")
    a = v.ch1 * w.ch0 - w.ch1 * v.ch0
    b = v.ch2 * w.ch0 - w.ch2 * v.ch0
    c = v.ch2 * w.ch1 - w.ch2 * v.ch1
    if a == 0:
        if b == 0:
            if c == 0:
                raise DegenerateWallError(f"{v} and {w} have proportional truncations")
            raise EmptyWallError(f"nu({v}) = nu({w}) has no solution")
        return VerticalWall(c / b)
    center = b / a
    radius_sq = center ** 2 - 2 * c / a
    if radius_sq <= 0:
        raise EmptyWallError(f"nu({v}) = nu({w}) has no point with alpha > 0")
    return CircleWall(center, radius_sq)


def _surd_sign(x: Fraction, y: Fraction, r: Fraction) -> int:
    """Sign of ``x + y*sqrt(r)`` for ``r > 0`` not a rational square."""
    sx = (x > 0) - (x < 0)
    sy = (y > 0) - (y < 0)
    if sy == 0 or sx == sy:
        return sx if sx else sy
    if sx == 0:
        return sy
    return sx if x * x > y * y * r else sy


@dataclass(frozen=True)
class SurdPoint:
    """``beta = p + q sqrt(r)``, ``alpha^2 = a0 + a1 sqrt(r)``; ``r`` is not a rational square."""

    p: Fraction
    q: Fraction
    r: Fraction
    a0: Fraction
    a1: Fraction

    def approx(self) -> tuple[float, float]:
        s = float(self.r) ** 0.5
        return float(self.p) + float(self.q) * s, float(self.a0) + float(self.a1) * s

    def to_json(self):
        return {k: format_rational(getattr(self, k)) for k in ("p", "q", "r", "a0", "a1")}


@dataclass(frozen=True)
class Intersection:
    points: tuple[SurfacePoint, ...] = ()
    surds: tuple[SurdPoint, ...] = ()
    overlap: bool = False

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def intersect(c: ThetaCurve, w: Wall) -> Intersection:
    """Points of ``c`` on ``w`` with ``alpha^2 > 0``, respecting the branch of ``c``."""
    if isinstance(c, VerticalCurve):
        if not c.on_branch(c.beta):
            return Intersection()
        if isinstance(w, VerticalWall):
            return Intersection(overlap=w.beta == c.beta)
        a2 = w.alpha_sq_at(c.beta)
        return Intersection((SurfacePoint(c.beta, a2),) if a2 > 0 else ())

    if isinstance(w, VerticalWall):
        a2 = c.alpha_sq_at(w.beta)
        if a2 > 0 and c.on_branch(w.beta):
            return Intersection((SurfacePoint(w.beta, a2),))
        return Intersection()

    # Subtracting the two equations: 2 beta^2 - 2(h+m) beta + (h^2 + m^2 - k - R) = 0.
    m, R, h, k = w.center, w.radius_sq, c.center, c.k
    disc = 2 * (k + R) - (h - m) ** 2
    if disc < 0:
        return Intersection()
    mid = (h + m) / 2
    root = exact_sqrt(disc)
    if root is not None:
        points = []
        for beta in sorted({mid - root / 2, mid + root / 2}):
            a2 = c.alpha_sq_at(beta)
            if a2 > 0 and c.on_branch(beta):
                points.append(SurfacePoint(beta, a2))
        return Intersection(tuple(points))
    surds = []
    ch0, ch1 = c.v.ch0, c.v.ch1
    for q in (Fraction(-1, 2), Fraction(1, 2)):
        a0 = (mid - h) ** 2 + q * q * disc - k
        a1 = 2 * (mid - h) * q
        if _surd_sign(a0, a1, disc) <= 0:
            continue
        if _surd_sign(mid * ch0 - ch1, q * ch0, disc) >= 0:
            continue
        surds.append(SurdPoint(mid, q, disc, a0, a1))
    return Intersection(surds=tuple(surds))


class WallRelation(str, enum.Enum):
    EQUAL = "equal"
    NESTED = "nested"
    DISJOINT = "disjoint"
    CROSSING = "crossing"


def classify_pair(w1: Wall, w2: Wall) -> WallRelation:
    if w1 == w2:
        return WallRelation.EQUAL
    if isinstance(w1, VerticalWall) and isinstance(w2, VerticalWall):
        return WallRelation.DISJOINT
    if isinstance(w1, VerticalWall) or isinstance(w2, VerticalWall):
        line, circle = (w1, w2) if isinstance(w1, VerticalWall) else (w2, w1)
        if circle.alpha_sq_at(line.beta) > 0:
            return WallRelation.CROSSING
        return WallRelation.DISJOINT
    # Semicircles meet in H iff |r1 - r2| < d < r1 + r2, i.e. (d^2 - R1 - R2)^2 < 4 R1 R2.
    s = (w1.center - w2.center) ** 2 - w1.radius_sq - w2.radius_sq
    if s * s < 4 * w1.radius_sq * w2.radius_sq:
        return WallRelation.CROSSING
    return WallRelation.NESTED if s < 0 else WallRelation.DISJOINT


def wall_size_key(w: Wall):
    """Sort key under which, among nested walls, outer walls compare larger."""
    if isinstance(w, VerticalWall):
        return (1, Fraction(0))
    return (0, w.radius_sq)


class Region(str, enum.Enum):
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"
    OUTSIDE = "outside"


V_BETA_MIN = Fraction(-2, 3)
V_ALPHA_SQ_MAX = Fraction(1, 9)


def region_of(p: SurfacePoint) -> Region:
    """Locate ``p`` in ``V = {-2/3 < beta <= 0, 0 < alpha < 1/3}`` split by ``beta = -alpha``."""
    if not (V_BETA_MIN < p.beta <= 0 and p.alpha_sq < V_ALPHA_SQ_MAX):
        return Region.OUTSIDE
    b2 = p.beta * p.beta
    if p.beta < 0 and b2 > p.alpha_sq:
        return Region.V1
    if p.beta < 0 and b2 == p.alpha_sq:
        return Region.V3
    return Region.V2


def beta_drift_ok(beta0: RationalLike, alpha0_sq: RationalLike, beta1: RationalLike) -> bool:
    """Exact test of ``|beta1| <= |beta0| + alpha0``."""
    b0, a0, b1 = abs(as_rational(beta0)), as_rational(alpha0_sq), abs(as_rational(beta1))
    if b1 <= b0:
        return True
    return (b1 - b0) ** 2 <= a0
