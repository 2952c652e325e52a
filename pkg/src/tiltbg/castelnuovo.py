"""Castelnuovo-type bounds for space curves, derived from walls and the BG inequality.

Nothing in this module hard-codes a closed form.  A bound on
``h = ch3(I_C) - 2d`` is computed in four steps.  First take the wall of
``I_C`` against a line bundle.  Then intersect that wall with the curve
``nu(I_C) = 0``.  Next evaluate the BG inequality at the intersection point.
Finally solve the result for ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bg import bg_on_curve
from .core import ChernCharacter, OutOfDomainError, RationalLike, as_rational, format_rational, line_bundle
from .walls import Wall, intersect, numerical_wall, theta_curve


class UnsupportedIntersectionError(OutOfDomainError):
    """The curve meets the wall only at points with irrational beta."""


@dataclass(frozen=True)
class CurveData:
    """A pure one-dimensional subscheme of P^3 of degree ``degree``.

    ``genus`` is the arithmetic genus, ``chi(O_C) = 1 - genus``.  ``ch3``
    overrides ``ch3(I_C)`` when given.
    """

    degree: int
    genus: int
    integral: bool = False
    nonplanar: bool = False
    ch3: Optional[Fraction] = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if self.ch3 is not None:
            object.__setattr__(self, "ch3", as_rational(self.ch3))


def ideal_sheaf_class(c: CurveData) -> ChernCharacter:
    """``ch(I_C) = ch(O) - ch(O_C) = (1, 0, -d, g - 1 + 2d)``."""
    d = c.degree
    ch3 = c.ch3 if c.ch3 is not None else Fraction(c.genus - 1 + 2 * d)
    return ChernCharacter(1, 0, -d, ch3)


def _ideal_class(d: int, ch3: RationalLike = 0) -> ChernCharacter:
    return ChernCharacter(1, 0, -d, as_rational(ch3))


def b1_wall(d: int) -> Wall:
    """Wall of ``I_C`` against ``O(-1)``."""
    return numerical_wall(_ideal_class(d), line_bundle(-1))


def b2_wall(d: int) -> Wall:
    """Wall of ``I_C`` against ``O(-2)``; empty for ``d = 2``."""
    return numerical_wall(_ideal_class(d), line_bundle(-2))


def derive_h_bound(d: int, w: Wall) -> Fraction:
    """Largest ``h`` allowed by the BG inequality where ``nu(I_C) = 0`` meets ``w``.

    The on-curve BG value is affine in ``ch3``, so two evaluations determine
    the cut-off.  With several rational intersection points the tightest one
    is returned.
    """
    base = _ideal_class(d, 2 * d)  # h = 0
    step = _ideal_class(d, 2 * d + 1)  # h = 1
    hits = intersect(theta_curve(base), w)
    if hits.surds:
        raise UnsupportedIntersectionError(f"the degree-{d} curve meets {w} at irrational beta")
    if not hits.points:
        raise OutOfDomainError(f"the degree-{d} curve does not meet {w}")
    bounds = []
    for p in hits.points:
        f0 = bg_on_curve(base, p.beta)
        slope = bg_on_curve(step, p.beta) - f0
        bounds.append(-f0 / slope)
    return min(bounds)


@dataclass(frozen=True)
class CurveReport:
    d: int
    g: int
    h: Fraction
    bound_general: Fraction
    bound_integral_nonplanar: Optional[Fraction]
    pass_general: bool
    pass_sharp: Optional[bool]
    note: str = ""

    def to_json(self):
        fmt = lambda x: None if x is None else format_rational(x)  # noqa: E731
        return {
            "d": self.d,
            "g": self.g,
            "h": format_rational(self.h),
            "bound_general": fmt(self.bound_general),
            "bound_integral_nonplanar": fmt(self.bound_integral_nonplanar),
            "pass_general": self.pass_general,
            "pass_sharp": self.pass_sharp,
            "note": self.note,
        }


def check_curve(c: CurveData) -> CurveReport:
    d = c.degree
    h = ideal_sheaf_class(c).ch3 - 2 * d
    note = ""
    if d == 1:
        note = "degree 1 is degenerate: bound taken where nu(I_C)=0 meets the O(-1) wall"
    general = derive_h_bound(d, b1_wall(d))
    sharp = None
    if c.integral and c.nonplanar:
        if d >= 3:
            sharp = derive_h_bound(d, b2_wall(d))
        else:
            note = "an integral curve of degree < 3 is planar; sharp bound not applicable"
    return CurveReport(
        d=d,
        g=c.genus,
        h=h,
        bound_general=general,
        bound_integral_nonplanar=sharp,
        pass_general=h <= general,
        pass_sharp=None if sharp is None else h <= sharp,
        note=note,
    )
