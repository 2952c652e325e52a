"""Slope functions with exact values in Q ∪ {+inf}.

Every function takes ``alpha_sq`` rather than ``alpha``; all formulas only see
``alpha**2`` and this keeps evaluation at wall intersections rational.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import ChernCharacter, RationalLike, as_rational, format_rational, parse_rational, twist


@functools.total_ordering
class _PositiveInfinity:
    """The single extended value ``+inf``; only comparisons are supported."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("+inf")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_PositiveInfinity, ())


INF = _PositiveInfinity()
ExtendedRational = Union[Fraction, _PositiveInfinity]


def format_extended(x: ExtendedRational) -> str:
    return "inf" if x is INF else format_rational(x)


def parse_extended(text: str) -> ExtendedRational:
    return INF if text.strip() == "inf" else parse_rational(text)


@dataclass(frozen=True)
class SurfacePoint:
    """A point ``(beta, alpha)`` of the upper half-plane, stored as ``(beta, alpha**2)``."""

    beta: Fraction
    alpha_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "alpha_sq", as_rational(self.alpha_sq))
        if self.alpha_sq <= 0:
            raise ValueError(f"alpha_sq must be positive, got {self.alpha_sq}")

    def to_json(self):
        return {"beta": format_rational(self.beta), "alpha_sq": format_rational(self.alpha_sq)}

    @classmethod
    def from_json(cls, obj) -> "SurfacePoint":
        return cls(as_rational(obj["beta"]), as_rational(obj["alpha_sq"]))


def mu(v: ChernCharacter, beta: RationalLike) -> ExtendedRational:
    """Twisted slope ``ch1^beta / ch0``, with the positive factor ``1/alpha`` dropped."""
    if v.ch0 == 0:
        return INF
    return (v.ch1 - as_rational(beta) * v.ch0) / v.ch0


def nu(v: ChernCharacter, p: SurfacePoint) -> ExtendedRational:
    t = twist(v, p.beta)
    if t.ch1 == 0:
        return INF
    return (t.ch2 - p.alpha_sq / 2 * t.ch0) / t.ch1


def delta(v: ChernCharacter) -> Fraction:
    h = v.h3
    return (h * v.ch1) ** 2 - 2 * h * v.ch0 * (h * v.ch2)


def _lambda_parts(v: ChernCharacter, p: SurfacePoint):
    if v.h3 != 1:
        raise ValueError("lambda is only defined on P^3 (h3 = 1)")
    t = twist(v, p.beta)
    num = t.ch3 - p.alpha_sq / 6 * t.ch1
    den = t.ch2 - p.alpha_sq / 2 * t.ch0
    return t, num, den


def lambda_slope(v: ChernCharacter, p: SurfacePoint) -> ExtendedRational:
    _, num, den = _lambda_parts(v, p)
    if den == 0:
        return INF
    return num / den


def lambda_eps(v: ChernCharacter, p: SurfacePoint, eps: RationalLike) -> ExtendedRational:
    """``lambda`` with the extra ``-eps * ch1^beta`` numerator term."""
    eps = as_rational(eps)
    if eps < 0:
        raise ValueError("eps must be non-negative")
    t, num, den = _lambda_parts(v, p)
    if den == 0:
        return INF
    return (num - eps * t.ch1) / den
