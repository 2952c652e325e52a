"""Exact scalars, the polarized threefold, and Chern characters in the H-basis.

A class ``(ch0, ch1, ch2, ch3)`` stores the rational coefficient of ``H^i`` in
``ch_i``.  Intersection numbers such as ``H^2 ch1`` are therefore ``h3 * ch1``.
Shifts ``E[n]`` are represented by multiplying the whole class by ``(-1)^n``.
"""

from __future__ import annotations

import re
from math import isqrt
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class TiltError(ValueError):
    """Base class for domain errors raised by this package."""


class OutOfDomainError(TiltError):
    pass


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r} (expected 'p' or 'p/q')")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PolarizedThreefold:
    """Picard-rank-one threefold, remembered only through ``h3 = H^3``."""

    h3: int = 1

    def __post_init__(self):
        if not isinstance(self.h3, int) or self.h3 < 1:
            raise ValueError(f"h3 must be a positive integer, got {self.h3!r}")


P3 = PolarizedThreefold(1)


@dataclass(frozen=True)
class ChernCharacter:
    ch0: Fraction
    ch1: Fraction
    ch2: Fraction
    ch3: Fraction = Fraction(0)
    ambient: PolarizedThreefold = P3

    def __post_init__(self):
        for name in ("ch0", "ch1", "ch2", "ch3"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of(cls, *values: RationalLike, h3: int = 1) -> "ChernCharacter":
        if len(values) == 3:
            values = (*values, 0)
        if len(values) != 4:
            raise ValueError("a Chern character needs 3 or 4 components")
        return cls(*values, ambient=PolarizedThreefold(h3))

    @property
    def h3(self) -> int:
        return self.ambient.h3

    def __iter__(self):
        return iter((self.ch0, self.ch1, self.ch2, self.ch3))

    def truncated(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.ch0, self.ch1, self.ch2)

    def _check_ambient(self, other: "ChernCharacter"):
        if self.ambient != other.ambient:
            raise ValueError("classes live on different threefolds")

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        self._check_ambient(other)
        return ChernCharacter(*(a + b for a, b in zip(self, other)), ambient=self.ambient)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return self + (-other)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(*(-a for a in self), ambient=self.ambient)

    def __mul__(self, k: RationalLike) -> "ChernCharacter":
        k = as_rational(k)
        return ChernCharacter(*(k * a for a in self), ambient=self.ambient)

    __rmul__ = __mul__

    def shift(self, n: int) -> "ChernCharacter":
        """Class of ``E[n]``."""
        return self if n % 2 == 0 else -self

    def to_json(self):
        ch = [format_rational(a) for a in self]
        if self.h3 == 1:
            return ch
        return {"ch": ch, "h3": self.h3}

    @classmethod
    def from_json(cls, obj) -> "ChernCharacter":
        h3 = 1
        if isinstance(obj, dict):
            h3 = int(obj.get("h3", 1))
            obj = obj["ch"]
        return cls.of(*(as_rational(a) for a in obj), h3=h3)

    def __str__(self):
        s = "(" + ", ".join(format_rational(a) for a in self) + ")"
        return s if self.h3 == 1 else f"{s}@h3={self.h3}"


def parse_character(text: str, h3: int = 1) -> ChernCharacter:
    """Parse ``"c0,c1,c2[,c3]"``."""
    parts = [p for p in text.split(",")]
    if len(parts) not in (3, 4):
        raise ValueError(f"expected 3 or 4 comma-separated rationals, got {text!r}")
    return ChernCharacter.of(*(parse_rational(p) for p in parts), h3=h3)


def twist(v: ChernCharacter, beta: RationalLike) -> ChernCharacter:
    """``ch^beta(v) = e^{-beta H} ch(v)``."""
    b = as_rational(beta)
    c0, c1, c2, c3 = v
    return ChernCharacter(
        c0,
        c1 - b * c0,
        c2 - b * c1 + b * b / 2 * c0,
        c3 - b * c2 + b * b / 2 * c1 - b ** 3 / 6 * c0,
        ambient=v.ambient,
    )


def tensor_line_bundle(v: ChernCharacter, k: int) -> ChernCharacter:
    """Class of ``E ⊗ O(k)``."""
    return twist(v, -k)


def dual_shift(v: ChernCharacter) -> ChernCharacter:
    """Class of ``RHom(E, O[1])``: dualizing flips ch1, ch3 and the shift flips everything."""
    return ChernCharacter(-v.ch0, v.ch1, -v.ch2, v.ch3, ambient=v.ambient)


def line_bundle(k: int, ambient: PolarizedThreefold = P3) -> ChernCharacter:
    k = Fraction(k)
    return ChernCharacter(1, k, k * k / 2, k ** 3 / 6, ambient=ambient)


def euler_characteristic(v: ChernCharacter) -> Fraction:
    """Hirzebruch-Riemann-Roch on P^3, ``td = 1 + 2H + 11/6 H^2 + H^3``."""
    _require_p3(v)
    return v.ch3 + 2 * v.ch2 + Fraction(11, 6) * v.ch1 + v.ch0


def is_sheaf_class(v: ChernCharacter) -> bool:
    _require_p3(v)
    if v.ch0.denominator != 1 or v.ch1.denominator != 1:
        return False
    if (2 * v.ch2).denominator != 1 or (6 * v.ch3).denominator != 1:
        return False
    return euler_characteristic(v).denominator == 1


def q_bundle_class() -> ChernCharacter:
    """``Q = T(-2)`` from ``0 -> O(-2) -> O(-1)^4 -> Q -> 0``."""
    return 4 * line_bundle(-1) - line_bundle(-2)


def _require_p3(v: ChernCharacter):
    if v.h3 != 1:
        raise ValueError("this operation is only defined on P^3 (h3 = 1)")


def exact_sqrt(x: Fraction) -> Fraction | None:
    """The rational square root of ``x`` if there is one, else ``None``."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None
