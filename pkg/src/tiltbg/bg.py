"""The generalized Bogomolov-Gieseker inequality and the quantities bounding the reduction walk.

Sign convention: every ``*_defect`` is "right side minus left side", so a
non-negative value means the inequality holds.  A negative defect at a point
where the class is not known to be tilt-semistable proves nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import ChernCharacter, OutOfDomainError, RationalLike, as_rational, exact_sqrt, twist
from .slopes import SurfacePoint, delta

SQRT_MAX_DENOMINATOR = 10 ** 6


def bg_defect(v: ChernCharacter, p: SurfacePoint) -> Fraction:
    """``(omega^2/6) ch1^B - ch3^B`` as an intersection number, ``omega = alpha H``."""
    t = twist(v, p.beta)
    return v.h3 * (p.alpha_sq / 6 * t.ch1 - t.ch3)


def curve_alpha_sq(v: ChernCharacter, beta: Fraction) -> Fraction:
    """``alpha^2`` of the point of ``nu(v) = 0`` above ``beta`` (rank of ``v`` non-zero)."""
    t = twist(v, beta)
    return 2 * t.ch2 / t.ch0


def bg_on_curve(v: ChernCharacter, beta: RationalLike, alpha_sq: Optional[RationalLike] = None) -> Fraction:
    """The BG inequality rewritten on the curve ``nu(v) = 0``.

    For ``ch0 != 0`` the point is determined by ``beta`` and the returned value is
    ``(H ch2)(H^2 ch1)/(H^3 ch0) - 3 ch3 - beta Delta/(H^3 ch0)``, which equals
    ``3 * bg_defect`` there.  For ``ch0 = 0`` the curve is the vertical line
    ``beta = ch2/ch1`` and ``alpha_sq`` must be supplied; the value then equals
    ``bg_defect`` itself.

    Raises OutOfDomainError if the point is not on the branch ``ch1^beta > 0``
    or has ``alpha^2 <= 0``.
    """
    b = as_rational(beta)
    h = v.h3
    if v.ch0 == 0:
        if v.ch1 <= 0:
            raise OutOfDomainError(f"rank-zero class {v} has no curve branch (ch1 <= 0)")
        if b != v.ch2 / v.ch1:
            raise OutOfDomainError(f"beta = {b} is not on the vertical curve beta = {v.ch2 / v.ch1}")
        if alpha_sq is None:
            raise OutOfDomainError("alpha_sq is free on a vertical curve and must be given")
        a2 = as_rational(alpha_sq)
        if a2 <= 0:
            raise OutOfDomainError("alpha_sq must be positive")
        hc1, hc2, c3 = h * v.ch1, h * v.ch2, h * v.ch3
        return a2 * hc1 / 6 - c3 + hc2 ** 2 / (2 * hc1)

    a2 = curve_alpha_sq(v, b)
    if a2 <= 0:
        raise OutOfDomainError(f"beta = {b} gives alpha^2 = {a2} <= 0 on the curve of {v}")
    if not b * v.ch0 < v.ch1:
        raise OutOfDomainError(f"beta = {b} is off the ch1^beta > 0 branch for {v}")
    if alpha_sq is not None and as_rational(alpha_sq) != a2:
        raise OutOfDomainError(f"alpha_sq = {alpha_sq} does not lie on the curve (expected {a2})")
    hc0, hc1, hc2, c3 = h * v.ch0, h * v.ch1, h * v.ch2, h * v.ch3
    return hc2 * hc1 / hc0 - 3 * c3 - b * delta(v) / hc0


def reduction_invariant(v: ChernCharacter, alpha_sq: RationalLike) -> Fraction:
    """``Delta_H(v) + (alpha H^3 ch0)^2``, the quantity that strictly drops along the walk."""
    a2 = as_rational(alpha_sq)
    if a2 < 0:
        raise ValueError("alpha_sq must be non-negative")
    return delta(v) + a2 * (v.h3 * v.ch0) ** 2


def sqrt_upper(x: RationalLike, max_den: int = SQRT_MAX_DENOMINATOR) -> Fraction:
    """Smallest fraction with denominator ``<= max_den`` that is ``>= sqrt(x)``.

    Exact when ``x`` is the square of such a fraction.  Walks the Stern-Brocot
    tree, jumping along runs of equal turns by binary search.
    """
    x = as_rational(x)
    if x < 0:
        raise ValueError("square root of a negative number")
    r = exact_sqrt(x)
    if r is not None and r.denominator <= max_den:
        return r

    def below(p: int, q: int) -> bool:
        return p * p < x * q * q

    a = math.isqrt(math.floor(x))
    lo_p, lo_q, hi_p, hi_q = a, 1, a + 1, 1
    while lo_q + hi_q <= max_den:
        if below(lo_p + hi_p, lo_q + hi_q):
            good, bad = 1, (max_den - lo_q) // hi_q + 1
            while bad - good > 1:
                mid = (good + bad) // 2
                if below(lo_p + mid * hi_p, lo_q + mid * hi_q):
                    good = mid
                else:
                    bad = mid
            lo_p, lo_q = lo_p + good * hi_p, lo_q + good * hi_q
        else:
            good, bad = 1, (max_den - hi_q) // lo_q + 1
            while bad - good > 1:
                mid = (good + bad) // 2
                if not below(hi_p + mid * lo_p, hi_q + mid * lo_q):
                    good = mid
                else:
                    bad = mid
            hi_p, hi_q = hi_p + good * lo_p, hi_q + good * lo_q
    return Fraction(hi_p, hi_q)


@dataclass(frozen=True)
class GammaBounds:
    gamma0: Fraction
    gamma1: Fraction
    gamma2: Fraction
    # ch1 of a rank-zero seed, for the "rank zero all along" branch of the ch1 bound.
    seed_rank0_ch1: Optional[Fraction] = None


def gamma_bounds(
    v0: ChernCharacter,
    beta0: RationalLike,
    alpha0_sq: RationalLike,
    alpha_tilde_sq: RationalLike,
) -> GammaBounds:
    """Discriminant, rank and ch1 bounds for the classes met along the reduction walk.

    ``gamma2`` involves square roots; it is replaced by the ceiling of an upper
    bound built from ``sqrt_upper``, which only enlarges the search box.
    """
    b0, a0, at = (as_rational(x) for x in (beta0, alpha0_sq, alpha_tilde_sq))
    if at <= 0:
        raise ValueError("alpha_tilde_sq must be positive")
    if a0 < at:
        raise ValueError("alpha0_sq must be at least alpha_tilde_sq")
    h = v0.h3
    g0 = reduction_invariant(v0, a0)
    g1 = g0 / (at * h * h)
    g2 = h * sqrt_upper(g1) * (abs(b0) + sqrt_upper(a0) + sqrt_upper(a0 + g0 / (h * h)))
    return GammaBounds(
        gamma0=g0,
        gamma1=g1,
        gamma2=Fraction(math.ceil(g2)),
        seed_rank0_ch1=v0.ch1 if v0.ch0 == 0 else None,
    )


def beta_abs_max(beta0: RationalLike, alpha0_sq: RationalLike) -> Fraction:
    """Rational upper bound for ``|beta0| + alpha0``."""
    return abs(as_rational(beta0)) + sqrt_upper(alpha0_sq)
