"""Finite searches over truncated classes ``(ch0, ch1, ch2)`` on the coarse P^3 lattice.

``ch0`` and ``ch1`` are integers and ``ch2`` is a half-integer.  The searches
only produce numerical candidates.  Nothing here claims that a candidate is
realized by an actual subobject.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from .bg import GammaBounds
from .core import ChernCharacter, PolarizedThreefold, RationalLike, as_rational, format_rational
from .slopes import delta
from .walls import DegenerateWallError, EmptyWallError, Wall, numerical_wall, wall_size_key

RANK_NONZERO = "rank-nonzero"
RANK0_ALWAYS = "rank0-always"
RANK0_AFTER_DROP = "rank0-after-drop"
SPLIT = "split"

TSV_HEADER = ("ch0", "ch1", "ch2", "delta", "provenance")


@dataclass(frozen=True, order=True)
class CandidateClass:
    ch0: int
    ch1: int
    ch2: Fraction
    provenance: str = field(default=RANK_NONZERO, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ch2", as_rational(self.ch2))
        if (2 * self.ch2).denominator != 1:
            raise ValueError(f"ch2 = {self.ch2} is not a half-integer")

    def character(self, h3: int = 1) -> ChernCharacter:
        return ChernCharacter(self.ch0, self.ch1, self.ch2, 0, ambient=PolarizedThreefold(h3))

    def delta(self, h3: int = 1) -> Fraction:
        return delta(self.character(h3))

    def tsv_row(self, h3: int = 1) -> list[str]:
        return [str(self.ch0), str(self.ch1), format_rational(self.ch2),
                format_rational(self.delta(h3)), self.provenance]

    def to_json(self, h3: int = 1):
        return {
            "ch0": self.ch0,
            "ch1": self.ch1,
            "ch2": format_rational(self.ch2),
            "delta": format_rational(self.delta(h3)),
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class SplitPair:
    sub: CandidateClass
    quot: CandidateClass

    def to_json(self, h3: int = 1):
        return {"sub": self.sub.to_json(h3), "quot": self.quot.to_json(h3)}


def f_additive(v: ChernCharacter, beta: int) -> Fraction:
    """``f_beta = ch1 - beta ch0``; for integral ``beta`` it is a positive integer on ``Coh^beta``."""
    if isinstance(beta, Fraction):
        if beta.denominator != 1:
            raise ValueError("f_beta needs an integral beta")
        beta = beta.numerator
    if not isinstance(beta, int):
        raise TypeError("f_beta needs an integral beta")
    return v.ch1 - beta * v.ch0


def _rank0_strip(g: GammaBounds, bmax: Fraction, h3: int) -> list[CandidateClass]:
    disc_cap = g.gamma0 / (h3 * h3)
    after = (g.gamma2 + bmax * g.gamma1) / h3
    always = g.seed_rank0_ch1
    top = max(after, always if always is not None else Fraction(0))
    out = []
    ch1 = 1
    # Delta = (h3 ch1)^2 must stay below gamma0.
    while ch1 < top and ch1 * ch1 < disc_cap:
        if always is not None and ch1 < always:
            prov = RANK0_ALWAYS
        elif ch1 < after:
            prov = RANK0_AFTER_DROP
        else:
            ch1 += 1
            continue
        # The vertical curve sits at beta = ch2/ch1, which must satisfy |beta| <= bmax.
        tmax = math.floor(2 * bmax * ch1)
        out.extend(CandidateClass(0, ch1, Fraction(t, 2), prov) for t in range(-tmax, tmax + 1))
        ch1 += 1
    return out


def _strip(args) -> list[CandidateClass]:
    ch0, g, bmax, h3 = args
    if ch0 == 0:
        return _rank0_strip(g, bmax, h3)
    disc_cap = g.gamma0 / (h3 * h3)
    c1max = math.floor(g.gamma2 / h3)
    out = []
    for ch1 in range(-c1max, c1max + 1):
        # The curve nu = 0 reaches |beta| <= bmax iff s > 0 and D < s^2,
        # where D = ch1^2 - 2 ch0 ch2 and s = ch1 + bmax |ch0|.
        s = ch1 + bmax * abs(ch0)
        if s <= 0:
            continue
        upper = min(disc_cap, s * s)
        sq = ch1 * ch1
        # With t = 2 ch2: 0 <= sq - ch0 t < upper.
        if ch0 > 0:
            t_hi = math.floor(Fraction(sq, ch0))
            t_lo = math.floor((sq - upper) / ch0) + 1
        else:
            t_lo = math.ceil(Fraction(sq, ch0))
            t_hi = math.ceil((sq - upper) / ch0) - 1
        out.extend(CandidateClass(ch0, ch1, Fraction(t, 2), RANK_NONZERO) for t in range(t_lo, t_hi + 1))
    return out


def enumerate_candidates(
    g: GammaBounds,
    beta_abs_max: RationalLike,
    h3: int = 1,
    *,
    workers: int = 1,
) -> list[CandidateClass]:
    """All lattice classes compatible with the reduction-walk bounds.

    Keeps ``(ch0, ch1, ch2)`` with ``ch0^2 < gamma1``, ``0 <= Delta < gamma0``,
    ``|h3 ch1| <= gamma2`` for non-zero rank (the two rank-zero ch1 bounds
    otherwise), and whose curve ``nu = 0`` has a point with ``|beta| <= beta_abs_max``.
    The ``(ch0, ch1)`` box is cut into strips of fixed ``ch0``; ``workers > 1``
    processes strips in parallel.  Output is sorted lexicographically.
    """
    bmax = as_rational(beta_abs_max)
    if g.gamma0 <= 0:
        return []
    rmax = math.isqrt(math.floor(g.gamma1))
    ranks = [r for r in range(-rmax, rmax + 1) if r * r < g.gamma1]
    jobs = [(r, g, bmax, h3) for r in ranks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            strips = list(pool.map(_strip, jobs))
    else:
        strips = [_strip(j) for j in jobs]
    return sorted(c for strip in strips for c in strip)


def _lattice_check(v: ChernCharacter):
    if v.ch0.denominator != 1 or v.ch1.denominator != 1 or (2 * v.ch2).denominator != 1:
        raise ValueError(f"{v} does not have a lattice truncation")


def split_candidates(
    v: ChernCharacter,
    beta: int,
    f_budget: int,
    *,
    rank_cap: int,
    ch2_cap: RationalLike,
) -> list[SplitPair]:
    """Numerical splittings ``v = sub + quot`` with ``f_beta >= 1`` on both parts.

    Both parts must have ``Delta >= 0``, ``|ch0| <= rank_cap`` and
    ``|ch2| <= ch2_cap``.  The ``ch2`` cap is needed because ``Delta >= 0``
    alone leaves ``ch2`` unbounded on rank-zero or mixed-sign splits.
    """
    if f_budget <= 0:
        raise ValueError("f_budget must be positive")
    if f_additive(v, beta) != f_budget:
        raise ValueError(f"f_{beta}({v}) = {f_additive(v, beta)} differs from f_budget = {f_budget}")
    _lattice_check(v)
    cap2 = as_rational(ch2_cap)
    h3 = v.h3
    v0, v1, v2 = int(v.ch0), int(v.ch1), v.ch2
    tmax = math.floor(2 * cap2)
    pairs = []
    for r in range(-rank_cap, rank_cap + 1):
        rq = v0 - r
        if abs(rq) > rank_cap:
            continue
        for f in range(1, f_budget):
            c1 = f + beta * r
            c1q = v1 - c1
            for t in range(-tmax, tmax + 1):
                c2 = Fraction(t, 2)
                c2q = v2 - c2
                if abs(c2q) > cap2:
                    continue
                sub = CandidateClass(r, c1, c2, SPLIT)
                quot = CandidateClass(rq, c1q, c2q, SPLIT)
                if sub.delta(h3) >= 0 and quot.delta(h3) >= 0:
                    pairs.append(SplitPair(sub, quot))
    return pairs


@dataclass(frozen=True)
class LargestWall:
    wall: Wall
    witness: ChernCharacter
    skipped: tuple[tuple[ChernCharacter, str], ...] = ()


PoolItem = Union[ChernCharacter, CandidateClass]


def largest_wall(v: ChernCharacter, pool: Iterable[PoolItem]) -> LargestWall:
    """Outermost numerical wall ``nu(v) = nu(w)`` over ``w`` in ``pool``.

    Vertical walls beat semicircles and semicircles compare by radius; for a
    fixed ``v`` with ``Delta(v) >= 0`` walls are nested, so this is the
    containment order.  Ties go to the lexicographically smallest witness.
    Degenerate and empty walls are skipped and reported.
    """
    best: Optional[tuple] = None
    skipped = []
    for item in pool:
        w = item.character(v.h3) if isinstance(item, CandidateClass) else item
        try:
            wall = numerical_wall(v, w)
        except DegenerateWallError:
            skipped.append((w, "degenerate: proportional truncation"))
            continue
        except EmptyWallError:
            skipped.append((w, "empty wall"))
            continue
        key = wall_size_key(wall)
        if best is None or key > best[0] or (key == best[0] and tuple(w) < tuple(best[2])):
            best = (key, wall, w)
    if best is None:
        raise EmptyWallError(f"no pool class gives a wall for {v}")
    return LargestWall(best[1], best[2], tuple(skipped))
