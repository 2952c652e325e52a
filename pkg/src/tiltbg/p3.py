"""The exceptional collection O(-1), Q, O, O(1) on P^3 and its slopes over the region V."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ChernCharacter, OutOfDomainError, RationalLike, as_rational, line_bundle, q_bundle_class
from .slopes import INF, ExtendedRational, SurfacePoint, format_extended, lambda_eps, lambda_slope, nu
from .walls import Region, region_of


class OutOfRegionError(OutOfDomainError):
    pass


@dataclass(frozen=True)
class ExceptionalCollection:
    names: tuple[str, ...]
    classes: tuple[ChernCharacter, ...]

    def __getitem__(self, name: str) -> ChernCharacter:
        return self.classes[self.names.index(name)]


EXCEPTIONAL = ExceptionalCollection(
    ("O(-1)", "Q", "O", "O(1)"),
    (line_bundle(-1), q_bundle_class(), line_bundle(0), line_bundle(1)),
)

# Shifted objects, as they appear in the doubly tilted heart.
SHIFTED = {
    "Q[1]": EXCEPTIONAL["Q"].shift(1),
    "O(-1)[2]": EXCEPTIONAL["O(-1)"].shift(2),
    "O[1]": EXCEPTIONAL["O"].shift(1),
}


@dataclass(frozen=True)
class SlopeRow:
    name: str
    ch: ChernCharacter
    nu: ExtendedRational
    lam: ExtendedRational


@dataclass(frozen=True)
class Verdict:
    subject: str
    claim: str
    holds: bool


@dataclass(frozen=True)
class SlopeTable:
    point: SurfacePoint
    region: Region
    rows: tuple[SlopeRow, ...]
    verdicts: tuple[Verdict, ...]

    def row(self, name: str) -> SlopeRow:
        return next(r for r in self.rows if r.name == name)

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def tsv_lines(self) -> list[str]:
        lines = ["object\tnu\tlambda\tverdicts"]
        for r in self.rows:
            vs = ";".join(f"{v.claim}:{'PASS' if v.holds else 'FAIL'}" for v in self.verdicts if v.subject == r.name)
            lines.append(f"{r.name}\t{format_extended(r.nu)}\t{format_extended(r.lam)}\t{vs}")
        return lines

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "region": self.region.value,
            "rows": [
                {"object": r.name, "ch": r.ch.to_json(), "nu": format_extended(r.nu), "lambda": format_extended(r.lam)}
                for r in self.rows
            ],
            "verdicts": [{"subject": v.subject, "claim": v.claim, "holds": v.holds} for v in self.verdicts],
        }


def slope_table(p: SurfacePoint) -> SlopeTable:
    region = region_of(p)
    if region is Region.OUTSIDE:
        raise OutOfRegionError(f"({p.beta}, alpha^2={p.alpha_sq}) is outside V")
    named = list(zip(EXCEPTIONAL.names, EXCEPTIONAL.classes)) + list(SHIFTED.items())
    rows = tuple(SlopeRow(n, v, nu(v, p), lambda_slope(v, p)) for n, v in named)
    N = {r.name: r.nu for r in rows}
    L = {r.name: r.lam for r in rows}

    verdicts = []
    if region is Region.V1:
        verdicts.append(Verdict("O", "nu(O) > 0", N["O"] > 0))
    elif region is Region.V2:
        verdicts.append(Verdict("O", "nu(O) < 0", N["O"] < 0))
    else:
        verdicts.append(Verdict("O", "nu(O) = 0", N["O"] == 0))
    verdicts += [
        Verdict("O(-1)", "nu(O(-1)) < 0", N["O(-1)"] < 0),
        Verdict("O(1)", "nu(O(1)) > 0", N["O(1)"] > 0),
        Verdict("Q", "nu(Q) > 0", N["Q"] > 0),
        Verdict("Q[1]", "nu(Q[1]) > 0", N["Q[1]"] > 0),
    ]
    if region is Region.V1:
        verdicts.append(Verdict("Q", "lambda(Q) < lambda(O(1))", L["Q"] < L["O(1)"]))
    elif region is Region.V2:
        verdicts.append(Verdict("Q", "lambda(Q) < lambda(O)", L["Q"] < L["O"]))
    else:
        verdicts.append(Verdict("O", "lambda(O) = inf", L["O"] is INF))
    return SlopeTable(p, region, rows, tuple(verdicts))


V3_BETA_MIN = Fraction(-1, 3)


def _affine_in_eps(v: ChernCharacter, p: SurfacePoint) -> tuple[Fraction, Fraction]:
    """``lambda_eps(v) = a + b eps``; returns ``(a, b)``."""
    a = lambda_eps(v, p, 0)
    b = lambda_eps(v, p, 1) - a
    return a, b


def v3_constraints(beta: RationalLike) -> list[tuple[str, Fraction, Fraction]]:
    """``lambda_eps(O(1)) - lambda_eps(X) = c0 + c1 eps`` for X in O(-1), Q, on ``alpha = -beta``."""
    b = as_rational(beta)
    p = SurfacePoint(b, b * b)
    top = _affine_in_eps(EXCEPTIONAL["O(1)"], p)
    out = []
    for name in ("O(-1)", "Q"):
        other = _affine_in_eps(EXCEPTIONAL[name], p)
        out.append((name, top[0] - other[0], top[1] - other[1]))
    return out


def v3_orderings_hold(beta: RationalLike, eps: RationalLike) -> tuple[bool, bool]:
    """Whether ``lambda(O(1)) > lambda(O(-1))`` and ``lambda(O(1)) > lambda(Q)`` at ``eps``."""
    b, e = as_rational(beta), as_rational(eps)
    p = SurfacePoint(b, b * b)
    top = lambda_eps(EXCEPTIONAL["O(1)"], p, e)
    return (top > lambda_eps(EXCEPTIONAL["O(-1)"], p, e), top > lambda_eps(EXCEPTIONAL["Q"], p, e))


def epsilon_threshold(beta: RationalLike) -> ExtendedRational:
    """Supremum of the ``eps > 0`` for which both V3 orderings hold, for ``-1/3 < beta < 0``.

    Both differences are affine in ``eps`` with positive constant term on this
    range, so the threshold is the smallest root among those with negative
    slope.  The O(-1) constraint always has negative slope here, so the
    result is a finite positive rational.
    """
    b = as_rational(beta)
    if not (V3_BETA_MIN < b < 0):
        raise OutOfDomainError(f"beta = {b} is outside (-1/3, 0)")
    roots = []
    for name, c0, c1 in v3_constraints(b):
        if c0 <= 0:
            raise AssertionError(f"ordering against {name} already fails at eps = 0 (beta = {b})")
        if c1 < 0:
            roots.append(-c0 / c1)
    return min(roots) if roots else INF
