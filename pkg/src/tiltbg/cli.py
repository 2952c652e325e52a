"""Command-line front end.

Rationals go in and out as strings (``p/q``), never floats.  Exit codes:
0 on success, 1 when a computation leaves its domain, 2 on bad usage.

Each subcommand has a natural output format (JSON for structures, TSV for
tables); ``--format`` overrides it.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Optional

from .bg import beta_abs_max, bg_defect, bg_on_curve, gamma_bounds
from .castelnuovo import CurveData, check_curve
from .core import TiltError, format_rational, line_bundle, parse_character, parse_rational
from .p3 import epsilon_threshold, slope_table, v3_constraints, v3_orderings_hold
from .plot import PlotSpec, PlotSpecError, load_spec, render_svg
from .search import TSV_HEADER, enumerate_candidates, f_additive, largest_wall, split_candidates
from .slopes import INF, SurfacePoint, delta, format_extended, lambda_slope, mu, nu
from .walls import intersect, numerical_wall, theta_curve


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _integer(text: str) -> int:
    r = _rational(text)
    if r.denominator != 1:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    return r.numerator


def _char_text(text: str) -> str:
    # Validate syntax now; the class is built later once --h3 is known.
    try:
        parse_character(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _rational_pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated rationals, got {text!r}")
    return _rational(parts[0]), _rational(parts[1])


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _kv_tsv(obj: dict) -> str:
    lines = []
    for k, v in obj.items():
        if isinstance(v, (dict, list)):
            v = _dumps(v)
        elif isinstance(v, bool):
            v = "true" if v else "false"
        elif v is None:
            v = ""
        lines.append(f"{k}\t{v}")
    return "\n".join(lines)


def _emit(args, obj, default: str, tsv: Optional[Callable[[], str]] = None) -> None:
    fmt = args.format or default
    if fmt == "json":
        text = _dumps(obj)
    else:
        text = tsv() if tsv is not None else _kv_tsv(obj)
    _write(args, text + "\n")


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ch(args, text: str):
    return parse_character(text, h3=args.h3)


def _point(args) -> SurfacePoint:
    return SurfacePoint(args.beta, args.alpha_sq)


def cmd_slope(args) -> None:
    v = _ch(args, args.ch)
    p = _point(args)
    out = {
        "mu": format_extended(mu(v, p.beta)),
        "nu": format_extended(nu(v, p)),
        "delta": format_rational(delta(v)),
    }
    if v.h3 == 1:
        out["lambda"] = format_extended(lambda_slope(v, p))
    _emit(args, out, "tsv")


def cmd_wall(args) -> None:
    w = numerical_wall(_ch(args, args.ch), _ch(args, args.other))
    _emit(args, w.to_json(), "json")


def cmd_curve(args) -> None:
    c = theta_curve(_ch(args, args.ch))
    out = c.to_json()
    if args.wall_with:
        hits = intersect(c, numerical_wall(c.v, _ch(args, args.wall_with)))
        out["intersections"] = [p.to_json() for p in hits.points]
        out["surd_intersections"] = [s.to_json() for s in hits.surds]
        out["overlap"] = hits.overlap
    _emit(args, out, "json")


def cmd_bg(args) -> None:
    v = _ch(args, args.ch)
    if args.on_curve:
        value = bg_on_curve(v, args.beta, args.alpha_sq)
        form = "on-curve"
    else:
        if args.alpha_sq is None:
            raise UsageError("--alpha-sq is required unless --on-curve is given")
        value = bg_defect(v, _point(args))
        form = "pointwise"
    out = {"form": form, "value": format_rational(value), "holds": value >= 0}
    if value < 0:
        out["note"] = "negative value proves nothing unless the class is tilt-semistable here"
    _emit(args, out, "json")


def cmd_enumerate(args) -> None:
    seed = _ch(args, args.seed_ch)
    g = gamma_bounds(seed, args.beta0, args.alpha0_sq, args.alpha_tilde_sq)
    bmax = beta_abs_max(args.beta0, args.alpha0_sq)
    cands = enumerate_candidates(g, bmax, seed.h3, workers=args.workers)
    out = {
        "gamma0": format_rational(g.gamma0),
        "gamma1": format_rational(g.gamma1),
        "gamma2": format_rational(g.gamma2),
        "beta_abs_max": format_rational(bmax),
        "count": len(cands),
        "candidates": [c.to_json(seed.h3) for c in cands],
    }

    def tsv():
        return "\n".join(["\t".join(TSV_HEADER)] + ["\t".join(c.tsv_row(seed.h3)) for c in cands])

    _emit(args, out, "tsv", tsv)


def cmd_split(args) -> None:
    v = _ch(args, args.ch)
    budget = args.f_budget if args.f_budget is not None else int(f_additive(v, args.beta))
    pairs = split_candidates(v, args.beta, budget, rank_cap=args.rank_cap, ch2_cap=args.ch2_cap)

    def tsv():
        head = "sub_ch0\tsub_ch1\tsub_ch2\tquot_ch0\tquot_ch1\tquot_ch2"
        rows = [
            "\t".join([str(p.sub.ch0), str(p.sub.ch1), format_rational(p.sub.ch2),
                       str(p.quot.ch0), str(p.quot.ch1), format_rational(p.quot.ch2)])
            for p in pairs
        ]
        return "\n".join([head] + rows)

    _emit(args, {"count": len(pairs), "pairs": [p.to_json(v.h3) for p in pairs]}, "tsv", tsv)


def cmd_largest_wall(args) -> None:
    v = _ch(args, args.ch)
    pool = [_ch(args, t) for t in args.pool or []]
    pool += [line_bundle(k, v.ambient) for k in args.line_bundle or []]
    if not pool:
        raise UsageError("the pool is empty; give --pool or --line-bundle")
    res = largest_wall(v, pool)
    out = {
        "wall": res.wall.to_json(),
        "witness": res.witness.to_json(),
        "skipped": [{"ch": w.to_json(), "reason": why} for w, why in res.skipped],
    }
    _emit(args, out, "json")


def cmd_castelnuovo(args) -> None:
    c = CurveData(args.degree, args.genus, integral=args.integral, nonplanar=args.nonplanar, ch3=args.ch3)
    _emit(args, check_curve(c).to_json(), "json")


def cmd_plot(args) -> None:
    if args.spec:
        try:
            spec = load_spec(args.spec)
        except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read plot spec: {exc}") from None
    else:
        drawables = [{"type": "curve", "ch": _ch(args, t).to_json()} for t in args.curve or []]
        for a, b in args.wall or []:
            drawables.append({"type": "wall", "ch": _ch(args, a).to_json(), "other": _ch(args, b).to_json()})
        for beta, a2 in args.point or []:
            drawables.append({"type": "point", "beta": format_rational(beta), "alpha_sq": format_rational(a2)})
        spec = PlotSpec(args.beta_range, args.alpha_range, drawables, args.width, args.height)
    if not spec.drawables:
        raise UsageError("nothing to draw")
    _write(args, render_svg(spec))


def cmd_slope_table(args) -> None:
    if args.h3 != 1:
        raise UsageError("slope-table is only defined for h3 = 1")
    t = slope_table(_point(args))
    _emit(args, t.to_json(), "tsv", lambda: "\n".join(t.tsv_lines()))


def cmd_epsilon(args) -> None:
    eps = epsilon_threshold(args.beta)
    out = {
        "beta": format_rational(args.beta),
        "epsilon": format_extended(eps),
        "constraints": [
            {"against": name, "c0": format_rational(c0), "c1": format_rational(c1)}
            for name, c0, c1 in v3_constraints(args.beta)
        ],
    }
    if eps is not INF:
        out["orderings_hold_at_half"] = all(v3_orderings_hold(args.beta, eps / 2))
    _emit(args, out, "tsv")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default=None)
    common.add_argument("--h3", type=_integer, default=1, help="degree H^3 of the polarization")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="tiltbg", description="Exact tilt-stability numerics on threefolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("slope", cmd_slope, "mu, nu, Delta and lambda of a class at a point")
    p.add_argument("--ch", type=_char_text, required=True)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--alpha-sq", type=_rational, required=True)

    p = add("wall", cmd_wall, "numerical wall nu(v) = nu(w)")
    p.add_argument("--ch", type=_char_text, required=True)
    p.add_argument("--other", type=_char_text, required=True)

    p = add("curve", cmd_curve, "the curve nu(v) = 0")
    p.add_argument("--ch", type=_char_text, required=True)
    p.add_argument("--wall-with", type=_char_text, help="also intersect with the wall against this class")

    p = add("bg", cmd_bg, "BG inequality defect")
    p.add_argument("--ch", type=_char_text, required=True)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--alpha-sq", type=_rational)
    p.add_argument("--on-curve", action="store_true", help="evaluate the form restricted to nu = 0")

    p = add("enumerate", cmd_enumerate, "candidate classes for the reduction walk")
    p.add_argument("--seed-ch", type=_char_text, required=True)
    p.add_argument("--alpha0-sq", type=_rational, required=True)
    p.add_argument("--alpha-tilde-sq", type=_rational, required=True)
    p.add_argument("--beta0", type=_rational, required=True)
    p.add_argument("--workers", type=int, default=1)

    p = add("split", cmd_split, "numerical splittings with f_beta >= 1 on both parts")
    p.add_argument("--ch", type=_char_text, required=True)
    p.add_argument("--beta", type=_integer, required=True)
    p.add_argument("--f-budget", type=_integer)
    p.add_argument("--rank-cap", type=_integer, required=True)
    p.add_argument("--ch2-cap", type=_rational, required=True)

    p = add("largest-wall", cmd_largest_wall, "outermost wall over a pool of classes")
    p.add_argument("--ch", type=_char_text, required=True)
    p.add_argument("--pool", type=_char_text, action="append")
    p.add_argument("--line-bundle", type=_integer, action="append", metavar="K", help="add O(K) to the pool")

    p = add("castelnuovo", cmd_castelnuovo, "check a (degree, genus) pair against the derived bounds")
    p.add_argument("--degree", type=_integer, required=True)
    p.add_argument("--genus", type=_integer, required=True)
    p.add_argument("--integral", action="store_true")
    p.add_argument("--nonplanar", action="store_true")
    p.add_argument("--ch3", type=_rational, help="override ch3 of the ideal sheaf")

    p = add("plot", cmd_plot, "SVG of curves, walls and points")
    p.add_argument("--spec", metavar="FILE", help="JSON plot spec")
    p.add_argument("--curve", type=_char_text, action="append")
    p.add_argument("--wall", type=_char_text, nargs=2, action="append", metavar=("V", "W"))
    p.add_argument("--point", type=_rational_pair, action="append", metavar="BETA,ALPHA_SQ")
    p.add_argument("--beta-range", type=_rational_pair, default=(Fraction(-3), Fraction(1)))
    p.add_argument("--alpha-range", type=_rational_pair, default=(Fraction(0), Fraction(2)))
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=400)

    p = add("slope-table", cmd_slope_table, "slopes of the exceptional collection at a point of V")
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--alpha-sq", type=_rational, required=True)

    p = add("epsilon", cmd_epsilon, "largest eps keeping the V3 orderings")
    p.add_argument("--beta", type=_rational, required=True)
    return parser


_NEGATIVE_VALUE = re.compile(r"^-\d")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--beta -1/2`` as ``--beta=-1/2``.

    argparse only recognizes plain negative integers and decimals as values, so
    ``-1/2`` or ``-1,0,2`` would otherwise be mistaken for options.
    """
    out: list[str] = []
    for tok in argv:
        if _NEGATIVE_VALUE.match(tok) and out and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        args.func(args)
    except (UsageError, PlotSpecError) as exc:
        print(f"tiltbg {args.command}: {exc}", file=sys.stderr)
        return 2
    except (TiltError, ValueError, ZeroDivisionError) as exc:
        print(f"tiltbg {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
