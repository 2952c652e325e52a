"""Write a few SVG figures of curves and walls into an output directory."""

import argparse
from pathlib import Path

from tiltbg.core import ChernCharacter, line_bundle, q_bundle_class
from tiltbg.plot import PlotSpec, render_svg


def _ch(v: ChernCharacter):
    return v.to_json()


def figures():
    ideal7 = ChernCharacter(1, 0, -7, 18)
    yield "degree_seven_walls", PlotSpec(
        beta_range=("-15", "1"),
        alpha_range=("0", "7"),
        drawables=[{"type": "curve", "ch": _ch(ideal7)}]
        + [{"type": "wall", "ch": _ch(ideal7), "other": _ch(line_bundle(-k))} for k in range(1, 7)],
    )
    point = ChernCharacter(1, 0, -1, 1)
    yield "point_class", PlotSpec(
        beta_range=("-3", "1"),
        alpha_range=("0", "2"),
        drawables=[
            {"type": "curve", "ch": _ch(point)},
            {"type": "wall", "ch": _ch(point), "other": _ch(line_bundle(-1))},
            {"type": "point", "beta": "-3/2", "alpha_sq": "1/4", "label": "crossing"},
        ],
    )
    yield "exceptional_curves", PlotSpec(
        beta_range=("-2", "1"),
        alpha_range=("0", "3/2"),
        drawables=[{"type": "curve", "ch": _ch(line_bundle(k))} for k in (-1, 0, 1)]
        + [{"type": "curve", "ch": _ch(q_bundle_class())}],
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures")
    args = ap.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, spec in figures():
        path = out / f"{name}.svg"
        path.write_text(render_svg(spec))
        print(path)


if __name__ == "__main__":
    main()
