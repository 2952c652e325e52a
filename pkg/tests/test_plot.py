import json
import re
from fractions import Fraction

import pytest

from tiltbg.cli import main
from tiltbg.plot import PlotSpec, PlotSpecError, load_spec, render_svg

NUMBER = re.compile(r"-?\d+(?:\.\d+)?(?:e[+-]?\d+)?")


def d1_spec():
    return PlotSpec(
        beta_range=(Fraction(-3), Fraction(1)),
        alpha_range=(Fraction(0), Fraction(2)),
        drawables=[
            {"type": "curve", "ch": ["1", "0", "-1", "1"]},
            {"type": "wall", "ch": ["1", "0", "-1", "1"], "other": ["1", "-1", "1/2", "-1/6"]},
            {"type": "point", "beta": "-3/2", "alpha_sq": "1/4", "label": "C meets B1"},
        ],
    )


def test_curve_and_wall_layout():
    svg = render_svg(d1_spec())
    assert svg.count('class="curve"') == 1
    assert svg.count('class="wall"') == 1
    assert svg.count("<circle") == 1
    assert "C meets B1" in svg
    # The arc spans the footprint [-2, -1] of the circle at 160 px per beta unit.
    assert 'd="M160,400 A80,100 0 0 1 320,400"' in svg


def test_svg_is_deterministic():
    assert render_svg(d1_spec()) == render_svg(d1_spec())


def test_coordinates_have_at_most_six_significant_digits():
    svg = render_svg(d1_spec())
    for path in re.findall(r' d="([^"]+)"', svg):
        for num in NUMBER.findall(path):
            assert len(num.lstrip("-").replace(".", "").lstrip("0")) <= 6


def test_nested_walls_for_degree_seven():
    spec = PlotSpec(
        (Fraction(-6), Fraction(-2)), (Fraction(0), Fraction(3, 2)),
        [
            {"type": "wall", "ch": ["1", "0", "-7", "18"], "other": ["1", "-5", "25/2", "-125/6"], "label": "O(-5)"},
            {"type": "wall", "ch": ["1", "0", "-7", "18"], "other": ["1", "-3", "9/2", "-9/2"], "label": "O(-3)"},
        ],
    )
    svg = render_svg(spec)
    arcs = re.findall(r'd="M([\d.]+),[\d.]+ A[\d.]+,[\d.]+ 0 0 1 ([\d.]+),', svg)
    assert len(arcs) == 2
    (a0, a1), (b0, b1) = [(float(x), float(y)) for x, y in arcs]
    assert a0 < b0 < b1 < a1


def test_vertical_curve_and_wall_json():
    spec = PlotSpec((-2, 2), (0, 1), [
        {"type": "curve", "ch": ["0", "2", "1", "0"]},
        {"type": "wall", "wall": {"kind": "vertical", "beta": "-1"}},
        {"type": "label", "beta": "0", "alpha": "1/2", "text": "a < b"},
    ])
    svg = render_svg(spec)
    assert svg.count('class="curve"') == 1 and svg.count('class="wall"') == 1
    assert "a &lt; b" in svg


def test_invalid_specs():
    with pytest.raises(PlotSpecError):
        render_svg(PlotSpec((0, 1), (0, 1), []))
    with pytest.raises(PlotSpecError):
        PlotSpec((1, 1), (0, 1), [])
    with pytest.raises(PlotSpecError):
        render_svg(PlotSpec((0, 1), (0, 1), [{"type": "blob"}]))


def test_spec_json_round_trip(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(d1_spec().to_json()))
    assert load_spec(str(path)).to_json() == d1_spec().to_json()


def test_cli_plot_from_spec_and_flags(tmp_path, capsys):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(d1_spec().to_json()))
    assert main(["plot", "--spec", str(path)]) == 0
    from_file = capsys.readouterr().out
    assert from_file == render_svg(d1_spec())
    assert main(["plot", "--curve", "1,0,-1,1", "--wall", "1,0,-1,1", "1,-1,1/2,-1/6",
                 "--point", "-3/2,1/4", "--beta-range", "-3,1", "--alpha-range", "0,2"]) == 0
    from_flags = capsys.readouterr().out
    assert from_flags.count('class="wall"') == 1 and from_flags.count('class="curve"') == 1


def test_cli_plot_errors(tmp_path, capsys):
    assert main(["plot"]) == 2
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"beta_range": ["0", "1"], "drawables": []}))
    assert main(["plot", "--spec", str(empty)]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert main(["plot", "--spec", str(broken)]) == 2
