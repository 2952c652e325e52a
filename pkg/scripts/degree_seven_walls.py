"""Walls of the degree-7 ideal sheaf class against O(-1), ..., O(-6), largest first."""

from tiltbg.core import ChernCharacter, line_bundle
from tiltbg.search import largest_wall
from tiltbg.walls import classify_pair, numerical_wall, wall_size_key


def main():
    v = ChernCharacter(1, 0, -7, 18)
    walls = {k: numerical_wall(v, line_bundle(-k)) for k in range(1, 7)}
    print("line_bundle\tcenter\tradius_sq")
    for k, w in sorted(walls.items(), key=lambda kw: wall_size_key(kw[1]), reverse=True):
        j = w.to_json()
        print(f"O(-{k})\t{j['center']}\t{j['radius_sq']}")
    print()
    print("O(-5) vs O(-3):", classify_pair(walls[5], walls[3]).value)
    res = largest_wall(v, [line_bundle(-k) for k in walls])
    print("largest wall witness:", res.witness.to_json())


if __name__ == "__main__":
    main()
