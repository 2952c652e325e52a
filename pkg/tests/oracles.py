"""Independent brute-force oracles shared by the unit and acceptance suites."""

import math
from fractions import Fraction


def naive_scan(g, bmax, h3=1):
    """Full box scan; the reachability test evaluates alpha^2 at the far end beta = -/+ bmax."""
    found = set()
    rmax = math.isqrt(math.ceil(g.gamma1)) + 1
    cmax = math.ceil(g.gamma2) + 1
    tmax = cmax * cmax + math.ceil(g.gamma0) + 2
    for ch0 in range(-rmax, rmax + 1):
        if ch0 * ch0 >= g.gamma1:
            continue
        for ch1 in range(-cmax, cmax + 1):
            for t in range(-tmax, tmax + 1):
                ch2 = Fraction(t, 2)
                disc = (h3 * ch1) ** 2 - 2 * h3 * ch0 * h3 * ch2
                if not (0 <= disc < g.gamma0):
                    continue
                if ch0 == 0:
                    if ch1 <= 0:
                        continue
                    after = (g.gamma2 + bmax * g.gamma1) / h3
                    always = g.seed_rank0_ch1 if g.seed_rank0_ch1 is not None else Fraction(0)
                    if not ch1 < max(after, always):
                        continue
                    if abs(ch2 / ch1) > bmax:
                        continue
                else:
                    if abs(h3 * ch1) > g.gamma2:
                        continue
                    center, k = Fraction(ch1, ch0), disc / (h3 * ch0) ** 2
                    far = -bmax if ch0 > 0 else bmax
                    on_branch = far * ch0 < ch1
                    if not (on_branch and (far - center) ** 2 - k > 0):
                        continue
                found.add((ch0, ch1, ch2))
    return found
