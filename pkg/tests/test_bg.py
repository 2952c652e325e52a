import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from strategies import characters, points, positive_rationals, rationals
from tiltbg.bg import (
    GammaBounds,
    beta_abs_max,
    bg_defect,
    bg_on_curve,
    curve_alpha_sq,
    gamma_bounds,
    reduction_invariant,
    sqrt_upper,
)
from tiltbg.core import ChernCharacter, OutOfDomainError, line_bundle, tensor_line_bundle, twist
from tiltbg.slopes import SurfacePoint, delta, nu


def _ceil_sqrt_scaled(x: Fraction, q: int) -> int:
    """Smallest integer p with p^2 >= x q^2."""
    n = x * q * q
    p = math.isqrt(math.ceil(n))
    while p * p < n:
        p += 1
    while p > 0 and (p - 1) ** 2 >= n:
        p -= 1
    return p


def _sqrt_upper_brute(x: Fraction, max_den: int) -> Fraction:
    return min(Fraction(_ceil_sqrt_scaled(x, q), q) for q in range(1, max_den + 1))


# --- BG defect -------------------------------------------------------------

@given(rationals(max_value=Fraction(-1, 12)), positive_rationals())
def test_bg_defect_of_structure_sheaf(beta, a2):
    assert bg_defect(line_bundle(0), SurfacePoint(beta, a2)) == (-beta / 6) * (a2 - beta ** 2)


def test_bg_defect_examples():
    assert bg_defect(ChernCharacter(1, 0, -1, 1), SurfacePoint(Fraction(-3, 2), Fraction(1, 4))) == 0
    assert bg_defect(ChernCharacter(0, 0, 0, 0), SurfacePoint(1, 1)) == 0


@given(characters(), points(), st.integers(-6, 6))
def test_bg_defect_is_compatible_with_line_bundle_twists(v, p, k):
    moved = SurfacePoint(p.beta + k, p.alpha_sq)
    assert bg_defect(tensor_line_bundle(v, k), moved) == bg_defect(v, p)


@settings(max_examples=300)
@given(characters(), rationals(), st.sampled_from([1, 2, 5]))
def test_on_curve_form_is_three_times_the_defect(v, beta, h3):
    v = ChernCharacter.of(*v, h3=h3)
    assume(v.ch0 != 0)
    a2 = curve_alpha_sq(v, beta)
    assume(a2 > 0 and beta * v.ch0 < v.ch1)
    p = SurfacePoint(beta, a2)
    assert nu(v, p) == 0
    assert bg_on_curve(v, beta) == 3 * bg_defect(v, p)
    assert bg_on_curve(v, beta, a2) == bg_on_curve(v, beta)


@given(st.integers(1, 10), rationals(), rationals(), positive_rationals(), st.sampled_from([1, 3]))
def test_on_curve_form_for_rank_zero(c1, c2, c3, a2, h3):
    v = ChernCharacter.of(0, c1, c2, c3, h3=h3)
    beta = v.ch2 / v.ch1
    assert bg_on_curve(v, beta, a2) == bg_defect(v, SurfacePoint(beta, a2))


def test_on_curve_rank_zero_domain():
    v = ChernCharacter(0, 2, 1, 0)
    with pytest.raises(OutOfDomainError):
        bg_on_curve(v, Fraction(1, 2))  # alpha^2 missing
    with pytest.raises(OutOfDomainError):
        bg_on_curve(v, 1, 1)  # off the line
    with pytest.raises(OutOfDomainError):
        bg_on_curve(ChernCharacter(0, -2, 1, 0), Fraction(-1, 2), 1)


def test_on_curve_rank_nonzero_domain():
    v = ChernCharacter(1, 0, -1, 0)
    with pytest.raises(OutOfDomainError):
        bg_on_curve(v, Fraction(-1, 2))  # alpha^2 < 0 there
    with pytest.raises(OutOfDomainError):
        bg_on_curve(v, 3)  # wrong branch
    with pytest.raises(OutOfDomainError):
        bg_on_curve(v, -2, 5)  # alpha^2 is not on the curve


@pytest.mark.parametrize("d", range(1, 15))
@pytest.mark.parametrize("h", [-3, 0, 2, 7])
def test_on_curve_form_for_ideal_sheaves(d, h):
    v = ChernCharacter(1, 0, -d, h + 2 * d)
    assert bg_on_curve(v, Fraction(-(2 * d + 1), 2)) == 2 * d * d - 5 * d - 3 * h
    if d >= 3:
        assert bg_on_curve(v, Fraction(-(d + 2), 2)) == d * d - 4 * d - 3 * h


# --- reduction invariant ---------------------------------------------------

def test_reduction_invariant_examples():
    assert reduction_invariant(line_bundle(3), 0) == 0
    assert reduction_invariant(ChernCharacter(1, 0, -4, 0), Fraction(1, 3)) == 8 + Fraction(1, 3)
    v = ChernCharacter(0, 3, 1, 0)
    assert reduction_invariant(v, 5) == reduction_invariant(v, 1) == delta(v) == 9
    with pytest.raises(ValueError):
        reduction_invariant(v, -1)


@given(positive_rationals(), positive_rationals(), rationals(), positive_rationals(), st.sampled_from([1, 2]))
def test_reduction_invariant_on_the_curve(rank, c1, beta, a2, h3):
    t = ChernCharacter.of(rank, c1, a2 / 2 * rank, 0, h3=h3)
    v = twist(t, -beta)
    assert nu(v, SurfacePoint(beta, a2)) == 0
    assert reduction_invariant(v, a2) == (h3 * c1) ** 2


# --- square roots and Gamma bounds -----------------------------------------

@settings(max_examples=200)
@given(st.fractions(0, 50, max_denominator=30), st.integers(1, 60))
def test_sqrt_upper_matches_brute_force(x, max_den):
    assert sqrt_upper(x, max_den) == _sqrt_upper_brute(x, max_den)


@given(st.fractions(0, 10 ** 6, max_denominator=10 ** 4))
def test_sqrt_upper_is_an_upper_bound(x):
    r = sqrt_upper(x)
    assert r * r >= x
    assert r.denominator <= 10 ** 6
    assert float(r) - math.sqrt(float(x)) < 1e-5


def test_sqrt_upper_examples():
    assert sqrt_upper(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_upper(0) == 0
    r = sqrt_upper(2)
    assert r * r > 2 and (r - Fraction(1, 10 ** 6)) ** 2 < 2
    with pytest.raises(ValueError):
        sqrt_upper(-1)


def test_gamma_bounds_seed():
    g = gamma_bounds(ChernCharacter(1, 0, -1, 1), Fraction(-3, 2), Fraction(1, 4), Fraction(1, 16))
    assert g.gamma0 == Fraction(9, 4)
    assert g.gamma1 == 36
    # 6 * (3/2 + 1/2 + sqrt_upper(5/2)) = 12 + 6 * 1.5811... -> ceiling 22
    assert g.gamma2 == 22
    assert g.seed_rank0_ch1 is None
    assert beta_abs_max(Fraction(-3, 2), Fraction(1, 4)) == 2


def test_gamma_bounds_validation():
    v = ChernCharacter(1, 0, -1, 1)
    with pytest.raises(ValueError):
        gamma_bounds(v, 0, Fraction(1, 4), 0)
    with pytest.raises(ValueError):
        gamma_bounds(v, 0, Fraction(1, 16), Fraction(1, 4))


def test_gamma_bounds_zero_class():
    g = gamma_bounds(ChernCharacter(0, 0, 0, 0), 0, 1, 1)
    assert g == GammaBounds(0, 0, 0, Fraction(0))


@given(characters(), rationals(), positive_rationals(), positive_rationals(), st.sampled_from([1, 2]))
def test_gamma2_dominates_the_real_bound(v, b0, a0, at, h3):
    v = ChernCharacter.of(*v, h3=h3)
    assume(at <= a0 and delta(v) >= 0)
    g = gamma_bounds(v, b0, a0, at)
    g0 = float(g.gamma0)
    real = h3 * math.sqrt(float(g.gamma1)) * (abs(float(b0)) + math.sqrt(float(a0)) + math.sqrt(float(a0) + g0 / h3 ** 2))
    assert g.gamma2 >= real - 1e-9
