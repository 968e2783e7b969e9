"""Hypothesis properties over the exact core."""

from fractions import Fraction

import mpmath
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from sturmrect import (
    LinearForm,
    Side,
    decide,
    decode,
    dist_nearest,
    encode,
    floor_mul,
    frac_mul,
    lf_compare,
    lf_sign,
    parse_alpha,
    side_abs,
    validate,
)

from conftest import mp_value

GOLDEN = parse_alpha("golden")
SQRT2M1 = parse_alpha("sqrt2m1")
PI4 = parse_alpha("pi4")
CUSTOM = parse_alpha("cf:4,1,2,1,7,3,1,1,2,5")

small = st.integers(-10**6, 10**6)
forms = st.builds(LinearForm, small, small, st.integers(1, 1000))
alphas = st.sampled_from([("golden", GOLDEN), ("sqrt2m1", SQRT2M1)])
cfs = st.sampled_from([GOLDEN, SQRT2M1, PI4, CUSTOM])


def _exact(x: LinearForm, a: Fraction) -> Fraction:
    return (x.const_part + x.alpha_coeff * a) / x.denominator


@given(forms)
def test_normalized_representation_is_canonical(x):
    assert x.denominator > 0
    y = LinearForm(x.const_part * 7, x.alpha_coeff * 7, x.denominator * 7)
    assert y == x and hash(y) == hash(x)


@given(forms, forms, st.integers(-50, 50))
def test_arithmetic_matches_a_rational_stand_in(x, y, k):
    # the ring operations do not depend on alpha, so any rational value checks them
    a = Fraction(13, 21)
    assert _exact(x + y, a) == _exact(x, a) + _exact(y, a)
    assert _exact(x - y, a) == _exact(x, a) - _exact(y, a)
    assert _exact(x * k, a) == _exact(x, a) * k
    if k:
        assert _exact(x / k, a) == _exact(x, a) / k


@given(alphas, forms)
def test_sign_agrees_with_high_precision(named, x):
    name, cf = named
    with mpmath.workdps(80):
        ref = mp_value(name, x)
        expected = 0 if ref == 0 else (1 if ref > 0 else -1)
    assert lf_sign(cf, x) == expected


@given(alphas, forms, forms)
def test_compare_is_antisymmetric(named, x, y):
    cf = named[1]
    assert lf_compare(cf, x, y) == -lf_compare(cf, y, x)
    assert lf_compare(cf, x, x) == 0


@st.composite
def cf_and_n(draw):
    cf = draw(cfs)
    return cf, draw(st.integers(1, cf.q(cf.depth) - 1))


@given(cf_and_n())
def test_encode_decode_round_trip(pair):
    cf, n = pair
    rep = encode(cf, n)
    assert decode(cf, rep) == n
    assert validate(cf, rep.digits)


@given(cf_and_n())
def test_frac_complement(pair):
    cf, n = pair
    # {n alpha} + {-n alpha} = 1 for irrational alpha
    left = side_abs(cf, n, Side.LEFT)
    right = side_abs(cf, n, Side.RIGHT)
    assert left == frac_mul(cf, n)
    assert left + right == LinearForm(1)
    assert left == n * LinearForm(0, 1) - floor_mul(cf, n)


@given(cf_and_n())
def test_nearest_distance_is_the_smaller_side(pair):
    cf, n = pair
    d, side = dist_nearest(cf, n)
    assert d == side_abs(cf, n, side)
    assert lf_compare(cf, d, side_abs(cf, n, side.other)) < 0


@settings(max_examples=300, suppress_health_check=[HealthCheck.too_slow])
@given(cfs, st.integers(1, 400), st.integers(1, 400))
def test_decide_is_symmetric(cf, m, n):
    assert decide(cf, m, n).balanced == decide(cf, n, m).balanced
