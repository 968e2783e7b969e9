"""Shared fixtures.

The independent oracle is mpmath at 80 digits on the true slopes
((sqrt5-1)/2, sqrt2-1, pi/4).  The custom quotient list has no closed form,
so its oracle is the deepest stored convergent, used only well inside the
range the prefix decides.
"""

import mpmath
import pytest

from sturmrect import parse_alpha

mpmath.mp.dps = 80

PRESET_NAMES = ("golden", "sqrt2m1", "pi4")
CUSTOM = "cf:4,1,2,1,7,3,1,1,2,5"
ALL_ALPHAS = PRESET_NAMES + (CUSTOM,)

TRUE_ALPHA = {
    "golden": (mpmath.sqrt(5) - 1) / 2,
    "sqrt2m1": mpmath.sqrt(2) - 1,
    "pi4": mpmath.pi / 4,
}


def true_alpha(name: str):
    if name in TRUE_ALPHA:
        return TRUE_ALPHA[name]
    cf = parse_alpha(name)
    return mpmath.mpf(cf.p(cf.depth)) / cf.q(cf.depth)


def mp_value(name: str, form):
    return (form.const_part + form.alpha_coeff * true_alpha(name)) / form.denominator


def mp_floor(name: str, n: int) -> int:
    return int(mpmath.floor(n * true_alpha(name)))


def mp_frac(name: str, n: int):
    x = n * true_alpha(name)
    return x - mpmath.floor(x)


def mp_dist(name: str, n: int):
    f = mp_frac(name, n)
    return min(f, 1 - f)


@pytest.fixture(params=ALL_ALPHAS)
def alpha_name(request):
    return request.param


@pytest.fixture(params=PRESET_NAMES)
def preset_name(request):
    return request.param


@pytest.fixture
def golden():
    return parse_alpha("golden")


@pytest.fixture
def pi4():
    return parse_alpha("pi4")


@pytest.fixture
def sqrt2m1():
    return parse_alpha("sqrt2m1")

