import random
import zlib

import pytest

from lemma_suite import (
    RANDOM_SUITES,
    dist,
    flip_simple,
    item_lower_N,
    semiconv_chain,
    special_shape,
)
from sturmrect import encode, k0, lf_compare, parse_alpha

from conftest import ALL_ALPHAS

COUNT = 1500
KNOWN_BOUNDARY = {"lower_with_tail", "flip_simple"}


@pytest.mark.parametrize("alpha", ALL_ALPHAS)
@pytest.mark.parametrize("suite", RANDOM_SUITES, ids=lambda f: f.__name__)
def test_random_suite(alpha, suite):
    cf = parse_alpha(alpha)
    res = suite(cf, random.Random(zlib.crc32(f"{alpha}/{suite.__name__}".encode())), COUNT)
    assert res.ok_corrected, res.violations[:5]
    if res.name not in KNOWN_BOUNDARY:
        assert res.ok, res.violations[:5]


@pytest.mark.parametrize("alpha", ALL_ALPHAS)
def test_semiconvergent_chain(alpha):
    res = semiconv_chain(parse_alpha(alpha))
    assert res.instances > 0 and res.ok


@pytest.mark.parametrize(
    "alpha,expect_nonempty",
    [("golden", {"lower_large_digit": False, "upper_by_semiconvergent": False, "monotone_lowest_digit": False}),
     ("sqrt2m1", {"lower_large_digit": True, "upper_by_semiconvergent": True, "monotone_lowest_digit": True})],
)
def test_vacuous_items_are_vacuous_only_for_golden(alpha, expect_nonempty):
    # with every quotient equal to 1 no digit can be 2, and b_L <= a_{L+1} - 1 forces b_L = 0
    cf = parse_alpha(alpha)
    for suite in RANDOM_SUITES:
        res = suite(cf, random.Random(3), 200)
        if res.name in expect_nonempty:
            assert (res.instances > 0) == expect_nonempty[res.name]


def test_tail_bound_equality_at_convergent():
    # n = q_N with a_{N+2} = 1: the two sides agree exactly
    cf = parse_alpha("golden")
    for N in range(2, 20):
        n = cf.q(N)
        L = k0(encode(cf, n))
        assert L == N
        rhs = dist(cf, cf.q(L + 1)) + dist(cf, cf.q(N + 2))
        assert lf_compare(cf, dist(cf, n), rhs) == 0


def test_tail_bound_strict_when_next_quotient_large():
    cf = parse_alpha("sqrt2m1")
    for N in range(1, 20):
        n = cf.q(N)
        rhs = dist(cf, cf.q(N + 1)) + dist(cf, cf.q(N + 2))
        assert lf_compare(cf, dist(cf, n), rhs) > 0


def test_tail_bound_suite_flags_the_boundary():
    res = item_lower_N(parse_alpha("golden"), random.Random(0), 2000)
    assert res.violations and res.ok_corrected
    assert all(n == parse_alpha("golden").q(N) for n, N in res.violations)


def test_flip_simple_fails_at_convergent():
    cf = parse_alpha("golden")
    n = cf.q(5)
    assert n == 8 and not special_shape(cf, encode(cf, n))
    rest = encode(cf, cf.q(9) - n)
    assert rest.value == 47 and sorted(rest.support) == [6, 8]
    assert k0(rest) != 4


def test_flip_simple_holds_off_convergents():
    cf = parse_alpha("cf:4,1,2,1,7,3,1,1,2,5")
    res = flip_simple(cf, random.Random(5), 3000)
    assert res.ok_corrected
    assert res.instances > len(res.violations) > 0
