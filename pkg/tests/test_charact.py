import pytest

from sturmrect import (
    CaseTag,
    Side,
    ValueTooLargeForDepth,
    XStarShape,
    classify_xstar_shape,
    decide,
    encode,
    frac_mul,
    interval_balance_oracle,
    k_geq,
    low_part,
    parse_alpha,
    points_of_alpha,
    x_star,
)
from sturmrect.charact import semiconvergent_split

from conftest import ALL_ALPHAS


def fibonacci_upto(limit):
    out, a, b = [], 2, 3
    while a <= limit:
        out.append(a)
        a, b = b, a + b
    return out


class TestDecideExamples:
    def test_pi4_two_by_ten(self, pi4):
        v = decide(pi4, 2, 10)
        assert v.balanced and v.case_tag is CaseTag.SPLIT_II
        assert (v.M, v.t) == (1, 1)

    def test_pi4_five_by_ten(self, pi4):
        v = decide(pi4, 5, 10)
        assert not v.balanced and v.case_tag is CaseTag.NONE

    def test_golden(self, golden):
        v = decide(golden, 2, 3)
        assert v.balanced and v.case_tag is CaseTag.SPLIT_I
        assert v.m_digits.support == {2: 1} and v.n_digits.support == {3: 1}
        v = decide(golden, 2, 4)
        assert not v.balanced and v.case_tag is CaseTag.NONE

    def test_rows(self, alpha_name):
        cf = parse_alpha(alpha_name)
        for n in range(1, 50):
            assert decide(cf, 1, n).case_tag is CaseTag.ONE_DIM
            assert decide(cf, n, 1).case_tag is CaseTag.ONE_DIM

    def test_convergent_square(self, golden):
        v = decide(golden, 8, 8)
        assert v.balanced

    def test_json(self, pi4):
        data = decide(pi4, 2, 10, alpha_label="pi4").to_json()
        assert data == {
            "schema": 1,
            "alpha": "pi4",
            "m": 2,
            "n": 10,
            "balanced": True,
            "case": "ii",
            "M": 1,
            "t": 1,
            "a": None,
            "m_digits": [0, 2],
            "n_digits": [0, 1, 0, 0, 1],
        }

    def test_errors(self, pi4):
        with pytest.raises(ValueTooLargeForDepth):
            decide(pi4, 2, 40_000)
        with pytest.raises(ValueError):
            decide(pi4, 0, 3)

    def test_semiconvergent_split(self, pi4):
        assert semiconvergent_split(pi4, 2) == [(1, 1)]
        assert semiconvergent_split(pi4, 3) == [(1, 2)]
        assert semiconvergent_split(pi4, 107) == [(5, 7)]
        assert semiconvergent_split(pi4, 4) == []

    def test_every_case_occurs(self):
        tags = set()
        for name in ALL_ALPHAS:
            cf = parse_alpha(name)
            for m in range(1, 60):
                for n in range(m, 60):
                    tags.add(decide(cf, m, n).case_tag)
        assert tags == set(CaseTag)


class TestDecideProperties:
    def test_symmetry(self, alpha_name):
        cf = parse_alpha(alpha_name)
        for m in range(1, 101):
            for n in range(m + 1, 101):
                assert decide(cf, m, n).balanced == decide(cf, n, m).balanced

    def test_oracle_agreement_small(self, alpha_name):
        cf = parse_alpha(alpha_name)
        for m in range(2, 41):
            pts = points_of_alpha(cf, m)
            for n in range(m, 41):
                assert decide(cf, m, n).balanced == interval_balance_oracle(pts, frac_mul(cf, n)).balanced

    def test_fibonacci_family(self, golden):
        for n in fibonacci_upto(610):
            for m in range(2, n + 1):
                assert decide(golden, m, n).balanced

    def test_convergent_parity(self, alpha_name):
        cf = parse_alpha(alpha_name)
        for M in range(cf.depth + 1):
            m = cf.q(M)
            if m < 2:
                continue
            if m > 1000:
                break
            for n in range(m, 1001):
                rep = encode(cf, n)
                if low_part(rep, M - 1) == 0:
                    continue
                k = k_geq(rep, M)
                expected = k is not None and (k - M) % 2 == 0
                assert decide(cf, m, n).balanced == expected

    def test_generic_m_unbalanced(self, alpha_name):
        cf = parse_alpha(alpha_name)
        convergents = set(cf.convergent_dens)
        for m in range(2, 151):
            if m in convergents or semiconvergent_split(cf, m):
                continue
            for n in range(m, 151):
                if classify_xstar_shape(cf, m, n) is XStarShape.NEITHER:
                    assert not decide(cf, m, n).balanced


class TestXStarShape:
    def test_examples(self, pi4, golden):
        assert classify_xstar_shape(pi4, 2, 10) is XStarShape.SHAPE_B
        assert classify_xstar_shape(pi4, 5, 10) is XStarShape.NEITHER
        for M in range(2, 12):
            q = golden.q(M)
            assert classify_xstar_shape(golden, q, q) is XStarShape.SHAPE_A

    def test_precondition(self, pi4):
        with pytest.raises(ValueError):
            classify_xstar_shape(pi4, 1, 5)
        with pytest.raises(ValueError):
            classify_xstar_shape(pi4, 6, 5)

    def test_probe_against_x_star(self, alpha_name):
        cf = parse_alpha(alpha_name)
        for m in range(2, 81):
            for n in range(m, 81):
                shape = classify_xstar_shape(cf, m, n) is not XStarShape.NEITHER
                hit = n in (x_star(cf, m, n, Side.LEFT), x_star(cf, m, n, Side.RIGHT))
                assert shape == hit
