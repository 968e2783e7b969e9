"""The compiled kernels and their pure-Python twin must agree exactly."""

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from sturmrect import frac_mul, kernels, parse_alpha, points_of_alpha
from sturmrect.errors import InsufficientDepth

from conftest import ALL_ALPHAS

py = kernels.python


def test_compiled_extension_is_selected():
    assert kernels.IMPLEMENTATION == "cython"
    assert py.IMPLEMENTATION == "python"


def test_env_var_forces_fallback():
    env = dict(os.environ, STURMRECT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from sturmrect import kernels; print(kernels.IMPLEMENTATION)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("alpha", ALL_ALPHAS)
def test_lf_sign_raw(alpha):
    cf = parse_alpha(alpha)
    br = cf.bracket(2000)
    rng = random.Random(1)
    for _ in range(3000):
        u, v = rng.randint(-1500, 1500), rng.randint(-1000, 1000)
        try:
            want = py.lf_sign_raw(u, v, *br)
        except InsufficientDepth:
            with pytest.raises(InsufficientDepth):
                kernels.lf_sign_raw(u, v, *br)
            continue
        assert kernels.lf_sign_raw(u, v, *br) == want


@pytest.mark.parametrize("alpha", ALL_ALPHAS)
def test_floor_table(alpha):
    cf = parse_alpha(alpha)
    n_max = 120_000
    f1, u1 = kernels.floor_table(*cf.bracket(n_max), n_max)
    f2, u2 = py.floor_table(*cf.bracket(n_max), n_max)
    assert np.array_equal(f1, f2) and np.array_equal(u1, u2)


def test_floor_table_reports_undecidable_for_pi4():
    cf = parse_alpha("pi4")
    _, und = kernels.floor_table(*cf.bracket(100_000), 100_000)
    assert not und[:65978].any() and und.any()


@pytest.mark.parametrize("alpha", ALL_ALPHAS)
def test_scan_weights(alpha):
    cf = parse_alpha(alpha)
    floors, und = kernels.floor_table(*cf.bracket(3000), 3000)
    rng = random.Random(2)
    for _ in range(40):
        m, n = rng.randint(1, 30), rng.randint(1, 30)
        stop = rng.choice([0, 3])
        valid = None if rng.random() < 0.5 else np.array([rng.random() < 0.9 for _ in range(2001)])
        assert kernels.scan_weights(floors, m, n, 2000, stop, valid) == py.scan_weights(
            floors, m, n, 2000, stop, valid
        )


@pytest.mark.parametrize("alpha", ALL_ALPHAS)
def test_count_and_oracle(alpha):
    cf = parse_alpha(alpha)
    rng = random.Random(3)
    for m in (1, 2, 5, 13, 40):
        pts = points_of_alpha(cf, m)
        for _ in range(10):
            d = frac_mul(cf, rng.randint(1, 300))
            x = frac_mul(cf, rng.randint(0, 300))
            U, V, W, ((xu, xv), (du, dv)), br = pts._raw(x, d)
            assert kernels.count_raw(U, V, W, xu, xv, du, dv, br) == py.count_raw(U, V, W, xu, xv, du, dv, br)
            U, V, W, ((du, dv),), br = pts._raw(d)
            assert kernels.oracle_counts(U, V, W, du, dv, br) == py.oracle_counts(U, V, W, du, dv, br)
