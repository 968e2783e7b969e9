"""Sturmian words of slope alpha (intercept 0) and their rectangle weights.

a_n = floor((n+1)alpha) - floor(n alpha).  The intercept is fixed at 0: two
Sturmian words with the same slope have the same factors, and every
rectangle A(i,m,n) is determined by the factor a_i .. a_{i+m+n-2}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import InsufficientDepth
from .exactalpha import ContinuedFraction, LinearForm, floor_mul, frac_mul, lf_sign

__all__ = [
    "RectangleQuery",
    "WeightScanReport",
    "FloorTable",
    "symbol",
    "prefix",
    "factor_weight",
    "rect_weight",
    "indicator_sum",
    "window_scan",
    "DEFAULT_I_MAX",
]

DEFAULT_I_MAX = 10_000


@dataclass(frozen=True)
class RectangleQuery:
    m: int
    n: int
    alpha: ContinuedFraction = field(repr=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"rectangle needs m, n >= 1 (got {self.m} x {self.n})")


@dataclass(frozen=True)
class WeightScanReport:
    """Weights T(i,m,n) seen for i_min <= i <= i_max.

    Three or more weights prove the m x n rectangles unbalanced; two or fewer
    prove nothing.  ``skipped`` counts windows whose floors the quotient
    prefix could not decide (only in skip mode).
    """

    m: int
    n: int
    i_max: int
    witnesses: dict[int, int]
    skipped: int = 0

    @property
    def weights_seen(self) -> frozenset[int]:
        return frozenset(self.witnesses)

    @property
    def proves_unbalanced(self) -> bool:
        return len(self.witnesses) >= 3

    def merge(self, other: "WeightScanReport") -> "WeightScanReport":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("can only merge scans of the same rectangle shape")
        witnesses = dict(self.witnesses)
        for w, i in other.witnesses.items():
            witnesses[w] = min(i, witnesses.get(w, i))
        return WeightScanReport(
            self.m, self.n, max(self.i_max, other.i_max), witnesses, self.skipped + other.skipped
        )

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "i_max": self.i_max,
            "weights": sorted(self.witnesses),
            "witnesses": {str(w): i for w, i in sorted(self.witnesses.items())},
            "skipped": self.skipped,
        }


class FloorTable:
    """floor(k alpha) for 0 <= k <= n_max, built once and shared by many scans."""

    def __init__(self, cf: ContinuedFraction, n_max: int):
        self.cf = cf
        self.n_max = n_max
        self.floors, self.undecided = kernels.floor_table(*cf.bracket(n_max), n_max)
        self._bad = np.zeros(n_max + 2, dtype=np.int64)
        np.cumsum(self.undecided, out=self._bad[1:])

    def undecided_between(self, lo: int, hi: int) -> int:
        """Number of undecidable k with lo <= k <= hi."""
        return int(self._bad[hi + 1] - self._bad[lo])

    def check(self, lo: int, hi: int) -> None:
        if self.undecided_between(lo, hi):
            k = lo + int(np.argmax(self.undecided[lo : hi + 1]))
            raise InsufficientDepth(
                f"floor({k}*alpha) is not decided by the {self.cf.depth} stored quotients"
            )


def symbol(cf: ContinuedFraction, n: int) -> int:
    if n < 1:
        raise ValueError("symbols are indexed from 1")
    return floor_mul(cf, n + 1) - floor_mul(cf, n)


def prefix(cf: ContinuedFraction, length: int) -> list[int]:
    """Symbols a_1 .. a_length."""
    if length < 0:
        raise ValueError("length must be >= 0")
    if length == 0:
        return []
    table = FloorTable(cf, length + 1)
    table.check(1, length + 1)
    return np.diff(table.floors[1:]).tolist()


def factor_weight(cf: ContinuedFraction, i: int, n: int) -> int:
    """Weight of a_i .. a_{i+n-1}; 0 for the empty factor."""
    if n == 0:
        return 0
    if i < 1 or n < 0:
        raise ValueError("factor_weight needs i >= 1 and n >= 0")
    return floor_mul(cf, i + n) - floor_mul(cf, i)


def rect_weight(cf: ContinuedFraction, i: int, m: int, n: int) -> int:
    """T(i,m,n), summed row by row."""
    if min(i, m, n) < 1:
        raise ValueError("rect_weight needs i, m, n >= 1")
    return sum(factor_weight(cf, i + l, n) for l in range(m))


def indicator_sum(cf: ContinuedFraction, i: int, m: int, n: int) -> int:
    """S(i,m,n): how many of {(i+l)alpha}, l < m, land in [1 - {n alpha}, 1)."""
    if min(i, m, n) < 1:
        raise ValueError("indicator_sum needs i, m, n >= 1")
    threshold = 1 - frac_mul(cf, n)
    return sum(1 for l in range(m) if lf_sign(cf, frac_mul(cf, i + l) - threshold) >= 0)


def window_scan(
    cf: ContinuedFraction,
    m: int,
    n: int,
    i_max: int = DEFAULT_I_MAX,
    *,
    i_min: int = 1,
    skip_undecidable: bool = False,
    stop_after: int = 0,
    table: FloorTable | None = None,
) -> WeightScanReport:
    """Collect rectangle weights over a finite window of starting indices.

    One-sided: three weights prove the rectangles unbalanced, fewer prove
    nothing.  By default a window the quotient prefix cannot decide raises
    InsufficientDepth; with ``skip_undecidable`` such windows are left out
    and counted, which keeps the unbalanced verdict sound.
    """
    if m < 1 or n < 1:
        raise ValueError("window_scan needs m, n >= 1")
    if i_max < 1 or i_min < 1:
        raise ValueError("window_scan needs i_max >= 1")
    top = i_max + m + n
    if table is None or table.n_max < top:
        table = FloorTable(cf, top)
    valid = None
    skipped = 0
    if table.undecided_between(i_min, top - 1):
        if not skip_undecidable:
            table.check(i_min, top - 1)
        bad = table.undecided[: top].astype(np.int64)
        c = np.concatenate(([0], np.cumsum(bad)))
        i = np.arange(i_max + 1)
        span = m + n - 1
        lo = np.clip(i, 0, None)
        hi = np.clip(i + span, None, top - 1)
        valid = (c[hi + 1] - c[lo]) == 0
        valid[0] = False
        skipped = int(np.count_nonzero(~valid[i_min:]))
    if i_min > 1:
        valid = np.ones(i_max + 1, dtype=bool) if valid is None else valid.copy()
        valid[:i_min] = False
    witnesses = kernels.scan_weights(table.floors, m, n, i_max, stop_after, valid)
    return WeightScanReport(m, n, i_max, dict(witnesses), skipped)
