"""Exact point counting on the torus R/Z.

Point sets hold exact forms in [0, 1).  The interval-balance oracle walks
the critical left endpoints (points and points minus the interval length)
and evaluates both the count at each one and its right limit, which covers
every real left endpoint because counts are constant in between.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from math import lcm
from typing import Optional, Sequence

from . import kernels
from .errors import AmbiguousShift, DistanceCollision
from .exactalpha import (
    ContinuedFraction,
    LinearForm,
    Side,
    frac_mul,
    lf_compare,
    lf_sign,
    side_abs,
)
from .ostrowski import encode, top_index

__all__ = [
    "TorusPointSet",
    "IntervalBalanceVerdict",
    "points_of_alpha",
    "count_in_interval",
    "interval_balance_oracle",
    "alpha_interval_balanced",
    "f_map",
    "is_bijective_f",
    "x_func",
    "x_star",
    "discrepancy_check",
    "shift_check",
]


def _in_unit(cf, x: LinearForm) -> bool:
    return lf_sign(cf, x) >= 0 and lf_sign(cf, x - 1) < 0


def _mod1(cf, x: LinearForm) -> LinearForm:
    """Reduce a form known to lie in [-1, 2) into [0, 1)."""
    if lf_sign(cf, x) < 0:
        return x + 1
    if lf_sign(cf, x - 1) >= 0:
        return x - 1
    return x


@dataclass(frozen=True)
class TorusPointSet:
    """Distinct exact points in [0, 1) with their generator labels and sorted order."""

    cf: ContinuedFraction = field(repr=False)
    points: tuple[LinearForm, ...]
    labels: tuple[int, ...]
    order: tuple[int, ...]

    @classmethod
    def from_points(cls, cf, points: Sequence[LinearForm], labels: Optional[Sequence[int]] = None):
        points = tuple(points)
        if not points:
            raise ValueError("a point set needs at least one point")
        labels = tuple(range(len(points))) if labels is None else tuple(labels)
        if len(labels) != len(points):
            raise ValueError("one label per point")
        for k, x in enumerate(points):
            if not _in_unit(cf, x):
                raise ValueError(f"point {k} is not in [0, 1)")
        order = sorted(
            range(len(points)),
            key=cmp_to_key(lambda i, j: lf_compare(cf, points[i], points[j])),
        )
        for a, b in zip(order, order[1:]):
            if lf_compare(cf, points[a], points[b]) == 0:
                raise ValueError(f"points {a} and {b} coincide")
        return cls(cf, points, labels, tuple(order))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def sorted_points(self) -> tuple[LinearForm, ...]:
        return tuple(self.points[i] for i in self.order)

    def _raw(self, *extra: LinearForm):
        """Sorted numerators over a common denominator, plus the extra forms rescaled."""
        W = lcm(*(x.denominator for x in self.points + extra))
        U, V = [], []
        for i in self.order:
            x = self.points[i]
            s = W // x.denominator
            U.append(x.const_part * s)
            V.append(x.alpha_coeff * s)
        rest = [(x.const_part * (W // x.denominator), x.alpha_coeff * (W // x.denominator)) for x in extra]
        vbound = 2 * max(map(abs, V)) + 2 * max((abs(v) for _, v in rest), default=0) + 1
        return U, V, W, rest, self.cf.bracket(vbound)


@dataclass(frozen=True)
class IntervalBalanceVerdict:
    balanced: bool
    c: Optional[int]
    counts_seen: frozenset[int]
    witness_intervals: tuple[tuple[int, LinearForm], ...] = ()

    def to_json(self) -> dict:
        return {
            "balanced": self.balanced,
            "c": self.c,
            "counts": sorted(self.counts_seen),
            "witnesses": [{"count": c, **x.to_json()} for c, x in self.witness_intervals],
        }


def points_of_alpha(cf: ContinuedFraction, m: int) -> TorusPointSet:
    """{l alpha} for 0 <= l <= m-1."""
    if m < 1:
        raise ValueError("points_of_alpha needs m >= 1")
    return TorusPointSet.from_points(cf, [frac_mul(cf, l) for l in range(m)])


def _check_length(cf, d: LinearForm) -> None:
    if not (lf_sign(cf, d) > 0 and lf_sign(cf, d - 1) < 0):
        raise ValueError("interval length must lie in (0, 1)")


def count_in_interval(points: TorusPointSet, x: LinearForm, d: LinearForm) -> int:
    """#(points in [x, x+d) mod 1) for 0 <= x < 1 and 0 < d < 1."""
    cf = points.cf
    if not _in_unit(cf, x):
        raise ValueError("left endpoint must lie in [0, 1)")
    _check_length(cf, d)
    U, V, W, ((xu, xv), (du, dv)), br = points._raw(x, d)
    return kernels.count_raw(U, V, W, xu, xv, du, dv, br)


def _critical_points(points: TorusPointSet, d: LinearForm) -> list[LinearForm]:
    cf = points.cf
    return list(points.points) + [_mod1(cf, y - d) for y in points.points]


def _right_limit_probe(points: TorusPointSet, d: LinearForm, x: LinearForm) -> LinearForm:
    """Midpoint between x and the next critical endpoint, cyclically."""
    cf = points.cf
    gap = None
    for c in _critical_points(points, d):
        g = _mod1(cf, c - x)
        if g.is_zero:
            continue
        if gap is None or lf_compare(cf, g, gap) < 0:
            gap = g
    if gap is None:
        gap = LinearForm(1)
    return _mod1(cf, x + gap / 2)


def interval_balance_oracle(points: TorusPointSet, d: LinearForm) -> IntervalBalanceVerdict:
    """Decide whether every interval [x, x+d) holds c or c+1 points, over all real x."""
    cf = points.cf
    _check_length(cf, d)
    U, V, W, ((du, dv),), br = points._raw(d)
    seen = kernels.oracle_counts(U, V, W, du, dv, br)
    counts = sorted(seen)
    balanced = counts[-1] - counts[0] <= 1
    chosen = [counts[0]] + ([counts[len(counts) // 2]] if len(counts) > 2 else []) + [counts[-1]]
    chosen = sorted(set(chosen))
    witnesses = []
    srt = points.sorted_points
    for c in chosen:
        kind, idx, right = seen[c]
        x = srt[idx] if kind == 0 else _mod1(cf, srt[idx] - d)
        if right:
            x = _right_limit_probe(points, d, x)
        witnesses.append((c, x))
    return IntervalBalanceVerdict(
        balanced, counts[0] if balanced else None, frozenset(counts), tuple(witnesses)
    )


def alpha_interval_balanced(cf: ContinuedFraction, m: int, n: int, points: Optional[TorusPointSet] = None) -> bool:
    """Intervals of length {n alpha} balanced with respect to (alpha, m)."""
    if points is None:
        points = points_of_alpha(cf, m)
    return interval_balance_oracle(points, frac_mul(cf, n)).balanced


def _neighbours(points: TorusPointSet, target: LinearForm) -> tuple[int, int]:
    """Indices of the closest point at-or-left and at-or-right of target (cyclic)."""
    cf = points.cf
    srt = points.sorted_points
    lo, hi = 0, len(srt)
    while lo < hi:
        mid = (lo + hi) // 2
        if lf_compare(cf, srt[mid], target) < 0:
            lo = mid + 1
        else:
            hi = mid
    # srt[lo] is the first point >= target
    exact = lo < len(srt) and lf_compare(cf, srt[lo], target) == 0
    right = points.order[lo % len(srt)]
    left = points.order[lo] if exact else points.order[(lo - 1) % len(srt)]
    return left, right


def f_map(points: TorusPointSet, d: LinearForm, side: Side, l: int) -> int:
    """Index of the nearest point left (or right) of xi_l + d; a point exactly there counts for both."""
    cf = points.cf
    target = _mod1(cf, points.points[l] + d)
    left, right = _neighbours(points, target)
    return left if side is Side.LEFT else right


def _collision(points: TorusPointSet, d: LinearForm) -> Optional[tuple[int, int]]:
    cf = points.cf
    for i, y in enumerate(points.points):
        target = _mod1(cf, y - d)
        left, _ = _neighbours(points, target)
        if lf_compare(cf, points.points[left], target) == 0:
            return i, left
    return None


def is_bijective_f(points: TorusPointSet, d: LinearForm, side: Side) -> bool:
    hit = _collision(points, d)
    if hit is not None:
        raise DistanceCollision(*hit)
    images = {f_map(points, d, side, l) for l in range(len(points))}
    return len(images) == len(points)


def _argmin_side(cf, lo: int, hi: int, side: Side) -> int:
    best, best_val = None, None
    for x in range(lo, hi + 1):
        val = side_abs(cf, x, side)
        if best is None or lf_compare(cf, val, best_val) < 0:
            best, best_val = x, val
    return best


def x_func(cf: ContinuedFraction, m: int, n: int, side: Side, l: int) -> int:
    """Minimiser of |x alpha|_side over [n+l-m+1, n+l]."""
    if not 1 <= m <= n:
        raise ValueError("x_func needs 1 <= m <= n")
    if not 0 <= l < m:
        raise ValueError("x_func needs 0 <= l < m")
    return _argmin_side(cf, n + l - m + 1, n + l, side)


def x_star(cf: ContinuedFraction, m: int, n: int, side: Side) -> int:
    """Minimiser of |x alpha|_side over [n-m+1, n+m-1]."""
    if not 1 <= m <= n:
        raise ValueError("x_star needs 1 <= m <= n")
    return _argmin_side(cf, n - m + 1, n + m - 1, side)


def discrepancy_check(cf: ContinuedFraction, N: int, x: LinearForm, d: LinearForm) -> bool:
    """|#{n < N : {n alpha} in [x, x+d)} - N d| < 1, decided exactly."""
    if N < 1:
        raise ValueError("discrepancy_check needs N >= 1")
    count = count_in_interval(points_of_alpha(cf, N), x, d)
    excess = LinearForm(count) - d * N
    return lf_sign(cf, excess - 1) < 0 and lf_sign(cf, excess + 1) > 0


@dataclass(frozen=True)
class ShiftResult:
    T: int
    balanced_n: bool
    balanced_shift: bool

    @property
    def agrees(self) -> bool:
        return self.balanced_n == self.balanced_shift


def shift_check(cf: ContinuedFraction, m: int, n: int, points: Optional[TorusPointSet] = None) -> ShiftResult:
    """Compare lengths {n alpha} and {(q_T - n) alpha} for T = top index of n plus 2.

    The verdict for q_T - n must already be stable at T+1, otherwise
    AmbiguousShift is raised.
    """
    if points is None:
        points = points_of_alpha(cf, m)
    T = top_index(encode(cf, n)) + 2
    at_n = interval_balance_oracle(points, frac_mul(cf, n)).balanced
    shifted = [
        interval_balance_oracle(points, frac_mul(cf, cf.q(t) - n)).balanced for t in (T, T + 1)
    ]
    if shifted[0] != shifted[1]:
        raise AmbiguousShift(f"q_T - n verdict changes between T={T} and T={T + 1}")
    return ShiftResult(T, at_n, shifted[0])
