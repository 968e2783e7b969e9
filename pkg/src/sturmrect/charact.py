"""Balancedness of m x n rectangles read off the Ostrowski digits of m and n.

With m <= n (the Hankel matrix is symmetric) and m >= 2 the rectangles are
balanced exactly when one of four digit shapes holds:

  i    every digit of m sits strictly below every digit of n;
  ii   n = q_M + (digits from M+1+2t on), where M is the top index of m;
  iii  m = q_M and the first digit of n at index >= M has index = M (mod 2);
  iv   m = q_{M-1} + a q_M with 1 <= a < a_{M+1}, and the first digit of n
       at index >= M has index = M+1 (mod 2).

Case iv is detected arithmetically rather than from the support of m:
when a_1 = 1 and M = 1 the representation of 1 + a is the single digit
b_1 = a + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .exactalpha import ContinuedFraction
from .ostrowski import OstrowskiRep, digit, encode, k0, k_geq, top_index

__all__ = ["CaseTag", "BalanceVerdict", "XStarShape", "decide", "classify_xstar_shape", "semiconvergent_split"]


class CaseTag(enum.Enum):
    ONE_DIM = "1d"
    SPLIT_I = "i"
    SPLIT_II = "ii"
    CONVERGENT_III = "iii"
    SEMICONVERGENT_IV = "iv"
    NONE = "none"


class XStarShape(enum.Enum):
    SHAPE_A = "a"
    SHAPE_B = "b"
    NEITHER = "neither"


@dataclass(frozen=True)
class BalanceVerdict:
    m: int
    n: int
    balanced: bool
    case_tag: CaseTag
    m_digits: OstrowskiRep
    n_digits: OstrowskiRep
    M: Optional[int] = None
    t: Optional[int] = None
    a: Optional[int] = None
    alpha: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "alpha": self.alpha,
            "m": self.m,
            "n": self.n,
            "balanced": self.balanced,
            "case": self.case_tag.value,
            "M": self.M,
            "t": self.t,
            "a": self.a,
            "m_digits": self.m_digits.to_json(),
            "n_digits": self.n_digits.to_json(),
        }


def semiconvergent_split(cf: ContinuedFraction, m: int) -> list[tuple[int, int]]:
    """All (M, a) with m = q_{M-1} + a q_M and 1 <= a <= a_{M+1} - 1."""
    found = []
    for M in range(1, cf.depth):
        qM, qprev = cf.q(M), cf.q(M - 1)
        if qprev + qM > m:
            break
        a, r = divmod(m - qprev, qM)
        if r == 0 and 1 <= a <= cf.a(M + 1) - 1:
            found.append((M, a))
    return found


def _convergent_index(cf: ContinuedFraction, m: int) -> Optional[int]:
    """M with q_M = m >= 2, if any."""
    if m < 2:
        return None
    for M in range(cf.depth + 1):
        if cf.q(M) == m:
            return M
        if cf.q(M) > m:
            break
    return None


def _parity_t(k: Optional[int], base: int) -> Optional[int]:
    if k is None or (k - base) % 2:
        return None
    return (k - base) // 2


def decide(cf: ContinuedFraction, m: int, n: int, *, alpha_label: str = "") -> BalanceVerdict:
    if m < 1 or n < 1:
        raise ValueError(f"rectangle needs m, n >= 1 (got {m} x {n})")
    m_rep, n_rep = encode(cf, m), encode(cf, n)

    def verdict(tag, M=None, t=None, a=None):
        return BalanceVerdict(m, n, tag is not CaseTag.NONE, tag, m_rep, n_rep, M, t, a, alpha_label)

    small, large = (m_rep, n_rep) if m <= n else (n_rep, m_rep)
    if small.value == 1:
        return verdict(CaseTag.ONE_DIM)

    top = top_index(small)
    low = k0(large)
    if top < low:
        return verdict(CaseTag.SPLIT_I, M=top)

    if low == top and digit(large, top) == 1 and large.value > cf.q(top):
        t = _parity_t(k_geq(large, top + 1), top + 1)
        if t is not None:
            return verdict(CaseTag.SPLIT_II, M=top, t=t)

    M = _convergent_index(cf, small.value)
    if M is not None:
        t = _parity_t(k_geq(large, M), M)
        if t is not None:
            return verdict(CaseTag.CONVERGENT_III, M=M, t=t)

    for M, a in semiconvergent_split(cf, small.value):
        t = _parity_t(k_geq(large, M), M + 1)
        if t is not None:
            return verdict(CaseTag.SEMICONVERGENT_IV, M=M, t=t, a=a)

    return verdict(CaseTag.NONE)


def _bracket_index(cf: ContinuedFraction, m: int) -> int:
    """M with q_{M-1} < m <= q_M."""
    for M in range(1, cf.depth + 1):
        if cf.q(M - 1) < m <= cf.q(M):
            return M
    raise ValueError(f"m = {m} is beyond the stored convergents")


def classify_xstar_shape(cf: ContinuedFraction, m: int, n: int) -> XStarShape:
    """Digit shapes of n for which n minimises one of the one-sided distances over [n-m+1, n+m-1].

    (a) k0(n) >= M; (b) n = q_{M-1} + (digits from M+2t on, the first one
    nonzero); here q_{M-1} < m <= q_M.
    """
    if not 2 <= m <= n:
        raise ValueError("classify_xstar_shape needs 2 <= m <= n")
    rep = encode(cf, n)
    M = _bracket_index(cf, m)
    low = k0(rep)
    if low >= M:
        return XStarShape.SHAPE_A
    if low == M - 1 and digit(rep, M - 1) == 1 and _parity_t(k_geq(rep, M), M) is not None:
        return XStarShape.SHAPE_B
    return XStarShape.NEITHER
