"""Ostrowski numeration n = sum b_k q_k with respect to a continued fraction.

Digit rules: 0 <= b_0 <= a_1 - 1, 0 <= b_k <= a_{k+1} for k >= 1, and
b_{k-1} = 0 whenever b_k = a_{k+1}.  Digit sequences are stored lowest index
first without trailing zeros, so 0 is the empty sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvalidDigits, ValueTooLargeForDepth, ZeroHasNoDigits
from .exactalpha import ContinuedFraction

__all__ = [
    "OstrowskiRep",
    "ValidationReport",
    "encode",
    "decode",
    "validate",
    "k0",
    "k_geq",
    "digit",
    "top_index",
    "low_part",
    "high_part",
]


@dataclass(frozen=True)
class OstrowskiRep:
    cf: ContinuedFraction = field(repr=False)
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(b * q for b, q in zip(self.digits, self.cf.convergent_dens))

    @property
    def support(self) -> dict[int, int]:
        return {k: b for k, b in enumerate(self.digits) if b}

    def to_json(self) -> list[int]:
        return list(self.digits)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[tuple[int, str], ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def _strip(digits: Sequence[int]) -> tuple[int, ...]:
    digits = list(digits)
    while digits and digits[-1] == 0:
        digits.pop()
    return tuple(digits)


def validate(cf: ContinuedFraction, digits: Sequence[int]) -> ValidationReport:
    digits = _strip(digits)
    violations = []
    for k, b in enumerate(digits):
        if not isinstance(b, int) or b < 0:
            violations.append((k, f"digit {b!r} is not a nonnegative integer"))
            continue
        if k + 1 > cf.depth:
            if b:
                violations.append((k, f"index beyond the stored prefix (a_{k + 1} unknown)"))
            continue
        bound = cf.a(k + 1) - (1 if k == 0 else 0)
        if b > bound:
            violations.append((k, f"b_{k} = {b} exceeds its bound {bound}"))
        elif k >= 1 and b == cf.a(k + 1) and digits[k - 1] != 0:
            violations.append((k - 1, f"b_{k} = a_{k + 1} forces b_{k - 1} = 0"))
    return ValidationReport(not violations, tuple(violations))


def encode(cf: ContinuedFraction, n: int) -> OstrowskiRep:
    """Greedy expansion from the largest q_k <= n."""
    if n < 0:
        raise ValueError("Ostrowski representation needs n >= 0")
    q = cf.convergent_dens
    if n >= q[-1]:
        raise ValueTooLargeForDepth(
            f"n = {n} >= q_{cf.depth} = {q[-1]}; the stored prefix cannot represent it"
        )
    digits = [0] * cf.depth
    rest = n
    for k in range(cf.depth - 1, -1, -1):
        if rest >= q[k]:
            digits[k], rest = divmod(rest, q[k])
    rep = OstrowskiRep(cf, _strip(digits))
    assert validate(cf, rep.digits), (n, rep.digits)
    return rep


def decode(cf: ContinuedFraction, rep) -> int:
    digits = rep.digits if isinstance(rep, OstrowskiRep) else rep
    report = validate(cf, digits)
    if not report:
        index, reason = report.violations[0]
        raise InvalidDigits(index, reason)
    return sum(b * q for b, q in zip(digits, cf.convergent_dens))


def top_index(rep: OstrowskiRep) -> Optional[int]:
    return len(rep.digits) - 1 if rep.digits else None


def digit(rep: OstrowskiRep, k: int) -> int:
    return rep.digits[k] if 0 <= k < len(rep.digits) else 0


def k_geq(rep: OstrowskiRep, M: int) -> Optional[int]:
    """Lowest index k >= M with b_k > 0, or None."""
    for k in range(max(M, 0), len(rep.digits)):
        if rep.digits[k]:
            return k
    return None


def k0(rep: OstrowskiRep) -> int:
    k = k_geq(rep, 0)
    if k is None:
        raise ZeroHasNoDigits()
    return k


def low_part(rep: OstrowskiRep, M: int) -> int:
    """n^{[<=M]}: the digits with index at most M."""
    return sum(b * q for b, q in zip(rep.digits[: max(M + 1, 0)], rep.cf.convergent_dens))


def high_part(rep: OstrowskiRep, M: int) -> int:
    """n^{[>=M]}: the digits with index at least M."""
    q = rep.cf.convergent_dens
    return sum(rep.digits[k] * q[k] for k in range(max(M, 0), len(rep.digits)))
