"""Exact arithmetic on Z + Z*alpha for an irrational slope given by a quotient prefix.

alpha = [0; a_1, a_2, ..., a_K] is known only through its first K partial
quotients.  Everything here is integer arithmetic; a comparison that the
prefix cannot settle raises :class:`InsufficientDepth` instead of guessing.

Signs of forms ``u + v*alpha`` are decided with the convergent bracket: for
any depth J the tail x = [a_{J+1}; ...] exceeds 1, so alpha lies strictly
between p_J/q_J and (p_J + p_{J-1})/(q_J + q_{J-1}).  Those two fractions are
Farey neighbours, hence every form with |v| < 2*q_J + q_{J-1} is decided at
depth J.  The smallest such J is used to keep the integers small.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass
from math import gcd

from . import kernels
from .errors import (
    AlphaSpecError,
    EmptyQuotients,
    IndexOutOfRange,
    InsufficientDepth,
    InvalidA,
    NonPositiveQuotient,
)

__all__ = [
    "ContinuedFraction",
    "LinearForm",
    "Side",
    "PRESETS",
    "new_cf",
    "parse_alpha",
    "compare_rational",
    "lf_sign",
    "lf_compare",
    "delta",
    "floor_mul",
    "frac_mul",
    "dist_nearest",
    "side_abs",
    "semiconvergent_den",
]


class Side(enum.Enum):
    """Direction of the one-sided distance: Left is {xi}, Right is {-xi}."""

    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class ContinuedFraction:
    """A finite prefix a_1..a_K of the expansion of some irrational alpha in (0, 1)."""

    __slots__ = ("partial_quotients", "convergent_nums", "convergent_dens", "_thresholds")

    def __init__(self, quotients):
        quotients = tuple(quotients)
        if not quotients:
            raise EmptyQuotients()
        for k, a in enumerate(quotients, start=1):
            if isinstance(a, bool) or not isinstance(a, int) or a < 1:
                raise NonPositiveQuotient(k, a)
        p = [0, 1]
        q = [1, quotients[0]]
        for a in quotients[1:]:
            p.append(a * p[-1] + p[-2])
            q.append(a * q[-1] + q[-2])
        self.partial_quotients = quotients
        self.convergent_nums = tuple(p)
        self.convergent_dens = tuple(q)
        # _thresholds[J-1] = 2 q_J + q_{J-1}: forms with |v| below it are decided at depth J
        self._thresholds = tuple(2 * q[j] + q[j - 1] for j in range(1, len(q)))

    def __setattr__(self, name, value):
        if hasattr(self, "_thresholds"):
            raise AttributeError("ContinuedFraction is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self) -> str:
        return f"ContinuedFraction({list(self.partial_quotients)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContinuedFraction):
            return NotImplemented
        return self.partial_quotients == other.partial_quotients

    def __hash__(self) -> int:
        return hash(self.partial_quotients)

    @property
    def depth(self) -> int:
        """K, the number of stored partial quotients."""
        return len(self.partial_quotients)

    def a(self, k: int) -> int:
        """Partial quotient a_k for 1 <= k <= K."""
        if not 1 <= k <= self.depth:
            raise IndexOutOfRange(f"a_{k} is outside the stored prefix a_1..a_{self.depth}")
        return self.partial_quotients[k - 1]

    def p(self, k: int) -> int:
        if not 0 <= k <= self.depth:
            raise IndexOutOfRange(f"p_{k} is outside p_0..p_{self.depth}")
        return self.convergent_nums[k]

    def q(self, k: int) -> int:
        if not 0 <= k <= self.depth:
            raise IndexOutOfRange(f"q_{k} is outside q_0..q_{self.depth}")
        return self.convergent_dens[k]

    @property
    def below_half(self) -> bool:
        """alpha < 1/2, equivalently a_1 >= 2."""
        return self.partial_quotients[0] >= 2

    @property
    def low_index(self) -> int:
        """Smallest index whose parity lemmas apply: 1 if alpha < 1/2, else 2."""
        return 1 if self.below_half else 2

    def bracket(self, vbound: int) -> tuple[int, int, int, int]:
        """(p_J, q_J, p_{J-1}, q_{J-1}) for the shallowest J deciding forms with |v| <= vbound."""
        j = bisect_right(self._thresholds, vbound) + 1
        if j > self.depth:
            j = self.depth
        P, Q = self.convergent_nums, self.convergent_dens
        return P[j], Q[j], P[j - 1], Q[j - 1]

    def decisive_bound(self) -> int:
        """Every form with |v| below this value has a decidable sign."""
        return self._thresholds[-1]


def new_cf(quotients) -> ContinuedFraction:
    return ContinuedFraction(quotients)


PRESETS = {
    "golden": (1,) * 64,
    "sqrt2m1": (2,) * 64,
    "pi4": (1, 3, 1, 1, 1, 15, 2, 72),
}


def parse_alpha(spec: str) -> ContinuedFraction:
    """Parse ``golden | sqrt2m1 | pi4 | cf:a1,a2,...,aK``."""
    spec = spec.strip()
    if spec in PRESETS:
        return ContinuedFraction(PRESETS[spec])
    if not spec.startswith("cf:"):
        raise AlphaSpecError(spec, "expected golden, sqrt2m1, pi4 or cf:a1,a2,...")
    body = spec[3:]
    if not body:
        raise AlphaSpecError(spec, "empty quotient list")
    quotients = []
    for k, token in enumerate(body.split(","), start=1):
        token = token.strip()
        if not token.isdigit():
            raise AlphaSpecError(token, f"a_{k} is not a decimal integer")
        value = int(token)
        if value < 1:
            raise NonPositiveQuotient(k, value)
        quotients.append(value)
    return ContinuedFraction(quotients)


@dataclass(frozen=True, slots=True)
class LinearForm:
    """The exact number (const_part + alpha_coeff * alpha) / denominator, kept normalized."""

    const_part: int
    alpha_coeff: int = 0
    denominator: int = 1

    def __post_init__(self):
        u, v, w = self.const_part, self.alpha_coeff, self.denominator
        if w == 0:
            raise ZeroDivisionError("LinearForm denominator must be nonzero")
        if w < 0:
            u, v, w = -u, -v, -w
        g = gcd(gcd(u, v), w)
        if g > 1:
            u, v, w = u // g, v // g, w // g
        if u == 0 and v == 0:
            w = 1
        object.__setattr__(self, "const_part", u)
        object.__setattr__(self, "alpha_coeff", v)
        object.__setattr__(self, "denominator", w)

    @classmethod
    def rational(cls, num: int, den: int = 1) -> "LinearForm":
        return cls(num, 0, den)

    @property
    def is_zero(self) -> bool:
        return self.const_part == 0 and self.alpha_coeff == 0

    def __add__(self, other):
        if isinstance(other, int):
            other = LinearForm(other)
        if not isinstance(other, LinearForm):
            return NotImplemented
        w1, w2 = self.denominator, other.denominator
        return LinearForm(
            self.const_part * w2 + other.const_part * w1,
            self.alpha_coeff * w2 + other.alpha_coeff * w1,
            w1 * w2,
        )

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(-self.const_part, -self.alpha_coeff, self.denominator)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LinearForm(other)
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LinearForm(self.const_part * k, self.alpha_coeff * k, self.denominator)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LinearForm(self.const_part, self.alpha_coeff, self.denominator * k)

    def to_json(self) -> dict:
        return {"x_num": self.const_part, "x_alpha_coeff": self.alpha_coeff, "x_den": self.denominator}


def compare_rational(cf: ContinuedFraction, u: int, v: int) -> int:
    """Return -1 if alpha < u/v and +1 if alpha > u/v (never equal).

    Expands u/v into its continued fraction and compares it quotient by
    quotient with the stored prefix.  At odd depth a larger quotient means a
    smaller number; at even depth the opposite.
    """
    if v < 1:
        raise ValueError("compare_rational needs a positive denominator")
    if u <= 0:
        return 1
    if u >= v:
        return -1
    # 0 < u/v < 1: the rational is [0; r_1, r_2, ...]
    num, den = v, u  # the tail 1 / (u/v) at depth 1
    for depth, a in enumerate(cf.partial_quotients, start=1):
        r, rem = divmod(num, den)
        if r != a:
            bigger_alpha_tail = a > r
            # at even depth the value grows with the tail
            alpha_greater = bigger_alpha_tail == (depth % 2 == 0)
            return 1 if alpha_greater else -1
        if rem == 0:
            # u/v = p_depth/q_depth and alpha continues past it; sign of delta_depth is (-1)^depth
            return 1 if depth % 2 == 0 else -1
        num, den = den, rem
    raise InsufficientDepth(
        f"{u}/{v} agrees with all {cf.depth} stored partial quotients; supply more quotients"
    )


def lf_sign(cf: ContinuedFraction, x: LinearForm) -> int:
    """Exact sign (-1, 0, +1) of the form x."""
    u, v = x.const_part, x.alpha_coeff
    if v == 0:
        return (u > 0) - (u < 0)
    return kernels.lf_sign_raw(u, v, *cf.bracket(abs(v)))


def lf_compare(cf: ContinuedFraction, x: LinearForm, y: LinearForm) -> int:
    """Sign of x - y."""
    return lf_sign(cf, x - y)


def delta(cf: ContinuedFraction, k: int) -> LinearForm:
    """delta_k = q_k*alpha - p_k."""
    if not 0 <= k <= cf.depth:
        raise IndexOutOfRange(f"delta_{k} needs 0 <= k <= {cf.depth}")
    return LinearForm(-cf.convergent_nums[k], cf.convergent_dens[k])


def _floor(cf: ContinuedFraction, n: int) -> int:
    if n == 0:
        return 0
    if n < 0:
        return -_floor(cf, -n) - 1
    pK, qK = cf.convergent_nums[-1], cf.convergent_dens[-1]
    f = n * pK // qK
    while lf_sign(cf, LinearForm(-f, n)) < 0:
        f -= 1
    while lf_sign(cf, LinearForm(-(f + 1), n)) >= 0:
        f += 1
    return f


def floor_mul(cf: ContinuedFraction, n: int) -> int:
    """floor(n * alpha) for n >= 0."""
    if n < 0:
        raise ValueError("floor_mul needs n >= 0")
    return _floor(cf, n)


def frac_mul(cf: ContinuedFraction, n: int) -> LinearForm:
    """{n * alpha} as an exact form in [0, 1); n may be negative."""
    return LinearForm(-_floor(cf, n), n)


def dist_nearest(cf: ContinuedFraction, n: int) -> tuple[LinearForm, Side]:
    """(||n alpha||, side) where side is Left when {n alpha} < 1/2."""
    if n < 1:
        raise ValueError("dist_nearest needs n >= 1")
    fr = frac_mul(cf, n)
    if lf_sign(cf, fr * 2 - 1) < 0:
        return fr, Side.LEFT
    return 1 - fr, Side.RIGHT


def side_abs(cf: ContinuedFraction, n: int, side: Side) -> LinearForm:
    """One-sided distance |n alpha|_side: {n alpha} for Left, {-n alpha} for Right."""
    return frac_mul(cf, n if side is Side.LEFT else -n)


def semiconvergent_den(cf: ContinuedFraction, M: int, a: int) -> int:
    """q_{M-1} + a*q_M for 1 <= a <= a_{M+1} - 1."""
    if not 1 <= M <= cf.depth - 1:
        raise IndexOutOfRange(f"semi-convergent index M={M} needs 1 <= M <= {cf.depth - 1}")
    if not 1 <= a <= cf.a(M + 1) - 1:
        raise InvalidA(f"a={a} outside [1, a_{M + 1} - 1] = [1, {cf.a(M + 1) - 1}]")
    return cf.convergent_dens[M - 1] + a * cf.convergent_dens[M]
