"""Pure-Python hot kernels; the compiled ``_kernels`` module mirrors this API.

All arguments are plain integers.  A bracket ``(p, q, p1, q1)`` stands for
p_J/q_J and p_{J-1}/q_{J-1}; alpha lies strictly between p/q and
(p + p1)/(q + q1).  Torus points are ``(U[i] + V[i]*alpha) / W`` with a
common denominator W, listed in increasing order.
"""

import numpy as np

from .errors import InsufficientDepth

__all__ = ["IMPLEMENTATION", "lf_sign_raw", "floor_table", "scan_weights", "count_raw", "oracle_counts"]

IMPLEMENTATION = "python"


def lf_sign_raw(u, v, p, q, p1, q1):
    """Sign of u + v*alpha from the bracket (p, q, p1, q1)."""
    # u + v*alpha has the sign of A*x + B over the tail x in (1, inf)
    A = u * q + v * p
    B = u * q1 + v * p1
    if A == 0:
        return (B > 0) - (B < 0)
    s_inf = 1 if A > 0 else -1
    s_one = A + B
    if s_one == 0 or (s_one > 0) == (s_inf > 0):
        return s_inf
    raise InsufficientDepth(
        f"sign of {u} + {v}*alpha is not decided by the stored quotients; supply more"
    )


def floor_table(p, q, p1, q1, n_max):
    """floor(k*alpha) for 0 <= k <= n_max, plus a mask of undecidable k."""
    floors = np.zeros(n_max + 1, dtype=np.int64)
    undecided = np.zeros(n_max + 1, dtype=np.bool_)
    pa, qa = p, q
    pb, qb = p + p1, q + q1
    if pa * qb > pb * qa:
        pa, qa, pb, qb = pb, qb, pa, qa
    # k*alpha lies in the open interval (k*pa/qa, k*pb/qb)
    kpa = kpb = 0
    for k in range(1, n_max + 1):
        kpa += pa
        kpb += pb
        lo = kpa // qa
        hi = -((-kpb) // qb) - 1
        if lo == hi:
            floors[k] = lo
        else:
            floors[k] = lo
            undecided[k] = True
    return floors, undecided


def scan_weights(floors, m, n, i_max, stop_after=0, valid=None):
    """Distinct rectangle weights T(i,m,n), 1 <= i <= i_max, with first witnesses.

    T(i,m,n) = sum_{l<m} floor((i+l+n)alpha) - floor((i+l)alpha), evaluated
    through prefix sums of the floor table.  Windows with ``valid[i]`` false
    are skipped.  Stops once ``stop_after`` distinct weights are seen (0
    disables the early exit).
    """
    c = np.zeros(len(floors) + 1, dtype=np.int64)
    np.cumsum(floors, out=c[1:])
    i = np.arange(1, i_max + 1)
    if valid is not None:
        i = i[np.asarray(valid, dtype=bool)[1 : i_max + 1]]
    t = (c[i + n + m] - c[i + n]) - (c[i + m] - c[i])
    values, first = np.unique(t, return_index=True)
    witnesses = {}
    for pos, value in sorted(zip(first.tolist(), values.tolist())):
        witnesses[value] = int(i[pos])
        if stop_after and len(witnesses) >= stop_after:
            break
    return witnesses


def _less(U, V, k, tu, tv, br):
    return lf_sign_raw(U[k] - tu, V[k] - tv, *br) < 0


def _lower_bound(U, V, tu, tv, br):
    lo, hi = 0, len(U)
    while lo < hi:
        mid = (lo + hi) // 2
        if _less(U, V, mid, tu, tv, br):
            lo = mid + 1
        else:
            hi = mid
    return lo


def _contains(U, V, tu, tv, br):
    k = _lower_bound(U, V, tu, tv, br)
    return k < len(U) and U[k] == tu and V[k] == tv


def count_raw(U, V, W, xu, xv, du, dv, br):
    """Number of points in [x, x+d) taken modulo 1; requires 0 <= x < 1, 0 < d < 1."""
    eu, ev = xu + du, xv + dv
    lx = _lower_bound(U, V, xu, xv, br)
    if lf_sign_raw(eu - W, ev, *br) < 0:
        return _lower_bound(U, V, eu, ev, br) - lx
    return len(U) - lx + _lower_bound(U, V, eu - W, ev, br)


def oracle_counts(U, V, W, du, dv, br):
    """Every count attained by intervals [x, x+d) as x runs over the torus.

    Counts only change at the critical left endpoints x = point or
    x = point - d (mod 1).  For each one the count at x and the right limit
    at x+ are recorded.  Returns {count: (kind, index, right_limit)} keeping
    the first occurrence; kind 0 means x = point[index], kind 1 means
    x = point[index] - d.
    """
    seen = {}
    m = len(U)
    for i in range(m):
        c = count_raw(U, V, W, U[i], V[i], du, dv, br)
        eu, ev = U[i] + du, V[i] + dv
        if lf_sign_raw(eu - W, ev, *br) >= 0:
            eu -= W
        right = c - 1 + _contains(U, V, eu, ev, br)
        seen.setdefault(c, (0, i, False))
        seen.setdefault(right, (0, i, True))
    for j in range(m):
        xu, xv = U[j] - du, V[j] - dv
        if lf_sign_raw(xu, xv, *br) < 0:
            xu += W
        c = count_raw(U, V, W, xu, xv, du, dv, br)
        right = c - _contains(U, V, xu, xv, br) + 1
        seen.setdefault(c, (1, j, False))
        seen.setdefault(right, (1, j, True))
    return seen
