# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and results as ``_pykernels``.

Inputs that fit in 60 bits run on 128-bit C integers.  Anything larger is
handed to the pure-Python implementation, so results never depend on which
module was imported.
"""

import numpy as np
cimport numpy as cnp

from . import _pykernels
from .errors import InsufficientDepth

cnp.import_array()

__all__ = ["IMPLEMENTATION", "lf_sign_raw", "floor_table", "scan_weights", "count_raw", "oracle_counts"]

IMPLEMENTATION = "cython"

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef long long LIMIT = 1LL << 60


cdef inline bint _small(object x):
    return -LIMIT < x < LIMIT


cdef int _sign_c(long long u, long long v, long long p, long long q,
                 long long p1, long long q1, bint *ok) noexcept nogil:
    cdef i128 A = <i128>u * q + <i128>v * p
    cdef i128 B = <i128>u * q1 + <i128>v * p1
    cdef i128 s
    ok[0] = True
    if A == 0:
        return (B > 0) - (B < 0)
    s = A + B
    if s == 0 or ((s > 0) == (A > 0)):
        return 1 if A > 0 else -1
    ok[0] = False
    return 0


cdef int _sign_or_raise(long long u, long long v, long long p, long long q,
                        long long p1, long long q1) except? -2:
    cdef bint ok
    cdef int s = _sign_c(u, v, p, q, p1, q1, &ok)
    if not ok:
        raise InsufficientDepth(
            f"sign of {u} + {v}*alpha is not decided by the stored quotients; supply more"
        )
    return s


def lf_sign_raw(u, v, p, q, p1, q1):
    if _small(u) and _small(v) and _small(p) and _small(q) and _small(p1) and _small(q1):
        return _sign_or_raise(u, v, p, q, p1, q1)
    return _pykernels.lf_sign_raw(u, v, p, q, p1, q1)


def floor_table(p, q, p1, q1, n_max):
    if not (_small(p + p1) and _small(q + q1) and _small(n_max)):
        return _pykernels.floor_table(p, q, p1, q1, n_max)
    cdef long long pa = p, qa = q, pb = p + p1, qb = q + q1, t
    if <i128>pa * qb > <i128>pb * qa:
        t = pa; pa = pb; pb = t
        t = qa; qa = qb; qb = t
    cdef long long n = n_max, k
    floors = np.zeros(n + 1, dtype=np.int64)
    undecided = np.zeros(n + 1, dtype=np.bool_)
    cdef long long[::1] fl = floors
    cdef cnp.npy_bool[::1] und = undecided
    cdef i128 kpa = 0, kpb = 0, lo, hi
    with nogil:
        for k in range(1, n + 1):
            kpa += pa
            kpb += pb
            # floor division on nonnegative values
            lo = kpa // qa
            hi = (kpb + qb - 1) // qb - 1
            fl[k] = <long long>lo
            if lo != hi:
                und[k] = True
    return floors, undecided


def scan_weights(floors, long long m, long long n, long long i_max, long long stop_after=0,
                 valid=None):
    cdef long long[::1] fl = np.ascontiguousarray(floors, dtype=np.int64)
    cdef long long L = fl.shape[0]
    c_arr = np.zeros(L + 1, dtype=np.int64)
    cdef long long[::1] c = c_arr
    cdef cnp.npy_bool[::1] ok
    cdef bint use_mask = valid is not None
    if use_mask:
        ok = np.ascontiguousarray(valid, dtype=np.bool_)
    cdef long long k, i, t, base, found = 0
    for k in range(L):
        c[k + 1] = c[k] + fl[k]
    # every weight lies in [m*floor(n alpha), m*floor(n alpha) + m]
    base = m * fl[n]
    seen_arr = np.zeros(m + 1, dtype=np.bool_)
    cdef cnp.npy_bool[::1] seen = seen_arr
    witnesses = {}
    for i in range(1, i_max + 1):
        if use_mask and not ok[i]:
            continue
        t = (c[i + n + m] - c[i + n]) - (c[i + m] - c[i])
        if t < base or t > base + m:
            raise ValueError(f"weight {t} at i={i} outside [{base}, {base + m}]: corrupt floor table")
        if not seen[t - base]:
            seen[t - base] = True
            witnesses[t] = i
            found += 1
            if stop_after and found >= stop_after:
                break
    return witnesses


cdef class _Points:
    cdef long long[::1] U
    cdef long long[::1] V
    cdef long long W, p, q, p1, q1
    cdef Py_ssize_t m

    cdef int sign(self, long long u, long long v) except? -2:
        return _sign_or_raise(u, v, self.p, self.q, self.p1, self.q1)

    cdef Py_ssize_t lower_bound(self, long long tu, long long tv) except -1:
        cdef Py_ssize_t lo = 0, hi = self.m, mid
        while lo < hi:
            mid = (lo + hi) // 2
            if self.sign(self.U[mid] - tu, self.V[mid] - tv) < 0:
                lo = mid + 1
            else:
                hi = mid
        return lo

    cdef int contains(self, long long tu, long long tv) except -1:
        cdef Py_ssize_t k = self.lower_bound(tu, tv)
        return k < self.m and self.U[k] == tu and self.V[k] == tv

    cdef Py_ssize_t count(self, long long xu, long long xv, long long du, long long dv) except -1:
        cdef long long eu = xu + du, ev = xv + dv
        cdef Py_ssize_t lx = self.lower_bound(xu, xv)
        if self.sign(eu - self.W, ev) < 0:
            return self.lower_bound(eu, ev) - lx
        return self.m - lx + self.lower_bound(eu - self.W, ev)


cdef _Points _make_points(U, V, W, br):
    cdef _Points pts = _Points()
    pts.U = np.asarray(U, dtype=np.int64)
    pts.V = np.asarray(V, dtype=np.int64)
    pts.m = len(U)
    pts.W = W
    pts.p, pts.q, pts.p1, pts.q1 = br
    return pts


cdef bint _fits(U, V, W, extra, br):
    if not _small(W):
        return False
    for x in extra:
        if not _small(x):
            return False
    for x in br:
        if not _small(x):
            return False
    for x in U:
        if not _small(x):
            return False
    for x in V:
        if not _small(x):
            return False
    return True


def count_raw(U, V, W, xu, xv, du, dv, br):
    if not _fits(U, V, W, (xu, xv, du, dv), br):
        return _pykernels.count_raw(U, V, W, xu, xv, du, dv, br)
    cdef _Points pts = _make_points(U, V, W, br)
    return pts.count(xu, xv, du, dv)


def oracle_counts(U, V, W, du, dv, br):
    if not _fits(U, V, W, (du, dv), br):
        return _pykernels.oracle_counts(U, V, W, du, dv, br)
    cdef _Points pts = _make_points(U, V, W, br)
    cdef long long d_u = du, d_v = dv, eu, ev, xu, xv
    cdef Py_ssize_t i, j, c, right
    seen = {}
    for i in range(pts.m):
        c = pts.count(pts.U[i], pts.V[i], d_u, d_v)
        eu = pts.U[i] + d_u
        ev = pts.V[i] + d_v
        if pts.sign(eu - pts.W, ev) >= 0:
            eu -= pts.W
        right = c - 1 + pts.contains(eu, ev)
        if c not in seen:
            seen[c] = (0, i, False)
        if right not in seen:
            seen[right] = (0, i, True)
    for j in range(pts.m):
        xu = pts.U[j] - d_u
        xv = pts.V[j] - d_v
        if pts.sign(xu, xv) < 0:
            xu += pts.W
        c = pts.count(xu, xv, d_u, d_v)
        right = c - pts.contains(xu, xv) + 1
        if c not in seen:
            seen[c] = (1, j, False)
        if right not in seen:
            seen[right] = (1, j, True)
    return seen
