# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled series kernels; same contracts as ``_pure``.

Exact rows keep every U-coefficient in ``L`` little-endian 64-bit limbs.
Slots are contiguous and no slot can exceed its bound, so a row update is a
single carry-propagating multi-limb addition over the occupied span.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.string cimport memcpy

import numpy as np

cdef double RESCALE_AT = 1e250
cdef double _LOG_RESCALE = np.log(RESCALE_AT)


cdef Py_ssize_t _max_degree(Py_ssize_t M, int t):
    # most factors usable with total weight <= M when each j appears t times
    cdef Py_ssize_t d = 0, used = 0, j = 1
    cdef int c
    while True:
        for c in range(t):
            if used + j > M:
                return d
            used += j
            d += 1
        j += 1


cdef inline void _add_limbs(uint64_t* dst, const uint64_t* src, Py_ssize_t n) noexcept nogil:
    cdef uint64_t carry = 0, a, r, r2
    cdef Py_ssize_t i
    for i in range(n):
        a = dst[i]
        r = a + src[i]
        r2 = r + carry
        carry = (r < a) | (r2 < r)
        dst[i] = r2


def shifted_rows(Py_ssize_t M, int t, Py_ssize_t coeff_bits):
    """U-coefficients of ``prod_{j<=M} (1 + U x^j)^t`` for x^0 .. x^M."""
    cdef Py_ssize_t L = coeff_bits // 64 + 1
    cdef Py_ssize_t D = _max_degree(M, t)
    cdef Py_ssize_t row = (D + 1) * L
    cdef uint64_t* buf = <uint64_t*>calloc((M + 1) * row, sizeof(uint64_t))
    cdef Py_ssize_t* deg = <Py_ssize_t*>malloc((M + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t j, m, s, ds, k
    cdef int rep
    cdef bint overflow = False
    if buf == NULL or deg == NULL:
        free(buf)
        free(deg)
        raise MemoryError(f"cannot allocate {(M + 1) * row * 8} bytes for exact rows")
    try:
        for m in range(M + 1):
            deg[m] = -1
        deg[0] = 0
        buf[0] = 1
        with nogil:
            for j in range(1, M + 1):
                for rep in range(t):
                    m = M
                    while m >= j:
                        s = m - j
                        ds = deg[s]
                        if ds >= D:
                            overflow = True
                            break
                        if ds >= 0:
                            _add_limbs(buf + m * row + L, buf + s * row, (ds + 1) * L)
                            if deg[m] < ds + 1:
                                deg[m] = ds + 1
                        m -= 1
                    if overflow:
                        break
                if overflow:
                    break
        if overflow:
            raise RuntimeError("U-degree exceeded its a priori bound")
        out = []
        for m in range(M + 1):
            coeffs = []
            for k in range(deg[m] + 1):
                raw = PyBytes_FromStringAndSize(<char*>(buf + m * row + k * L), L * 8)
                coeffs.append(int.from_bytes(raw, "little"))
            while coeffs and coeffs[len(coeffs) - 1] == 0:
                coeffs.pop()
            out.append(coeffs)
        return out
    finally:
        free(buf)
        free(deg)


def positive_eval(Py_ssize_t M, int t, double T):
    """``prod_{j<=M} (1 + T x^j / (1 - x^j))^t`` at T > 0, as (coeffs, log_scale)."""
    f_arr = np.zeros(M + 1)
    cdef double[::1] f = f_arr
    cdef double* old = <double*>malloc((M + 1) * sizeof(double))
    cdef double* R = <double*>malloc((M + 1) * sizeof(double))
    cdef double log_scale = 0.0, top
    cdef Py_ssize_t j, m
    cdef int rep
    if old == NULL or R == NULL:
        free(old)
        free(R)
        raise MemoryError()
    f[0] = 1.0
    try:
        with nogil:
            for j in range(1, M + 1):
                for rep in range(t):
                    memcpy(old, &f[0], (M + 1) * sizeof(double))
                    for m in range(j):
                        R[m] = 0.0
                    for m in range(j, M + 1):
                        R[m] = old[m - j] + R[m - j]
                        f[m] += T * R[m]
                top = 0.0
                for m in range(M + 1):
                    if f[m] > top:
                        top = f[m]
                if top > RESCALE_AT:
                    for m in range(M + 1):
                        f[m] /= RESCALE_AT
                    log_scale += _LOG_RESCALE
    finally:
        free(old)
        free(R)
    return f_arr, log_scale


def positive_poly(Py_ssize_t M, int t, Py_ssize_t degree):
    """Float T-coefficients of ``prod_{j<=M} (1 + T x^j / (1 - x^j))^t``, shape (M+1, degree+1)."""
    cdef Py_ssize_t W = degree + 1
    f_arr = np.zeros((M + 1, W))
    cdef double[:, ::1] f = f_arr
    cdef double* old = <double*>malloc((M + 1) * W * sizeof(double))
    cdef double* R = <double*>malloc((M + 1) * W * sizeof(double))
    cdef Py_ssize_t* deg = <Py_ssize_t*>malloc((M + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* rdeg = <Py_ssize_t*>malloc((M + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* odeg = <Py_ssize_t*>malloc((M + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t j, m, k, d
    cdef int rep
    cdef bint overflow = False
    if old == NULL or R == NULL or deg == NULL or rdeg == NULL or odeg == NULL:
        free(old); free(R); free(deg); free(rdeg); free(odeg)
        raise MemoryError()
    f[0, 0] = 1.0
    try:
        with nogil:
            for m in range(M + 1):
                deg[m] = -1
            deg[0] = 0
            for j in range(1, M + 1):
                for rep in range(t):
                    memcpy(old, &f[0, 0], (M + 1) * W * sizeof(double))
                    memcpy(odeg, deg, (M + 1) * sizeof(Py_ssize_t))
                    for m in range(j):
                        rdeg[m] = -1
                    for m in range(j, M + 1):
                        d = odeg[m - j]
                        if rdeg[m - j] > d:
                            d = rdeg[m - j]
                        rdeg[m] = d
                        for k in range(d + 1):
                            R[m * W + k] = 0.0
                            if k <= odeg[m - j]:
                                R[m * W + k] = old[(m - j) * W + k]
                            if k <= rdeg[m - j]:
                                R[m * W + k] += R[(m - j) * W + k]
                        if d + 1 >= W:
                            overflow = True
                            break
                        for k in range(d + 1):
                            f[m, k + 1] += R[m * W + k]
                        if deg[m] < d + 1:
                            deg[m] = d + 1
                    if overflow:
                        break
                if overflow:
                    break
    finally:
        free(old); free(R); free(deg); free(rdeg); free(odeg)
    if overflow:
        raise ValueError(f"T-degree bound {degree} too small")
    return f_arr


def colored_eval(Py_ssize_t M, int t):
    """Float coefficients of ``prod_{j<=M} (1 - x^j)^(-t)`` as (coeffs, log_scale)."""
    f_arr = np.zeros(M + 1)
    cdef double[::1] f = f_arr
    cdef double log_scale = 0.0, top
    cdef Py_ssize_t j, m
    cdef int rep
    f[0] = 1.0
    with nogil:
        for j in range(1, M + 1):
            for rep in range(t):
                for m in range(j, M + 1):
                    f[m] += f[m - j]
            top = 0.0
            for m in range(M + 1):
                if f[m] > top:
                    top = f[m]
            if top > RESCALE_AT:
                for m in range(M + 1):
                    f[m] /= RESCALE_AT
                log_scale += _LOG_RESCALE
    return f_arr, log_scale
