# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: piecewise error function and radix-2 transform.

Same algorithms as ``nlfmkit.kernels.reference``; this module just runs
the inner loops in C.  See the reference module for the numerics notes.
"""

from libc.math cimport cos, exp, fabs, sin, sqrt

import numpy as np

from ..errors import ParameterError

cdef double TWO_OVER_SQRT_PI = 1.1283791670955126
cdef double SQRT_PI = 1.7724538509055159
cdef double ERF_SPLIT = 3.0


cdef double _erf_series(double x) noexcept:
    cdef double tx, term, total
    cdef int n
    if x == 0.0:
        return 0.0
    tx = 2.0 * x * x
    term = 1.0
    total = 1.0
    for n in range(1, 200):
        term *= tx / (2.0 * n + 1.0)
        total += term
        if term < total * 1e-17:
            break
    return TWO_OVER_SQRT_PI * x * exp(-x * x) * total


cdef double _erfc_cf(double x) noexcept:
    cdef double tiny = 1e-300
    cdef double f = x
    cdef double c = x
    cdef double d = 0.0
    cdef double a, delta
    cdef int n
    for n in range(1, 300):
        a = 0.5 * n
        d = x + a * d
        if d == 0.0:
            d = tiny
        c = x + a / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if fabs(delta - 1.0) < 1e-17:
            break
    return exp(-x * x) / (SQRT_PI * f)


cdef double _erf_scalar(double x) noexcept:
    cdef double ax = fabs(x)
    cdef double r
    if ax <= ERF_SPLIT:
        r = _erf_series(ax)
    else:
        r = 1.0 - _erfc_cf(ax)
    return -r if x < 0.0 else r


def erf(x):
    """Gauss error function of a real scalar; odd by construction."""
    return _erf_scalar(float(x))


def erf_array(x):
    """Elementwise :func:`erf` over a float64 array."""
    arr = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(arr)
    cdef double[::1] src = arr.reshape(-1)
    cdef double[::1] dst = out.reshape(-1)
    cdef Py_ssize_t i, n = src.shape[0]
    for i in range(n):
        dst[i] = _erf_scalar(src[i])
    return out


cdef _fft_radix2(a, bint inverse):
    arr = np.array(a, dtype=np.complex128, copy=True, order="C")
    cdef Py_ssize_t n = arr.shape[0]
    if n < 1 or (n & (n - 1)) != 0:
        raise ParameterError(f"transform length must be a power of two, got {n}")

    cdef double complex[::1] buf = arr
    cdef double complex[::1] tw = np.empty(n // 2 if n > 1 else 1, dtype=np.complex128)
    cdef double sign = 1.0 if inverse else -1.0
    cdef double angle, step_angle
    cdef Py_ssize_t i, j, k, size, half, step, start, rev
    cdef double complex t, u
    cdef double inv_n

    step_angle = sign * 2.0 * 3.141592653589793238462643383279502884 / n
    for k in range(n // 2):
        angle = step_angle * k
        tw[k] = cos(angle) + 1j * sin(angle)

    # bit-reversal permutation (in-place swap)
    j = 0
    for i in range(1, n):
        k = n >> 1
        while j & k:
            j ^= k
            k >>= 1
        j |= k
        if i < j:
            t = buf[i]
            buf[i] = buf[j]
            buf[j] = t

    size = 2
    while size <= n:
        half = size >> 1
        step = n // size
        for start in range(0, n, size):
            for j in range(half):
                t = tw[j * step] * buf[start + half + j]
                u = buf[start + j]
                buf[start + j] = u + t
                buf[start + half + j] = u - t
        size <<= 1

    if inverse:
        inv_n = 1.0 / n
        for i in range(n):
            buf[i] = buf[i] * inv_n
    return arr


def fft(a):
    """Forward DFT of a power-of-two-length complex sequence."""
    return _fft_radix2(a, False)


def ifft(a):
    """Inverse DFT (scaled by 1/n) of a power-of-two-length sequence."""
    return _fft_radix2(a, True)
