"""Pure NumPy reference kernels.

Algorithmically identical to the compiled backend: the error function is
evaluated piecewise (a cancellation-free power series on |x| <= 3, a
Lentz continued fraction for the complement beyond) with an absolute
error budget of 1e-10, and the Fourier transform is an iterative
radix-2 decimation-in-time pass over a bit-reversed copy.  Power-of-two
lengths only; callers pad.
"""

import math

import numpy as np

from ..errors import ParameterError

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
_SQRT_PI = math.sqrt(math.pi)

# |x| below this uses the series, above it the continued fraction.
_ERF_SPLIT = 3.0


def _erf_series(x):
    """erf on 0 <= x <= 3 via the scaled lower-incomplete-gamma series.

    erf(x) = (2/sqrt(pi)) * x * exp(-x^2) * sum_n (2x^2)^n / (2n+1)!!

    All terms are positive, so there is no cancellation; the truncation
    point leaves the sum correct to ~1e-16 relative.
    """
    if x == 0.0:
        return 0.0
    tx = 2.0 * x * x
    term = 1.0
    total = 1.0
    n = 0
    while n < 200:
        n += 1
        term *= tx / (2.0 * n + 1.0)
        total += term
        if term < total * 1e-17:
            break
    return _TWO_OVER_SQRT_PI * x * math.exp(-x * x) * total


def _erfc_cf(x):
    """erfc on x > 3 via the Laplace continued fraction (modified Lentz).

    sqrt(pi) * exp(x^2) * erfc(x) = 1 / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    """
    tiny = 1e-300
    f = x
    c = x
    d = 0.0
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
        if abs(delta - 1.0) < 1e-17:
            break
    return math.exp(-x * x) / (_SQRT_PI * f)


def erf(x):
    """Gauss error function of a real scalar; odd by construction."""
    x = float(x)
    ax = abs(x)
    if ax <= _ERF_SPLIT:
        r = _erf_series(ax)
    else:
        r = 1.0 - _erfc_cf(ax)
    return -r if x < 0.0 else r


def erf_array(x):
    """Elementwise :func:`erf` over a float64 array.

    The series half is vectorized; the continued-fraction tail (rare in
    practice, the group-delay arguments live mostly inside |x| <= 3) is
    evaluated per element.
    """
    x = np.asarray(x, dtype=np.float64)
    ax = np.abs(x)
    out = np.empty_like(ax)

    small = ax <= _ERF_SPLIT
    if small.any():
        xs = ax[small]
        tx = 2.0 * xs * xs
        term = np.ones_like(xs)
        total = np.ones_like(xs)
        n = 0
        while n < 200:
            n += 1
            term *= tx / (2.0 * n + 1.0)
            total += term
            if not (term > total * 1e-17).any():
                break
        out[small] = _TWO_OVER_SQRT_PI * xs * np.exp(-xs * xs) * total

    if not small.all():
        large = ~small
        out[large] = [1.0 - _erfc_cf(v) for v in ax[large]]

    return np.copysign(out, x)


def _check_fft_length(n):
    if n < 1 or (n & (n - 1)) != 0:
        raise ParameterError(f"transform length must be a power of two, got {n}")


def _bit_reversal(n):
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    for b in range(bits):
        rev = (rev << 1) | ((idx >> b) & 1)
    return rev


_twiddle_cache = {}


def _twiddles(size, inverse):
    key = (size, inverse)
    tw = _twiddle_cache.get(key)
    if tw is None:
        sign = 2j if inverse else -2j
        tw = np.exp(sign * np.pi * np.arange(size // 2) / size)
        tw.flags.writeable = False
        _twiddle_cache[key] = tw
    return tw


def _fft_radix2(a, inverse):
    n = a.size
    _check_fft_length(n)
    out = np.ascontiguousarray(a, dtype=np.complex128)[_bit_reversal(n)]
    size = 2
    while size <= n:
        half = size // 2
        tw = _twiddles(size, inverse)
        view = out.reshape(-1, size)
        odd = view[:, half:] * tw
        even = view[:, :half].copy()
        view[:, :half] = even + odd
        view[:, half:] = even - odd
        size *= 2
    if inverse:
        out /= n
    return out


def fft(a):
    """Forward DFT of a power-of-two-length complex sequence."""
    return _fft_radix2(np.asarray(a), inverse=False)


def ifft(a):
    """Inverse DFT (scaled by 1/n) of a power-of-two-length sequence."""
    return _fft_radix2(np.asarray(a), inverse=True)
