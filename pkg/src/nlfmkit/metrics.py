"""Autocorrelation, spectrum, and sidelobe metrics.

The matched-filter response of a pulse is its autocorrelation; targets
near a strong return hide under its sidelobes, so the figures of merit
are the peak sidelobe level (PSL), the mainlobe width at -4 dB (MLW),
and the mainlobe width normalized by the linear-FM reference (NMLW).

The correlation is computed at all 2N-1 lags by zero-padded fast
transform (the in-house radix-2 kernel; padding to the next power of
two at or above 2N-1 makes the circular product linear).  An optional
oversample factor zero-pads the spectrum before the inverse transform,
which interpolates the lag curve; at 500 MHz the raw lag spacing of
2 ns is coarse against a ~10 ns mainlobe, so metrics default to the
refined curve while the raw one stays available.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateMainlobeError, ParameterError
from .synthesis import Waveform

# Magnitudes below this are floored to keep the dB curve finite.
DB_FLOOR_MAGNITUDE = 1e-10
DB_FLOOR = -200.0


def _next_pow2(n):
    p = 1
    while p < n:
        p *= 2
    return p


def _check_pow2(name, value):
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    if value < 1 or (value & (value - 1)) != 0:
        raise ParameterError(f"{name} must be a power of two, got {value}")
    return int(value)


def to_db(magnitude):
    """20 log10 of a normalized magnitude, floored at -200 dB."""
    return 20.0 * np.log10(np.maximum(np.asarray(magnitude, float), DB_FLOOR_MAGNITUDE))


@dataclass(frozen=True)
class AcfCurve:
    """Normalized autocorrelation magnitude on a symmetric lag grid."""

    lags: np.ndarray
    magnitude: np.ndarray

    def __post_init__(self):
        lags = np.asarray(self.lags, dtype=np.float64)
        mag = np.asarray(self.magnitude, dtype=np.float64)
        if lags.ndim != 1 or lags.shape != mag.shape or lags.size % 2 == 0:
            raise ParameterError("curve needs matching odd-length lag/magnitude arrays")
        if mag[lags.size // 2] != 1.0:
            raise ParameterError("curve must be normalized to 1 at lag zero")
        object.__setattr__(self, "lags", lags)
        object.__setattr__(self, "magnitude", mag)

    @property
    def center(self) -> int:
        return self.lags.size // 2

    @property
    def db(self) -> np.ndarray:
        return to_db(self.magnitude)

    def __len__(self):
        return self.lags.size


@dataclass(frozen=True)
class Spectrum:
    """Two-sided power spectrum, zero-frequency centered."""

    frequencies: np.ndarray
    power: np.ndarray


@dataclass(frozen=True)
class AcfReport:
    """Scalar sidelobe metrics plus the curve they were read from.

    ``psl_db`` is None for curves with no sidelobes at all; ``nmlw`` is
    None when no reference mainlobe width was supplied.
    """

    psl_db: float | None
    mlw_seconds: float
    nmlw: float | None
    curve: AcfCurve
    label: str = ""

    def __post_init__(self):
        if self.psl_db is not None and self.psl_db >= 0.0:
            raise ParameterError("a sidelobe peak must sit below the mainlobe")
        if self.mlw_seconds <= 0.0:
            raise ParameterError("mainlobe width must be positive")
        if self.nmlw is not None and self.nmlw <= 0.0:
            raise ParameterError("normalized mainlobe width must be positive")


def autocorrelation(waveform: Waveform, oversample: int = 1) -> AcfCurve:
    """Full linear autocorrelation magnitude, normalized to 1 at lag 0.

    ``oversample`` (a power of two) interpolates the curve to a lag
    spacing of 1/(oversample*fs) by zero-padding the spectrum before the
    inverse transform; 1 returns the raw 2N-1 integer lags.
    """
    oversample = _check_pow2("oversample", oversample)
    x = waveform.samples
    n = x.size
    nfft = _next_pow2(2 * n - 1)

    padded = np.zeros(nfft, dtype=np.complex128)
    padded[:n] = x
    power = kernels.fft(padded)
    power = (power * power.conj()).real

    if oversample == 1:
        r = kernels.ifft(power)
        length = nfft
    else:
        length = oversample * nfft
        spread = np.zeros(length, dtype=np.float64)
        if nfft == 1:
            spread[0] = power[0]
        else:
            half = nfft // 2
            spread[:half] = power[:half]
            spread[half] = 0.5 * power[half]
            spread[length - half] = 0.5 * power[half]
            spread[length - nfft + half + 1:] = power[half + 1:]
        r = kernels.ifft(spread.astype(np.complex128))

    k = (n - 1) * oversample
    full = np.concatenate((r[length - k:], r[: k + 1])) if k else r[:1]
    peak = abs(r[0])
    magnitude = np.abs(full) / peak
    lag_step = 1.0 / (waveform.sample_rate * oversample)
    lags = np.arange(-k, k + 1) * lag_step
    return AcfCurve(lags=lags, magnitude=magnitude)


def psd(waveform: Waveform, nfft: int) -> Spectrum:
    """|DFT|^2 of the zero-padded pulse, zero-frequency centered.

    ``nfft`` must be a power of two (the transform is radix-2) at or
    above the sample count.
    """
    nfft = _check_pow2("nfft", nfft)
    n = waveform.samples.size
    if nfft < n:
        raise ParameterError(f"nfft = {nfft} is below the sample count {n}")
    padded = np.zeros(nfft, dtype=np.complex128)
    padded[:n] = waveform.samples
    spec = kernels.fft(padded)
    power = (spec * spec.conj()).real
    half = nfft // 2
    power = np.concatenate((power[half:], power[:half]))
    frequencies = (np.arange(nfft) - half) * (waveform.sample_rate / nfft)
    return Spectrum(frequencies=frequencies, power=power)


def _first_local_min(arm):
    """Index of the first strict local minimum along a curve arm.

    The arm starts at the mainlobe peak.  Plateaus do not qualify: the
    sample must sit strictly below both neighbors.
    """
    interior = (arm[1:-1] < arm[:-2]) & (arm[1:-1] < arm[2:])
    hits = np.flatnonzero(interior)
    return int(hits[0]) + 1 if hits.size else None


def psl(curve: AcfCurve) -> float | None:
    """Peak sidelobe level in dB, or None when there are no sidelobes.

    The mainlobe extends to the first strict local minimum on each side
    of lag zero (null-to-null convention); the PSL is the largest
    magnitude beyond.  Monotone-decaying curves (the rectangle pulse's
    triangle) have no sidelobes.
    """
    if len(curve) < 3:
        raise ParameterError("need at least 3 lags to search for sidelobes")
    mag = curve.magnitude
    c = curve.center
    right = _first_local_min(mag[c:])
    left = _first_local_min(mag[: c + 1][::-1])

    peaks = []
    if right is not None:
        peaks.append(np.max(mag[c + right:]))
    if left is not None:
        peaks.append(np.max(mag[: c - left + 1]))
    if not peaks:
        return None
    return float(to_db(max(peaks)))


def _crossing_lag(arm_db, arm_lags, level_db):
    below = (arm_db[:-1] >= level_db) & (arm_db[1:] < level_db)
    hits = np.flatnonzero(below)
    if not hits.size:
        raise DegenerateMainlobeError(
            f"curve never drops through {level_db} dB"
        )
    i = int(hits[0])
    frac = (arm_db[i] - level_db) / (arm_db[i] - arm_db[i + 1])
    return arm_lags[i] + frac * (arm_lags[i + 1] - arm_lags[i])


def mlw(curve: AcfCurve, level_db: float = -4.0) -> float:
    """Mainlobe width in seconds at the given (negative) dB level.

    The first crossing through the level on each side of lag zero is
    located on the sampled curve and refined by linear interpolation in
    dB between adjacent lags.
    """
    level_db = float(level_db)
    if not math.isfinite(level_db) or level_db >= 0.0:
        raise ParameterError(f"level_db must be negative, got {level_db}")
    db = curve.db
    lags = curve.lags
    c = curve.center
    right = _crossing_lag(db[c:], lags[c:], level_db)
    left = _crossing_lag(db[: c + 1][::-1], lags[: c + 1][::-1], level_db)
    return float(right - left)


def nmlw(nlfm_curve: AcfCurve, lfm_curve: AcfCurve, level_db: float = -4.0) -> float:
    """Mainlobe width of the shaped pulse relative to the LFM reference.

    Both curves must come from designs with the same pulse length and
    bandwidth for the ratio to mean anything.
    """
    return mlw(nlfm_curve, level_db) / mlw(lfm_curve, level_db)
