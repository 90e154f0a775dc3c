"""Pulse synthesis: from a fitted frequency law to unit-envelope samples.

The designed frequency function f(t) is the numerically fitted inverse
of the window's group delay.  The pulse itself is x(t) = exp(j phi(t))
with phi the running integral of 2 pi f(t); the amplitude is identically
one, which is the whole attraction of frequency-domain shaping.  The
linear-FM reference pulse (used to normalize mainlobe widths) gets its
exact quadratic phase in closed form instead of by quadrature.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import AliasingError, NumericalError, ParameterError
from .fitting import (
    DataSet,
    PolynomialModel,
    SplineModel,
    eval_model,
    fit_polynomial,
    fit_smoothing_spline,
)
from .windows import WindowSpec, sample_group_delay

POLYNOMIAL = "polynomial"
SPLINE = "spline"

_MONOTONE_SCAN_POINTS = 10_000
_OVERSHOOT_FLAG_FRACTION = 0.01


def unit_samples(phase) -> np.ndarray:
    """Complex samples on the unit circle at the given phases.

    cos/sin rounding leaves about a third of raw samples one ulp off the
    circle; renormalizing the offenders converges to |z| == 1.0 exactly
    (as computed by hypot) in a handful of passes.
    """
    phase = np.asarray(phase, dtype=np.float64)
    if not np.all(np.isfinite(phase)):
        raise NumericalError("phase samples must be finite")
    re = np.cos(phase)
    im = np.sin(phase)
    for _ in range(32):
        mag = np.hypot(re, im)
        off = mag != 1.0
        if not off.any():
            return re + 1j * im
        re[off] /= mag[off]
        im[off] /= mag[off]
    raise NumericalError("unit-circle normalization did not converge")


@dataclass(frozen=True)
class Waveform:
    """Constant-envelope complex baseband pulse.

    Every sample has magnitude exactly 1.0 (checked bitwise at
    construction) and the count equals round(T * fs).
    """

    samples: np.ndarray
    sample_rate: float
    pulse_length: float
    label: str = ""

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.complex128)
        if samples.ndim != 1 or samples.size == 0:
            raise ParameterError("samples must be a non-empty 1-D array")
        if self.sample_rate <= 0.0 or self.pulse_length <= 0.0:
            raise ParameterError("sample_rate and pulse_length must be positive")
        if samples.size != round(self.pulse_length * self.sample_rate):
            raise ParameterError(
                f"{samples.size} samples inconsistent with T*fs = "
                f"{self.pulse_length * self.sample_rate}"
            )
        if np.any(np.abs(samples) != 1.0):
            raise NumericalError("waveform samples must have magnitude exactly 1")
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        """Midpoint sample times, centered on the pulse."""
        n = self.samples.size
        return -0.5 * self.pulse_length + (np.arange(n) + 0.5) / self.sample_rate


@dataclass(frozen=True)
class FrequencyModel:
    """Fitted frequency-vs-time law f(t) plus design provenance.

    ``monotone`` records whether the fit increases over the whole pulse
    (a non-monotone inverse is suspicious but not fatal; the sidelobe
    measurement will show the damage).  ``band_overshoot_hz`` is the
    amount by which |f| exceeds B/2 anywhere on the scan grid, zero when
    the fit stays in band.
    """

    fit: PolynomialModel | SplineModel
    spec: WindowSpec
    method: str
    degree: int | None = None
    lam: float | None = None
    monotone: bool = True
    band_overshoot_hz: float = 0.0

    @property
    def band_overshoot_flagged(self) -> bool:
        """True when the fit leaves the band by more than 1% of B."""
        return self.band_overshoot_hz > _OVERSHOOT_FLAG_FRACTION * self.spec.bandwidth

    def method_label(self) -> str:
        if self.method == POLYNOMIAL:
            return f"{POLYNOMIAL}(degree={self.degree})"
        return f"{SPLINE}(lambda={self.lam!r})"

    def __call__(self, t):
        return eval_model(self.fit, t)


def design_frequency_function(
    spec: WindowSpec,
    method: str,
    *,
    degree: int = 9,
    lam: float | None = None,
    n_points: int = 1001,
) -> FrequencyModel:
    """Fit the inverse group delay with the chosen method.

    ``method`` is ``"polynomial"`` (uses ``degree``) or ``"spline"``
    (uses ``lam``, which has no default: the smoothing level is a design
    choice, not something to guess silently).
    """
    if method == POLYNOMIAL:
        pass
    elif method in (SPLINE, "smoothing_spline"):
        method = SPLINE
        if lam is None:
            raise ParameterError("spline designs require an explicit lam")
    else:
        raise ParameterError(
            f"unknown method {method!r}; expected {POLYNOMIAL!r} or {SPLINE!r}"
        )

    samples = sample_group_delay(spec, n_points)
    data = DataSet(samples.times, samples.freqs)
    if method == POLYNOMIAL:
        fit = fit_polynomial(data, degree)
    else:
        fit = fit_smoothing_spline(data, lam)

    half_t = 0.5 * spec.pulse_length
    scan = np.linspace(-half_t, half_t, _MONOTONE_SCAN_POINTS)
    f_scan = eval_model(fit, scan)
    if not np.all(np.isfinite(f_scan)):
        raise NumericalError("fitted frequency function is not finite")
    monotone = bool(np.all(np.diff(f_scan) > 0.0))
    overshoot = max(0.0, float(np.max(np.abs(f_scan))) - 0.5 * spec.bandwidth)

    return FrequencyModel(
        fit=fit,
        spec=spec,
        method=method,
        degree=degree if method == POLYNOMIAL else None,
        lam=lam if method == SPLINE else None,
        monotone=monotone,
        band_overshoot_hz=overshoot,
    )


def _midpoint_grid(pulse_length, fs):
    n = round(pulse_length * fs)
    if n < 1:
        raise ParameterError(
            f"pulse length {pulse_length} s at {fs} Hz yields no samples"
        )
    t = -0.5 * pulse_length + (np.arange(n) + 0.5) / fs
    return n, t

def integrate_phase(model: FrequencyModel, fs: float):
    """Phase samples phi(t_i) on the midpoint grid, by cumulative trapezoid.

    Returns ``(t, phi)`` with phi[0] = 0; the midpoint grid keeps every
    evaluation strictly inside the fitted domain.  At the design sample
    rates the trapezoid rule is exact for the examples that matter
    (constant and linear f) and far below metric resolution otherwise.
    """
    fs = float(fs)
    if not math.isfinite(fs) or fs <= 0.0:
        raise ParameterError(f"sample rate must be positive, got {fs}")
    _, t = _midpoint_grid(model.spec.pulse_length, fs)
    lo, hi = -0.5 * model.spec.pulse_length, 0.5 * model.spec.pulse_length
    f = eval_model(model.fit, np.clip(t, lo, hi))
    if not np.all(np.isfinite(f)):
        raise NumericalError("frequency evaluation produced non-finite values")
    phi = np.concatenate(([0.0], np.cumsum(f[:-1] + f[1:]) * (np.pi / fs)))
    return t, phi


def synthesize_nlfm(model: FrequencyModel, fs: float) -> Waveform:
    """Constant-envelope pulse realizing the fitted frequency law."""
    if fs <= model.spec.bandwidth:
        raise AliasingError(
            f"sample rate {fs} Hz must exceed the bandwidth "
            f"{model.spec.bandwidth} Hz"
        )
    _, phi = integrate_phase(model, fs)
    params = ",".join(f"{k}={v!r}" for k, v in model.spec.parameters().items())
    label = (
        f"nlfm {model.spec.family}({params}) {model.method_label()} "
        f"T={model.spec.pulse_length!r} B={model.spec.bandwidth!r} fs={fs!r}"
    )
    return Waveform(
        samples=unit_samples(phi),
        sample_rate=fs,
        pulse_length=model.spec.pulse_length,
        label=label,
    )


def synthesize_lfm(pulse_length: float, bandwidth: float, fs: float) -> Waveform:
    """Linear-FM reference pulse with exact closed-form quadratic phase."""
    if not (pulse_length > 0.0 and bandwidth > 0.0):
        raise ParameterError("pulse_length and bandwidth must be positive")
    if fs <= bandwidth:
        raise AliasingError(
            f"sample rate {fs} Hz must exceed the bandwidth {bandwidth} Hz"
        )
    _, t = _midpoint_grid(pulse_length, fs)
    rate = bandwidth / pulse_length
    phi = np.pi * rate * (t * t - t[0] * t[0])
    label = f"lfm T={pulse_length!r} B={bandwidth!r} fs={fs!r}"
    return Waveform(
        samples=unit_samples(phi),
        sample_rate=fs,
        pulse_length=pulse_length,
        label=label,
    )
