"""Spectral windows and their closed-form group delays.

The pulse is designed by prescribing the shape of its power spectral
density with a window w(f) on the band [-B/2, B/2].  Because spectral
power concentrates where the instantaneous frequency dwells, the time at
which the pulse sweeps through frequency f is proportional to the
integral of w up to f.  For the two supported windows that integral has
a closed form:

* Gaussian, w(f) = exp(-k (f/2B)^2): group delay through the error
  function;
* Taylor, w(f) = 1 + sum_m F_m cos(2 pi m f / B): group delay as a sine
  series, coefficient F_m / m per term.

Both group delays run from -T/2 at -B/2 to +T/2 at +B/2, are odd, and
strictly increase as long as the window stays positive (enforced for
Taylor parameter pairs at construction).  The frequency-vs-time law the
synthesizer needs is the inverse of the group delay, which has no closed
form; :func:`sample_group_delay` generates the (time, frequency) data
that the fitting module inverts numerically.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import NumericalError, OutOfBandError, ParameterError

GAUSSIAN = "gaussian"
TAYLOR = "taylor"

# Gaussian taper default: edge weight w(+-B/2) = exp(-k/16) = 0.01,
# i.e. a -40 dB edge taper, comparable to the Taylor default below.
DEFAULT_GAUSSIAN_K = 16.0 * math.log(100.0)
DEFAULT_TAYLOR_NBAR = 5
DEFAULT_TAYLOR_ETA_DB = 40.0

_POSITIVITY_SCAN_POINTS = 10_000


def erf(x: float) -> float:
    """Gauss error function (absolute error <= 1e-10 on |x| <= 6)."""
    x = float(x)
    if not math.isfinite(x):
        raise ParameterError(f"erf argument must be finite, got {x}")
    return kernels.erf(x)


@lru_cache(maxsize=128)
def _taylor_coefficients_cached(nbar, eta_db):
    # Classic Taylor weighting: the window 1 + sum_m F_m cos(2 pi m f/B)
    # places nbar near-in sidelobes roughly eta_db below the mainlobe.
    a = math.acosh(10.0 ** (eta_db / 20.0)) / math.pi
    sigma2 = nbar**2 / (a**2 + (nbar - 0.5) ** 2)
    m = np.arange(1, nbar, dtype=np.float64)
    m2 = m * m
    coeffs = np.empty(nbar - 1)
    for i in range(nbar - 1):
        numer = np.prod(1.0 - m2[i] / (sigma2 * (a**2 + (m - 0.5) ** 2)))
        denom = np.prod(1.0 - m2[i] / np.delete(m2, i))
        coeffs[i] = (-1.0) ** (i + 2) * numer / denom
    coeffs.flags.writeable = False
    return coeffs


def taylor_coefficients(nbar: int, eta_db: float) -> np.ndarray:
    """Cosine-series coefficients F_1..F_{nbar-1} of the Taylor window.

    Parameters
    ----------
    nbar : int
        Number of near-in sidelobes held at equal level; ``nbar = 1``
        gives an empty sequence (rectangular window).
    eta_db : float
        Mainlobe-to-sidelobe ratio in dB, positive.
    """
    if not isinstance(nbar, (int, np.integer)) or isinstance(nbar, bool):
        raise ParameterError(f"nbar must be an integer, got {nbar!r}")
    if nbar < 1:
        raise ParameterError(f"nbar must be >= 1, got {nbar}")
    eta_db = float(eta_db)
    if not math.isfinite(eta_db) or eta_db <= 0.0:
        raise ParameterError(f"eta_db must be positive, got {eta_db}")
    coeffs = _taylor_coefficients_cached(int(nbar), eta_db)
    if not np.all(np.isfinite(coeffs)):
        raise NumericalError(
            f"Taylor coefficients for nbar={nbar}, eta_db={eta_db} are not finite"
        )
    return coeffs


@dataclass(frozen=True)
class WindowSpec:
    """Design intent for the pulse spectrum: window family plus (B, T).

    ``k`` applies to the Gaussian family, ``nbar``/``eta_db`` to Taylor;
    unspecified parameters take the module defaults.  Taylor parameter
    pairs whose window is not strictly positive on the band are rejected,
    since a zero of the window would stall the group delay.
    """

    family: str
    bandwidth: float
    pulse_length: float
    k: float | None = None
    nbar: int | None = None
    eta_db: float | None = None

    def __post_init__(self):
        if self.family not in (GAUSSIAN, TAYLOR):
            raise ParameterError(
                f"unknown window family {self.family!r}; "
                f"expected {GAUSSIAN!r} or {TAYLOR!r}"
            )
        for name in ("bandwidth", "pulse_length"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0.0:
                raise ParameterError(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)

        if self.family == GAUSSIAN:
            if self.nbar is not None or self.eta_db is not None:
                raise ParameterError("nbar/eta_db apply to the Taylor family only")
            k = DEFAULT_GAUSSIAN_K if self.k is None else float(self.k)
            if not math.isfinite(k) or k <= 0.0:
                raise ParameterError(f"Gaussian taper constant k must be positive, got {k}")
            object.__setattr__(self, "k", k)
        else:
            if self.k is not None:
                raise ParameterError("k applies to the Gaussian family only")
            nbar = DEFAULT_TAYLOR_NBAR if self.nbar is None else self.nbar
            eta_db = DEFAULT_TAYLOR_ETA_DB if self.eta_db is None else float(self.eta_db)
            coeffs = taylor_coefficients(nbar, eta_db)
            object.__setattr__(self, "nbar", int(nbar))
            object.__setattr__(self, "eta_db", eta_db)
            self._check_taylor_positivity(coeffs)

    def _check_taylor_positivity(self, coeffs):
        theta = np.linspace(0.0, np.pi, _POSITIVITY_SCAN_POINTS)
        w = 1.0 + np.cos(np.outer(theta, np.arange(1, self.nbar))) @ coeffs
        if w.size and w.min() <= 0.0:
            raise ParameterError(
                f"Taylor window with nbar={self.nbar}, eta_db={self.eta_db} "
                "is not strictly positive on the band"
            )

    @classmethod
    def gaussian(cls, bandwidth, pulse_length, k=None):
        return cls(GAUSSIAN, bandwidth, pulse_length, k=k)

    @classmethod
    def taylor(cls, bandwidth, pulse_length, nbar=None, eta_db=None):
        return cls(TAYLOR, bandwidth, pulse_length, nbar=nbar, eta_db=eta_db)

    def parameters(self) -> dict:
        """Family-specific parameters, for reports and labels."""
        if self.family == GAUSSIAN:
            return {"k": self.k}
        return {"nbar": self.nbar, "eta_db": self.eta_db}


@dataclass(frozen=True)
class GroupDelaySamples:
    """Ordered (time, frequency) pairs sampled from the group delay.

    ``times`` is strictly increasing from -T/2 to +T/2; ``freqs`` runs
    from -B/2 to +B/2.  On the symmetric default grid the pairs come in
    odd-symmetric (-t, -f) partners.
    """

    times: np.ndarray
    freqs: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=np.float64)
        freqs = np.asarray(self.freqs, dtype=np.float64)
        if times.shape != freqs.shape or times.ndim != 1:
            raise ParameterError("times and freqs must be matching 1-D arrays")
        if times.size < 2:
            raise ParameterError("need at least two group-delay samples")
        if not (np.all(np.isfinite(times)) and np.all(np.isfinite(freqs))):
            raise NumericalError("group-delay samples must be finite")
        if not np.all(np.diff(times) > 0.0):
            raise NumericalError("group-delay times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "freqs", freqs)

    def __len__(self):
        return self.times.size


def _check_in_band(f, bandwidth):
    limit = 0.5 * bandwidth
    if np.any(np.abs(f) > limit) or not np.all(np.isfinite(f)):
        raise OutOfBandError(
            f"frequency outside the design band [-{limit}, {limit}] Hz"
        )


def window_weight(spec: WindowSpec, f):
    """Window value w(f) on the band; scalar in, scalar out.

    Gaussian: exp(-k (f/2B)^2).  Taylor: 1 + sum_m F_m cos(2 pi m f/B).
    Strictly positive for every accepted spec.
    """
    f_arr = np.asarray(f, dtype=np.float64)
    _check_in_band(f_arr, spec.bandwidth)
    if spec.family == GAUSSIAN:
        w = np.exp(-spec.k * (f_arr / (2.0 * spec.bandwidth)) ** 2)
    else:
        coeffs = taylor_coefficients(spec.nbar, spec.eta_db)
        m = np.arange(1, spec.nbar)
        phases = np.multiply.outer(f_arr, 2.0 * np.pi * m / spec.bandwidth)
        w = 1.0 + np.cos(phases) @ coeffs
    return w if np.ndim(f) else float(w)


def group_delay(spec: WindowSpec, f):
    """Time T_g(f) at which the designed pulse sweeps through f.

    Odd in f (exactly, by construction), strictly increasing, with
    T_g(+-B/2) = +-T/2.  The slope dT_g/df is proportional to the window
    weight, which is what shapes the spectrum.
    """
    f_arr = np.asarray(f, dtype=np.float64)
    _check_in_band(f_arr, spec.bandwidth)
    af = np.abs(f_arr)
    B = spec.bandwidth
    T = spec.pulse_length
    if spec.family == GAUSSIAN:
        root_k = math.sqrt(spec.k)
        scale = T / (2.0 * kernels.erf(0.25 * root_k))
        tg = scale * kernels.erf_array(af * (root_k / (2.0 * B)))
    else:
        coeffs = taylor_coefficients(spec.nbar, spec.eta_db)
        m = np.arange(1, spec.nbar)
        phases = np.multiply.outer(af, 2.0 * np.pi * m / B)
        series = np.sin(phases) @ (coeffs / m) if coeffs.size else 0.0
        tg = T * (af / B + series / (2.0 * np.pi))
    tg = np.copysign(tg, f_arr)
    return tg if np.ndim(f) else float(tg)


def sample_group_delay(spec: WindowSpec, n_points: int = 1001) -> GroupDelaySamples:
    """Sample T_g on a uniform frequency grid, ready for inversion.

    The grid is inclusive of both band edges and mirror-symmetric, so
    sample pairs are exactly odd-symmetric and the endpoints are exactly
    (-T/2, -B/2) and (+T/2, +B/2).  Uniform-in-frequency sampling packs
    time samples where the inverse is steep (near the band edges for
    tapered windows), which is where the fit needs support.
    """
    if not isinstance(n_points, (int, np.integer)) or isinstance(n_points, bool):
        raise ParameterError(f"n_points must be an integer, got {n_points!r}")
    if n_points < 2:
        raise ParameterError(f"n_points must be >= 2, got {n_points}")
    n = int(n_points)
    B = spec.bandwidth
    T = spec.pulse_length

    # Build the negative half and mirror it so f[n-1-j] == -f[j] bit-exactly.
    j = np.arange(n // 2)
    neg = (j / (n - 1) - 0.5) * B
    if n % 2:
        freqs = np.concatenate((neg, [0.0], -neg[::-1]))
    else:
        freqs = np.concatenate((neg, -neg[::-1]))

    times = group_delay(spec, freqs)
    # The boundary values equal -T/2 and +T/2 analytically; pin them to
    # remove last-ulp drift from the arithmetic.
    times[0] = -0.5 * T
    times[-1] = 0.5 * T
    return GroupDelaySamples(times=times, freqs=freqs)
