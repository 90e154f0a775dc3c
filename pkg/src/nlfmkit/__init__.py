"""Nonlinear-FM pulse design by spectral shaping, with sidelobe metrics.

Design pipeline: pick a window (:class:`WindowSpec`), sample its group
delay, invert it by polynomial or smoothing-spline fitting
(:func:`design_frequency_function`), integrate the phase and emit a
constant-envelope pulse (:func:`synthesize_nlfm`), then measure the
autocorrelation sidelobes (:func:`autocorrelation`, :func:`psl`,
:func:`mlw`, :func:`nmlw`).  The ``nlfmkit`` command line wraps the same
pipeline with file outputs; see the README.
"""

from . import errors
from .fitting import (
    DataSet,
    PolynomialModel,
    SplineModel,
    eval_model,
    fit_polynomial,
    fit_smoothing_spline,
    penalized_objective,
    roughness,
    sse,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .metrics import (
    AcfCurve,
    AcfReport,
    Spectrum,
    autocorrelation,
    mlw,
    nmlw,
    psd,
    psl,
)
from .synthesis import (
    FrequencyModel,
    Waveform,
    design_frequency_function,
    integrate_phase,
    synthesize_lfm,
    synthesize_nlfm,
    unit_samples,
)
from .windows import (
    DEFAULT_GAUSSIAN_K,
    DEFAULT_TAYLOR_ETA_DB,
    DEFAULT_TAYLOR_NBAR,
    GroupDelaySamples,
    WindowSpec,
    erf,
    group_delay,
    sample_group_delay,
    taylor_coefficients,
    window_weight,
)

__version__ = "0.1.0"

__all__ = [
    "AcfCurve",
    "AcfReport",
    "DataSet",
    "DEFAULT_GAUSSIAN_K",
    "DEFAULT_TAYLOR_ETA_DB",
    "DEFAULT_TAYLOR_NBAR",
    "FrequencyModel",
    "GroupDelaySamples",
    "KERNEL_BACKEND",
    "PolynomialModel",
    "Spectrum",
    "SplineModel",
    "Waveform",
    "WindowSpec",
    "autocorrelation",
    "design_frequency_function",
    "erf",
    "errors",
    "eval_model",
    "fit_polynomial",
    "fit_smoothing_spline",
    "group_delay",
    "integrate_phase",
    "mlw",
    "nmlw",
    "penalized_objective",
    "psd",
    "psl",
    "roughness",
    "sample_group_delay",
    "sse",
    "synthesize_lfm",
    "synthesize_nlfm",
    "taylor_coefficients",
    "unit_samples",
    "window_weight",
    "__version__",
]
