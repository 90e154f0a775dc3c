"""Numeric kernels with a compiled fast path and a NumPy fallback.

Two interchangeable backends provide the hot inner loops (the radix-2
transform used for autocorrelation and spectra, and the error function
used by the Gaussian group delay):

* ``nlfmkit.kernels._fast`` -- Cython extension, built at install time;
* ``nlfmkit.kernels.reference`` -- pure NumPy, always available.

The compiled backend is preferred when importable.  Set the environment
variable ``NLFMKIT_BACKEND`` to ``fast`` or ``reference`` to force one
(``fast`` raises if the extension is missing).  ``BACKEND`` records the
choice.  Both backends implement the same algorithms and agree to a few
ulps; see ``benchmarks/bench_backends.py`` for the speed comparison.
"""

import os

_requested = os.environ.get("NLFMKIT_BACKEND", "").strip().lower()

if _requested not in ("", "fast", "reference"):
    raise ImportError(
        f"NLFMKIT_BACKEND={_requested!r} not understood; "
        "use 'fast' or 'reference'"
    )

if _requested == "reference":
    from . import reference as _impl

    BACKEND = "reference"
else:
    try:
        from . import _fast as _impl

        BACKEND = "fast"
    except ImportError:
        if _requested == "fast":
            raise
        from . import reference as _impl

        BACKEND = "reference"

erf = _impl.erf
erf_array = _impl.erf_array
fft = _impl.fft
ifft = _impl.ifft

__all__ = ["BACKEND", "erf", "erf_array", "fft", "ifft"]
