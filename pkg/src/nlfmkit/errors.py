"""Exception types raised by the toolkit.

Everything derives from :class:`NlfmError` so callers can catch one base
class; the parameter-validation errors additionally derive from
``ValueError`` so generic validation code keeps working.
"""


class NlfmError(Exception):
    """Base class for all toolkit errors."""


class ParameterError(NlfmError, ValueError):
    """An argument is outside its valid range or inconsistent."""


class UnderdeterminedError(ParameterError):
    """A fit was requested with more free parameters than data points."""


class InsufficientDataError(ParameterError):
    """A fit was requested with too few data points."""


class OutOfBandError(ParameterError):
    """A frequency lies outside the design band [-B/2, B/2]."""


class OutOfDomainError(ParameterError):
    """An evaluation point lies outside a fitted model's domain."""


class AliasingError(ParameterError):
    """The sample rate is too low for the requested bandwidth."""


class DegenerateMainlobeError(NlfmError):
    """The autocorrelation never drops through the requested level."""


class NumericalError(NlfmError):
    """A non-finite value appeared where a finite one is required."""
