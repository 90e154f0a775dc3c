"""Least-squares inversion of sampled curves.

Two fit families, both evaluable anywhere on their domain:

* :func:`fit_polynomial` -- degree-m least squares, solved by Householder
  QR of the Vandermonde matrix in a conditioned coordinate (x mapped to
  [-1, 1], y scaled to unit magnitude).  Raw seconds-vs-hertz data spans
  ~14 orders of magnitude, so conditioning is what keeps degrees up to
  the mid-teens solvable in doubles.
* :func:`fit_smoothing_spline` -- the natural cubic spline minimizing

      J = lam * integral(f''(x)^2 dx) + sum_i (f(x_i) - y_i)^2,

  found by solving the symmetric positive-definite pentadiagonal system
  (R + lam Q^T Q) g = Q^T y for the interior second derivatives g, then
  recovering the knot values as y - lam Q g.  lam = 0 interpolates; as
  lam grows the fit stiffens toward the least-squares line.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InsufficientDataError,
    NumericalError,
    OutOfDomainError,
    ParameterError,
    UnderdeterminedError,
)


@dataclass(frozen=True)
class DataSet:
    """Finite (x, y) pairs with strictly increasing x."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.float64)
        y = np.asarray(self.y, dtype=np.float64)
        if x.ndim != 1 or x.shape != y.shape:
            raise ParameterError("x and y must be matching 1-D arrays")
        if x.size < 2:
            raise InsufficientDataError("need at least two data points")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise ParameterError("data must be finite")
        if not np.all(np.diff(x) > 0.0):
            raise ParameterError("x must be strictly increasing (duplicates rejected)")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __len__(self):
        return self.x.size


@dataclass(frozen=True)
class PolynomialModel:
    """Polynomial in a conditioned coordinate u = (x - center)/halfwidth.

    ``coef`` is ascending in u; evaluation is Horner in u, scaled back by
    ``y_scale``.  Direct construction with default maps gives an ordinary
    polynomial in x: ``PolynomialModel([1, 2])`` evaluates 1 + 2 x.
    """

    coef: np.ndarray
    x_center: float = 0.0
    x_halfwidth: float = 1.0
    y_scale: float = 1.0
    domain: tuple | None = None

    def __post_init__(self):
        coef = np.atleast_1d(np.asarray(self.coef, dtype=np.float64))
        if coef.ndim != 1 or coef.size == 0 or not np.all(np.isfinite(coef)):
            raise ParameterError("coefficients must be a finite 1-D sequence")
        if self.x_halfwidth <= 0.0 or self.y_scale <= 0.0:
            raise ParameterError("conditioning scales must be positive")
        object.__setattr__(self, "coef", coef)

    @property
    def degree(self):
        return self.coef.size - 1

    def __call__(self, x):
        return eval_model(self, x)


@dataclass(frozen=True)
class SplineModel:
    """Natural cubic spline given by knot values and second derivatives.

    Between knots the curve is the unique cubic matching the stored
    values and (piecewise-linear) second derivatives; the natural
    boundary pins the second derivative to zero at both ends.
    """

    knots: np.ndarray
    values: np.ndarray
    second_derivs: np.ndarray
    lam: float = 0.0

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=np.float64)
        values = np.asarray(self.values, dtype=np.float64)
        second = np.asarray(self.second_derivs, dtype=np.float64)
        if not (knots.shape == values.shape == second.shape) or knots.ndim != 1:
            raise ParameterError("knots, values, second_derivs must match in shape")
        if knots.size < 2:
            raise InsufficientDataError("a spline needs at least two knots")
        if not np.all(np.diff(knots) > 0.0):
            raise ParameterError("knots must be strictly increasing")
        if self.lam < 0.0:
            raise ParameterError("lam must be non-negative")
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "second_derivs", second)

    @property
    def domain(self):
        return (float(self.knots[0]), float(self.knots[-1]))

    def __call__(self, x):
        return eval_model(self, x)


def fit_polynomial(data: DataSet, degree: int) -> PolynomialModel:
    """Least-squares polynomial of the given degree.

    Requires degree < n so the system is overdetermined (or square); the
    returned coefficients minimize the sum of squared residuals.
    """
    if not isinstance(degree, (int, np.integer)) or isinstance(degree, bool):
        raise ParameterError(f"degree must be an integer, got {degree!r}")
    if degree < 0:
        raise ParameterError(f"degree must be >= 0, got {degree}")
    n = len(data)
    if degree >= n:
        raise UnderdeterminedError(
            f"degree {degree} needs more than the {n} points available"
        )

    center = 0.5 * (data.x[0] + data.x[-1])
    halfwidth = 0.5 * (data.x[-1] - data.x[0])
    u = (data.x - center) / halfwidth
    y_scale = float(np.max(np.abs(data.y))) or 1.0

    vander = np.vander(u, degree + 1, increasing=True)
    q, r = np.linalg.qr(vander)
    coef = np.linalg.solve(r, q.T @ (data.y / y_scale))
    return PolynomialModel(
        coef,
        x_center=center,
        x_halfwidth=halfwidth,
        y_scale=y_scale,
        domain=(float(data.x[0]), float(data.x[-1])),
    )


def _solve_spd_pentadiagonal(d0, d1, d2, rhs):
    """Solve M z = rhs for symmetric positive-definite M with bandwidth 2.

    ``d0`` is the diagonal, ``d1``/``d2`` the first and second
    superdiagonals.  In-house LDL^T; O(n) time and storage.
    """
    n = len(d0)
    diag = [0.0] * n
    l1 = [0.0] * n
    l2 = [0.0] * n
    d0 = list(d0)
    d1 = list(d1) + [0.0]
    d2 = list(d2) + [0.0, 0.0]
    for i in range(n):
        di = d0[i]
        if i >= 1:
            di -= l1[i - 1] * l1[i - 1] * diag[i - 1]
        if i >= 2:
            di -= l2[i - 2] * l2[i - 2] * diag[i - 2]
        if di <= 0.0 or not math.isfinite(di):
            raise NumericalError("smoothing system lost positive definiteness")
        diag[i] = di
        if i + 1 < n:
            e = d1[i]
            if i >= 1:
                e -= l2[i - 1] * diag[i - 1] * l1[i - 1]
            l1[i] = e / di
        if i + 2 < n:
            l2[i] = d2[i] / di

    z = list(rhs)
    for i in range(n):
        if i >= 1:
            z[i] -= l1[i - 1] * z[i - 1]
        if i >= 2:
            z[i] -= l2[i - 2] * z[i - 2]
    for i in range(n):
        z[i] /= diag[i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            z[i] -= l1[i] * z[i + 1]
        if i + 2 < n:
            z[i] -= l2[i] * z[i + 2]
    return np.asarray(z)


def fit_smoothing_spline(data: DataSet, lam: float) -> SplineModel:
    """Natural cubic smoothing spline minimizing the penalized objective.

    ``lam`` (units x^3) multiplies the integrated squared second
    derivative; it must be given explicitly.  lam = 0 returns the
    natural interpolating spline.
    """
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0.0:
        raise ParameterError(f"lam must be finite and >= 0, got {lam}")
    n = len(data)
    if lam > 0.0 and n < 3:
        raise InsufficientDataError("smoothing (lam > 0) needs at least 3 points")

    x = data.x
    y = data.y
    if n == 2:
        return SplineModel(x, y.copy(), np.zeros(2), lam=lam)

    h = np.diff(x)
    p = 1.0 / h[:-1]          # column c touches rows c, c+1, c+2
    r = 1.0 / h[1:]
    q = -(p + r)

    rd = (h[:-1] + h[1:]) / 3.0            # R diagonal
    re = h[1:-1] / 6.0                     # R superdiagonal
    qtq0 = p * p + q * q + r * r
    qtq1 = q[:-1] * p[1:] + r[:-1] * q[1:]
    qtq2 = r[:-2] * p[2:]

    d0 = rd + lam * qtq0
    d1 = re + lam * qtq1
    d2 = lam * qtq2
    rhs = p * y[:-2] + q * y[1:-1] + r * y[2:]

    g_int = _solve_spd_pentadiagonal(d0, d1, d2, rhs)

    qg = np.zeros(n)
    qg[:-2] += p * g_int
    qg[1:-1] += q * g_int
    qg[2:] += r * g_int
    values = y - lam * qg

    second = np.zeros(n)
    second[1:-1] = g_int
    return SplineModel(x, values, second, lam=lam)


def _eval_polynomial(model: PolynomialModel, x):
    u = (x - model.x_center) / model.x_halfwidth
    result = np.full_like(u, model.coef[-1])
    for c in model.coef[-2::-1]:
        result = result * u + c
    return result * model.y_scale


def _eval_spline(model: SplineModel, x):
    knots = model.knots
    v = model.values
    g = model.second_derivs
    idx = np.clip(np.searchsorted(knots, x, side="right") - 1, 0, knots.size - 2)
    h = knots[idx + 1] - knots[idx]
    dx = x - knots[idx]
    slope = (v[idx + 1] - v[idx]) / h - h * (2.0 * g[idx] + g[idx + 1]) / 6.0
    return v[idx] + dx * (slope + dx * (g[idx] / 2.0 + dx * (g[idx + 1] - g[idx]) / (6.0 * h)))


def eval_model(model, x):
    """Evaluate a fitted model; rejects points outside its domain."""
    x_arr = np.asarray(x, dtype=np.float64)
    if isinstance(model, PolynomialModel):
        domain = model.domain
    elif isinstance(model, SplineModel):
        domain = model.domain
    else:
        raise ParameterError(f"not a fitted model: {model!r}")
    if domain is not None:
        lo, hi = domain
        if np.any(x_arr < lo) or np.any(x_arr > hi) or not np.all(np.isfinite(x_arr)):
            raise OutOfDomainError(f"evaluation outside the fitted domain [{lo}, {hi}]")
    if isinstance(model, PolynomialModel):
        out = _eval_polynomial(model, x_arr)
    else:
        out = _eval_spline(model, x_arr)
    return out if np.ndim(x) else float(out)


def sse(model, data: DataSet) -> float:
    """Sum of squared residuals of the model over the data."""
    residuals = data.y - eval_model(model, data.x)
    return float(np.dot(residuals, residuals))


def roughness(model: SplineModel) -> float:
    """Exact integral of f''(x)^2 over the spline's domain.

    f'' is piecewise linear between the stored second derivatives, so
    each segment integrates in closed form.
    """
    if not isinstance(model, SplineModel):
        raise ParameterError("roughness is defined for spline models")
    h = np.diff(model.knots)
    g0 = model.second_derivs[:-1]
    g1 = model.second_derivs[1:]
    return float(np.sum(h * (g0 * g0 + g0 * g1 + g1 * g1)) / 3.0)


def penalized_objective(model: SplineModel, data: DataSet) -> float:
    """The smoothing objective lam * roughness + sse at the model."""
    return model.lam * roughness(model) + sse(model, data)
