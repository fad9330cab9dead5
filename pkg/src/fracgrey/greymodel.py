"""Fractional-order grey forecasting model of first order, one variable.

Pipeline: accumulate the observations at order r, fit the linear relation
X(k) - X(k-1) = -a z(k) + b  (z = adjacent means of the accumulated series),
predict accumulated values with the exponential response
(x1 - b/a) e^(-a k) + b/a, and reduce back to the original scale.  The fit
error is the mean absolute percentage error over the second..last points.

All functions are pure and stateless; reports are immutable once built.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DataError, DegenerateParamsError, SingularDesignError
from .fracops import frac_accumulate, frac_reduce, mean_sequence, validate_order

# |a| below this is degenerate: the exponential response divides by a.
A_EPSILON = 1e-12

# Two parameters plus at least two validation points.
MIN_FIT_LENGTH = 4


@dataclass(frozen=True)
class Series:
    """Labeled positive observation sequence on its original scale.

    Labels are period identifiers (e.g. years): strictly increasing and
    equally spaced.  Values must all be positive, since percentage errors
    divide by them.
    """

    labels: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        labels = np.asarray(self.labels)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", values)
        if labels.ndim != 1 or values.ndim != 1:
            raise DataError("labels and values must be one-dimensional")
        if len(labels) != len(values):
            raise DataError(
                f"got {len(labels)} labels but {len(values)} values"
            )
        if len(values) == 0:
            raise DataError("series is empty")
        if not np.all(np.isfinite(values)):
            raise DataError("series values must be finite")
        if np.any(values <= 0):
            raise DataError("series values must be positive")
        if len(labels) > 1:
            gaps = np.diff(labels)
            if np.any(gaps <= 0):
                raise DataError("labels must be strictly increasing")
            if np.any(gaps != gaps[0]):
                raise DataError("labels must be equally spaced")

    def __len__(self):
        return len(self.values)

    @property
    def spacing(self):
        return self.labels[1] - self.labels[0] if len(self) > 1 else 1

    def future_labels(self, horizon: int) -> np.ndarray:
        """Labels for the ``horizon`` periods after the last observation."""
        step = self.spacing
        return self.labels[-1] + step * np.arange(1, horizon + 1)


@dataclass(frozen=True)
class GreyParams:
    """Fitted model parameters: order r, development coefficient a, grey input b."""

    r: float
    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "r", validate_order(self.r))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("parameters a, b must be finite")
        if abs(self.a) < A_EPSILON:
            raise DegenerateParamsError(
                f"|a| = {abs(self.a):.3e} is below {A_EPSILON:.0e}; "
                "the exponential response divides by a"
            )


@dataclass(frozen=True)
class FitReport:
    """In-sample fit summary on the original scale.

    ``fitted`` has the same length as the input and starts exactly at the
    first observation.  ``residuals`` are fitted minus observed.
    ``per_point_error`` holds percentage errors for the second..last points;
    ``mape`` is their mean.
    """

    params: GreyParams
    fitted: np.ndarray
    residuals: np.ndarray
    mape: float
    per_point_error: np.ndarray


def build_design(series: Series, r) -> tuple[np.ndarray, np.ndarray]:
    """Design matrix and target for the linear parameter estimation.

    Row k-1 is [-z(k), 1] with z the adjacent means of the order-r
    accumulated series; the target is the accumulated first difference
    X(k) - X(k-1), for k = 2..n.
    """
    if len(series) < 2:
        raise DataError("series too short: need at least 2 points for a design")
    X = frac_accumulate(series.values, r)
    z = mean_sequence(X)
    B = np.column_stack([-z, np.ones(len(z))])
    Y = np.diff(X)
    return B, Y


def _solve_design(B: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Least-squares solve via SVD with an explicit rank check."""
    solution, _, rank, _ = np.linalg.lstsq(B, Y, rcond=None)
    if rank < B.shape[1]:
        raise SingularDesignError(
            f"design matrix rank {rank} < {B.shape[1]}: columns are collinear"
        )
    return solution


def lsm_fit(series: Series, r) -> GreyParams:
    """Closed-form least-squares estimate of (a, b) at order ``r``.

    Minimizes the two-norm residual of the design system using an
    orthogonal-factorization solver (never the explicit normal equations:
    the two columns can be badly scaled against each other).
    """
    r = validate_order(r)
    if len(series) < MIN_FIT_LENGTH:
        raise DataError(
            f"series too short: fitting needs at least {MIN_FIT_LENGTH} points,"
            f" got {len(series)}"
        )
    B, Y = build_design(series, r)
    a, b = _solve_design(B, Y)
    return GreyParams(r=r, a=a, b=b)


def time_response(params: GreyParams, x1: float, k: int) -> float:
    """Accumulated-scale prediction (x1 - b/a) e^(-a k) + b/a.

    ``k`` counts periods after the first observation; k = 0 returns ``x1``
    exactly.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if abs(params.a) < A_EPSILON:
        raise DegenerateParamsError("development coefficient too close to zero")
    if k == 0:
        return float(x1)
    ba = params.b / params.a
    return float((x1 - ba) * np.exp(-params.a * k) + ba)


def _response_sequence(params: GreyParams, x1: float, n: int) -> np.ndarray:
    """Accumulated-scale predictions for indices 1..n (k = 0..n-1)."""
    if abs(params.a) < A_EPSILON:
        raise DegenerateParamsError("development coefficient too close to zero")
    ba = params.b / params.a
    out = (x1 - ba) * np.exp(-params.a * np.arange(n)) + ba
    out[0] = x1
    return out


def restored_fit(series: Series, params: GreyParams, horizon: int = 0) -> np.ndarray:
    """Original-scale model values for the sample plus ``horizon`` extra periods.

    Extends the exponential response past the fit window and reduces the whole
    extended sequence at once; the first value equals the first observation
    exactly.
    """
    n = len(series) + horizon
    Xhat = _response_sequence(params, series.values[0], n)
    restored = frac_reduce(Xhat, params.r)
    restored[0] = series.values[0]
    return restored


def mape(actual, fitted) -> float:
    """Mean absolute percentage error over the second..last points, in percent.

    The first point is excluded: the model reproduces it by construction.
    """
    actual = np.asarray(actual, dtype=float)
    fitted = np.asarray(fitted, dtype=float)
    if actual.shape != fitted.shape:
        raise ValueError("actual and fitted must have equal length")
    if len(actual) < 2:
        raise ValueError("need at least 2 points (the first is never scored)")
    if np.any(actual == 0):
        raise ZeroDivisionError("actual values must be nonzero")
    return float(np.mean(np.abs(fitted[1:] - actual[1:]) / np.abs(actual[1:]))) * 100.0


def fit_series(series: Series, params: GreyParams) -> FitReport:
    """Evaluate ``params`` on ``series``: fitted values, residuals, error."""
    if len(series) < 2:
        raise DataError("series too short: need at least 2 points to score a fit")
    fitted = restored_fit(series, params)
    residuals = fitted - series.values
    per_point = 100.0 * np.abs(residuals[1:]) / series.values[1:]
    return FitReport(
        params=params,
        fitted=fitted,
        residuals=residuals,
        mape=float(np.mean(per_point)),
        per_point_error=per_point,
    )


def forecast(series: Series, params: GreyParams, horizon: int) -> np.ndarray:
    """Original-scale predictions for the ``horizon`` periods after the sample."""
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    extended = restored_fit(series, params, horizon=horizon)
    return extended[len(series):]
