"""Shared fixtures and independent oracle helpers.

The oracles here deliberately avoid the package's own code paths: reduction
weights come straight from the Gamma-function definition, the classic
first-order grey model is coded from scratch on cumulative sums and explicit
normal equations, and the synthetic generators build accumulated sequences
from closed forms before reducing them with the oracle weights.
"""

import math

import numpy as np
import pytest

from fracgrey import WUHAN, ZHEJIANG, Series


@pytest.fixture
def wuhan():
    return WUHAN.series


@pytest.fixture
def zhejiang():
    return ZHEJIANG.series


@pytest.fixture
def write_csv(tmp_path):
    def _write(name, lines, header="label,value"):
        path = tmp_path / name
        rows = ([header] + list(lines)) if header is not None else list(lines)
        path.write_text("\n".join(rows) + ("\n" if rows else ""), encoding="utf-8")
        return str(path)

    return _write


# --- independent oracles ---------------------------------------------------

def oracle_reduction_weights(r, n):
    """Reduction weights straight from the definition: alternating binomial
    coefficients for integer r, Gamma ratios otherwise."""
    if abs(r - round(r)) < 1e-12:
        k = int(round(r))
        return np.array([
            (-1.0) ** i * (math.comb(k, i) if i <= k else 0.0) for i in range(n)
        ])
    out = [1.0]
    for i in range(1, n):
        out.append(
            (-1.0) ** i * math.gamma(r + 1)
            / (math.gamma(i + 1) * math.gamma(r - i + 1))
        )
    return np.array(out)


def oracle_reduce(X, r):
    X = np.asarray(X, dtype=float)
    d = oracle_reduction_weights(r, len(X))
    n = len(X)
    return np.array([sum(d[i] * X[k - i] for i in range(k + 1)) for k in range(n)])


def gm11_oracle(values):
    """Classic first-order grey model, coded from scratch: cumulative sums,
    adjacent means, centered simple regression of the differences on the
    background values, exponential response, first differences."""
    x = np.asarray(values, dtype=float)
    n = len(x)
    X1 = np.cumsum(x)
    z = 0.5 * (X1[1:] + X1[:-1])
    y = x[1:]
    zc = z - z.mean()
    slope = float(np.sum(zc * (y - y.mean())) / np.sum(zc * zc))
    a = -slope
    b = float(y.mean() + a * z.mean())
    acc = (x[0] - b / a) * np.exp(-a * np.arange(n)) + b / a
    acc[0] = x[0]
    fitted = np.empty(n)
    fitted[0] = x[0]
    fitted[1:] = acc[1:] - acc[:-1]
    return a, b, fitted


def exact_difference_series(r, a, b, x1, n, start_label=2000):
    """Series whose order-r accumulation satisfies the grey difference
    equation X(k) - X(k-1) + a (X(k) + X(k-1)) / 2 = b exactly."""
    X = np.empty(n)
    X[0] = x1
    for k in range(1, n):
        X[k] = ((1.0 - a / 2.0) * X[k - 1] + b) / (1.0 + a / 2.0)
    values = oracle_reduce(X, r)
    return Series(labels=np.arange(start_label, start_label + n), values=values)


def exact_response_values(r, a, b, x1, n):
    """Original-scale values obtained by reducing the closed-form exponential
    response (x1 - b/a) e^(-a k) + b/a."""
    k = np.arange(n)
    X = (x1 - b / a) * np.exp(-a * k) + b / a
    X[0] = x1
    return oracle_reduce(X, r)


def exact_response_series(r, a, b, x1, n, start_label=2000):
    values = exact_response_values(r, a, b, x1, n)
    return Series(labels=np.arange(start_label, start_label + n), values=values)
