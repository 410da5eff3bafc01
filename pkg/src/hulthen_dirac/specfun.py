"""Pochhammer symbols, terminating Gauss hypergeometric series and Jacobi
polynomials with real exponent parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, PoleError


def pochhammer(x: float, n: int) -> float:
    """Rising factorial x(x+1)...(x+n-1); 1 for n = 0."""
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    out = 1.0
    for k in range(n):
        out *= x + k
    return out


def _series_coefficients(n: int, b: float, c: float) -> np.ndarray:
    """Coefficients of sum_k (-n)_k (b)_k / ((c)_k k!) x^k, ascending."""
    if n < 0 or int(n) != n:
        raise InvalidParameterError("n must be a nonnegative integer")
    coef = np.empty(n + 1)
    coef[0] = 1.0
    for k in range(n):
        den = (c + k) * (k + 1)
        if den == 0.0:
            raise PoleError(f"c={c} is a pole of the terminating series of degree {n}")
        coef[k + 1] = coef[k] * (k - n) * (b + k) / den
    return coef


def _compensated_series(coef: np.ndarray, x) -> np.ndarray:
    # ascending power sum with Neumaier compensation, vectorized over x
    x = np.asarray(x, dtype=float)
    total = np.zeros_like(x)
    comp = np.zeros_like(x)
    power = np.ones_like(x)
    for a in coef:
        term = a * power
        t = total + term
        big = np.abs(total) >= np.abs(term)
        comp += np.where(big, (total - t) + term, (term - t) + total)
        total = t
        power = power * x
    return total + comp


def hyp2f1_terminating(n: int, b: float, c: float, x):
    """The finite series 2F1(-n, b; c; x).

    Accepts a scalar or an array for ``x``; returns the same shape.
    """
    coef = _series_coefficients(n, b, c)
    out = _compensated_series(coef, x)
    return float(out) if np.ndim(x) == 0 else out


def hyp2f1_derivative(n: int, b: float, c: float, x):
    """d/dx 2F1(-n, b; c; x) = (-n b / c) 2F1(1-n, b+1; c+1; x)."""
    if n == 0:
        return 0.0 if np.ndim(x) == 0 else np.zeros_like(np.asarray(x, dtype=float))
    if c == 0.0:
        raise PoleError("c=0 is a pole")
    return (-n * b / c) * hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, x)


def jacobi_p(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha, beta)(x) for alpha, beta > -1.

    Evaluated through P_n = (alpha+1)_n / n! * 2F1(-n, n+alpha+beta+1;
    alpha+1; (1-x)/2).
    """
    if not (alpha > -1.0 and beta > -1.0):
        raise InvalidParameterError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
    scale = pochhammer(alpha + 1.0, n) / math.factorial(n)
    xx = np.asarray(x, dtype=float)
    val = scale * _compensated_series(
        _series_coefficients(n, n + alpha + beta + 1.0, alpha + 1.0), (1.0 - xx) / 2.0)
    return float(val) if np.ndim(x) == 0 else val


@dataclass(frozen=True)
class PolyEval:
    """A polynomial in x stored by ascending coefficients."""

    degree: int
    coefficients: tuple[float, ...]

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, np.asarray(self.coefficients))


def jacobi_poly(n: int, alpha: float, beta: float) -> PolyEval:
    """Power-basis form of P_n^(alpha, beta), for inspection and plotting."""
    if not (alpha > -1.0 and beta > -1.0):
        raise InvalidParameterError("Jacobi parameters must exceed -1")
    P = np.polynomial.Polynomial
    series = P(_series_coefficients(n, n + alpha + beta + 1.0, alpha + 1.0))
    arg = P([0.5, -0.5])
    poly = series(arg) * (pochhammer(alpha + 1.0, n) / math.factorial(n))
    coef = tuple(float(c) for c in poly.coef) + (0.0,) * (n + 1 - len(poly.coef))
    return PolyEval(n, coef[: n + 1])
