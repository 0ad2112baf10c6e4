"""Special functions: log-gamma, Pochhammer symbols, terminating 2F1, Jacobi.

Everything here is written for the parameter patterns used by the circular
Bargmann transforms: real parameters, complex arguments, and Jacobi
parameters that may be negative integers depending on the degree.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, ParameterError

__all__ = [
    "log_gamma",
    "pochhammer",
    "binom",
    "hyp2f1_terminating",
    "hyp2f1_terminating_table",
    "jacobi_coefficients",
    "jacobi_p",
]

# Beyond this many factors the Pochhammer product switches to log-gamma
# (positive base only).
_POCH_PRODUCT_MAX = 64


def _is_nonpositive_integer(a: float) -> bool:
    return a <= 0 and float(a).is_integer()


def _ensure_finite(value, name: str):
    if not np.all(np.isfinite(value)):
        raise FloatingPointError(f"{name}: non-finite result")
    return value


def log_gamma(x):
    """Return ``ln Gamma(x)`` for ``x > 0`` (scalar or array)."""
    if np.ndim(x) == 0:
        x = float(x)
        if not x > 0:
            raise DomainError(f"log_gamma requires x > 0, got {x!r}")
        return math.lgamma(x)
    x = np.asarray(x, dtype=float)
    if not np.all(x > 0):
        raise DomainError("log_gamma requires x > 0")
    return gammaln(x)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)``.

    Exact zero when ``a`` is a non-positive integer with ``n > -a``.
    """
    n = int(n)
    if n < 0:
        raise ParameterError(f"pochhammer requires n >= 0, got {n}")
    if n == 0:
        return 1.0
    a = float(a)
    if _is_nonpositive_integer(a) and n > -a:
        return 0.0
    if a > 0 and n > _POCH_PRODUCT_MAX:
        return math.exp(math.lgamma(a + n) - math.lgamma(a))
    out = 1.0
    for j in range(n):
        out *= a + j
    return out


def binom(a: float, k: int) -> float:
    """Generalized binomial ``C(a, k) = (a-k+1)_k / k!`` for real ``a``."""
    k = int(k)
    if k < 0:
        return 0.0
    return pochhammer(a - k + 1, k) / math.factorial(k)


def _check_c(n: int, c: float) -> None:
    for k in range(n):
        if c + k == 0:
            raise ParameterError(
                f"2F1 lower parameter c={c} hits (c)_k = 0 at k={k + 1} <= n={n}"
            )


def hyp2f1_terminating(n: int, b: float, c: float, x):
    r"""Terminating Gauss series :math:`{}_2F_1(-n, b; c; x)`.

    .. math::
        \sum_{k=0}^{n} \frac{(-n)_k (b)_k}{(c)_k\, k!} x^k

    Summed forward with a running term ratio. ``x`` may be a complex scalar
    or array. Fine for short sums (``n`` of order 10); for long sums on the
    circle use :func:`hyp2f1_terminating_table`.
    """
    n = int(n)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    b = float(b)
    c = float(c)
    _check_c(n, c)
    x = np.asarray(x, dtype=complex)
    total = np.ones_like(x)
    term = np.ones_like(x)
    for k in range(n):
        term = term * ((k - n) * (b + k) / ((c + k) * (k + 1))) * x
        total = total + term
    _ensure_finite(total, "hyp2f1_terminating")
    return total[()] if total.ndim == 0 else total


def hyp2f1_terminating_table(n_max: int, b: float, c: float, x):
    """Values of ``2F1(-n, b; c; x)`` for ``n = 0..n_max`` (stacked on axis 0).

    Uses the contiguous relation in the first parameter,

        (c - a) F(a-1) + (2a - c + (b - a) x) F(a) + a (x - 1) F(a+1) = 0,

    run forward in ``n = -a``. On the circle ``|1 - x| = 1`` both solutions of
    the relation grow at most polynomially, so the forward run keeps full
    relative accuracy where the explicit sum loses every digit by ``n ~ 50``.
    """
    n_max = int(n_max)
    if n_max < 0:
        raise ParameterError(f"n_max must be >= 0, got {n_max}")
    b = float(b)
    c = float(c)
    _check_c(n_max, c)
    x = np.asarray(x, dtype=complex)
    out = np.empty((n_max + 1,) + x.shape, dtype=complex)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 - (b / c) * x
    for n in range(1, n_max):
        a = -n
        out[n + 1] = -((2 * a - c + (b - a) * x) * out[n] + a * (x - 1.0) * out[n - 1]) / (c - a)
    return _ensure_finite(out, "hyp2f1_terminating_table")


def jacobi_coefficients(n: int, alpha: float, beta: float) -> list[tuple[int, float]]:
    """Nonzero ``(k, C(n+alpha, n-k) C(n+beta, k))`` pairs of the double sum."""
    coeffs = []
    for k in range(n + 1):
        ck = binom(n + alpha, n - k) * binom(n + beta, k)
        if ck != 0.0:
            coeffs.append((k, ck))
    return coeffs


def jacobi_p(n: int, alpha: float, beta: float, x):
    r"""Jacobi polynomial :math:`P_n^{(\alpha,\beta)}(x)` at complex ``x``.

    Evaluated by the finite sum

    .. math::
        \sum_{k=0}^{n} \binom{n+\alpha}{n-k}\binom{n+\beta}{k}
        \Big(\frac{x-1}{2}\Big)^k \Big(\frac{x+1}{2}\Big)^{n-k}

    with generalized binomials built from Pochhammer products, so that
    integer parameters such as ``alpha = m - n`` zero out whole terms
    instead of producing 0 * inf. No recurrence in ``n`` is used because the
    parameters may depend on the degree.
    """
    n = int(n)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    x = np.asarray(x, dtype=complex)
    lo = 0.5 * (x - 1.0)
    hi = 0.5 * (x + 1.0)
    total = np.zeros_like(x)
    for k, ck in jacobi_coefficients(n, float(alpha), float(beta)):
        total = total + ck * lo**k * hi ** (n - k)
    _ensure_finite(total, "jacobi_p")
    return total[()] if total.ndim == 0 else total
