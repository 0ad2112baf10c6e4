"""Orthonormal families: Bergman basis, level-m eigenbasis, circular Jacobi kets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, ParameterError
from .specfun import hyp2f1_terminating_table, log_gamma

__all__ = [
    "ModelParams",
    "phi_bergman",
    "phi_eigen",
    "circular_jacobi",
    "ket",
    "ket_table",
    "ket_combination",
    "check_in_disk",
]

@dataclass(frozen=True)
class ModelParams:
    """Field strength ``gamma`` and Landau level index ``m``.

    Requires ``gamma > 0``, integer ``0 <= m <= gamma/2`` and ``gamma - 2m > 0``.
    """

    gamma: float
    m: int = 0

    def __post_init__(self):
        gamma = float(self.gamma)
        if not (math.isfinite(gamma) and gamma > 0):
            raise ParameterError(f"gamma must be a finite number > 0, got {self.gamma!r}")
        if isinstance(self.m, bool) or int(self.m) != self.m:
            raise ParameterError(f"m must be an integer, got {self.m!r}")
        m = int(self.m)
        if m < 0:
            raise ParameterError(f"m must be >= 0, got {m}")
        if not gamma - 2 * m > 0:
            raise ParameterError(
                f"gamma - 2m must be > 0 (gamma={gamma}, m={m}); gamma = 2m is unsupported"
            )
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "m", m)

    @property
    def gamma_prime(self) -> float:
        """``gamma - 2m``: the circle-measure parameter at level ``m``."""
        return self.gamma - 2 * self.m


def check_in_disk(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(z)):
        raise DomainError("z must be finite")
    if np.any(np.abs(z) >= 1):
        raise DomainError("z must lie in the open unit disk |z| < 1")
    return z


def _scalarize(a: np.ndarray):
    return a[()] if a.ndim == 0 else a


@lru_cache(maxsize=4096)
def _bergman_log_norm(n: int, gamma: float) -> float:
    return 0.5 * (
        math.log(gamma / math.pi)
        + log_gamma(gamma + 1 + n)
        - log_gamma(gamma + 1)
        - log_gamma(n + 1)
    )


def phi_bergman(n: int, gamma: float, z):
    """``sqrt(gamma Gamma(gamma+1+n) / (pi Gamma(gamma+1) n!)) z^n``."""
    n = int(n)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma!r}")
    z = check_in_disk(z)
    return _scalarize(math.exp(_bergman_log_norm(n, float(gamma))) * z**n)


@lru_cache(maxsize=4096)
def _eigen_log_norm(n: int, gamma: float, m: int) -> float:
    """Log of the normalization times ``(-1)^n (gp+1)_n / n!``."""
    gp = gamma - 2 * m
    return 0.5 * (
        math.log(gp / math.pi)
        + log_gamma(gamma - m + 1)
        - log_gamma(m + 1)
        + log_gamma(gp + n + 1)
        - log_gamma(n + 1)
    ) - log_gamma(gp + 1)


@lru_cache(maxsize=4096)
def _eigen_terms(n: int, gamma: float, m: int) -> tuple:
    """``(-m)_k (-n)_k / ((gp+1)_k k!)`` for ``k <= min(m, n)``."""
    gp = gamma - 2 * m
    out = []
    t = 1.0
    for k in range(min(m, n) + 1):
        out.append(t)
        t *= (k - m) * (k - n) / ((gp + 1 + k) * (k + 1))
    return tuple(out)


def phi_eigen(n: int, params: ModelParams, z):
    r"""Orthonormal basis of the level-``m`` eigenspace.

    .. math::
        (-1)^n \sqrt{\tfrac{\gamma-2m}{\pi}}
        \sqrt{\tfrac{n!\,\Gamma(\gamma-m+1)}{m!\,\Gamma(\gamma-2m+n+1)}}
        (1-|z|^2)^{-m}\,\bar z^{\,m-n} P_n^{(m-n,\gamma-2m)}(1-2|z|^2)

    Evaluated through the equivalent finite sum

    .. math::
        \frac{(\gamma'+1)_n}{n!}(1-|z|^2)^{-m}
        \sum_{k=0}^{\min(m,n)} \frac{(-m)_k(-n)_k}{(\gamma'+1)_k\,k!}
        (|z|^2-1)^k z^{n-k}\bar z^{\,m-k},

    whose powers of ``z`` and ``z-bar`` are all nonnegative: the apparent
    pole at the origin never appears, and only ``m + 1`` terms can cancel,
    so large ``n`` is as safe as small ``n``.
    """
    n = int(n)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    z = check_in_disk(z)
    gamma, m = params.gamma, params.m
    zbar = np.conj(z)
    s = (z * zbar).real
    acc = np.zeros_like(z)
    for k, tk in enumerate(_eigen_terms(n, gamma, m)):
        acc = acc + tk * (s - 1) ** k * z ** (n - k) * zbar ** (m - k)
    out = math.exp(_eigen_log_norm(n, gamma, m)) * (1 - s) ** (-m) * acc
    return _scalarize(out)


@lru_cache(maxsize=4096)
def _ket_log_scale(n: int, gp: float) -> float:
    """``ln sqrt((gp+1)_n / n!)``."""
    return 0.5 * (log_gamma(gp + 1 + n) - log_gamma(gp + 1) - log_gamma(n + 1))


def _check_gp(gamma_prime: float) -> float:
    if not gamma_prime > 0:
        raise DomainError(f"gamma_prime must be > 0, got {gamma_prime!r}")
    return float(gamma_prime)


def _hyp_table(n_max: int, gp: float, theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    return hyp2f1_terminating_table(n_max, gp / 2 + 1, gp + 1, 1 - np.exp(1j * theta))


def circular_jacobi(n: int, gamma_prime: float, theta):
    """``g_n(e^{i theta}) = (gp+1)_n / n! * 2F1(-n, gp/2+1; gp+1; 1-e^{i theta})``."""
    n = int(n)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    gp = _check_gp(gamma_prime)
    f = _hyp_table(n, gp, theta)[n]
    return _scalarize(math.exp(2 * _ket_log_scale(n, gp)) * f)


def ket(n: int, gamma_prime: float, theta):
    """Orthonormalized circular Jacobi function ``sqrt(n!/(gp+1)_n) g_n``."""
    n = int(n)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    gp = _check_gp(gamma_prime)
    f = _hyp_table(n, gp, theta)[n]
    return _scalarize(math.exp(_ket_log_scale(n, gp)) * f)


def ket_table(n_max: int, gamma_prime: float, theta) -> np.ndarray:
    """Kets ``0..n_max`` at ``theta``; shape ``(n_max + 1,) + shape(theta)``."""
    gp = _check_gp(gamma_prime)
    f = _hyp_table(n_max, gp, theta)
    scale = np.array([math.exp(_ket_log_scale(n, gp)) for n in range(n_max + 1)])
    return scale.reshape((-1,) + (1,) * (f.ndim - 1)) * f


def ket_combination(coeffs, gamma_prime: float):
    """Circle function ``theta -> sum_n coeffs[n] ket_n(theta)``."""
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.ndim != 1 or coeffs.size == 0:
        raise ParameterError("coeffs must be a non-empty 1-D sequence")
    gp = _check_gp(gamma_prime)

    def phi(theta):
        table = ket_table(coeffs.size - 1, gp, theta)
        return np.tensordot(coeffs, table, axes=1)

    return phi
