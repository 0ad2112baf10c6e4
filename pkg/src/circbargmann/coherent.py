"""Reproducing-kernel diagonals and coherent states, closed form and series."""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .bases import ModelParams, check_in_disk, ket_table, phi_bergman, phi_eigen
from .errors import ConvergenceError, DomainError
from .quadrature import CircleRule, norm_sq
from .specfun import hyp2f1_terminating, log_gamma

__all__ = [
    "CoherentState",
    "SeriesResult",
    "kernel_diag",
    "kernel_partial_sum",
    "circle_kernel",
    "cs_closed",
    "cs_closed_m",
    "cs_series",
    "cs_norm_sq",
]

SERIES_TOL = 1e-12
SERIES_RUN = 5
SERIES_N_MAX = 4000

# |arg| of a principal-branch base must stay below pi - BRANCH_MARGIN
BRANCH_MARGIN = 1e-9


class SeriesResult(NamedTuple):
    value: complex
    n_terms: int


class CoherentState:
    """The state ``|z; gamma, m>`` as a circle function ``theta -> <e^{i theta}|z>``."""

    def __init__(self, params: ModelParams, z: complex):
        self.params = params
        self.z = complex(check_in_disk(z))

    def __call__(self, theta):
        return cs_closed_m(self.params, self.z, theta)

    def __repr__(self):
        return f"CoherentState(params={self.params!r}, z={self.z!r})"


def kernel_diag(params: ModelParams, z):
    """``K(z, z) = (gamma - 2m)/pi * (1 - |z|^2)^(-1-gamma)``."""
    z = check_in_disk(z)
    out = params.gamma_prime / math.pi * (1 - np.abs(z) ** 2) ** (-1 - params.gamma)
    return out[()] if np.ndim(out) == 0 else out


def kernel_partial_sum(params: ModelParams, z, n_terms: int):
    """``sum_{n < n_terms} |Phi_n(z)|^2`` for the level-``m`` basis."""
    z = check_in_disk(z)
    total = np.zeros(z.shape)
    for n in range(n_terms):
        total = total + np.abs(_basis(n, params, z)) ** 2
    return total[()] if total.ndim == 0 else total


def _basis(n, params, z):
    if params.m == 0:
        return phi_bergman(n, params.gamma, z)
    return phi_eigen(n, params, z)


def _check_branch(base) -> None:
    if np.any(np.abs(np.angle(base)) > math.pi - BRANCH_MARGIN):
        raise DomainError("principal-branch base too close to the cut")


def _broadcast(z, theta):
    z = check_in_disk(z)
    theta = np.asarray(theta, dtype=float)
    return np.broadcast_arrays(z, theta)


def cs_closed(gamma: float, z, theta):
    """``(1-|z|^2)^((1+g)/2) (1-z)^(-g/2) (1 - z e^{i theta})^(-1-g/2)``.

    ``z`` and ``theta`` broadcast against each other.
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma!r}")
    z, theta = _broadcast(z, theta)
    b1 = 1 - z
    b2 = 1 - z * np.exp(1j * theta)
    _check_branch(b1)
    _check_branch(b2)
    r = 1 - np.abs(z) ** 2
    out = r ** ((1 + gamma) / 2) * b1 ** (-gamma / 2) * b2 ** (-1 - gamma / 2)
    return out[()] if out.ndim == 0 else out


def circle_kernel(params: ModelParams, z, theta):
    r"""The angle-dependent factor shared by the level-``m`` states and transform.

    .. math::
        (1 - z e^{i\theta})^{-\gamma/2-1}
        \Big(\frac{(\bar z-1)(1-z e^{i\theta})}{1-|z|^2}\Big)^m
        {}_2F_1\Big(-m, \tfrac{\gamma}{2}-m+1; 1+\gamma-2m;
        \frac{(1-|z|^2)(1-e^{i\theta})}{(1-\bar z)(1-z e^{i\theta})}\Big)

    Evaluated as written; every factor is finite at ``z = 0``.
    """
    z, theta = _broadcast(z, theta)
    gamma, m = params.gamma, params.m
    e = np.exp(1j * theta)
    b = 1 - z * e
    _check_branch(b)
    out = b ** (-gamma / 2 - 1)
    if m:
        r = 1 - np.abs(z) ** 2
        zbar = np.conj(z)
        x = r * (1 - e) / ((1 - zbar) * b)
        out = out * ((zbar - 1) * b / r) ** m
        out = out * hyp2f1_terminating(m, gamma / 2 - m + 1, 1 + gamma - 2 * m, x)
    return out


def cs_closed_m(params: ModelParams, z, theta):
    """Closed-form wave function ``<e^{i theta} | z; gamma, m>``.

    Equals :func:`cs_closed` when ``m = 0``.
    """
    z, theta = _broadcast(z, theta)
    gamma, m = params.gamma, params.m
    b1 = 1 - z
    _check_branch(b1)
    log_pre = 0.5 * (log_gamma(gamma - m + 1) - log_gamma(m + 1) - log_gamma(gamma - 2 * m + 1))
    r = 1 - np.abs(z) ** 2
    out = (
        math.exp(log_pre)
        * r ** ((gamma + 1) / 2)
        * b1 ** (-gamma / 2)
        * circle_kernel(params, z, theta)
    )
    return out[()] if out.ndim == 0 else out


def cs_series(
    params: ModelParams,
    z: complex,
    theta: float,
    tol: float = SERIES_TOL,
    n_max: int = SERIES_N_MAX,
) -> SeriesResult:
    """Coherent state from its defining expansion ``K^(-1/2) sum_n Phi_n(z) ket_n``.

    Summation stops once ``SERIES_RUN`` consecutive terms are each below
    ``tol * |partial sum|``; ``n_terms`` counts the terms before that run.
    A single small term is not trusted because ket values oscillate in ``n``.
    """
    if not tol > 0:
        raise ValueError("tol must be > 0")
    z = complex(check_in_disk(z))
    theta = float(theta)
    gp = params.gamma_prime
    total = 0j
    run = 0
    block = 128
    start = 0
    while start <= n_max:
        stop = min(2 * block, n_max + 1) if start else min(block, n_max + 1)
        kets = ket_table(stop - 1, gp, theta)
        for n in range(start, stop):
            term = complex(_basis(n, params, z)) * kets[n]
            total += term
            if abs(term) < tol * abs(total):
                run += 1
                if run == SERIES_RUN:
                    value = total / math.sqrt(kernel_diag(params, z))
                    return SeriesResult(complex(value), n + 1 - SERIES_RUN)
            else:
                run = 0
        start = stop
        block = stop
    raise ConvergenceError(
        f"cs_series did not converge within {n_max} terms at |z|={abs(z):.6g}"
    )


def cs_norm_sq(params: ModelParams, z: complex, rule: CircleRule) -> float:
    """``<xi|xi>`` of the closed-form state over a circle rule for ``gamma - 2m``."""
    if not math.isclose(rule.gamma, params.gamma_prime, rel_tol=0, abs_tol=1e-14):
        raise ValueError(
            f"circle rule built for gamma={rule.gamma}, need gamma-2m={params.gamma_prime}"
        )
    return norm_sq(rule, cs_closed_m(params, z, rule.nodes))
