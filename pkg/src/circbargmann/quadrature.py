"""Quadrature rules for the circle measure dsigma_gamma and the weighted disk.

Circle: tanh-sinh on (0, 2*pi) with the normalized density

    dsigma_gamma(theta) = 2^g Gamma(g/2+1)^2 / Gamma(g+1) * sin(theta/2)^g dtheta / (2 pi)

folded into the weights, so the total mass is 1.

Disk: polar tensor rule for (1 - |z|^2)^(gamma-1) dmu(z), Gauss-Jacobi in
s = |z|^2 and uniform in the angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError
from .specfun import log_gamma

__all__ = [
    "CircleFunction",
    "CircleRule",
    "DiskRule",
    "DEFAULT_CIRCLE_LEVEL",
    "DEFAULT_DISK_SIZE",
    "sigma_log_constant",
    "sigma_density",
    "build_circle_rule",
    "gauss_jacobi",
    "build_disk_rule",
    "inner_product",
    "norm_sq",
]

CircleFunction = Callable[[np.ndarray], np.ndarray]
"""Vectorized evaluator ``theta -> phi(e^{i theta})``."""

DEFAULT_CIRCLE_LEVEL = 11
DEFAULT_DISK_SIZE = (32, 64)

# tanh-sinh: t in [-T, T], step h = 4 / 2**level (about 2**(level+1) nodes).
_TS_T_MAX = 4.0
_TS_H_SCALE = 4.0


@dataclass(frozen=True)
class CircleRule:
    """Nodes ``theta_k`` in (0, 2 pi) and weights for ``dsigma_gamma``."""

    gamma: float
    level: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class DiskRule:
    """Nodes ``z_j`` in the unit disk and weights for ``(1-|z|^2)^(gamma-1) dmu``.

    ``m`` shifts the radial Gauss-Jacobi weight to ``(1-s)^(gamma-2m-1)``;
    the missing ``(1-s)^(2m)`` is put back into the weights, so the rule
    still integrates against the same measure but is exact for the
    ``(1-|z|^2)^(-2m)`` growth of the level-``m`` eigenfunctions.
    """

    gamma: float
    m: int
    n_radial: int
    n_angular: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return self.nodes.size


Rule = Union[CircleRule, DiskRule]


def sigma_log_constant(gamma: float) -> float:
    """``ln(2^g Gamma(g/2+1)^2 / (Gamma(g+1) 2 pi))``."""
    return (
        gamma * math.log(2.0)
        + 2.0 * log_gamma(gamma / 2 + 1)
        - log_gamma(gamma + 1)
        - math.log(2 * math.pi)
    )


def sigma_density(gamma: float, theta):
    """Density of ``dsigma_gamma`` with respect to ``dtheta``."""
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma!r}")
    theta = np.asarray(theta, dtype=float)
    if np.any((theta < 0) | (theta > 2 * math.pi)):
        raise DomainError("theta must lie in [0, 2*pi]")
    s = np.abs(np.sin(theta / 2))
    with np.errstate(divide="ignore"):
        out = np.exp(sigma_log_constant(gamma) + gamma * np.log(s))
    return out[()] if out.ndim == 0 else out


def build_circle_rule(gamma: float, level: int = DEFAULT_CIRCLE_LEVEL) -> CircleRule:
    """Tanh-sinh rule for ``dsigma_gamma`` on (0, 2 pi).

    The map ``theta = pi (1 + tanh(pi/2 sinh t))`` sends the trapezoid rule
    in ``t`` with step ``4 / 2**level`` to nodes clustering double
    exponentially at both ends, where ``sin(theta/2)^gamma`` vanishes.
    Distances to the nearest endpoint are formed directly, never as
    ``2 pi - theta``, so the density keeps full precision near the ends.
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma!r}")
    level = int(level)
    if level < 1:
        raise DomainError(f"level must be >= 1, got {level}")
    h = _TS_H_SCALE / 2.0**level
    t = np.arange(0, int(math.floor(_TS_T_MAX / h)) + 1) * h
    u = 0.5 * math.pi * np.sinh(t)
    # distance of the t >= 0 node from 2*pi (mirror node sits at the same distance from 0)
    delta = 2 * math.pi / (np.exp(2 * u) + 1)
    dtheta = h * 0.5 * math.pi**2 * np.cosh(t) / np.cosh(u) ** 2
    with np.errstate(divide="ignore", under="ignore"):
        w = dtheta * np.exp(sigma_log_constant(gamma) + gamma * np.log(np.sin(delta / 2)))
    # 2*pi - delta must stay < 2*pi in floating point
    keep = (w > 0) & (delta > 4 * math.pi * np.finfo(float).eps)
    keep[0] = True
    delta, w = delta[keep], w[keep]
    nodes = np.concatenate([delta[:0:-1], 2 * math.pi - delta])
    weights = np.concatenate([w[:0:-1], w])
    return CircleRule(gamma=float(gamma), level=level, nodes=nodes, weights=weights)


def gauss_jacobi(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Jacobi nodes/weights on [-1, 1] for ``(1-x)^alpha (1+x)^beta``.

    Golub-Welsch: eigen-decomposition of the symmetric tridiagonal Jacobi
    matrix of the monic three-term recurrence.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (alpha > -1 and beta > -1):
        raise DomainError("Jacobi exponents must exceed -1")
    a, b = float(alpha), float(beta)
    k = np.arange(n, dtype=float)
    ab = a + b
    s = 2 * k + ab
    with np.errstate(divide="ignore", invalid="ignore"):
        diag = (b * b - a * a) / (s * (s + 2))
    diag[0] = (b - a) / (ab + 2)
    kk = np.arange(1, n, dtype=float)
    s1 = 2 * kk + ab
    with np.errstate(divide="ignore", invalid="ignore"):
        off2 = 4 * kk * (kk + a) * (kk + b) * (kk + ab) / (s1**2 * (s1 + 1) * (s1 - 1))
    if n > 1:
        # k = 1 with a + b = -1 is a removable 0/0
        off2[0] = 4 * (1 + a) * (1 + b) / ((2 + ab) ** 2 * (3 + ab))
    nodes, vecs = eigh_tridiagonal(diag, np.sqrt(off2))
    log_mu0 = (ab + 1) * math.log(2.0) + log_gamma(a + 1) + log_gamma(b + 1) - log_gamma(ab + 2)
    weights = math.exp(log_mu0) * vecs[0] ** 2
    return nodes, weights


def build_disk_rule(
    gamma: float,
    n_radial: int = DEFAULT_DISK_SIZE[0],
    n_angular: int = DEFAULT_DISK_SIZE[1],
    m: int = 0,
) -> DiskRule:
    """Polar tensor rule for ``(1-|z|^2)^(gamma-1) dmu(z)`` on the unit disk.

    With ``z = sqrt(s) e^{i a}`` the measure is ``(1-s)^(gamma-1) ds da / 2``.
    Radial nodes come from Gauss-Jacobi in ``s`` with weight
    ``(1-s)^(gamma-2m-1)``, exact for ``(1-s)^(2m) p(s)`` with ``deg p <=
    2 n_radial - 1``; angular nodes are uniform, exact for trigonometric
    polynomials of degree below ``n_angular``.
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma!r}")
    m = int(m)
    if m < 0 or not gamma - 2 * m > 0:
        raise DomainError(f"need gamma - 2m > 0, got gamma={gamma}, m={m}")
    if int(n_radial) < 1 or int(n_angular) < 1:
        raise DomainError("n_radial and n_angular must be >= 1")
    n_radial, n_angular = int(n_radial), int(n_angular)
    a = gamma - 2 * m - 1
    x, wx = gauss_jacobi(n_radial, a, 0.0)
    s = 0.5 * (x + 1.0)
    one_minus_s = 0.5 * (1.0 - x)
    # (1-x)^a dx = 2^(a+1) (1-s)^a ds
    ws = wx * 0.5 ** (a + 1) * one_minus_s ** (2 * m)
    angles = 2 * math.pi * np.arange(n_angular) / n_angular
    nodes = (np.sqrt(s)[:, None] * np.exp(1j * angles)[None, :]).ravel()
    weights = np.repeat(0.5 * ws * (2 * math.pi / n_angular), n_angular)
    return DiskRule(
        gamma=float(gamma),
        m=m,
        n_radial=n_radial,
        n_angular=n_angular,
        nodes=nodes,
        weights=weights,
    )


def _values(rule: Rule, f) -> np.ndarray:
    vals = f(rule.nodes) if callable(f) else f
    vals = np.asarray(vals, dtype=complex)
    if vals.shape[-1:] != rule.nodes.shape:
        raise ValueError(
            f"function values have shape {vals.shape}, rule has {rule.nodes.size} nodes"
        )
    return vals


def inner_product(rule: Rule, f, g) -> complex:
    """``<f, g> = sum_k w_k conj(f(node_k)) g(node_k)``.

    ``f``/``g`` are callables on the node array or precomputed node values.
    """
    fv = _values(rule, f)
    gv = _values(rule, g)
    return complex(np.sum(rule.weights * np.conj(fv) * gv))


def norm_sq(rule: Rule, f) -> float:
    """``<f, f>`` as a real number."""
    fv = _values(rule, f)
    return float(np.sum(rule.weights * (fv.real**2 + fv.imag**2)))
