"""Circular Bargmann transforms realized on a circle quadrature rule.

Both transforms are antilinear: the circle function enters conjugated, so
``B[ket_n] = Phi_n`` and ``B[a f + b g] = conj(a) B[f] + conj(b) B[g]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bases import ModelParams, check_in_disk
from .coherent import circle_kernel
from .errors import DomainError, ParameterError
from .quadrature import CircleRule, DiskRule, norm_sq
from .specfun import log_gamma

__all__ = [
    "DiskGrid",
    "polar_grid",
    "bargmann",
    "bargmann_m",
    "transform",
    "transform_grid",
    "isometry_defect",
]

# complex entries per kernel block
_BLOCK_ENTRIES = 1 << 21


@dataclass(frozen=True)
class DiskGrid:
    """Complex samples ``values[j]`` at disk points ``points[j]``."""

    points: np.ndarray
    values: np.ndarray
    params: ModelParams
    provenance: str = ""

    def __post_init__(self):
        points = np.asarray(self.points, dtype=complex).ravel()
        values = np.asarray(self.values, dtype=complex).ravel()
        if points.shape != values.shape:
            raise ValueError(f"{points.size} points but {values.size} values")
        if np.any(np.abs(points) >= 1):
            raise DomainError("grid points must satisfy |z| < 1")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.points.size


def polar_grid(n_radial: int, n_angular: int, max_radius: float) -> np.ndarray:
    """Points ``r_i e^{2 pi i j / n_angular}`` with ``r_i = max_radius (i+1)/n_radial``.

    Ordered radius-major. The origin is not included.
    """
    if n_radial < 1 or n_angular < 1:
        raise ValueError("grid counts must be >= 1")
    if not 0 < max_radius < 1:
        raise DomainError(f"max_radius must lie in (0, 1), got {max_radius}")
    radii = max_radius * np.arange(1, n_radial + 1) / n_radial
    angles = 2 * math.pi * np.arange(n_angular) / n_angular
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


def _conj_weighted(phi, rule: CircleRule) -> np.ndarray:
    vals = phi(rule.nodes) if callable(phi) else phi
    vals = np.asarray(vals, dtype=complex)
    if vals.shape != rule.nodes.shape:
        raise ValueError(f"phi gave shape {vals.shape} on {rule.nodes.size} nodes")
    if not np.all(np.isfinite(vals)):
        raise ValueError("phi is not finite on the rule nodes")
    return rule.weights * np.conj(vals)


def _check_rule(rule: CircleRule, gamma: float) -> None:
    if not math.isclose(rule.gamma, gamma, rel_tol=0, abs_tol=1e-14):
        raise ParameterError(f"circle rule built for gamma={rule.gamma}, transform needs {gamma}")


def _blocked(kernel, z: np.ndarray, theta: np.ndarray, v: np.ndarray) -> np.ndarray:
    flat = z.ravel()
    out = np.empty(flat.shape, dtype=complex)
    step = max(1, _BLOCK_ENTRIES // max(1, theta.size))
    for i in range(0, flat.size, step):
        zb = flat[i : i + step, None]
        out[i : i + step] = kernel(zb, theta[None, :]) @ v
    return out.reshape(z.shape)


def bargmann(gamma: float, phi, z, rule: CircleRule):
    """Lowest-level transform of ``phi`` at ``z`` (scalar or array).

    ``sqrt(gamma/pi) (1-z)^(-gamma/2) sum_k w_k (1 - z e^{i theta_k})^(-1-gamma/2) conj(phi_k)``
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma!r}")
    _check_rule(rule, gamma)
    z = check_in_disk(z)
    v = _conj_weighted(phi, rule)

    def kernel(zb, th):
        return (1 - zb * np.exp(1j * th)) ** (-1 - gamma / 2)

    s = _blocked(kernel, z, rule.nodes, v)
    out = math.sqrt(gamma / math.pi) * (1 - z) ** (-gamma / 2) * s
    return out[()] if out.ndim == 0 else out


def bargmann_m(params: ModelParams, phi, z, rule: CircleRule):
    """Level-``m`` transform; ``rule`` must be built for ``gamma - 2m``.

    Prefactor ``sqrt(Gamma(gamma+1-m) / (pi m! Gamma(gamma-2m)))`` times
    ``(1-z)^(-gamma/2)`` times the weighted sum of :func:`circle_kernel`
    against ``conj(phi)``. The origin needs no special handling.
    """
    _check_rule(rule, params.gamma_prime)
    z = check_in_disk(z)
    gamma, m = params.gamma, params.m
    v = _conj_weighted(phi, rule)
    log_pre = 0.5 * (
        log_gamma(gamma + 1 - m) - math.log(math.pi) - log_gamma(m + 1) - log_gamma(gamma - 2 * m)
    )

    def kernel(zb, th):
        return circle_kernel(params, zb, th)

    s = _blocked(kernel, z, rule.nodes, v)
    out = math.exp(log_pre) * (1 - z) ** (-gamma / 2) * s
    return out[()] if out.ndim == 0 else out


def transform(params: ModelParams, phi, z, rule: CircleRule):
    """:func:`bargmann` when ``m = 0``, otherwise :func:`bargmann_m`."""
    if params.m == 0:
        return bargmann(params.gamma, phi, z, rule)
    return bargmann_m(params, phi, z, rule)


def transform_grid(params: ModelParams, phi, grid, rule: CircleRule) -> DiskGrid:
    """Transform sampled at every grid point, in input order."""
    points = np.asarray(grid, dtype=complex).ravel()
    bad = np.flatnonzero(~np.isfinite(points) | (np.abs(points) >= 1))
    if bad.size:
        i = int(bad[0])
        raise DomainError(f"grid point {i} ({points[i]}) is outside the open unit disk")
    values = transform(params, phi, points, rule) if points.size else np.empty(0, complex)
    label = "bargmann" if params.m == 0 else "bargmann_m"
    return DiskGrid(points, values, params, provenance=label)


def isometry_defect(params: ModelParams, phi, c_rule: CircleRule, d_rule: DiskRule) -> float:
    """``| ||B phi||^2_disk - ||phi||^2_circle | / ||phi||^2_circle``.

    The disk norm integrates the transform sampled at every node of
    ``d_rule``; nothing about the image space is assumed.
    """
    if not math.isclose(d_rule.gamma, params.gamma, rel_tol=0, abs_tol=1e-14):
        raise ParameterError(f"disk rule built for gamma={d_rule.gamma}, need {params.gamma}")
    circle = norm_sq(c_rule, phi)
    if not circle > 0:
        raise ValueError("phi has zero norm on the circle rule")
    values = transform(params, phi, d_rule.nodes, c_rule)
    disk = norm_sq(d_rule, values)
    return abs(disk - circle) / circle
