"""Numerical certification of the identities behind the transforms.

Each check produces a :class:`VerificationReport`; :func:`run_suite` runs
all of them for a :class:`SuiteConfig` and never stops at a failure.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import bases, coherent, quadrature, specfun, transforms
from .bases import ModelParams
from .errors import ConfigError, DomainError, ParameterError

log = logging.getLogger(__name__)

__all__ = [
    "TOLERANCES",
    "VerificationReport",
    "SuiteConfig",
    "landau_level",
    "apply_operator_fd",
    "eigen_residual",
    "eigen_defect",
    "resolution_gram",
    "run_suite",
]

TOLERANCES = {
    "circle_mass": 1e-10,
    "disk_mass": 1e-10,
    "gram_bergman": 1e-9,
    "eigen_basis_m0": 1e-12,
    "gram_eigen": 1e-8,
    "gram_kets": 1e-8,
    "series_vs_closed": 1e-9,
    "cs_normalization": 1e-8,
    "kernel_consistency": 1e-8,
    "basis_mapping": 1e-7,
    "isometry": 1e-5,
    "antilinearity": 1e-12,
    "m0_reduction": 1e-12,
    "eigen_basis": 1e-3,
    "eigen_order": 0.2,
    "eigen_transform": 1e-3,
    "eigen_transform_order": 0.2,
    "resolution_identity": 1e-6,
    "jacobi_hypergeometric": 1e-10,
    "jacobi_parity": 1e-10,
    "jacobi_power_form": 1e-10,
    "pochhammer_gamma": 1e-12,
    "hyp2f1_origin": 0.0,
}

# transform, quadrature and kernel checks
DEFAULT_PARAM_SETS = ((2.5, 0), (4.5, 0), (6.0, 1), (6.0, 2), (9.5, 3))
# series against closed form
DEFAULT_SERIES_SETS = ((4.5, 0), (6.0, 1), (6.0, 2), (9.5, 4))
# finite-difference eigen-equation checks
DEFAULT_EIGEN_SETS = ((6.0, 1), (6.0, 2), (9.5, 3))
DEFAULT_MASS_GAMMAS = (0.5, 2.5, 6.0, 9.5)
DEFAULT_BERGMAN_GAMMAS = (2.5, 6.0, 9.5)

# FD defects below this are rounding noise and carry no convergence-order signal.
_ORDER_FLOOR = 1e-7


@dataclass
class VerificationReport:
    identity_name: str
    params: dict
    max_defect: float
    tolerance: float
    passed: bool
    n_samples: int
    runtime_ms: int

    def __post_init__(self):
        self.max_defect = float(self.max_defect)
        ok = math.isfinite(self.max_defect) and self.max_defect <= self.tolerance
        if self.passed != ok:
            raise ValueError("passed must equal (max_defect <= tolerance)")

    def to_dict(self) -> dict:
        d = asdict(self)
        if not math.isfinite(d["max_defect"]):
            d["max_defect"] = None
        return d


def _as_params(p) -> ModelParams:
    if isinstance(p, ModelParams):
        return p
    gamma, m = p
    if float(gamma) == 2 * int(m):
        log.warning("gamma = 2m (gamma=%s, m=%s) is unsupported", gamma, m)
    try:
        return ModelParams(float(gamma), int(m))
    except ParameterError as exc:
        raise ConfigError(str(exc)) from exc


@dataclass
class SuiteConfig:
    """Settings for :func:`run_suite`.

    Each check family runs over its own parameter list: ``param_sets``
    (quadrature, kernel and transform checks), ``series_sets``,
    ``eigen_sets``, ``mass_gammas`` and ``bergman_gammas``. ``checks``
    restricts the run to the named identities (all when ``None``).
    :meth:`single` builds a configuration that runs everything at one
    ``(gamma, m)``.

    ``check_level`` and ``check_disk`` size the rules used wherever the
    transform or the coherent states are integrated over the disk; the
    disk size keeps the outermost radial node far enough from the circle
    for a circle rule of ``check_level`` to resolve the kernel there,
    while staying exact for the polynomial degrees involved.
    """

    param_sets: Sequence = DEFAULT_PARAM_SETS
    series_sets: Sequence = DEFAULT_SERIES_SETS
    eigen_sets: Sequence = DEFAULT_EIGEN_SETS
    mass_gammas: Sequence[float] = DEFAULT_MASS_GAMMAS
    bergman_gammas: Sequence[float] = DEFAULT_BERGMAN_GAMMAS
    seed: int = 42
    circle_level: int = quadrature.DEFAULT_CIRCLE_LEVEL
    disk_size: tuple = quadrature.DEFAULT_DISK_SIZE
    check_level: int = 12
    check_disk: tuple = (8, 24)
    fd_step: float = 1e-3
    series_tol: float = coherent.SERIES_TOL
    jacobi_draws: int = 500
    isometry_draws: int = 3
    run_global: bool = True
    checks: Sequence[str] | None = None
    record_timing: bool = False
    tolerances: dict = field(default_factory=lambda: dict(TOLERANCES))

    def __post_init__(self):
        for name in ("param_sets", "series_sets", "eigen_sets"):
            setattr(self, name, tuple(_as_params(p) for p in getattr(self, name)))
        for name in ("mass_gammas", "bergman_gammas"):
            values = tuple(float(g) for g in getattr(self, name))
            if any(not (math.isfinite(g) and g > 0) for g in values):
                raise ConfigError(f"{name} must all be finite and > 0")
            setattr(self, name, values)
        for name in ("circle_level", "check_level", "jacobi_draws"):
            if int(getattr(self, name)) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if self.isometry_draws < 0:
            raise ConfigError("isometry_draws must be >= 0")
        if min(self.disk_size) < 1 or min(self.check_disk) < 1:
            raise ConfigError("disk sizes must be >= 1")
        if not 0 < self.fd_step < 0.1:
            raise ConfigError("fd_step must lie in (0, 0.1)")
        if not self.series_tol > 0:
            raise ConfigError("series_tol must be > 0")
        if self.checks is not None:
            self.checks = tuple(self.checks)
            bad = set(self.checks) - set(TOLERANCES)
            if bad:
                raise ConfigError(f"unknown check names: {sorted(bad)}")
        unknown = set(self.tolerances) - set(TOLERANCES)
        if unknown:
            raise ConfigError(f"unknown tolerance keys: {sorted(unknown)}")
        self.tolerances = {**TOLERANCES, **self.tolerances}

    @classmethod
    def single(cls, gamma: float, m: int = 0, **kwargs) -> "SuiteConfig":
        p = [(gamma, m)]
        kwargs.setdefault("mass_gammas", sorted({float(gamma), float(gamma) - 2 * m}))
        kwargs.setdefault("bergman_gammas", [gamma])
        return cls(param_sets=p, series_sets=p, eigen_sets=p, **kwargs)


def landau_level(params: ModelParams) -> float:
    """Hyperbolic Landau level ``4 m (gamma - m)``."""
    return 4.0 * params.m * (params.gamma - params.m)


def apply_operator_fd(gamma: float, F: Callable, z: complex, h: float) -> complex:
    r"""Finite-difference value of the magnetic Laplacian at ``z``.

    .. math::
        -4(1-|z|^2)\big[(1-|z|^2)\,\partial_z\partial_{\bar z}F
        - (\gamma+1)\,\bar z\,\partial_{\bar z}F\big]

    with ``d_z d_zbar = (F_xx + F_yy)/4`` and ``d_zbar = (F_x + i F_y)/2``,
    all by second-order central differences of step ``h``. ``F`` is called
    once on the five stencil points.
    """
    z = complex(z)
    if not h > 0:
        raise ValueError("h must be > 0")
    if abs(z) + 2 * h >= 1:
        raise DomainError(f"stencil at z={z}, h={h} leaves the unit disk")
    pts = np.array([z, z + h, z - h, z + 1j * h, z - 1j * h])
    f0, fxp, fxm, fyp, fym = np.asarray(F(pts), dtype=complex)
    fxx = (fxp - 2 * f0 + fxm) / h**2
    fyy = (fyp - 2 * f0 + fym) / h**2
    fx = (fxp - fxm) / (2 * h)
    fy = (fyp - fym) / (2 * h)
    dzdzb = 0.25 * (fxx + fyy)
    dzb = 0.5 * (fx + 1j * fy)
    r = 1 - abs(z) ** 2
    return complex(-4 * r * (r * dzdzb - (gamma + 1) * z.conjugate() * dzb))


def eigen_residual(params: ModelParams, F: Callable, z: complex, h: float) -> complex:
    """``(Delta F - eps_m F)(z) / F(z)``; raises if ``F(z)`` is nearly zero."""
    f = complex(np.asarray(F(np.array([complex(z)])))[0])
    if abs(f) < 1e-12:
        raise DomainError(f"function value {abs(f):.3g} at z={z} too small; pick another point")
    lhs = apply_operator_fd(params.gamma, F, z, h)
    return (lhs - landau_level(params) * f) / f


def eigen_defect(params: ModelParams, n: int, z: complex, h: float) -> float:
    """Relative eigen-equation defect of the ``n``-th basis function at ``z``."""

    def F(w):
        return bases.phi_eigen(n, params, w)

    return abs(eigen_residual(params, F, z, h))


def resolution_gram(params: ModelParams, funcs: Sequence, c_rule, d_rule) -> np.ndarray:
    """``G[a, b] = int_D K(z,z) <f_a|z> <z|f_b> dnu(z)`` by quadrature.

    ``<f|z> = int conj(f) <e^{i theta}|z> dsigma`` over ``c_rule`` with the
    closed-form states; the disk integral runs over ``d_rule``.
    """
    theta = c_rule.nodes
    vals = np.array([np.asarray(f(theta), dtype=complex) for f in funcs])
    vw = np.conj(vals) * c_rule.weights
    z = d_rule.nodes
    overlaps = np.empty((len(funcs), z.size), dtype=complex)
    step = max(1, (1 << 21) // theta.size)
    for i in range(0, z.size, step):
        zb = z[i : i + step, None]
        if params.m == 0:
            cs = coherent.cs_closed(params.gamma, zb, theta[None, :])
        else:
            cs = coherent.cs_closed_m(params, zb, theta[None, :])
        overlaps[:, i : i + step] = vw @ cs.T
    k = coherent.kernel_diag(params, z)
    return (overlaps * (d_rule.weights * k)) @ np.conj(overlaps).T


# --- suite -----------------------------------------------------------------


class _Runner:
    def __init__(self, config: SuiteConfig):
        self.cfg = config
        self.reports: list[VerificationReport] = []
        self._rules: dict = {}

    def circle(self, gamma, level):
        key = ("c", gamma, level)
        if key not in self._rules:
            self._rules[key] = quadrature.build_circle_rule(gamma, level)
        return self._rules[key]

    def disk(self, gamma, size, m=0):
        key = ("d", gamma, tuple(size), m)
        if key not in self._rules:
            self._rules[key] = quadrature.build_disk_rule(gamma, size[0], size[1], m=m)
        return self._rules[key]

    def rng(self, *key) -> np.random.Generator:
        return np.random.default_rng([self.cfg.seed, *key])

    def run(self, name: str, params: dict, fn: Callable[[], tuple[float, int]]):
        if self.cfg.checks is not None and name not in self.cfg.checks:
            return
        tol = self.cfg.tolerances[name]
        t0 = time.perf_counter()
        params = dict(params)
        try:
            defect, n = fn()
        except Exception as exc:  # the suite reports failures, it does not raise them
            log.exception("check %s failed to run", name)
            defect, n = math.inf, 0
            params["error"] = f"{type(exc).__name__}: {exc}"
        ms = int(round(1000 * (time.perf_counter() - t0))) if self.cfg.record_timing else 0
        defect = float(defect)
        if math.isnan(defect):
            defect = math.inf
        passed = math.isfinite(defect) and defect <= tol
        self.reports.append(VerificationReport(name, params, defect, tol, passed, n, ms))


def _pdict(p: ModelParams, **extra) -> dict:
    return {"gamma": p.gamma, "m": p.m, **extra}


def _rel(a, b) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    return np.abs(a - b) / np.maximum(np.maximum(np.abs(a), np.abs(b)), 1e-300)


def _coherent_grid():
    zs = [r * np.exp(1j * a) for r in (0.1, 0.4, 0.7) for a in (0.0, 2 * math.pi / 3, 4 * math.pi / 3)]
    thetas = (0.5, math.pi, 5.0)
    return zs, thetas


def _mapping_points(max_radius=0.8):
    ring = [r * np.exp(1j * (2 * math.pi * j / 8 + 0.3)) for r in (0.25, 0.5, max_radius) for j in range(8)]
    return np.array([0j] + ring)


def _eigen_points():
    # inside |z| < 0.3 the basis functions stay clear of their radial zeros,
    # where a relative defect is meaningless
    angles = 0.4 + 0.5 * math.pi * np.arange(4)
    return [r * np.exp(1j * a) for r in (0.2, 0.25, 0.3) for a in angles]


def _basis_fn(p: ModelParams, n: int):
    if p.m == 0:
        return lambda w: bases.phi_bergman(n, p.gamma, w)
    return lambda w: bases.phi_eigen(n, p, w)


def _check_masses(R: _Runner):
    cfg = R.cfg
    for g in cfg.mass_gammas:
        rule = R.circle(g, cfg.circle_level)
        R.run("circle_mass", {"gamma": g, "level": cfg.circle_level},
              lambda: (abs(rule.weights.sum() - 1.0), 1))
        drule = R.disk(g, cfg.disk_size)
        R.run("disk_mass", {"gamma": g, "disk": list(cfg.disk_size)},
              lambda: (abs(drule.weights.sum() * g / math.pi - 1.0), 1))


def _gram_defect(rule, funcs) -> float:
    vals = np.array([np.asarray(f(rule.nodes), dtype=complex) for f in funcs])
    gram = (np.conj(vals) * rule.weights) @ vals.T
    return float(np.abs(gram - np.eye(len(funcs))).max())


def _check_bergman(R: _Runner, gamma: float):
    cfg = R.cfg
    drule = R.disk(gamma, cfg.disk_size)
    funcs = [(lambda w, n=n: bases.phi_bergman(n, gamma, w)) for n in range(13)]
    R.run("gram_bergman", {"gamma": gamma, "n_max": 12, "disk": list(cfg.disk_size)},
          lambda: (_gram_defect(drule, funcs), 169))

    def eigen_m0():
        pts = transforms.polar_grid(10, 10, 0.95)
        p0 = ModelParams(gamma, 0)
        worst = 0.0
        for n in range(13):
            a = bases.phi_eigen(n, p0, pts)
            b = bases.phi_bergman(n, gamma, pts)
            worst = max(worst, float(np.max(_rel(a, b))))
        return worst, 13 * pts.size

    R.run("eigen_basis_m0", {"gamma": gamma, "m": 0, "n_max": 12}, eigen_m0)


def _check_params(R: _Runner, p: ModelParams):
    cfg = R.cfg
    gp = p.gamma_prime
    crule = R.circle(gp, cfg.circle_level)
    drule = R.disk(p.gamma, cfg.disk_size, p.m)

    R.run("gram_eigen", _pdict(p, n_max=10, disk=list(cfg.disk_size)),
          lambda: (_gram_defect(drule, [_basis_fn(p, n) for n in range(11)]), 121))
    R.run("gram_kets", _pdict(p, n_max=12, level=cfg.circle_level),
          lambda: (_gram_defect(crule, [(lambda t, n=n: bases.ket(n, gp, t)) for n in range(13)]),
                   169))

    zs, _ = _coherent_grid()

    def normalization():
        d = [abs(coherent.cs_norm_sq(p, z, crule) - 1.0) for z in zs]
        return max(d), len(d)

    R.run("cs_normalization", _pdict(p, level=cfg.circle_level), normalization)

    def kernel_consistency():
        z = np.array(zs)
        partial = coherent.kernel_partial_sum(p, z, 400)
        return float(np.max(_rel(partial, coherent.kernel_diag(p, z)))), z.size

    R.run("kernel_consistency", _pdict(p, n_terms=400, max_radius=0.7), kernel_consistency)

    trule = R.circle(gp, cfg.check_level)
    tdisk = R.disk(p.gamma, cfg.check_disk, p.m)
    pts = _mapping_points()

    def basis_mapping():
        worst = 0.0
        for n in range(7):
            b = transforms.transform(p, lambda t, n=n: bases.ket(n, gp, t), pts, trule)
            worst = max(worst, float(np.abs(b - _basis_fn(p, n)(pts)).max()))
        return worst, 7 * pts.size

    R.run("basis_mapping", _pdict(p, n_max=6, max_radius=0.8, level=cfg.check_level), basis_mapping)

    def isometry():
        rng = R.rng(1, int(round(p.gamma * 1000)), p.m)
        combos = [np.array([1.0]), np.array([0.0, -2.0, 0.0, 1.0])]
        for _ in range(cfg.isometry_draws):
            combos.append(rng.normal(size=9) + 1j * rng.normal(size=9))
        d = [transforms.isometry_defect(p, bases.ket_combination(c, gp), trule, tdisk) for c in combos]
        return max(d), len(d)

    R.run("isometry", _pdict(p, level=cfg.check_level, disk=list(cfg.check_disk),
                             max_degree=8, draws=cfg.isometry_draws, seed=cfg.seed), isometry)

    def antilinearity():
        rng = R.rng(2, int(round(p.gamma * 1000)), p.m)
        f = bases.ket_combination(rng.normal(size=5) + 1j * rng.normal(size=5), gp)
        g = bases.ket_combination(rng.normal(size=7) + 1j * rng.normal(size=7), gp)
        a, b = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
        lhs = transforms.transform(p, lambda t: a * f(t) + b * g(t), pts, trule)
        rhs = (np.conj(a) * transforms.transform(p, f, pts, trule)
               + np.conj(b) * transforms.transform(p, g, pts, trule))
        return float(np.abs(lhs - rhs).max() / np.abs(lhs).max()), pts.size

    R.run("antilinearity", _pdict(p, level=cfg.check_level, seed=cfg.seed), antilinearity)

    def resolution():
        funcs = [(lambda t, n=n: bases.ket(n, gp, t)) for n in range(5)]
        G = resolution_gram(p, funcs, trule, tdisk)
        return float(np.abs(G - np.eye(5)).max()), 25

    R.run("resolution_identity", _pdict(p, level=cfg.check_level, disk=list(cfg.check_disk)),
          resolution)


def _check_m0(R: _Runner, gamma: float):
    cfg = R.cfg
    pts = _mapping_points()

    def m0_reduction():
        rule = R.circle(gamma, cfg.check_level)
        f = bases.ket_combination(R.rng(3, int(round(gamma * 1000))).normal(size=6), gamma)
        a = transforms.bargmann(gamma, f, pts, rule)
        b = transforms.bargmann_m(ModelParams(gamma, 0), f, pts, rule)
        return float(np.max(_rel(a, b))), pts.size

    R.run("m0_reduction", {"gamma": gamma, "m": 0, "level": cfg.check_level}, m0_reduction)


def _check_series(R: _Runner, p: ModelParams):
    cfg = R.cfg
    zs, thetas = _coherent_grid()

    def series_vs_closed():
        worst = 0.0
        for z in zs:
            for th in thetas:
                s = coherent.cs_series(p, z, th, tol=cfg.series_tol).value
                c = coherent.cs_closed_m(p, z, th)
                worst = max(worst, abs(s - c) / abs(c))
        return worst, len(zs) * len(thetas)

    R.run("series_vs_closed", _pdict(p, series_tol=cfg.series_tol), series_vs_closed)


def _check_eigen(R: _Runner, p: ModelParams):
    cfg = R.cfg
    h = cfg.fd_step
    epts = _eigen_points()

    def eigen_basis():
        d = [eigen_defect(p, n, z, h) for n in range(6) for z in epts]
        return max(d), len(d)

    R.run("eigen_basis", _pdict(p, n_max=5, h=h), eigen_basis)

    def eigen_order():
        orders = []
        for n in range(6):
            for z in epts:
                d1 = eigen_defect(p, n, z, h)
                d2 = eigen_defect(p, n, z, h / 2)
                if d1 > _ORDER_FLOOR:
                    orders.append(math.log2(d1 / d2))
        if not orders:
            return 0.0, 0
        return max(abs(o - 2.0) for o in orders), len(orders)

    R.run("eigen_order", _pdict(p, h_pair=[h, h / 2], floor=_ORDER_FLOOR), eigen_order)

    trule = R.circle(p.gamma_prime, cfg.check_level)

    def eigen_transform():
        def F(w):
            return transforms.transform(p, lambda t: bases.ket(1, p.gamma_prime, t), w, trule)

        d = [abs(eigen_residual(p, F, z, h)) for z in epts[::2]]
        return max(d), len(d)

    R.run("eigen_transform", _pdict(p, h=h, level=cfg.check_level), eigen_transform)

    def eigen_transform_order():
        def F(w):
            return transforms.transform(p, lambda t: bases.ket(1, p.gamma_prime, t), w, trule)

        orders = []
        for z in epts[::2]:
            d1 = abs(eigen_residual(p, F, z, h))
            d2 = abs(eigen_residual(p, F, z, h / 2))
            if d1 > _ORDER_FLOOR:
                orders.append(math.log2(d1 / d2))
        if not orders:
            return 0.0, 0
        return max(abs(o - 2.0) for o in orders), len(orders)

    R.run("eigen_transform_order", _pdict(p, h_pair=[h, h / 2], floor=_ORDER_FLOOR,
                                          level=cfg.check_level), eigen_transform_order)


def _draw_model(rng) -> tuple[float, int, int]:
    gamma = rng.uniform(0.5, 20.0)
    m = int(rng.integers(0, math.ceil(gamma / 2)))
    n = int(rng.integers(0, 11))
    return gamma, m, n


def jacobi_hypergeometric_defects(rng, draws: int) -> np.ndarray:
    """Relative defects of the hypergeometric form of ``P_n^{(a, b-n)}`` at ``u = 2e^{-i theta} - 1``."""
    out = np.empty(draws)
    for i in range(draws):
        n = int(rng.integers(0, 11))
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(-5.0, 5.0)
        u = 2 * np.exp(-1j * rng.uniform(0.01, 2 * math.pi - 0.01)) - 1
        lhs = specfun.jacobi_p(n, a, b - n, u)
        rhs = (specfun.binom(n + a, n) * ((1 + u) / 2) ** n
               * specfun.hyp2f1_terminating(n, -b, a + 1, (u - 1) / (u + 1)))
        out[i] = _rel(lhs, rhs)
    return out


def jacobi_parity_defects(rng, draws: int) -> np.ndarray:
    """``P_n^{(m-n, g')}(1-2r^2)`` against ``(-1)^n P_n^{(g', m-n)}(2r^2-1)``."""
    out = np.empty(draws)
    for i in range(draws):
        gamma, m, n = _draw_model(rng)
        gp = gamma - 2 * m
        r2 = rng.uniform(0.01, 0.99) ** 2
        lhs = specfun.jacobi_p(n, m - n, gp, 1 - 2 * r2)
        rhs = (-1) ** n * specfun.jacobi_p(n, gp, m - n, 2 * r2 - 1)
        out[i] = _rel(lhs, rhs)
    return out


def jacobi_power_form_defects(rng, draws: int) -> np.ndarray:
    """``P_n^{(g', m-n)}(2r^2-1)`` against ``(g'+1)_n/n! r^{2n} 2F1(-n,-m;g'+1;(r^2-1)/r^2)``."""
    out = np.empty(draws)
    for i in range(draws):
        gamma, m, n = _draw_model(rng)
        gp = gamma - 2 * m
        r2 = rng.uniform(0.1, 0.99) ** 2
        lhs = specfun.jacobi_p(n, gp, m - n, 2 * r2 - 1)
        rhs = (specfun.pochhammer(gp + 1, n) / math.factorial(n) * r2**n
               * specfun.hyp2f1_terminating(n, -m, gp + 1, (r2 - 1) / r2))
        out[i] = _rel(lhs, rhs)
    return out


def _check_global(R: _Runner):
    cfg = R.cfg
    k = cfg.jacobi_draws
    info = {"draws": k, "seed": cfg.seed}
    R.run("jacobi_hypergeometric", info, lambda: (jacobi_hypergeometric_defects(R.rng(10), k).max(), k))
    R.run("jacobi_parity", info, lambda: (jacobi_parity_defects(R.rng(11), k).max(), k))
    R.run("jacobi_power_form", info, lambda: (jacobi_power_form_defects(R.rng(12), k).max(), k))

    def poch():
        rng = R.rng(13)
        worst = 0.0
        for _ in range(k):
            a = rng.uniform(0.05, 50.0)
            n = int(rng.integers(0, 40))
            exact = math.exp(math.lgamma(a + n) - math.lgamma(a))
            worst = max(worst, abs(specfun.pochhammer(a, n) - exact) / exact)
        return worst, k

    R.run("pochhammer_gamma", info, poch)

    def origin():
        rng = R.rng(14)
        worst = 0.0
        for _ in range(k):
            n = int(rng.integers(0, 20))
            b, c = rng.uniform(-10, 10), rng.uniform(0.1, 10)
            worst = max(worst, abs(specfun.hyp2f1_terminating(n, b, c, 0.0) - 1.0))
        return worst, k

    R.run("hyp2f1_origin", info, origin)


def run_suite(config: SuiteConfig | None = None) -> list[VerificationReport]:
    """Run every check; report order follows the configuration order."""
    cfg = config if config is not None else SuiteConfig()
    R = _Runner(cfg)
    _check_masses(R)
    for g in cfg.bergman_gammas:
        _check_bergman(R, g)
    for p in cfg.param_sets:
        _check_params(R, p)
    for g in dict.fromkeys(p.gamma for p in cfg.param_sets):
        _check_m0(R, g)
    for p in cfg.series_sets:
        _check_series(R, p)
    for p in cfg.eigen_sets:
        _check_eigen(R, p)
    if cfg.run_global:
        _check_global(R)
    return R.reports


def failed(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return [r for r in reports if not r.passed]
