import math
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circbargmann.bases import ModelParams, ket, ket_combination, phi_bergman, phi_eigen
from circbargmann.errors import DomainError, ParameterError
from circbargmann.quadrature import build_circle_rule, build_disk_rule
from circbargmann.transforms import (
    DiskGrid,
    bargmann,
    bargmann_m,
    isometry_defect,
    polar_grid,
    transform,
    transform_grid,
)

ISOMETRY_SETS = [(2.5, 0), (4.5, 0), (6.0, 1), (6.0, 2), (9.5, 3)]
CHECK_LEVEL = 12
CHECK_DISK = (8, 24)


@lru_cache(maxsize=None)
def circle(gp, level=11):
    return build_circle_rule(gp, level)


@lru_cache(maxsize=None)
def disk(gamma, m):
    return build_disk_rule(gamma, *CHECK_DISK, m=m)


def points(max_r):
    pts = [0j] + [r * np.exp(1j * (0.3 + 2 * math.pi * k / 7))
                  for r in np.linspace(0.1, max_r, 5) for k in range(7)]
    return np.array(pts)


def k(n, gp):
    return lambda t: ket(n, gp, t)


class TestBargmann:
    def test_basis_mapping(self):
        gamma = 4.5
        z = points(0.8)
        for n in range(9):
            got = bargmann(gamma, k(n, gamma), z, circle(gamma))
            assert np.max(np.abs(got - phi_bergman(n, gamma, z))) <= 1e-8

    def test_origin(self):
        for gamma in (2.5, 4.5):
            got = bargmann(gamma, k(0, gamma), 0.0, circle(gamma))
            assert got == pytest.approx(math.sqrt(gamma / math.pi), abs=1e-10)

    def test_antilinear_example(self):
        gamma = 4.5
        z = points(0.8)
        f = ket_combination([1, 1j], gamma)
        exp = phi_bergman(0, gamma, z) - 1j * phi_bergman(1, gamma, z)
        assert np.max(np.abs(bargmann(gamma, f, z, circle(gamma)) - exp)) <= 1e-8

    def test_accepts_sampled_values(self):
        rule = circle(4.5)
        vals = ket(2, 4.5, rule.nodes)
        assert bargmann(4.5, vals, 0.3, rule) == bargmann(4.5, k(2, 4.5), 0.3, rule)

    def test_errors(self):
        with pytest.raises(ParameterError):
            bargmann(4.5, k(0, 4.5), 0.1, circle(2.5))
        with pytest.raises(DomainError):
            bargmann(4.5, k(0, 4.5), 1.0, circle(4.5))
        with pytest.raises(ValueError):
            bargmann(4.5, np.ones(3), 0.1, circle(4.5))


class TestBargmannM:
    def test_m0_reduction(self):
        z = points(0.9)
        for gamma in (2.5, 6.0):
            p = ModelParams(gamma, 0)
            f = ket_combination([0.5, -1j, 2.0, 0.25], gamma)
            a = bargmann_m(p, f, z, circle(gamma))
            b = bargmann(gamma, f, z, circle(gamma))
            assert np.max(np.abs(a - b)) <= 1e-12 * np.abs(b).max()

    @pytest.mark.parametrize("gamma,m,max_n,max_r,tol", [
        (6.0, 2, 6, 0.7, 1e-7), (6.0, 1, 6, 0.8, 1e-7), (9.5, 3, 6, 0.8, 1e-7),
    ])
    def test_basis_mapping(self, gamma, m, max_n, max_r, tol):
        p = ModelParams(gamma, m)
        z = points(max_r)
        for n in range(max_n + 1):
            got = bargmann_m(p, k(n, p.gamma_prime), z, circle(p.gamma_prime))
            assert np.max(np.abs(got - phi_eigen(n, p, z))) <= tol

    def test_origin(self):
        p = ModelParams(6.0, 1)
        assert abs(bargmann_m(p, k(0, 4.0), 0.0, circle(4.0))) <= 1e-12
        assert bargmann_m(p, k(1, 4.0), 0.0, circle(4.0)) == pytest.approx(
            phi_eigen(1, p, 0.0), abs=1e-10)

    def test_rule_mismatch(self):
        with pytest.raises(ParameterError):
            bargmann_m(ModelParams(6.0, 1), k(0, 6.0), 0.1, circle(6.0))

    def test_transform_dispatch(self):
        f = k(1, 4.5)
        assert transform(ModelParams(4.5, 0), f, 0.2, circle(4.5)) == bargmann(4.5, f, 0.2, circle(4.5))


class TestGrid:
    def test_empty(self):
        g = transform_grid(ModelParams(6.0, 1), k(0, 4.0), [], circle(4.0))
        assert len(g) == 0 and g.values.size == 0

    def test_single_point(self):
        p = ModelParams(6.0, 1)
        g = transform_grid(p, k(2, 4.0), [0.3 - 0.2j], circle(4.0))
        assert g.values[0] == bargmann_m(p, k(2, 4.0), 0.3 - 0.2j, circle(4.0))

    def test_polar_grid(self):
        p = ModelParams(6.0, 1)
        pts = polar_grid(11, 8, 0.8)
        assert pts.size == 88 and np.abs(pts).max() == pytest.approx(0.8)
        g = transform_grid(p, k(1, 4.0), pts, circle(4.0))
        np.testing.assert_array_equal(g.points, pts)
        assert np.max(np.abs(g.values - phi_eigen(1, p, pts))) <= 1e-7
        assert g.provenance == "bargmann_m" and g.params == p

    def test_provenance_m0(self):
        g = transform_grid(ModelParams(4.5, 0), k(1, 4.5), [0.1], circle(4.5))
        assert g.provenance == "bargmann"

    def test_bad_point_located(self):
        with pytest.raises(DomainError, match="grid point 2"):
            transform_grid(ModelParams(6.0, 1), k(0, 4.0), [0.1, 0.2, 1.5, 2.0], circle(4.0))

    def test_disk_grid_validation(self):
        p = ModelParams(6.0, 1)
        with pytest.raises(ValueError):
            DiskGrid([0.1, 0.2], [1.0], p)
        with pytest.raises(DomainError):
            DiskGrid([1.0], [1.0], p)

    def test_polar_grid_invalid(self):
        with pytest.raises(ValueError):
            polar_grid(0, 4, 0.5)
        with pytest.raises(DomainError):
            polar_grid(4, 4, 1.0)


class TestIsometry:
    def test_ket0_lowest(self):
        p = ModelParams(4.5, 0)
        assert isometry_defect(p, k(0, 4.5), circle(4.5, CHECK_LEVEL), disk(4.5, 0)) <= 1e-6

    def test_combination_level1(self):
        p = ModelParams(6.0, 1)
        f = ket_combination([0, -2, 0, 1], 4.0)
        c = circle(4.0, CHECK_LEVEL)
        assert np.sum(c.weights * np.abs(f(c.nodes)) ** 2) == pytest.approx(5.0, abs=1e-9)
        assert isometry_defect(p, f, c, disk(6.0, 1)) <= 1e-6

    @settings(max_examples=8, deadline=None)
    @given(st.sampled_from(ISOMETRY_SETS),
           st.lists(st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
                    min_size=7, max_size=9).filter(lambda c: np.linalg.norm(c) > 1e-3))
    def test_random_combination(self, gm, coeffs):
        gamma, m = gm
        p = ModelParams(gamma, m)
        f = ket_combination(coeffs, p.gamma_prime)
        assert isometry_defect(p, f, circle(p.gamma_prime, CHECK_LEVEL), disk(gamma, m)) <= 1e-5

    def test_zero_norm(self):
        with pytest.raises(ValueError):
            isometry_defect(ModelParams(4.5, 0), lambda t: 0 * t, circle(4.5), disk(4.5, 0))

    def test_rule_mismatch(self):
        with pytest.raises(ParameterError):
            isometry_defect(ModelParams(4.5, 0), k(0, 4.5), circle(4.5), disk(6.0, 0))


coeff = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ISOMETRY_SETS), coeff, coeff)
def test_antilinearity(gm, a, b):
    gamma, m = gm
    p = ModelParams(gamma, m)
    rule = circle(p.gamma_prime)
    f = ket_combination([1, 0.5, -0.25j], p.gamma_prime)
    g = ket_combination([0, 0, 1, 1j], p.gamma_prime)
    z = points(0.8)
    lhs = transform(p, lambda t: a * f(t) + b * g(t), z, rule)
    rhs = np.conj(a) * transform(p, f, z, rule) + np.conj(b) * transform(p, g, z, rule)
    scale = max(1.0, abs(a), abs(b)) * np.abs(transform(p, f, z, rule)).max()
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * scale
