import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from circbargmann import coherent
from circbargmann.bases import ModelParams
from circbargmann.coherent import (
    CoherentState,
    cs_closed,
    cs_closed_m,
    cs_norm_sq,
    cs_series,
    kernel_diag,
    kernel_partial_sum,
)
from circbargmann.errors import ConvergenceError, DomainError
from circbargmann.quadrature import build_circle_rule

# frozen oracle values (tests/oracles.py: defining expansion summed to 400 terms, 40 digits)
CS_4_5 = -0.19363195057814842 + 1.1049447236886125j  # gamma=4.5, z=0.3+0.2i, theta=1
CS_6_2 = 0.7340642743679143 - 0.2160636798864108j  # (6, 2), z=0.4-0.1i, theta=2
CS_6_1_ORIGIN_PI = 0.2 * math.sqrt(5)  # (6, 1), z=0, theta=pi

SERIES_SETS = [(4.5, 0), (6.0, 1), (6.0, 2), (9.5, 4)]
NORM_SETS = [(2.5, 0), (4.5, 0), (6.0, 1), (6.0, 2), (9.5, 3), (9.5, 4)]

disk_points = st.builds(
    lambda r, a: r * complex(math.cos(a), math.sin(a)),
    st.floats(0.0, 0.9), st.floats(0.0, 2 * math.pi),
)


class TestKernel:
    def test_examples(self):
        assert kernel_diag(ModelParams(4.0, 0), 0) == pytest.approx(4 / math.pi, rel=1e-15)
        assert kernel_diag(ModelParams(6.0, 1), 0) == pytest.approx(4 / math.pi, rel=1e-15)
        assert kernel_diag(ModelParams(4.0, 0), 0.6) == pytest.approx(4 / math.pi * 0.64**-5, rel=1e-14)

    @pytest.mark.parametrize("gamma,m", NORM_SETS)
    def test_partial_sum(self, gamma, m):
        p = ModelParams(gamma, m)
        z = np.array([0.0, 0.3j, 0.5 * np.exp(2.0j), -0.7])
        np.testing.assert_allclose(kernel_partial_sum(p, z, 400), kernel_diag(p, z), rtol=1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            kernel_diag(ModelParams(4.0, 0), 1.0)


class TestClosed:
    def test_origin(self):
        for gamma in (0.5, 4.5, 9.5):
            for theta in (0.0, 1.0, math.pi):
                assert cs_closed(gamma, 0, theta) == 1

    def test_example(self):
        assert cs_closed(4.5, 0.3 + 0.2j, 1.0) == pytest.approx(CS_4_5, rel=1e-13)

    def test_frozen_value_matches_oracle(self):
        assert oracles.cs_series(4.5, 0, 0.3 + 0.2j, 1.0) == pytest.approx(CS_4_5, rel=1e-15)
        assert oracles.cs_series(6.0, 2, 0.4 - 0.1j, 2.0) == pytest.approx(CS_6_2, rel=1e-15)
        assert oracles.cs_series(6.0, 1, 0, math.pi) == pytest.approx(CS_6_1_ORIGIN_PI, rel=1e-15)

    @pytest.mark.parametrize("z", [0.0, 0.5, 0.3 - 0.6j, -0.8j, 0.9 * np.exp(0.1j)])
    def test_normalized(self, z):
        rule = build_circle_rule(4.5)
        assert cs_norm_sq(ModelParams(4.5, 0), z, rule) == pytest.approx(1.0, abs=1e-9)

    def test_broadcast(self):
        z = np.array([0.1, 0.2j])[:, None]
        theta = np.array([0.5, 1.0, 2.0])
        out = cs_closed(3.0, z, theta)
        assert out.shape == (2, 3)
        assert out[1, 2] == pytest.approx(cs_closed(3.0, 0.2j, 2.0))

    def test_domain(self):
        with pytest.raises(DomainError):
            cs_closed(4.5, 1.0, 0.3)
        with pytest.raises(DomainError):
            cs_closed(0.0, 0.1, 0.3)


class TestClosedM:
    @settings(max_examples=60)
    @given(st.floats(0.2, 15), disk_points, st.floats(0, 2 * math.pi))
    def test_m0_collapse(self, gamma, z, theta):
        a = cs_closed_m(ModelParams(gamma, 0), z, theta)
        b = cs_closed(gamma, z, theta)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(b))

    def test_examples(self):
        assert cs_closed_m(ModelParams(6.0, 1), 0, math.pi) == pytest.approx(CS_6_1_ORIGIN_PI, rel=1e-14)
        assert cs_closed_m(ModelParams(6.0, 2), 0.4 - 0.1j, 2.0) == pytest.approx(CS_6_2, rel=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(NORM_SETS[2:]), disk_points, st.floats(0, 2 * math.pi))
    def test_against_oracle(self, gm, z, theta):
        gamma, m = gm
        ref = oracles.cs_closed_m(gamma, m, z, theta)
        got = cs_closed_m(ModelParams(gamma, m), z, theta)
        assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref))

    @pytest.mark.parametrize("gamma,m", NORM_SETS)
    def test_normalized(self, gamma, m):
        p = ModelParams(gamma, m)
        rule = build_circle_rule(p.gamma_prime)
        for z in (0.0, 0.35 + 0.2j, -0.6j, 0.8):
            assert cs_norm_sq(p, z, rule) == pytest.approx(1.0, abs=1e-8)

    def test_norm_needs_matching_rule(self):
        with pytest.raises(ValueError):
            cs_norm_sq(ModelParams(6.0, 1), 0.2, build_circle_rule(6.0))

    def test_state_object(self):
        s = CoherentState(ModelParams(6.0, 1), 0.2 + 0.1j)
        assert s(1.5) == cs_closed_m(s.params, s.z, 1.5)
        with pytest.raises(DomainError):
            CoherentState(ModelParams(6.0, 1), 1.2)


class TestSeries:
    def test_origin(self):
        res = cs_series(ModelParams(4.5, 0), 0, 0.7)
        assert res.value == pytest.approx(1.0, abs=1e-15)
        assert res.n_terms == 1

    def test_examples(self):
        a = cs_series(ModelParams(4.5, 0), 0.3 + 0.2j, 1.0).value
        assert abs(a - cs_closed(4.5, 0.3 + 0.2j, 1.0)) <= 1e-10 * abs(a)
        b = cs_series(ModelParams(6.0, 2), 0.4 - 0.1j, 2.0).value
        assert abs(b - cs_closed_m(ModelParams(6.0, 2), 0.4 - 0.1j, 2.0)) <= 1e-9 * abs(b)

    @pytest.mark.parametrize("gamma,m", SERIES_SETS)
    def test_grid_agreement(self, gamma, m):
        p = ModelParams(gamma, m)
        worst = 0.0
        for r in (0.1, 0.4, 0.7):
            for k in range(3):
                z = r * np.exp(2j * math.pi * k / 3)
                for theta in (0.5, math.pi, 5.0):
                    closed = cs_closed_m(p, z, theta)
                    series = cs_series(p, z, theta).value
                    worst = max(worst, abs(series - closed) / abs(closed))
        assert worst <= 1e-9

    def test_terms_grow_with_radius(self):
        p = ModelParams(6.0, 1)
        counts = [cs_series(p, r, 1.0).n_terms for r in (0.1, 0.5, 0.9)]
        assert counts == sorted(counts) and counts[0] < counts[-1]

    def test_nonconvergence(self):
        with pytest.raises(ConvergenceError):
            cs_series(ModelParams(4.5, 0), 0.99, 1.0, n_max=50)

    @pytest.mark.parametrize("tol", [0.0, -1e-9, float("nan")])
    def test_bad_tol(self, tol):
        with pytest.raises(ValueError):
            cs_series(ModelParams(4.5, 0), 0.1, 1.0, tol=tol)

    def test_defaults(self):
        assert coherent.SERIES_TOL == 1e-12
        assert coherent.SERIES_N_MAX == 4000
