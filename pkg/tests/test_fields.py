"""Coefficient-field families, jets, and the parallelism residual."""

import numpy as np
import pytest

from circulant4 import (
    coeffs_at,
    eval_jet,
    make_custom_family,
    make_family,
    parallel_residual,
)

S_WAVE = (2.0, 0.1, 3.0, 1.0)
CONTROL = (3.0, 0.1, 1.0, 2.0)


class TestMakeFamily:
    def test_constant_valid(self):
        make_family("constant", (3, 1, 2))

    def test_constant_invalid(self):
        with pytest.raises(ValueError, match="C < A"):
            make_family("constant", (2, 1, 3))

    def test_s_wave_valid(self):
        make_family("s_wave", S_WAVE)

    def test_s_wave_negative_b_rejected(self):
        with pytest.raises(ValueError, match="0 < B"):
            make_family("s_wave", (2, 0.1, 1, -3))

    def test_s_wave_b_overlapping_c_rejected(self):
        with pytest.raises(ValueError, match="B < C"):
            make_family("s_wave", (2, 0.1, 3, 1.9))

    def test_s_wave_c_overlapping_a_rejected(self):
        with pytest.raises(ValueError, match="C < A"):
            make_family("s_wave", (2, 0.1, 2.1, 1))

    def test_control_valid(self):
        make_family("control", CONTROL)

    def test_control_wave_reaching_c_rejected(self):
        with pytest.raises(ValueError, match="C < A"):
            make_family("control", (2.05, 0.1, 1, 2))

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            make_family("sombrero", (1, 2, 3))

    def test_custom_requires_all_derivatives(self):
        with pytest.raises(ValueError):
            make_custom_family(lambda p: (3, 1, 2), None, None)


class TestEvalJet:
    def test_constant_jet_is_flat(self):
        jet = eval_jet(make_family("constant", (3, 1, 2)), [0.4, -1, 2, 0])
        assert tuple(jet.value) == (3, 1, 2)
        assert np.all(jet.grads == 0)
        assert np.all(jet.hessians == 0)

    def test_control_single_variable_dependence(self):
        jet = eval_jet(make_family("control", CONTROL), [0, 0, 0, 0])
        expected = np.zeros((3, 4))
        expected[0, 0] = 0.1  # only dA/dx1 is nonzero at the origin
        assert np.allclose(jet.grads, expected, atol=1e-15)

    def test_s_wave_values(self):
        spec = make_family("s_wave", S_WAVE)
        a, b, c = eval_jet(spec, [0, 0, 0, 0]).value
        assert (a, b, c) == (3.0, 1.0, 2.0)

    def test_gradients_in_difference_plane(self):
        spec = make_family("s_wave", S_WAVE)
        jet = eval_jet(spec, [0.3, -0.2, 0.5, 0.1])
        ones = np.ones(4)
        for row in jet.grads:
            assert row @ ones == pytest.approx(0.0, abs=1e-15)

    def test_hessians_symmetric(self):
        for mode in ("analytic", "finite_difference"):
            spec = make_family("s_wave", S_WAVE, derivative_mode=mode)
            jet = eval_jet(spec, [0.7, 0.1, -0.4, 1.2])
            tol = 1e-15 if mode == "analytic" else 1e-8
            assert np.allclose(jet.hessians, jet.hessians.transpose(0, 2, 1), atol=tol)

    def test_inadmissible_point_names_inequality(self):
        spec = make_custom_family(
            lambda p: (1.0, 2.0, 3.0),
            lambda p: np.zeros((3, 4)),
            lambda p: np.zeros((3, 4, 4)),
        )
        with pytest.raises(ValueError, match="C < A"):
            eval_jet(spec, [0, 0, 0, 0])

    def test_analytic_vs_fd_agreement(self):
        rng = np.random.default_rng(31)
        for name, params in (("s_wave", S_WAVE), ("control", CONTROL)):
            analytic = make_family(name, params)
            fd = make_family(name, params, derivative_mode="finite_difference")
            for _ in range(100):
                p = rng.uniform(-2, 2, size=4)
                ja = eval_jet(analytic, p)
                jf = eval_jet(fd, p)
                assert np.max(np.abs(ja.grads - jf.grads)) <= 1e-8
                assert np.max(np.abs(ja.hessians - jf.hessians)) <= 1e-6


class TestParallelResidual:
    def test_constant_is_exactly_zero(self):
        assert parallel_residual(make_family("constant", (3, 1, 2)), [1, 2, 3, 4]) == 0.0

    def test_s_wave_is_parallel(self):
        spec = make_family("s_wave", S_WAVE)
        rng = np.random.default_rng(32)
        for _ in range(50):
            assert parallel_residual(spec, rng.uniform(-3, 3, size=4)) <= 1e-12

    def test_s_wave_fd_mode(self):
        spec = make_family("s_wave", S_WAVE, derivative_mode="finite_difference")
        rng = np.random.default_rng(33)
        for _ in range(20):
            assert parallel_residual(spec, rng.uniform(-3, 3, size=4)) <= 1e-7

    def test_control_violates_parallelism(self):
        spec = make_family("control", CONTROL)
        # grad C = 0 forces the residual to |dA/dx1| = kappa at the origin
        assert parallel_residual(spec, [0, 0, 0, 0]) == pytest.approx(0.1, rel=1e-12)
        assert parallel_residual(spec, [0, 0, 0, 0]) >= 0.05
