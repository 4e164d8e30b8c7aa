"""Tests for adapted frames, the spinor covariant derivative and the
Witten integrand."""

import numpy as np

from akmass import (
    DimensionMismatchError,
    FockSpinor,
    InvalidArgumentValueError,
    adapted_frame,
    constant_spinor_derivatives,
    dirac_constant_spinor_residual,
    frame_rotation_invariance,
    get_entry,
    norm_equality_residual,
    spin_connection,
    spinor_covariant_derivative,
    witten_integrand,
    witten_integrand_identity_residual)
from akmass.jets.finite_difference import default_step
from akmass.tests.unit.spinc._helpers import SpinorTestCase


def _rotation(n, seed):
    q, _ = np.linalg.qr(np.random.default_rng(seed).normal(size=(n, n)))
    return q


class TestAdaptedFrame(SpinorTestCase):

    def test_random_structure_frame(self):
        """Test that the frame is orthonormal and adapted to J."""
        entry = get_entry('random_ak', seed=4)
        for p in entry.sample_points(3, seed=0):
            frame = adapted_frame(entry.chart, p)
            self.assertLess(frame.orthonormality_residual(), 1e-10)
            self.assertLess(frame.adaptedness_residual(), 1e-10)
            np.testing.assert_allclose(frame.coframe @ frame.vectors,
                                       np.eye(4), atol=1e-12)

    def test_seeded_frame(self):
        """Test a frame built from rotated seed axes."""
        entry = get_entry('random_ak', complex_dim=3)
        p = entry.sample_points(1, seed=2)[0]
        frame = adapted_frame(entry.chart, p, seed=_rotation(6, 1))
        self.assertEqual(frame.complex_dim, 3)
        self.assertLess(frame.orthonormality_residual(), 1e-10)
        self.assertLess(frame.adaptedness_residual(), 1e-10)

    def test_bad_seed_shape(self):
        """Test a seed matrix of the wrong shape."""
        flat = get_entry('euclidean', dim=4)
        self.helper_test_raises(adapted_frame, InvalidArgumentValueError,
                                flat.chart, (0.0,) * 4, seed=np.eye(3))

    def test_connection_forms_are_skew(self):
        """Test w_kl = -w_lk and that A_s is imaginary."""
        entry = get_entry('random_ak', seed=1)
        p = entry.sample_points(1, seed=5)[0]
        data = spin_connection(entry.chart, p)
        self.assertLess(data.antisymmetry_residual(), 1e-10)
        np.testing.assert_allclose(data.a_s.real, 0.0, atol=1e-15)


class TestDiracOperator(SpinorTestCase):

    def test_flat_constant_spinor_is_parallel(self):
        """Test that psi_0 is parallel on flat space."""
        flat = get_entry('euclidean', dim=4)
        nabla = constant_spinor_derivatives(flat.chart, (0.5, 0.1, -0.2, 1.0))
        np.testing.assert_array_equal(nabla, 0.0)

    def test_kahler_constant_spinor_is_parallel(self):
        """Test that psi_0 is parallel on a Kahler metric."""
        entry = get_entry('burns')
        for p in entry.sample_points(2, seed=3):
            nabla = constant_spinor_derivatives(entry.chart, p)
            np.testing.assert_allclose(nabla, 0.0, atol=1e-9)

    def test_dirac_equation(self):
        """Test D psi_0 = 0 on random almost-Kahler structures."""
        for m in (2, 3):
            entry = get_entry('random_ak', complex_dim=m, seed=m)
            for p in entry.sample_points(3, seed=1):
                self.assertLess(
                    dirac_constant_spinor_residual(entry.chart, p), 1e-8)

    def test_dirac_on_non_symplectic_structure(self):
        """Test that D psi_0 does not vanish when omega is not closed."""
        entry = get_entry('schwarzschild_4d')
        self.assertGreater(
            dirac_constant_spinor_residual(entry.chart, (1.0, 0.5, 0.3, 0.2)),
            1e-6)

    def test_norm_equality(self):
        """Test |nabla psi_0|^2 = 1/8 |nabla omega|^2."""
        entry = get_entry('random_ak', seed=6)
        for p in entry.sample_points(3, seed=4):
            self.assertLess(norm_equality_residual(entry.chart, p), 1e-9)

    def test_frame_rotation_invariance(self):
        """Test that the residuals do not depend on the seed axes."""
        entry = get_entry('random_ak')
        p = entry.sample_points(1, seed=8)[0]
        self.assertLess(
            frame_rotation_invariance(entry.chart, p, _rotation(4, 3)), 1e-9)

    def test_callable_spinor_field(self):
        """Test that a constant field matches the constant spinor."""
        entry = get_entry('random_ak', seed=2)
        p = entry.sample_points(1, seed=0)[0]
        vacuum = FockSpinor.vacuum(2)
        direction = (0.3, -0.4, 1.0, 0.2)
        fixed = spinor_covariant_derivative(entry.chart, p, vacuum, direction)
        field = spinor_covariant_derivative(
            entry.chart, p, lambda x: vacuum.coeffs, direction)
        # the stencil of a constant field leaves only rounding over h
        atol = 10.0 * np.finfo(float).eps / default_step(1, p)
        np.testing.assert_allclose(field.coeffs, fixed.coeffs, atol=atol)

    def test_direction_length(self):
        """Test a direction with the wrong number of components."""
        flat = get_entry('euclidean', dim=4)
        self.helper_test_raises(spinor_covariant_derivative,
                                DimensionMismatchError, flat.chart,
                                (0.1,) * 4, FockSpinor.vacuum(2), (1.0, 0.0))


class TestWittenIntegrand(SpinorTestCase):

    def test_both_sides_agree(self):
        """Test the spinor and metric forms of the boundary integrand on a
        random almost-Kahler structure."""
        entry = get_entry('random_ak', seed=7)
        for p in entry.sample_points(10, seed=7):
            self.assertLess(
                witten_integrand_identity_residual(entry.chart, p), 1e-8)

    def test_both_sides_agree_off_the_almost_kahler_class(self):
        """Test the identity on the Hermitian conformally flat metric and
        on Eguchi-Hanson far out."""
        schwarzschild = get_entry('schwarzschild_4d')
        self.assertLess(witten_integrand_identity_residual(
            schwarzschild.chart, (30.0, 20.0, -25.0, 26.0)), 1e-8)
        eguchi_hanson = get_entry('eguchi_hanson')
        self.assertLess(witten_integrand_identity_residual(
            eguchi_hanson.chart, (12.0, -8.0, 10.0, 9.0)), 1e-7)

    def test_divergence_matches_connection_forms(self):
        """Test -1/2 div e_i from coordinates against the connection forms
        of the frame."""
        entry = get_entry('random_ak', seed=3)
        p = entry.sample_points(1, seed=9)[0]
        data = spin_connection(entry.chart, p)
        normal = np.asarray(p) / np.linalg.norm(p)
        nu = data.frame.frame_components(normal)
        expected = 0.5 * np.einsum('jji->i', data.w) @ nu
        parts = witten_integrand(entry.chart, p)
        self.assertAlmostEqual(abs(parts.divergence - expected), 0.0,
                               places=10)

    def test_decomposition(self):
        """Test that the metric side is the sum of its parts and that the
        parts do not cancel individually."""
        entry = get_entry('random_ak', seed=3)
        p = entry.sample_points(1, seed=9)[0]
        parts = witten_integrand(entry.chart, p)
        self.assertAlmostEqual(
            abs(parts.divergence + parts.mixed + parts.connection -
                parts.metric_side), 0.0, places=12)
        self.assertGreater(abs(parts.divergence) + abs(parts.connection) +
                           abs(parts.mixed), 1e-6)

    def test_flat_integrand_vanishes(self):
        """Test a vanishing integrand on flat space."""
        flat = get_entry('euclidean', dim=4)
        parts = witten_integrand(flat.chart, (1.0, 2.0, 0.5, -1.0))
        self.assertEqual(parts.spinor_side, 0.0)
        self.assertEqual(parts.adm_density, 0.0)
        self.assertEqual(
            witten_integrand_identity_residual(flat.chart,
                                               (1.0, 2.0, 0.5, -1.0)), 0.0)
