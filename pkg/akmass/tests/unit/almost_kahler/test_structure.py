"""Tests for the fundamental form, the structure defects and the Hermitian
connection."""

import numpy as np

from akmass import (
    AKPointData,
    AlmostHermitianChart,
    CompatibilityError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError,
    MetricChart,
    ak_point_data,
    anti_invariant_components,
    anti_invariant_curvature,
    check_structure,
    christoffel,
    chern_connection,
    chern_ricci_exterior_derivative,
    chern_ricci_form,
    curvature_packet,
    fundamental_form,
    get_entry,
    hermitian_scalar,
    kahler_defect,
    nabla_structure,
    star_scalar,
    structure_residuals,
    wedge_identity_residual)
from akmass.tests.unit.almost_kahler._helpers import AlmostKahlerTestCase


class TestFundamentalForm(AlmostKahlerTestCase):

    def test_flat_fundamental_form(self):
        """Test the standard form dx1 ^ dy1 + dx2 ^ dy2."""
        flat = get_entry('euclidean', dim=4)
        omega = fundamental_form(flat.chart, (0.3, -0.2, 0.1, 0.5))
        expected = np.array([[0.0, 1.0, 0.0, 0.0],
                             [-1.0, 0.0, 0.0, 0.0],
                             [0.0, 0.0, 0.0, 1.0],
                             [0.0, 0.0, -1.0, 0.0]])
        np.testing.assert_array_equal(omega, expected)

    def test_form_is_antisymmetric(self):
        """Test omega^T = -omega on a random structure."""
        entry = get_entry('random_ak')
        for p in entry.sample_points(3, seed=1):
            omega = fundamental_form(entry.chart, p)
            np.testing.assert_allclose(omega, -omega.T, atol=1e-12)

    def test_random_structure_is_closed_and_compatible(self):
        """Test the three structure defects of a random structure."""
        entry = get_entry('random_ak', seed=3)
        for p in entry.sample_points(4, seed=2):
            residuals = structure_residuals(entry.chart, p)
            self.assertLess(residuals['j_squared'], 1e-10)
            self.assertLess(residuals['compatibility'], 1e-10)
            self.assertLess(residuals['d_omega'], 1e-8)

    def test_incompatible_structure_reports_nan(self):
        """Test that d omega is not evaluated for a non-structure."""
        base = MetricChart.from_components(
            2, lambda x: [[1.0, 0.0], [0.0, 2.0]], name='stretched')
        chart = AlmostHermitianChart.from_components(
            base, lambda x: [[0.0, -1.0], [1.0, 0.0]])
        residuals = structure_residuals(chart, (0.0, 0.0))
        self.assertAlmostEqual(residuals['compatibility'], 1.0)
        self.assertTrue(np.isnan(residuals['d_omega']))
        self.helper_test_raises(fundamental_form, CompatibilityError, chart,
                                (0.0, 0.0))


class TestStructureErrors(AlmostKahlerTestCase):

    def test_square_checked_first(self):
        """Test that J^2 = -Id is the invariant reported first."""
        try:
            check_structure(np.diag([1.0, 2.0]), 2.0 * np.eye(2), (0.0, 0.0))
        except CompatibilityError as e:
            self.assertEqual(e.invariant, 'J^2 = -Id')
        else:
            self.fail('No exception thrown.')

    def test_incompatible_metric(self):
        """Test the compatibility invariant."""
        J = np.array([[0.0, -1.0], [1.0, 0.0]])
        try:
            check_structure(np.diag([1.0, 2.0]), J, (0.0, 0.0))
        except CompatibilityError as e:
            self.assertEqual(e.invariant, 'g(J., J.) = g')
        else:
            self.fail('No exception thrown.')

    def test_odd_dimension(self):
        """Test that odd-dimensional charts carry no structure."""
        flat = get_entry('euclidean', dim=3)
        self.helper_test_raises(AlmostHermitianChart,
                                InvalidArgumentValueError, flat.chart,
                                lambda ctx, X: None)

    def test_unknown_flag(self):
        """Test an unknown structure flag."""
        flat = get_entry('euclidean', dim=4)
        self.helper_test_raises(AlmostHermitianChart,
                                InvalidArgumentValueError, flat.chart.base,
                                lambda ctx, X: None,
                                structure_flag='symplectic')

    def test_metric_chart_rejected(self):
        """Test structure quantities on a chart without a structure."""
        sphere = get_entry('round_sphere', dim=2)
        self.helper_test_raises(fundamental_form, InvalidArgumentTypeError,
                                sphere.chart, (0.1, 0.2))

    def test_point_data_requires_every_field(self):
        """Test that incomplete point data is rejected."""
        self.helper_test_raises(AKPointData, TypeError, point=(0.0, 0.0))


class TestNablaStructure(AlmostKahlerTestCase):

    def test_norm_ratio(self):
        """Test |nabla omega|^2 = 1/2 |nabla J|^2 on a random structure."""
        entry = get_entry('random_ak', seed=5)
        for p in entry.sample_points(4, seed=0):
            nabla = nabla_structure(entry.chart, p)
            self.assertAlmostEqual(nabla.norm_nabla_omega,
                                   0.5 * nabla.norm_nabla_J, places=10)

    def test_random_structure_is_not_kahler(self):
        """Test that the random structure has a non-parallel J."""
        entry = get_entry('random_ak')
        defects = [kahler_defect(entry.chart, p)
                   for p in entry.sample_points(5, seed=0)]
        self.assertGreater(max(defects), 1e-4)

    def test_kahler_entries_are_parallel(self):
        """Test that nabla J vanishes on Kahler entries."""
        for entry in (get_entry('burns'), get_entry('fubini_study'),
                      get_entry('eguchi_hanson')):
            self.helper_test_residual_below(
                lambda p: kahler_defect(entry.chart, p),
                entry.sample_points(3, seed=4), 1e-7)


class TestScalarCurvatures(AlmostKahlerTestCase):

    def test_star_scalar_on_fubini_study(self):
        """Test s* = s = 24 on CP^2."""
        chart = get_entry('fubini_study').chart
        for p in ((0.0, 0.0, 0.0, 0.0), (0.4, -0.3, 0.2, 0.7)):
            self.assertAlmostEqual(star_scalar(chart, p), 24.0, places=7)
            self.assertAlmostEqual(hermitian_scalar(chart, p), 24.0,
                                   places=7)

    def test_structure_identity(self):
        """Test s* - s = |nabla omega|^2 on a random structure."""
        entry = get_entry('random_ak', seed=2)
        self.helper_test_residual_below(
            lambda p: ak_point_data(entry.chart, p).identity_residual,
            entry.sample_points(5, seed=7), 1e-7)

    def test_point_data_fields(self):
        """Test the collected point data of a Kahler metric."""
        entry = get_entry('burns')
        p = entry.sample_points(1, seed=3)[0]
        data = ak_point_data(entry.chart, p)
        self.assertAlmostEqual(data.s, 0.0, places=7)
        self.assertAlmostEqual(data.s_star, 0.0, places=7)
        self.assertAlmostEqual(data.norm_nabla_omega, 0.0, places=10)
        np.testing.assert_allclose(data.phi, 0.0, atol=1e-10)
        np.testing.assert_allclose(data.rho_star_anti, 0.0, atol=1e-7)
        self.assertRaises(AttributeError, getattr, data, 'unknown')


class TestChernConnection(AlmostKahlerTestCase):

    def test_connection_on_random_structure(self):
        """Test that the Hermitian connection preserves g and J."""
        entry = get_entry('random_ak', seed=1)
        p = entry.sample_points(1, seed=0)[0]
        gamma = chern_connection(entry.chart, p)
        self.assertEqual(gamma.shape, (4, 4, 4))

    def test_kahler_connection_is_levi_civita(self):
        """Test that the Hermitian and Levi-Civita connections agree on a
        Kahler metric."""
        chart = get_entry('fubini_study').chart
        p = (0.2, 0.1, -0.3, 0.4)
        np.testing.assert_allclose(chern_connection(chart, p),
                                   christoffel(chart, p), atol=1e-10)

    def test_chern_ricci_of_fubini_study(self):
        """Test iF = 6 omega on CP^2."""
        chart = get_entry('fubini_study').chart
        p = (0.3, -0.1, 0.2, 0.5)
        np.testing.assert_allclose(chern_ricci_form(chart, p),
                                   6.0 * fundamental_form(chart, p),
                                   atol=1e-7)

    def test_wedge_identity(self):
        """Test <iF, omega> = (s + s*) / 4 on a random structure."""
        entry = get_entry('random_ak', seed=4)
        self.helper_test_residual_below(
            lambda p: wedge_identity_residual(entry.chart, p),
            entry.sample_points(3, seed=1), 1e-7)

    def test_chern_ricci_form_is_closed(self):
        """Test d(iF) = 0 on a random structure."""
        entry = get_entry('random_ak')
        self.helper_test_residual_below(
            lambda p: chern_ricci_exterior_derivative(entry.chart, p),
            entry.sample_points(2, seed=6), 1e-6)


class TestAntiInvariantCurvature(AlmostKahlerTestCase):

    def test_projection_is_idempotent(self):
        """Test that taking W'' twice changes nothing on a random
        structure."""
        entry = get_entry('random_ak', seed=5)
        for p in entry.sample_points(2, seed=4):
            R = curvature_packet(entry.chart, p).riemann
            J = entry.chart.structure_at(p)
            once = anti_invariant_curvature(R, J)
            np.testing.assert_allclose(anti_invariant_curvature(once, J),
                                       once, atol=1e-10)

    def test_vanishes_on_kahler_metrics(self):
        """Test W'' = 0 on CP^2 and on the flat torus."""
        for name, p in (('fubini_study', (0.1, 0.2, -0.3, 0.1)),
                        ('flat_torus_kahler', (0.4, 0.1, 0.7, 0.2))):
            w_second = anti_invariant_components(
                get_entry(name).chart, p).w_second
            self.assertLess(float(np.max(np.abs(w_second))), 1e-9,
                            msg=name)
