"""Tests for the curvature identities of almost-Kahler manifolds."""

from akmass import (
    DimensionMismatchError,
    NonEinsteinError,
    get_entry,
    lebrun_identity_residuals,
    sekigawa_apostolov_residual,
    self_dual_weyl_divergence,
    weitzenbock_residual)
from akmass.tests.unit.almost_kahler._helpers import AlmostKahlerTestCase


class TestLeBrunIdentities(AlmostKahlerTestCase):

    def test_random_structure(self):
        """Test the scalar identity and the lower bound on a random
        almost-Kahler structure."""
        entry = get_entry('random_ak', seed=1)
        for p in entry.sample_points(4, seed=3):
            record = lebrun_identity_residuals(entry.chart, p)
            self.assertEqual(sorted(record), ['scalar_weyl',
                                              'weyl_laplacian_omega',
                                              'weyl_lower_bound'])
            self.assertLess(record['scalar_weyl'], 1e-7)
            self.assertGreater(record['weyl_lower_bound'], -1e-9)

    def test_eguchi_hanson(self):
        """Test the identities on a Ricci-flat Kahler metric."""
        entry = get_entry('eguchi_hanson')
        for p in entry.sample_points(3, seed=0):
            record = lebrun_identity_residuals(entry.chart, p)
            self.assertLess(record['scalar_weyl'], 1e-8)
            self.assertLess(record['weyl_laplacian_omega'], 1e-6)
            self.assertGreater(record['weyl_lower_bound'], -1e-9)

    def test_fubini_study_with_harmonic_weyl(self):
        """Test the Weyl Laplacian identity on CP^2, where delta W+ = 0."""
        chart = get_entry('fubini_study').chart
        p = (0.2, -0.1, 0.3, 0.1)
        record = lebrun_identity_residuals(chart, p, include_delta_w=True)
        self.assertLess(record['scalar_weyl'], 1e-7)
        self.assertLess(record['weyl_laplacian'], 1e-4)

    def test_weitzenbock_formula(self):
        """Test the Weitzenbock formula for omega on a random structure."""
        entry = get_entry('random_ak', seed=2)
        self.helper_test_residual_below(
            lambda p: weitzenbock_residual(entry.chart, p),
            entry.sample_points(3, seed=5), 1e-6)

    def test_higher_dimension_rejected(self):
        """Test that the identities need real dimension four."""
        flat = get_entry('euclidean', dim=6)
        self.helper_test_raises(lebrun_identity_residuals,
                                DimensionMismatchError, flat.chart, (0.1,) * 6)
        self.helper_test_raises(weitzenbock_residual, DimensionMismatchError,
                                flat.chart, (0.1,) * 6)
        self.helper_test_raises(self_dual_weyl_divergence,
                                DimensionMismatchError, flat.chart, (0.1,) * 6)


class TestSelfDualWeyl(AlmostKahlerTestCase):

    def test_fubini_study_is_harmonic(self):
        """Test delta W+ = 0 on CP^2."""
        chart = get_entry('fubini_study').chart
        self.helper_test_residual_below(
            lambda p: self_dual_weyl_divergence(chart, p),
            [(0.0, 0.0, 0.0, 0.0), (0.3, 0.1, -0.2, 0.4)], 1e-7)

    def test_burns_is_harmonic(self):
        """Test delta W+ = 0 on the scalar-flat Kahler Burns metric."""
        entry = get_entry('burns')
        self.helper_test_residual_below(
            lambda p: self_dual_weyl_divergence(entry.chart, p),
            entry.sample_points(2, seed=1), 1e-6)


class TestSekigawaApostolov(AlmostKahlerTestCase):

    def test_kahler_einstein(self):
        """Test the integrand identity on CP^2."""
        chart = get_entry('fubini_study').chart
        self.helper_test_residual_below(
            lambda p: sekigawa_apostolov_residual(chart, p),
            [(0.1, 0.2, -0.3, 0.1), (0.5, -0.4, 0.2, 0.3)], 1e-6)

    def test_flat_space(self):
        """Test the integrand identity on flat space."""
        chart = get_entry('euclidean', dim=4).chart
        self.assertEqual(
            sekigawa_apostolov_residual(chart, (0.1, 0.2, 0.3, 0.4)), 0.0)

    def test_non_einstein_rejected(self):
        """Test that the identity refuses a non-Einstein metric."""
        entry = get_entry('burns')
        p = entry.sample_points(1, seed=0)[0]
        try:
            sekigawa_apostolov_residual(entry.chart, p)
        except NonEinsteinError as e:
            self.assertGreater(e.residual, 1e-8)
        else:
            self.fail('No exception thrown.')
