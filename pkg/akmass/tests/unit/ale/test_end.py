"""Tests for asymptotic ends and exterior products."""

import numpy as np

from akmass import (
    ALEEnd,
    InvalidArgumentValueError,
    OutsideDomainError,
    adm_integrand,
    covector,
    get_entry,
    sphere_quadrature,
    standard_structure,
    top_coefficient,
    two_form,
    wedge,
    wedge_power)
from akmass.tests.unit.ale._helpers import AleTestCase


class TestExterior(AleTestCase):

    def test_covectors_anticommute(self):
        """Test dx ^ dy = -dy ^ dx."""
        dx, dy = covector([1.0, 0.0]), covector([0.0, 1.0])
        self.assertEqual(wedge(dx, dy), {3: 1.0})
        self.assertEqual(wedge(dy, dx), {3: -1.0})
        self.assertEqual(wedge(dx, dx), {})

    def test_symplectic_volume(self):
        """Test omega^m = m! dx1 ^ dy1 ^ ... for the standard form."""
        for m, factorial in ((1, 1.0), (2, 2.0), (3, 6.0)):
            omega = two_form(-standard_structure(2 * m))
            self.assertEqual(top_coefficient(wedge_power(omega, m), 2 * m),
                             factorial)

    def test_zero_power(self):
        """Test alpha^0 = 1."""
        self.assertEqual(wedge_power(covector([1.0]), 0), {0: 1.0})


class TestALEEnd(AleTestCase):

    def test_standard_structure(self):
        """Test J^2 = -Id and J d_x = d_y."""
        J = standard_structure(6)
        np.testing.assert_array_equal(J @ J, -np.eye(6))
        np.testing.assert_array_equal(J @ np.eye(6)[0], np.eye(6)[1])

    def test_core_is_excluded(self):
        """Test points and radii inside the core."""
        end = get_entry('schwarzschild', m=1.0).end
        self.assertEqual(end.core_radius, 2.0)
        self.assertEqual(end.base_radius, 4.0)
        self.helper_test_raises(end.check_point, OutsideDomainError,
                                (1.0, 1.0, 0.0))
        self.helper_test_raises(end.check_radius, OutsideDomainError, 2.0)
        self.assertEqual(end.check_radius(3), 3.0)

    def test_invalid_parameters(self):
        """Test the group order, decay order and core radius."""
        chart = get_entry('euclidean', dim=4).chart
        self.helper_test_raises(ALEEnd, InvalidArgumentValueError, chart,
                                gamma_order=0)
        self.helper_test_raises(ALEEnd, InvalidArgumentValueError, chart,
                                decay_tau=0.0)
        self.helper_test_raises(ALEEnd, InvalidArgumentValueError, chart,
                                core_radius=-1.0)

    def test_metric_decay(self):
        """Test the decay order of the Schwarzschild slice."""
        end = get_entry('schwarzschild').end
        fit = end.metric_decay([20.0, 40.0, 80.0, 160.0])
        self.assertAlmostEqual(fit.exponent, 1.0, delta=0.05)

    def test_eguchi_hanson_decay(self):
        """Test the decay order of Eguchi-Hanson."""
        end = get_entry('eguchi_hanson').end
        fit = end.metric_decay([10.0, 20.0, 40.0])
        self.assertAlmostEqual(fit.exponent, 4.0, delta=0.05)

    def test_gamma_invariance(self):
        """Test that the ADM integrand is invariant under x -> -x."""
        end = get_entry('eguchi_hanson').end
        self.assertEqual(end.gamma_order, 2)
        quad = sphere_quadrature(4, 4)
        defect = end.gamma_defect(lambda x: adm_integrand(end, x), 5.0, quad)
        self.assertLess(defect, 1e-12)

    def test_trivial_group_has_no_defect(self):
        """Test that a trivial group is never checked."""
        end = get_entry('burns').end
        quad = sphere_quadrature(4, 2)
        self.assertEqual(end.gamma_defect(None, 1.0, quad), 0.0)
