"""Tests for sphere, radial and box quadrature and the evaluation loop."""

import itertools
import math
from unittest import mock

import numpy as np

from akmass import (
    InvalidArgumentTypeError,
    InvalidArgumentValueError,
    QuadratureError,
    RequiredArgumentError,
    ball_integral,
    box_rule,
    circle_rule,
    compensated_sum,
    evaluate_points,
    radial_rule,
    sphere_integral,
    sphere_quadrature,
    sphere_volume,
    worker_count)
from akmass.tests.unit.ale._helpers import AleTestCase


class TestSphereQuadrature(AleTestCase):

    def test_total_weight(self):
        """Test that the weights add up to the sphere volume."""
        for n in range(3, 9):
            quad = sphere_quadrature(n, 4)
            self.assertAlmostEqual(quad.total_weight, sphere_volume(n),
                                   places=12)
            self.assertTrue(np.all(quad.weights > 0.0))

    def test_nodes_are_unit_vectors(self):
        """Test that every node lies on the unit sphere."""
        quad = sphere_quadrature(4, 6)
        np.testing.assert_allclose(np.linalg.norm(quad.nodes, axis=1), 1.0,
                                   atol=1e-14)

    def test_exact_on_monomials(self):
        """Test exactness on every monomial up to the degree."""
        for n, degree in ((3, 6), (4, 4), (5, 4)):
            quad = sphere_quadrature(n, degree)
            for exponents in itertools.product(range(degree + 1), repeat=n):
                if sum(exponents) <= degree:
                    self.helper_test_sphere_exactness(quad, exponents)

    def test_known_moments(self):
        """Test moments of S^2 and S^3 in closed form."""
        quad = sphere_quadrature(3, 4)
        self.assertAlmostEqual(quad.integrate(quad.nodes[:, 0] ** 4),
                               4.0 * math.pi / 5.0, places=12)
        quad = sphere_quadrature(4, 4)
        values = quad.nodes[:, 0] ** 2 * quad.nodes[:, 1] ** 2
        self.assertAlmostEqual(quad.integrate(values), math.pi ** 2 / 12.0,
                               places=12)

    def test_circle_rule(self):
        """Test the trapezoidal rule on the circle."""
        quad = circle_rule(4)
        self.assertEqual(len(quad), 5)
        self.assertAlmostEqual(quad.integrate(quad.nodes[:, 0] ** 4),
                               0.75 * math.pi, places=12)

    def test_rules_are_cached_and_read_only(self):
        """Test that repeated requests share one immutable rule."""
        quad = sphere_quadrature(3, 8)
        self.assertIs(quad, sphere_quadrature(3, 8))
        self.assertRaises(ValueError, quad.weights.__setitem__, 0, 1.0)

    def test_errors(self):
        """Test unsupported degrees and dimensions."""
        self.helper_test_raises(sphere_quadrature, RequiredArgumentError, 3,
                                None)
        self.helper_test_raises(sphere_quadrature, InvalidArgumentTypeError,
                                3, 2.0)
        self.helper_test_raises(sphere_quadrature, QuadratureError, 3, 31)
        self.helper_test_raises(sphere_quadrature, QuadratureError, 2, 4)
        self.helper_test_raises(sphere_quadrature, QuadratureError, 9, 4)
        self.helper_test_raises(sphere_quadrature, QuadratureError, 8, 30)


class TestRadialAndBoxRules(AleTestCase):

    def test_radial_polynomial(self):
        """Test a polynomial on [0, 1]."""
        r, w = radial_rule(0.0, 1.0)
        self.assertAlmostEqual(float(w @ r ** 3), 0.25, places=14)

    def test_radial_logarithmic_panels(self):
        """Test 1 / r on [1, 16]."""
        r, w = radial_rule(1.0, 16.0)
        self.assertAlmostEqual(float(w @ (1.0 / r)), math.log(16.0),
                               places=9)

    def test_radial_infinite_interval(self):
        """Test r^-2 on [1, inf)."""
        r, w = radial_rule(1.0, math.inf, nodes=16)
        self.assertAlmostEqual(float(w @ r ** -2), 1.0, places=8)

    def test_radial_empty_interval(self):
        """Test an empty interval."""
        self.helper_test_raises(radial_rule, InvalidArgumentValueError, 2.0,
                                1.0)

    def test_box_rule(self):
        """Test x y^2 on [0, 1] x [0, 2]."""
        points, weights = box_rule(((0.0, 1.0), (0.0, 2.0)), 3)
        values = points[:, 0] * points[:, 1] ** 2
        self.assertAlmostEqual(float(weights @ values), 4.0 / 3.0,
                               places=13)

    def test_ball_volume(self):
        """Test the volume of the unit ball of R^4."""
        value = ball_integral(lambda x: 1.0, 4, 0.0, 1.0, 2)
        self.assertAlmostEqual(value, 0.5 * math.pi ** 2, places=11)

    def test_sphere_integral_scaling(self):
        """Test the r^(n-1) scaling of sphere integrals."""
        quad = sphere_quadrature(3, 2)
        value = sphere_integral(lambda x: x[0] ** 2, quad, 2.0)
        self.assertAlmostEqual(value, 4.0 * 4.0 * math.pi / 3.0 * 4.0,
                               places=11)


class TestEvaluation(AleTestCase):

    def test_compensated_sum(self):
        """Test that cancellation does not lose the small term."""
        self.assertEqual(compensated_sum([1e16, 1.0, -1e16], [1, 1, 1]), 1.0)

    def test_threaded_order(self):
        """Test that threads keep the input order."""
        points = [(float(k), 0.0) for k in range(20)]
        serial = evaluate_points(lambda p: p[0] ** 2, points, 1)
        threaded = evaluate_points(lambda p: p[0] ** 2, points, 4)
        np.testing.assert_array_equal(serial, threaded)
        np.testing.assert_array_equal(serial, np.arange(20.0) ** 2)

    def test_worker_count(self):
        """Test the thread count variable."""
        with mock.patch.dict('os.environ', {'AKMASS_THREADS': '3'}):
            self.assertEqual(worker_count(), 3)
        with mock.patch.dict('os.environ', {'AKMASS_THREADS': '0'}):
            self.helper_test_raises(worker_count, InvalidArgumentValueError)
        with mock.patch.dict('os.environ', {'AKMASS_THREADS': 'many'}):
            self.helper_test_raises(worker_count, InvalidArgumentValueError)
        with mock.patch.dict('os.environ', clear=True):
            self.assertEqual(worker_count(), 1)
