"""Tests for covariant derivatives, co-differentials and Laplacians."""

import numpy as np

from akmass.catalog import euclidean, fubini_study, round_sphere
from akmass.errors import (
    DegenerateMetricError,
    DimensionMismatchError,
    InvalidArgumentValueError,
    OutsideDomainError)
from akmass.riemann import (
    MetricChart,
    christoffel,
    covariant_derivative,
    divergence,
    divergence_and_laplacian,
    laplacian,
    rotate_chart,
    second_bianchi_residual)

from ._helpers import RiemannTestCase


def _plane():
    return euclidean(2).chart


def _polar():
    return MetricChart.from_components(
        2, lambda x: [[1.0, 0.0], [0.0, x[0] * x[0]]], name='polar',
        domain=lambda p: p[0] > 0)


class TestLaplacian(RiemannTestCase):

    def test_sign_convention(self):
        """Test that the Laplacian of x^2 on the plane is -2."""
        self.assertEqual(laplacian(_plane(), lambda x: x[0] * x[0],
                                   (0.3, -0.2)), -2.0)

    def test_harmonic(self):
        """Test that x^2 - y^2 is harmonic."""
        self.assertEqual(
            laplacian(_plane(), lambda x: x[0] * x[0] - x[1] * x[1],
                      (0.5, 0.1)), 0.0)

    def test_polar_radius(self):
        """Test the Laplacian of r^2 in polar coordinates."""
        self.assertAlmostEqual(
            laplacian(_polar(), lambda x: x[0] * x[0], (1.5, 0.3)), -4.0,
            places=12)

    def test_sphere_eigenfunction(self):
        """Test a first eigenfunction of the round 2-sphere."""
        # the height function (1 - |x|^2) / (1 + |x|^2) has eigenvalue 2
        def height(x):
            u = x[0] * x[0] + x[1] * x[1]
            return (1.0 - u) / (1.0 + u)

        p = (0.4, -0.7)
        u = p[0] ** 2 + p[1] ** 2
        self.assertAlmostEqual(
            laplacian(round_sphere(2).chart, height, p),
            2.0 * (1.0 - u) / (1.0 + u), places=10)

    def test_vector_field_rejected(self):
        """Test the Laplacian of a non-scalar field."""
        self.helper_test_raises(laplacian, DimensionMismatchError, _plane(),
                                lambda x: [x[0], x[1]], (0.0, 0.0))


class TestDivergence(RiemannTestCase):

    def test_position_field(self):
        """Test the divergence of the position vector field."""
        self.assertEqual(divergence(_plane(), lambda x: [x[0], x[1]],
                                    (0.2, 0.3), valence=(1, 0)), 2.0)

    def test_codifferential_of_exact_form(self):
        """Test that the co-differential of df is the Laplacian of f."""
        field = (lambda x: [2.0 * x[0] * x[1], x[0] * x[0]])
        delta, lap = divergence_and_laplacian(
            _polar(), field, lambda x: x[0] * x[0] * x[1], (1.2, 0.5))
        self.assertAlmostEqual(delta, lap, places=12)

    def test_bad_valence(self):
        """Test a field that does not match its declared valence."""
        self.helper_test_raises(divergence, DimensionMismatchError, _plane(),
                                lambda x: [x[0], x[1]], (0.2, 0.3),
                                valence=(0, 2))

    def test_contravariant_tensor_rejected(self):
        """Test the co-differential of a contravariant 2-tensor."""
        self.helper_test_raises(
            divergence, InvalidArgumentValueError, _plane(),
            lambda x: [[x[0], 0.0], [0.0, x[1]]], (0.2, 0.3),
            valence=(2, 0))


class TestCovariantDerivative(RiemannTestCase):

    def test_metric_is_parallel(self):
        """Test that the metric has vanishing covariant derivative."""
        # on CP^1 the Fubini-Study metric is (1 + |x|^2)^-2 delta
        def metric(x):
            factor = 1.0 / ((1.0 + x[0] * x[0] + x[1] * x[1]) ** 2)
            return [[factor, 0.0], [0.0, factor]]

        nabla_g = covariant_derivative(fubini_study(1).chart, metric,
                                       (0.4, -0.9), (0, 2))
        self.assertEqual(nabla_g.shape, (2, 2, 2))
        self.assertLess(float(np.max(np.abs(nabla_g))), 1e-12)

    def test_parallel_structure_on_kahler_chart(self):
        """Test that the complex structure of CP^2 is parallel."""
        J = fubini_study(2).chart.structure_at((0.1, 0.2, 0.3, 0.4))
        nabla_J = covariant_derivative(
            fubini_study(2).chart, lambda x: J.tolist(), (0.1, 0.2, 0.3, 0.4),
            (1, 1))
        self.assertLess(float(np.max(np.abs(nabla_J))), 1e-12)

    def test_second_bianchi(self):
        """Test the second Bianchi identity with order-3 jets."""
        for chart, p in ((fubini_study(2).chart, (0.2, 0.5, -0.3, 0.4)),
                         (round_sphere(3).chart, (0.6, -0.1, 0.2))):
            self.assertLess(second_bianchi_residual(chart, p), 1e-9)


class TestChartErrors(RiemannTestCase):

    def test_degenerate_metric(self):
        """Test a metric that is singular at the point."""
        chart = MetricChart.from_components(
            2, lambda x: [[x[0] * x[0], 0.0], [0.0, 1.0]])
        self.helper_test_raises(christoffel, DegenerateMetricError, chart,
                                (0.0, 1.0))

    def test_wrong_point_length(self):
        """Test a point with the wrong number of coordinates."""
        self.helper_test_raises(christoffel, DimensionMismatchError,
                                _plane(), (0.0, 1.0, 2.0))

    def test_outside_domain(self):
        """Test a point outside the domain of the chart."""
        self.helper_test_raises(christoffel, OutsideDomainError, _polar(),
                                (-1.0, 0.0))

    def test_non_orthogonal_rotation(self):
        """Test pulling back along a non-orthogonal matrix."""
        self.helper_test_raises(rotate_chart, InvalidArgumentValueError,
                                _plane(), [[1.0, 1.0], [0.0, 1.0]])

    def test_dimension_one(self):
        """Test a one-dimensional chart."""
        self.helper_test_raises(MetricChart, InvalidArgumentValueError, 1,
                                lambda ctx, X: ctx.constant([[1.0]]))
