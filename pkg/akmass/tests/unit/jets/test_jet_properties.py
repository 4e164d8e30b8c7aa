"""Property-based tests for jet algebra."""

import unittest

import numpy as np

from hypothesis import given, settings
from hypothesis import strategies as st

from akmass.jets import JetContext, exp, lift_coordinate, log, sqrt

coordinate = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
points = st.tuples(coordinate, coordinate)
coefficients = st.lists(st.floats(min_value=-3.0, max_value=3.0,
                                  allow_nan=False), min_size=6, max_size=6)


def _jets(point, order=3):
    ctx = JetContext(2, order, point)
    return ctx, lift_coordinate(ctx, 0), lift_coordinate(ctx, 1)


def _quadratic(c, x, y):
    return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y + \
        c[5] * y * y


class TestJetProperties(unittest.TestCase):

    @settings(max_examples=50, deadline=None)
    @given(points, coefficients, coefficients)
    def test_product_is_distributive(self, point, a, b):
        """Test that products distribute over sums."""
        _, x, y = _jets(point)
        p, q = _quadratic(a, x, y), _quadratic(b, x, y)
        lhs = (p + q) * (p - q)
        rhs = p * p - q * q
        np.testing.assert_allclose(lhs.array, rhs.array, atol=1e-9)

    @settings(max_examples=50, deadline=None)
    @given(points, coefficients)
    def test_exp_inverts_log(self, point, a):
        """Test that exp(log(u)) is u for positive u."""
        _, x, y = _jets(point)
        u = 1.0 + _quadratic(a, x, y) * _quadratic(a, x, y)
        np.testing.assert_allclose(exp(log(u)).array, u.array,
                                   rtol=1e-9, atol=1e-9)

    @settings(max_examples=50, deadline=None)
    @given(points, coefficients)
    def test_sqrt_squares_back(self, point, a):
        """Test that the square of a square root is the radicand."""
        _, x, y = _jets(point)
        u = 2.0 + x * x + _quadratic(a, x, y) * _quadratic(a, x, y)
        root = sqrt(u)
        np.testing.assert_allclose((root * root).array, u.array,
                                   rtol=1e-9, atol=1e-9)

    @settings(max_examples=50, deadline=None)
    @given(points, coefficients)
    def test_partial_matches_gradient(self, point, a):
        """Test that partial derivatives of the context match gradients."""
        ctx, x, y = _jets(point)
        p = _quadratic(a, x, y)
        partial = ctx.partial(p.array)
        self.assertEqual(partial.shape, (2, ctx.size(2)))
        np.testing.assert_allclose(ctx.values(partial), p.gradient,
                                   atol=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(points, coefficients)
    def test_division_inverts_product(self, point, a):
        """Test that dividing a product by a factor returns the other."""
        _, x, y = _jets(point)
        d = 3.0 + x * x + y * y
        p = _quadratic(a, x, y)
        np.testing.assert_allclose(((p * d) / d).array, p.array, atol=1e-9)
