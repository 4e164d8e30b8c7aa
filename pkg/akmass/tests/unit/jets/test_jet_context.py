"""Tests for jet contexts and jet arrays."""

import numpy as np

from akmass.errors import (
    InvalidArgumentTypeError,
    InvalidArgumentValueError)
from akmass.jets import (
    Jet,
    JetContext,
    coefficient_count,
    jet_array,
    lift_coordinate,
    multi_indices)

from ._helpers import JetTestCase


class TestJetContext(JetTestCase):

    def test_coefficient_count(self):
        """Test the number of coefficients of a jet."""
        self.assertEqual(coefficient_count(2, 3), 10)
        self.assertEqual(coefficient_count(4, 2), 15)
        self.assertEqual(len(multi_indices(3, 3)), coefficient_count(3, 3))

    def test_storage_order(self):
        """Test that multi-indices are graded by degree."""
        self.assertEqual(
            multi_indices(2, 2),
            ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)))

    def test_mul(self):
        """Test the product of coordinate jets."""
        ctx = JetContext(2, 2, (2.0, 3.0))
        x, y = ctx.coordinates()
        np.testing.assert_array_equal(
            ctx.mul(x, y), [6.0, 3.0, 2.0, 0.0, 1.0, 0.0])

    def test_mixed_orders_truncate(self):
        """Test that products of jets of different orders truncate."""
        ctx = JetContext(2, 2, (1.0, 1.0))
        x = ctx.lift(0)
        low = ctx.truncate(ctx.lift(1), 1)
        self.assertEqual(ctx.order_of(ctx.mul(x, low)), 1)

    def test_einsum_matrix_product(self):
        """Test that a jet contraction is the matrix product of jets."""
        ctx = JetContext(2, 2, (0.5, -0.5))
        x, y = (lift_coordinate(ctx, i) for i in range(2))
        A = jet_array(ctx, [[x, y], [1.0, x * y]])
        B = jet_array(ctx, [[y, 2.0], [x * x, -x]])
        product = ctx.einsum('ij,jk->ik', A, B)
        expected = [[x * y + y * x * x, 2.0 * x - y * x],
                    [y + x * y * x * x, 2.0 - x * y * x]]
        np.testing.assert_allclose(product, jet_array(ctx, expected),
                                   atol=1e-14)
        np.testing.assert_allclose(ctx.matmul(A, B), product, atol=1e-14)

    def test_inverse(self):
        """Test that the inverse of a jet matrix is a two-sided inverse."""
        ctx = JetContext(2, 3, (0.2, 0.7))
        x, y = (lift_coordinate(ctx, i) for i in range(2))
        A = jet_array(ctx, [[2.0 + x, y], [x * y, 3.0 - y * y]])
        identity = ctx.matmul(A, ctx.inv(A))
        np.testing.assert_allclose(identity, ctx.constant(np.eye(2)),
                                   atol=1e-12)

    def test_partial_shape(self):
        """Test that partial derivatives put the derivative index first."""
        ctx = JetContext(3, 2, (0.0, 0.0, 0.0))
        field = ctx.constant(np.ones((2, 2)))
        self.assertEqual(ctx.partial(field).shape,
                         (3, 2, 2, coefficient_count(3, 1)))

    def test_jet_coeffs(self):
        """Test the multi-index view of a jet."""
        ctx = JetContext(2, 2, (1.0, 2.0))
        x, y = (lift_coordinate(ctx, i) for i in range(2))
        jet = x * x * y
        self.assertEqual(jet.coeffs[(1, 1)], 2.0)
        self.assertEqual(jet.derivative((2, 0)), 4.0)
        self.assertEqual(jet.coefficient((3, 0)), 0.0)

    def test_bad_dim_type(self):
        """Test a non-int dimension."""
        self.helper_test_raises(JetContext, InvalidArgumentTypeError,
                                '2', 1, (0.0, 0.0))

    def test_order_too_high(self):
        """Test an order above the supported maximum."""
        self.helper_test_raises(JetContext, InvalidArgumentValueError,
                                2, 4, (0.0, 0.0))

    def test_point_of_wrong_length(self):
        """Test a seed point with too few coordinates."""
        self.helper_test_raises(JetContext, InvalidArgumentValueError,
                                3, 1, (0.0, 0.0))

    def test_foreign_array(self):
        """Test the order of an array of the wrong size."""
        ctx = JetContext(2, 2, (0.0, 0.0))
        self.helper_test_raises(ctx.order_of, InvalidArgumentValueError,
                                np.zeros(4))

    def test_bad_coordinate_index(self):
        """Test lifting a coordinate that does not exist."""
        ctx = JetContext(2, 2, (0.0, 0.0))
        self.helper_test_raises(lift_coordinate, InvalidArgumentValueError,
                                ctx, 2)

    def test_bad_contraction(self):
        """Test an unsupported contraction string."""
        ctx = JetContext(2, 1, (0.0, 0.0))
        A = ctx.constant(np.eye(2))
        self.helper_test_raises(ctx.einsum, InvalidArgumentValueError,
                                'ij->ji', A, A)

    def test_wrong_coefficient_count(self):
        """Test building a jet from too many coefficients."""
        ctx = JetContext(1, 1, (0.0,))
        self.helper_test_raises(Jet, InvalidArgumentValueError,
                                ctx, [1.0, 2.0, 3.0])
