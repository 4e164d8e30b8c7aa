"""Tests for the central-difference cross-check of jets."""

from akmass.errors import ArithmeticDomainError, InvalidArgumentValueError
from akmass.jets import (
    Jet,
    JetContext,
    atan2,
    central_difference,
    exp,
    finite_difference_check,
    jet_arith,
    sin,
    sqrt)

from ._helpers import JetTestCase


class TestFiniteDifference(JetTestCase):

    def test_smooth_field(self):
        """Test that jets agree with central differences."""
        table = finite_difference_check(
            lambda x: exp(0.3 * x[0]) * sin(x[1]) + x[0] * x[1] * x[1],
            (0.4, -0.6), 3)
        self.assertEqual(sorted(table), [0, 1, 2, 3])
        self.assertLess(table[0], 1e-14)
        self.assertLess(table[1], 1e-8)
        self.assertLess(table[2], 1e-6)
        self.assertLess(table[3], 1e-3)

    def test_central_difference_of_cubic(self):
        """Test that fourth-order stencils are exact on cubics."""
        value = central_difference(lambda x: x[0] ** 3, (1.0,), (2,), 0.1)
        self.assertAlmostEqual(value, 6.0, places=9)

    def test_bad_step(self):
        """Test a non-positive stencil step."""
        self.helper_test_raises(
            finite_difference_check, InvalidArgumentValueError,
            lambda x: x[0], (0.0,), 1, h=0.0)


class TestJetDomainErrors(JetTestCase):

    def setUp(self):
        self.ctx = JetContext(2, 2, (0.0, 1.0))

    def test_sqrt_of_negative(self):
        """Test the square root of a negative jet."""
        self.helper_test_raises(sqrt, ArithmeticDomainError,
                                Jet.constant(self.ctx, -1.0))

    def test_error_carries_operation(self):
        """Test that domain errors name the operation and point."""
        try:
            Jet.constant(self.ctx, 0.0).log()
        except ArithmeticDomainError as e:
            self.assertEqual(e.op, 'log')
            self.assertEqual(e.point, (0.0, 1.0))
        else:
            self.fail('No exception thrown.')

    def test_division_by_zero_jet(self):
        """Test dividing by a jet with zero value."""
        x = Jet.variable(self.ctx, 0)
        self.helper_test_raises(lambda: 1.0 / x, ArithmeticDomainError)

    def test_division_by_zero_number(self):
        """Test dividing a jet by the number zero."""
        y = Jet.variable(self.ctx, 1)
        self.helper_test_raises(lambda: y / 0, ArithmeticDomainError)

    def test_atan2_at_origin(self):
        """Test atan2 of two zero-valued jets."""
        x = Jet.variable(self.ctx, 0)
        self.helper_test_raises(atan2, ArithmeticDomainError, x, x * 2.0)

    def test_unknown_operation(self):
        """Test jet_arith with an unknown operation."""
        self.helper_test_raises(jet_arith, InvalidArgumentValueError,
                                Jet.constant(self.ctx, 1.0), None, 'tan')

    def test_missing_operand(self):
        """Test a binary jet_arith operation without a second operand."""
        self.helper_test_raises(jet_arith, InvalidArgumentValueError,
                                Jet.constant(self.ctx, 1.0), None, 'add')

    def test_mixed_contexts(self):
        """Test combining jets of different seed points."""
        other = JetContext(2, 2, (1.0, 1.0))
        self.helper_test_raises(
            lambda: Jet.variable(self.ctx, 0) + Jet.variable(other, 0),
            InvalidArgumentValueError)
