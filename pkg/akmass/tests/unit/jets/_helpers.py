import traceback
import unittest

import sympy

from akmass.jets import JetContext, lift_coordinate, multi_indices


class JetTestCase(unittest.TestCase):

    """An extended TestCase with helpers for testing jets."""

    def helper_test_jet_against_sympy(self, field, expr, point, order,
                                      places=9):
        """Helper to compare every derivative of a jet with sympy.

        :param field: Callable taking the tuple of coordinate jets.
        :type field: Callable

        :param expr: The same field as a sympy expression in ``x0, x1, ...``.
        :type expr: sympy.Expr

        :param point: The seed point.
        :type point: Tuple[float]

        :param order: The jet order.
        :type order: int

        """
        symbols = sympy.symbols('x0:{}'.format(len(point)))
        ctx = JetContext(len(point), order, point)
        jet = field(tuple(lift_coordinate(ctx, i) for i in range(ctx.dim)))
        subs = dict(zip(symbols, point))
        for alpha in multi_indices(len(point), order):
            derivative = expr
            for s, a in zip(symbols, alpha):
                if a:
                    derivative = sympy.diff(derivative, s, a)
            expected = float(derivative.subs(subs).evalf())
            self.assertAlmostEqual(
                jet.derivative(alpha), expected, places=places,
                msg='derivative {} at {}'.format(alpha, point))

    def helper_test_raises(self, fn, expected_exc_type, *args, **kwargs):
        """Helper for testing exception conditions of jet operations.

        :param fn: The callable expected to raise.
        :type fn: Callable

        :param expected_exc_type: The exception type expected to be raised.
        :type expected_exc_type: Exception

        """
        did_catch = False

        try:
            fn(*args, **kwargs)
        except expected_exc_type:
            did_catch = True
        except Exception as e:
            traceback.print_exc()
            self.fail('Received exception of type ' + type(e).__name__ +
                      ' but was expecting type ' + expected_exc_type.__name__ +
                      '.')
            did_catch = True

        if not did_catch:
            self.fail('No exception thrown.')
