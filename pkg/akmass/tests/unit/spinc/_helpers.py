import traceback
import unittest

import numpy as np


class SpinorTestCase(unittest.TestCase):

    """An extended TestCase with helpers for spinor algebra."""

    def helper_test_anticommutation(self, gens):
        """Helper to test ``{c_i, c_j} = -2 delta_ij`` for a stack of
        Clifford matrices."""
        size = gens.shape[1]
        for i in range(gens.shape[0]):
            for j in range(gens.shape[0]):
                anti = gens[i] @ gens[j] + gens[j] @ gens[i]
                expected = -2.0 * np.eye(size) if i == j else 0.0
                np.testing.assert_allclose(anti, expected, atol=1e-14,
                                           err_msg='pair {}, {}'.format(i, j))

    def helper_test_raises(self, fn, expected_exc_type, *args, **kwargs):
        """Helper for testing exception conditions of spinor operations.

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
