"""Exception types for failures of numerical evaluation."""

from .base import AkMassError


class NumericalError(AkMassError):
    """An exception type for numerical failures. This exception type should
    be sub-classed and is not meant to be raised explicitly.

    """


class ArithmeticDomainError(NumericalError):
    """An exception type for jet arithmetic outside of a function's domain.

    The offending operation and the seed point of the evaluation context are
    kept on the exception::

        >>> from akmass import JetContext, Jet
        >>> ctx = JetContext(1, 2, (0.0,))
        >>> Jet.constant(ctx, -1.0).sqrt()
        Traceback (most recent call last):
            ...
        akmass.errors.numerics.ArithmeticDomainError: sqrt of non-positive \
value -1.0 at point (0.0,)

    """

    def __init__(self, message, op=None, point=None, *args):
        self._op = op
        self._point = point
        super(ArithmeticDomainError, self).__init__(message, *args)

    @property
    def op(self):
        """The name of the operation that left its domain.

        :type: :class:`str <python:str>`

        """
        return self._op

    @property
    def point(self):
        """The seed point of the failed evaluation.

        :type: Tuple[:class:`float <python:float>`]

        """
        return self._point


class DegenerateMetricError(NumericalError):
    """An exception type for metric matrices that cannot be inverted.

    ::

        >>> from akmass import MetricChart, christoffel
        >>> chart = MetricChart.from_components(
        ...     2, lambda x: [[1.0, 1.0], [1.0, 1.0]], name='degenerate')
        >>> christoffel(chart, (0.0, 0.0))
        Traceback (most recent call last):
            ...
        akmass.errors.numerics.DegenerateMetricError: Metric of chart \
degenerate is not positive definite at (0.0, 0.0)

    """

    def __init__(self, message, point=None, *args):
        self._point = point
        super(DegenerateMetricError, self).__init__(message, *args)

    @property
    def point(self):
        """The point at which the metric degenerates.

        :type: Tuple[:class:`float <python:float>`]

        """
        return self._point


class InsufficientJetOrderError(NumericalError):
    """An exception type for derivatives requested beyond a jet's order.

    ::

        >>> from akmass import JetContext
        >>> import numpy as np
        >>> ctx = JetContext(2, 0, (0.0, 0.0))
        >>> ctx.partial(ctx.constant(np.ones(3)))
        Traceback (most recent call last):
            ...
        akmass.errors.numerics.InsufficientJetOrderError: Cannot \
differentiate an order-0 jet

    """


class QuadratureError(NumericalError):
    """An exception type for quadrature rules that cannot be built.

    ::

        >>> from akmass import sphere_quadrature
        >>> sphere_quadrature(9, 4)
        Traceback (most recent call last):
            ...
        akmass.errors.numerics.QuadratureError: Sphere quadrature supports \
ambient dimensions 3 through 8, not 9

    """


class SquareRootFailureError(NumericalError):
    """An exception type for a matrix square root that did not converge.

    It records the condition bound of the matrix the iteration started from.

    """

    def __init__(self, message, condition=None, *args):
        self._condition = condition
        super(SquareRootFailureError, self).__init__(message, *args)

    @property
    def condition(self):
        """Condition number of the matrix whose root failed.

        :type: :class:`float <python:float>`

        """
        return self._condition
