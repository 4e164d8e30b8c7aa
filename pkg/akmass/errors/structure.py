"""Exception types for violated geometric structure."""

from .base import AkMassError


class StructureError(AkMassError):
    """An exception type for violated structure invariants. This exception
    type should be sub-classed and is not meant to be raised explicitly.

    """


class CompatibilityError(StructureError):
    """An exception type for an almost complex structure that does not fit
    its metric.

    The failed invariant is named in the message and kept on the exception::

        >>> from akmass import AlmostHermitianChart, MetricChart
        >>> from akmass import fundamental_form
        >>> base = MetricChart.from_components(
        ...     2, lambda x: [[1.0, 0.0], [0.0, 4.0]], name='stretched')
        >>> chart = AlmostHermitianChart.from_components(
        ...     base, lambda x: [[0.0, -1.0], [1.0, 0.0]])
        >>> fundamental_form(chart, (0.0, 0.0))
        Traceback (most recent call last):
            ...
        akmass.errors.structure.CompatibilityError: Invariant g(J., J.) = g \
violated at (0.0, 0.0): residual 3.0

    """

    def __init__(self, message, invariant=None, *args):
        self._invariant = invariant
        super(CompatibilityError, self).__init__(message, *args)

    @property
    def invariant(self):
        """The name of the invariant that failed.

        :type: :class:`str <python:str>`

        """
        return self._invariant


class InternalConsistencyError(StructureError):
    """An exception type for derived objects that fail their own defining
    property, such as a Chern connection that does not preserve J."""


class CalibrationError(StructureError):
    """An exception type for a normalization identity that does not hold,
    such as the wedge identity tying the Chern-Ricci form to s + s*."""
