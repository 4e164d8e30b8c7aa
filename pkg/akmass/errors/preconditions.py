"""Exception types for inputs that do not meet an operation's
preconditions."""

from .base import AkMassError


class PreconditionError(AkMassError):
    """An exception type for unmet preconditions. This exception type should
    be sub-classed and is not meant to be raised explicitly.

    """


class NonEinsteinError(PreconditionError):
    """An exception type for Einstein-only identities applied to other
    metrics.

    The measured Einstein residual is kept on the exception::

        >>> from akmass import get_entry, sekigawa_apostolov_residual
        >>> burns = get_entry('burns', c=1.0)
        >>> sekigawa_apostolov_residual(burns.chart, (0.6, 0.2, 0.3, 0.1))
        Traceback (most recent call last):
            ...
        akmass.errors.preconditions.NonEinsteinError: Metric is not Einstein \
at (0.6, 0.2, 0.3, 0.1)...

    """

    def __init__(self, message, residual=None, *args):
        self._residual = residual
        super(NonEinsteinError, self).__init__(message, *args)

    @property
    def residual(self):
        """Relative size of Ric - (s/n) g at the offending point.

        :type: :class:`float <python:float>`

        """
        return self._residual


class NotCompactError(PreconditionError):
    """An exception type for global integrals over non-compact entries.

    ::

        >>> from akmass import blair_check, get_entry
        >>> blair_check(get_entry('eguchi_hanson'))
        Traceback (most recent call last):
            ...
        akmass.errors.preconditions.NotCompactError: Entry eguchi_hanson is \
not compact

    """


class OutsideDomainError(PreconditionError):
    """An exception type for points outside of a chart's domain or inside
    the excluded core of an asymptotic end.

    ::

        >>> from akmass import adm_integrand, get_entry
        >>> end = get_entry('schwarzschild', m=2.0).end
        >>> adm_integrand(end, (0.1, 0.0, 0.0))
        Traceback (most recent call last):
            ...
        akmass.errors.preconditions.OutsideDomainError: Point (0.1, 0.0, 0.0) \
lies inside the core radius 4.0 of the end

    """
