"""Generic exception types."""

from .base import AkMassError


class ArgumentError(AkMassError):
    """An exception type for invalid arguments. This exception type should be
    sub-classed and is not meant to be raised explicitly.

    """


class InvalidArgumentTypeError(ArgumentError):
    """An exception type for invalid argument types.

    Passing something that is not an integer as a coordinate index is one
    way to see it::

        >>> from akmass import JetContext, lift_coordinate
        >>> ctx = JetContext(2, 1, (0.0, 0.0))
        >>> lift_coordinate(ctx, 'x')
        Traceback (most recent call last):
            ...
        akmass.errors.arguments.InvalidArgumentTypeError: Coordinate index \
must be an int

    """


class InvalidArgumentValueError(ArgumentError):
    """An exception type for invalid argument values.

    Coordinate indices have to address one of the context's variables::

        >>> from akmass import JetContext, lift_coordinate
        >>> ctx = JetContext(2, 1, (0.0, 0.0))
        >>> lift_coordinate(ctx, 5)
        Traceback (most recent call last):
            ...
        akmass.errors.arguments.InvalidArgumentValueError: Coordinate index 5 \
out of range for a 2-dimensional context

    """


class DimensionMismatchError(ArgumentError):
    """An exception type for inputs whose dimensions do not fit together.

    The LeBrun identities only make sense in real dimension four::

        >>> from akmass import get_entry, lebrun_identity_residuals
        >>> flat = get_entry('euclidean', dim=6)
        >>> lebrun_identity_residuals(flat.chart, (0.1,) * 6)
        Traceback (most recent call last):
            ...
        akmass.errors.arguments.DimensionMismatchError: The LeBrun identities \
are only defined in real dimension 4, not 6

    """


class RequiredArgumentError(ArgumentError):
    """An exception for when a required argument is missing.

    Sphere quadrature rules are built for a declared degree of exactness::

        >>> from akmass import sphere_quadrature
        >>> sphere_quadrature(3, None)
        Traceback (most recent call last):
            ...
        akmass.errors.arguments.RequiredArgumentError: A quadrature \
degree is required

    """
