"""Argument assertion helpers."""

import numbers

import numpy as np

from akmass.errors import (
    DimensionMismatchError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError)


def assert_index(index, size, what='Index'):
    """Assert that ``index`` addresses one of ``size`` slots.

    :param index: The index to check.
    :type index: :class:`int <python:int>`

    :param size: The number of valid slots.
    :type size: :class:`int <python:int>`

    :param what: Name of the index used in error messages.
    :type what: :class:`str <python:str>`

    :raises InvalidArgumentTypeError: If ``index`` is not an integer.
    :raises InvalidArgumentValueError: If ``index`` is out of range.

    """
    if isinstance(index, bool) or not isinstance(index, numbers.Integral):
        raise InvalidArgumentTypeError('{} must be an int'.format(what))
    if not 0 <= index < size:
        raise InvalidArgumentValueError(
            '{} {} out of range for a {}-dimensional context'.format(
                what, index, size))


def assert_point(point, dim):
    """Coerce ``point`` to a tuple of floats of length ``dim``.

    :param point: Coordinates of the point.
    :type point: Sequence[:class:`float <python:float>`]

    :param dim: The expected number of coordinates.
    :type dim: :class:`int <python:int>`

    :returns: The coordinates as a tuple of floats.
    :rtype: Tuple[:class:`float <python:float>`]

    :raises DimensionMismatchError: If the number of coordinates is wrong.
    :raises InvalidArgumentValueError: If a coordinate is not finite.

    """
    coords = tuple(float(c) for c in np.ravel(point))
    if len(coords) != dim:
        raise DimensionMismatchError(
            'Expected a point with {} coordinates, got {}'.format(
                dim, len(coords)))
    if not all(np.isfinite(coords)):
        raise InvalidArgumentValueError(
            'Point {} has non-finite coordinates'.format(coords))
    return coords


def assert_positive(value, what):
    """Assert that ``value`` is a finite, strictly positive real.

    :raises InvalidArgumentValueError: If it is not.

    """
    if not (np.isfinite(value) and value > 0):
        raise InvalidArgumentValueError(
            '{} must be positive, got {}'.format(what, value))


def assert_in_range(value, low, high, what):
    """Assert ``low <= value <= high``.

    :raises InvalidArgumentValueError: If the value lies outside the range.

    """
    if not low <= value <= high:
        raise InvalidArgumentValueError(
            '{} must lie in [{}, {}], got {}'.format(what, low, high, value))


def assert_strictly_increasing(values, what, minimum_count=1):
    """Assert that ``values`` is a strictly increasing sequence.

    :param values: The sequence to check.
    :type values: Sequence[:class:`float <python:float>`]

    :param what: Name of the sequence used in error messages.
    :type what: :class:`str <python:str>`

    :param minimum_count: The minimum number of entries.
    :type minimum_count: :class:`int <python:int>`

    :returns: The values as a tuple of floats.
    :rtype: Tuple[:class:`float <python:float>`]

    :raises InvalidArgumentValueError: If there are too few values or they
        are not strictly increasing.

    """
    values = tuple(float(v) for v in values)
    if len(values) < minimum_count:
        raise InvalidArgumentValueError(
            '{} needs at least {} entries, got {}'.format(
                what, minimum_count, len(values)))
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidArgumentValueError(
            '{} must be strictly increasing, got {}'.format(what, values))
    return values
