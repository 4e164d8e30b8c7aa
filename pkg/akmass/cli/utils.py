"""Utilities for the akmass command-line interface."""

from __future__ import print_function

import contextlib
import logging
import sys

from akmass._assertions import assert_strictly_increasing
from akmass.errors import InvalidArgumentValueError


LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def print_info(*args, **kwargs):
    """A thin wrapper around ``print``, explicitly printing to stdout."""
    print(*args, file=sys.stdout, **kwargs)


def print_err(*args, **kwargs):
    """A thin wrapper around ``print``, explicitly printing to stderr."""
    print(*args, file=sys.stderr, **kwargs)


def configure_logging(verbosity):
    """Install the single stderr handler of the ``akmass`` logger:
    WARNING by default, INFO with one ``-v`` and DEBUG with two."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                      logging.DEBUG)
    logger = logging.getLogger('akmass')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def parse_floats(text, what):
    """Parse a comma-separated list of floats.

        >>> parse_floats('50,100, 200', 'Radii')
        (50.0, 100.0, 200.0)

    :raises InvalidArgumentValueError: If an item is not a number.

    """
    if isinstance(text, (list, tuple)):
        items = text
    else:
        items = [item for item in str(text).split(',') if item.strip()]
    try:
        return tuple(float(item) for item in items)
    except (TypeError, ValueError):
        raise InvalidArgumentValueError(
            '{} must be a comma-separated list of numbers, got "{}"'.format(
                what, text))


def parse_radii(text):
    """Parse a strictly increasing list of radii."""
    return assert_strictly_increasing(parse_floats(text, 'Radii'), 'Radii')


@contextlib.contextmanager
def open_output(path):
    """Yield a text stream for ``path``, or stdout when it is ``None``."""
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w', newline='') as f:
            yield f
