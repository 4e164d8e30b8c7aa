"""Central-difference cross-check of jet coefficients."""

import itertools
import logging

import numpy as np

from akmass._assertions import assert_point
from akmass.errors import InvalidArgumentValueError

from .context import JetContext
from .jet import Jet, lift_coordinate


logger = logging.getLogger(__name__)


# derivative order -> (offsets, weights); all stencils are fourth order
CENTRAL_STENCILS = {
    1: ((-2, -1, 1, 2),
        np.array([1.0, -8.0, 8.0, -1.0]) / 12.0),
    2: ((-2, -1, 0, 1, 2),
        np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0),
    3: ((-3, -2, -1, 0, 1, 2, 3),
        np.array([1.0, -8.0, 13.0, 0.0, -13.0, 8.0, -1.0]) / 8.0),
}


def default_step(order, point):
    """The step balancing truncation and rounding error for derivatives of
    ``order`` at ``point``."""
    scale = max(1.0, float(np.max(np.abs(point))) if len(point) else 1.0)
    return np.finfo(float).eps ** (1.0 / (order + 2)) * scale


def central_difference(field, point, alpha, h):
    """Approximate ``d^alpha field`` at ``point`` with tensor-product central
    stencils of step ``h``."""
    point = np.asarray(point, dtype=float)
    axes = [(d, CENTRAL_STENCILS[a]) for d, a in enumerate(alpha) if a > 0]
    total = 0.0
    for combo in itertools.product(
            *[list(zip(offsets, weights)) for _, (offsets, weights) in axes]):
        weight = 1.0
        x = point.copy()
        for (d, _), (offset, w) in zip(axes, combo):
            weight *= w
            x[d] += offset * h
        if weight != 0.0:
            total += weight * float(field(tuple(x)))
    return total / h ** sum(alpha)


def finite_difference_check(field, p, order, h=None):
    """Compare the jet of ``field`` at ``p`` against central differences.

    ``field`` is called once with a tuple of coordinate :class:`Jet` objects
    and then repeatedly with tuples of floats, so it should be written with
    the elementwise functions of :mod:`akmass.jets`::

        >>> from akmass.jets import exp
        >>> table = finite_difference_check(
        ...     lambda x: exp(x[0] + x[1]), (0.0, 0.0), 2, h=1e-3)
        >>> sorted(table)
        [0, 1, 2]
        >>> max(table.values()) < 1e-6
        True

    :param field: The scalar field.
    :type field: Callable

    :param p: The point to expand at.
    :type p: Sequence[:class:`float <python:float>`]

    :param order: The highest derivative order to compare.
    :type order: :class:`int <python:int>`

    :param h: The stencil step; if omitted a per-order step
        ``eps ** (1 / (k + 2))`` scaled by the size of ``p`` is used.
    :type h: :class:`float <python:float>`, optional

    :returns: The maximum absolute discrepancy between Taylor coefficients
        per derivative order.
    :rtype: Dict[:class:`int <python:int>`, :class:`float <python:float>`]

    """
    point = assert_point(p, len(p))
    if h is not None and not h > 0:
        raise InvalidArgumentValueError(
            'Finite-difference step must be positive, got {}'.format(h))
    ctx = JetContext(len(point), order, point)
    coords = tuple(lift_coordinate(ctx, i) for i in range(ctx.dim))
    jet = field(coords)
    if not isinstance(jet, Jet):
        jet = Jet.constant(ctx, float(jet))

    table = {0: abs(jet.value - float(field(point)))}
    for alpha in ctx.tables().indices[1:]:
        k = sum(alpha)
        step = default_step(k, point) if h is None else h
        estimate = central_difference(field, point, alpha, step)
        coefficient = estimate / ctx.tables().factorials[
            ctx.tables().position[alpha]]
        table[k] = max(table.get(k, 0.0),
                       abs(coefficient - jet.coefficient(alpha)))
    logger.debug('Finite-difference residuals at %s: %s', point, table)
    return table
