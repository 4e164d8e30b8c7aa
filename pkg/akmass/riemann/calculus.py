"""Covariant derivatives, co-differentials and Laplacians.

Both the co-differential and the Laplacian follow the geometer's sign
convention: on Euclidean space ``laplacian(f) = -sum_i d^2 f / dx_i^2``, so
the Laplacian is a non-negative operator.

"""

import numpy as np

from akmass.errors import (
    DimensionMismatchError,
    InsufficientJetOrderError,
    InvalidArgumentValueError)
from akmass.jets import Jet, jet_array

from .geometry import geometry


def field_jets(ctx, field):
    """Evaluate a field given as a function of coordinate jets."""
    X = ctx.coordinates()
    coords = tuple(Jet(ctx, X[i]) for i in range(ctx.dim))
    return jet_array(ctx, field(coords))


def _check_valence(jets, valence, dim):
    try:
        upper, lower = (int(v) for v in valence)
    except (TypeError, ValueError):
        raise InvalidArgumentValueError(
            'Valence must be a pair (r, s), got {!r}'.format(valence))
    shape = jets.shape[:-1]
    if len(shape) != upper + lower or any(k != dim for k in shape):
        raise DimensionMismatchError(
            'Field of shape {} does not have valence ({}, {}) in dimension '
            '{}'.format(shape, upper, lower, dim))
    return upper, lower


def nabla_jets(geom, tensor, upper, lower):
    """Jets of the covariant derivative of a tensor jet array (derivative
    index first)."""
    if geom.ctx.order_of(tensor) == 0:
        raise InsufficientJetOrderError(
            'Covariant derivatives need jets of order at least 1')
    return geom.nabla(tensor, upper, lower)


def codifferential_jets(geom, tensor):
    """Jets of ``(delta T)_{b...} = -g^{ij} nabla_i T_{j b...}`` for a
    covariant tensor jet array."""
    rank = tensor.ndim - 1
    nabla = nabla_jets(geom, tensor, 0, rank)
    letters = 'abcdef'[:rank - 1]
    return -geom.ctx.einsum('ij,ij{0}->{0}'.format(letters), geom.g_inv,
                            nabla)


def laplacian_jets(geom, f):
    """Jets of ``-g^{ij} (d_i d_j f - Gamma^k_ij d_k f)``."""
    df = geom.ctx.partial(f)
    return codifferential_jets(geom, df)


def covariant_derivative(chart, field, p, valence=(0, 0)):
    """The Levi-Civita covariant derivative of a tensor field at ``p``.

    ``field`` maps a tuple of coordinate jets to the nested components of a
    tensor whose first ``r`` indices are contravariant and the next ``s``
    covariant, ``valence = (r, s)``. The result is indexed with the
    derivative direction first::

        >>> from akmass import MetricChart
        >>> polar = MetricChart.from_components(
        ...     2, lambda x: [[1.0, 0.0], [0.0, x[0] * x[0]]], name='polar')
        >>> metric = lambda x: [[1.0, 0.0], [0.0, x[0] * x[0]]]
        >>> nabla_g = covariant_derivative(polar, metric, (2.0, 0.3), (0, 2))
        >>> nabla_g.shape, bool(abs(nabla_g).max() < 1e-12)
        ((2, 2, 2), True)

    :raises DimensionMismatchError: If the field does not have the declared
        valence.

    """
    geom = geometry(chart, p, 1)
    jets = field_jets(geom.ctx, field)
    upper, lower = _check_valence(jets, valence, chart.dim)
    return geom.values(nabla_jets(geom, jets, upper, lower))


def divergence(chart, field, p, valence=(0, 1)):
    """The co-differential of a covariant tensor field, or the divergence
    ``nabla_i X^i`` of a vector field when ``valence`` is ``(1, 0)``."""
    geom = geometry(chart, p, 1)
    jets = field_jets(geom.ctx, field)
    upper, lower = _check_valence(jets, valence, chart.dim)
    if upper == 1 and lower == 0:
        nabla = nabla_jets(geom, jets, 1, 0)
        return float(np.trace(geom.values(nabla)))
    if upper != 0 or lower == 0:
        raise InvalidArgumentValueError(
            'The co-differential is defined for covariant tensors, not for '
            'valence ({}, {})'.format(upper, lower))
    out = geom.values(codifferential_jets(geom, jets))
    return float(out) if out.ndim == 0 else out


def laplacian(chart, f, p):
    """The (non-negative) Laplace-Beltrami operator of a scalar field.

        >>> from akmass import MetricChart
        >>> plane = MetricChart.from_components(
        ...     2, lambda x: [[1.0, 0.0], [0.0, 1.0]], name='plane')
        >>> laplacian(plane, lambda x: x[0] * x[0], (0.3, -0.2))
        -2.0

    """
    geom = geometry(chart, p, 2)
    jets = field_jets(geom.ctx, f)
    if jets.ndim != 1:
        raise DimensionMismatchError('The Laplacian takes a scalar field')
    return float(geom.values(laplacian_jets(geom, jets)))


def divergence_and_laplacian(chart, field, f, p):
    """The co-differential of the 1-form ``field`` and the Laplacian of the
    scalar ``f`` at ``p``, the two contracted derivatives entering the
    Einstein almost-Kahler curvature identity."""
    return divergence(chart, field, p), laplacian(chart, f, p)


def second_bianchi_residual(chart, p):
    """The largest component of the cyclic sum
    ``nabla_m R_ijkl + nabla_i R_jmkl + nabla_j R_mikl``."""
    geom = geometry(chart, p, 3)
    nabla = geom.values(nabla_jets(geom, geom.riemann, 0, 4))
    cyclic = (nabla + np.transpose(nabla, (1, 2, 0, 3, 4)) +
              np.transpose(nabla, (2, 0, 1, 3, 4)))
    return float(np.max(np.abs(cyclic)))
