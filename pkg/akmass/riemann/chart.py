"""Coordinate charts carrying a Riemannian metric."""

import numpy as np

from akmass._assertions import assert_point
from akmass.errors import (
    DegenerateMetricError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError,
    OutsideDomainError)
from akmass.jets import Jet, JetContext, jet_array


class MetricChart(object):

    """A coordinate domain together with jet-evaluable metric components.

    The metric is given as a callable ``metric(ctx, X)`` receiving the jet
    context and a ``(dim, N)`` jet array of coordinate functions and
    returning the ``(dim, dim, N)`` jet array of ``g_ij``. Passing the
    coordinates (rather than reading them off the context) lets charts be
    pulled back along linear maps; see :meth:`rotated`. For simple charts
    :meth:`from_components` builds this callable from a function of
    coordinate :class:`Jet <akmass.jets.jet.Jet>` objects::

        >>> chart = MetricChart.from_components(
        ...     2, lambda x: [[1.0, 0.0], [0.0, x[0] * x[0]]], name='polar')
        >>> chart.metric_at((2.0, 0.0))
        array([[1., 0.],
               [0., 4.]])

    :param dim: The dimension of the chart.
    :type dim: :class:`int <python:int>`

    :param metric: The metric callable.
    :type metric: Callable

    :param name: A short name used in messages and reports.
    :type name: :class:`str <python:str>`

    :param domain: Predicate on points (tuples of floats) telling whether the
        chart is valid there; if omitted every point is accepted.
    :type domain: Callable, optional

    """

    def __init__(self, dim, metric, name='chart', domain=None):
        if isinstance(dim, bool) or not isinstance(dim, int):
            raise InvalidArgumentTypeError('Chart dimension must be an int')
        if dim < 2:
            raise InvalidArgumentValueError(
                'Charts need dimension at least 2, got {}'.format(dim))
        self._dim = dim
        self._metric = metric
        self._name = name
        self._domain = domain

    @classmethod
    def from_components(cls, dim, components, name='chart', domain=None):
        """Build a chart from a function of coordinate jets returning the
        nested ``dim x dim`` metric components (jets or plain numbers)."""
        def metric(ctx, X):
            coords = tuple(Jet(ctx, X[i]) for i in range(dim))
            return jet_array(ctx, components(coords))
        return cls(dim, metric, name=name, domain=domain)

    @property
    def dim(self):
        """The dimension of the chart.

        :type: :class:`int <python:int>`

        """
        return self._dim

    @property
    def name(self):
        """The name of the chart.

        :type: :class:`str <python:str>`

        """
        return self._name

    @property
    def domain(self):
        """The domain predicate of the chart, or ``None``.

        :type: Callable

        """
        return self._domain

    def __repr__(self):
        return '<{} {} dim={}>'.format(
            type(self).__name__, self._name, self._dim)

    def contains(self, point):
        """Whether ``point`` lies in the domain of the chart."""
        return self._domain is None or bool(self._domain(tuple(point)))

    def check_point(self, point):
        """Coerce ``point`` to a tuple of floats inside the domain.

        :raises DimensionMismatchError: If the point has the wrong length.
        :raises OutsideDomainError: If the point lies outside the domain.

        """
        point = assert_point(point, self._dim)
        if not self.contains(point):
            raise OutsideDomainError(
                'Point {} lies outside the domain of chart {}'.format(
                    point, self._name))
        return point

    def metric_jets(self, ctx, X=None):
        """The ``(dim, dim, N)`` jet array of the metric in ``ctx``.

        :raises DegenerateMetricError: If the metric is not positive definite
            at the seed point.

        """
        if X is None:
            X = ctx.coordinates()
        g = np.asarray(self._metric(ctx, X), dtype=float)
        g = 0.5 * (g + np.swapaxes(g, 0, 1))
        values = ctx.values(g)
        eigenvalues = np.linalg.eigvalsh(values) \
            if np.all(np.isfinite(values)) else np.array([np.nan])
        if not eigenvalues[0] > 1e-14 * abs(eigenvalues[-1]):
            raise DegenerateMetricError(
                'Metric of chart {} is not positive definite at {}'.format(
                    self._name, ctx.seed_point), point=ctx.seed_point)
        return g

    def metric_at(self, point):
        """The metric matrix at ``point``."""
        point = self.check_point(point)
        ctx = JetContext(self._dim, 0, point)
        return self.metric_jets(ctx)[..., 0]

    def rotated(self, Q, name=None):
        """The pull-back of this chart along ``x = Q y`` for an orthogonal
        matrix ``Q``."""
        Q = _orthogonal(Q, self._dim)
        metric = self._metric
        domain = self._domain

        def pulled_back(ctx, Y):
            X = np.einsum('ij,jn->in', Q, Y)
            return np.einsum('ki,kln,lj->ijn', Q, metric(ctx, X), Q)

        def pulled_domain(y):
            return domain(tuple(Q @ np.asarray(y)))

        return MetricChart(
            self._dim, pulled_back, name=name or self._name + '_rotated',
            domain=None if domain is None else pulled_domain)


def _orthogonal(Q, dim):
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (dim, dim):
        raise InvalidArgumentValueError(
            'Rotation must be a {0}x{0} matrix, got shape {1}'.format(
                dim, Q.shape))
    if np.max(np.abs(Q.T @ Q - np.eye(dim))) > 1e-10:
        raise InvalidArgumentValueError('Rotation matrix is not orthogonal')
    return Q


def rotate_chart(chart, Q):
    """Pull ``chart`` back along the rigid motion ``x = Q y``.

    The result has the same type of structure as ``chart``; almost-Hermitian
    charts rotate their complex structure along with the metric.

    """
    return chart.rotated(Q)
