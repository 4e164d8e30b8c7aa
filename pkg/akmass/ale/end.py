"""Asymptotic ends of ALE manifolds."""

import logging
import math

import numpy as np

from akmass.errors import (
    InvalidArgumentValueError,
    OutsideDomainError)
from akmass.riemann.chart import _orthogonal

from .fitting import fit_decay
from .quadrature import evaluate_points, sphere_quadrature


logger = logging.getLogger(__name__)

GAMMA_TOLERANCE = 1e-9


class ALEEnd(object):

    """Coordinates at infinity: a chart valid outside the ball of radius
    :attr:`core_radius`, asymptotic to the flat metric on
    ``(R^n - ball) / Gamma``.

    The chart lives on the cover ``R^n``; integrals over the quotient are
    full-sphere integrals divided by :attr:`gamma_order`.

    :param chart: The asymptotic chart.
    :type chart: :class:`MetricChart <akmass.riemann.chart.MetricChart>`

    :param gamma_order: The order of ``Gamma``.
    :type gamma_order: :class:`int <python:int>`

    :param decay_tau: The claimed decay order of ``g - delta``.
    :type decay_tau: :class:`float <python:float>`

    :param core_radius: Points with ``|x| <= core_radius`` are excluded.
    :type core_radius: :class:`float <python:float>`

    :param generators: Orthogonal matrices generating ``Gamma``.
    :type generators: Sequence[:class:`numpy.ndarray`]

    :param cohomogeneity_one: Whether metric and structure are invariant
        under the unitary group, so that radial constructions apply.
    :type cohomogeneity_one: :class:`bool <python:bool>`

    """

    def __init__(self, chart, gamma_order=1, decay_tau=math.inf,
                 core_radius=0.0, generators=(), cohomogeneity_one=False,
                 name=None):
        if isinstance(gamma_order, bool) or not isinstance(gamma_order, int) \
                or gamma_order < 1:
            raise InvalidArgumentValueError(
                'Gamma order must be a positive int, got {}'.format(
                    gamma_order))
        if not decay_tau > 0.0:
            raise InvalidArgumentValueError(
                'Decay order must be positive, got {}'.format(decay_tau))
        if not core_radius >= 0.0:
            raise InvalidArgumentValueError(
                'Core radius must be non-negative, got {}'.format(
                    core_radius))
        self._chart = chart
        self._gamma_order = gamma_order
        self._decay_tau = float(decay_tau)
        self._core_radius = float(core_radius)
        self._generators = tuple(_orthogonal(Q, chart.dim)
                                 for Q in generators)
        self._cohomogeneity_one = bool(cohomogeneity_one)
        self._name = name or chart.name

    @property
    def chart(self):
        """The asymptotic chart.

        :type: :class:`MetricChart <akmass.riemann.chart.MetricChart>`

        """
        return self._chart

    @property
    def n(self):
        """The dimension.

        :type: :class:`int <python:int>`

        """
        return self._chart.dim

    @property
    def name(self):
        """The name of the end.

        :type: :class:`str <python:str>`

        """
        return self._name

    @property
    def gamma_order(self):
        """``|Gamma|``.

        :type: :class:`int <python:int>`

        """
        return self._gamma_order

    @property
    def decay_tau(self):
        """The claimed decay order.

        :type: :class:`float <python:float>`

        """
        return self._decay_tau

    @property
    def core_radius(self):
        """The radius of the excluded core.

        :type: :class:`float <python:float>`

        """
        return self._core_radius

    @property
    def generators(self):
        """Generators of ``Gamma`` as orthogonal matrices.

        :type: Tuple[:class:`numpy.ndarray`]

        """
        return self._generators

    @property
    def cohomogeneity_one(self):
        """Whether the end is invariant under the unitary group.

        :type: :class:`bool <python:bool>`

        """
        return self._cohomogeneity_one

    @property
    def base_radius(self):
        """The radius radial constructions start from.

        :type: :class:`float <python:float>`

        """
        return max(2.0 * self._core_radius, 1.0)

    def __repr__(self):
        return '<ALEEnd {} n={} |Gamma|={} tau={}>'.format(
            self._name, self.n, self._gamma_order, self._decay_tau)

    def check_point(self, x):
        """Coerce ``x`` to a point of the chart outside the core.

        :raises OutsideDomainError: If ``|x|`` does not exceed the core
            radius.

        """
        point = self._chart.check_point(x)
        if math.sqrt(sum(c * c for c in point)) <= self._core_radius:
            raise OutsideDomainError(
                'Point {} lies inside the core radius {} of the end'.format(
                    point, self._core_radius))
        return point

    def check_radius(self, r):
        """Raise :class:`OutsideDomainError` unless ``r`` exceeds the core
        radius."""
        if not r > self._core_radius:
            raise OutsideDomainError(
                'Radius {} lies inside the core radius {} of the end'.format(
                    r, self._core_radius))
        return float(r)

    def gamma_defect(self, fn, r, quad, samples=8):
        """Largest relative change of ``fn`` under the generators of
        ``Gamma`` at a few nodes on the sphere of radius ``r``."""
        if not self._generators:
            return 0.0
        points = r * quad.nodes[::max(1, len(quad) // samples)][:samples]
        base = evaluate_points(fn, points, 1)
        scale = max(1.0, float(np.max(np.abs(base))))
        worst = 0.0
        for Q in self._generators:
            moved = evaluate_points(fn, points @ Q.T, 1)
            worst = max(worst, float(np.max(np.abs(moved - base))) / scale)
        return worst

    def metric_decay(self, radii, degree=4):
        """Fit ``max |g_ij - delta_ij| ~ K r^-q`` over spheres of the given
        radii.

        :rtype: :class:`DecayFit <akmass.ale.fitting.DecayFit>`

        """
        quad = sphere_quadrature(self.n, degree)
        eye = np.eye(self.n)
        peaks = []
        for r in radii:
            self.check_radius(r)
            peaks.append(max(
                float(np.max(np.abs(self._chart.metric_at(x) - eye)))
                for x in r * quad.nodes))
        fit = fit_decay(radii, peaks)
        logger.info('Metric decay of %s: exponent %.3f (claimed %.3f)',
                    self._name, fit.exponent, self._decay_tau)
        return fit


def standard_structure(n):
    """The constant complex structure with ``J d_x = d_y`` on coordinates
    ``(x1, y1, x2, y2, ...)``."""
    J = np.zeros((n, n))
    for k in range(n // 2):
        J[2 * k + 1, 2 * k] = 1.0
        J[2 * k, 2 * k + 1] = -1.0
    return J
