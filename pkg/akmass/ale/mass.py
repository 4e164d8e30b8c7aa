"""The mass of an ALE end, from the metric and from the Chern-Ricci
transgression form."""

from collections import namedtuple
import logging
import math

import numpy as np

from akmass._assertions import assert_strictly_increasing
from akmass.almost_kahler import (
    AlmostHermitianChart,
    chern_ricci_form,
    fundamental_form)
from akmass.errors import UnsupportedStrategyError
from akmass.jets.finite_difference import CENTRAL_STENCILS, default_step
from akmass.riemann import geometry

from . import exterior
from .end import GAMMA_TOLERANCE, standard_structure
from .fitting import fit_limit
from .quadrature import (
    compensated_sum,
    radial_rule,
    sphere_integral,
    sphere_quadrature)


logger = logging.getLogger(__name__)

DEFAULT_DEGREE = 12

# Gauss-Legendre nodes per panel of the radial transgression integral
THETA_NODES = 8


MassEstimate = namedtuple('MassEstimate', ['radii', 'values', 'extrapolated',
                                           'fit_exponent', 'error_bar',
                                           'fit_residuals', 'warnings'])
MassEstimate.__doc__ = """\
Normalized boundary integrals on coordinate spheres and their limit from a
fit ``a + b r^-q``. ``warnings`` names everything that was flagged rather
than accepted: ``non_monotone`` fits and ``gamma_invariance`` failures.
``fit_residuals`` holds ``value - (a + b r^-q)`` per radius."""


def adm_normalization(n):
    """``Gamma(n/2) / (4 (n - 1) pi^{n/2})``, which is ``1 / (16 pi)`` for
    ``n = 3``."""
    return math.gamma(0.5 * n) / (4.0 * (n - 1) * math.pi ** (0.5 * n))


def theta_normalization(m):
    """``1 / (2 (2m - 1) pi^m)``."""
    return 1.0 / (2.0 * (2 * m - 1) * math.pi ** m)


def adm_integrand(end, x):
    """The flux density ``(d_i g_ij - d_j g_ii) nu^j`` at ``x``, with ``nu =
    x / |x|`` the Euclidean unit normal.

    :raises OutsideDomainError: If ``x`` lies inside the core.

    """
    point = end.check_point(x)
    geom = geometry(end.chart, point, 1)
    dg = geom.values(geom.dg)
    # dg[l, i, j] = d_l g_ij
    flux = np.einsum('iij->j', dg) - np.einsum('jii->j', dg)
    x = np.asarray(point)
    return float(flux @ x) / float(np.linalg.norm(x))


def _estimate(end, radii, values, warnings):
    fit = fit_limit(radii, values, min(end.decay_tau, 10.0))
    gaps = np.abs(np.asarray(values) - fit.limit)
    slack = 1e-12 * max(1.0, float(np.max(np.abs(values))))
    warnings = list(warnings)
    if np.any(np.diff(gaps) > slack):
        logger.warning('Fit residuals of %s are not monotone: %s', end.name,
                       gaps)
        warnings.append('non_monotone')
    fitted = (fit.limit + fit.amplitude *
              np.asarray(radii, dtype=float) ** -fit.exponent)
    residuals = tuple(float(v) for v in np.asarray(values) - fitted)
    return MassEstimate(tuple(radii), tuple(values), fit.limit, fit.exponent,
                        fit.residual, residuals, tuple(warnings))


def _gamma_warnings(end, fn, r, quad):
    defect = end.gamma_defect(fn, r, quad)
    if defect > GAMMA_TOLERANCE:
        logger.warning('Integrand of %s is not Gamma-invariant: defect %.3e',
                       end.name, defect)
        return ['gamma_invariance']
    return []


def adm_mass(end, radii, degree=DEFAULT_DEGREE, threads=None):
    """The ADM mass of ``end`` from its boundary integrals on the given
    radii.

    Each value is the normalized full-sphere integral divided by
    ``|Gamma|``; the limit comes from :func:`fit_limit
    <akmass.ale.fitting.fit_limit>`.

    :param radii: At least three increasing radii outside the core.
    :type radii: Sequence[:class:`float <python:float>`]

    :rtype: :class:`MassEstimate`

    """
    radii = assert_strictly_increasing(radii, 'Radii', 3)
    for r in radii:
        end.check_radius(r)
    quad = sphere_quadrature(end.n, degree)

    def integrand(x):
        return adm_integrand(end, x)

    warnings = _gamma_warnings(end, integrand, radii[0], quad)
    scale = adm_normalization(end.n) / end.gamma_order
    values = [scale * sphere_integral(integrand, quad, r, threads)
              for r in radii]
    logger.info('ADM values of %s: %s', end.name, values)
    return _estimate(end, radii, values, warnings)


class ThetaPotential(object):

    """A 1-form ``theta = a(r) <J x, .>`` with ``d theta = iF`` on a
    cohomogeneity-one end.

    Contracting ``d theta = iF`` with the radial field gives ``(r^2 a)' =
    r^2 b`` with ``b = iF(x/r, J x/r) / r``; the value at the base radius
    comes from the horizontal component ``iF(Y, JY) = 2 a``. Coefficients
    are integrated from the closest radius already known and cached.

    """

    def __init__(self, end, radius, base_radius=None):
        self._end = end
        self._chart = end.chart
        n = end.n
        self._J = standard_structure(n)
        self._ray = np.eye(n)[0]
        base = float(base_radius or end.base_radius)
        end.check_radius(base)
        form = chern_ricci_form(self._chart, tuple(base * self._ray))
        self._known = {base: 0.5 * float(form[2, 3])}
        self._radius = end.check_radius(radius)
        self.coefficient(self._radius)

    @property
    def end(self):
        """The end the form lives on.

        :type: :class:`ALEEnd <akmass.ale.end.ALEEnd>`

        """
        return self._end

    @property
    def radius(self):
        """The radius the form was requested for.

        :type: :class:`float <python:float>`

        """
        return self._radius

    def _radial_density(self, s):
        x = s * self._ray
        form = chern_ricci_form(self._chart, tuple(x))
        return s * float(self._ray @ form @ (self._J @ self._ray))

    def coefficient(self, r):
        """``a(r)``."""
        r = float(r)
        if r in self._known:
            return self._known[r]
        anchor = min(self._known, key=lambda k: abs(math.log(k / r)))
        lo, hi = sorted((anchor, r))
        radii, weights = radial_rule(lo, hi, THETA_NODES)
        integral = compensated_sum(
            weights, [self._radial_density(s) for s in radii])
        if r < anchor:
            integral = -integral
        value = (anchor ** 2 * self._known[anchor] + integral) / r ** 2
        self._known[r] = value
        return value

    def __call__(self, x):
        """The components ``theta_i`` at ``x``."""
        x = np.asarray(self._end.check_point(x))
        return self.coefficient(np.linalg.norm(x)) * (self._J @ x)

    def exterior_derivative(self, x, h=None):
        """``d theta`` at ``x`` from central differences of
        :meth:`__call__`."""
        point = np.asarray(self._end.check_point(x))
        n = point.size
        offsets, weights = CENTRAL_STENCILS[1]
        h = default_step(1, point) if h is None else h
        d = np.zeros((n, n))
        for i in range(n):
            for offset, weight in zip(offsets, weights):
                shifted = point.copy()
                shifted[i] += offset * h
                d[i] += weight * self(shifted)
        d /= h
        return d - d.T

    def residual(self, x):
        """``max |d theta - iF|`` at ``x``."""
        form = chern_ricci_form(self._chart, self._end.check_point(x))
        return float(np.max(np.abs(self.exterior_derivative(x) - form)))


def theta_potential(end, r, base_radius=None):
    """A transgression form ``theta`` with ``d theta = iF`` near the sphere
    of radius ``r``.

    :rtype: :class:`ThetaPotential`

    :raises UnsupportedStrategyError: If the end is not cohomogeneity-one
        or carries no almost complex structure of complex dimension at
        least two.

    """
    if not (end.cohomogeneity_one and
            isinstance(end.chart, AlmostHermitianChart) and end.n >= 4):
        raise UnsupportedStrategyError(
            'End {} has no cohomogeneity-one profile; supply theta '
            'analytically'.format(end.name))
    return ThetaPotential(end, r, base_radius)


def theta_wedge_density(theta, x):
    """The coefficient of ``nu ^ theta ^ omega^(m-1)`` at ``x`` against
    the coordinate volume form, ``nu`` the Euclidean unit normal."""
    end = theta.end
    n = end.n
    x = np.asarray(x)
    normal = exterior.covector(x / np.linalg.norm(x))
    omega = exterior.two_form(fundamental_form(end.chart, tuple(x)))
    form = exterior.wedge(exterior.wedge(normal, exterior.covector(theta(x))),
                          exterior.wedge_power(omega, n // 2 - 1))
    return exterior.top_coefficient(form, n)


def theta_boundary_integral(theta, r, degree=DEFAULT_DEGREE, threads=None):
    """``int_{S_r / Gamma} theta ^ omega^(m-1)``."""
    end = theta.end
    quad = sphere_quadrature(end.n, degree)
    theta.coefficient(r)
    return sphere_integral(lambda x: theta_wedge_density(theta, x), quad, r,
                           threads) / end.gamma_order


def mass_via_theta(end, radii, degree=DEFAULT_DEGREE, threads=None):
    """The mass as the limit of ``1 / (2 (2m - 1) pi^m) int_{S_r / Gamma}
    theta ^ omega^(m-1)``.

    :rtype: :class:`MassEstimate`

    :raises UnsupportedStrategyError: As :func:`theta_potential`.

    """
    radii = assert_strictly_increasing(radii, 'Radii', 3)
    theta = theta_potential(end, radii[0])
    quad = sphere_quadrature(end.n, degree)
    warnings = _gamma_warnings(
        end, lambda x: theta_wedge_density(theta, x), radii[0], quad)
    scale = theta_normalization(end.n // 2)
    values = [scale * theta_boundary_integral(theta, r, degree, threads)
              for r in radii]
    logger.info('Theta values of %s: %s', end.name, values)
    return _estimate(end, radii, values, warnings)
