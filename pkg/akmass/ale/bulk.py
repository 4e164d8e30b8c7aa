"""Bulk integrals over catalog geometries, the topological pairing and the
two-sided check of the mass formula."""

from collections import namedtuple
import logging
import math

import numpy as np

from akmass.almost_kahler import (
    AlmostHermitianChart,
    chern_ricci_form,
    fundamental_form,
    hermitian_scalar)
from akmass.errors import (
    MissingStrategyError,
    OutsideDomainError,
    UnsupportedStrategyError)

from . import exterior
from .fitting import fit_decay
from .mass import DEFAULT_DEGREE, adm_mass, theta_boundary_integral, \
    theta_potential
from .quadrature import (
    ball_integral,
    box_integral,
    direction_rule,
    radial_rule,
    sphere_integral)


logger = logging.getLogger(__name__)

# radii of the shells fitted for the tail, as fractions of r_max
TAIL_FRACTIONS = (0.5, 0.625, 0.75, 0.875, 1.0)

# shell integrals below this, relative to the inner part, count as zero
NEGLIGIBLE_TAIL = 1e-10


BulkIntegral = namedtuple('BulkIntegral', ['value', 'inner', 'tail',
                                           'tail_exponent', 'warnings'])
BulkIntegral.__doc__ = """\
``value = inner + tail``: the quadrature up to ``r_max`` and the fitted
contribution of the region beyond it. ``tail_exponent`` is the decay
exponent of the shell integrals ``int_{S_r} f dS ~ K r^-q``."""

Pairing = namedtuple('Pairing', ['value', 'strategy', 'provenance'])
Pairing.__doc__ = """\
``<c1, [omega]^(m-1)>`` and how it was obtained: ``exact`` values carry the
provenance given by the catalog, ``cutoff`` values the integration data."""

MassFormulaReport = namedtuple('MassFormulaReport', [
    'lhs', 'rhs_bulk', 'rhs_topological', 'rhs', 'discrepancy', 'error_bar',
    'strategy', 'warnings'])
MassFormulaReport.__doc__ = """\
Both sides of the mass formula: ``lhs`` is the extrapolated ADM mass,
``rhs = rhs_bulk + rhs_topological``."""


def _require_structure(entry):
    if not isinstance(entry.chart, AlmostHermitianChart):
        raise UnsupportedStrategyError(
            'Entry {} carries no almost complex structure'.format(entry.name))


def _gamma_order(entry):
    return entry.end.gamma_order if entry.end is not None else 1


def _default_r_max(entry):
    return 4.0 * max(entry.end.base_radius,
                     entry.integration_hint.get('inner_radius', 0.0))


def _check_radial_nodes(entry, r_min, r_max, radial_nodes, panels):
    origin = (0.0,) * entry.n
    if r_min == 0.0 and not entry.chart.contains(origin):
        raise OutsideDomainError(
            'Radial nodes of {} approach the origin, which its chart '
            'excludes, and the entry gives no inner radius'.format(
                entry.name))
    radii, _ = radial_rule(r_min, r_max, radial_nodes, panels)
    for r in radii:
        if not entry.chart.contains((float(r),) + origin[1:]):
            raise OutsideDomainError(
                'Radial node r={} lies outside the chart of {}'.format(
                    r, entry.name))


def integrate_entry(entry, density, r_max=None, degree=DEFAULT_DEGREE,
                    radial_nodes=8, panels=6, threads=None):
    """``int density dx`` over the chart of ``entry`` up to ``r_max``.

    The scheme is read from ``entry.integration_hint``: ``radial`` shells
    from the inner radius out to ``r_max``, ``compactified`` shells out to
    infinity, or a ``box`` rule on the given bounds. The region inside the
    inner radius is left out; see :func:`core_integral`.

    :raises MissingStrategyError: If the entry gives no integration scheme.
    :raises OutsideDomainError: If a radial node falls outside the chart.

    """
    hint = entry.integration_hint
    scheme = hint.get('scheme')
    if scheme == 'box':
        return box_integral(density, hint['bounds'], radial_nodes * 2,
                            threads)
    if scheme == 'compactified':
        return ball_integral(density, entry.n, 0.0, math.inf, degree,
                             radial_nodes * panels, threads=threads)
    if scheme == 'radial':
        r_min = hint.get('inner_radius', 0.0)
        if r_max is None:
            r_max = _default_r_max(entry)
        _check_radial_nodes(entry, r_min, r_max, radial_nodes, panels)
        return ball_integral(density, entry.n, r_min, r_max, degree,
                             radial_nodes, panels, threads)
    raise MissingStrategyError(
        'Entry {} provides no integration scheme'.format(entry.name))


def core_integral(entry):
    """``int (s + s*) / 2 dv_g`` over the chart inside the inner radius of
    ``entry``, as given in closed form by the catalog (zero without an
    inner radius)."""
    return float(entry.integration_hint.get('core_integral', 0.0))


def hermitian_density(entry, x):
    """``(s + s*) / 2 sqrt(det g)`` at ``x``."""
    g = entry.chart.metric_at(x)
    return hermitian_scalar(entry.chart, x) * math.sqrt(np.linalg.det(g))


def tail_from_shells(radii, shells, inner, name='integrand'):
    """The contribution beyond ``radii[-1]`` of an integrand whose shell
    integrals ``shells`` decay like ``K r^-q``: ``K R^(1-q) / (q - 1)``.

    Shells that are negligible against ``inner`` give a zero tail; shells
    decaying no faster than ``r^-1`` give ``nan`` and a ``divergent_tail``
    warning.

    :returns: ``(tail, exponent, warnings)``.

    """
    r_max = radii[-1]
    fit = fit_decay(radii, shells)
    warnings = []
    negligible = NEGLIGIBLE_TAIL * max(1.0, abs(inner))
    if fit.constant == 0.0 or max(abs(s) for s in shells) * r_max < \
            negligible:
        return 0.0, fit.exponent, warnings
    if fit.exponent <= 1.0:
        logger.warning('Bulk integrand of %s does not decay fast enough: '
                       'shell exponent %.3f', name, fit.exponent)
        warnings.append('divergent_tail')
        return math.nan, fit.exponent, warnings
    sign = math.copysign(1.0, shells[-1])
    tail = sign * fit.constant * r_max ** (1.0 - fit.exponent) / (
        fit.exponent - 1.0)
    return tail, fit.exponent, warnings


def bulk_hermitian_integral(entry, r_max=None, degree=DEFAULT_DEGREE,
                            radial_nodes=8, panels=6, threads=None):
    """``int_M (s + s*) / 2 dv_g`` with a tail correction on ALE entries.

    Integrals over a quotient ``R^n / Gamma`` are divided by ``|Gamma|``.
    The region inside the entry's inner radius contributes
    :func:`core_integral`.

    :rtype: :class:`BulkIntegral`

    :raises UnsupportedStrategyError: If the entry has no almost complex
        structure.
    :raises MissingStrategyError: If it gives no integration scheme.

    """
    _require_structure(entry)
    radial = entry.integration_hint.get('scheme') == 'radial'
    if radial and r_max is None:
        r_max = _default_r_max(entry)

    def density(x):
        return hermitian_density(entry, x)

    inner = (integrate_entry(entry, density, r_max, degree, radial_nodes,
                             panels, threads) +
             core_integral(entry)) / _gamma_order(entry)
    tail, exponent, warnings = 0.0, math.inf, []
    if radial:
        quad = direction_rule(entry.n, degree)
        radii = [f * r_max for f in TAIL_FRACTIONS]
        shells = [sphere_integral(density, quad, r, threads) for r in radii]
        tail, exponent, warnings = tail_from_shells(radii, shells, inner,
                                                    entry.name)
        tail /= _gamma_order(entry)
    logger.info('Bulk integral of %s: inner %.10g tail %.3g', entry.name,
                inner, tail)
    return BulkIntegral(inner + tail, inner, tail, exponent, tuple(warnings))


def chern_ricci_density(entry, x):
    """The coefficient of ``iF ^ omega^(m-1)`` against ``dx``."""
    n = entry.n
    form = exterior.two_form(chern_ricci_form(entry.chart, x,
                                              calibrate=False))
    omega = exterior.two_form(fundamental_form(entry.chart, x))
    return exterior.top_coefficient(
        exterior.wedge(form, exterior.wedge_power(omega, n // 2 - 1)), n)


def _cutoff_pairing(entry, r_max, degree, radial_nodes, panels, threads):
    def density(x):
        return chern_ricci_density(entry, x)

    if entry.end is None:
        inner = integrate_entry(entry, density, None, degree, radial_nodes,
                                panels, threads)
        return inner / (2.0 * math.pi)
    gamma = _gamma_order(entry)
    r_max = r_max or _default_r_max(entry)
    # iF ^ omega^(m-1) = (m-1)! / 2 (s + s*) / 2 dv_g
    core = math.factorial(entry.n // 2 - 1) / 2.0 * core_integral(entry)
    inner = integrate_entry(entry, density, r_max, degree, radial_nodes,
                            panels, threads) + core
    theta = theta_potential(entry.end, r_max)
    boundary = theta_boundary_integral(theta, r_max, degree, threads)
    logger.debug('Cutoff pairing of %s: bulk %.10g boundary %.10g',
                 entry.name, inner / gamma, boundary)
    return (inner / gamma - boundary) / (2.0 * math.pi)


def topological_pairing(entry, r_max=None, degree=DEFAULT_DEGREE,
                        radial_nodes=8, panels=6, threads=None):
    """``<c1(M, J), [omega]^(m-1)>``.

    With cutoff data the pairing is ``1 / 2pi`` times ``int iF ^
    omega^(m-1)`` over ``|x| < r_max`` minus ``int theta ^ omega^(m-1)``
    over the sphere of radius ``r_max``, which is the integral of the
    compactly supported representative ``iF - d(f theta)``. Otherwise an
    exact value from the catalog is used.

    :rtype: :class:`Pairing`

    :raises MissingStrategyError: If the entry provides neither.

    """
    if entry.integration_hint.get('cutoff'):
        value = _cutoff_pairing(entry, r_max, degree, radial_nodes, panels,
                                threads)
        return Pairing(value, 'cutoff',
                       'iF - d(f theta) integrated to r={}'.format(
                           r_max or 'default'))
    known = entry.known.get('c1_pairing')
    if known is not None:
        return Pairing(known.value, 'exact', known.provenance)
    raise MissingStrategyError(
        'Entry {} provides neither an exact pairing nor cutoff data'.format(
            entry.name))


def mass_formula_terms(m, bulk, pairing):
    """``((m-1)! / (4 (2m-1) pi^m)) bulk`` and ``-pairing / ((2m-1)
    pi^(m-1))``."""
    scale = 2 * m - 1
    return (math.factorial(m - 1) / (4.0 * scale * math.pi ** m) * bulk,
            -pairing / (scale * math.pi ** (m - 1)))


def mass_formula_check(entry, radii, r_max=None, degree=DEFAULT_DEGREE,
                       radial_nodes=8, panels=6, threads=None):
    """Compare the ADM mass of ``entry`` with the bulk and topological
    terms of the mass formula.

    :rtype: :class:`MassFormulaReport`

    """
    _require_structure(entry)
    if entry.end is None:
        raise UnsupportedStrategyError(
            'Entry {} has no asymptotic end'.format(entry.name))
    lhs = adm_mass(entry.end, radii, degree, threads)
    bulk = bulk_hermitian_integral(entry, r_max, degree, radial_nodes,
                                   panels, threads)
    pairing = topological_pairing(entry, r_max, degree, radial_nodes, panels,
                                  threads)
    rhs_bulk, rhs_top = mass_formula_terms(entry.n // 2, bulk.value,
                                           pairing.value)
    rhs = rhs_bulk + rhs_top
    tail_bar = abs(mass_formula_terms(entry.n // 2, bulk.tail, 0.0)[0])
    report = MassFormulaReport(
        lhs.extrapolated, rhs_bulk, rhs_top, rhs, abs(lhs.extrapolated - rhs),
        lhs.error_bar + tail_bar, pairing.strategy,
        lhs.warnings + bulk.warnings)
    logger.info('Mass formula for %s: lhs %.8g rhs %.8g', entry.name,
                report.lhs, report.rhs)
    return report
