"""Global checks on catalog entries: Blair's formula, the Penrose equality
and the re-verification of catalog claims."""

from collections import namedtuple
import logging
import math

import numpy as np
from scipy import integrate

from akmass.ale import (
    adm_mass,
    bulk_hermitian_integral,
    richardson_limit,
    topological_pairing)
from akmass.almost_kahler import (
    AlmostHermitianChart,
    kahler_defect,
    self_dual_weyl_divergence,
    structure_residuals)
from akmass.errors import NotCompactError, UnsupportedStrategyError
from akmass.riemann import curvature_packet, second_bianchi_residual


logger = logging.getLogger(__name__)

# levels of the Richardson table for the exceptional-curve area
AREA_LEVELS = 5


BlairReport = namedtuple('BlairReport', ['lhs', 'rhs', 'ratio', 'pairing'])
BlairReport.__doc__ = """\
``lhs = int (s + s*) / 2 dv`` and ``rhs = 4 pi / (m - 1)! <c1,
[omega]^(m-1)>``; ``ratio`` is ``nan`` when both sides vanish."""

PenroseReport = namedtuple('PenroseReport', ['mass', 'area', 'bound',
                                             'relative_gap', 'warnings'])
PenroseReport.__doc__ = """\
The ADM mass against ``area / (3 pi)`` for the exceptional curve of a
scalar-flat Kahler ALE surface, where the two agree."""


def blair_check(entry, degree=8, radial_nodes=8, panels=6, threads=None):
    """Both sides of ``int (s + s*) / 2 dv = 4 pi / (m - 1)! <c1,
    [omega]^(m-1)>`` on a compact entry.

    :rtype: :class:`BlairReport`

    :raises NotCompactError: If the entry is not compact.

    """
    if not entry.compact:
        raise NotCompactError('Entry {} is not compact'.format(entry.name))
    m = entry.n // 2
    bulk = bulk_hermitian_integral(entry, None, degree, radial_nodes, panels,
                                   threads)
    pairing = topological_pairing(entry, None, degree, radial_nodes, panels,
                                  threads)
    rhs = 4.0 * math.pi / math.factorial(m - 1) * pairing.value
    scale = max(abs(bulk.value), abs(rhs))
    ratio = bulk.value / rhs if scale > 1e-9 else math.nan
    logger.info('Blair check for %s: %.10g vs %.10g', entry.name, bulk.value,
                rhs)
    return BlairReport(bulk.value, rhs, ratio, pairing.value)


def _require_surface_end(entry):
    end = entry.end
    if entry.n != 4 or end is None or not end.cohomogeneity_one or \
            not isinstance(entry.chart, AlmostHermitianChart):
        raise UnsupportedStrategyError(
            'Entry {} is not a U(2)-invariant Kahler surface end'.format(
                entry.name))
    return end


def _sphere_area(chart, u):
    """``int`` over ``CP^1`` of ``omega`` restricted to the horizontal
    planes of the sphere ``|z|^2 = u``."""
    root = math.sqrt(u)

    def density(rho):
        scale = root / math.sqrt(1.0 + rho * rho)
        z1, z2 = scale, scale * rho
        # (-conj(z2), conj(z1)) is orthogonal to z and i z
        v = np.array([-z2, 0.0, z1, 0.0]) / root
        x = (z1, 0.0, z2, 0.0)
        horizontal = float(v @ chart.metric_at(x) @ v)
        return 2.0 * math.pi * rho * u * horizontal / (1.0 + rho * rho) ** 2

    value, _ = integrate.quad(density, 0.0, math.inf, epsabs=1e-13,
                              epsrel=1e-12)
    return value


def exceptional_curve_area(entry, u0=0.1, levels=AREA_LEVELS):
    """The area of the curve collapsed to the origin of the chart, as the
    limit ``u -> 0`` of the areas of the quotients of the spheres ``|z|^2 =
    u`` by the Hopf circles.

    The areas are computed for ``u = u0 / 2^k`` and extrapolated with
    :func:`richardson_limit <akmass.ale.fitting.richardson_limit>`.

    :raises UnsupportedStrategyError: If the entry is not a U(2)-invariant
        surface.

    """
    _require_surface_end(entry)
    steps = [u0 / 2.0 ** k for k in range(levels)]
    areas = [_sphere_area(entry.chart, u) for u in steps]
    area = richardson_limit(steps, areas)
    logger.info('Exceptional curve of %s: areas %s -> %.12g', entry.name,
                areas, area)
    return area


def penrose_check(entry, radii=None, degree=4, threads=None):
    """Compare the ADM mass with ``area / (3 pi)``.

    :rtype: :class:`PenroseReport`

    :raises UnsupportedStrategyError: If the entry is not a U(2)-invariant
        surface with trivial group at infinity.

    """
    end = _require_surface_end(entry)
    if end.gamma_order != 1:
        raise UnsupportedStrategyError(
            'Entry {} has a non-trivial group at infinity'.format(entry.name))
    radii = radii or [end.base_radius * f for f in (10.0, 20.0, 40.0, 80.0)]
    mass = adm_mass(end, radii, degree, threads)
    area = exceptional_curve_area(entry)
    bound = area / (3.0 * math.pi)
    gap = abs(mass.extrapolated - bound) / max(abs(mass.extrapolated), 1e-300)
    return PenroseReport(mass.extrapolated, area, bound, gap, mass.warnings)


def flag_residuals(entry, points):
    """The largest residual of each claim of ``entry`` over ``points``.

    Keys are the entry's flags plus ``kahler`` for Kahler entries and
    ``d_omega`` for every entry with an almost complex structure.

    """
    chart = entry.chart
    out = {}
    if entry.structure == 'kahler':
        out['kahler'] = max(kahler_defect(chart, p) for p in points)
    if entry.structure in ('kahler', 'almost_kahler_nonkahler'):
        out['d_omega'] = max(structure_residuals(chart, p)['d_omega']
                             for p in points)
    if 'einstein' in entry.flags:
        out['einstein'] = max(curvature_packet(chart, p).einstein_residual()
                              for p in points)
    if 'scalar_flat' in entry.flags:
        out['scalar_flat'] = max(abs(curvature_packet(chart, p).scalar)
                                 for p in points)
    if 'delta_w_free' in entry.flags and entry.n == 4 and \
            isinstance(chart, AlmostHermitianChart):
        out['delta_w_free'] = max(self_dual_weyl_divergence(chart, p)
                                  for p in points)
    return out


def curvature_residuals(entry, points):
    """Riemann symmetries with the first Bianchi identity, and the second
    Bianchi identity, as the largest residuals over ``points``."""
    return {
        'symmetry': max(curvature_packet(entry.chart, p).symmetry_residual()
                        for p in points),
        'second_bianchi': max(second_bianchi_residual(entry.chart, p)
                              for p in points),
    }
