"""The residual suites behind ``verify identities`` and ``verify
curvature``."""

import logging
import time

import numpy as np

from akmass.ale import evaluate_points, worker_count
from akmass.almost_kahler import (
    AlmostHermitianChart,
    ak_point_data,
    chern_ricci_exterior_derivative,
    lebrun_identity_residuals,
    nabla_structure,
    sekigawa_apostolov_residual,
    structure_residuals,
    wedge_identity_residual,
    weitzenbock_residual)
from akmass.catalog import curvature_residuals, flag_residuals
from akmass.errors import UnsupportedStrategyError
from akmass.spinc import (
    FockSpinor,
    cl_omega_spectrum,
    clifford_generators,
    clifford_two_form,
    dirac_constant_spinor_residual,
    norm_equality_residual,
    standard_symplectic_form,
    witten_integrand_identity_residual)

from .report import CheckRecord, VerificationReport


logger = logging.getLogger(__name__)

SYMPLECTIC = ('kahler', 'almost_kahler_nonkahler')

LEBRUN_FAMILIES = (
    ('scalar_weyl', 'pointwise'),
    ('weyl_laplacian_omega', 'spinor'),
    ('weyl_lower_bound', 'pointwise'),
)

FLAG_ANCHORS = {
    'kahler': ('fundamental two form', 'pointwise'),
    'd_omega': ('fundamental two form', 'pointwise'),
    'einstein': ('The following relation holds', 'pointwise'),
    'scalar_flat': ('the mass of the manifold then satisfies', 'pointwise'),
    'delta_w_free': ('Moreover if δW₊=0', 'spinor'),
}


class _Suite(object):

    def __init__(self, entry, config):
        self.entry = entry
        self.config = config
        self.tolerances = config.tolerances
        self.threads = worker_count()
        self.report = VerificationReport(entry.name)

    def _elapsed(self, start):
        if not self.config.timing:
            return None
        return int(round(1000.0 * (time.perf_counter() - start)))

    def record(self, check_id, anchor, residual, family, samples, start):
        record = self.report.add(CheckRecord(
            check_id, anchor, residual, self.tolerances[family], samples,
            self._elapsed(start)))
        if not record.passed:
            logger.warning('Check %s failed on %s: %.3e > %.3e', check_id,
                           self.entry.name, record.max_residual,
                           record.tolerance)
        return record

    def pointwise(self, check_id, anchor, fn, points, family='pointwise'):
        """Record ``max |fn(p)|`` over ``points``."""
        start = time.perf_counter()
        values = evaluate_points(fn, points, self.threads)
        residual = float(np.max(np.abs(values))) if values.size else 0.0
        if np.any(np.isnan(values)):
            residual = float('nan')
        return self.record(check_id, anchor, residual, family, len(points),
                           start)


def _compatibility(chart):
    def fn(p):
        residuals = structure_residuals(chart, p)
        return max(residuals['j_squared'], residuals['compatibility'])
    return fn


def _nabla_ratio(chart):
    def fn(p):
        nabla = nabla_structure(chart, p)
        return nabla.norm_nabla_omega - 0.5 * nabla.norm_nabla_J
    return fn


def _lebrun(chart, key, include_delta_w=False):
    """The LeBrun residual ``key`` as a function of a point; for the lower
    bound ``weyl_lower_bound`` it is the amount by which the bound fails."""
    def fn(p):
        value = lebrun_identity_residuals(chart, p, include_delta_w)[key]
        return max(0.0, -value) if key == 'weyl_lower_bound' else value
    return fn


def _spinor_algebra(suite, m):
    start = time.perf_counter()
    gens = clifford_generators(m)
    eye = np.eye(gens.shape[1])
    worst = max(
        float(np.max(np.abs(gens[i] @ gens[j] + gens[j] @ gens[i] +
                            2.0 * (i == j) * eye)))
        for i in range(2 * m) for j in range(2 * m))
    suite.record('clifford_anticommutation', 'Clifford action of', worst,
                 'pointwise', (2 * m) ** 2, start)

    start = time.perf_counter()
    vacuum = FockSpinor.vacuum(m)
    image = clifford_two_form(standard_symplectic_form(m), vacuum)
    residual = float(np.linalg.norm(image.coeffs + 1j * m * vacuum.coeffs))
    suite.record('cl_omega_vacuum', 'is a −mi eigenspace', residual,
                 'pointwise', 1, start)

    start = time.perf_counter()
    spectrum = cl_omega_spectrum(m)
    residual = max(abs(v - (2 * p - m)) for p, values in spectrum.items()
                   for v in values)
    suite.record('cl_omega_spectrum', 'c=2 when m=2', residual, 'pointwise',
                 len(spectrum), start)


def identity_suite(entry, config):
    """The almost-Kahler and spin^c residuals of ``entry`` at
    ``config.samples`` seeded points.

    :rtype: :class:`VerificationReport
        <akmass.cli.report.VerificationReport>`

    :raises UnsupportedStrategyError: If the entry has no almost complex
        structure.

    """
    chart = entry.chart
    if not isinstance(chart, AlmostHermitianChart):
        raise UnsupportedStrategyError(
            'Entry {} has no almost complex structure'.format(entry.name))
    suite = _Suite(entry, config)
    points = entry.sample_points(config.samples, config.seed)
    logger.info('Identity suite on %s at %d points', entry.name, len(points))

    suite.pointwise('compatibility', 'fundamental two form',
                    _compatibility(chart), points)
    _spinor_algebra(suite, entry.n // 2)
    suite.pointwise('witten_integrand', 'Using the identity',
                    lambda p: witten_integrand_identity_residual(chart, p),
                    points, 'spinor')

    if entry.structure in SYMPLECTIC:
        suite.pointwise('d_omega', 'fundamental two form',
                        lambda p: structure_residuals(chart, p)['d_omega'],
                        points)
        suite.pointwise('structure_identity',
                        'related by the following identity',
                        lambda p: ak_point_data(chart, p).identity_residual,
                        points)
        suite.pointwise('nabla_ratio', 'related by the following identity',
                        _nabla_ratio(chart), points)
        suite.pointwise('hermitian_wedge', 'total Hermitian scalar curvature '
                        'is', lambda p: wedge_identity_residual(chart, p),
                        points)
        suite.pointwise('chern_ricci_closed',
                        'closed 2-form with compact support',
                        lambda p: chern_ricci_exterior_derivative(chart, p),
                        points, 'spinor')
        suite.pointwise('dirac_constant_spinor', 'solves the Dirac equation',
                        lambda p: dirac_constant_spinor_residual(chart, p),
                        points, 'spinor')
        suite.pointwise('norm_equality', 'pointwise equality of norms',
                        lambda p: norm_equality_residual(chart, p), points,
                        'spinor')
        if entry.n == 4:
            for key, family in LEBRUN_FAMILIES:
                suite.pointwise('lebrun_' + key, 'the following identities',
                                _lebrun(chart, key), points, family)
            suite.pointwise('weitzenbock', 'the following identities',
                            lambda p: weitzenbock_residual(chart, p), points,
                            'spinor')
            if 'delta_w_free' in entry.flags:
                suite.pointwise('lebrun_weyl_laplacian', 'Moreover if δW₊=0',
                                _lebrun(chart, 'weyl_laplacian', True),
                                points, 'spinor')
        if 'einstein' in entry.flags:
            suite.pointwise('sekigawa_apostolov',
                            'The following relation holds',
                            lambda p: sekigawa_apostolov_residual(chart, p),
                            points, 'spinor')
    return suite.report


def curvature_suite(entry, config):
    """Riemann symmetries, both Bianchi identities and the entry's flags
    at ``config.samples`` seeded points."""
    suite = _Suite(entry, config)
    points = entry.sample_points(config.samples, config.seed)
    logger.info('Curvature suite on %s at %d points', entry.name,
                len(points))

    start = time.perf_counter()
    residuals = curvature_residuals(entry, points)
    suite.record('riemann_symmetries', 'component of the curvature operator',
                 residuals['symmetry'], 'pointwise', len(points), start)
    suite.record('second_bianchi', 'component of the curvature operator',
                 residuals['second_bianchi'], 'spinor', len(points), start)

    start = time.perf_counter()
    for flag, residual in sorted(flag_residuals(entry, points).items()):
        anchor, family = FLAG_ANCHORS[flag]
        suite.record('flag_' + flag, anchor, residual, family, len(points),
                     start)
    return suite.report
