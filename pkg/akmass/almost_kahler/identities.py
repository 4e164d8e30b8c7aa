"""Residuals of the curvature identities of almost-Kahler manifolds.

Every function here returns a non-negative residual (or a record of them)
that vanishes on almost-Kahler structures; nothing is raised for a large
residual, that decision is left to the caller.

"""

import logging
import math

import numpy as np

from akmass.errors import (
    DimensionMismatchError,
    NonEinsteinError)
from akmass.riemann import (
    codifferential_jets,
    curvature_operator_matrix,
    curvature_packet,
    geometry,
    laplacian_jets,
    self_dual_basis,
    weyl_jets,
    weyl_tensor)

from .chart import almost_hermitian
from .forms import (
    curvature_on_form,
    curvature_pairing,
    form_norm2,
    j_invariant_part)
from .structure import (
    nabla_structure,
    anti_invariant_norms,
    anti_invariant_components)


logger = logging.getLogger(__name__)

EINSTEIN_TOLERANCE = 1e-8

# fourth-order central first derivative
_OFFSETS = (-2, -1, 1, 2)
_WEIGHTS = (1.0, -8.0, 8.0, -1.0)


def _require_four_dimensions(chart):
    if chart.dim != 4:
        raise DimensionMismatchError(
            'The LeBrun identities are only defined in real dimension 4, '
            'not {}'.format(chart.dim))


def _lower_covariant(d_tensor, tensor, gamma):
    """``nabla_a T`` for an all-lower tensor from the point values of its
    partials ``d_tensor[a, ...]`` and of ``T``."""
    out = np.array(d_tensor, dtype=float)
    for slot in range(tensor.ndim):
        term = np.tensordot(gamma, tensor, axes=([0], [slot]))
        out -= np.moveaxis(term, 1, slot + 1)
    return out


def _rough_laplacian_of_omega(sg):
    """Point values of ``nabla* nabla omega = -g^ab nabla_a nabla_b
    omega``."""
    geom = sg.geom
    second = geom.nabla(sg.nabla_omega, 0, 3)
    return -np.einsum('ab,abij->ij', geom.values(geom.g_inv),
                      geom.values(second))


def _weyl_values(geom):
    return weyl_tensor(geom.values(geom.riemann), geom.values(geom.ricci),
                       float(geom.values(geom.scalar)), geom.values(geom.g))


def weitzenbock_residual(chart, p):
    """Norm of ``nabla* nabla omega - 2 W(omega) + (s/3) omega``.

    A closed self-dual 2-form is harmonic, so on an almost-Kahler
    4-manifold the Weitzenbock formula for ``omega`` reduces to this
    pointwise identity.

    :raises DimensionMismatchError: If the chart is not 4-dimensional.

    """
    _require_four_dimensions(chart)
    sg = almost_hermitian(chart, p, 2)
    geom = sg.geom
    g_inv = geom.values(geom.g_inv)
    omega = sg.ctx.values(sg.omega)
    scalar = float(geom.values(geom.scalar))
    residual = (_rough_laplacian_of_omega(sg) -
                2.0 * curvature_on_form(_weyl_values(geom), omega, g_inv) +
                scalar / 3.0 * omega)
    return math.sqrt(max(form_norm2(residual, g_inv), 0.0))


def _nabla_weyl(chart, point):
    geom = geometry(chart, point, 3)
    return geom, geom.values(geom.nabla(weyl_jets(geom), 0, 4))


def _step(point):
    return 1e-3 * max(1.0, max(abs(c) for c in point))


def rough_laplacian_of_weyl(chart, p):
    """``nabla* nabla W`` at ``p`` as a lowered 4-tensor.

    Order-three jets give ``nabla W`` exactly; the second derivative comes
    from a five-point central difference of ``nabla W`` along each
    coordinate axis.

    """
    point = chart.check_point(p)
    geom, nabla_w = _nabla_weyl(chart, point)
    h = _step(point)
    n = chart.dim
    d_nabla = np.zeros((n,) + nabla_w.shape)
    for a in range(n):
        for offset, weight in zip(_OFFSETS, _WEIGHTS):
            shifted = list(point)
            shifted[a] += offset * h
            _, value = _nabla_weyl(chart, chart.check_point(shifted))
            d_nabla[a] += weight * value
        d_nabla[a] /= 12.0 * h
    gamma = geom.values(geom.gamma)
    second = _lower_covariant(d_nabla, nabla_w, gamma)
    return -np.einsum('ab,abijkl->ijkl', geom.values(geom.g_inv), second)


def self_dual_weyl_divergence(chart, p):
    """The norm of ``delta W+`` at ``p``.

    The divergence ``-g^ai nabla_a W_ijkl`` is taken in the Gram-Schmidt
    frame and its last two slots are projected onto the self-dual forms.

    :raises DimensionMismatchError: If the chart is not 4-dimensional.

    """
    _require_four_dimensions(chart)
    point = chart.check_point(p)
    geom, nabla_w = _nabla_weyl(chart, point)
    delta = -np.einsum('ai,aijkl->jkl', geom.values(geom.g_inv), nabla_w)
    frame = curvature_packet(chart, point).frame
    delta = np.einsum('jkl,ja,kb,lc->abc', delta, frame, frame, frame)
    plus, _ = self_dual_basis()
    components = 0.5 * np.einsum('abc,Abc->aA', delta, plus)
    return float(np.linalg.norm(components))


def lebrun_identity_residuals(chart, p, include_delta_w=False):
    """Residuals of the curvature identities of almost-Kahler
    4-manifolds at ``p``.

    The record holds:

    * ``scalar_weyl``: ``|1/2 |nabla omega|^2 - W+(omega, omega) + s/3|``;
    * ``weyl_laplacian_omega``: the difference of the two sides of
      ``2 W+(nabla* nabla omega, omega) - 2 g^ab W+(nabla_a omega,
      nabla_b omega) = W+(omega, omega)^2 + 4 |W+(omega)|^2 -
      s W+(omega, omega)``, read as a pointwise scalar identity;
    * ``weyl_lower_bound``: the value ``4 |W+|^2 - 4 |W+(omega)|^2 + 1/2
      W+(omega, omega)^2``, which is never negative;
    * ``weyl_laplacian`` (only with ``include_delta_w``): the largest entry of
      ``nabla* nabla W+ + (s/2) W+ - 6 W+^2 + 2 |W+|^2 Id`` on the
      self-dual forms, which vanishes when ``delta W+ = 0``.

    :raises DimensionMismatchError: If the chart is not 4-dimensional.

    """
    _require_four_dimensions(chart)
    sg = almost_hermitian(chart, p, 2)
    geom = sg.geom
    g_inv = geom.values(geom.g_inv)
    omega = sg.ctx.values(sg.omega)
    nabla_omega = sg.ctx.values(sg.nabla_omega)
    scalar = float(geom.values(geom.scalar))
    weyl = _weyl_values(geom)
    packet = curvature_packet(chart, sg.point)
    w_plus = packet.w_plus

    norm_nabla = nabla_structure(chart, sg.point).norm_nabla_omega
    w_omega_omega = curvature_pairing(weyl, omega, omega, g_inv)
    w_omega_norm = form_norm2(curvature_on_form(weyl, omega, g_inv), g_inv)
    trace_square = float(np.trace(w_plus @ w_plus))

    rough = _rough_laplacian_of_omega(sg)
    cross = sum(
        g_inv[a, b] * curvature_pairing(weyl, nabla_omega[a],
                                        nabla_omega[b], g_inv)
        for a in range(4) for b in range(4))
    lhs = 2.0 * curvature_pairing(weyl, rough, omega, g_inv) - 2.0 * cross
    rhs = (w_omega_omega ** 2 + 4.0 * w_omega_norm -
           scalar * w_omega_omega)

    lower_bound = (4.0 * trace_square - 4.0 * w_omega_norm +
                   0.5 * w_omega_omega ** 2)
    record = {
        'scalar_weyl': abs(0.5 * norm_nabla - w_omega_omega + scalar / 3.0),
        'weyl_laplacian_omega': abs(lhs - rhs),
        'weyl_lower_bound': lower_bound,
    }
    if include_delta_w:
        laplacian = packet.frame_tensor(rough_laplacian_of_weyl(chart,
                                                                sg.point))
        plus, _ = self_dual_basis()
        block = curvature_operator_matrix(laplacian, plus)
        defect = (block + 0.5 * scalar * w_plus - 6.0 * w_plus @ w_plus +
                  2.0 * trace_square * np.eye(3))
        record['weyl_laplacian'] = float(np.max(np.abs(defect)))
    logger.debug('LeBrun residuals at %s: %s', sg.point, record)
    return record


def _check_einstein(chart, point):
    residual = curvature_packet(chart, point).einstein_residual()
    if residual > EINSTEIN_TOLERANCE:
        raise NonEinsteinError(
            'Metric is not Einstein at {}: residual {:.3e}'.format(
                point, residual), residual=residual)


def sekigawa_apostolov_residual(chart, p):
    """The defect of the integrand identity for Einstein almost-Kahler
    metrics,

    ``8 delta <rho*, nabla omega> - Delta |nabla omega|^2 = 8 |W''|^2 +
    4 |rho*''|^2 + |(nabla* nabla omega)'|^2 + |phi|^2 + (s/n) |nabla
    omega|^2``,

    with ``delta`` and ``Delta`` the non-negative co-differential and
    Laplacian and all norms the form norms.

    :raises NonEinsteinError: If the Einstein residual at ``p`` exceeds
        :data:`EINSTEIN_TOLERANCE`.

    """
    sg = almost_hermitian(chart, p, 0)
    _check_einstein(chart, sg.point)

    sg = almost_hermitian(chart, sg.point, 3)
    geom = sg.geom
    ctx = sg.ctx
    n = chart.dim
    g_inv = geom.g_inv

    omega_up = ctx.einsum('bj,aj->ab', g_inv,
                          ctx.einsum('ai,ij->aj', g_inv, sg.omega))
    rho = -0.5 * ctx.einsum('abcd,ab->cd', geom.riemann, omega_up)
    rho_up = ctx.einsum('bj,aj->ab', g_inv,
                        ctx.einsum('ai,ij->aj', g_inv, rho))
    # alpha_c = <rho*, nabla_c omega>
    alpha = 0.5 * ctx.einsum('ab,cab->c', rho_up, sg.nabla_omega)
    nabla_up = ctx.einsum('cd,dab->cab', g_inv, ctx.einsum(
        'bj,caj->cab', g_inv, ctx.einsum('ai,cij->caj', g_inv,
                                         sg.nabla_omega)))
    norm_nabla = 0.5 * ctx.einsum('cab,cab->', nabla_up, sg.nabla_omega)

    lhs = (8.0 * float(geom.values(codifferential_jets(geom, alpha))) -
           float(geom.values(laplacian_jets(geom, norm_nabla))))

    g_inv0 = geom.values(g_inv)
    J = ctx.values(sg.J)
    scalar = float(geom.values(geom.scalar))
    components = anti_invariant_components(chart, sg.point)
    w_norm, rho_norm, phi_norm = anti_invariant_norms(components, g_inv0)
    rough = -np.einsum('ab,abij->ij', g_inv0,
                       geom.values(geom.nabla(sg.nabla_omega, 0, 3)))
    rhs = (8.0 * w_norm + 4.0 * rho_norm +
           form_norm2(j_invariant_part(rough, J), g_inv0) + phi_norm +
           scalar / n * float(ctx.values(norm_nabla)))
    logger.debug('Sekigawa-Apostolov sides at %s: %.6e, %.6e', sg.point,
                 lhs, rhs)
    return abs(lhs - rhs)


def kahler_defect(chart, p):
    """``sqrt(|nabla J|^2)``, zero exactly at Kahler points."""
    nabla = nabla_structure(chart, p)
    return math.sqrt(max(nabla.norm_nabla_J, 0.0))


