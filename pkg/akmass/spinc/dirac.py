"""The spinor covariant derivative, the Dirac operator on the constant
spinor and the boundary integrand of the Witten argument."""

import collections
import itertools
import logging

import numpy as np

from akmass.almost_kahler import nabla_structure
from akmass.errors import DimensionMismatchError
from akmass.jets.finite_difference import CENTRAL_STENCILS, default_step
from akmass.riemann import geometry

from .fock import (
    FockSpinor,
    clifford_generators,
    two_point_function)
from .frame import adapted_frame, spin_connection


logger = logging.getLogger(__name__)

# absolute floor of the scale the Witten identity residual is measured
# against
WITTEN_FLOOR = 1e-12


WittenIntegrand = collections.namedtuple(
    'WittenIntegrand', ['spinor_side', 'metric_side', 'divergence',
                        'connection', 'mixed', 'adm_density'])
WittenIntegrand.__doc__ = """\
Both evaluations of ``sum_i <psi_0, L_i psi_0> *e^i`` contracted with a
normal, where ``L_i = sum_j (delta_ij + cl(e_i) cl(e_j)) nabla_j``.
``metric_side`` is the sum of ``divergence`` (``-1/2 div e_i``),
``connection`` (the ``A_s`` term) and ``mixed`` (what the four-point
function of the vacuum leaves besides the classical contraction);
``adm_density`` is ``1/4 (d_j g_ij - d_i g_jj)`` for comparison."""


def _connection_operators(data):
    """``nabla_j`` on constant spinors as matrices, one per frame
    direction."""
    m = data.frame.complex_dim
    gens = clifford_generators(m)
    n = 2 * m
    size = 1 << m
    ops = np.zeros((n, size, size), dtype=complex)
    for k, l in itertools.combinations(range(n), 2):
        pair = gens[k] @ gens[l]
        ops += 0.5 * data.w[:, k, l][:, None, None] * pair
    ops += 0.5 * data.a_s[:, None, None] * np.eye(size)
    return ops


def _spinor_field_derivative(psi, point, direction, m):
    if isinstance(psi, FockSpinor):
        return np.zeros(1 << m, dtype=complex)
    offsets, weights = CENTRAL_STENCILS[1]
    h = default_step(1, point)
    total = np.zeros(1 << m, dtype=complex)
    base = np.asarray(point, dtype=float)
    for offset, weight in zip(offsets, weights):
        shifted = tuple(base + offset * h * np.asarray(direction))
        total += weight * np.asarray(psi(shifted), dtype=complex)
    return total / h


def spinor_covariant_derivative(chart, p, psi, direction, frame=None):
    """``nabla_X psi = d psi(X) + 1/2 sum_{k<l} w_kl(X) cl(e_k) cl(e_l) psi
    + 1/2 A_s(X) psi`` for the Chern connection on the anticanonical
    bundle.

    :param psi: A spinor with constant coefficients in the adapted frame,
        or a callable mapping points to the ``2^m`` coefficients.
    :type psi: :class:`FockSpinor <akmass.spinc.fock.FockSpinor>` or
        Callable

    :param direction: Coordinate components of ``X``.
    :type direction: Sequence[:class:`float <python:float>`]

    :rtype: :class:`FockSpinor <akmass.spinc.fock.FockSpinor>`

    """
    data = spin_connection(chart, p, frame)
    point = data.frame.point
    m = data.frame.complex_dim
    direction = np.asarray(direction, dtype=float)
    if direction.shape != (2 * m,):
        raise DimensionMismatchError(
            'Direction needs {} components, not {}'.format(
                2 * m, direction.size))
    x = data.frame.coframe @ direction
    value = psi if isinstance(psi, FockSpinor) else FockSpinor(m, psi(point))
    ops = np.einsum('j,jab->ab', x, _connection_operators(data))
    coeffs = (_spinor_field_derivative(psi, point, direction, m) +
              ops @ value.coeffs)
    return FockSpinor(m, coeffs)


def constant_spinor_derivatives(chart, p, frame=None):
    """``nabla_{e_j} psi_0`` for every frame direction, as an array of
    shape ``(2m, 2^m)``."""
    data = spin_connection(chart, p, frame)
    vacuum = FockSpinor.vacuum(data.frame.complex_dim).coeffs
    return _connection_operators(data) @ vacuum


def dirac_constant_spinor_residual(chart, p, frame=None):
    """``|D psi_0| = |sum_i cl(e_i) nabla_{e_i} psi_0|``; it vanishes on
    every almost-Kahler manifold."""
    nabla = constant_spinor_derivatives(chart, p, frame)
    m = nabla.shape[0] // 2
    dirac = np.einsum('iab,ib->a', clifford_generators(m), nabla)
    return float(np.linalg.norm(dirac))


def norm_equality_residual(chart, p, frame=None):
    """``| |nabla psi_0|^2 - 1/8 |nabla omega|^2 |``."""
    nabla = constant_spinor_derivatives(chart, p, frame)
    spinor = float(np.sum(np.abs(nabla) ** 2))
    form = nabla_structure(chart, p).norm_nabla_omega
    return abs(spinor - form / 8.0)


def _coordinate_divergences(frame):
    """``div e_i = d_a e_i^a + 1/2 e_i^a g^bc d_a g_bc`` from coordinate
    derivatives of the frame fields and of the metric."""
    sg = frame.geometry
    geom = sg.geom
    d_frame = sg.ctx.values(sg.ctx.partial(frame.jets))
    log_volume = 0.5 * np.einsum('bc,abc->a', geom.values(geom.g_inv),
                                 geom.values(geom.dg))
    return np.einsum('aai->i', d_frame) + log_volume @ frame.vectors


def _adm_density(chart, point):
    geom = geometry(chart, point, 1)
    dg = geom.values(geom.dg)
    # dg[l, i, j] = d_l g_ij
    return 0.25 * (np.einsum('jij->i', dg) - np.einsum('ijj->i', dg))


def _mixed_terms(w, m):
    """What the vacuum four-point function of ``w_kl(e_j) cl(e_i) cl(e_j)
    cl(e_k) cl(e_l)`` leaves besides ``delta_il delta_jk - delta_ik
    delta_jl``, by Wick's rule for ``G = -(Id + i omega)``."""
    n = 2 * m
    G = two_point_function(m)
    eye = np.eye(n)
    wick = (np.einsum('ij,kl->ijkl', eye, G) +
            np.einsum('ij,kl->ijkl', G, G) - np.einsum('ik,jl->ijkl', G, G) +
            np.einsum('il,jk->ijkl', G, G))
    classical = (np.einsum('il,jk->ijkl', eye, eye) -
                 np.einsum('ik,jl->ijkl', eye, eye))
    upper = np.triu(np.ones((n, n)), 1)
    return 0.5 * np.einsum('jkl,kl,ijkl->i', w, upper, wick - classical)


def witten_integrand(chart, p, normal=None, frame=None):
    """The :class:`WittenIntegrand` at ``p``.

    The spinor side applies the Clifford matrices to ``nabla psi_0``. The
    metric side is assembled without them: ``-1/2 div e_i`` from
    coordinate derivatives of the metric and the frame, ``-i/2 omega(e_i,
    e_j) A_s(e_j)`` from the fundamental form, and the mixed term from
    Wick's rule for the two-point function of the vacuum. ``normal`` is a
    coordinate covector and defaults to the Euclidean radial one,
    ``x / |x|``.

    """
    data = spin_connection(chart, p, frame)
    frame = data.frame
    point = frame.point
    n = chart.dim
    m = n // 2
    if normal is None:
        normal = np.asarray(point) / np.linalg.norm(point)
    nu = frame.frame_components(np.asarray(normal, dtype=float))

    gens = clifford_generators(m)
    vacuum = FockSpinor.vacuum(m).coeffs
    nabla = _connection_operators(data) @ vacuum
    spinor = np.array([
        np.vdot(vacuum, nabla[i] + sum(
            gens[i] @ gens[j] @ nabla[j] for j in range(n)))
        for i in range(n)])

    sg = frame.geometry
    omega = frame.form_components(sg.ctx.values(sg.omega))
    divergence = -0.5 * _coordinate_divergences(frame)
    connection = -0.5j * omega @ data.a_s
    mixed = _mixed_terms(data.w, m)

    adm = _adm_density(chart, point) @ np.asarray(normal, dtype=float)
    return WittenIntegrand(
        complex(spinor @ nu), complex((divergence + connection + mixed) @ nu),
        complex(divergence @ nu), complex(connection @ nu),
        complex(mixed @ nu), float(adm))


def witten_integrand_identity_residual(chart, p, normal=None, frame=None):
    """Difference of the two sides of :func:`witten_integrand`, relative to
    ``|divergence| + |connection| + |mixed|`` plus :data:`WITTEN_FLOOR`."""
    parts = witten_integrand(chart, p, normal, frame)
    diff = abs(parts.spinor_side - parts.metric_side)
    scale = (abs(parts.divergence) + abs(parts.connection) +
             abs(parts.mixed) + WITTEN_FLOOR)
    logger.debug('Witten integrand at %s: %s', p, parts)
    return diff / scale


def frame_rotation_invariance(chart, p, rotation):
    """Largest change of the exported scalar residuals when the seed axes
    of the frame are rotated by ``rotation``."""
    base = adapted_frame(chart, p)
    turned = adapted_frame(chart, p, seed=rotation)
    return max(
        abs(dirac_constant_spinor_residual(chart, p, base) -
            dirac_constant_spinor_residual(chart, p, turned)),
        abs(norm_equality_residual(chart, p, base) -
            norm_equality_residual(chart, p, turned)))
