"""Almost-Kahler structures compatible with the standard symplectic form,
by polar decomposition of an arbitrary metric."""

import logging
import math

import numpy as np

from akmass.ale import standard_structure
from akmass.almost_kahler import AlmostHermitianChart
from akmass.errors import SquareRootFailureError
from akmass.jets import Jet, JetContext, jet_array, power, sin
from akmass.riemann import MetricChart


logger = logging.getLogger(__name__)

MAX_CONDITION = 1e10
MAX_ITERATIONS = 60
SQRT_TOLERANCE = 1e-14


def _jet_sqrt(ctx, M, point):
    """Denman-Beavers iteration for the square root of a jet matrix with
    positive spectrum; returns the jets of ``M^(1/2)`` and ``M^(-1/2)``."""
    values = ctx.values(M)
    condition = float(np.linalg.cond(values))
    if not condition <= MAX_CONDITION:
        raise SquareRootFailureError(
            'Matrix square root at {} is ill-conditioned: condition '
            '{:.3e}'.format(point, condition), condition=condition)
    Y = np.array(M, dtype=float)
    Z = ctx.constant(np.eye(values.shape[0]), ctx.order_of(M))
    scale = max(1.0, float(np.max(np.abs(values))))
    for _ in range(MAX_ITERATIONS):
        Y, Z = 0.5 * (Y + ctx.inv(Z)), 0.5 * (Z + ctx.inv(Y))
        y = ctx.values(Y)
        if np.max(np.abs(y @ y - values)) <= SQRT_TOLERANCE * scale:
            # two more sweeps settle the derivative coefficients
            for _ in range(2):
                Y, Z = 0.5 * (Y + ctx.inv(Z)), 0.5 * (Z + ctx.inv(Y))
            return Y, Z
    raise SquareRootFailureError(
        'Matrix square root at {} did not converge in {} iterations'.format(
            point, MAX_ITERATIONS), condition=condition)


def polar_jets(ctx, H):
    """Jets ``(g, J)`` of the structure compatible with ``omega_0`` built
    from the metric jets ``H``.

    ``A`` is defined by ``omega_0(u, v) = H(A u, v)``; then ``J = A
    (-A^2)^(-1/2)`` and ``g = Omega_0 J``, so that ``g(J u, v) = omega_0(u,
    v)``.

    """
    n = H.shape[0]
    omega0 = ctx.constant(-standard_structure(n), ctx.order_of(H))
    A = -ctx.matmul(ctx.inv(H), omega0)
    M = -ctx.matmul(A, A)
    _, inv_root = _jet_sqrt(ctx, M, ctx.seed_point)
    J = ctx.matmul(A, inv_root)
    g = ctx.matmul(omega0, J)
    return 0.5 * (g + np.swapaxes(g, 0, 1)), J


def polar_compatible_structure(h, p):
    """The metric and structure compatible with the standard symplectic
    form that the polar decomposition assigns to the metric of chart ``h``
    at ``p``.

        >>> from akmass import get_entry
        >>> flat = get_entry('euclidean', dim=4)
        >>> p = (0.3, 0.1, 0.2, 0.4)
        >>> g, J = polar_compatible_structure(flat.chart, p)
        >>> float(J[1, 0]), float(J[0, 1]), float(abs(g - np.eye(4)).max())
        (1.0, -1.0, 0.0)

    :returns: The matrices ``(g, J)``.

    :raises SquareRootFailureError: If the square root of ``-A^2`` does not
        converge or is too ill-conditioned.

    """
    point = h.check_point(p)
    ctx = JetContext(h.dim, 0, point)
    g, J = polar_jets(ctx, h.metric_jets(ctx))
    return ctx.values(g), ctx.values(J)


def polar_chart(h, name=None, structure_flag='almost_kahler_nonkahler'):
    """The almost-Kahler chart of :func:`polar_jets` over the metric of
    ``h``; its fundamental form is ``omega_0``."""
    def metric(ctx, X):
        return polar_jets(ctx, h.metric_jets(ctx, X))[0]

    def structure(ctx, X):
        return polar_jets(ctx, h.metric_jets(ctx, X))[1]

    name = name or h.name
    base = MetricChart(h.dim, metric, name=name, domain=h.domain)
    return AlmostHermitianChart(base, structure,
                                structure_flag=structure_flag, name=name)


class RandomPerturbation(object):

    """The seeded metric ``H = delta + eps (1 + |x|^2)^(-(1+tau)/2)
    sum_k C_k sin(K_k . x + phi_k)`` on ``R^n``.

    The symmetric matrices ``C_k`` are normalized so that their spectral
    norms add up to one; ``H`` is positive definite for ``eps < 1``.

    """

    def __init__(self, n, seed, tau, amplitude, modes):
        rng = np.random.default_rng(seed)
        coeffs = []
        for _ in range(modes):
            C = rng.normal(size=(n, n))
            coeffs.append(0.5 * (C + C.T))
        total = sum(np.linalg.norm(C, 2) for C in coeffs)
        self._coeffs = [C / total for C in coeffs]
        self._waves = rng.normal(size=(modes, n))
        self._phases = rng.uniform(0.0, 2.0 * math.pi, size=modes)
        self._n = n
        self._tau = tau
        self._amplitude = amplitude
        logger.debug('Random perturbation seed=%s tau=%s eps=%s modes=%d',
                     seed, tau, amplitude, modes)

    def components(self, coords):
        n = self._n
        u = sum(x * x for x in coords)
        envelope = self._amplitude * power(1.0 + u, -0.5 * (1.0 + self._tau))
        H = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
        for C, K, phase in zip(self._coeffs, self._waves, self._phases):
            wave = envelope * sin(sum(float(k) * x for k, x in
                                      zip(K, coords)) + float(phase))
            for i in range(n):
                for j in range(n):
                    H[i][j] = H[i][j] + float(C[i, j]) * wave
        return H

    def metric(self, ctx, X):
        coords = [Jet(ctx, X[i]) for i in range(self._n)]
        return jet_array(ctx, self.components(coords))

    def chart(self, name):
        """The perturbed metric as a :class:`MetricChart
        <akmass.riemann.chart.MetricChart>`."""
        return MetricChart(self._n, self.metric, name=name)

