"""Quadrature rules on spheres, radial intervals and boxes, and the
node evaluation loop shared by every integral of the package."""

import concurrent.futures
import functools
import itertools
import logging
import math
import os

import numpy as np
from scipy import special

from akmass.errors import (
    InvalidArgumentTypeError,
    InvalidArgumentValueError,
    QuadratureError,
    RequiredArgumentError)


logger = logging.getLogger(__name__)

MIN_SPHERE_DIM = 3
MAX_SPHERE_DIM = 8
MAX_DEGREE = 30
MAX_NODES = 500000

THREADS_VARIABLE = 'AKMASS_THREADS'


def sphere_volume(n):
    """``Vol(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2)``."""
    return 2.0 * math.pi ** (0.5 * n) / math.gamma(0.5 * n)


class SphereQuadrature(object):

    """A positive quadrature rule on the unit sphere ``S^{n-1}`` in
    ``R^n``, exact on polynomials up to :attr:`degree`.

        >>> rule = sphere_quadrature(3, 4)
        >>> round(rule.total_weight / math.pi, 12)
        4.0

    """

    def __init__(self, n, degree, nodes, weights):
        nodes.flags.writeable = False
        weights.flags.writeable = False
        self._n = n
        self._degree = degree
        self._nodes = nodes
        self._weights = weights

    @property
    def n(self):
        """The ambient dimension.

        :type: :class:`int <python:int>`

        """
        return self._n

    @property
    def degree(self):
        """The polynomial degree the rule is exact for.

        :type: :class:`int <python:int>`

        """
        return self._degree

    @property
    def nodes(self):
        """Unit vectors, one per row.

        :type: :class:`numpy.ndarray`

        """
        return self._nodes

    @property
    def weights(self):
        """Positive weights summing to ``Vol(S^{n-1})``.

        :type: :class:`numpy.ndarray`

        """
        return self._weights

    @property
    def total_weight(self):
        """The sum of the weights.

        :type: :class:`float <python:float>`

        """
        return math.fsum(self._weights)

    def __len__(self):
        return len(self._weights)

    def __repr__(self):
        return '<SphereQuadrature n={} degree={} nodes={}>'.format(
            self._n, self._degree, len(self))

    def integrate(self, values):
        """Compensated weighted sum of ``values`` given at the nodes."""
        return compensated_sum(self._weights, values)


def _check_degree(degree):
    if degree is None:
        raise RequiredArgumentError('A quadrature degree is required')
    if isinstance(degree, bool) or not isinstance(degree, int):
        raise InvalidArgumentTypeError('Quadrature degree must be an int')
    if not 0 <= degree <= MAX_DEGREE:
        raise QuadratureError(
            'Quadrature degrees range from 0 to {}, not {}'.format(
                MAX_DEGREE, degree))


def sphere_quadrature(n, degree):
    """The product rule of the given degree on ``S^{n-1}``.

    Each polar angle ``theta_k`` enters the surface measure through a power
    ``sin^e theta_k``; with ``t = cos theta_k`` that weight is absorbed by a
    Gauss-Jacobi rule with ``alpha = beta = (e - 1) / 2``. The last angle
    uses the trapezoidal rule with ``degree + 1`` points.

    :param n: The ambient dimension, 3 to 8.
    :type n: :class:`int <python:int>`

    :param degree: The polynomial degree to integrate exactly, up to 30.
    :type degree: :class:`int <python:int>`

    :rtype: :class:`SphereQuadrature`

    :raises RequiredArgumentError: If no degree is given.
    :raises QuadratureError: For unsupported dimensions or degrees, or a
        rule with too many nodes.

    """
    _check_degree(degree)
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidArgumentTypeError('Sphere dimension must be an int')
    if not MIN_SPHERE_DIM <= n <= MAX_SPHERE_DIM:
        raise QuadratureError(
            'Sphere quadrature supports ambient dimensions {} through {}, '
            'not {}'.format(MIN_SPHERE_DIM, MAX_SPHERE_DIM, n))
    polar = degree // 2 + 1
    count = polar ** (n - 2) * (degree + 1)
    if count > MAX_NODES:
        raise QuadratureError(
            'Sphere quadrature of degree {} in dimension {} needs {} nodes, '
            'more than {}'.format(degree, n, count, MAX_NODES))
    return _sphere_rule(n, degree)


@functools.lru_cache(maxsize=None)
def _sphere_rule(n, degree):
    polar = degree // 2 + 1
    factors = []
    for exponent in range(n - 2, 0, -1):
        alpha = 0.5 * (exponent - 1)
        t, w = special.roots_jacobi(polar, alpha, alpha)
        factors.append(list(zip(t, w)))
    count = degree + 1
    phi = 2.0 * math.pi * np.arange(count) / count
    factors.append([(p, 2.0 * math.pi / count) for p in phi])

    nodes = []
    weights = []
    for combo in itertools.product(*factors):
        x = np.empty(n)
        scale = 1.0
        weight = 1.0
        for k, (t, w) in enumerate(combo[:-1]):
            x[k] = scale * t
            scale *= math.sqrt(max(0.0, 1.0 - t * t))
            weight *= w
        angle, w = combo[-1]
        x[n - 2] = scale * math.cos(angle)
        x[n - 1] = scale * math.sin(angle)
        nodes.append(x)
        weights.append(weight * w)
    logger.debug('Built sphere rule n=%d degree=%d with %d nodes', n, degree,
                 len(weights))
    return SphereQuadrature(n, degree, np.array(nodes), np.array(weights))


@functools.lru_cache(maxsize=None)
def circle_rule(degree):
    """The trapezoidal rule on ``S^1``, exact for trigonometric
    polynomials up to ``degree``."""
    _check_degree(degree)
    count = degree + 1
    phi = 2.0 * math.pi * np.arange(count) / count
    nodes = np.stack([np.cos(phi), np.sin(phi)], axis=1)
    return SphereQuadrature(2, degree, nodes,
                            np.full(count, 2.0 * math.pi / count))


def direction_rule(n, degree):
    """:func:`sphere_quadrature`, extended by :func:`circle_rule` to the
    plane."""
    return circle_rule(degree) if n == 2 else sphere_quadrature(n, degree)


def radial_rule(r_min, r_max, nodes=8, panels=6):
    """Composite Gauss-Legendre rule on ``[r_min, r_max]``.

    Panels double in length towards ``r_max``; with ``r_min = 0`` the
    first of ``panels`` panels is ``[0, r_max / 2^(panels - 1)]``, and
    ``r_max = inf`` maps ``r = tan t`` onto a single interval in ``t``.

    :returns: ``(radii, weights)``.

    """
    if not 0.0 <= r_min < r_max:
        raise InvalidArgumentValueError(
            'Radial interval [{}, {}] is empty'.format(r_min, r_max))
    t, w = special.roots_legendre(nodes)
    if math.isinf(r_max):
        lo = math.atan(r_min)
        half = 0.5 * (0.5 * math.pi - lo)
        angles = lo + half * (t + 1.0)
        return np.tan(angles), half * w / np.cos(angles) ** 2
    if r_min == 0.0:
        edges = [0.0] + [r_max / 2.0 ** k for k in range(panels - 1, -1, -1)]
    else:
        count = max(1, int(math.ceil(math.log2(r_max / r_min))))
        edges = list(np.geomspace(r_min, r_max, count + 1))
    radii = []
    weights = []
    for a, b in zip(edges, edges[1:]):
        half = 0.5 * (b - a)
        radii.append(a + half * (t + 1.0))
        weights.append(half * w)
    return np.concatenate(radii), np.concatenate(weights)


def box_rule(bounds, nodes):
    """Tensor Gauss-Legendre rule on a box ``[(lo, hi), ...]``.

    :returns: ``(points, weights)`` with one point per row.

    """
    t, w = special.roots_legendre(nodes)
    axes = []
    for lo, hi in bounds:
        half = 0.5 * (hi - lo)
        axes.append(list(zip(lo + half * (t + 1.0), half * w)))
    points = []
    weights = []
    for combo in itertools.product(*axes):
        points.append([c for c, _ in combo])
        weights.append(math.prod(v for _, v in combo))
    return np.array(points), np.array(weights)


def compensated_sum(weights, values):
    """``sum w_k v_k`` with a fixed, exactly rounded reduction."""
    return math.fsum(float(w) * float(v) for w, v in zip(weights, values))


def worker_count():
    """The number of worker threads, from :data:`THREADS_VARIABLE`.

    :raises InvalidArgumentValueError: If the variable is not a positive
        int.

    """
    raw = os.environ.get(THREADS_VARIABLE, '1')
    try:
        count = int(raw)
    except ValueError:
        count = 0
    if count < 1:
        raise InvalidArgumentValueError(
            '{} must be a positive int, got "{}"'.format(
                THREADS_VARIABLE, raw))
    return count


def evaluate_points(fn, points, threads=None):
    """``[fn(p) for p in points]`` as an array, in input order whatever
    the number of threads."""
    threads = worker_count() if threads is None else threads
    points = [tuple(float(c) for c in p) for p in points]
    if threads <= 1 or len(points) < 2:
        return np.array([fn(p) for p in points], dtype=float)
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        return np.array(list(pool.map(fn, points)), dtype=float)


def sphere_integral(density, quad, r, threads=None):
    """``int_{S_r} density dS`` with the rule ``quad`` scaled to radius
    ``r``."""
    values = evaluate_points(density, r * quad.nodes, threads)
    return r ** (quad.n - 1) * quad.integrate(values)


def ball_integral(density, n, r_min, r_max, degree, radial_nodes=8,
                  panels=6, threads=None):
    """``int density dx`` over ``r_min < |x| < r_max`` in ``R^n``."""
    quad = direction_rule(n, degree)
    radii, weights = radial_rule(r_min, r_max, radial_nodes, panels)
    shells = [sphere_integral(density, quad, r, threads) for r in radii]
    return compensated_sum(weights, shells)


def box_integral(density, bounds, nodes, threads=None):
    """``int density dx`` over a box."""
    points, weights = box_rule(bounds, nodes)
    return compensated_sum(weights, evaluate_points(density, points, threads))
