"""Charts of U(m)-invariant Kahler metrics given by a potential.

A potential ``K(u)`` of ``u = |z|^2`` on ``C^m``, with ``z_k = x_k + i y_k``
and real coordinates ordered ``(x1, y1, x2, y2, ...)``, has the Hermitian
metric ``h = K'(u) delta + K''(u) zbar z^T``. Its real form splits into the
blocks ``A = K' delta + K'' (x x^T + y y^T)`` and ``B = K'' (x y^T - y x^T)``
and is Kahler for the standard structure ``J d_x = d_y``.

With ``tau = u K'`` and the Ricci flux ``Phi(u) = u tau^(m-1) (log det h)'``
the scalar curvature density is ``s det h u^(m-1) = -4 Phi'(u)``, so
integrals of ``s`` over balls reduce to values of ``Phi``.
"""

import math

import numpy as np

from akmass.almost_kahler import AlmostHermitianChart
from akmass.ale import standard_structure
from akmass.jets import Jet, jet_array, sqrt
from akmass.riemann import MetricChart


def potential_metric(m, first, second):
    """The metric callable of the potential with derivatives
    ``first(u) = K'(u)`` and ``second(u) = K''(u)``."""
    n = 2 * m

    def metric(ctx, X):
        coords = [Jet(ctx, X[i]) for i in range(n)]
        xs, ys = coords[0::2], coords[1::2]
        u = sum(x * x + y * y for x, y in zip(xs, ys))
        k1, k2 = first(u), second(u)
        g = [[0.0] * n for _ in range(n)]
        for i in range(m):
            for j in range(m):
                a = k2 * (xs[i] * xs[j] + ys[i] * ys[j])
                if i == j:
                    a = a + k1
                b = k2 * (xs[i] * ys[j] - ys[i] * xs[j])
                g[2 * i][2 * j] = g[2 * i + 1][2 * j + 1] = a
                g[2 * i][2 * j + 1] = b
                g[2 * i + 1][2 * j] = -b
        return jet_array(ctx, g)

    return metric


def constant_structure(J):
    """The structure callable of a constant matrix."""
    J = np.asarray(J, dtype=float)

    def structure(ctx, X):
        return ctx.constant(J)

    return structure


def _punctured(point):
    return any(c != 0.0 for c in point)


def potential_chart(m, first, second, name, punctured=False,
                    structure_flag='kahler'):
    """An :class:`AlmostHermitianChart
    <akmass.almost_kahler.chart.AlmostHermitianChart>` of the potential,
    without the origin when ``punctured``."""
    n = 2 * m
    base = MetricChart(n, potential_metric(m, first, second), name=name,
                       domain=_punctured if punctured else None)
    return AlmostHermitianChart(base, constant_structure(
        standard_structure(n)), structure_flag=structure_flag, name=name)


def fubini_study_profile():
    """``K = log(1 + u)``."""
    return (lambda u: 1.0 / (1.0 + u),
            lambda u: -1.0 / ((1.0 + u) * (1.0 + u)))


def eguchi_hanson_profile(a):
    """``K' = sqrt(u^2 + a^4) / u``: the Ricci-flat metric on the
    cotangent bundle of the sphere, seen on the double cover of the
    complement of the zero section."""
    a4 = a ** 4

    def first(u):
        return sqrt(u * u + a4) / u

    def second(u):
        return -a4 / (u * u * sqrt(u * u + a4))

    return first, second


def burns_profile(c):
    """``K = u + c log u``: scalar-flat Kahler on the blow-up of ``C^2`` at
    the origin."""
    return (lambda u: 1.0 + c / u,
            lambda u: -c / (u * u))


def core_scalar_integral(m, flux, u0):
    """``int s dv_g`` over ``|z|^2 < u0``, for a Ricci flux given as the
    pair ``(Phi, Phi(0+))``: ``-2 vol(S^(2m-1)) (Phi(u0) - Phi(0+))``.

        >>> import math
        >>> flux = fubini_study_flux(2)
        >>> round(core_scalar_integral(2, flux, 1.0) / math.pi ** 2, 9)
        3.0

    """
    phi, at_origin = flux
    sphere = 2.0 * math.pi ** m / math.factorial(m - 1)
    return -2.0 * sphere * (phi(u0) - at_origin)


def fubini_study_flux(m=2):
    """``Phi = -(m + 1) u^m / (1 + u)^m``."""
    return (lambda u: -(m + 1) * (u / (1.0 + u)) ** m, 0.0)


def eguchi_hanson_flux(a):
    """``det h = 1``, so ``Phi = 0``."""
    return (lambda u: 0.0, 0.0)


def burns_flux(c):
    """``Phi = -c`` everywhere: the metric is scalar-flat."""
    return (lambda u: -c, -c)
