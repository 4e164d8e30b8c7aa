"""Fits of radial sequences: power-law decay and limits at infinity."""

from collections import namedtuple
import logging
import math

import numpy as np
from scipy import optimize

from akmass._assertions import assert_strictly_increasing


logger = logging.getLogger(__name__)

# exponents searched by fit_limit
MIN_EXPONENT = 0.05
MAX_EXPONENT = 12.0

# magnitudes below this are treated as exact zeros
ZERO_FLOOR = 1e-13


DecayFit = namedtuple('DecayFit', ['constant', 'exponent', 'residual'])
DecayFit.__doc__ = """\
``|value| ~ constant * r^(-exponent)``, with the RMS residual of the fit in
log space. Sequences that vanish identically give a zero constant and an
infinite exponent."""

LimitFit = namedtuple('LimitFit', ['limit', 'amplitude', 'exponent',
                                   'residual'])
LimitFit.__doc__ = """\
``value ~ limit + amplitude * r^(-exponent)`` with the RMS residual of the
least-squares fit."""


def fit_decay(radii, values):
    """Fit ``|values| ~ K r^-q`` by linear least squares on logarithms.

        >>> fit = fit_decay([1.0, 2.0, 4.0], [3.0, 0.75, 0.1875])
        >>> round(fit.constant, 9), round(fit.exponent, 9)
        (3.0, 2.0)

    :raises InvalidArgumentValueError: If there are fewer than two radii or
        they are not increasing.

    """
    radii = np.array(assert_strictly_increasing(radii, 'Radii', 2))
    magnitudes = np.abs(np.asarray(values, dtype=float))
    scale = float(np.max(magnitudes)) if magnitudes.size else 0.0
    if scale <= ZERO_FLOOR:
        return DecayFit(0.0, math.inf, 0.0)
    logs = np.log(np.maximum(magnitudes, ZERO_FLOOR * scale))
    slope, intercept = np.polyfit(np.log(radii), logs, 1)
    fitted = intercept + slope * np.log(radii)
    residual = float(np.sqrt(np.mean((logs - fitted) ** 2)))
    return DecayFit(float(np.exp(intercept)), float(-slope), residual)


def _project(radii, values, q):
    basis = np.stack([np.ones_like(radii), radii ** -q], axis=1)
    coeffs, *_ = np.linalg.lstsq(basis, values, rcond=None)
    return coeffs, values - basis @ coeffs


def fit_limit(radii, values, initial_exponent=1.0):
    """Least-squares fit of ``a + b r^-q`` with the exponent free.

    For each ``q`` the linear coefficients are projected out; the remaining
    one-dimensional problem is scanned on a logarithmic grid and refined by
    a bounded scalar minimization. Constant sequences return their mean
    with ``q = initial_exponent``.

    """
    radii = np.array(assert_strictly_increasing(radii, 'Radii', 3))
    values = np.asarray(values, dtype=float)
    scale = max(1.0, float(np.max(np.abs(values))))
    if float(np.ptp(values)) <= ZERO_FLOOR * scale:
        mean = float(np.mean(values))
        rms = float(np.sqrt(np.mean((values - mean) ** 2)))
        return LimitFit(mean, 0.0, float(initial_exponent), rms)

    def cost(q):
        _, residual = _project(radii, values, q)
        return float(residual @ residual)

    grid = np.geomspace(MIN_EXPONENT, MAX_EXPONENT, 60)
    costs = [cost(q) for q in grid]
    best = int(np.argmin(costs))
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, len(grid) - 1)]
    result = optimize.minimize_scalar(cost, bounds=(lo, hi),
                                      method='bounded',
                                      options={'xatol': 1e-10})
    q = float(result.x) if result.fun <= costs[best] else float(grid[best])
    (a, b), residual = _project(radii, values, q)
    rms = float(np.sqrt(np.mean(residual ** 2)))
    logger.debug('Limit fit: a=%.10g b=%.4g q=%.4g rms=%.3g', a, b, q, rms)
    return LimitFit(float(a), float(b), q, rms)


def richardson_limit(steps, values, order=1):
    """Limit as ``step -> 0`` of ``values`` sampled at steps halving each
    time, eliminating the error terms ``step^order``, ``step^(order+1)``,
    ..."""
    level = [float(v) for v in values]
    ratio = steps[0] / steps[1]
    power = order
    while len(level) > 1:
        factor = ratio ** power
        level = [(factor * high - low) / (factor - 1.0)
                 for low, high in zip(level, level[1:])]
        power += 1
    return level[0]
