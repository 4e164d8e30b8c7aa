"""Evaluation contexts for arrays of Taylor jets."""

import re

import numpy as np

from akmass._assertions import assert_index
from akmass.errors import (
    ArithmeticDomainError,
    InsufficientJetOrderError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError)

from .multi_index import (
    MAX_DIM,
    MAX_ORDER,
    coefficient_count,
    jet_tables)


def _exp_series(u, c):
    e = np.exp(u)
    return e, e, e, e


def _log_series(u, c):
    return np.log(u), 1.0 / u, -1.0 / u**2, 2.0 / u**3


def _sqrt_series(u, c):
    s = np.sqrt(u)
    return s, 0.5 / s, -0.25 / s**3, 0.375 / s**5


def _reciprocal_series(u, c):
    return 1.0 / u, -1.0 / u**2, 2.0 / u**3, -6.0 / u**4


def _power_series(u, c):
    return (u**c, c * u**(c - 1), c * (c - 1) * u**(c - 2),
            c * (c - 1) * (c - 2) * u**(c - 3))


def _sin_series(u, c):
    s, co = np.sin(u), np.cos(u)
    return s, co, -s, -co


def _cos_series(u, c):
    s, co = np.sin(u), np.cos(u)
    return co, -s, -co, s


def _atan_series(u, c):
    q = 1.0 + u**2
    return (np.arctan(u), 1.0 / q, -2.0 * u / q**2,
            (6.0 * u**2 - 2.0) / q**3)


def _positive(u, c):
    return u > 0


def _nonzero(u, c):
    return u != 0


def _power_domain(u, c):
    return u > 0


def _anywhere(u, c):
    return np.ones(np.shape(u), dtype=bool)


# name -> (derivative series through order 3, domain predicate, complaint)
UNARY_FUNCTIONS = {
    'exp': (_exp_series, _anywhere, None),
    'log': (_log_series, _positive, 'log of non-positive value'),
    'sqrt': (_sqrt_series, _positive, 'sqrt of non-positive value'),
    'reciprocal': (_reciprocal_series, _nonzero,
                   'division by zero-valued jet'),
    'pow': (_power_series, _power_domain,
            'non-integer power of non-positive value'),
    'sin': (_sin_series, _anywhere, None),
    'cos': (_cos_series, _anywhere, None),
    'atan': (_atan_series, _anywhere, None),
}

_EINSUM_INPUTS = re.compile(r'^([a-zA-Z]*),([a-zA-Z]*)->([a-zA-Z]*)$')


class JetContext(object):

    """The algebra of order-``order`` Taylor jets in ``dim`` variables at a
    fixed seed point.

    Jets are plain :class:`numpy.ndarray` objects whose last axis holds the
    Taylor coefficients ``c_alpha`` (so ``d^alpha f = alpha! c_alpha``); a
    tensor of jets has shape ``tensor_shape + (N,)``. The order of such an
    array is read off ``N``, so arrays of different orders can coexist in one
    context and products truncate to the lower of the two.

        >>> import numpy as np
        >>> ctx = JetContext(2, 2, (2.0, 3.0))
        >>> x, y = ctx.coordinates()
        >>> ctx.mul(x, y)
        array([6., 3., 2., 0., 1., 0.])

    :param dim: Number of independent variables.
    :type dim: :class:`int <python:int>`

    :param order: The highest derivative order carried.
    :type order: :class:`int <python:int>`

    :param seed_point: Coordinates of the expansion point.
    :type seed_point: Sequence[:class:`float <python:float>`]

    :raises InvalidArgumentTypeError: If ``dim`` or ``order`` is not an int.
    :raises InvalidArgumentValueError: If ``dim`` or ``order`` is out of the
        supported range or the point has the wrong length.

    """

    def __init__(self, dim, order, seed_point):
        for name, value in (('dim', dim), ('order', order)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidArgumentTypeError(
                    'Jet context `{}` must be an int'.format(name))
        if not 1 <= dim <= MAX_DIM:
            raise InvalidArgumentValueError(
                'Jet contexts support 1 to {} variables, not {}'.format(
                    MAX_DIM, dim))
        if not 0 <= order <= MAX_ORDER:
            raise InvalidArgumentValueError(
                'Jet contexts support orders 0 to {}, not {}'.format(
                    MAX_ORDER, order))
        point = tuple(float(c) for c in seed_point)
        if len(point) != dim:
            raise InvalidArgumentValueError(
                'Seed point {} does not have {} coordinates'.format(
                    point, dim))

        self._dim = dim
        self._order = order
        self._seed_point = point
        self._orders_by_size = {
            coefficient_count(dim, k): k for k in range(order + 1)}

    @property
    def dim(self):
        """The number of independent variables.

        :type: :class:`int <python:int>`

        """
        return self._dim

    @property
    def order(self):
        """The highest derivative order carried by this context.

        :type: :class:`int <python:int>`

        """
        return self._order

    @property
    def seed_point(self):
        """The expansion point.

        :type: Tuple[:class:`float <python:float>`]

        """
        return self._seed_point

    def __repr__(self):
        return '<JetContext dim={} order={} at {}>'.format(
            self._dim, self._order, self._seed_point)

    def size(self, order=None):
        """Number of Taylor coefficients of a jet of ``order`` (defaults to
        the context order)."""
        return coefficient_count(self._dim, self._order if order is None
                                 else order)

    def tables(self, order=None):
        """The shared :class:`JetTables` for ``order``."""
        return jet_tables(self._dim, self._order if order is None else order)

    def order_of(self, a):
        """The jet order of the array ``a``."""
        try:
            return self._orders_by_size[np.shape(a)[-1]]
        except (KeyError, IndexError):
            raise InvalidArgumentValueError(
                'Array of shape {} is not a jet array of this context'.format(
                    np.shape(a)))

    def truncate(self, a, order):
        """The jet ``a`` truncated to ``order``."""
        return a[..., :self.size(order)]

    def values(self, a):
        """The point values of the jet array ``a``."""
        return np.asarray(a)[..., 0]

    def constant(self, value, order=None):
        """A jet array with point values ``value`` and vanishing
        derivatives."""
        value = np.asarray(value, dtype=float)
        out = np.zeros(value.shape + (self.size(order),))
        out[..., 0] = value
        return out

    def coordinates(self, order=None):
        """The jets of all coordinate functions, an array of shape
        ``(dim, N)``."""
        out = self.constant(self._seed_point, order)
        if out.shape[-1] > 1:
            out[:, 1:self._dim + 1] = np.eye(self._dim)
        return out

    def lift(self, i, order=None):
        """The jet of the ``i``-th coordinate function."""
        assert_index(i, self._dim, 'Coordinate index')
        return self.coordinates(order)[i]

    def mul(self, a, b):
        """Elementwise (broadcasting) product of two jet arrays."""
        a, b = self._common(a, b)
        t = self.tables(self.order_of(a))
        return (a[..., t.pair_left] * b[..., t.pair_right]) @ t.scatter

    def einsum(self, subscripts, a, b):
        """Tensor contraction of two jet arrays with jet multiplication of
        the coefficients, e.g. ``ctx.einsum('ij,jk->ik', A, B)`` for a
        matrix product of jet matrices."""
        match = _EINSUM_INPUTS.match(subscripts.replace(' ', ''))
        if match is None:
            raise InvalidArgumentValueError(
                'Unsupported jet contraction "{}"'.format(subscripts))
        left, right, out = match.groups()
        pair = next(c for c in 'zyxwvutsrqponm' if c not in subscripts)
        a, b = self._common(a, b)
        t = self.tables(self.order_of(a))
        gathered = np.einsum(
            '{0}{3},{1}{3}->{2}{3}'.format(left, right, out, pair),
            a[..., t.pair_left], b[..., t.pair_right])
        return gathered @ t.scatter

    def partial(self, a):
        """All first partial derivatives of ``a``, derivative index first:
        the result has shape ``(dim,) + a.shape`` and one order less."""
        order = self.order_of(a)
        if order == 0:
            raise InsufficientJetOrderError(
                'Cannot differentiate an order-{} jet'.format(order))
        t = self.tables(order)
        out = a[..., t.partial_source] * t.partial_factor
        return np.moveaxis(out, -2, 0)

    def inv(self, a):
        """Inverse of a jet matrix (or stack of matrices) via the Neumann
        series of its nilpotent part."""
        order = self.order_of(a)
        base = self.values(a)
        try:
            base_inv = np.linalg.inv(base)
        except np.linalg.LinAlgError:
            raise ArithmeticDomainError(
                'inverse of singular matrix at point {}'.format(
                    self._seed_point), op='inv', point=self._seed_point)
        nil = np.array(a, dtype=float)
        nil[..., 0] = 0.0
        step = -np.einsum('...ij,...jkn->...ikn', base_inv, nil)
        term = self.constant(base_inv, order)
        total = term.copy()
        for _ in range(order):
            term = self._matmul(step, term)
            total += term
        return total

    def _matmul(self, a, b):
        a, b = self._common(a, b)
        t = self.tables(self.order_of(a))
        gathered = np.einsum('...ijp,...jkp->...ikp',
                             a[..., t.pair_left], b[..., t.pair_right])
        return gathered @ t.scatter

    def matmul(self, a, b):
        """Matrix product of (stacks of) jet matrices."""
        return self._matmul(a, b)

    def apply(self, name, a, exponent=None):
        """Compose the jet array ``a`` elementwise with the univariate
        function ``name`` (see :data:`UNARY_FUNCTIONS`).

        :raises ArithmeticDomainError: If a point value lies outside of the
            function's domain.

        """
        try:
            series, domain, complaint = UNARY_FUNCTIONS[name]
        except KeyError:
            raise InvalidArgumentValueError(
                'Unknown jet function "{}"'.format(name))
        a = np.asarray(a, dtype=float)
        order = self.order_of(a)
        u = a[..., 0]
        ok = domain(u, exponent)
        if not np.all(ok):
            bad = float(np.ravel(u)[np.argmin(np.ravel(ok))])
            raise ArithmeticDomainError(
                '{} {} at point {}'.format(complaint, bad, self._seed_point),
                op=name, point=self._seed_point)
        derivs = series(u, exponent)
        delta = a.copy()
        delta[..., 0] = 0.0
        out = self.constant(derivs[0], order)
        power = delta
        factorial = 1.0
        for k in range(1, order + 1):
            factorial *= k
            coef = np.asarray(derivs[k], dtype=float) / factorial
            out = out + coef[..., None] * power
            if k < order:
                power = self.mul(power, delta)
        return out

    def _common(self, a, b):
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        n = min(a.shape[-1], b.shape[-1])
        return a[..., :n], b[..., :n]
