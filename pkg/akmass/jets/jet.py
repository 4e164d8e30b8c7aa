"""Scalar Taylor jets and the operations on them."""

import numbers

import numpy as np

from akmass._assertions import assert_index
from akmass.errors import (
    ArithmeticDomainError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError)

from .multi_index import multi_index_factorial


class Jet(object):

    """A truncated multivariate Taylor expansion of a scalar field.

    Jets are immutable; arithmetic returns new jets truncated to the order of
    their context::

        >>> from akmass import JetContext, lift_coordinate
        >>> ctx = JetContext(2, 1, (2.0, 3.0))
        >>> x, y = lift_coordinate(ctx, 0), lift_coordinate(ctx, 1)
        >>> p = x * y
        >>> p.value, p.gradient
        (6.0, (3.0, 2.0))

    :param ctx: The evaluation context.
    :type ctx: :class:`JetContext <akmass.jets.context.JetContext>`

    :param coefficients: Dense Taylor coefficients in storage order.
    :type coefficients: :class:`numpy.ndarray`

    """

    __slots__ = ('_ctx', '_c')

    def __init__(self, ctx, coefficients):
        c = np.array(coefficients, dtype=float)
        if c.shape != (ctx.size(),):
            raise InvalidArgumentValueError(
                'Expected {} coefficients, got shape {}'.format(
                    ctx.size(), c.shape))
        c.flags.writeable = False
        self._ctx = ctx
        self._c = c

    @classmethod
    def constant(cls, ctx, value):
        """The jet of a constant function."""
        return cls(ctx, ctx.constant(value))

    @classmethod
    def variable(cls, ctx, i):
        """The jet of the ``i``-th coordinate function."""
        return cls(ctx, ctx.lift(i))

    @property
    def context(self):
        """The evaluation context of this jet.

        :type: :class:`JetContext <akmass.jets.context.JetContext>`

        """
        return self._ctx

    @property
    def dim(self):
        """Number of independent variables.

        :type: :class:`int <python:int>`

        """
        return self._ctx.dim

    @property
    def order(self):
        """Highest derivative order carried.

        :type: :class:`int <python:int>`

        """
        return self._ctx.order

    @property
    def array(self):
        """The read-only dense coefficient vector.

        :type: :class:`numpy.ndarray`

        """
        return self._c

    @property
    def value(self):
        """The value of the field at the seed point.

        :type: :class:`float <python:float>`

        """
        return float(self._c[0])

    @property
    def gradient(self):
        """First partial derivatives at the seed point.

        :type: Tuple[:class:`float <python:float>`]

        """
        if self.order == 0:
            return (0.0,) * self.dim
        return tuple(float(v) for v in self._c[1:self.dim + 1])

    @property
    def coeffs(self):
        """Map from multi-index to Taylor coefficient.

        :type: Dict[Tuple[:class:`int <python:int>`], \
:class:`float <python:float>`]

        """
        indices = self._ctx.tables().indices
        return {alpha: float(c) for alpha, c in zip(indices, self._c)}

    def coefficient(self, alpha):
        """The Taylor coefficient of the multi-index ``alpha``; zero beyond
        the order of the jet."""
        alpha = tuple(alpha)
        if len(alpha) != self.dim or any(a < 0 for a in alpha):
            raise InvalidArgumentValueError(
                'Invalid multi-index {}'.format(alpha))
        position = self._ctx.tables().position.get(alpha)
        return 0.0 if position is None else float(self._c[position])

    def derivative(self, alpha):
        """The partial derivative ``d^alpha`` at the seed point."""
        return multi_index_factorial(alpha) * self.coefficient(alpha)

    def __repr__(self):
        return '<Jet value={!r} dim={} order={}>'.format(
            self.value, self.dim, self.order)

    def _lift(self, other):
        if isinstance(other, Jet):
            if other._ctx is not self._ctx and (
                    other.dim != self.dim or other.order != self.order or
                    other._ctx.seed_point != self._ctx.seed_point):
                raise InvalidArgumentValueError(
                    'Cannot combine jets of different contexts')
            return other._c
        if isinstance(other, numbers.Real):
            return self._ctx.constant(float(other))
        return NotImplemented

    def __add__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return c
        return Jet(self._ctx, self._c + c)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return c
        return Jet(self._ctx, self._c - c)

    def __rsub__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return c
        return Jet(self._ctx, c - self._c)

    def __neg__(self):
        return Jet(self._ctx, -self._c)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return Jet(self._ctx, self._c * float(other))
        c = self._lift(other)
        if c is NotImplemented:
            return c
        return Jet(self._ctx, self._ctx.mul(self._c, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            if other == 0:
                raise ArithmeticDomainError(
                    'division by zero at point {}'.format(
                        self._ctx.seed_point),
                    op='div', point=self._ctx.seed_point)
            return Jet(self._ctx, self._c / float(other))
        c = self._lift(other)
        if c is NotImplemented:
            return c
        return self * Jet(self._ctx, c).reciprocal()

    def __rtruediv__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return c
        return Jet(self._ctx, c) * self.reciprocal()

    def __pow__(self, exponent):
        if isinstance(exponent, Jet):
            return (exponent * self.log()).exp()
        if not isinstance(exponent, numbers.Real):
            return NotImplemented
        return self.power(exponent)

    def __rpow__(self, base):
        if not isinstance(base, numbers.Real):
            return NotImplemented
        return (self * float(np.log(base))).exp()

    def _apply(self, name, exponent=None):
        return Jet(self._ctx, self._ctx.apply(name, self._c, exponent))

    def exp(self):
        return self._apply('exp')

    def log(self):
        return self._apply('log')

    def sqrt(self):
        return self._apply('sqrt')

    def sin(self):
        return self._apply('sin')

    def cos(self):
        return self._apply('cos')

    def reciprocal(self):
        return self._apply('reciprocal')

    def power(self, exponent):
        """Raise to a real power; integer powers are exact products and
        also accept non-positive bases."""
        exponent = float(exponent)
        if exponent.is_integer() and abs(exponent) <= 8:
            n = int(exponent)
            out = Jet.constant(self._ctx, 1.0)
            for _ in range(abs(n)):
                out = out * self
            return out if n >= 0 else out.reciprocal()
        return self._apply('pow', exponent)

    def atan(self):
        return self._apply('atan')

    def atan2(self, x):
        """The jet of ``atan2(self, x)`` with the branch of its value."""
        return atan2(self, x)


def lift_coordinate(ctx, i):
    """The jet of the ``i``-th coordinate function at the seed point of
    ``ctx``.

        >>> from akmass import JetContext
        >>> ctx = JetContext(2, 2, (3.0, 4.0))
        >>> x = lift_coordinate(ctx, 0)
        >>> x.value, x.gradient
        (3.0, (1.0, 0.0))

    :raises InvalidArgumentTypeError: If ``i`` is not an int.
    :raises InvalidArgumentValueError: If ``i`` is out of range.

    """
    assert_index(i, ctx.dim, 'Coordinate index')
    return Jet.variable(ctx, i)


def _as_jet_pair(a, b):
    if isinstance(a, Jet) and not isinstance(b, Jet):
        b = Jet.constant(a.context, b)
    elif isinstance(b, Jet) and not isinstance(a, Jet):
        a = Jet.constant(b.context, a)
    return a, b


def exp(x):
    """Exponential of a jet or of a plain number/array."""
    return x.exp() if isinstance(x, Jet) else np.exp(x)


def log(x):
    """Natural logarithm of a jet or of a plain number/array."""
    return x.log() if isinstance(x, Jet) else np.log(x)


def sqrt(x):
    """Square root of a jet or of a plain number/array."""
    return x.sqrt() if isinstance(x, Jet) else np.sqrt(x)


def sin(x):
    """Sine of a jet or of a plain number/array."""
    return x.sin() if isinstance(x, Jet) else np.sin(x)


def cos(x):
    """Cosine of a jet or of a plain number/array."""
    return x.cos() if isinstance(x, Jet) else np.cos(x)


def power(x, exponent):
    """``x ** exponent`` for jets or plain numbers/arrays."""
    if isinstance(x, Jet):
        return x ** exponent
    if isinstance(exponent, Jet):
        return Jet.constant(exponent.context, x) ** exponent
    return np.power(x, exponent)


def atan2(y, x):
    """Two-argument arctangent of jets or plain numbers.

    The derivatives are those of ``atan(y/x)`` (or ``-atan(x/y)`` when
    ``|y| > |x|``), the value keeps the quadrant of :func:`numpy.arctan2`.

    """
    if not isinstance(y, Jet) and not isinstance(x, Jet):
        return np.arctan2(y, x)
    y, x = _as_jet_pair(y, x)
    y0, x0 = y.value, x.value
    if x0 == 0 and y0 == 0:
        raise ArithmeticDomainError(
            'atan2 of (0, 0) at point {}'.format(y.context.seed_point),
            op='atan2', point=y.context.seed_point)
    if abs(x0) >= abs(y0):
        body = (y / x).atan()
    else:
        body = -(x / y).atan()
    c = np.array(body.array)
    c[0] = np.arctan2(y0, x0)
    return Jet(y.context, c)


_BINARY = {
    'add': lambda a, b: a + b,
    'sub': lambda a, b: a - b,
    'mul': lambda a, b: a * b,
    'div': lambda a, b: a / b,
    'pow': lambda a, b: a ** b,
    'atan2': atan2,
}

_UNARY = {
    'sqrt': Jet.sqrt,
    'exp': Jet.exp,
    'log': Jet.log,
    'sin': Jet.sin,
    'cos': Jet.cos,
}


def jet_arith(a, b, op):
    """Apply the named operation to jets ``a`` and ``b``; unary operations
    ignore ``b``.

        >>> from akmass import JetContext
        >>> ctx = JetContext(1, 2, (0.0,))
        >>> four = Jet.constant(ctx, 4.0)
        >>> jet_arith(four, None, 'sqrt').array
        array([2., 0., 0.])

    :param op: One of ``add``, ``sub``, ``mul``, ``div``, ``sqrt``, ``pow``,
        ``exp``, ``log``, ``sin``, ``cos``, ``atan2``.
    :type op: :class:`str <python:str>`

    :raises InvalidArgumentTypeError: If ``a`` is not a jet.
    :raises InvalidArgumentValueError: For unknown operations.
    :raises ArithmeticDomainError: If the operation leaves its domain.

    """
    if not isinstance(a, Jet):
        raise InvalidArgumentTypeError('First operand must be a Jet')
    if op in _UNARY:
        return _UNARY[op](a)
    try:
        fn = _BINARY[op]
    except KeyError:
        raise InvalidArgumentValueError(
            'Unknown jet operation "{}"; valid operations are: {}'.format(
                op, ', '.join(sorted(set(_BINARY) | set(_UNARY)))))
    if b is None:
        raise InvalidArgumentValueError(
            'Operation "{}" needs a second operand'.format(op))
    return fn(a, b)


def jet_array(ctx, values):
    """Stack a nested sequence of jets and plain numbers into a jet array of
    shape ``shape + (N,)``.

    :raises InvalidArgumentValueError: If a jet belongs to a context of
        another size.

    """
    if isinstance(values, Jet):
        return np.array(values.array)
    shape = np.shape(values)
    out = np.empty(shape + (ctx.size(),))
    for idx in np.ndindex(shape):
        item = values
        for i in idx:
            item = item[i]
        if isinstance(item, Jet):
            if item.array.shape[-1] != ctx.size():
                raise InvalidArgumentValueError(
                    'Jet of size {} does not belong to {}'.format(
                        item.array.shape[-1], ctx))
            out[idx] = item.array
        else:
            out[idx] = ctx.constant(float(item))
    return out
