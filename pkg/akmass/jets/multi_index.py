"""Multi-index bookkeeping for dense Taylor coefficient vectors.

Coefficients of a jet of order ``k`` in ``d`` variables are stored in a flat
vector ordered by total degree and, within one degree, by descending
lexicographic order of the exponent tuples. For ``d = 2`` and ``k = 2`` the
order is::

    (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)

so the coefficient vector of a lower order is always a prefix of the one of a
higher order.

"""

import functools
import itertools

from math import comb, factorial

import numpy as np


MAX_DIM = 8
MAX_ORDER = 3


def coefficient_count(dim, order):
    """The number of multi-indices of total degree at most ``order``.

        >>> coefficient_count(2, 3)
        10
        >>> coefficient_count(4, 2)
        15

    """
    return comb(dim + order, order)


@functools.lru_cache(maxsize=None)
def multi_indices(dim, order):
    """All exponent tuples of total degree at most ``order``, in storage
    order.

        >>> multi_indices(2, 2)
        ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))

    """
    result = []
    for degree in range(order + 1):
        level = [alpha for alpha in itertools.product(range(degree + 1),
                                                      repeat=dim)
                 if sum(alpha) == degree]
        level.sort(reverse=True)
        result.extend(level)
    return tuple(result)


def multi_index_factorial(alpha):
    """The product of the factorials of the entries of ``alpha``."""
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


class JetTables(object):

    """Index tables shared by all jets of one ``(dim, order)`` pair.

    ``pair_left``/``pair_right`` list all coefficient pairs whose degrees add
    up to at most ``order`` and ``scatter`` sums the pair products into the
    product coefficient they contribute to, so a truncated product is
    ``(a[..., pair_left] * b[..., pair_right]) @ scatter``.

    ``partial_source[d]`` and ``partial_factor[d]`` map the coefficients of
    an order ``k`` jet to those of its ``d``-th partial derivative, a jet of
    order ``k - 1``.

    """

    def __init__(self, dim, order):
        self.dim = dim
        self.order = order
        self.indices = multi_indices(dim, order)
        self.size = len(self.indices)
        self.position = {alpha: i for i, alpha in enumerate(self.indices)}
        self.factorials = np.array(
            [multi_index_factorial(a) for a in self.indices], dtype=float)

        left, right, target = [], [], []
        for i, alpha in enumerate(self.indices):
            for j, beta in enumerate(self.indices):
                gamma = tuple(a + b for a, b in zip(alpha, beta))
                if sum(gamma) <= order:
                    left.append(i)
                    right.append(j)
                    target.append(self.position[gamma])
        self.pair_left = np.array(left, dtype=np.intp)
        self.pair_right = np.array(right, dtype=np.intp)
        self.pair_target = np.array(target, dtype=np.intp)
        self.scatter = np.zeros((len(target), self.size))
        self.scatter[np.arange(len(target)), self.pair_target] = 1.0

        if order > 0:
            lower = multi_indices(dim, order - 1)
            self.partial_source = np.empty((dim, len(lower)), dtype=np.intp)
            self.partial_factor = np.empty((dim, len(lower)))
            for d in range(dim):
                for i, beta in enumerate(lower):
                    raised = list(beta)
                    raised[d] += 1
                    self.partial_source[d, i] = self.position[tuple(raised)]
                    self.partial_factor[d, i] = beta[d] + 1
        else:
            self.partial_source = None
            self.partial_factor = None

        self.degree_slices = []
        start = 0
        for degree in range(order + 1):
            stop = coefficient_count(dim, degree)
            self.degree_slices.append(slice(start, stop))
            start = stop


@functools.lru_cache(maxsize=None)
def jet_tables(dim, order):
    """Cached :class:`JetTables` for ``(dim, order)``."""
    return JetTables(dim, order)
