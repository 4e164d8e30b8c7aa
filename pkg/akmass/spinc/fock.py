"""Spinors of the canonical spin^c structure at a point.

The spinor space of a Hermitian vector space of complex dimension ``m`` is
``Lambda^{0,*}``, modelled as a fermionic Fock space: the basis spinor
``e^S`` for a subset ``S`` of ``{0, ..., m - 1}`` is stored at the index
whose binary digits are the members of ``S``, and the basis is orthonormal.

Frames are adapted, ``(e_1, ..., e_m, J e_1, ..., J e_m)``, and a 1-form
``alpha = sum u_b e^b + v_b (J e_b)^*`` acts by

    ``cl(alpha) = sum_b (u_b + i v_b) a*_b - (u_b - i v_b) a_b``

which is ``sqrt(2) (alpha^{0,1} ^ . - conj(alpha^{1,0}) _| .)`` in the
unit basis. Real forms then satisfy ``cl(alpha)^2 = -|alpha|^2`` and the
fundamental form acts on ``Lambda^{0,p}`` by ``i (2p - m)``.

"""

import functools
import itertools

import numpy as np

from akmass.errors import (
    DimensionMismatchError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError)


MAX_COMPLEX_DIM = 4


def _check_complex_dim(m):
    if isinstance(m, bool) or not isinstance(m, int):
        raise InvalidArgumentTypeError('Complex dimension must be an int')
    if not 1 <= m <= MAX_COMPLEX_DIM:
        raise InvalidArgumentValueError(
            'Spinors are supported in complex dimension 1 to {}, not '
            '{}'.format(MAX_COMPLEX_DIM, m))


class FockSpinor(object):

    """A spinor at a point, given by its coefficients in the basis
    ``e^S`` of ``Lambda^{0,*}``.

        >>> psi = FockSpinor.vacuum(2)
        >>> psi.norm
        1.0
        >>> psi.degree_norms()
        (1.0, 0.0, 0.0)

    :param m: The complex dimension.
    :type m: :class:`int <python:int>`

    :param coeffs: The ``2 ** m`` complex coefficients.
    :type coeffs: Sequence[:class:`complex <python:complex>`]

    :raises DimensionMismatchError: If there are not ``2 ** m``
        coefficients.

    """

    def __init__(self, m, coeffs):
        _check_complex_dim(m)
        c = np.array(coeffs, dtype=complex).ravel()
        if c.shape != (1 << m,):
            raise DimensionMismatchError(
                'A spinor in complex dimension {} has {} coefficients, not '
                '{}'.format(m, 1 << m, c.size))
        c.flags.writeable = False
        self._m = m
        self._coeffs = c

    @classmethod
    def vacuum(cls, m):
        """The constant spinor ``psi_0 = 1`` in ``Lambda^{0,0}``."""
        return cls.basis(m, ())

    @classmethod
    def basis(cls, m, subset):
        """The basis spinor ``e^S`` for the index set ``subset``."""
        _check_complex_dim(m)
        index = 0
        for b in subset:
            if not 0 <= b < m:
                raise InvalidArgumentValueError(
                    'Index {} out of range for complex dimension {}'.format(
                        b, m))
            index |= 1 << b
        coeffs = np.zeros(1 << m, dtype=complex)
        coeffs[index] = 1.0
        return cls(m, coeffs)

    @property
    def m(self):
        """The complex dimension.

        :type: :class:`int <python:int>`

        """
        return self._m

    @property
    def coeffs(self):
        """The coefficients, a read-only complex array.

        :type: :class:`numpy.ndarray`

        """
        return self._coeffs

    @property
    def norm(self):
        """The Hermitian norm.

        :type: :class:`float <python:float>`

        """
        return float(np.linalg.norm(self._coeffs))

    def __repr__(self):
        return '<FockSpinor m={} {}>'.format(
            self._m, np.array2string(self._coeffs, precision=6))

    def __eq__(self, other):
        return (isinstance(other, FockSpinor) and self._m == other._m and
                np.array_equal(self._coeffs, other._coeffs))

    def __hash__(self):
        return hash((self._m, self._coeffs.tobytes()))

    def __add__(self, other):
        self._check_same(other)
        return FockSpinor(self._m, self._coeffs + other._coeffs)

    def __sub__(self, other):
        self._check_same(other)
        return FockSpinor(self._m, self._coeffs - other._coeffs)

    def __mul__(self, scalar):
        return FockSpinor(self._m, complex(scalar) * self._coeffs)

    __rmul__ = __mul__

    def _check_same(self, other):
        if not isinstance(other, FockSpinor) or other._m != self._m:
            raise DimensionMismatchError(
                'Spinors of different complex dimensions cannot be combined')

    def inner(self, other):
        """The Hermitian product ``<self, other>``, conjugate-linear in
        ``self``."""
        self._check_same(other)
        return complex(np.vdot(self._coeffs, other._coeffs))

    def apply(self, matrix):
        """The spinor ``matrix @ self``."""
        return FockSpinor(self._m, np.asarray(matrix) @ self._coeffs)

    def degree_part(self, p):
        """The component in ``Lambda^{0,p}``."""
        mask = degree_mask(self._m) == p
        return FockSpinor(self._m, np.where(mask, self._coeffs, 0.0))

    def degree_norms(self):
        """Norms of the components in ``Lambda^{0,0}`` to
        ``Lambda^{0,m}``."""
        degrees = degree_mask(self._m)
        return tuple(
            float(np.linalg.norm(self._coeffs[degrees == p]))
            for p in range(self._m + 1))

    @property
    def even(self):
        """The part in ``S+``, the even degrees.

        :type: :class:`FockSpinor`

        """
        mask = degree_mask(self._m) % 2 == 0
        return FockSpinor(self._m, np.where(mask, self._coeffs, 0.0))

    @property
    def odd(self):
        """The part in ``S-``, the odd degrees.

        :type: :class:`FockSpinor`

        """
        mask = degree_mask(self._m) % 2 == 1
        return FockSpinor(self._m, np.where(mask, self._coeffs, 0.0))


@functools.lru_cache(maxsize=None)
def degree_mask(m):
    """The form degree ``|S|`` of every basis index."""
    out = np.array([bin(s).count('1') for s in range(1 << m)])
    out.flags.writeable = False
    return out


@functools.lru_cache(maxsize=None)
def creation_operator(m, b):
    """The matrix of ``a*_b = e^b ^ .`` with the Jordan-Wigner sign."""
    size = 1 << m
    out = np.zeros((size, size), dtype=complex)
    for s in range(size):
        if s & (1 << b):
            continue
        sign = -1.0 if bin(s & ((1 << b) - 1)).count('1') % 2 else 1.0
        out[s | (1 << b), s] = sign
    out.flags.writeable = False
    return out


@functools.lru_cache(maxsize=None)
def clifford_generators(m):
    """``cl`` of the adapted coframe ``(e^1, ..., e^m, (J e_1)^*, ...)``,
    an array of shape ``(2m, 2^m, 2^m)``."""
    _check_complex_dim(m)
    gens = []
    for b in range(m):
        up = creation_operator(m, b)
        gens.append(up - up.conj().T)
    for b in range(m):
        up = creation_operator(m, b)
        gens.append(1j * (up + up.conj().T))
    out = np.array(gens)
    out.flags.writeable = False
    return out


def clifford_matrix(alpha, m):
    """The matrix of ``cl(alpha)`` for frame components ``alpha_i`` of a
    complexified 1-form."""
    alpha = np.asarray(alpha, dtype=complex)
    if alpha.shape != (2 * m,):
        raise DimensionMismatchError(
            'A 1-form in complex dimension {} has {} frame components, '
            'not {}'.format(m, 2 * m, alpha.size))
    return np.einsum('i,iab->ab', alpha, clifford_generators(m))


def clifford_two_form_matrix(beta, m):
    """The matrix of ``cl(beta) = sum_{i<j} beta_ij cl(e^i) cl(e^j)``."""
    beta = np.asarray(beta, dtype=complex)
    n = 2 * m
    if beta.shape != (n, n):
        raise DimensionMismatchError(
            'A 2-form in complex dimension {} has {} x {} frame '
            'components, not {}'.format(m, n, n, beta.shape))
    gens = clifford_generators(m)
    out = np.zeros((1 << m, 1 << m), dtype=complex)
    for i, j in itertools.combinations(range(n), 2):
        if beta[i, j] != 0:
            out += beta[i, j] * (gens[i] @ gens[j])
    return out


def standard_symplectic_form(m):
    """The frame components of ``omega = sum_b e^b ^ (J e_b)^*``."""
    out = np.zeros((2 * m, 2 * m))
    for b in range(m):
        out[b, m + b] = 1.0
        out[m + b, b] = -1.0
    return out


def clifford_one_form(alpha, xi):
    """The Clifford action ``cl(alpha) xi`` of a complexified 1-form
    given by its adapted-coframe components.

        >>> psi = FockSpinor.vacuum(1)
        >>> clifford_one_form([1.0, 0.0], psi).coeffs
        array([0.+0.j, 1.+0.j])

    :raises DimensionMismatchError: If ``alpha`` does not have ``2m``
        components.

    """
    return xi.apply(clifford_matrix(alpha, xi.m))


def clifford_two_form(beta, xi):
    """The Clifford action of a 2-form given by its antisymmetric matrix
    of frame components; ``cl(omega) psi_0 = -m i psi_0``."""
    return xi.apply(clifford_two_form_matrix(beta, xi.m))


def cl_omega_spectrum(m):
    """The eigenvalues of ``cl(omega)`` on each ``Lambda^{0,p}``, computed
    from the matrix and returned as ``{p: sorted imaginary parts}``."""
    matrix = clifford_two_form_matrix(standard_symplectic_form(m), m)
    degrees = degree_mask(m)
    spectrum = {}
    for p in range(m + 1):
        idx = np.flatnonzero(degrees == p)
        block = matrix[np.ix_(idx, idx)]
        spectrum[p] = tuple(sorted(
            float(round(v.imag, 12)) for v in np.linalg.eigvals(block)))
    return spectrum


def two_point_function(m):
    """``G_ij = <psi_0, cl(e^i) cl(e^j) psi_0> = -(delta_ij + i
    omega_ij)`` in the adapted frame."""
    return -(np.eye(2 * m) + 1j * standard_symplectic_form(m))
