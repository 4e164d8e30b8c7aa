"""Christoffel symbols, curvature tensors and the 4d Weyl decomposition."""

import math

import numpy as np

from .geometry import geometry


def kulkarni_nomizu(h, k):
    """The Kulkarni-Nomizu product of two symmetric 2-tensors."""
    return (np.einsum('ik,jl->ijkl', h, k) + np.einsum('jl,ik->ijkl', h, k) -
            np.einsum('il,jk->ijkl', h, k) - np.einsum('jk,il->ijkl', h, k))


def weyl_tensor(riemann, ricci, scalar, g):
    """The Weyl tensor of fully lowered curvature data; zero for
    ``dim < 3``."""
    n = g.shape[0]
    if n < 3:
        return np.zeros_like(riemann)
    return (riemann + kulkarni_nomizu(ricci, g) / (n - 2) -
            scalar / (2.0 * (n - 1) * (n - 2)) * kulkarni_nomizu(g, g))


def orthonormal_frame(g):
    """Columns of the Gram-Schmidt orthonormalization of the coordinate
    basis; the frame is positively oriented with respect to the coordinate
    order."""
    # g = L L^T with L lower triangular; E = L^{-T} is upper triangular
    L = np.linalg.cholesky(g)
    return np.linalg.inv(L).T


def _two_form(i, j, n=4):
    out = np.zeros((n, n))
    out[i, j] = 1.0
    out[j, i] = -1.0
    return out


def self_dual_basis():
    """Orthonormal bases of self-dual and anti-self-dual 2-forms on oriented
    4-space, as antisymmetric ``4 x 4`` component matrices.

    :returns: ``(plus, minus)``, each of shape ``(3, 4, 4)``.

    """
    pairs = (((0, 1), (2, 3)), ((0, 2), (3, 1)), ((0, 3), (1, 2)))
    plus = np.array([(_two_form(*a) + _two_form(*b)) / math.sqrt(2.0)
                     for a, b in pairs])
    minus = np.array([(_two_form(*a) - _two_form(*b)) / math.sqrt(2.0)
                      for a, b in pairs])
    return plus, minus


def curvature_operator_matrix(tensor, basis):
    """Matrix of the curvature operator ``alpha -> -1/2 R_abcd alpha^ab`` of
    an orthonormal-frame curvature-type tensor on a basis of 2-forms, using
    the strict-pair inner product on 2-forms."""
    return -0.25 * np.einsum('abcd,Bab,Acd->AB', tensor, basis, basis)


class CurvaturePacket(object):

    """All pointwise curvature data of a metric at one point.

    :param point: The point.
    :type point: Tuple[:class:`float <python:float>`]

    """

    def __init__(self, point, metric, christoffel, riemann, ricci, scalar,
                 weyl, w_plus=None, w_minus=None, frame=None):
        self._point = point
        self._metric = metric
        self._christoffel = christoffel
        self._riemann = riemann
        self._ricci = ricci
        self._scalar = scalar
        self._weyl = weyl
        self._w_plus = w_plus
        self._w_minus = w_minus
        self._frame = frame

    @property
    def point(self):
        """The point the packet was computed at.

        :type: Tuple[:class:`float <python:float>`]

        """
        return self._point

    @property
    def dim(self):
        """The dimension of the chart.

        :type: :class:`int <python:int>`

        """
        return self._metric.shape[0]

    @property
    def metric(self):
        """The metric matrix ``g_ij``.

        :type: :class:`numpy.ndarray`

        """
        return self._metric

    @property
    def christoffel(self):
        """``Gamma^k_ij`` as an array indexed ``[k, i, j]``.

        :type: :class:`numpy.ndarray`

        """
        return self._christoffel

    @property
    def riemann(self):
        """The fully lowered Riemann tensor ``R_ijkl``.

        :type: :class:`numpy.ndarray`

        """
        return self._riemann

    @property
    def ricci(self):
        """The Ricci tensor.

        :type: :class:`numpy.ndarray`

        """
        return self._ricci

    @property
    def scalar(self):
        """The scalar curvature.

        :type: :class:`float <python:float>`

        """
        return self._scalar

    @property
    def weyl(self):
        """The fully lowered Weyl tensor.

        :type: :class:`numpy.ndarray`

        """
        return self._weyl

    @property
    def w_plus(self):
        """The self-dual Weyl operator on the orthonormal basis of
        :func:`self_dual_basis`; ``None`` unless the dimension is 4.

        :type: :class:`numpy.ndarray`

        """
        return self._w_plus

    @property
    def w_minus(self):
        """The anti-self-dual Weyl operator; ``None`` unless the dimension
        is 4.

        :type: :class:`numpy.ndarray`

        """
        return self._w_minus

    @property
    def frame(self):
        """The oriented orthonormal frame (as columns) the 4d blocks are
        expressed in.

        :type: :class:`numpy.ndarray`

        """
        return self._frame

    def frame_tensor(self, tensor):
        """Components of a covariant 4-tensor in :attr:`frame`."""
        E = self._frame if self._frame is not None \
            else np.linalg.inv(np.linalg.cholesky(self._metric)).T
        return np.einsum('ijkl,ia,jb,kc,ld->abcd', tensor, E, E, E, E)

    def einstein_residual(self):
        """Relative size of the trace-free Ricci tensor."""
        n = self.dim
        g_inv = np.linalg.inv(self._metric)
        traceless = self._ricci - self._scalar / n * self._metric
        norm = math.sqrt(abs(np.einsum('ia,jb,ij,ab->', g_inv, g_inv,
                                       traceless, traceless)))
        scale = max(1.0, abs(self._scalar))
        return norm / scale

    def symmetry_residual(self):
        """Largest violation of the algebraic Riemann symmetries and the
        first Bianchi identity, relative to the size of the tensor."""
        R = self._riemann
        scale = max(1.0, float(np.max(np.abs(R))))
        residuals = (
            R + np.swapaxes(R, 0, 1),
            R + np.swapaxes(R, 2, 3),
            R - np.transpose(R, (2, 3, 0, 1)),
            R + np.transpose(R, (0, 2, 3, 1)) + np.transpose(R, (0, 3, 1, 2)))
        return max(float(np.max(np.abs(r))) for r in residuals) / scale


def christoffel(chart, p):
    """The Christoffel symbols ``Gamma^k_ij`` of ``chart`` at ``p``.

        >>> from akmass import MetricChart
        >>> polar = MetricChart.from_components(
        ...     2, lambda x: [[1.0, 0.0], [0.0, x[0] * x[0]]], name='polar')
        >>> gamma = christoffel(polar, (2.0, 0.0))
        >>> float(gamma[0, 1, 1]), float(gamma[1, 0, 1])
        (-2.0, 0.5)

    :returns: An array indexed ``[k, i, j]``.
    :rtype: :class:`numpy.ndarray`

    :raises DegenerateMetricError: If the metric is singular at ``p``.

    """
    geom = geometry(chart, p, 1)
    return geom.values(geom.gamma)


def curvature_packet(chart, p):
    """The :class:`CurvaturePacket` of ``chart`` at ``p``.

    In dimension 4 the packet also holds the self-dual and anti-self-dual
    Weyl blocks, with the orientation given by the coordinate order.

    """
    geom = geometry(chart, p, 2)
    g = geom.values(geom.g)
    riemann = geom.values(geom.riemann)
    ricci = geom.values(geom.ricci)
    scalar = float(geom.values(geom.scalar))
    weyl = weyl_tensor(riemann, ricci, scalar, g)
    w_plus = w_minus = frame = None
    if chart.dim == 4:
        frame = orthonormal_frame(g)
        w_frame = np.einsum('ijkl,ia,jb,kc,ld->abcd', weyl, frame, frame,
                            frame, frame)
        plus, minus = self_dual_basis()
        w_plus = curvature_operator_matrix(w_frame, plus)
        w_minus = curvature_operator_matrix(w_frame, minus)
    return CurvaturePacket(
        geom.point, g, geom.values(geom.gamma), riemann, ricci, scalar, weyl,
        w_plus=w_plus, w_minus=w_minus, frame=frame)


def sectional_curvature(chart, p, X, Y):
    """The sectional curvature of the plane spanned by ``X`` and ``Y``."""
    packet = curvature_packet(chart, p)
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    g = packet.metric
    area = (X @ g @ X) * (Y @ g @ Y) - (X @ g @ Y) ** 2
    return float(np.einsum('ijkl,i,j,k,l->', packet.riemann, X, Y, Y, X) /
                 area)


def weyl_jets(geom):
    """Jets of the fully lowered Weyl tensor of a :class:`PointGeometry` of
    order at least 2."""
    ctx = geom.ctx
    n = geom.dim
    if n < 3:
        return np.zeros_like(geom.riemann)
    g = ctx.truncate(geom.g, ctx.order_of(geom.riemann))

    def product(h, k):
        return (ctx.einsum('ik,jl->ijkl', h, k) +
                ctx.einsum('jl,ik->ijkl', h, k) -
                ctx.einsum('il,jk->ijkl', h, k) -
                ctx.einsum('jk,il->ijkl', h, k))

    return (geom.riemann + product(geom.ricci, g) / (n - 2) -
            ctx.mul(geom.scalar, product(g, g)) /
            (2.0 * (n - 1) * (n - 2)))
