"""Adapted unitary frames and the connection forms they carry."""

import numpy as np

from akmass.almost_kahler import almost_hermitian, chern_connection
from akmass.errors import (
    InternalConsistencyError,
    InvalidArgumentValueError)


FRAME_TOLERANCE = 1e-10

# relative threshold below which a projected seed axis is discarded
_DEGENERATE_SEED = 1e-8


class UnitaryFrame(object):

    """An orthonormal frame ``(e_1, ..., e_m, J e_1, ..., J e_m)`` on a
    neighbourhood of a point, held as first-order jets of its vector
    fields.

    :param point: The base point.
    :type point: Tuple[:class:`float <python:float>`]

    :param jets: The ``(n, n, N)`` jet array whose column ``i`` holds the
        coordinate components of ``e_i``.
    :type jets: :class:`numpy.ndarray`

    :param sg: The structure geometry the frame was built from.
    :type sg: :class:`StructureGeometry
        <akmass.almost_kahler.chart.StructureGeometry>`

    """

    def __init__(self, point, jets, sg):
        self._point = point
        self._jets = jets
        self._sg = sg
        self._vectors = sg.ctx.values(jets)
        self._coframe = np.linalg.inv(self._vectors)

    @property
    def point(self):
        """The base point.

        :type: Tuple[:class:`float <python:float>`]

        """
        return self._point

    @property
    def complex_dim(self):
        """Half the real dimension.

        :type: :class:`int <python:int>`

        """
        return self._vectors.shape[0] // 2

    @property
    def vectors(self):
        """The frame at the point, as columns.

        :type: :class:`numpy.ndarray`

        """
        return self._vectors

    @property
    def coframe(self):
        """The dual coframe at the point, as rows.

        :type: :class:`numpy.ndarray`

        """
        return self._coframe

    @property
    def jets(self):
        """First-order jets of the frame fields.

        :type: :class:`numpy.ndarray`

        """
        return self._jets

    @property
    def geometry(self):
        """The structure geometry at the point.

        :type: :class:`StructureGeometry
            <akmass.almost_kahler.chart.StructureGeometry>`

        """
        return self._sg

    def orthonormality_residual(self):
        """``max |g(e_i, e_j) - delta_ij|``."""
        g = self._sg.geom.values(self._sg.geom.g)
        E = self._vectors
        return float(np.max(np.abs(E.T @ g @ E - np.eye(E.shape[0]))))

    def adaptedness_residual(self):
        """``max |J e_b - e_{m+b}|``."""
        m = self.complex_dim
        J = self._sg.ctx.values(self._sg.J)
        E = self._vectors
        return float(np.max(np.abs(J @ E[:, :m] - E[:, m:])))

    def frame_components(self, covector):
        """Components ``alpha(e_i)`` of a coordinate covector."""
        return np.asarray(covector) @ self._vectors

    def form_components(self, form):
        """Components ``beta(e_i, e_j)`` of a coordinate 2-form."""
        E = self._vectors
        return E.T @ np.asarray(form) @ E


def _inner(ctx, g, u, v):
    return ctx.einsum('i,i->', u, ctx.einsum('ij,j->i', g, v))


def adapted_frame(chart, p, seed=None):
    """The adapted orthonormal frame of ``chart`` at ``p``.

    The frame is built by Gram-Schmidt on the columns of ``seed`` (the
    coordinate axes by default): each seed axis is projected off the span
    built so far, normalized to ``e_b`` and followed by ``J e_b``. Axes
    that fall into that span are skipped. The same construction on jets
    extends the frame to a neighbourhood.

        >>> from akmass import get_entry
        >>> flat = get_entry('euclidean', dim=4)
        >>> adapted_frame(flat.chart, (0.0, 0.0, 0.0, 0.0)).vectors
        array([[1., 0., 0., 0.],
               [0., 0., 1., 0.],
               [0., 1., 0., 0.],
               [0., 0., 0., 1.]])

    :raises InternalConsistencyError: If no seed axis is left, which
        cannot happen for a non-degenerate structure.

    """
    sg = almost_hermitian(chart, p, 1)
    ctx = sg.ctx
    g = sg.geom.g
    n = chart.dim
    m = n // 2
    seed = np.eye(n) if seed is None else np.asarray(seed, dtype=float)
    if seed.shape != (n, n):
        raise InvalidArgumentValueError(
            'Frame seed must be a {0} x {0} matrix'.format(n))
    scale = float(np.max(np.abs(seed.T @ sg.geom.values(g) @ seed)))

    spanned = []
    first = []
    for axis in seed.T:
        if len(first) == m:
            break
        v = ctx.constant(axis, 1)
        for f in spanned:
            v = v - ctx.mul(_inner(ctx, g, v, f)[None, :], f)
        length2 = _inner(ctx, g, v, v)
        if length2[0] <= _DEGENERATE_SEED * scale:
            continue
        e = ctx.mul(ctx.apply('pow', length2, exponent=-0.5)[None, :], v)
        je = ctx.einsum('ij,j->i', sg.J, e)
        spanned.extend((e, je))
        first.append((e, je))
    if len(first) < m:
        raise InternalConsistencyError(
            'Seed axes span no adapted frame at {}'.format(sg.point))
    columns = [e for e, _ in first] + [je for _, je in first]
    return UnitaryFrame(sg.point, np.stack(columns, axis=1), sg)


class SpinConnectionData(object):

    """The connection forms of an adapted frame at a point.

    ``w[j, k, l]`` is ``w_kl(e_j) = g(nabla_{e_j} e_k, e_l)`` for the
    Levi-Civita connection and ``a_s[j]`` the imaginary connection form
    of the Chern connection on the anticanonical bundle, evaluated on
    ``e_j``.

    """

    def __init__(self, frame, w, chern_w, a_s):
        self._frame = frame
        self._w = w
        self._chern_w = chern_w
        self._a_s = a_s

    @property
    def frame(self):
        """The frame the forms refer to.

        :type: :class:`UnitaryFrame`

        """
        return self._frame

    @property
    def w(self):
        """Levi-Civita connection forms ``w[j, k, l]``.

        :type: :class:`numpy.ndarray`

        """
        return self._w

    @property
    def chern_w(self):
        """Chern connection forms, indexed like :attr:`w`.

        :type: :class:`numpy.ndarray`

        """
        return self._chern_w

    @property
    def a_s(self):
        """``A_s(e_j)``, purely imaginary.

        :type: :class:`numpy.ndarray`

        """
        return self._a_s

    def antisymmetry_residual(self):
        """``max |w_kl + w_lk|``."""
        return float(np.max(np.abs(self._w + np.swapaxes(self._w, 1, 2))))


def spin_connection(chart, p, frame=None):
    """The :class:`SpinConnectionData` of an adapted frame.

    ``A_s(X) = i sum_b g(nabla'_X e_b, J e_b)`` is the trace of the Chern
    connection ``nabla'`` in the unitary frame; with this sign the
    constant spinor is parallel at Kahler points.

    """
    if frame is None:
        frame = adapted_frame(chart, p)
    sg = frame.geometry
    geom = sg.geom
    n = chart.dim
    m = n // 2
    g = geom.values(geom.g)
    E = frame.vectors

    # nabla_b (e_k)^a for every frame field k
    nabla_e = np.stack([geom.values(geom.nabla(frame.jets[:, k], 1, 0))
                        for k in range(n)])
    w = np.einsum('bj,kba,ac,cl->jkl', E, nabla_e, g, E)
    if np.max(np.abs(w + np.swapaxes(w, 1, 2))) > FRAME_TOLERANCE * max(
            1.0, float(np.max(np.abs(w)))):
        raise InternalConsistencyError(
            'Connection forms of the frame at {} are not skew'.format(
                sg.point))

    correction = chern_connection(chart, sg.point) - geom.values(geom.gamma)
    chern_w = w + np.einsum('abc,bj,ck,ad,dl->jkl', correction, E, E, g, E)
    a_s = 1j * sum(chern_w[:, b, m + b] for b in range(m))
    return SpinConnectionData(frame, w, chern_w, a_s)
