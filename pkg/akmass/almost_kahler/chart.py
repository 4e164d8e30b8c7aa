"""Charts carrying a metric and a compatible almost complex structure."""

import functools

import numpy as np

from akmass.errors import (
    CompatibilityError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError)
from akmass.jets import Jet, jet_array
from akmass.riemann import MetricChart, point_geometry
from akmass.riemann.chart import _orthogonal


STRUCTURE_FLAGS = (
    'kahler',
    'almost_kahler_nonkahler',
    'hermitian',
    'unknown')

STRUCTURE_TOLERANCE = 1e-8


class AlmostHermitianChart(MetricChart):

    """A metric chart together with an almost complex structure ``J``.

    ``structure(ctx, X)`` returns the ``(dim, dim, N)`` jet array of
    ``J^i_j``, the ``i``-th component of ``J d_j``. The fundamental form is
    ``omega(u, v) = g(J u, v)``, i.e. ``omega_ij = J^k_i g_kj``; with
    coordinates ordered ``(x1, y1, x2, y2, ...)`` and the standard structure
    ``J d_x = d_y`` this is ``dx1 ^ dy1 + dx2 ^ dy2 + ...``.

    :param base: The underlying metric chart.
    :type base: :class:`MetricChart <akmass.riemann.chart.MetricChart>`

    :param structure: The structure callable.
    :type structure: Callable

    :param structure_flag: What is claimed about the structure, one of
        ``kahler``, ``almost_kahler_nonkahler``, ``hermitian`` or
        ``unknown``; claims are re-verified by the test suite.
    :type structure_flag: :class:`str <python:str>`

    :raises InvalidArgumentValueError: If the dimension is odd or the flag is
        not known.

    """

    def __init__(self, base, structure, structure_flag='unknown', name=None):
        super(AlmostHermitianChart, self).__init__(
            base.dim, base._metric, name=name or base.name,
            domain=base.domain)
        if base.dim % 2:
            raise InvalidArgumentValueError(
                'Almost complex structures need an even dimension, not '
                '{}'.format(base.dim))
        if structure_flag not in STRUCTURE_FLAGS:
            raise InvalidArgumentValueError(
                'Unknown structure flag "{}"; valid flags are: {}'.format(
                    structure_flag, ', '.join(STRUCTURE_FLAGS)))
        self._base = base
        self._structure = structure
        self._structure_flag = structure_flag

    @classmethod
    def from_components(cls, base, components, structure_flag='unknown',
                        name=None):
        """Build a chart from a function of coordinate jets returning the
        nested components ``J^i_j``."""
        dim = base.dim

        def structure(ctx, X):
            coords = tuple(Jet(ctx, X[i]) for i in range(dim))
            return jet_array(ctx, components(coords))
        return cls(base, structure, structure_flag=structure_flag, name=name)

    @property
    def base(self):
        """The underlying metric chart.

        :type: :class:`MetricChart <akmass.riemann.chart.MetricChart>`

        """
        return self._base

    @property
    def complex_dim(self):
        """Half of the real dimension.

        :type: :class:`int <python:int>`

        """
        return self.dim // 2

    @property
    def structure_flag(self):
        """The claimed type of the structure.

        :type: :class:`str <python:str>`

        """
        return self._structure_flag

    def structure_jets(self, ctx, X=None):
        """The ``(dim, dim, N)`` jet array of ``J^i_j`` in ``ctx``."""
        if X is None:
            X = ctx.coordinates()
        return np.asarray(self._structure(ctx, X), dtype=float)

    def structure_at(self, point):
        """The matrix ``J^i_j`` at ``point``."""
        geom = point_geometry(self, self.check_point(point), 0)
        return self.structure_jets(geom.ctx)[..., 0]

    def rotated(self, Q, name=None):
        Q = _orthogonal(Q, self.dim)
        structure = self._structure

        def pulled_back(ctx, Y):
            X = np.einsum('ij,jn->in', Q, Y)
            return np.einsum('ki,kln,lj->ijn', Q, structure(ctx, X), Q)

        base = self._base.rotated(Q, name=name)
        return AlmostHermitianChart(
            base, pulled_back, structure_flag=self._structure_flag,
            name=base.name)


def structure_defects(g, J):
    """``(|J^2 + Id|, |J^T g J - g|)`` as largest absolute entries."""
    n = g.shape[0]
    square = float(np.max(np.abs(J @ J + np.eye(n))))
    compat = float(np.max(np.abs(J.T @ g @ J - g)))
    return square, compat


def check_structure(g, J, point):
    """Raise if ``J`` is not an almost complex structure compatible with
    ``g``; ``J^2 = -Id`` is checked first."""
    square, compat = structure_defects(g, J)
    scale = max(1.0, float(np.max(np.abs(g))))
    if square > STRUCTURE_TOLERANCE:
        raise CompatibilityError(
            'Invariant J^2 = -Id violated at {}: residual {}'.format(
                point, square), invariant='J^2 = -Id')
    if compat > STRUCTURE_TOLERANCE * scale:
        raise CompatibilityError(
            'Invariant g(J., J.) = g violated at {}: residual {}'.format(
                point, compat), invariant='g(J., J.) = g')


class StructureGeometry(object):

    """Jets of ``J``, ``omega`` and their covariant derivatives at a point,
    on top of the metric :class:`PointGeometry
    <akmass.riemann.geometry.PointGeometry>` of the same order."""

    def __init__(self, chart, point, order):
        self.geom = geom = point_geometry(chart, point, order)
        ctx = geom.ctx
        self.ctx = ctx
        self.dim = chart.dim
        self.point = point
        self.J = chart.structure_jets(ctx)
        check_structure(geom.values(geom.g), ctx.values(self.J), point)
        self.omega = ctx.einsum('ki,kj->ij', self.J, geom.g)
        self.nabla_J = self.nabla_omega = None
        if order >= 1:
            self.nabla_J = geom.nabla(self.J, 1, 1)
            self.nabla_omega = geom.nabla(self.omega, 0, 2)


@functools.lru_cache(maxsize=512)
def structure_geometry(chart, point, order):
    """The cached :class:`StructureGeometry` of ``chart`` at ``point``."""
    return StructureGeometry(chart, point, order)


def almost_hermitian(chart, p, order):
    """Validate ``p`` and return the :class:`StructureGeometry`."""
    if not isinstance(chart, AlmostHermitianChart):
        raise InvalidArgumentTypeError(
            'Chart {} carries no almost complex structure'.format(
                getattr(chart, 'name', chart)))
    return structure_geometry(chart, chart.check_point(p), order)
