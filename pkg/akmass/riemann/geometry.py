"""Pointwise Levi-Civita geometry from metric jets."""

import functools

import numpy as np

from akmass.jets import JetContext


class PointGeometry(object):

    """Jets of the metric, its inverse, the Christoffel symbols and the
    curvature at one point of a chart.

    A context of order ``k`` yields metric jets of order ``k``, Christoffel
    jets of order ``k - 1`` and curvature jets of order ``k - 2``. Index
    conventions:

    * ``gamma[k, i, j]`` is ``Gamma^k_ij``;
    * ``riemann_up[c, i, j, a]`` is ``R^c_ija``, the components of
      ``R(d_i, d_j) d_a = [nabla_i, nabla_j] d_a``;
    * ``riemann[i, j, a, b]`` is ``R_ijab = g(R(d_i, d_j) d_a, d_b)``, so the
      unit sphere has ``R_ijkl = g_jk g_il - g_ik g_jl``;
    * ``ricci[j, a]`` is ``R^c_cja``.

    Instances are built through :func:`point_geometry`, which caches them.

    """

    def __init__(self, chart, point, order):
        self.chart = chart
        self.point = point
        self.order = order
        self.dim = n = chart.dim
        self.ctx = ctx = JetContext(n, order, point)
        self.g = chart.metric_jets(ctx)
        self.g_inv = ctx.inv(self.g)

        self.dg = self.gamma_lower = self.gamma = None
        self.riemann_up = self.riemann = self.ricci = self.scalar = None
        if order >= 1:
            # dg[l, i, j] = d_l g_ij
            self.dg = dg = ctx.partial(self.g)
            self.gamma_lower = 0.5 * (
                np.einsum('ijln->ijln', dg) +
                np.einsum('jiln->ijln', dg) -
                np.einsum('lijn->ijln', dg))
            self.gamma = ctx.einsum('kl,ijl->kij', self.g_inv,
                                    self.gamma_lower)
        if order >= 2:
            self.riemann_up = connection_curvature(ctx, self.gamma)
            self.riemann = ctx.einsum('cija,cb->ijab', self.riemann_up,
                                      self.g)
            self.ricci = np.einsum('ccjan->jan', self.riemann_up)
            self.scalar = ctx.einsum('ja,ja->', self.g_inv, self.ricci)

    def values(self, jets):
        """Point values of a jet array of this geometry."""
        return None if jets is None else self.ctx.values(jets)

    def nabla(self, tensor, upper, lower):
        """Jets of the Levi-Civita covariant derivative of a tensor field.

        ``tensor`` is a jet array whose first ``upper`` axes are
        contravariant and the next ``lower`` axes covariant; the result has
        the derivative index first and one jet order less.

        """
        ctx = self.ctx
        out = ctx.partial(tensor)
        rank = upper + lower
        letters = 'abcdefgh'[:rank]
        for slot in range(rank):
            mark = letters[slot]
            replaced = letters[:slot] + 'y' + letters[slot + 1:]
            if slot < upper:
                spec = '{}xy,{}->x{}'.format(mark, replaced, letters)
                sign = 1.0
            else:
                spec = 'yx{},{}->x{}'.format(mark, replaced, letters)
                sign = -1.0
            term = ctx.einsum(spec, self.gamma, tensor)
            size = min(out.shape[-1], term.shape[-1])
            out = out[..., :size] + sign * term[..., :size]
        return out


@functools.lru_cache(maxsize=512)
def point_geometry(chart, point, order):
    """The cached :class:`PointGeometry` of ``chart`` at ``point``."""
    return PointGeometry(chart, point, order)


def geometry(chart, p, order):
    """Validate ``p`` for ``chart`` and return its :class:`PointGeometry`."""
    return point_geometry(chart, chart.check_point(p), order)


def connection_curvature(ctx, gamma):
    """Jets of ``R^c_ija`` of the affine connection with coefficient jets
    ``gamma[k, i, j]``, one order below ``gamma``."""
    order = ctx.order_of(gamma)
    d_gamma = ctx.partial(gamma)
    quadratic = (ctx.einsum('cib,bja->cija', gamma, gamma) -
                 ctx.einsum('cjb,bia->cija', gamma, gamma))
    return (np.einsum('icjan->cijan', d_gamma) -
            np.einsum('jcian->cijan', d_gamma) +
            ctx.truncate(quadratic, order - 1))
