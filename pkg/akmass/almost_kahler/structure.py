"""Pointwise almost-Hermitian quantities."""

from collections import namedtuple

import numpy as np

from akmass.errors import (
    CalibrationError,
    InternalConsistencyError)
from akmass.riemann import connection_curvature, field_jets, geometry

from .chart import (
    almost_hermitian,
    structure_defects)
from .forms import (
    anti_invariant_curvature,
    covector_form_norm2,
    curvature_norm2,
    curvature_on_form,
    curvature_pairing,
    exterior_derivative_values,
    form_inner,
    form_norm2,
    j_anti_invariant_part,
    raise_pair)


# iF_ij = CHERN_RICCI_NORMALIZATION * J^a_c R'^c_ija for the Chern curvature R'
CHERN_RICCI_NORMALIZATION = 0.5

CONNECTION_TOLERANCE = 1e-8
WEDGE_TOLERANCE = 1e-6


NablaStructure = namedtuple(
    'NablaStructure', ['nabla_J', 'nabla_omega', 'norm_nabla_omega',
                       'norm_nabla_J'])
NablaStructure.__doc__ = """\
Levi-Civita derivatives of ``J`` and ``omega``, both indexed with the
derivative direction first, with ``|nabla omega|^2`` in the strict-pair form
norm and ``|nabla J|^2`` in the full endomorphism norm."""

AntiInvariantComponents = namedtuple(
    'AntiInvariantComponents',
    ['w_second', 'rho_star', 'rho_star_anti', 'phi'])
AntiInvariantComponents.__doc__ = """\
The anti-invariant curvature ``W''``, the twisted Ricci form ``rho* =
R(omega)``, its ``J``-anti-invariant part and the 2-form
``phi(X, Y) = <nabla_{JX} omega, nabla_Y omega>``."""


def fundamental_form(chart, p):
    """The fundamental 2-form ``omega_ij = g(J d_i, d_j)`` at ``p``.

        >>> from akmass import get_entry
        >>> flat = get_entry('euclidean', dim=4)
        >>> fundamental_form(flat.chart, (0.0, 0.0, 0.0, 0.0))[0]
        array([0., 1., 0., 0.])

    :raises CompatibilityError: If ``J`` is not an almost complex structure
        compatible with the metric at ``p``.

    """
    sg = almost_hermitian(chart, p, 0)
    return sg.ctx.values(sg.omega)


def structure_residuals(chart, p):
    """The defects ``|J^2 + Id|``, ``|g(J., J.) - g|`` and ``|d omega|`` at
    ``p``, as a dict keyed ``j_squared``, ``compatibility`` and
    ``d_omega``.

    Unlike :func:`fundamental_form` this reports rather than raises.

    """
    point = chart.check_point(p)
    g = chart.metric_at(point)
    J = chart.structure_at(point)
    square, compat = structure_defects(g, J)
    residuals = {'j_squared': square, 'compatibility': compat}
    if square <= 1e-6 and compat <= 1e-6:
        sg = almost_hermitian(chart, point, 1)
        d_omega = exterior_derivative_values(sg.ctx.values(
            sg.ctx.partial(sg.omega)))
        residuals['d_omega'] = float(np.max(np.abs(d_omega)))
    else:
        residuals['d_omega'] = float('nan')
    return residuals


def exterior_derivative_of_form(chart, form, p):
    """The exterior derivative of a 2-form given as a function of
    coordinate jets, as the array ``(d alpha)_ijk``."""
    point = chart.check_point(p)
    geom = geometry(chart, point, 1)
    jets = field_jets(geom.ctx, form)
    return exterior_derivative_values(geom.ctx.values(geom.ctx.partial(jets)))


def nabla_structure(chart, p):
    """The :class:`NablaStructure` of ``chart`` at ``p``.

    The two norms satisfy ``|nabla omega|^2 = 1/2 |nabla J|^2``
    identically.

    """
    sg = almost_hermitian(chart, p, 1)
    geom = sg.geom
    g = geom.values(geom.g)
    g_inv = geom.values(geom.g_inv)
    nabla_J = sg.ctx.values(sg.nabla_J)
    nabla_omega = sg.ctx.values(sg.nabla_omega)
    norm_J = float(np.einsum('cd,ab,ij,caj,dbi->', g_inv, g, g_inv,
                             nabla_J, nabla_J))
    return NablaStructure(nabla_J, nabla_omega,
                          covector_form_norm2(nabla_omega, g_inv), norm_J)


def _curvature_values(chart, p):
    sg = almost_hermitian(chart, p, 2)
    geom = sg.geom
    return (sg, geom.values(geom.g_inv), geom.values(geom.riemann),
            float(geom.values(geom.scalar)), sg.ctx.values(sg.omega))


def star_scalar(chart, p):
    """The star-scalar curvature ``s* = 2 R(omega, omega)``.

    With the curvature operator ``R(alpha)_cd = -1/2 R_abcd alpha^ab`` this
    equals the scalar curvature at Kahler points.

    """
    _, g_inv, riemann, _, omega = _curvature_values(chart, p)
    return 2.0 * curvature_pairing(riemann, omega, omega, g_inv)


def hermitian_scalar(chart, p):
    """The Hermitian scalar curvature ``(s + s*) / 2``."""
    _, g_inv, riemann, scalar, omega = _curvature_values(chart, p)
    return 0.5 * (scalar + 2.0 * curvature_pairing(riemann, omega, omega,
                                                   g_inv))


def chern_correction_jets(sg):
    """Jets of ``C^k_ij = -1/2 J^k_l (nabla_i J)^l_j``, the difference
    between the Chern and the Levi-Civita connection."""
    return -0.5 * sg.ctx.einsum('kl,ilj->kij', sg.J, sg.nabla_J)


def chern_connection(chart, p):
    """Coefficients ``Gamma'^k_ij`` of the Hermitian connection
    ``nabla' = nabla - 1/2 J (nabla J)`` at ``p``.

    :raises InternalConsistencyError: If ``nabla' g`` or ``nabla' J`` do not
        vanish.

    """
    sg = almost_hermitian(chart, p, 1)
    geom = sg.geom
    g = geom.values(geom.g)
    J = sg.ctx.values(sg.J)
    C = sg.ctx.values(chern_correction_jets(sg))
    nabla_J = sg.ctx.values(sg.nabla_J)
    metric_defect = -(np.einsum('cia,cb->iab', C, g) +
                      np.einsum('cib,ac->iab', C, g))
    structure_defect = (nabla_J + np.einsum('aic,cb->iab', C, J) -
                        np.einsum('cib,ac->iab', C, J))
    scale = max(1.0, float(np.max(np.abs(nabla_J))))
    worst = max(float(np.max(np.abs(metric_defect))),
                float(np.max(np.abs(structure_defect))))
    if worst > CONNECTION_TOLERANCE * scale:
        raise InternalConsistencyError(
            'Hermitian connection fails to preserve g and J at {}: '
            'residual {:.3e}'.format(sg.point, worst))
    return geom.values(geom.gamma) + C


def chern_ricci_jets(sg):
    """Jets of the Chern-Ricci form, two orders below the context."""
    ctx = sg.ctx
    gamma = sg.geom.gamma + chern_correction_jets(sg)
    curvature = connection_curvature(ctx, gamma)
    return CHERN_RICCI_NORMALIZATION * ctx.einsum('ac,cija->ij', sg.J,
                                                  curvature)


def wedge_identity_residual(chart, p):
    """``|<iF, omega> - (s + s*) / 4|``: the pointwise form of
    ``iF ^ omega^(m-1) = (s + s*) / (4m) omega^m``."""
    sg, g_inv, riemann, scalar, omega = _curvature_values(chart, p)
    form = sg.ctx.values(chern_ricci_jets(sg))
    s_star = 2.0 * curvature_pairing(riemann, omega, omega, g_inv)
    return abs(form_inner(form, omega, g_inv) - 0.25 * (scalar + s_star))


def chern_ricci_form(chart, p, calibrate=True):
    """The curvature 2-form ``iF`` of the Chern connection on the
    anticanonical bundle at ``p``.

    Quadrature nodes close to a collapsed orbit pass ``calibrate=False``:
    the form is returned without the wedge identity check.

    :raises CalibrationError: If ``calibrate`` is set and ``iF ^
        omega^(m-1) = (s + s*) / (4m) omega^m`` fails at ``p``.

    """
    if not calibrate:
        sg = almost_hermitian(chart, p, 2)
        return sg.ctx.values(chern_ricci_jets(sg))
    sg, g_inv, riemann, scalar, omega = _curvature_values(chart, p)
    form = sg.ctx.values(chern_ricci_jets(sg))
    s_star = 2.0 * curvature_pairing(riemann, omega, omega, g_inv)
    residual = abs(form_inner(form, omega, g_inv) - 0.25 * (scalar + s_star))
    scale = max(1.0, abs(scalar), abs(s_star))
    if residual > WEDGE_TOLERANCE * scale:
        raise CalibrationError(
            'Chern-Ricci form misses the wedge identity at {}: residual '
            '{:.3e}'.format(sg.point, residual))
    return form


def chern_ricci_exterior_derivative(chart, p):
    """Largest component of ``d(iF)`` at ``p``; the form is closed."""
    sg = almost_hermitian(chart, p, 3)
    form = chern_ricci_jets(sg)
    return float(np.max(np.abs(exterior_derivative_values(
        sg.ctx.values(sg.ctx.partial(form))))))


def _phi(nabla_omega, J, g_inv):
    # phi_xy = <J^a_x nabla_a omega, nabla_y omega>
    shifted = np.einsum('ax,aij->xij', J, nabla_omega)
    return 0.5 * np.einsum('xij,yij->xy', raise_pair(shifted, g_inv),
                           nabla_omega)


def anti_invariant_components(chart, p):
    """The :class:`AntiInvariantComponents` of ``chart`` at ``p``."""
    sg, g_inv, riemann, _, omega = _curvature_values(chart, p)
    J = sg.ctx.values(sg.J)
    rho = curvature_on_form(riemann, omega, g_inv)
    return AntiInvariantComponents(
        anti_invariant_curvature(riemann, J), rho,
        j_anti_invariant_part(rho, J),
        _phi(sg.ctx.values(sg.nabla_omega), J, g_inv))


class AKPointData(object):

    """Every almost-Hermitian quantity of a chart at one point.

    :param values: The quantities, keyed by the attribute names listed
        below.
    :type values: Dict

    """

    FIELDS = ('point', 'omega', 'nabla_J', 'nabla_omega', 'norm_nabla_omega',
              'norm_nabla_J', 's', 's_star', 'hermitian_s', 'chern_ricci',
              'w_second', 'rho_star', 'rho_star_anti', 'phi')

    def __init__(self, **values):
        missing = set(self.FIELDS) - set(values)
        if missing:
            raise TypeError('Missing point data: {}'.format(
                ', '.join(sorted(missing))))
        self._values = values

    def __getattr__(self, name):
        try:
            return self.__dict__['_values'][name]
        except KeyError:
            raise AttributeError(name)

    def __repr__(self):
        return '<AKPointData at {} s={:.6g} s*={:.6g}>'.format(
            self.point, self.s, self.s_star)

    @property
    def identity_residual(self):
        """``s* - s - |nabla omega|^2``.

        :type: :class:`float <python:float>`

        """
        return self.s_star - self.s - self.norm_nabla_omega


def ak_point_data(chart, p):
    """Collect the :class:`AKPointData` of ``chart`` at ``p``."""
    sg, g_inv, riemann, scalar, omega = _curvature_values(chart, p)
    nabla = nabla_structure(chart, p)
    s_star = 2.0 * curvature_pairing(riemann, omega, omega, g_inv)
    components = anti_invariant_components(chart, p)
    return AKPointData(
        point=sg.point, omega=omega, nabla_J=nabla.nabla_J,
        nabla_omega=nabla.nabla_omega,
        norm_nabla_omega=nabla.norm_nabla_omega,
        norm_nabla_J=nabla.norm_nabla_J, s=scalar, s_star=s_star,
        hermitian_s=0.5 * (scalar + s_star),
        chern_ricci=sg.ctx.values(chern_ricci_jets(sg)),
        w_second=components.w_second, rho_star=components.rho_star,
        rho_star_anti=components.rho_star_anti, phi=components.phi)


def anti_invariant_norms(components, g_inv):
    """``(|W''|^2, |rho*''|^2, |phi|^2)`` under the form norms."""
    return (curvature_norm2(components.w_second, g_inv),
            form_norm2(components.rho_star_anti, g_inv),
            form_norm2(components.phi, g_inv))
