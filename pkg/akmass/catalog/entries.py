"""The catalog of explicit test geometries."""

from collections import namedtuple
import inspect
import math

import numpy as np

from akmass.ale import ALEEnd, standard_structure
from akmass.almost_kahler import AlmostHermitianChart
from akmass.errors import InvalidArgumentValueError, UnknownMetricError
from akmass.jets import power, sqrt
from akmass.riemann import MetricChart

from .kahler import (
    burns_flux,
    burns_profile,
    constant_structure,
    core_scalar_integral,
    eguchi_hanson_flux,
    eguchi_hanson_profile,
    fubini_study_profile,
    potential_chart)
from .polar import RandomPerturbation, polar_chart


STRUCTURES = ('metric_only', 'kahler', 'almost_kahler_nonkahler',
              'hermitian')

FLAGS = ('einstein', 'scalar_flat', 'delta_w_free')


KnownValue = namedtuple('KnownValue', ['value', 'provenance'])
KnownValue.__doc__ = """\
A value the catalog claims for an entry, with where the claim comes from."""


class CatalogEntry(object):

    """An explicit geometry with the facts known about it.

    Claims in :attr:`known` and :attr:`flags` are what the tests re-verify;
    nothing in the package trusts them.

    :param name: The catalog name.
    :type name: :class:`str <python:str>`

    :param chart: The chart of the geometry.
    :type chart: :class:`MetricChart <akmass.riemann.chart.MetricChart>`

    :param structure: One of :data:`STRUCTURES`.
    :type structure: :class:`str <python:str>`

    :param end: The asymptotic end of a non-compact entry.
    :type end: :class:`ALEEnd <akmass.ale.end.ALEEnd>`, optional

    :param compact: Whether the chart covers a compact manifold up to a null
        set.
    :type compact: :class:`bool <python:bool>`

    :param known: Known values keyed ``expected_mass`` or ``c1_pairing``.
    :type known: Dict[:class:`str <python:str>`, :class:`KnownValue`]

    :param flags: A subset of :data:`FLAGS`.
    :type flags: Iterable[:class:`str <python:str>`]

    :param integration_hint: How to integrate over the entry: a ``scheme``
        of ``radial``, ``compactified`` or ``box`` (with ``bounds``), an
        optional ``inner_radius`` with the closed-form ``core_integral`` of
        ``(s + s*) / 2 dv_g`` inside it, and whether ``cutoff`` data for
        the topological pairing exist.
    :type integration_hint: :class:`dict <python:dict>`

    :param sample_box: Half-widths of the box :meth:`sample_points` draws
        from, and the radii it keeps away from.
    :type sample_box: :class:`tuple <python:tuple>`

    """

    def __init__(self, name, chart, structure, end=None, compact=False,
                 known=None, flags=(), integration_hint=None, params=None,
                 sample_box=(2.0, 0.0)):
        if structure not in STRUCTURES:
            raise InvalidArgumentValueError(
                'Unknown structure "{}"; valid structures are: {}'.format(
                    structure, ', '.join(STRUCTURES)))
        unknown = set(flags) - set(FLAGS)
        if unknown:
            raise InvalidArgumentValueError(
                'Unknown flags: {}'.format(', '.join(sorted(unknown))))
        self._name = name
        self._chart = chart
        self._structure = structure
        self._end = end
        self._compact = compact
        self._known = dict(known or {})
        self._flags = frozenset(flags)
        self._integration_hint = dict(integration_hint or {})
        self._params = dict(params or {})
        self._sample_box = sample_box

    @property
    def name(self):
        """The catalog name.

        :type: :class:`str <python:str>`

        """
        return self._name

    @property
    def n(self):
        """The real dimension.

        :type: :class:`int <python:int>`

        """
        return self._chart.dim

    @property
    def chart(self):
        """The chart.

        :type: :class:`MetricChart <akmass.riemann.chart.MetricChart>`

        """
        return self._chart

    @property
    def structure(self):
        """The kind of structure the entry carries.

        :type: :class:`str <python:str>`

        """
        return self._structure

    @property
    def end(self):
        """The asymptotic end, or ``None`` for compact entries.

        :type: :class:`ALEEnd <akmass.ale.end.ALEEnd>`

        """
        return self._end

    @property
    def compact(self):
        """Whether the entry is compact.

        :type: :class:`bool <python:bool>`

        """
        return self._compact

    @property
    def known(self):
        """Known values with their provenance.

        :type: Dict[:class:`str <python:str>`, :class:`KnownValue`]

        """
        return dict(self._known)

    @property
    def flags(self):
        """Claimed curvature properties.

        :type: :class:`frozenset <python:frozenset>`

        """
        return self._flags

    @property
    def integration_hint(self):
        """How to integrate over the entry.

        :type: :class:`dict <python:dict>`

        """
        return dict(self._integration_hint)

    @property
    def params(self):
        """The parameters the entry was built with.

        :type: :class:`dict <python:dict>`

        """
        return dict(self._params)

    def __repr__(self):
        params = ', '.join('{}={}'.format(k, v)
                           for k, v in sorted(self._params.items()))
        return '<CatalogEntry {}({}) n={} {}>'.format(
            self._name, params, self.n, self._structure)

    def sample_points(self, count, seed=0):
        """``count`` seeded points of the chart's domain, away from the
        core.

        Points are drawn uniformly from the box ``[-w, w]^n`` and kept when
        they lie in the domain with ``|x|`` above the exclusion radius.

        """
        rng = np.random.default_rng(seed)
        width, exclusion = self._sample_box
        points = []
        while len(points) < count:
            x = rng.uniform(-width, width, size=self.n)
            point = tuple(float(c) for c in x)
            if np.linalg.norm(x) > exclusion and self._chart.contains(point):
                points.append(point)
        return points


def _positive(value, what):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise InvalidArgumentValueError(
            '{} must be a number, got {!r}'.format(what, value))
    if not (math.isfinite(value) and value > 0.0):
        raise InvalidArgumentValueError(
            '{} must be positive, got {}'.format(what, value))
    return value


def _choice(value, options, what):
    if isinstance(value, bool) or not isinstance(value, int) or \
            value not in options:
        raise InvalidArgumentValueError(
            '{} must be one of {}, got {}'.format(
                what, ', '.join(str(o) for o in options), value))
    return value


def _nonzero(point):
    return any(c != 0.0 for c in point)


def _constant_metric(n):
    def metric(ctx, X):
        return ctx.constant(np.eye(n))
    return metric


def _flat_kahler_chart(n, name):
    base = MetricChart(n, _constant_metric(n), name=name)
    return AlmostHermitianChart(base, constant_structure(
        standard_structure(n)), structure_flag='kahler', name=name)


def euclidean(dim=4):
    """Flat ``R^dim``; Kahler with the standard structure in even
    dimensions."""
    dim = _choice(dim, range(2, 9), 'Euclidean dimension')
    if dim % 2:
        chart = MetricChart(dim, _constant_metric(dim), name='euclidean')
        structure = 'metric_only'
    else:
        chart = _flat_kahler_chart(dim, 'euclidean')
        structure = 'kahler'
    end = ALEEnd(chart, cohomogeneity_one=not dim % 2, name='euclidean')
    zero = 'flat metric'
    return CatalogEntry(
        'euclidean', chart, structure, end=end,
        known={'expected_mass': KnownValue(0.0, zero),
               'c1_pairing': KnownValue(0.0, zero)},
        flags=FLAGS,
        integration_hint={'scheme': 'radial', 'cutoff': dim >= 4},
        params={'dim': dim})


def flat_torus_kahler():
    """The flat torus ``R^4 / (2 pi Z)^4`` with the standard structure."""
    chart = _flat_kahler_chart(4, 'flat_torus_kahler')
    return CatalogEntry(
        'flat_torus_kahler', chart, 'kahler', compact=True,
        known={'c1_pairing': KnownValue(0.0, 'flat metric')},
        flags=FLAGS,
        integration_hint={'scheme': 'box',
                          'bounds': ((0.0, 2.0 * math.pi),) * 4,
                          'cutoff': True},
        sample_box=(math.pi, 0.0))


def schwarzschild(m=1.0):
    """The time-symmetric Schwarzschild slice ``(1 + m / 2r)^4 delta`` in
    isotropic coordinates on ``R^3``; its ADM mass is ``m``."""
    m = _positive(m, 'Schwarzschild mass')

    def components(x):
        r = sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])
        phi = power(1.0 + 0.5 * m / r, 4)
        return [[phi if i == j else 0.0 for j in range(3)] for i in range(3)]

    chart = MetricChart.from_components(3, components, name='schwarzschild',
                                        domain=_nonzero)
    end = ALEEnd(chart, decay_tau=1.0, core_radius=2.0 * m,
                 name='schwarzschild')
    return CatalogEntry(
        'schwarzschild', chart, 'metric_only', end=end,
        known={'expected_mass': KnownValue(
            m, 'isotropic Schwarzschild slice of mass m')},
        flags=('scalar_flat',),
        integration_hint={'scheme': 'radial', 'inner_radius': 2.0 * m},
        params={'m': m}, sample_box=(6.0 * m, 2.0 * m))


def schwarzschild_4d(mu=1.0):
    """The conformally flat scalar-flat metric ``(1 + mu / |x|^2)^2 delta``
    on ``R^4`` with the standard (integrable, non-symplectic) structure; its
    ADM mass is ``2 mu``."""
    mu = _positive(mu, 'Schwarzschild parameter')

    def components(x):
        u = sum(c * c for c in x)
        phi = 1.0 + mu / u
        return [[phi * phi if i == j else 0.0 for j in range(4)]
                for i in range(4)]

    base = MetricChart.from_components(4, components,
                                       name='schwarzschild_4d',
                                       domain=_nonzero)
    chart = AlmostHermitianChart(base, constant_structure(
        standard_structure(4)), structure_flag='hermitian')
    core = math.sqrt(mu)
    # the fundamental form is not closed, so no transgression form
    end = ALEEnd(chart, decay_tau=2.0, core_radius=core,
                 name='schwarzschild_4d')
    return CatalogEntry(
        'schwarzschild_4d', chart, 'hermitian', end=end,
        known={'expected_mass': KnownValue(
            2.0 * mu, 'harmonic conformal factor 1 + mu/r^2')},
        flags=('scalar_flat',),
        params={'mu': mu}, sample_box=(6.0 * core, 2.0 * core))


def eguchi_hanson(a=1.0):
    """The Eguchi-Hanson metric on the double cover of its end, from the
    potential with ``K' = sqrt(u^2 + a^4) / u``; ``Gamma = Z_2``."""
    a = _positive(a, 'Eguchi-Hanson scale')
    first, second = eguchi_hanson_profile(a)
    chart = potential_chart(2, first, second, 'eguchi_hanson',
                            punctured=True)
    end = ALEEnd(chart, gamma_order=2, decay_tau=4.0, core_radius=a,
                 generators=(-np.eye(4),), cohomogeneity_one=True,
                 name='eguchi_hanson')
    hyperkahler = 'Ricci-flat Kahler ALE with c1 = 0'
    return CatalogEntry(
        'eguchi_hanson', chart, 'kahler', end=end,
        known={'expected_mass': KnownValue(0.0, hyperkahler),
               'c1_pairing': KnownValue(0.0, hyperkahler)},
        flags=FLAGS,
        integration_hint={
            'scheme': 'radial', 'inner_radius': a, 'cutoff': True,
            'core_integral': core_scalar_integral(
                2, eguchi_hanson_flux(a), a * a)},
        params={'a': a}, sample_box=(3.0 * a, 0.5 * a))


def burns(c=1.0):
    """The Burns metric with potential ``|z|^2 + c log |z|^2`` on ``C^2``
    minus the origin; the exceptional curve has area ``pi c``."""
    c = _positive(c, 'Burns parameter')
    first, second = burns_profile(c)
    chart = potential_chart(2, first, second, 'burns', punctured=True)
    end = ALEEnd(chart, decay_tau=2.0, cohomogeneity_one=True, name='burns')
    return CatalogEntry(
        'burns', chart, 'kahler', end=end,
        known={'expected_mass': KnownValue(
            c / 3.0, 'scalar-flat Kahler, equality in the Penrose bound'),
            'c1_pairing': KnownValue(
                -math.pi * c, 'minus the area of the exceptional curve')},
        flags=('scalar_flat', 'delta_w_free'),
        integration_hint={
            'scheme': 'radial', 'inner_radius': math.sqrt(c), 'cutoff': True,
            'core_integral': core_scalar_integral(2, burns_flux(c), c)},
        params={'c': c}, sample_box=(2.0 * math.sqrt(c), 0.2 * math.sqrt(c)))


def fubini_study(complex_dim=2):
    """Fubini-Study on ``CP^m`` in the affine chart, potential
    ``log(1 + |z|^2)``; ``s = 4m(m + 1)``."""
    m = _choice(complex_dim, (1, 2, 3), 'Fubini-Study complex dimension')
    first, second = fubini_study_profile()
    chart = potential_chart(m, first, second, 'fubini_study')
    flags = ('einstein', 'delta_w_free') if m == 2 else ('einstein',)
    return CatalogEntry(
        'fubini_study', chart, 'kahler', compact=True,
        known={'c1_pairing': KnownValue(
            (m + 1) * math.pi ** (m - 1),
            'c1 = (m + 1) H with [omega] = pi H')},
        flags=flags,
        integration_hint={'scheme': 'compactified', 'cutoff': True},
        params={'complex_dim': m})


def round_sphere(dim=2):
    """The unit sphere ``S^dim`` in stereographic coordinates,
    ``4 / (1 + |x|^2)^2 delta``."""
    dim = _choice(dim, range(2, 9), 'Sphere dimension')

    def components(x):
        factor = 4.0 / power(1.0 + sum(c * c for c in x), 2)
        return [[factor if i == j else 0.0 for j in range(dim)]
                for i in range(dim)]

    chart = MetricChart.from_components(dim, components,
                                        name='round_sphere')
    return CatalogEntry(
        'round_sphere', chart, 'metric_only', compact=True,
        flags=('einstein',),
        integration_hint={'scheme': 'compactified'},
        params={'dim': dim})


def random_ak(complex_dim=2, seed=0, tau=1.5, amplitude=0.3, modes=3):
    """A seeded almost-Kahler, non-Kahler structure on ``R^(2m)``: the
    polar construction applied to a decaying trigonometric perturbation of
    the flat metric."""
    m = _choice(complex_dim, (2, 3, 4), 'Random structure complex dimension')
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise InvalidArgumentValueError(
            'Seed must be a non-negative int, got {}'.format(seed))
    tau = _positive(tau, 'Decay order')
    amplitude = _positive(amplitude, 'Amplitude')
    if amplitude >= 0.9:
        raise InvalidArgumentValueError(
            'Amplitude must stay below 0.9, got {}'.format(amplitude))
    modes = _choice(modes, range(1, 9), 'Number of modes')
    perturbation = RandomPerturbation(2 * m, seed, tau, amplitude, modes)
    chart = polar_chart(perturbation.chart('random_ak'))
    end = ALEEnd(chart, decay_tau=1.0 + tau, core_radius=1.0,
                 name='random_ak')
    contractible = 'R^2m is contractible'
    return CatalogEntry(
        'random_ak', chart, 'almost_kahler_nonkahler', end=end,
        known={'expected_mass': KnownValue(0.0, 'oscillating decaying '
                                           'perturbation of flat space'),
               'c1_pairing': KnownValue(0.0, contractible)},
        integration_hint={'scheme': 'radial'},
        params={'complex_dim': m, 'seed': seed, 'tau': tau,
                'amplitude': amplitude, 'modes': modes})


FACTORIES = {
    'burns': burns,
    'eguchi_hanson': eguchi_hanson,
    'euclidean': euclidean,
    'flat_torus_kahler': flat_torus_kahler,
    'fubini_study': fubini_study,
    'random_ak': random_ak,
    'round_sphere': round_sphere,
    'schwarzschild': schwarzschild,
    'schwarzschild_4d': schwarzschild_4d,
}


def get_entry(name, **params):
    """Build the catalog entry ``name`` with the given parameters.

        >>> get_entry('burns', c=2.0)
        <CatalogEntry burns(c=2.0) n=4 kahler>

    :raises UnknownMetricError: If there is no such entry.
    :raises InvalidArgumentValueError: If a parameter is not accepted by the
        entry or out of range.

    """
    try:
        factory = FACTORIES[name]
    except KeyError:
        raise UnknownMetricError(
            'Unknown metric "{}"; valid options are: {}'.format(
                name, ', '.join(sorted(FACTORIES))))
    accepted = inspect.signature(factory).parameters
    unknown = sorted(set(params) - set(accepted))
    if unknown:
        raise InvalidArgumentValueError(
            'Metric {} takes no parameter {}; valid parameters are: {}'.format(
                name, ', '.join(unknown), ', '.join(accepted) or 'none'))
    return factory(**params)


def builtin_entries():
    """The default catalog: Euclidean space in dimensions 3, 4 and 6, the
    flat torus, the Schwarzschild slices, Eguchi-Hanson, Burns, Fubini-Study
    on ``CP^1`` and ``CP^2``, the round 2-sphere and a random almost-Kahler
    structure."""
    return [
        euclidean(3), euclidean(4), euclidean(6),
        flat_torus_kahler(),
        schwarzschild(), schwarzschild_4d(),
        eguchi_hanson(), burns(),
        fubini_study(1), fubini_study(2),
        round_sphere(2),
        random_ak(),
    ]
