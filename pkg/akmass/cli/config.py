"""Run configuration: built-in defaults, a TOML file, then flags."""

import logging
import math

try:
    import tomllib
except ImportError:  # pragma: no cover
    import tomli as tomllib

from akmass.errors import ConfigFileError, InvalidArgumentValueError

from .utils import parse_floats, parse_radii


logger = logging.getLogger(__name__)

DEFAULT_TOLERANCES = {
    'pointwise': 1e-8,
    'spinor': 1e-6,
    'mass': 1e-2,
}

# flag name -> keyword of the catalog factories
METRIC_PARAMETERS = {
    'm': 'm',
    'a': 'a',
    'c': 'c',
    'mu': 'mu',
    'dim': 'dim',
    'complex_dim': 'complex_dim',
    'structure_seed': 'seed',
}

INT_PARAMETERS = ('dim', 'complex_dim', 'structure_seed')

RUN_DEFAULTS = {
    'metric': None,
    'point': None,
    'samples': 20,
    'seed': 0,
    'radii': None,
    'rmax': None,
    'degree': 12,
    'method': 'adm',
    'format': 'json',
    'output': None,
    'timing': False,
}


def _int(value, what):
    if isinstance(value, bool):
        raise InvalidArgumentValueError('{} must be an int'.format(what))
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise InvalidArgumentValueError(
            '{} must be an int, got {!r}'.format(what, value))
    if number != float(value):
        raise InvalidArgumentValueError(
            '{} must be an int, got {!r}'.format(what, value))
    return number


def load_config_file(path):
    """Read the ``[run]`` and ``[tolerances]`` tables of a TOML file.

    :returns: The pair ``(run, tolerances)`` of dicts.

    :raises ConfigFileError: If the file cannot be read or parsed, or has
        unknown keys.

    """
    try:
        with open(path, 'rb') as f:
            data = tomllib.load(f)
    except OSError as e:
        raise ConfigFileError('Cannot read config file {}: {}'.format(
            path, e.strerror or e))
    except tomllib.TOMLDecodeError as e:
        raise ConfigFileError('Invalid TOML in {}: {}'.format(path, e))

    unknown_tables = sorted(set(data) - {'run', 'tolerances'})
    if unknown_tables:
        raise ConfigFileError('Unknown tables in {}: {}'.format(
            path, ', '.join(unknown_tables)))
    run = dict(data.get('run', {}))
    tolerances = dict(data.get('tolerances', {}))
    known = set(RUN_DEFAULTS) | set(METRIC_PARAMETERS)
    unknown = sorted(set(run) - known)
    if unknown:
        raise ConfigFileError('Unknown [run] keys in {}: {}'.format(
            path, ', '.join(unknown)))
    unknown = sorted(set(tolerances) - set(DEFAULT_TOLERANCES))
    if unknown:
        raise ConfigFileError('Unknown [tolerances] keys in {}: {}'.format(
            path, ', '.join(unknown)))
    logger.info('Loaded config file %s', path)
    return run, tolerances


class RunConfig(object):

    """Everything a command needs to reproduce a run.

    Values come from :data:`RUN_DEFAULTS` and :data:`DEFAULT_TOLERANCES`,
    overridden by a config file, overridden in turn by explicit flags.

    :param command: The command name, such as ``mass`` or ``verify
        identities``.
    :type command: :class:`str <python:str>`

    :param run: Run settings keyed by the long flag names with underscores.
    :type run: Dict

    :param tolerances: Tolerances keyed ``pointwise``, ``spinor`` and
        ``mass``.
    :type tolerances: Dict

    :raises InvalidArgumentValueError: If a tolerance is not positive, the
        radii are not strictly increasing, or a count is not a positive
        int.

    """

    def __init__(self, command, run=None, tolerances=None):
        settings = dict(RUN_DEFAULTS)
        settings.update({k: v for k, v in (run or {}).items()
                         if v is not None})
        tols = dict(DEFAULT_TOLERANCES)
        tols.update({k: v for k, v in (tolerances or {}).items()
                     if v is not None})

        self._command = command
        self._metric = settings['metric']
        self._metric_params = {}
        for flag, keyword in sorted(METRIC_PARAMETERS.items()):
            value = settings.get(flag)
            if value is None:
                continue
            if flag in INT_PARAMETERS:
                value = _int(value, flag)
            self._metric_params[keyword] = value

        self._samples = _int(settings['samples'], 'samples')
        if self._samples < 1:
            raise InvalidArgumentValueError('samples must be positive')
        self._seed = _int(settings['seed'], 'seed')
        self._degree = _int(settings['degree'], 'degree')
        if self._degree < 1:
            raise InvalidArgumentValueError('degree must be positive')
        self._radii = (None if settings['radii'] is None else
                       parse_radii(settings['radii']))
        self._rmax = (None if settings['rmax'] is None else
                      self._positive(settings['rmax'], 'rmax'))
        self._point = (None if settings['point'] is None else
                       parse_floats(settings['point'], 'Point'))
        if settings['method'] not in ('adm', 'theta'):
            raise InvalidArgumentValueError(
                'method must be adm or theta, got {!r}'.format(
                    settings['method']))
        self._method = settings['method']
        if settings['format'] not in ('csv', 'json'):
            raise InvalidArgumentValueError(
                'format must be csv or json, got {!r}'.format(
                    settings['format']))
        self._format = settings['format']
        self._output = settings['output']
        self._timing = bool(settings['timing'])
        self._tolerances = {
            name: self._positive(value, '{} tolerance'.format(name))
            for name, value in tols.items()}

    @staticmethod
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

    @classmethod
    def from_sources(cls, command, flags, config_path=None):
        """Merge a config file and explicit flags; flags set to ``None``
        leave the file's value in place.

        :param flags: Run settings and tolerances (keys ``tol_pointwise``,
            ``tol_spinor``, ``tol_mass``) from the command line.
        :type flags: Dict

        """
        run, tolerances = ({}, {}) if config_path is None else \
            load_config_file(config_path)
        for key, value in flags.items():
            if value is None:
                continue
            if key.startswith('tol_'):
                tolerances[key[len('tol_'):]] = value
            else:
                run[key] = value
        return cls(command, run, tolerances)

    def __repr__(self):
        return '<RunConfig {} metric={} params={}>'.format(
            self._command, self._metric, self._metric_params)

    @property
    def command(self):
        """The command this configuration runs.

        :type: :class:`str <python:str>`

        """
        return self._command

    @property
    def metric(self):
        """The catalog name, if any.

        :type: :class:`str <python:str>`

        """
        return self._metric

    @property
    def metric_params(self):
        """Keyword arguments for the catalog factory.

        :type: Dict[:class:`str <python:str>`, :class:`float <python:float>`]

        """
        return dict(self._metric_params)

    @property
    def samples(self):
        """Number of sample points of the verification suites.

        :type: :class:`int <python:int>`

        """
        return self._samples

    @property
    def seed(self):
        """Seed of the sample points.

        :type: :class:`int <python:int>`

        """
        return self._seed

    @property
    def degree(self):
        """Quadrature degree.

        :type: :class:`int <python:int>`

        """
        return self._degree

    @property
    def radii(self):
        """Strictly increasing radii, or ``None``.

        :type: Tuple[:class:`float <python:float>`]

        """
        return self._radii

    @property
    def rmax(self):
        """Cutoff radius of bulk integrals, or ``None`` for the default.

        :type: :class:`float <python:float>`

        """
        return self._rmax

    @property
    def point(self):
        """Coordinates for the ``curvature`` command.

        :type: Tuple[:class:`float <python:float>`]

        """
        return self._point

    @property
    def method(self):
        """``adm`` or ``theta``.

        :type: :class:`str <python:str>`

        """
        return self._method

    @property
    def format(self):
        """``csv`` or ``json``.

        :type: :class:`str <python:str>`

        """
        return self._format

    @property
    def output(self):
        """Output path, or ``None`` for stdout.

        :type: :class:`str <python:str>`

        """
        return self._output

    @property
    def timing(self):
        """Whether reports carry wall times.

        :type: :class:`bool <python:bool>`

        """
        return self._timing

    @property
    def tolerances(self):
        """Tolerances keyed ``pointwise``, ``spinor`` and ``mass``.

        :type: Dict[:class:`str <python:str>`, :class:`float <python:float>`]

        """
        return dict(self._tolerances)
