"""Core command-line interface for akmass."""

import logging
import sys

from argparse import (
    ArgumentParser,
    RawTextHelpFormatter)

from akmass.ale import adm_mass, mass_formula_check, mass_via_theta
from akmass.catalog import (
    blair_check,
    builtin_entries,
    get_entry,
    penrose_check)
from akmass.errors import (
    ArgumentError,
    ConfigError,
    MissingStrategyError,
    NumericalError,
    PreconditionError,
    RequiredArgumentError,
    StrategyError,
    StructureError)
from akmass.riemann import curvature_packet
from akmass.version import __version__

from .config import RunConfig
from .report import (
    CheckRecord,
    VerificationReport,
    emit_mass_table,
    emit_report,
    emit_rows)
from .suites import curvature_suite, identity_suite
from .utils import configure_logging, print_err


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

# option dests that are run settings rather than parser plumbing
RUN_FLAGS = ('metric', 'point', 'samples', 'seed', 'radii', 'rmax',
             'degree', 'method', 'format', 'output', 'timing', 'm', 'a',
             'c', 'mu', 'dim', 'complex_dim', 'structure_seed',
             'tol_pointwise', 'tol_spinor', 'tol_mass')


def _entry(config):
    if config.metric is None:
        raise RequiredArgumentError(
            'No metric given; use --metric or the [run] table of --config')
    return get_entry(config.metric, **config.metric_params)


def _relative_tolerance(config, *values):
    return config.tolerances['mass'] * max([abs(v) for v in values] + [1.0])


def _catalog_list(config):
    """Run the ``catalog list`` command."""
    rows = [(e.name, e.n, e.structure, e.compact, sorted(e.flags),
             repr(e.params)) for e in builtin_entries()]
    emit_rows(('name', 'n', 'structure', 'compact', 'flags', 'params'), rows,
              config.format, config.output, key='entries')
    return EXIT_OK


def _curvature(config):
    """Run the ``curvature`` command."""
    entry = _entry(config)
    if config.point is None:
        raise RequiredArgumentError('The curvature command needs --point')
    packet = curvature_packet(entry.chart, config.point)
    rows = [('scalar', repr(float(packet.scalar))),
            ('einstein_residual', repr(float(packet.einstein_residual()))),
            ('symmetry_residual', repr(float(packet.symmetry_residual())))]
    n = entry.n
    rows.extend(('ricci_{}{}'.format(i, j), repr(float(packet.ricci[i, j])))
                for i in range(n) for j in range(i, n))
    emit_rows(('quantity', 'value'), rows, config.format, config.output,
              key='curvature')
    return EXIT_OK


def _emit_checks(config, report):
    emit_report(report, config.format, config.output)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _verify_identities(config):
    """Run the ``verify identities`` command."""
    return _emit_checks(config, identity_suite(_entry(config), config))


def _verify_curvature(config):
    """Run the ``verify curvature`` command."""
    return _emit_checks(config, curvature_suite(_entry(config), config))


def _radii(config, entry):
    if config.radii is not None:
        return config.radii
    base = entry.end.base_radius
    return tuple(base * f for f in (10.0, 20.0, 40.0, 80.0))


def _mass(config):
    """Run the ``mass`` command."""
    entry = _entry(config)
    if entry.end is None:
        raise MissingStrategyError(
            'Entry {} has no asymptotic end'.format(entry.name))
    method = adm_mass if config.method == 'adm' else mass_via_theta
    estimate = method(entry.end, _radii(config, entry), config.degree)
    known = entry.known.get('expected_mass')
    expected = None if known is None else known.value
    emit_mass_table(estimate, config.format, config.output, expected)
    if known is not None and abs(estimate.extrapolated - known.value) > \
            _relative_tolerance(config, known.value):
        logger.warning('Mass of %s is %.8g, expected %.8g', entry.name,
                       estimate.extrapolated, known.value)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _mass_formula(config):
    """Run the ``mass-formula`` command."""
    entry = _entry(config)
    if entry.end is None:
        raise MissingStrategyError(
            'Entry {} has no asymptotic end'.format(entry.name))
    result = mass_formula_check(entry, _radii(config, entry), config.rmax,
                                config.degree)
    report = VerificationReport(entry.name, dict(result._asdict(),
                                                 warnings=list(
                                                     result.warnings)))
    report.add(CheckRecord(
        'mass_formula', 'has the mass given by', result.discrepancy,
        _relative_tolerance(config, result.lhs, result.rhs) +
        result.error_bar, 1))
    return _emit_checks(config, report)


def _blair(config):
    """Run the ``blair`` command."""
    entry = _entry(config)
    result = blair_check(entry, config.degree)
    report = VerificationReport(entry.name, result._asdict())
    report.add(CheckRecord(
        'blair', 'total Hermitian scalar curvature is',
        abs(result.lhs - result.rhs),
        _relative_tolerance(config, result.lhs, result.rhs), 1))
    return _emit_checks(config, report)


def _penrose(config):
    """Run the ``penrose`` command."""
    entry = _entry(config)
    result = penrose_check(entry, config.radii)
    report = VerificationReport(entry.name, dict(
        result._asdict(), warnings=list(result.warnings)))
    report.add(CheckRecord(
        'penrose', 'the mass of the manifold then satisfies',
        abs(result.mass - result.bound),
        config.tolerances['mass'] * max(abs(result.mass), abs(result.bound)),
        1))
    return _emit_checks(config, report)


def _add_output_args(parser):
    """Add the output format and path arguments to a parser."""
    parser.add_argument(
        '--format',
        choices=('csv', 'json'),
        help='output format (default json)')
    parser.add_argument(
        '--output',
        metavar='PATH',
        help='write to PATH instead of stdout')


def _add_metric_args(parser, radii=False, samples=False):
    """Add the metric, metric parameter and tolerance arguments."""
    parser.add_argument(
        '--metric',
        metavar='NAME',
        help='catalog name of the metric')
    group = parser.add_argument_group('metric parameters')
    group.add_argument('--m', type=float, metavar='MASS',
                       help='mass of the Schwarzschild slice')
    group.add_argument('--a', type=float, metavar='SCALE',
                       help='Eguchi-Hanson scale')
    group.add_argument('--c', type=float, metavar='BURNS_PARAM',
                       help='Burns parameter')
    group.add_argument('--mu', type=float, metavar='MU',
                       help='mass parameter of the 4d Schwarzschild slice')
    group.add_argument('--dim', type=int, metavar='N',
                       help='real dimension')
    group.add_argument('--complex-dim', type=int, metavar='M',
                       help='complex dimension')
    group.add_argument('--structure-seed', type=int, metavar='SEED',
                       help='seed of random almost-Kahler structures')
    tolerances = parser.add_argument_group('tolerances')
    tolerances.add_argument('--tol-pointwise', type=float, metavar='TOL',
                            help='pointwise identities (default 1e-8)')
    tolerances.add_argument('--tol-spinor', type=float, metavar='TOL',
                            help='spinor and derived identities '
                                 '(default 1e-6)')
    tolerances.add_argument('--tol-mass', type=float, metavar='TOL',
                            help='relative tolerance of integrated '
                                 'comparisons (default 0.01)')
    if samples:
        parser.add_argument('--samples', type=int, metavar='N',
                            help='number of sample points (default 20)')
        parser.add_argument('--seed', type=int, metavar='S',
                            help='seed of the sample points (default 0)')
    if radii:
        parser.add_argument('--radii', metavar='R1,R2,...',
                            help='strictly increasing radii')
        parser.add_argument('--degree', type=int, metavar='D',
                            help='sphere quadrature degree (default 12)')
    parser.add_argument('--timing', action='store_const', const=True,
                        help='record wall times in reports')
    _add_output_args(parser)


def get_parsed_args(args=None):
    """Get the parsed command line arguments.

    :param args: The command-line args to parse; if omitted,
        :data:`sys.argv <python:sys.argv>` will be used.
    :type args: List[str], optional

    :return: The :class:`Namespace <python:argparse.Namespace>` object holding
        the parsed args.
    :rtype: :class:`argparse.Namespace <python:argparse.Namespace>`

    """
    parser = ArgumentParser(
        prog='akmass',
        description=(
            'akmass checks the almost-Kahler mass formula for ALE manifolds\n'
            'and the curvature identities behind it on explicit metrics.\n'
            'Please use `akmass <command> --help` for more information.'),
        formatter_class=RawTextHelpFormatter)

    parser.add_argument(
        '--version',
        action='version',
        version='v'+str(__version__),
        help='program version')
    parser.add_argument(
        '-v', '--verbose',
        action='count',
        default=0,
        help='log progress (-v) or debugging detail (-vv) to stderr')
    parser.add_argument(
        '--config',
        metavar='PATH',
        help='TOML file with [run] and [tolerances] tables; flags\n'
             'override its values')

    sub_parsers = parser.add_subparsers(help='the akmass command to run')

    # catalog sub-parser
    parser_catalog = sub_parsers.add_parser(
        'catalog',
        help='inspect the catalog of metrics')
    catalog_commands = parser_catalog.add_subparsers()
    parser_list = catalog_commands.add_parser(
        'list',
        help='list the built-in catalog entries')
    _add_output_args(parser_list)
    parser_list.set_defaults(func=_catalog_list, command='catalog list')

    # curvature sub-parser
    parser_curvature = sub_parsers.add_parser(
        'curvature',
        help='print the curvature of a metric at a point')
    _add_metric_args(parser_curvature)
    parser_curvature.add_argument(
        '--point',
        metavar='X1,..,XN',
        help='coordinates of the point')
    parser_curvature.set_defaults(func=_curvature, command='curvature')

    # verify sub-parser
    parser_verify = sub_parsers.add_parser(
        'verify',
        help='run a residual suite on a metric')
    verify_commands = parser_verify.add_subparsers()
    parser_identities = verify_commands.add_parser(
        'identities',
        help='almost-Kahler and spin^c identities')
    _add_metric_args(parser_identities, samples=True)
    parser_identities.set_defaults(func=_verify_identities,
                                   command='verify identities')
    parser_curv = verify_commands.add_parser(
        'curvature',
        help='Riemann symmetries, Bianchi identities and catalog flags')
    _add_metric_args(parser_curv, samples=True)
    parser_curv.set_defaults(func=_verify_curvature,
                             command='verify curvature')

    # mass sub-parser
    parser_mass = sub_parsers.add_parser(
        'mass',
        help='the ADM mass on coordinate spheres and its limit')
    _add_metric_args(parser_mass, radii=True)
    parser_mass.add_argument(
        '--method',
        choices=('adm', 'theta'),
        help='boundary integrand (default adm)')
    parser_mass.set_defaults(func=_mass, command='mass')

    # mass-formula sub-parser
    parser_formula = sub_parsers.add_parser(
        'mass-formula',
        help='compare the mass with its bulk and topological terms')
    _add_metric_args(parser_formula, radii=True)
    parser_formula.add_argument(
        '--rmax',
        type=float,
        metavar='R',
        help='cutoff radius of the bulk integral')
    parser_formula.set_defaults(func=_mass_formula, command='mass-formula')

    # blair sub-parser
    parser_blair = sub_parsers.add_parser(
        'blair',
        help='total Hermitian scalar curvature of a compact metric')
    _add_metric_args(parser_blair, radii=True)
    parser_blair.set_defaults(func=_blair, command='blair')

    # penrose sub-parser
    parser_penrose = sub_parsers.add_parser(
        'penrose',
        help='mass against the area of the exceptional curve')
    _add_metric_args(parser_penrose, radii=True)
    parser_penrose.set_defaults(func=_penrose, command='penrose')

    if args is None:
        args = sys.argv[1:]

    return parser.parse_args(args)


def run_cli(args=None):
    """The main routine to run the akmass command-line interface.

    :param args: The command-line arguments.
    :type args: List[str], optional

    :return: The exit code of the program: 0 when every check passes, 1
        when a check fails, 2 for usage and configuration errors and 3 for
        numerical, structural and I/O errors.
    :rtype: int

    """
    try:
        if args is None:
            args = sys.argv[1:]

        try:
            opts = get_parsed_args(args)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE
        configure_logging(opts.verbose)
        func = getattr(opts, 'func', None)
        if func is None:
            print_err('No command specified; use `akmass --help` for '
                      'options.')
            return EXIT_USAGE

        flags = {key: getattr(opts, key) for key in RUN_FLAGS
                 if hasattr(opts, key)}
        config = RunConfig.from_sources(opts.command, flags, opts.config)
        logger.info('Running %r', config)
        return func(config)
    except (ArgumentError, ConfigError) as e:
        print_err('Error! ', e.message, sep='')
        return EXIT_USAGE
    except (NumericalError, StructureError, PreconditionError,
            StrategyError) as e:
        print_err('Error! ', e.message, sep='')
        return EXIT_NUMERICAL
    except OSError as e:
        print_err('Error! ', e, sep='')
        return EXIT_NUMERICAL
    except Exception as e:
        print_err('Received unexpected error; re-raising it!')
        raise e


main = run_cli
