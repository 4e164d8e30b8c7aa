#!/usr/bin/env python

"""Project tasks for akmass: tests, lint and docs."""

from __future__ import print_function

import doctest
import importlib
import os
import pkgutil
import platform
import subprocess
import sys
import unittest

from argparse import ArgumentParser, RawTextHelpFormatter

import numpy
import scipy

import akmass


HERE = os.path.dirname(os.path.abspath(__file__))
DOCS_DIR = os.path.join(HERE, 'docs')
TESTS_DIR = os.path.join(HERE, 'akmass', 'tests')

DOCTEST_FILES = (
    os.path.join(DOCS_DIR, 'user_guide', 'catalog_basics.rst'),
    os.path.join(DOCS_DIR, 'user_guide', 'mass_basics.rst'),
    os.path.join(HERE, 'README.rst'),
)

DOCTEST_FLAGS = doctest.IGNORE_EXCEPTION_DETAIL | doctest.ELLIPSIS


class TaskFailureError(Exception):
    """A task finished but did not succeed."""


def _report_environment():
    """Print the interpreter and numerical stack the tests run against."""
    print()
    print('Environment')
    print('-----------')
    print('Python:', platform.python_implementation(),
          platform.python_version(), 'on', platform.system())
    print('numpy:', numpy.__version__, ' scipy:', scipy.__version__)
    print('akmass:', akmass.__version__, ' threads:', akmass.worker_count())
    print()


def _call(args, cwd=HERE):
    """Run ``args`` and raise if the process fails."""
    if subprocess.call(args, cwd=cwd):
        print('Failed:', ' '.join(args), file=sys.stderr)
        raise TaskFailureError


def iter_doctest_modules():
    """Yield every non-test module of the package whose source holds a
    doctest prompt."""
    for info in pkgutil.walk_packages(akmass.__path__, 'akmass.'):
        if '.tests' in info.name:
            continue
        module = importlib.import_module(info.name)
        path = getattr(module, '__file__', None)
        if path is None:
            continue
        with open(path, encoding='utf-8') as f:
            if '>>>' in f.read():
                yield module


def test():
    """Run the unit tests and every doctest."""
    _report_environment()
    suite = unittest.defaultTestLoader.discover(
        TESTS_DIR, pattern='test_*.py', top_level_dir=HERE)
    for module in iter_doctest_modules():
        suite.addTests(doctest.DocTestSuite(module, optionflags=DOCTEST_FLAGS))
    for path in DOCTEST_FILES:
        suite.addTests(doctest.DocFileSuite(
            path, module_relative=False, optionflags=DOCTEST_FLAGS))
    if not unittest.TextTestRunner().run(suite).wasSuccessful():
        raise TaskFailureError


def lint():
    """Run flake8 over the package and this script."""
    _call([sys.executable, '-m', 'flake8', 'akmass', 'aktasks.py'])


def build_docs():
    """Build the HTML documentation into ``docs/_build/html``."""
    _call([sys.executable, '-m', 'sphinx', '-b', 'html', '.',
           os.path.join('_build', 'html')], cwd=DOCS_DIR)


TASKS = {
    'build-docs': build_docs,
    'lint': lint,
    'test': test,
}


def get_parsed_args(args=None):
    """Get the parsed command line arguments.

    :param args: The command-line args to parse; if omitted,
        :data:`sys.argv <python:sys.argv>` will be used.
    :type args: List[:class:`str <python:str>`], optional

    :rtype: :class:`argparse.Namespace <python:argparse.Namespace>`

    """
    parser = ArgumentParser(
        prog='aktasks.py',
        description='Run an akmass project task',
        formatter_class=RawTextHelpFormatter)
    parser.add_argument(
        'task',
        metavar='TASK',
        choices=sorted(TASKS),
        help='one of: ' + ', '.join(sorted(TASKS)))
    return parser.parse_args(sys.argv[1:] if args is None else args)


def main(args=None):
    """Run the requested task and return the exit code."""
    opts = get_parsed_args(args)
    try:
        TASKS[opts.task]()
    except TaskFailureError:
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
