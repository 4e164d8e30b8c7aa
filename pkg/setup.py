from __future__ import print_function

import codecs
import os
import sys

try:
    from setuptools import find_packages, setup
except ImportError:
    print('setuptools is required for akmass installation.\n'
          'You can install it using pip.', file=sys.stderr)
    sys.exit(1)

# directories/files
here = os.path.abspath(os.path.dirname(__file__))
akmass_dir = os.path.join(here, 'akmass')
version_file = os.path.join(akmass_dir, 'version.py')
readme_file = os.path.join(here, 'README.rst')

# setup kwarg values
akmass_pypi_name = 'akmass'
akmass_description = ('Numerical checks of the mass formula for ALE '
                      'almost-Kahler manifolds')
akmass_license = 'MIT'
akmass_author = 'The akmass developers'
akmass_install_requires = [
    'numpy>=1.22',
    'scipy>=1.8',
    'tomli>=1.1; python_version < "3.11"',
]

with codecs.open(version_file, encoding='utf-8') as f:
    exec(f.read())  # loads __version__ and __version_info__
    akmass_version = __version__  # noqa

with codecs.open(readme_file, encoding='utf-8') as f:
    akmass_long_description = f.read()

akmass_entry_points = {
    'console_scripts': ['akmass = akmass.__main__:main']
}

akmass_classifiers = [
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Operating System :: OS Independent',
    'Programming Language :: Python :: Implementation :: CPython',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'Programming Language :: Python :: 3.12',
    'Topic :: Scientific/Engineering :: Mathematics'
]

setup(
    name=akmass_pypi_name,
    version=akmass_version,
    description=akmass_description,
    long_description=akmass_long_description,
    author=akmass_author,
    license=akmass_license,
    python_requires='>=3.8',
    install_requires=akmass_install_requires,
    packages=find_packages(exclude=['tests', '*.tests', '*.tests.*']),
    entry_points=akmass_entry_points,
    classifiers=akmass_classifiers
)
