#! /usr/bin/env python

import os
from setuptools import setup

# Deduce the version from the __init__.py file:
version = None
with open(os.path.join(os.path.dirname(__file__), 'nflab', '__init__.py'), 'r') as fid:
    for line in (line.strip() for line in fid):
        if line.startswith('__version__'):
            version = line.split('=')[1].strip().strip('\'')
            break
if version is None: raise ValueError('No version found in nflab/__init__.py!')

setup(
    name='nflab',
    version=version,
    description='Toolbox for n-filters on finite semilattices, distributive lattices, and Boolean '
                'algebras',
    keywords='lattice semilattice boolean-algebra filter horn-clause universal-algebra logic',
    long_description='''
                     See the README.md file for a description of this package and of the nflab
                     command.
                     ''',
    license='GPLv3',
    classifiers=['Development Status :: 3 - Alpha',
                 'Intended Audience :: Science/Research',
                 'Intended Audience :: Developers',
                 'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
                 'Programming Language :: Python :: 3',
                 'Programming Language :: Python :: 3.6',
                 'Topic :: Software Development :: Libraries :: Python Modules',
                 'Topic :: Scientific/Engineering :: Mathematics',
                 'Operating System :: POSIX',
                 'Operating System :: Unix',
                 'Operating System :: MacOS',
                 'Operating System :: Microsoft :: Windows'],
    packages=['nflab',
              'nflab.util',
              'nflab.order',
              'nflab.filters',
              'nflab.structures',
              'nflab.horn',
              'nflab.classes',
              'nflab.io',
              'nflab.commands',
              'nflab.test'],
    entry_points={'console_scripts': ['nflab = nflab.__main__:run']},
    install_requires=['numpy>=1.5',
                      'pyrsistent>=0.11',
                      'pimms>=0.3.3',
                      'six>=1.10',
                      'pydotplus>=2.0'],
    extras_require={
        'test': ['hypothesis>=3.0', 'pytest>=3.0'],
        'all':  ['hypothesis>=3.0', 'pytest>=3.0']})
