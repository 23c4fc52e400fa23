#!/usr/bin/env python
# Copyright 2026 The eisenstein Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Setup script for eisenstein."""

try:
  from setuptools import setup
except ImportError:
  from distutils.core import setup

setup(name='eisenstein',
      version='1.0.0',
      description='Eisenstein triples, the Romik digit system and the Lagrange spectrum below 4/sqrt(3)',
      license='Apache',
      install_requires=[
        'six',
        'mpmath',
      ],
      package_dir={'':'src'},
      packages=[
        'greplin',
        'greplin.eisenstein',
      ],
      namespace_packages=[
        'greplin',
      ],
      entry_points={
        'console_scripts': [
          'eisenstein = greplin.eisenstein.cli:main',
        ],
      },
      zip_safe = True,
      classifiers=[
          'Programming Language :: Python',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
