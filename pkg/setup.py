#!/usr/bin/env python

# Copyright (C) 2026. pmbisect developers
# See LICENSE for full GPLv2 license.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.

"""
======================================================================
 pmbisect: Poincare-Miranda bisection for nonlinear systems
======================================================================

``pmbisect`` locates roots of square nonlinear systems F(x) = 0 inside a
box by repeated bisection, keeping only subboxes on which the
Poincare-Miranda sign condition is certified with interval and affine
arithmetic.

The package may be used in place or installed in your Python
site-packages directory by running this script.

Python dependencies:

    numpy           https://pypi.python.org/pypi/numpy
    openpyxl        https://pypi.python.org/pypi/openpyxl
    six             https://pypi.python.org/pypi/six


See README.rst for more information.

"""

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

setup(
    name='pmbisect',
    version='0.1.0',
    license='GPLv2',
    author='pmbisect developers',
    description='Verified root finding by Poincare-Miranda bisection',
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU General Public License v2 (GPLv2)'
    ],
    packages=['pmbisect'],
    install_requires=['numpy', 'openpyxl', 'six'],
    test_suite='tests',
    scripts=['scripts/pmbisectcli']
)
