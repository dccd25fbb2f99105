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

``pmbisect`` finds a zero of a continuous map F: R^n -> R^n inside a box by
repeated bisection. Every accepted box is certified, in outward-rounded
interval and affine arithmetic, to satisfy the sign condition of the
Poincare-Miranda theorem, so it is guaranteed to contain a root.

Python dependencies:

    numpy           https://pypi.python.org/pypi/numpy
    openpyxl        https://pypi.python.org/pypi/openpyxl
    six             https://pypi.python.org/pypi/six


See README.rst for more information.

"""

from . import affine, expr, extension, interval, ioutil, pipeline, \
              rounding, solver

from .expr import parse, parseSystem
from .interval import Box, Interval
from .pipeline import loadRunConfig, runSolver
from .solver import SolverConfig, solve

__version__ = '0.1.0'

__all__ = ['affine', 'expr', 'extension', 'interval', 'ioutil', 'pipeline',
           'rounding', 'solver', 'parse', 'parseSystem', 'Box', 'Interval',
           'loadRunConfig', 'runSolver', 'SolverConfig', 'solve']
