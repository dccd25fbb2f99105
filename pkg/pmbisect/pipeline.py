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
pmbisect.pipeline
~~~~~~~~~~~~~~~~~

Run configurations: loading and validating a JSON config, then running the
solver (or one of the diagnostic evaluations) on it and writing the
requested output files.

A config looks like::

    {
        "variables": ["x", "y"],
        "functions": ["y + x - 1", "y - exp(-(x^2))"],
        "jacobian": [["1", "1"], ["2*x*exp(-(x^2))", "1"]],
        "box": [[0, 1], [0, 1]],
        "delta": 1e-15,
        "outputs": {"trace": "example1_trace.csv"}
    }

Only ``variables``, ``functions`` and ``box`` are required.

"""
from __future__ import print_function

import copy
import json
import math
import numbers
import os

from collections import namedtuple

import six

from . import ioutil
from .expr import ParseError, SystemDef, checkNames, parse
from .extension import EXTENSIONS, enclose
from .interval import Box, Interval
from .solver import (DERIVATIVE_MODES, NORMS, SolverConfig, identitySystem,
                     pmCheck, solve)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~#
# Default solver parameters.
#
# This dictionary is updated with the values found in a config file and then
# with command line overrides, so neither needs to be exhaustive.
# ~~~ #

DEFAULT_PARAMS = {
    # Accept c_k as the root once ||F(c_k)|| <= delta
    'delta': 1e-15,
    # Cells per free face dimension in the refined sign tests
    'subdivisions': 3,
    # Residual norm: 'two', 'one' or 'inf'
    'norm': 'two',
    # Stop after this many consecutive scans without an accepted subcube
    'max_consecutive_failures': 3,
    # Safety cap on the number of iterations
    'max_iterations': 200,
    # Derivative enclosure used by the mean value form: 'ad' or 'paper_fd'
    'derivative_mode': 'ad',
}

OUTPUT_KEYS = ('trace', 'boxes', 'xlsx')

RunConfig = namedtuple('RunConfig',
        ['name',            # config basename, used in reports
         'system',          # ``SystemDef``
         'box',             # initial ``Box``
         'params',          # merged copy of DEFAULT_PARAMS
         'outputs'          # dict of output paths (values may be None)
         ])


class ConfigError(ValueError):
    """Invalid run configuration; the message names the offending field."""


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Validation ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _isNumber(value):
    return (isinstance(value, numbers.Real) and
            not isinstance(value, bool) and math.isfinite(value))


def _stringList(doc, key, length=None):
    value = doc.get(key)
    if not isinstance(value, list) or not value:
        raise ConfigError('%s: expected a non-empty list of strings' % key)
    for i, item in enumerate(value):
        if not isinstance(item, six.string_types):
            raise ConfigError('%s[%d]: expected a string, got %r' %
                              (key, i, item))
    if length is not None and len(value) != length:
        raise ConfigError('%s: expected %d entries (one per variable), got %d'
                          % (key, length, len(value)))
    return value


def _validateBox(rows, n):
    if not isinstance(rows, list):
        raise ConfigError('box: expected a list of [lo, hi] rows')
    if len(rows) != n:
        raise ConfigError('box: expected %d rows (one per variable), got %d'
                          % (n, len(rows)))
    dims = []
    for i, row in enumerate(rows):
        if (not isinstance(row, list) or len(row) != 2 or
                not all(_isNumber(v) for v in row)):
            raise ConfigError('box[%d]: expected [lo, hi] with finite '
                              'numbers, got %r' % (i, row))
        if row[0] >= row[1]:
            raise ConfigError('box[%d]: lo must be < hi, got %r' % (i, row))
        dims.append(Interval(row[0], row[1]))
    return Box(dims)


def validateParams(params):
    """Check merged solver parameters; raises ``ConfigError``."""
    delta = params['delta']
    if not _isNumber(delta) or delta <= 0:
        raise ConfigError('delta: expected a positive number, got %r' %
                          (delta,))
    for key in ('subdivisions', 'max_consecutive_failures',
                'max_iterations'):
        value = params[key]
        if (not isinstance(value, six.integer_types) or
                isinstance(value, bool) or value < 1):
            raise ConfigError('%s: expected an integer >= 1, got %r' %
                              (key, value))
    if params['norm'] not in NORMS:
        raise ConfigError('norm: expected one of %s, got %r' %
                          (', '.join(sorted(NORMS)), params['norm']))
    if params['derivative_mode'] not in DERIVATIVE_MODES:
        raise ConfigError('derivative_mode: expected one of %s, got %r' %
                          (', '.join(DERIVATIVE_MODES),
                           params['derivative_mode']))


def _parseField(field, source, names):
    try:
        return parse(source, names)
    except ParseError as exc:
        raise ConfigError('%s: %s' % (field, exc))


def _buildSystem(doc, names):
    try:
        names = checkNames(names)
    except ValueError as exc:
        raise ConfigError('variables: %s' % exc)
    n = len(names)
    functions = _stringList(doc, 'functions', n)
    funcs = tuple(_parseField('functions[%d]' % i, src, names)
                  for i, src in enumerate(functions))
    jacobian = doc.get('jacobian')
    if jacobian is None:
        return SystemDef(names, funcs, None)
    if not isinstance(jacobian, list) or len(jacobian) != n:
        raise ConfigError('jacobian: expected %d rows' % n)
    jac = []
    for i, row in enumerate(jacobian):
        if (not isinstance(row, list) or len(row) != n or not all(
                isinstance(s, six.string_types) for s in row)):
            raise ConfigError('jacobian[%d]: expected %d strings' % (i, n))
        jac.append(tuple(_parseField('jacobian[%d][%d]' % (i, j), src, names)
                         for j, src in enumerate(row)))
    return SystemDef(names, funcs, tuple(jac))


def buildRunConfig(doc, name='config', overrides=None):
    """Validate a config document (a dict) and build a ``RunConfig``.

    Args:
        doc (dict)                  : parsed config document
        name (str, optional)        : name used in reports
        overrides (dict, optional)  : values taking precedence over ``doc``
                                      (``None`` values are ignored)

    Returns:
        ``RunConfig``

    Raises:
        ``ConfigError``

    """
    if not isinstance(doc, dict):
        raise ConfigError('config: expected a JSON object at the top level')
    overrides = dict((k, v) for k, v in (overrides or {}).items()
                     if v is not None)
    names = _stringList(doc, 'variables')
    system = _buildSystem(doc, names)
    if 'box' not in doc:
        raise ConfigError('box: missing')
    box = _validateBox(doc['box'], len(names))

    params = copy.deepcopy(DEFAULT_PARAMS)
    for key in DEFAULT_PARAMS:
        if key in doc:
            params[key] = doc[key]
        if key in overrides:
            params[key] = overrides[key]
    validateParams(params)

    outputs = dict.fromkeys(OUTPUT_KEYS)
    doc_outputs = doc.get('outputs') or {}
    if not isinstance(doc_outputs, dict):
        raise ConfigError('outputs: expected an object')
    for key in OUTPUT_KEYS:
        value = overrides.get(key, doc_outputs.get(key))
        if value is not None and not isinstance(value, six.string_types):
            raise ConfigError('outputs.%s: expected a path string' % key)
        outputs[key] = value
    return RunConfig(name, system, box, params, outputs)


def loadRunConfig(config_fp, overrides=None):
    """Read and validate the JSON run config at ``config_fp``."""
    try:
        with open(config_fp) as fd:
            doc = json.load(fd)
    except (IOError, OSError) as exc:
        raise ConfigError('config: cannot read %s: %s' % (config_fp, exc))
    except ValueError as exc:
        raise ConfigError('config: %s is not valid JSON: %s' %
                          (config_fp, exc))
    name = os.path.splitext(os.path.basename(config_fp))[0]
    return buildRunConfig(doc, name, overrides)


def solverConfig(params):
    return SolverConfig(delta=float(params['delta']),
                        N=params['subdivisions'],
                        norm=params['norm'],
                        max_consecutive_failures=params[
                            'max_consecutive_failures'],
                        max_iterations=params['max_iterations'],
                        derivative_mode=params['derivative_mode'])


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Running ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def runSolver(run_config, verbose=False):
    """Solve the configured system and write the requested output files.

    Returns:
        ``SolveResult``

    """
    if verbose:
        print('Solving %s: %d equations on %s (delta=%g, N=%d)' % (
              run_config.name, len(run_config.system.funcs), run_config.box,
              run_config.params['delta'], run_config.params['subdivisions']))
    result = solve(run_config.system, run_config.box,
                   solverConfig(run_config.params), verbose=verbose)
    outputs = run_config.outputs
    if outputs.get('trace'):
        ioutil.writeTraceCsv(outputs['trace'], result.trace)
        if verbose:
            print('Wrote trace to %s' % outputs['trace'])
    if outputs.get('boxes'):
        ioutil.writeBoxGeometry(outputs['boxes'], result.trace)
        if verbose:
            print('Wrote box geometry to %s' % outputs['boxes'])
    if outputs.get('xlsx'):
        ioutil.writeTraceXlsx(outputs['xlsx'], result, run_config)
        if verbose:
            print('Wrote workbook to %s' % outputs['xlsx'])
    return result


def checkInitialBox(run_config):
    """Full PM sign grid of the configured system on its initial box."""
    params = run_config.params
    return pmCheck(identitySystem(run_config.system), run_config.box,
                   params['subdivisions'], params['derivative_mode'],
                   exhaustive=True)


def evalBox(run_config, component, extension, N=1):
    """Enclosure of one component (0-based) over the initial box."""
    funcs = run_config.system.funcs
    if not 0 <= component < len(funcs):
        raise ConfigError('component: expected 1..%d, got %d' %
                          (len(funcs), component + 1))
    if extension not in EXTENSIONS:
        raise ConfigError('extension: expected one of %s, got %r' %
                          (', '.join(EXTENSIONS), extension))
    return enclose(funcs[component], run_config.box, extension, N,
                   run_config.params['derivative_mode'])
