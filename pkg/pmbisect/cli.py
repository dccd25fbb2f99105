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
pmbisect.cli
~~~~~~~~~~~~

Command line interface (installed as ``pmbisectcli``)::

    pmbisectcli solve configs/f2.json --delta 1e-12 --trace f2.csv
    pmbisectcli check-box configs/f4.json
    pmbisectcli eval-box configs/example1.json --component 2 \\
        --extension affine -N 3

Exit codes: 0 converged (or PM holds for ``check-box``), 1 config/usage
error, 2 bad initial box (or PM fails), 3 stalled, 4 iteration cap.

"""
from __future__ import print_function

import argparse
import logging
import sys

from .expr import formatExpr
from .extension import EXTENSIONS
from .interval import DomainError
from .pipeline import (ConfigError, checkInitialBox, evalBox, loadRunConfig,
                       runSolver)
from .solver import DERIVATIVE_MODES, NORMS

EXIT_CODES = {
    'converged': 0,
    'bad_initial_box': 2,
    'stalled': 3,
    'iteration_cap': 4,
}
EXIT_CONFIG_ERROR = 1


def fmtHuman(x):
    return '%.15g' % x


def formatResult(result):
    """Human-readable result record, one ``key: value`` per line."""
    lines = ['status: %s' % result.status]
    if result.root is not None:
        lines.append('root: ' + ' '.join(fmtHuman(x) for x in result.root))
        lines.append('residual: %s' % fmtHuman(result.residual))
    lines.append('iterations: %d' % result.iterations)
    lines.append('preconditionings: %d' % result.preconditionings)
    return '\n'.join(lines)


def formatSignGrid(names, grid):
    lines = []
    for i, (low, high) in enumerate(grid):
        lines.append('f_%d  %s=lo: %-8s %s=hi: %-8s' % (
            i + 1, names[i], _signName(low), names[i], _signName(high)))
    return '\n'.join(lines)


def _signName(sign):
    return '-' if sign is None else sign.name


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Subcommands ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def cmdSolve(args):
    overrides = {
        'delta': args.delta,
        'subdivisions': args.subdivisions,
        'norm': args.norm,
        'derivative_mode': args.derivative_mode,
        'trace': args.trace,
        'boxes': args.boxes,
        'xlsx': args.xlsx,
    }
    run_config = loadRunConfig(args.config, overrides)
    result = runSolver(run_config, verbose=not args.quiet)
    print(formatResult(result))
    return EXIT_CODES[result.status]


def cmdCheckBox(args):
    run_config = loadRunConfig(args.config)
    holds, grid = checkInitialBox(run_config)
    print('box: %s' % (run_config.box,))
    print(formatSignGrid(run_config.system.names, grid))
    print('PM condition %s' % ('holds' if holds else 'fails'))
    return 0 if holds else EXIT_CODES['bad_initial_box']


def cmdEvalBox(args):
    run_config = loadRunConfig(args.config)
    enclosure = evalBox(run_config, args.component - 1, args.extension,
                        args.N)
    f = run_config.system.funcs[args.component - 1]
    print('f_%d = %s' % (args.component, formatExpr(f)))
    print('[%s, %s]' % (repr(enclosure.lo), repr(enclosure.hi)))
    return 0


def buildParser():
    parser = argparse.ArgumentParser(
        prog='pmbisectcli',
        description='Poincare-Miranda bisection for nonlinear systems')
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='logging level for diagnostics (stderr)')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    solve_p = sub.add_parser('solve', help='solve the configured system')
    solve_p.add_argument('config', help='JSON run config')
    solve_p.add_argument('--delta', type=float,
                         help='residual tolerance')
    solve_p.add_argument('--subdivisions', '-N', type=int,
                         help='cells per face dimension in the sign tests')
    solve_p.add_argument('--norm', choices=sorted(NORMS),
                         help='residual norm')
    solve_p.add_argument('--derivative-mode', choices=DERIVATIVE_MODES,
                         help='derivative enclosure of the mean value form')
    solve_p.add_argument('--trace', help='write the iteration trace (.csv)')
    solve_p.add_argument('--boxes',
                         help='write the box geometry (JSON lines)')
    solve_p.add_argument('--xlsx', help='write an .xlsx workbook')
    solve_p.add_argument('--quiet', action='store_true',
                         help='no progress output')
    solve_p.set_defaults(func=cmdSolve)

    check_p = sub.add_parser('check-box',
                             help='test the PM condition on the initial box')
    check_p.add_argument('config', help='JSON run config')
    check_p.set_defaults(func=cmdCheckBox)

    eval_p = sub.add_parser('eval-box',
                            help='enclose one component over the initial '
                                 'box')
    eval_p.add_argument('config', help='JSON run config')
    eval_p.add_argument('--component', type=int, required=True,
                        help='component number, starting at 1')
    eval_p.add_argument('--extension', choices=EXTENSIONS, required=True)
    eval_p.add_argument('-N', type=int, default=1,
                        help='cells per dimension (default 1)')
    eval_p.set_defaults(func=cmdEvalBox)
    return parser


def main(argv=None):
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # usage errors exit with 1; 2 means bad_initial_box
        return EXIT_CONFIG_ERROR if exc.code else 0
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except ConfigError as exc:
        print('config error: %s' % exc, file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except DomainError as exc:
        print('evaluation error: %s' % exc, file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == '__main__':
    sys.exit(main())
