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
pmbisect.ioutil
~~~~~~~~~~~~~~~

Output files for a solve: the iteration trace in .csv format, the box
geometry as JSON lines (one box per line, ready for plotting), and an .xlsx
workbook with a summary sheet and the convergence table.

Floats are written with 17 significant digits so they read back bit-exact.

"""
import json

import openpyxl

from .expr import formatExpr


def fmtFloat(x):
    return '%.17g' % x


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ CSV trace ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #
def traceHeader(n):
    """Column names of the trace for an n-dimensional system::

        k,lo_1,hi_1,...,lo_n,hi_n,c_1,...,c_n,residual,chosen_subcube,
        preconditioned

    """
    cols = ['k']
    for i in range(1, n + 1):
        cols.extend(['lo_%d' % i, 'hi_%d' % i])
    cols.extend('c_%d' % i for i in range(1, n + 1))
    cols.extend(['residual', 'chosen_subcube', 'preconditioned'])
    return cols


def traceRow(rec):
    row = [str(rec.k)]
    for d in rec.box:
        row.extend([fmtFloat(d.lo), fmtFloat(d.hi)])
    row.extend(fmtFloat(x) for x in rec.center)
    row.append(fmtFloat(rec.residual))
    row.append('' if rec.chosen_subcube is None else str(rec.chosen_subcube))
    row.append('1' if rec.preconditioned else '0')
    return row


def writeTraceCsv(trace_fp, trace):
    """Write one row per ``IterationRecord`` to ``trace_fp``.

    Args:
        trace_fp (str)      : output path
        trace (list)        : ``IterationRecord`` objects from a solve

    Returns:
        ``None``

    """
    n = len(trace[0].box) if trace else 0
    with open(trace_fp, 'w') as fd_out:
        fd_out.write(','.join(traceHeader(n)) + '\n')
        for rec in trace:
            fd_out.write(','.join(traceRow(rec)) + '\n')


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Box geometry ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #
def writeBoxGeometry(boxes_fp, trace):
    """Write ``{"k": k, "box": [[lo, hi], ...]}`` per line, for the box
    whose center is c_k."""
    with open(boxes_fp, 'w') as fd_out:
        for rec in trace:
            fd_out.write(json.dumps({
                'k': rec.k,
                'box': [[d.lo, d.hi] for d in rec.box]
            }) + '\n')


def readBoxGeometry(boxes_fp):
    with open(boxes_fp) as fd:
        return [json.loads(line) for line in fd if line.strip()]


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ .xlsx workbook ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #
def writeTraceXlsx(xlsx_fp, result, run_config=None):
    """Write a "summary" and a "trace" sheet to ``xlsx_fp``.

    The trace sheet has one row per iteration: k, the center coordinates,
    the residual, the box width, the chosen subcube and whether the system
    was preconditioned.
    """
    wb = openpyxl.Workbook()
    ws = wb.active
    ws.title = 'summary'
    if run_config is not None:
        ws.append(['config', run_config.name])
        for i, src in enumerate(run_config.system.funcs):
            ws.append(['f_%d' % (i + 1), formatExpr(src)])
        ws.append(['delta', run_config.params['delta']])
        ws.append(['subdivisions', run_config.params['subdivisions']])
    ws.append(['status', result.status])
    if result.root is not None:
        for i, x in enumerate(result.root):
            ws.append(['root_%d' % (i + 1), x])
        ws.append(['residual', result.residual])
    ws.append(['iterations', result.iterations])
    ws.append(['preconditionings', result.preconditionings])

    ws = wb.create_sheet('trace')
    n = len(result.trace[0].box) if result.trace else 0
    ws.append(['k'] + ['c_%d' % (i + 1) for i in range(n)] +
              ['residual', 'width', 'chosen_subcube', 'preconditioned'])
    for rec in result.trace:
        ws.append([rec.k] + list(rec.center) +
                  [rec.residual, rec.box.width(), rec.chosen_subcube,
                   bool(rec.preconditioned)])
    wb.save(xlsx_fp)
