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
pmbisect.solver
~~~~~~~~~~~~~~~

Poincare-Miranda bisection. Starting from a box on which every component
f_i has certified opposite signs on the faces x_i = lo and x_i = hi, the box
is split into 2**n congruent subcubes and the first subcube on which the sign
condition can be certified again replaces it. When no subcube passes, the
system is preconditioned with the inverse point Jacobian at the current
center (G = DF(c)^-1 F, which has the same roots) and the scan is repeated.

The loop stops when the residual ||F(c_k)|| at the box center drops to the
tolerance, when it runs out of iterations, or when too many consecutive
scans fail.

"""
from __future__ import print_function

import logging
import math
import sys

from collections import namedtuple
from enum import IntEnum

import numpy as np

from .expr import evaluateSystem, jacobianAt, scaledSum
from .extension import affineRefinement, meanValueRefinement
from .interval import Box, DomainError, Interval, boxCenter

logger = logging.getLogger(__name__)


class SignResult(IntEnum):
    """Certified sign of a component on a face.

    ``ZERO`` is returned when the enclosure is exactly [0, 0]: the component
    vanishes on the whole face, which is compatible with either sign on the
    opposite face.
    """
    MINUS = -1
    UNKNOWN = 0
    PLUS = 1
    ZERO = 2


class SingularMatrixError(ArithmeticError):
    """The point Jacobian cannot be inverted reliably."""


Face = namedtuple('Face',
        ['box',             # the face as a degenerate n-dimensional box
         'fixed_dim',       # index of the degenerate dimension
         'side'             # 'low' or 'high'
         ])

PreconditionedSystem = namedtuple('PreconditionedSystem',
        ['base',            # the user's ``SystemDef``
         'M',               # n x n numpy multiplier, G = M F
         'center_used',     # point at which M was computed (None: identity)
         'funcs'            # expressions of G
         ])

SolverConfig = namedtuple('SolverConfig',
        ['delta',                       # residual tolerance
         'N',                           # cells per face dimension
         'norm',                        # 'inf', 'one' or 'two'
         'max_consecutive_failures',
         'max_iterations',
         'derivative_mode'              # 'ad' or 'paper_fd'
         ])
SolverConfig.__new__.__defaults__ = (1e-15, 3, 'two', 3, 200, 'ad')

IterationRecord = namedtuple('IterationRecord',
        ['k',               # 1-based iteration index
         'box',             # K_k
         'center',          # c_k
         'residual',        # ||F(c_k)||
         'chosen_subcube',  # index into refine2n(box), or None
         'preconditioned',  # True if G was rebuilt during this iteration
         'sign_results',    # tuple of pmCheck grids of the last scan
         'active_system'    # PreconditionedSystem in force afterwards
         ])

SolveResult = namedtuple('SolveResult',
        ['status',          # converged, bad_initial_box, stalled,
                            # iteration_cap
         'root',            # final center, or None
         'residual',        # NaN when F cannot be evaluated at the root
         'iterations',
         'preconditionings',
         'trace'            # list of IterationRecord
         ])

NORMS = {'two': 2, 'one': 1, 'inf': np.inf}
DERIVATIVE_MODES = ('ad', 'paper_fd')


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Sign certification ~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _sign(enclosure):
    if enclosure.lo == 0.0 and enclosure.hi == 0.0:
        return SignResult.ZERO
    if enclosure.lo >= 0.0:
        return SignResult.PLUS
    if enclosure.hi <= 0.0:
        return SignResult.MINUS
    return SignResult.UNKNOWN


def posneg(e, face_box, N, mode='ad'):
    """Certify the sign of ``e`` over ``face_box``.

    The refined mean value extension is tried first; if it does not settle
    the sign, the refined affine extension is tried, and in ``ad`` mode
    finally the mean value extension with affine slopes. Domain errors in
    any extension are logged and leave the sign uncertified.

    Args:
        e                       : component expression
        face_box (``Box``)      : domain of the face
        N (int)                 : cells per free dimension
        mode (str, optional)    : derivative mode for the mean value form

    Returns:
        ``SignResult``

    """
    tiers = [('mean value', lambda: meanValueRefinement(e, face_box, N,
                                                          mode)),
             ('affine', lambda: affineRefinement(e, face_box, N))]
    if mode == 'ad':
        tiers.append(('affine-slope mean value',
                      lambda: meanValueRefinement(e, face_box, N, mode,
                                                  affine_slopes=True)))
    for name, enclosure in tiers:
        try:
            sign = _sign(enclosure())
        except DomainError as exc:
            logger.debug('%s extension failed on %s: %s', name, face_box,
                         exc)
            continue
        if sign != SignResult.UNKNOWN:
            return sign
    return SignResult.UNKNOWN


def faceBox(box, dim, side):
    """``Face`` of ``box`` with dimension ``dim`` fixed at its low/high end.
    """
    d = box[dim]
    value = d.lo if side == 'low' else d.hi
    return Face(box.replace(dim, Interval(value)), dim, side)


_OPPOSITE = ((SignResult.PLUS, SignResult.MINUS),
             (SignResult.MINUS, SignResult.PLUS))


def signsOppose(low, high):
    """``f(x) * f(y) <= 0`` for x on the low face and y on the high face."""
    if SignResult.UNKNOWN in (low, high):
        return False
    return SignResult.ZERO in (low, high) or (low, high) in _OPPOSITE


def pmCheck(system, box, N, mode='ad', exhaustive=False):
    """Interval test of the Poincare-Miranda sign condition on ``box``.

    Args:
        system                  : ``PreconditionedSystem`` (or anything with
                                  a ``funcs`` sequence)
        box (``Box``)           : candidate box
        N (int)                 : cells per free face dimension
        mode (str, optional)    : derivative mode
        exhaustive (bool)       : evaluate every face even after a failure

    Returns:
        ``(holds, grid)`` where ``grid[i]`` is the ``(low, high)`` pair of
        ``SignResult`` for component i; faces that were not evaluated are
        ``None``

    """
    box = Box(box)
    n = len(system.funcs)
    if len(box) != n:
        raise ValueError('box has %d dimensions, system has %d' %
                         (len(box), n))
    grid = [(None, None)] * n
    holds = True
    for i, g in enumerate(system.funcs):
        low = posneg(g, faceBox(box, i, 'low').box, N, mode)
        if low == SignResult.UNKNOWN and not exhaustive:
            grid[i] = (low, None)
            return False, tuple(grid)
        high = posneg(g, faceBox(box, i, 'high').box, N, mode)
        grid[i] = (low, high)
        if not signsOppose(low, high):
            holds = False
            if not exhaustive:
                break
    return holds, tuple(grid)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Refinement ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def refine2n(box):
    """Split ``box`` at its center into 2**n subcubes.

    Subcube ``b`` takes the low half of dimension j when bit j of ``b`` is 0,
    so index 0 is the all-low corner and 2**n - 1 the all-high corner.
    """
    box = Box(box)
    halves = []
    for d in box:
        m = d.mid
        halves.append((Interval(d.lo, m), Interval(m, d.hi)))
    n = len(box)
    return [Box([halves[j][(b >> j) & 1] for j in range(n)])
            for b in range(2 ** n)]


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Preconditioning ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

SINGULAR_TOL = 1e-12


def invertMatrix(J):
    """Inverse by Gaussian elimination with partial pivoting.

    2 x 2 matrices use the closed form. The matrix counts as singular when
    a pivot falls below ``1e-12 * ||J||_inf``.

    Raises:
        ``SingularMatrixError``

    """
    J = np.array(J, dtype=float)
    n = J.shape[0]
    if J.shape != (n, n) or not np.all(np.isfinite(J)):
        raise SingularMatrixError('Jacobian is not a finite square matrix')
    tol = SINGULAR_TOL * np.linalg.norm(J, np.inf)
    if n == 2:
        (a, b), (c, d) = J
        # pivots of the partially pivoted elimination
        p1 = max(abs(a), abs(c))
        det = a * d - b * c
        if p1 <= tol or p1 == 0.0 or abs(det) / p1 <= tol:
            raise SingularMatrixError('singular Jacobian (det=%r)' % det)
        return np.array([[d, -b], [-c, a]]) / det
    a = J.copy()
    inv = np.eye(n)
    for k in range(n):
        p = int(np.argmax(np.abs(a[k:, k]))) + k
        if abs(a[p, k]) <= tol or a[p, k] == 0.0:
            raise SingularMatrixError('singular Jacobian (pivot %d = %r)' %
                                      (k, a[p, k]))
        if p != k:
            a[[k, p]] = a[[p, k]]
            inv[[k, p]] = inv[[p, k]]
        for i in range(k + 1, n):
            if a[i, k] != 0.0:
                lam = a[i, k] / a[k, k]
                a[i, k:] -= lam * a[k, k:]
                inv[i] -= lam * inv[k]
    for k in range(n - 1, -1, -1):
        inv[k] = (inv[k] - np.dot(a[k, k + 1:], inv[k + 1:])) / a[k, k]
    return inv


def identitySystem(base):
    n = len(base.funcs)
    return PreconditionedSystem(base, np.eye(n), None, tuple(base.funcs))


def precondition(system, c):
    """Rebuild ``G = DF(c)^-1 F`` from the base system at point ``c``.

    ``system`` may be a ``SystemDef`` or a ``PreconditionedSystem``; in the
    latter case its previous multiplier is discarded.

    Raises:
        ``SingularMatrixError`` if DF(c) is numerically singular

    """
    base = getattr(system, 'base', system)
    M = invertMatrix(jacobianAt(base, c))
    funcs = tuple(scaledSum(row, base.funcs) for row in M)
    logger.debug('preconditioned at %s', c)
    return PreconditionedSystem(base, M, tuple(c), funcs)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Error bounds ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _widthSum(K0):
    return float(sum(d.hi - d.lo for d in Box(K0)))


def errorBound(K0, k):
    """``sum_j w(K0_j) / 2**k``, the bound on ||c_k - r||_2."""
    if k < 0:
        raise ValueError('k must be >= 0')
    return math.ldexp(_widthSum(K0), -int(k))


def requiredIterations(K0, delta):
    """``ceil(log2(sum_j w(K0_j) / delta))`` (at least 0)."""
    if delta <= 0:
        raise ValueError('delta must be > 0')
    ratio = _widthSum(K0) / delta
    if ratio <= 1.0:
        return 0
    return int(math.ceil(np.log2(ratio)))


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Main loop ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def residualNorm(system, point, norm='two'):
    return float(np.linalg.norm(evaluateSystem(system, point), NORMS[norm]))


def checkConfig(cfg):
    if not cfg.delta > 0:
        raise ValueError('delta must be > 0, got %r' % (cfg.delta,))
    if int(cfg.N) < 1:
        raise ValueError('N must be >= 1, got %r' % (cfg.N,))
    if cfg.norm not in NORMS:
        raise ValueError('norm must be one of %s, got %r' %
                         (', '.join(sorted(NORMS)), cfg.norm))
    if int(cfg.max_consecutive_failures) < 1:
        raise ValueError('max_consecutive_failures must be >= 1')
    if int(cfg.max_iterations) < 1:
        raise ValueError('max_iterations must be >= 1')
    if cfg.derivative_mode not in DERIVATIVE_MODES:
        raise ValueError('derivative_mode must be one of %s, got %r' %
                         (', '.join(DERIVATIVE_MODES), cfg.derivative_mode))


def solve(system, K0, config=None, verbose=False):
    """Poincare-Miranda bisection for ``system`` starting from ``K0``.

    Args:
        system (``SystemDef``)          : the map F
        K0 (``Box``)                    : initial box
        config (``SolverConfig``, opt)  : solver settings
        verbose (bool, optional)        : write a progress line to stdout

    Returns:
        ``SolveResult``; ``iterations`` equals the number of box centers
        visited and ``trace`` holds one ``IterationRecord`` for each

    """
    cfg = config or SolverConfig()
    checkConfig(cfg)
    K0 = Box(K0)
    n = len(system.funcs)
    if len(K0) != n:
        raise ValueError('initial box has %d dimensions, system has %d' %
                         (len(K0), n))
    N = int(cfg.N)
    mode = cfg.derivative_mode
    active = identitySystem(system)

    holds, grid = pmCheck(active, K0, N, mode)
    if not holds:
        logger.warning('PM condition fails on the initial box %s: %s',
                       K0, grid)
        return SolveResult('bad_initial_box', None, None, 0, 0, [])

    box = K0
    trace = []
    k = 0
    failures = 0
    preconditionings = 0
    while True:
        k += 1
        c = boxCenter(box)
        try:
            residual = residualNorm(system, c, cfg.norm)
        except DomainError as exc:
            logger.warning('cannot evaluate F at the center %s: %s', c, exc)
            residual = float('nan')
            trace.append(IterationRecord(k, box, c, residual, None, False,
                                         (), active))
            status = 'stalled'
            break
        if verbose:
            sys.stdout.write('Iteration %d: residual %.3e, width %.3e\r' %
                             (k, residual, box.width()))
            sys.stdout.flush()

        def record(chosen, preconditioned, grids):
            trace.append(IterationRecord(k, box, c, residual, chosen,
                                         preconditioned, tuple(grids),
                                         active))

        if residual <= cfg.delta:
            record(None, False, ())
            status = 'converged'
            break
        if k >= cfg.max_iterations:
            record(None, False, ())
            status = 'iteration_cap'
            break

        preconditioned = False
        chosen = None
        status = None
        while chosen is None:
            subcubes = refine2n(box)
            grids = []
            for idx, sub in enumerate(subcubes):
                holds, grid = pmCheck(active, sub, N, mode)
                grids.append(grid)
                if holds:
                    chosen = idx
                    break
            if chosen is not None:
                failures = 0
                break
            failures += 1
            if failures >= cfg.max_consecutive_failures:
                logger.warning('no subcube satisfies the PM condition after '
                               '%d consecutive scans at k=%d', failures, k)
                status = 'stalled'
                break
            try:
                active = precondition(active, c)
            except SingularMatrixError as exc:
                logger.warning('cannot precondition at %s: %s', c, exc)
                status = 'stalled'
                break
            preconditioned = True
            preconditionings += 1
        record(chosen, preconditioned, grids)
        if status is not None:
            break
        box = subcubes[chosen]

    if verbose:
        sys.stdout.write('\n')
    return SolveResult(status, c, residual, k, preconditionings, trace)
