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
pmbisect.extension
~~~~~~~~~~~~~~~~~~

Range enclosures of an expression over a box: the mean value extension and
the refinements (hull over a uniform grid of sub-boxes) of the mean value,
affine and natural extensions.

Faces handed over by the solver are full n-dimensional boxes with one
degenerate dimension. Degenerate dimensions are never subdivided, so a face
of an n-box is refined into N**(n-1) cells.

"""
import itertools

from .expr import (evalAffine, evalAffineDerivative, evalDerivative,
                   evalInterval)
from .interval import Box, boxCenter, pointBox, uniformSubdivide


EXTENSIONS = ('natural', 'mean', 'affine')


def meanValue(e, box, mode='ad', affine_slopes=False):
    """Mean value extension ``f(m) + sum_i [df/dx_i](box) * (box_i - m_i)``.

    Args:
        e                       : expression
        box (``Box``)           : evaluation box
        mode (str)              : derivative mode, ``ad`` or ``paper_fd``
                                  (see :func:`pmbisect.expr.evalDerivative`)
        affine_slopes (bool)    : in ``ad`` mode, tighten the slopes with
                                  :func:`pmbisect.expr.evalAffineDerivative`

    Returns:
        ``Interval``; a sound enclosure of the range in ``ad`` mode

    """
    box = Box(box)
    m = boxCenter(box)
    total = evalInterval(e, pointBox(m))
    for i in box.freeDims():
        if affine_slopes and mode == 'ad':
            slope = evalAffineDerivative(e, box, i)
        else:
            slope = evalDerivative(e, box, i, mode)
        total = total + slope * (box[i] - m[i])
    return total


def subdivideBox(box, N):
    """Uniform grid of sub-boxes in lexicographic order.

    Every non-degenerate dimension is split into ``N`` cells.
    """
    box = Box(box)
    axes = [(d,) if d.isDegenerate() else uniformSubdivide(d, N)
            for d in box]
    return [Box(cell) for cell in itertools.product(*axes)]


def _refine(evaluate, box, N):
    result = None
    for cell in subdivideBox(box, N):
        value = evaluate(cell)
        result = value if result is None else result.hull(value)
    return result


def meanValueRefinement(e, box, N, mode='ad', affine_slopes=False):
    """Hull of ``meanValue`` over the N-per-dimension grid of ``box``."""
    return _refine(lambda cell: meanValue(e, cell, mode, affine_slopes),
                   box, N)


def affineRefinement(e, box, N):
    """Hull of ``evalAffine`` over the N-per-dimension grid of ``box``."""
    return _refine(lambda cell: evalAffine(e, cell), box, N)


def naturalRefinement(e, box, N):
    return _refine(lambda cell: evalInterval(e, cell), box, N)


def enclose(e, box, extension='natural', N=1, mode='ad'):
    """Refined enclosure of ``e`` over ``box`` by the named extension.

    Args:
        e                       : expression
        box (``Box``)           : evaluation box
        extension (str)         : ``natural``, ``mean`` or ``affine``
        N (int, optional)       : cells per dimension (1 = no refinement)
        mode (str, optional)    : derivative mode for ``mean``

    Returns:
        ``Interval``

    Raises:
        ``ValueError`` for an unknown extension, ``DomainError`` from the
        evaluation

    """
    if extension == 'natural':
        return naturalRefinement(e, box, N)
    elif extension == 'mean':
        return meanValueRefinement(e, box, N, mode)
    elif extension == 'affine':
        return affineRefinement(e, box, N)
    raise ValueError('unknown extension %r (expected one of %s)' %
                     (extension, ', '.join(EXTENSIONS)))
