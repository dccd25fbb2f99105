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
pmbisect.rounding
~~~~~~~~~~~~~~~~~

Directed rounding for round-to-nearest hardware.

Every primitive is evaluated in ordinary double precision and the result is
pushed one float outward (``numpy.nextafter``) only if an error-free
transformation shows the rounded result differs from the exact one:

    add / sub   TwoSum (Knuth)
    mul         TwoProduct (Dekker/Veltkamp splitting)
    div, sqrt   sign of the exact remainder, via TwoProduct

Exact results are therefore returned untouched, which keeps faces on which a
function vanishes exactly certifiable.

"""
import math

import numpy as np

_INF = float('inf')

# Veltkamp splitter for 53-bit significands
_SPLITTER = 134217729.0
# Outside this range the splitting may overflow or lose the error term to
# underflow; results there are widened unconditionally.
_SAFE_MAX = 2.0 ** 995
_SAFE_MIN = 2.0 ** -969


def nextUp(x):
    return float(np.nextafter(x, _INF))


def nextDown(x):
    return float(np.nextafter(x, -_INF))


def ulp(x):
    """Distance from |x| to the next float away from zero."""
    x = abs(x)
    return nextUp(x) - x


# ~~~~~~~~~~~~~~~~~~~~~~~~ Error-free transformations ~~~~~~~~~~~~~~~~~~~~~~~ #

def twoSum(a, b):
    """Return ``(s, e)`` with ``s = fl(a + b)`` and ``a + b = s + e`` exactly.
    """
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _isSafe(*values):
    for v in values:
        av = abs(v)
        if av > _SAFE_MAX or (av != 0.0 and av < _SAFE_MIN):
            return False
    return True


def twoProduct(a, b):
    """Return ``(p, e)`` with ``p = fl(a * b)`` and ``a * b = p + e``.

    ``e`` is ``None`` when the operands fall outside the range in which the
    splitting is exact; callers must then treat the product as inexact in
    both directions.
    """
    p = a * b
    if not _isSafe(a, b, p) or (p == 0.0 and a != 0.0 and b != 0.0):
        return p, None
    ah, al = _split(a)
    bh, bl = _split(b)
    e = al * bl - (((p - ah * bh) - al * bh) - ah * bl)
    return p, e


def _directed(value, err, up):
    # err is the sign-carrying correction: exact = value + err
    if err is None:
        return nextUp(value) if up else nextDown(value)
    if up:
        return nextUp(value) if err > 0 else value
    return nextDown(value) if err < 0 else value


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Directed primitives ~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def addDown(a, b):
    s, e = twoSum(a, b)
    return _directed(s, e, False)


def addUp(a, b):
    s, e = twoSum(a, b)
    return _directed(s, e, True)


def subDown(a, b):
    return addDown(a, -b)


def subUp(a, b):
    return addUp(a, -b)


def mulDown(a, b):
    p, e = twoProduct(a, b)
    return _directed(p, e, False)


def mulUp(a, b):
    p, e = twoProduct(a, b)
    return _directed(p, e, True)


def mulBoth(a, b):
    """Return the (down, up) rounded product from a single TwoProduct."""
    p, e = twoProduct(a, b)
    return _directed(p, e, False), _directed(p, e, True)


def _quotientError(a, b, q):
    # sign(a/b - q) expressed as a correction with that sign, or None
    p, e = twoProduct(q, b)
    if e is None:
        return None
    # a - p is exact for a correctly rounded quotient
    r = a - p
    if r == e:
        return 0.0
    rem_sign = 1.0 if r > e else -1.0
    return rem_sign if b > 0 else -rem_sign


def divBoth(a, b):
    """Return the (down, up) rounded quotient ``a / b`` (``b != 0``)."""
    q = a / b
    if not _isSafe(a, b, q) or (q == 0.0 and a != 0.0):
        return nextDown(q), nextUp(q)
    e = _quotientError(a, b, q)
    return _directed(q, e, False), _directed(q, e, True)


def divDown(a, b):
    return divBoth(a, b)[0]


def divUp(a, b):
    return divBoth(a, b)[1]


def sqrtBoth(a):
    """Return the (down, up) rounded square root of ``a >= 0``."""
    r = math.sqrt(a)
    if a == 0.0:
        return 0.0, 0.0
    p, e = twoProduct(r, r)
    if e is None:
        return max(0.0, nextDown(r)), nextUp(r)
    d = a - p
    err = 0.0 if d == e else (1.0 if d > e else -1.0)
    return max(0.0, _directed(r, err, False)), _directed(r, err, True)


def widen(lo, hi):
    """Widen a libm-computed pair by one ulp on each side."""
    return nextDown(lo), nextUp(hi)
