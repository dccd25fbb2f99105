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
pmbisect.interval
~~~~~~~~~~~~~~~~~

Closed-interval arithmetic with outward rounding, elementary functions over
intervals, and n-dimensional boxes.

``Interval`` and ``Box`` are immutable tuple subclasses; every operation in
this module is pure.

"""
import math

from collections import namedtuple

from . import rounding as rnd
from .rounding import nextDown, nextUp


class DomainError(ValueError):
    """Raised for invalid intervals and function-domain violations."""


# pi enclosure: the correctly rounded constant widened by one ulp each side
PI_LO = nextDown(math.pi)
PI_HI = nextUp(math.pi)
HALF_PI_LO = PI_LO / 2.0
HALF_PI_HI = PI_HI / 2.0


class Interval(namedtuple('Interval', ['lo', 'hi'])):
    """Closed real interval ``[lo, hi]`` with finite endpoints, lo <= hi."""
    __slots__ = ()

    def __new__(cls, lo, hi=None):
        if hi is None:
            hi = lo
        lo = float(lo)
        hi = float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise DomainError('interval endpoint is NaN: [%r, %r]' % (lo, hi))
        if math.isinf(lo) or math.isinf(hi):
            raise DomainError('interval endpoint is not finite: [%r, %r]' %
                              (lo, hi))
        if lo > hi:
            raise DomainError('empty interval: lo > hi in [%r, %r]' %
                              (lo, hi))
        # normalize -0.0 so that printed bounds are stable
        return super(Interval, cls).__new__(cls, lo + 0.0, hi + 0.0)

    # ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Queries ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #
    @property
    def width(self):
        return rnd.subUp(self.hi, self.lo)

    @property
    def mid(self):
        m = 0.5 * (self.lo + self.hi)
        if math.isinf(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    @property
    def rad(self):
        m = self.mid
        return max(rnd.subUp(self.hi, m), rnd.subUp(m, self.lo))

    def isDegenerate(self):
        return self.lo == self.hi

    def __contains__(self, x):
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def contains(self, x):
        return x in self

    def subset(self, other):
        return other.lo <= self.lo and self.hi <= other.hi

    def hull(self, other):
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other):
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    # ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Operators ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #
    def __add__(self, other):
        return arith(self, _coerce(other), 'add')

    def __radd__(self, other):
        return arith(_coerce(other), self, 'add')

    def __sub__(self, other):
        return arith(self, _coerce(other), 'sub')

    def __rsub__(self, other):
        return arith(_coerce(other), self, 'sub')

    def __mul__(self, other):
        return arith(self, _coerce(other), 'mul')

    def __rmul__(self, other):
        return arith(_coerce(other), self, 'mul')

    def __truediv__(self, other):
        return arith(self, _coerce(other), 'div')

    def __rtruediv__(self, other):
        return arith(_coerce(other), self, 'div')

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __repr__(self):
        return 'Interval(%r, %r)' % (self.lo, self.hi)

    def __str__(self):
        return '[%.17g, %.17g]' % (self.lo, self.hi)


def _coerce(value):
    if isinstance(value, Interval):
        return value
    return Interval(value, value)


ZERO = Interval(0.0, 0.0)
ONE = Interval(1.0, 1.0)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Arithmetic ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _corners(a, b, both):
    lows = []
    highs = []
    for x in (a.lo, a.hi):
        for y in (b.lo, b.hi):
            down, up = both(x, y)
            lows.append(down)
            highs.append(up)
    return Interval(min(lows), max(highs))


def _mul(a, b):
    if (a.lo == 0.0 and a.hi == 0.0) or (b.lo == 0.0 and b.hi == 0.0):
        return ZERO
    return _corners(a, b, rnd.mulBoth)


def _checkDivisor(b):
    if b.lo <= 0.0 <= b.hi:
        raise DomainError('division by an interval containing zero: %s' %
                          (b,))


def _recip(b):
    _checkDivisor(b)
    return Interval(rnd.divDown(1.0, b.hi), rnd.divUp(1.0, b.lo))


def _div(a, b):
    _checkDivisor(b)
    return _corners(a, b, rnd.divBoth)


def arith(a, b, op):
    """Interval arithmetic ``a op b`` with outward rounding.

    Args:
        a (``Interval``)    : left operand
        b (``Interval``)    : right operand
        op (str)            : one of ``add``, ``sub``, ``mul``, ``div``

    Returns:
        ``Interval`` containing ``{x op y : x in a, y in b}``

    Raises:
        ``DomainError`` for division by an interval containing zero or when
        a bound overflows

    """
    if op == 'add':
        return Interval(rnd.addDown(a.lo, b.lo), rnd.addUp(a.hi, b.hi))
    elif op == 'sub':
        return Interval(rnd.subDown(a.lo, b.hi), rnd.subUp(a.hi, b.lo))
    elif op == 'mul':
        return _mul(a, b)
    elif op == 'div':
        return _div(a, b)
    raise ValueError('unknown interval operation: %r' % (op,))


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Elementary functions ~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _exp(a):
    try:
        lo = 1.0 if a.lo == 0.0 else max(0.0, nextDown(math.exp(a.lo)))
        hi = 1.0 if a.hi == 0.0 else nextUp(math.exp(a.hi))
    except OverflowError:
        raise DomainError('exp overflow on %s' % (a,))
    # exp(x) <= 1 for x <= 0 and >= 1 for x >= 0
    if a.hi <= 0.0:
        hi = min(hi, 1.0)
    if a.lo >= 0.0:
        lo = max(lo, 1.0)
    return Interval(lo, hi)


def _log(a):
    if a.lo <= 0.0:
        raise DomainError('log requires a positive interval, got %s' % (a,))
    lo = 0.0 if a.lo == 1.0 else nextDown(math.log(a.lo))
    hi = 0.0 if a.hi == 1.0 else nextUp(math.log(a.hi))
    if a.hi <= 1.0:
        hi = min(hi, 0.0)
    if a.lo >= 1.0:
        lo = max(lo, 0.0)
    return Interval(lo, hi)


def _sqrt(a):
    if a.lo < 0.0:
        raise DomainError('sqrt requires a nonnegative interval, got %s' %
                          (a,))
    return Interval(rnd.sqrtBoth(a.lo)[0], rnd.sqrtBoth(a.hi)[1])


def _abs(a):
    if a.lo >= 0.0:
        return a
    if a.hi <= 0.0:
        return -a
    return Interval(0.0, max(-a.lo, a.hi))


def _halfPiMultipleMayLieIn(j, a):
    """True if ``j*pi/2`` may lie in ``a`` for some pi in [PI_LO, PI_HI]."""
    if j == 0:
        return a.lo <= 0.0 <= a.hi
    if j > 0:
        lo = rnd.mulDown(j, HALF_PI_LO)
        hi = rnd.mulUp(j, HALF_PI_HI)
    else:
        lo = rnd.mulDown(j, HALF_PI_HI)
        hi = rnd.mulUp(j, HALF_PI_LO)
    return not (hi < a.lo or lo > a.hi)


def _trig(a, fn, shift):
    # ``shift`` selects the critical points: sin has its max at j = 1 (mod 4)
    # and its min at j = 3; cos at j = 0 and j = 2.
    if rnd.subUp(a.hi, a.lo) >= 2.0 * PI_HI:
        return Interval(-1.0, 1.0)
    values = []
    for x in (a.lo, a.hi):
        v = fn(x)
        if x == 0.0:
            values.append((v, v))
        else:
            values.append((nextDown(v), nextUp(v)))
    lo = min(v[0] for v in values)
    hi = max(v[1] for v in values)
    # one spare candidate on each side; the exact test is done below
    j_lo = int(math.floor(a.lo / (0.5 * math.pi))) - 1
    j_hi = int(math.ceil(a.hi / (0.5 * math.pi))) + 1
    for j in range(j_lo, j_hi + 1):
        phase = (j + shift) % 4
        if phase not in (0, 2):
            continue
        if _halfPiMultipleMayLieIn(j, a):
            if phase == 0:
                hi = 1.0
            else:
                lo = -1.0
    return Interval(max(-1.0, lo), min(1.0, hi))


def _sin(a):
    return _trig(a, math.sin, 3)


def _cos(a):
    return _trig(a, math.cos, 0)


def _powNonneg(x, n, up):
    # x >= 0, n >= 1; directed repeated squaring stays monotone
    mul = rnd.mulUp if up else rnd.mulDown
    result = 1.0
    base = x
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def powInt(a, n):
    """Enclose ``{x**n : x in a}`` for integer ``n``."""
    n = int(n)
    if n == 0:
        return ONE
    if n < 0:
        return _recip(powInt(a, -n))
    if n == 1:
        return a
    if n % 2 == 0:
        mag = _abs(a)
        return Interval(_powNonneg(mag.lo, n, False),
                        _powNonneg(mag.hi, n, True))
    lo = (_powNonneg(a.lo, n, False) if a.lo >= 0.0 else
          -_powNonneg(-a.lo, n, True))
    hi = (_powNonneg(a.hi, n, True) if a.hi >= 0.0 else
          -_powNonneg(-a.hi, n, False))
    return Interval(lo, hi)


def powReal(a, p):
    """Enclose ``{x**p : x in a}`` as ``exp(p*log(x))``; requires a >= 0."""
    p = float(p)
    if a.lo < 0.0:
        raise DomainError('pow_real requires a nonnegative interval, got %s' %
                          (a,))
    if p == 0.0:
        return ONE
    if p < 0.0 and a.lo == 0.0:
        raise DomainError('pow_real with negative exponent %r needs a '
                          'positive interval, got %s' % (p, a))

    def endpoint(x):
        if x == 0.0:
            return ZERO
        return _exp(Interval(p) * _log(Interval(x)))

    lo_end = endpoint(a.lo)
    hi_end = endpoint(a.hi)
    if p > 0.0:
        return Interval(lo_end.lo, hi_end.hi)
    return Interval(hi_end.lo, lo_end.hi)


_ELEMENTARY = {
    'exp': _exp,
    'log': _log,
    'sqrt': _sqrt,
    'sin': _sin,
    'cos': _cos,
    'abs': _abs,
}


def elementary(a, fn, p=None):
    """Enclose the range of an elementary function over ``a``.

    Args:
        a (``Interval``)        : argument interval
        fn (str)                : ``exp``, ``log``, ``sqrt``, ``sin``, ``cos``,
                                  ``abs``, ``pow_int`` or ``pow_real``

        p (number, optional)    : exponent for ``pow_int`` / ``pow_real``

    Returns:
        ``Interval`` enclosing ``{fn(x) : x in a}``

    Raises:
        ``DomainError`` naming the function and offending interval

    """
    if fn == 'pow_int':
        return powInt(a, p)
    if fn == 'pow_real':
        return powReal(a, p)
    try:
        func = _ELEMENTARY[fn]
    except KeyError:
        raise ValueError('unknown elementary function: %r' % (fn,))
    return func(a)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Boxes ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

class Box(tuple):
    """n-dimensional product of ``Interval`` objects (n >= 1)."""
    __slots__ = ()

    def __new__(cls, dims):
        dims = tuple(d if isinstance(d, Interval) else Interval(*d)
                     for d in dims)
        if not dims:
            raise DomainError('a box needs at least one dimension')
        return super(Box, cls).__new__(cls, dims)

    @property
    def dims(self):
        return tuple(self)

    def width(self):
        return max(d.width for d in self)

    def center(self):
        return boxCenter(self)

    def freeDims(self):
        return [i for i, d in enumerate(self) if not d.isDegenerate()]

    def replace(self, dim, interval):
        dims = list(self)
        dims[dim] = _coerce(interval)
        return Box(dims)

    def contains(self, point):
        return all(d.lo <= x <= d.hi for d, x in zip(self, point))

    def subset(self, other):
        return all(a.subset(b) for a, b in zip(self, other))

    def hull(self, other):
        return Box([a.hull(b) for a, b in zip(self, other)])

    def __repr__(self):
        return 'Box(%r)' % (list(self),)

    def __str__(self):
        return ' x '.join(str(d) for d in self)


def pointBox(point):
    """Degenerate box ``[x1,x1] x ... x [xn,xn]``."""
    return Box([Interval(x, x) for x in point])


def boxCenter(box):
    """Coordinate-wise midpoint ``(lo + hi) / 2`` of a box."""
    return tuple(d.mid for d in box)


def uniformSubdivide(a, N):
    """Split ``a`` into ``N`` consecutive cells of (nearly) equal width.

    Consecutive cells share endpoints, the first cell starts at ``a.lo`` and
    the last one ends exactly at ``a.hi``, so the hull of the cells is ``a``.

    Args:
        a (``Interval``)    : interval to subdivide
        N (int)             : number of cells, N >= 1

    Returns:
        tuple of ``N`` ``Interval`` objects

    Raises:
        ``ValueError`` if N < 1

    """
    N = int(N)
    if N < 1:
        raise ValueError('subdivision count must be >= 1, got %d' % N)
    if N == 1:
        return (a,)
    step = (a.hi - a.lo) / N
    points = [a.lo]
    for j in range(1, N):
        x = a.lo + j * step
        points.append(min(max(x, points[-1]), a.hi))
    points.append(a.hi)
    return tuple(Interval(points[j], points[j + 1]) for j in range(N))
