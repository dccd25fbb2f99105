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
pmbisect.affine
~~~~~~~~~~~~~~~

Affine arithmetic. A form

    x0 + x1*u1 + ... + xk*uk + r*e

stands for every value obtained with the noise symbols ``u_i`` and the
residual symbol ``e`` ranging independently over [-1, 1]. The residual is
always treated as a brand new symbol, so it never cancels; it absorbs the
nonlinear part of multiplications and elementary functions as well as all
floating-point rounding errors.

Elementary functions are replaced by a linear approximation ``alpha*x + zeta``
plus an error term ``delta``:

    exp, log, sqrt, reciprocal   min-range approximation
    monotone powers              min-range approximation
    square                       Chebyshev (secant) approximation
    sin, cos                     mean-value linearization at the midpoint
    even powers straddling 0     mean-value linearization at the midpoint

"""
import itertools

from collections import namedtuple

from . import rounding as rnd
from .interval import (DomainError, Interval, ONE, elementary, powInt,
                       powReal)


class AffineForm(namedtuple('AffineForm', ['center', 'noise', 'residual'])):
    """``center + sum(noise[s] * u_s) + residual * e``.

    ``noise`` maps noise-symbol ids to nonzero coefficients and must not be
    mutated once the form is built.
    """
    __slots__ = ()

    @property
    def radius(self):
        total = self.residual
        for coef in self.noise.values():
            total = rnd.addUp(total, abs(coef))
        return total

    def isDegenerate(self):
        return not self.noise and self.residual == 0.0

    def __add__(self, other):
        return affineArith(self, _coerce(other), 'add')

    def __radd__(self, other):
        return affineArith(_coerce(other), self, 'add')

    def __sub__(self, other):
        return affineArith(self, _coerce(other), 'sub')

    def __rsub__(self, other):
        return affineArith(_coerce(other), self, 'sub')

    def __mul__(self, other):
        return affineArith(self, _coerce(other), 'mul')

    def __rmul__(self, other):
        return affineArith(_coerce(other), self, 'mul')

    def __truediv__(self, other):
        return affineArith(self, _coerce(other), 'div')

    __div__ = __truediv__

    def __neg__(self):
        return negate(self)


def _coerce(value):
    if isinstance(value, AffineForm):
        return value
    return fromRange(Interval(value))


class AffineContext(object):
    """Allocates noise symbols for one evaluation.

    Forms built from different contexts must never be combined.
    """

    def __init__(self):
        self._counter = itertools.count(1)

    def fresh(self):
        return next(self._counter)

    def fromInterval(self, a):
        return fromInterval(a, self.fresh())


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Rounding bookkeeping ~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _sumErr(a, b):
    s, e = rnd.twoSum(a, b)
    return s, abs(e)


def _prodErr(a, b):
    p, e = rnd.twoProduct(a, b)
    if e is None:
        return p, rnd.ulp(p)
    return p, abs(e)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Conversions ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def fromInterval(a, symbol):
    """Affine form of an interval with a single noise term.

    Args:
        a (``Interval``)    : interval to convert
        symbol (int)        : fresh noise-symbol id for this input

    Returns:
        ``AffineForm`` with center ``mid(a)``, coefficient ``rad(a)`` on
        ``symbol`` (omitted when zero) and no residual

    """
    center = a.mid
    coef = a.rad
    noise = {symbol: coef} if coef != 0.0 else {}
    return AffineForm(center, noise, 0.0)


def fromRange(a):
    """Form with no noise symbols: mid(a) +- rad(a) on the residual."""
    return AffineForm(a.mid, {}, a.rad)


def toInterval(form):
    """Range ``[center - radius, center + radius]``, outward rounded."""
    rad = form.radius
    return Interval(rnd.subDown(form.center, rad),
                    rnd.addUp(form.center, rad))


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Arithmetic ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def negate(a):
    noise = dict((s, -c) for s, c in a.noise.items())
    return AffineForm(-a.center, noise, a.residual)


def _addForms(a, b, sign):
    err = 0.0
    center, e = _sumErr(a.center, sign * b.center)
    err = rnd.addUp(err, e)
    noise = dict(a.noise)
    for sym, coef in b.noise.items():
        if sym in noise:
            value, e = _sumErr(noise[sym], sign * coef)
            err = rnd.addUp(err, e)
            if value == 0.0:
                del noise[sym]
            else:
                noise[sym] = value
        else:
            noise[sym] = sign * coef
    residual = rnd.addUp(rnd.addUp(a.residual, b.residual), err)
    return AffineForm(center, noise, residual)


def _mulForms(a, b):
    # center a0*b0, linear a0*b_i + b0*a_i,
    # residual |a0|*rb + |b0|*ra + (sum|a_i| + ra) * (sum|b_i| + rb)
    err = 0.0
    center, e = _prodErr(a.center, b.center)
    err = rnd.addUp(err, e)
    noise = {}
    for sym in set(a.noise) | set(b.noise):
        value = 0.0
        if sym in b.noise:
            value, e = _prodErr(a.center, b.noise[sym])
            err = rnd.addUp(err, e)
        if sym in a.noise:
            term, e = _prodErr(b.center, a.noise[sym])
            err = rnd.addUp(err, e)
            value, e = _sumErr(value, term)
            err = rnd.addUp(err, e)
        if value != 0.0:
            noise[sym] = value
    residual = rnd.mulUp(abs(a.center), b.residual)
    residual = rnd.addUp(residual, rnd.mulUp(abs(b.center), a.residual))
    residual = rnd.addUp(residual, rnd.mulUp(a.radius, b.radius))
    residual = rnd.addUp(residual, err)
    return AffineForm(center, noise, residual)


def affineArith(a, b, op, domain=None):
    """Affine arithmetic ``a op b``.

    Args:
        a (``AffineForm``)          : left operand
        b (``AffineForm``)          : right operand
        op (str)                    : ``add``, ``sub``, ``mul`` or ``div``
        domain (``Interval``, opt)  : enclosure of the values of ``b``, used
                                      to linearize the reciprocal for ``div``
                                      (defaults to ``toInterval(b)``)

    Returns:
        ``AffineForm`` whose range contains ``{x op y}``

    Raises:
        ``DomainError`` for division through zero

    """
    if op == 'add':
        return _addForms(a, b, 1.0)
    elif op == 'sub':
        return _addForms(a, b, -1.0)
    elif op == 'mul':
        return _mulForms(a, b)
    elif op == 'div':
        if domain is None:
            domain = toInterval(b)
        return _mulForms(a, _reciprocal(b, domain))
    raise ValueError('unknown affine operation: %r' % (op,))


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Linearizations ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _combine(a, alpha, g_range):
    """``alpha*a + zeta +- delta`` where ``g_range`` = [zeta-delta, zeta+delta]
    encloses ``f(x) - alpha*x`` over the operand's values."""
    err = 0.0
    center, e = _prodErr(alpha, a.center)
    err = rnd.addUp(err, e)
    center, e = _sumErr(center, g_range.mid)
    err = rnd.addUp(err, e)
    noise = {}
    for sym, coef in a.noise.items():
        value, e = _prodErr(alpha, coef)
        err = rnd.addUp(err, e)
        if value != 0.0:
            noise[sym] = value
    residual = rnd.mulUp(abs(alpha), a.residual)
    residual = rnd.addUp(residual, g_range.rad)
    residual = rnd.addUp(residual, err)
    return AffineForm(center, noise, residual)


def _monotoneRemainder(f, alpha, domain):
    # f(x) - alpha*x is monotone on domain, so its range lies between the
    # endpoint values
    def g(x):
        return f(Interval(x)) - Interval(x) * alpha
    return g(domain.lo).hull(g(domain.hi))


def _minRange(a, domain, fn):
    lo, hi = domain
    f = lambda x: elementary(x, fn)
    if fn == 'exp':
        # exp is increasing and convex: slope at the left end, rounded down
        alpha = elementary(Interval(lo), 'exp').lo
    elif fn == 'log':
        alpha = rnd.divDown(1.0, hi)
    elif fn == 'sqrt':
        alpha = rnd.divDown(0.5, rnd.sqrtBoth(hi)[1])
    else:
        raise ValueError('no min-range approximation for %r' % (fn,))
    return _combine(a, alpha, _monotoneRemainder(f, alpha, domain))


def _reciprocal(b, domain):
    if domain.lo <= 0.0 <= domain.hi:
        raise DomainError('affine division by a form whose range contains '
                          'zero: %s' % (domain,))
    if domain.hi < 0.0:
        return negate(_reciprocal(negate(b), -domain))
    if domain.isDegenerate():
        return fromRange(ONE / domain)
    hi = domain.hi
    # rounded up, so 1/x - alpha*x stays decreasing
    alpha = -rnd.divDown(1.0, rnd.mulUp(hi, hi))
    g_range = _monotoneRemainder(lambda x: ONE / x, alpha, domain)
    return _combine(b, alpha, g_range)


def _square(a, domain):
    lo, hi = domain
    alpha = lo + hi
    vertex = min(max(0.5 * alpha, lo), hi)

    def g(x):
        X = Interval(x)
        return X * X - X * alpha

    # g is convex: the maximum is at an end, the minimum at the vertex
    top = g(lo).hull(g(hi))
    bottom = g(vertex)
    g_range = Interval(min(top.lo, bottom.lo), max(top.hi, bottom.hi))
    return _combine(a, alpha, g_range)


def _meanValue(a, domain, f, fprime):
    m = domain.mid
    alpha = fprime(Interval(m)).mid
    slope = fprime(domain) - alpha
    g_range = (f(Interval(m)) - Interval(m) * alpha) + slope * (domain - m)
    return _combine(a, alpha, g_range)


def _monotonePow(a, domain, f, fprime, increasing):
    # min-range: alpha is the derivative at the end of smallest |slope|,
    # rounded toward zero so that f(x) - alpha*x stays monotone
    lo, hi = domain
    if lo < 0.0 < hi:
        # odd power: the slope vanishes at 0
        alpha = 0.0
    else:
        ends = []
        for x in (lo, hi):
            try:
                ends.append(fprime(Interval(x)))
            except DomainError:
                # unbounded slope at x = 0
                pass
        if not ends:
            raise DomainError('no finite slope on %s' % (domain,))
        if increasing:
            alpha = max(0.0, min(d.lo for d in ends))
        else:
            alpha = min(0.0, max(d.hi for d in ends))
    return _combine(a, alpha, _monotoneRemainder(f, alpha, domain))


def _powRange(domain, p):
    if float(p).is_integer():
        return powInt(domain, int(p))
    return powReal(domain, p)


def _pow(a, domain, p):
    if float(p).is_integer():
        n = int(p)
        if n == 0:
            return fromRange(ONE)
        if n == 1:
            return a
        if n == 2:
            return _square(a, domain)
        if n < 0:
            inner = _pow(a, domain, -n)
            return _reciprocal(inner, powInt(domain, -n))
        f = lambda x: powInt(x, n)
        fprime = lambda x: Interval(n) * powInt(x, n - 1)
        if n % 2:
            return _monotonePow(a, domain, f, fprime, True)
        if domain.lo >= 0.0 or domain.hi <= 0.0:
            return _monotonePow(a, domain, f, fprime, domain.lo >= 0.0)
        return _meanValue(a, domain, f, fprime)
    p = float(p)
    return _monotonePow(a, domain,
                        lambda x: powReal(x, p),
                        lambda x: Interval(p) * powReal(x, p - 1.0),
                        p > 0.0)


def affineElementary(a, fn, p=None, domain=None):
    """Linearize an elementary function over an affine form.

    Args:
        a (``AffineForm``)          : argument
        fn (str)                    : ``exp``, ``log``, ``sqrt``, ``sin``,
                                      ``cos``, ``abs`` or ``pow``

        p (number, optional)        : exponent for ``pow``
        domain (``Interval``, opt)  : enclosure of the values of ``a``
                                      (defaults to ``toInterval(a)``)

    Returns:
        ``AffineForm`` whose range contains ``{fn(x) : x in domain}``

    Raises:
        ``DomainError`` if ``domain`` leaves the domain of ``fn``

    """
    if domain is None:
        domain = toInterval(a)
    if fn == 'pow':
        if p is None:
            raise ValueError('pow needs an exponent')
        value_range = _powRange(domain, p)
    else:
        value_range = elementary(domain, fn)
    if domain.isDegenerate():
        return fromRange(value_range)

    try:
        if fn in ('exp', 'log', 'sqrt'):
            return _minRange(a, domain, fn)
        elif fn == 'sin':
            return _meanValue(a, domain,
                              lambda x: elementary(x, 'sin'),
                              lambda x: elementary(x, 'cos'))
        elif fn == 'cos':
            return _meanValue(a, domain,
                              lambda x: elementary(x, 'cos'),
                              lambda x: -elementary(x, 'sin'))
        elif fn == 'abs':
            if domain.lo >= 0.0:
                return a
            if domain.hi <= 0.0:
                return negate(a)
        elif fn == 'pow':
            return _pow(a, domain, p)
        else:
            raise ValueError('unknown elementary function: %r' % (fn,))
    except DomainError:
        # e.g. an unbounded derivative at the edge of the domain
        pass
    return fromRange(value_range)
