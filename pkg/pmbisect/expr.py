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
pmbisect.expr
~~~~~~~~~~~~~

Expression language for nonlinear systems. Source text is parsed into a small
immutable AST which can then be evaluated over floats, numpy arrays,
intervals and affine forms, and differentiated either in forward mode over
intervals or symbolically into a new AST.

The grammar (see ``docs/grammar.rst``)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := primary ('^' unary)?
    primary := number | name | func '(' expr ')' | '(' expr ')'

so ``^`` binds tighter than unary minus (``-x^2`` is ``-(x^2)``) and is right
associative. Exponents must be constant.

"""
import math
import re

from collections import namedtuple
from decimal import Decimal

import numpy as np

from . import affine
from .interval import (DomainError, Interval, ONE, ZERO, arith, elementary,
                       powInt, powReal, PI_LO, PI_HI)
from .rounding import nextDown, nextUp


FUNCTIONS = ('sin', 'cos', 'exp', 'log', 'sqrt', 'abs')


class ParseError(ValueError):
    """Syntax error in an expression; ``position`` is a 0-based column."""

    def __init__(self, message, position=None, source=None):
        self.position = position
        self.source = source
        if position is not None:
            message = '%s (at column %d)' % (message, position)
        super(ParseError, self).__init__(message)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ AST nodes ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

Constant = namedtuple('Constant',
        ['value',           # float value used for point evaluation
         'enclosure'        # ``Interval`` holding the exact constant
         ])

Variable = namedtuple('Variable', ['index', 'name'])

Unary = namedtuple('Unary',
        ['op',              # neg, exp, log, sqrt, sin, cos, abs
         'child'
         ])

Binary = namedtuple('Binary',
        ['op',              # add, sub, mul, div, pow
         'left',
         'right'            # always a ``Constant`` for pow
         ])

SystemDef = namedtuple('SystemDef',
        ['names',           # tuple of variable names (length n)
         'funcs',           # tuple of n expressions
         'jac'              # n x n tuple of expressions, or None
         ])

PI = Constant(math.pi, Interval(PI_LO, PI_HI))
E = Constant(math.e, Interval(nextDown(math.e), nextUp(math.e)))


def constant(value):
    """Exact constant node for a float."""
    value = float(value)
    return Constant(value, Interval(value))


def _literal(text):
    value = float(text)
    if Decimal(text) == Decimal(value):
        return Constant(value, Interval(value))
    return Constant(value, Interval(nextDown(value), nextUp(value)))


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Parsing ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

_TOKEN_RE = re.compile(r'''
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
''', re.VERBOSE)

Token = namedtuple('Token', ['kind', 'text', 'pos'])


def tokenize(source):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError('unexpected character %r' % source[pos], pos,
                             source)
        kind = m.lastgroup
        if kind != 'ws':
            tokens.append(Token(kind, m.group(kind), pos))
        pos = m.end()
    tokens.append(Token('end', '', len(source)))
    return tokens


_BINARY_OPS = {'+': 'add', '-': 'sub', '*': 'mul', '/': 'div'}


class _Parser(object):

    def __init__(self, source, variables):
        self.source = source
        self.variables = dict((name, i) for i, name in enumerate(variables))
        self.tokens = tokenize(source)
        self.idx = 0

    @property
    def tok(self):
        return self.tokens[self.idx]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.source)

    def advance(self):
        tok = self.tok
        self.idx += 1
        return tok

    def expect(self, text):
        if self.tok.text != text or self.tok.kind != 'op':
            found = self.tok.text or 'end of input'
            raise self.error('expected %r, found %r' % (text, found))
        return self.advance()

    def parse(self):
        if self.tok.kind == 'end':
            raise self.error('empty expression')
        node = self.expr()
        if self.tok.kind != 'end':
            raise self.error('unexpected %r' % self.tok.text)
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == 'op' and self.tok.text in '+-':
            op = _BINARY_OPS[self.advance().text]
            node = Binary(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == 'op' and self.tok.text in '*/':
            op = _BINARY_OPS[self.advance().text]
            node = Binary(op, node, self.unary())
        return node

    def unary(self):
        if self.tok.kind == 'op' and self.tok.text in '+-':
            sign = self.advance().text
            child = self.unary()
            return Unary('neg', child) if sign == '-' else child
        return self.power()

    def power(self):
        base = self.primary()
        if self.tok.kind == 'op' and self.tok.text == '^':
            self.advance()
            start = self.tok
            exponent = self.unary()
            if not isConstant(exponent):
                raise self.error('exponent must be constant', start)
            try:
                value = evalScalar(exponent, ())
                enclosure = evalInterval(exponent, ())
            except DomainError as exc:
                raise self.error('invalid exponent: %s' % exc, start)
            if value < 0 and not float(value).is_integer():
                raise self.error('negative non-integer exponent %r is not '
                                 'supported' % value, start)
            return Binary('pow', base, Constant(value, enclosure))
        return base

    def primary(self):
        tok = self.tok
        if tok.kind == 'number':
            self.advance()
            return _literal(tok.text)
        if tok.kind == 'name':
            self.advance()
            if tok.text in FUNCTIONS:
                if self.tok.text != '(':
                    raise self.error('function %r takes one argument in '
                                     'parentheses' % tok.text)
                self.advance()
                child = self.expr()
                if self.tok.text == ',':
                    raise self.error('function %r takes exactly one argument'
                                     % tok.text)
                self.expect(')')
                return Unary(tok.text, child)
            if tok.text in self.variables:
                if self.tok.text == '(':
                    raise self.error('%r is a variable, not a function' %
                                     tok.text)
                return Variable(self.variables[tok.text], tok.text)
            if tok.text == 'pi':
                return PI
            if tok.text == 'e':
                return E
            if self.tok.text == '(':
                raise self.error('unknown function %r' % tok.text, tok)
            raise self.error('unknown identifier %r' % tok.text, tok)
        if tok.kind == 'op' and tok.text == '(':
            self.advance()
            node = self.expr()
            self.expect(')')
            return node
        raise self.error('unexpected %r' % (tok.text or 'end of input'))


def checkNames(variables):
    names = tuple(variables)
    seen = set()
    for name in names:
        if not re.match(r'^[A-Za-z_][A-Za-z_0-9]*$', name):
            raise ValueError('invalid variable name %r' % (name,))
        if name in FUNCTIONS:
            raise ValueError('variable name %r clashes with a function' %
                             (name,))
        if name in seen:
            raise ValueError('duplicate variable name %r' % (name,))
        seen.add(name)
    return names


def parse(source, variables=()):
    """Parse ``source`` into an expression over ``variables``.

    Args:
        source (str)            : expression text, e.g. ``"y - exp(-(x^2))"``
        variables (sequence)    : variable names; their order fixes the
                                  variable indices

    Returns:
        AST root node

    Raises:
        ``ParseError`` on syntax errors, unknown identifiers and arity errors

    """
    return _Parser(source, checkNames(variables)).parse()


def parseSystem(names, functions, jacobian=None):
    """Build a ``SystemDef`` from variable names and source strings.

    ``jacobian``, when given, is an n x n nested sequence of source strings
    (row i holds the partial derivatives of function i).
    """
    names = checkNames(names)
    n = len(names)
    if n < 1:
        raise ValueError('a system needs at least one variable')
    if len(functions) != n:
        raise ValueError('system is not square: %d functions for %d '
                         'variables' % (len(functions), n))
    funcs = tuple(parse(src, names) for src in functions)
    jac = None
    if jacobian is not None:
        if len(jacobian) != n or any(len(row) != n for row in jacobian):
            raise ValueError('jacobian must be %d x %d' % (n, n))
        jac = tuple(tuple(parse(src, names) for src in row)
                    for row in jacobian)
    return SystemDef(names, funcs, jac)


def isConstant(e):
    if isinstance(e, Constant):
        return True
    if isinstance(e, Variable):
        return False
    if isinstance(e, Unary):
        return isConstant(e.child)
    return isConstant(e.left) and isConstant(e.right)


def scaledSum(coefficients, exprs):
    """Expression ``sum(c_i * e_i)``; zero coefficients are skipped."""
    node = None
    for c, e in zip(coefficients, exprs):
        c = float(c)
        if c == 0.0:
            continue
        term = e if c == 1.0 else Binary('mul', constant(c), e)
        node = term if node is None else Binary('add', node, term)
    return node if node is not None else constant(0.0)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Formatting ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

_SYMBOLS = {'add': '+', 'sub': '-', 'mul': '*', 'div': '/', 'pow': '^'}
_PRECEDENCE = {'add': 1, 'sub': 1, 'mul': 2, 'div': 2, 'neg': 3, 'pow': 4}


def _precedence(e):
    if isinstance(e, Binary):
        return _PRECEDENCE[e.op]
    if isinstance(e, Unary) and e.op == 'neg':
        return _PRECEDENCE['neg']
    if isinstance(e, Constant) and e.value < 0:
        return _PRECEDENCE['neg']
    return 5


def _wrap(e, needed):
    text = formatExpr(e)
    return '(%s)' % text if _precedence(e) < needed else text


def formatExpr(e):
    """Render an expression back to parseable source text."""
    if isinstance(e, Constant):
        if e == PI:
            return 'pi'
        if e == E:
            return 'e'
        if e.value.is_integer() and abs(e.value) < 1e16:
            return '%d' % e.value
        return repr(e.value)
    if isinstance(e, Variable):
        return e.name
    if isinstance(e, Unary):
        if e.op == 'neg':
            return '-' + _wrap(e.child, _PRECEDENCE['pow'])
        return '%s(%s)' % (e.op, formatExpr(e.child))
    prec = _PRECEDENCE[e.op]
    if e.op == 'pow':
        return '%s^%s' % (_wrap(e.left, prec + 1), _wrap(e.right, 5))
    left = _wrap(e.left, prec)
    right = _wrap(e.right, prec + 1)
    return '%s %s %s' % (left, _SYMBOLS[e.op], right)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Evaluation ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def _isIntegral(p):
    return float(p).is_integer()


def _scalarUnary(op, x):
    if op == 'neg':
        return -x
    if op == 'exp':
        try:
            return math.exp(x)
        except OverflowError:
            raise DomainError('exp overflow at %r' % (x,))
    if op == 'log':
        if x <= 0.0:
            raise DomainError('log of nonpositive value %r' % (x,))
        return math.log(x)
    if op == 'sqrt':
        if x < 0.0:
            raise DomainError('sqrt of negative value %r' % (x,))
        return math.sqrt(x)
    if op == 'sin':
        return math.sin(x)
    if op == 'cos':
        return math.cos(x)
    if op == 'abs':
        return abs(x)
    raise ValueError('unknown unary operation: %r' % (op,))


def _scalarPow(x, p):
    if _isIntegral(p):
        n = int(p)
        if n < 0 and x == 0.0:
            raise DomainError('zero raised to negative power %d' % n)
        try:
            return x ** n
        except OverflowError:
            raise DomainError('overflow in %r ** %d' % (x, n))
    if x < 0.0:
        raise DomainError('negative base %r for real exponent %r' % (x, p))
    try:
        return x ** p
    except OverflowError:
        raise DomainError('overflow in %r ** %r' % (x, p))


def evalScalar(e, point):
    """Evaluate ``e`` in floating point at ``point``.

    Raises:
        ``DomainError`` for log/sqrt outside their domain and division by
        zero

    """
    if isinstance(e, Constant):
        return e.value
    if isinstance(e, Variable):
        return float(point[e.index])
    if isinstance(e, Unary):
        return _scalarUnary(e.op, evalScalar(e.child, point))
    a = evalScalar(e.left, point)
    if e.op == 'pow':
        return _scalarPow(a, e.right.value)
    b = evalScalar(e.right, point)
    if e.op == 'add':
        return a + b
    if e.op == 'sub':
        return a - b
    if e.op == 'mul':
        return a * b
    if e.op == 'div':
        if b == 0.0:
            raise DomainError('division by zero')
        return a / b
    raise ValueError('unknown binary operation: %r' % (e.op,))


_NP_UNARY = {
    'neg': np.negative,
    'exp': np.exp,
    'log': np.log,
    'sqrt': np.sqrt,
    'sin': np.sin,
    'cos': np.cos,
    'abs': np.abs,
}

_NP_BINARY = {
    'add': np.add,
    'sub': np.subtract,
    'mul': np.multiply,
    'div': np.divide,
    'pow': np.power,
}


def evalArray(e, columns):
    """Vectorized evaluation; ``columns[i]`` holds the samples of variable i.

    Domain violations produce ``nan``/``inf`` entries instead of raising.
    """
    columns = np.broadcast_arrays(*[np.asarray(c, dtype=float)
                                    for c in columns]) if columns else []
    shape = columns[0].shape if columns else ()

    def walk(node):
        if isinstance(node, Constant):
            return node.value
        if isinstance(node, Variable):
            return columns[node.index]
        if isinstance(node, Unary):
            return _NP_UNARY[node.op](walk(node.child))
        return _NP_BINARY[node.op](walk(node.left), walk(node.right))

    with np.errstate(all='ignore'):
        result = walk(e)
    return np.broadcast_to(np.asarray(result, dtype=float), shape)


def _intervalPow(a, p):
    if _isIntegral(p):
        return powInt(a, int(p))
    return powReal(a, p)


def evalInterval(e, box):
    """Natural interval extension of ``e`` over ``box``.

    Raises:
        ``DomainError`` if a subterm's interval leaves a function's domain

    """
    if isinstance(e, Constant):
        return e.enclosure
    if isinstance(e, Variable):
        return box[e.index]
    if isinstance(e, Unary):
        child = evalInterval(e.child, box)
        if e.op == 'neg':
            return -child
        return elementary(child, e.op)
    left = evalInterval(e.left, box)
    if e.op == 'pow':
        return _intervalPow(left, e.right.value)
    return arith(left, evalInterval(e.right, box), e.op)


def evalAffine(e, box):
    """Affine extension of ``e`` over ``box``.

    Each box dimension becomes an affine form with its own noise symbol.
    Every node is evaluated both in affine arithmetic and as a natural
    interval; the node's range is the intersection of the two, and it is
    that range which the next elementary function is linearized over.

    Returns:
        ``Interval`` enclosing the range of ``e`` over ``box``

    Raises:
        ``DomainError`` as ``evalInterval``

    """
    ctx = affine.AffineContext()
    inputs = [ctx.fromInterval(d) for d in box]

    def tighten(form, natural):
        rng = affine.toInterval(form).intersect(natural)
        return form, (rng if rng is not None else natural)

    def walk(node):
        if isinstance(node, Constant):
            return affine.fromRange(node.enclosure), node.enclosure
        if isinstance(node, Variable):
            return inputs[node.index], box[node.index]
        if isinstance(node, Unary):
            form, rng = walk(node.child)
            if node.op == 'neg':
                return affine.negate(form), -rng
            return tighten(
                affine.affineElementary(form, node.op, domain=rng),
                elementary(rng, node.op))
        lform, lrng = walk(node.left)
        if node.op == 'pow':
            p = node.right.value
            return tighten(
                affine.affineElementary(lform, 'pow', p, domain=lrng),
                _intervalPow(lrng, p))
        rform, rrng = walk(node.right)
        domain = rrng if node.op == 'div' else None
        return tighten(
            affine.affineArith(lform, rform, node.op, domain=domain),
            arith(lrng, rrng, node.op))

    return walk(e)[1]


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ Derivatives ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

INTERVAL_FD_STEP = 1e-4


def _dmul(d, factor):
    return None if d is None else d * factor


def _dadd(a, b, sign=1.0):
    if a is None and b is None:
        return None
    if b is None:
        return a
    if a is None:
        return b if sign > 0 else -b
    return a + b if sign > 0 else a - b


def _forward(e, box, wrt):
    # returns (value enclosure, derivative enclosure or None for zero)
    if isinstance(e, Constant):
        return e.enclosure, None
    if isinstance(e, Variable):
        return box[e.index], (ONE if e.index == wrt else None)
    if isinstance(e, Unary):
        v, d = _forward(e.child, box, wrt)
        op = e.op
        if op == 'neg':
            return -v, (None if d is None else -d)
        value = elementary(v, op)
        if d is None:
            return value, None
        if op == 'exp':
            return value, d * value
        if op == 'log':
            return value, d / v
        if op == 'sqrt':
            return value, d / (2.0 * value)
        if op == 'sin':
            return value, d * elementary(v, 'cos')
        if op == 'cos':
            return value, -(d * elementary(v, 'sin'))
        if op == 'abs':
            if v.lo >= 0.0:
                return value, d
            if v.hi <= 0.0:
                return value, -d
            raise DomainError('abs is not differentiable on %s' % (v,))
        raise ValueError('unknown unary operation: %r' % (op,))
    lv, ld = _forward(e.left, box, wrt)
    if e.op == 'pow':
        p = e.right.value
        value = _intervalPow(lv, p)
        if ld is None:
            return value, None
        if _isIntegral(p):
            n = int(p)
            if n == 0:
                return value, None
            return value, ld * (Interval(n) * powInt(lv, n - 1))
        return value, ld * (Interval(p) * powReal(lv, p - 1.0))
    rv, rd = _forward(e.right, box, wrt)
    value = arith(lv, rv, e.op)
    if e.op in ('add', 'sub'):
        return value, _dadd(ld, rd, 1.0 if e.op == 'add' else -1.0)
    if e.op == 'mul':
        return value, _dadd(_dmul(ld, rv), _dmul(rd, lv))
    if e.op == 'div':
        if ld is None and rd is None:
            return value, None
        # (l/r)' = (l' - (l/r) r') / r
        num = _dadd(ld, _dmul(rd, value), -1.0)
        return value, num / rv
    raise ValueError('unknown binary operation: %r' % (e.op,))


def _times(d, factor):
    if isinstance(d, Constant) and d.value == 1.0:
        return factor
    return Binary('mul', d, factor)


def _symbolic(e, wrt):
    # None stands for an identically zero derivative
    if isinstance(e, Constant):
        return None
    if isinstance(e, Variable):
        return constant(1.0) if e.index == wrt else None
    if isinstance(e, Unary):
        d = _symbolic(e.child, wrt)
        if d is None:
            return None
        u = e.child
        if e.op == 'neg':
            return Unary('neg', d)
        if e.op == 'exp':
            return _times(d, e)
        if e.op == 'log':
            return Binary('div', d, u)
        if e.op == 'sqrt':
            return Binary('div', d, Binary('mul', constant(2.0), e))
        if e.op == 'sin':
            return _times(d, Unary('cos', u))
        if e.op == 'cos':
            return Unary('neg', _times(d, Unary('sin', u)))
        if e.op == 'abs':
            # u' * u / |u|, undefined where u vanishes
            return Binary('div', _times(d, u), e)
        raise ValueError('unknown unary operation: %r' % (e.op,))
    ld = _symbolic(e.left, wrt)
    if e.op == 'pow':
        p = e.right.value
        if ld is None or p == 0.0:
            return None
        if p == 2.0:
            factor = Binary('mul', constant(2.0), e.left)
        else:
            factor = Binary('mul', constant(p),
                            Binary('pow', e.left, constant(p - 1.0)))
        return _times(ld, factor)
    rd = _symbolic(e.right, wrt)
    if e.op in ('add', 'sub'):
        if rd is None:
            return ld
        if ld is None:
            return rd if e.op == 'add' else Unary('neg', rd)
        return Binary(e.op, ld, rd)
    if e.op == 'mul':
        terms = [t for t in (None if ld is None else _times(ld, e.right),
                             None if rd is None else _times(rd, e.left))
                 if t is not None]
        if not terms:
            return None
        return terms[0] if len(terms) == 1 else Binary('add', *terms)
    if e.op == 'div':
        if ld is None and rd is None:
            return None
        # (l/r)' = (l' - (l/r) r') / r
        if rd is None:
            num = ld
        elif ld is None:
            num = Unary('neg', _times(rd, e))
        else:
            num = Binary('sub', ld, _times(rd, e))
        return Binary('div', num, e.right)
    raise ValueError('unknown binary operation: %r' % (e.op,))


def differentiate(e, wrt):
    """Expression for the partial derivative of ``e`` w.r.t. variable
    ``wrt``."""
    d = _symbolic(e, wrt)
    return constant(0.0) if d is None else d


def evalAffineDerivative(e, box, wrt):
    """Derivative enclosure from the affine extension of the symbolic
    derivative, intersected with the forward-mode interval enclosure.

    Terms of the derivative that share a subexpression (for instance the
    rows of a preconditioned system) keep their correlation here, which the
    forward mode in interval arithmetic loses.
    """
    natural = evalDerivative(e, box, wrt, 'ad')
    try:
        tight = evalAffine(differentiate(e, wrt), box)
    except DomainError:
        return natural
    rng = tight.intersect(natural)
    return natural if rng is None else rng


def evalDerivative(e, box, wrt, mode='ad'):
    """Enclose the partial derivative of ``e`` w.r.t. variable ``wrt``.

    Args:
        e                   : expression
        box (``Box``)       : evaluation box
        wrt (int)           : variable index
        mode (str)          : ``ad`` for forward-mode differentiation in
                              interval arithmetic (a sound enclosure), or
                              ``paper_fd`` for the interval central difference
                              ``([f](X+h) - [f](X-h)) / 2h`` with h = 1e-4,
                              shifting only dimension ``wrt``

    Returns:
        ``Interval``

    Raises:
        ``DomainError`` on domain violations, or in ``ad`` mode if ``abs``
        has a kink inside the box

    """
    if mode == 'ad':
        d = _forward(e, box, wrt)[1]
        return ZERO if d is None else d
    if mode == 'paper_fd':
        h = INTERVAL_FD_STEP
        up = box.replace(wrt, box[wrt] + h)
        down = box.replace(wrt, box[wrt] - h)
        return (evalInterval(e, up) - evalInterval(e, down)) / (2.0 * h)
    raise ValueError('unknown derivative mode: %r' % (mode,))


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ System helpers ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ #

def evaluateSystem(system, point):
    """Vector ``F(point)`` as a numpy array."""
    return np.array([evalScalar(f, point) for f in system.funcs])


def jacobianAt(system, point):
    """Point Jacobian of ``system`` as an n x n numpy array.

    Uses the explicit Jacobian expressions when the system has them,
    otherwise central differences with step ``1e-6 * max(1, |x_j|)``.
    """
    n = len(system.funcs)
    point = [float(x) for x in point]
    J = np.empty((n, n))
    if system.jac is not None:
        for i in range(n):
            for j in range(n):
                J[i, j] = evalScalar(system.jac[i][j], point)
        return J
    for j in range(n):
        h = 1e-6 * max(1.0, abs(point[j]))
        up = list(point)
        down = list(point)
        up[j] += h
        down[j] -= h
        fu = evaluateSystem(system, up)
        fd = evaluateSystem(system, down)
        J[:, j] = (fu - fd) / (up[j] - down[j])
    return J
