import math
import unittest

import numpy as np

from pmbisect import affine
from pmbisect.affine import (AffineContext, affineArith, affineElementary,
                             fromInterval, fromRange, toInterval)
from pmbisect.interval import DomainError, Interval


class TestAffineForms(unittest.TestCase):

    def test_fromInterval(self):
        form = fromInterval(Interval(1, 3), 1)
        self.assertEqual(form.center, 2.0)
        self.assertEqual(form.noise, {1: 1.0})
        self.assertEqual(form.residual, 0.0)
        self.assertEqual(toInterval(form), Interval(1, 3))
        point = fromInterval(Interval(5), 2)
        self.assertEqual(point.noise, {})
        self.assertTrue(point.isDegenerate())

    def test_fromRange(self):
        form = fromRange(Interval(-1, 3))
        self.assertEqual((form.center, form.noise, form.residual),
                         (1.0, {}, 2.0))

    def test_context_freshSymbols(self):
        ctx = AffineContext()
        x = ctx.fromInterval(Interval(0, 1))
        y = ctx.fromInterval(Interval(0, 1))
        self.assertNotEqual(set(x.noise), set(y.noise))

    def test_cancellation(self):
        x = fromInterval(Interval(1, 3), 1)
        self.assertEqual(toInterval(x - x), Interval(0, 0))
        self.assertEqual(toInterval(x + x), Interval(2, 6))
        self.assertEqual(toInterval(-x), Interval(-3, -1))

    def test_independentProduct(self):
        ctx = AffineContext()
        x = ctx.fromInterval(Interval(0, 1))
        y = ctx.fromInterval(Interval(0, 1))
        product = toInterval(affineArith(x, y, 'mul'))
        self.assertEqual(product, Interval(-0.5, 1.0))
        self.assertTrue(Interval(0, 1).subset(product))

    def test_dependentProduct(self):
        x = fromInterval(Interval(0, 1), 1)
        one_minus_x = 1.0 - x
        self.assertEqual(toInterval(x * one_minus_x), Interval(0, 0.5))

    def test_division(self):
        x = fromInterval(Interval(1, 2), 1)
        q = toInterval(affineArith(fromRange(Interval(1)), x, 'div'))
        self.assertTrue(q.lo <= 0.5 and q.hi >= 1.0)
        z = fromInterval(Interval(-1, 1), 2)
        self.assertRaises(DomainError, affineArith, x, z, 'div')
        self.assertRaises(ValueError, affineArith, x, x, 'pow')
        negative = fromInterval(Interval(-4, -2), 3)
        r = toInterval(affineArith(fromRange(Interval(1)), negative, 'div'))
        self.assertTrue(r.lo <= -0.5 and r.hi >= -0.25)


class TestAffineElementary(unittest.TestCase):

    def test_sqrt_minRange(self):
        x = fromInterval(Interval(1, 4), 1)
        self.assertEqual(toInterval(affineElementary(x, 'sqrt')),
                         Interval(1, 2))

    def test_square_chebyshev(self):
        x = fromInterval(Interval(1, 2), 1)
        self.assertEqual(toInterval(affineElementary(x, 'pow', 2)),
                         Interval(0.75, 4.0))

    def test_monotonePowers_minRange(self):
        x = fromInterval(Interval(1, 2), 1)
        cube = affineElementary(x, 'pow', 3)
        self.assertEqual(toInterval(cube), Interval(1, 8))
        # slope at the end nearest 0
        self.assertEqual(cube.noise, {1: 1.5})
        y = fromInterval(Interval(-1, 2), 2)
        self.assertEqual(toInterval(affineElementary(y, 'pow', 3)),
                         Interval(-1, 8))
        z = fromInterval(Interval(-2, -1), 3)
        fourth = toInterval(affineElementary(z, 'pow', 4))
        self.assertEqual(fourth, Interval(1, 16))
        w = fromInterval(Interval(1, 4), 4)
        root = toInterval(affineElementary(w, 'pow', 1.5))
        self.assertTrue(Interval(1, 8).subset(root))
        self.assertLess(root.width, 7.0 + 1e-9)
        u = fromInterval(Interval(0, 4), 5)
        self.assertTrue(Interval(0, 2).subset(
            toInterval(affineElementary(u, 'pow', 0.5))))

    def test_cos_meanValue(self):
        x = fromInterval(Interval(-0.1, 0.1), 1)
        rng = toInterval(affineElementary(x, 'cos'))
        self.assertIn(math.cos(0.1), rng)
        self.assertGreaterEqual(rng.hi, 1.0)
        self.assertGreater(rng.lo, 0.98)
        self.assertLess(rng.hi, 1.02)

    def test_degenerateDomain(self):
        x = fromInterval(Interval(2), 1)
        rng = toInterval(affineElementary(x, 'exp'))
        self.assertIn(math.exp(2), rng)
        self.assertLess(rng.width, 1e-14)

    def test_domainErrors(self):
        x = fromInterval(Interval(-1, 1), 1)
        self.assertRaises(DomainError, affineElementary, x, 'log')
        self.assertRaises(DomainError, affineElementary, x, 'sqrt')
        self.assertRaises(ValueError, affineElementary, x, 'pow')

    def test_abs(self):
        x = fromInterval(Interval(-3, -1), 1)
        self.assertEqual(toInterval(affineElementary(x, 'abs')),
                         Interval(1, 3))
        y = fromInterval(Interval(-1, 2), 2)
        self.assertEqual(toInterval(affineElementary(y, 'abs')),
                         Interval(0, 2))

    def test_randomContainment(self):
        rs = np.random.RandomState(5)
        cases = [
            ('exp', None, math.exp, (-3, 3)),
            ('log', None, math.log, (0.1, 5)),
            ('sqrt', None, math.sqrt, (0, 5)),
            ('sin', None, math.sin, (-4, 4)),
            ('cos', None, math.cos, (-4, 4)),
            ('pow', 2, lambda v: v ** 2, (-3, 3)),
            ('pow', 3, lambda v: v ** 3, (-3, 3)),
            ('pow', 4, lambda v: v ** 4, (-2, 2)),
            ('pow', 5, lambda v: v ** 5, (0.2, 2)),
            ('pow', 0.5, math.sqrt, (0, 4)),
            ('pow', -1, lambda v: 1.0 / v, (0.5, 4)),
            ('pow', 1.5, lambda v: v ** 1.5, (0.1, 4)),
        ]
        for fn, p, f, (lo, hi) in cases:
            for _ in range(30):
                a, b = sorted(rs.uniform(lo, hi, 2))
                x = fromInterval(Interval(a, b), 1)
                rng = toInterval(affineElementary(x, fn, p))
                for v in np.linspace(a, b, 9):
                    self.assertIn(f(float(v)), rng,
                                  '%s^%r at %r outside %s' % (fn, p, v, rng))

    def test_linearCorrelationIsKept(self):
        # exp(x) - exp(x) keeps the shared noise symbol
        x = fromInterval(Interval(0, 1), 1)
        ex = affineElementary(x, 'exp')
        natural = Interval(0, 1)
        natural_width = 2.0 * (math.e - 1.0)
        self.assertLess(toInterval(ex - ex).width, natural_width / 2)
        self.assertIn(0.0, toInterval(ex - ex))
        self.assertTrue(toInterval(ex).subset(Interval(0.9, 2.8)))
        self.assertIn(math.exp(natural.hi), toInterval(ex))
        self.assertEqual(set(ex.noise), {1})
        self.assertIsInstance(ex, affine.AffineForm)


if __name__ == '__main__':
    unittest.main()
