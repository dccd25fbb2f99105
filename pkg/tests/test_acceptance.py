"""
End-to-end checks against reference convergence tables for the two-variable
example system and the six shipped test maps, plus randomized soundness
checks of the enclosures and of the face-sign certification.
"""
import math
import unittest

import numpy as np

from pmbisect.expr import (evalArray, evalScalar, evaluateSystem, jacobianAt,
                           parse)
from pmbisect.extension import EXTENSIONS, enclose, meanValue
from pmbisect.interval import Box, Interval, boxCenter
from pmbisect.solver import (SignResult, SolverConfig, errorBound, posneg,
                             refine2n, requiredIterations, solve)
from ._common import (EXAMPLE1_BOX, EXAMPLE1_SYSTEM, EXAMPLE1_TABLE,
                      STALLING_MAPS, TEST_MAP_TABLE, loadSystem,
                      randomPoints)


TEST_MAPS = sorted(TEST_MAP_TABLE)
CONVERGING_MAPS = [name for name in TEST_MAPS if name not in STALLING_MAPS]


def randomSubBox(K0, rs):
    dims = []
    for d in K0:
        a, b = sorted(rs.uniform(d.lo, d.hi, 2))
        if a == b:
            b = d.hi
        dims.append(Interval(a, b))
    return Box(dims)


def sampleColumns(box, count, rs):
    return [rs.uniform(d.lo, d.hi, count) for d in box]


class TestWorkedExample(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.runs = {}
        for delta in EXAMPLE1_TABLE:
            cls.runs[delta] = solve(EXAMPLE1_SYSTEM, EXAMPLE1_BOX,
                                    SolverConfig(delta=delta))

    def test_closedFormCenters(self):
        result = self.runs[1e-15]
        self.assertEqual(result.preconditionings, 0)
        for rec in result.trace:
            k = rec.k
            expected = (math.ldexp(1.0, -k), 1.0 - math.ldexp(1.0, -k))
            self.assertEqual(rec.center, expected)
            self.assertFalse(rec.preconditioned)
            distance = math.hypot(rec.center[0], rec.center[1] - 1.0)
            self.assertAlmostEqual(distance, math.sqrt(2.0) / 2.0 ** k,
                                   delta=1e-15)
            self.assertLessEqual(distance, errorBound(EXAMPLE1_BOX, k))

    def test_convergenceTable(self):
        for delta, (iterations, residual) in sorted(EXAMPLE1_TABLE.items()):
            result = self.runs[delta]
            self.assertEqual(result.status, 'converged')
            self.assertEqual(result.iterations, iterations,
                             'delta=%g' % delta)
            # two significant figures
            self.assertAlmostEqual(result.residual / residual, 1.0,
                                   delta=0.01, msg='delta=%g' % delta)

    def test_iterationFormula(self):
        for delta, result in self.runs.items():
            self.assertLessEqual(
                abs(requiredIterations(EXAMPLE1_BOX, delta) -
                    result.iterations), 1, 'delta=%g' % delta)

    def test_paperFdMode(self):
        identity = parse('x', ['x'])
        self.assertGreater(meanValue(identity, Box([(0, 2)]),
                                     'paper_fd').width, 1e3)
        result = solve(EXAMPLE1_SYSTEM, EXAMPLE1_BOX,
                       SolverConfig(derivative_mode='paper_fd'))
        self.assertEqual(result.status, 'converged')
        self.assertLessEqual(result.residual, 1e-15)
        self.assertEqual(result.root, self.runs[1e-15].root)


class TestTestingMaps(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.systems = {}
        cls.runs = {}
        for name in TEST_MAPS:
            system, K0 = loadSystem(name)
            cls.systems[name] = (system, K0)
            cls.runs[name] = solve(system, K0, SolverConfig(delta=1e-15, N=3))

    def test_roots(self):
        for name in CONVERGING_MAPS:
            result = self.runs[name]
            root, _ = TEST_MAP_TABLE[name]
            # runs that end one scan short of the tolerance stop as
            # 'stalled' with the last certified center
            self.assertIn(result.status, ('converged', 'stalled'), name)
            self.assertLessEqual(result.residual, 1e-12, name)
            for got, want in zip(result.root, root):
                self.assertAlmostEqual(got, want, delta=1e-12, msg=name)

    def test_stallingMaps(self):
        for name, (iterations, preconditionings) in STALLING_MAPS.items():
            result = self.runs[name]
            system, K0 = self.systems[name]
            self.assertEqual(result.status, 'stalled', name)
            self.assertEqual(result.iterations, iterations, name)
            self.assertEqual(result.preconditionings, preconditionings, name)
            self.assertEqual(result.root, boxCenter(K0))
            self.assertGreater(result.residual, 1e-15)
            # sampling shows the sign condition really fails for the
            # preconditioned system on the subcube holding the root
            root, _ = TEST_MAP_TABLE[name]
            sub = [s for s in refine2n(K0) if s.contains(root)][0]
            active = result.trace[-1].active_system
            self.assertTrue(any(self.signsFail(g, sub, i)
                                for i, g in enumerate(active.funcs)), name)

    @staticmethod
    def signsFail(g, box, i):
        faces = []
        for side in ('lo', 'hi'):
            columns = [np.full(1000, getattr(d, side)) if j == i else
                       np.linspace(d.lo, d.hi, 1000)
                       for j, d in enumerate(box)]
            faces.append(evalArray(g, columns))
        low, high = faces
        straddles = any(v.min() < 0.0 < v.max() for v in faces)
        same_sign = ((low.min() > 0.0 and high.min() > 0.0) or
                     (low.max() < 0.0 and high.max() < 0.0))
        return straddles or same_sign

    def test_iterationCounts(self):
        for name in CONVERGING_MAPS:
            _, reference = TEST_MAP_TABLE[name]
            _, K0 = self.systems[name]
            formula = requiredIterations(K0, 1e-15)
            low = min(reference, formula) - 3
            high = max(reference, formula) + 3
            iterations = self.runs[name].iterations
            self.assertTrue(low <= iterations <= high,
                            '%s: %d iterations, expected %d..%d' %
                            (name, iterations, low, high))

    def test_rootStaysInCertifiedBoxes(self):
        for name in TEST_MAPS:
            root, _ = TEST_MAP_TABLE[name]
            for rec in self.runs[name].trace:
                # reference roots carry 15 digits
                grown = Box([(d.lo - 1e-12, d.hi + 1e-12) for d in rec.box])
                self.assertTrue(grown.contains(root), '%s k=%d' %
                                (name, rec.k))

    def test_centersWithinErrorBound(self):
        for name in TEST_MAPS:
            _, K0 = self.systems[name]
            trace = self.runs[name].trace
            last = trace[-1]
            for rec in trace:
                distance = np.linalg.norm(np.subtract(rec.center,
                                                      last.center))
                bound = errorBound(K0, rec.k) + errorBound(K0, last.k)
                self.assertLessEqual(distance, bound + 1e-15,
                                     '%s k=%d' % (name, rec.k))

    def test_preconditionedSystemIdentity(self):
        checked = 0
        for name in TEST_MAPS:
            system, _ = self.systems[name]
            for rec in self.runs[name].trace:
                if not rec.preconditioned:
                    continue
                active = rec.active_system
                J = jacobianAt(system, active.center_used)
                M = np.linalg.inv(J)
                for p in randomPoints(rec.box, 100, seed=rec.k):
                    F = evaluateSystem(system, p)
                    G = np.array([evalScalar(g, p) for g in active.funcs])
                    expected = M.dot(F)
                    scale = np.abs(M).dot(np.abs(F)) + 1e-300
                    self.assertTrue(np.all(np.abs(G - expected) <=
                                           1e-10 * scale),
                                    '%s k=%d at %r' % (name, rec.k, p))
                checked += 1
        self.assertGreater(checked, 0)


class TestSoundness(unittest.TestCase):

    def test_enclosures(self):
        rs = np.random.RandomState(2026)
        for name in TEST_MAPS:
            system, K0 = loadSystem(name)
            for f in system.funcs:
                for _ in range(100):
                    box = randomSubBox(K0, rs)
                    values = evalArray(f, sampleColumns(box, 1000, rs))
                    slack = 1e-12 * max(1.0, float(np.max(np.abs(values))))
                    for extension in EXTENSIONS:
                        rng = enclose(f, box, extension)
                        self.assertGreaterEqual(
                            float(values.min()), rng.lo - slack,
                            '%s %s on %s' % (name, extension, box))
                        self.assertLessEqual(
                            float(values.max()), rng.hi + slack,
                            '%s %s on %s' % (name, extension, box))

    def test_posnegVerdicts(self):
        rs = np.random.RandomState(42)
        components = []
        for name in TEST_MAPS:
            system, K0 = loadSystem(name)
            components.extend((f, K0) for f in system.funcs)
        verdicts = 0
        for trial in range(500):
            f, K0 = components[trial % len(components)]
            fixed = rs.randint(len(K0))
            dims = []
            for j, d in enumerate(K0):
                if j == fixed:
                    dims.append(Interval(rs.uniform(d.lo, d.hi)))
                else:
                    # short and long restrictions alike
                    width = (d.hi - d.lo) * rs.choice([0.01, 0.1, 1.0])
                    lo = rs.uniform(d.lo, d.hi - width)
                    dims.append(Interval(lo, lo + width))
            face = Box(dims)
            sign = posneg(f, face, 3)
            if sign == SignResult.UNKNOWN:
                continue
            verdicts += 1
            columns = [np.full(10000, d.lo) if d.isDegenerate() else
                       np.linspace(d.lo, d.hi, 10000) for d in face]
            values = evalArray(f, columns)
            slack = 1e-12 * max(1.0, float(np.max(np.abs(values))))
            if sign == SignResult.PLUS:
                self.assertGreaterEqual(float(values.min()), -slack,
                                        'PLUS contradicted on %s' % (face,))
            else:
                self.assertLessEqual(float(values.max()), slack,
                                     'MINUS contradicted on %s' % (face,))
        self.assertGreater(verdicts, 50)


if __name__ == '__main__':
    unittest.main()
