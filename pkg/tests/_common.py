
import atexit
import json
import shutil
import os

import numpy as np

from pmbisect.expr import parseSystem
from pmbisect.interval import Box


LOCAL_DIR = os.path.dirname(os.path.realpath(__file__))
CONFIG_DIR = os.path.join(os.path.dirname(LOCAL_DIR), 'configs')
TEST_OUTPUT_DIR = os.path.join(LOCAL_DIR, 'test_output')

try:
    os.makedirs(TEST_OUTPUT_DIR)
except OSError as e:
    if e.errno != 17:
        raise

def rmOutput():
    shutil.rmtree(TEST_OUTPUT_DIR, ignore_errors=True)

atexit.register(rmOutput)


def configPath(name):
    return os.path.join(CONFIG_DIR, name + '.json')


def loadSystem(name):
    """``(SystemDef, Box)`` from one of the shipped configs."""
    with open(configPath(name)) as fd:
        doc = json.load(fd)
    system = parseSystem(doc['variables'], doc['functions'],
                         doc.get('jacobian'))
    return system, Box(doc['box'])


def randomPoints(box, count, seed):
    """``count`` uniformly sampled points of ``box`` (rows of an array)."""
    rs = np.random.RandomState(seed)
    lo = np.array([d.lo for d in box])
    hi = np.array([d.hi for d in box])
    return lo + (hi - lo) * rs.random_sample((count, len(box)))


EXAMPLE1_SYSTEM, EXAMPLE1_BOX = loadSystem('example1')

# delta -> (iterations, residual at the final center)
EXAMPLE1_TABLE = {
    1.0:    (1, 0.2788),
    1e-1:   (4, 0.0586),
    1e-2:   (7, 0.0077),
    1e-5:   (17, 7.6293e-6),
    1e-10:  (34, 5.8207e-11),
    1e-15:  (50, 8.8817e-16),
}

# name -> (reference root, reference iteration count)
TEST_MAP_TABLE = {
    'f1': ((0.618033988749895, 0.786151377757422), 51),
    'f2': ((0.567143290409784, 0.567143290409784), 50),
    'f3': ((0.378316940137480, 0.507403383528753), 51),
    'f4': ((0.926174872358938, -0.582851662173280), 49),
    'f5': ((0.353246619596717, 0.606081736641465), 52),
    'f6': ((0.510030862987151, 0.048996913701194), 42),
}

# maps on which no subcube of K0 can be certified at the first iteration, even
# after preconditioning at its center: name -> (iterations, preconditionings)
STALLING_MAPS = {
    'f5': (1, 2),
}


def encloses(rng, value, rel=1e-12):
    """``value`` (a plain float evaluation) lies in ``rng`` up to a relative
    slack for its own rounding."""
    slack = rel * max(1.0, abs(value))
    return rng.lo - slack <= value <= rng.hi + slack
