import itertools
import numpy as np
import pytest
from hypothesis import strategies as st

from bell.state import SIGNS

BELL_VERTICES = [tuple(map(float, row)) for row in SIGNS]
OCTAHEDRON_VERTICES = [tuple(float(s) * (j == k) for k in range(3))
                       for j in range(3) for s in (1, -1)]


def symmetry_group():
    """ Coordinate permutations times sign flips of an even number of components. """
    flips = [np.array(s, dtype=float) for s in itertools.product((1, -1), repeat=3)
             if np.prod(s) == 1]
    return [(list(p), f) for p in itertools.permutations(range(3)) for f in flips]

SYMMETRIES = symmetry_group()


def act(g, c):
    perm, flip = g
    return np.asarray(c, dtype=float)[..., perm] * flip


@st.composite
def physical_states(draw):
    """ Points of T as convex combinations of the Bell vertices. """
    w = draw(st.lists(st.floats(0, 1), min_size=4, max_size=4).filter(lambda w: sum(w) > 1e-3))
    lam = np.array(w) / sum(w)
    return tuple(map(float, lam @ SIGNS))

@st.composite
def triples(draw, bound=2.):
    return tuple(draw(st.floats(-bound, bound)) for _ in range(3))


@pytest.fixture
def rng():
    return np.random.default_rng(0)

@pytest.fixture
def random_states(rng):
    from bell.state import random_physical
    return random_physical(rng, 1000)
