import random

import numpy as np
import pytest

from cocyclic import CocycleSpec, SignMatrix
from cocyclic.cocycle import delta_range
from cocyclic.fixtures import d10


@pytest.fixture
def D10():
    return d10()


@pytest.fixture
def rng():
    return random.Random(20100501)


def random_spec(rng, m, k2=None):
    deltas = tuple(d for d in delta_range(m) if rng.random() < 0.5)
    even = m % 2 == 0
    return CocycleSpec(
        m,
        deltas,
        k1=rng.randint(0, 1) if even else 0,
        k2=rng.randint(0, 1) if k2 is None else k2,
        k3=rng.randint(0, 1) if even else 0,
    )


def random_sign_matrix(rng, n):
    return SignMatrix.from_entries([[rng.choice((1, -1)) for _ in range(n)] for _ in range(n)])


SYLVESTER4 = SignMatrix.from_entries(
    [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]
)


def orthogonal_rep(m):
    """D_2m as 2x2 rotation/reflection matrices, in the fixed element order."""
    th = 2 * np.pi / m
    a = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
    b = np.array([[1.0, 0.0], [0.0, -1.0]])
    rots = [np.linalg.matrix_power(a, r) for r in range(m)]
    return rots + [r @ b for r in rots]


def cayley_oracle(m):
    els = orthogonal_rep(m)

    def find(x):
        (idx,) = [k for k, e in enumerate(els) if np.allclose(e, x)]
        return idx + 1

    return [[find(x @ y) for y in els] for x in els]
