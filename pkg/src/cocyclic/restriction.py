"""Restriction D_4t -> D_2t and the extension family going the other way.

Deleting the even-indexed rows and columns of a D_4t-matrix leaves the
cocyclic matrix of the subgroup <a^2, b>, a copy of D_2t.  On the level
of basis elements:

    d_i (i even)  ->  J
    d_i (i odd)   ->  d~_{(i+1)/2}
    beta_1        ->  J
    beta_2        ->  beta~_2
    gamma         ->  prod_{i=1}^{(t-1)/2}  d~_{2i} d~_{2t-2i+1}
"""

from __future__ import annotations

from collections.abc import Sequence

from .cocycle import CocycleSpec, symdiff
from .signmatrix import SignMatrix


def restrict_matrix(M: SignMatrix) -> SignMatrix:
    if M.n % 4:
        raise ValueError(f"restriction needs order divisible by 4, got {M.n}")
    return M.submatrix(range(0, M.n, 2))


def gamma_restriction(t: int) -> tuple[int, ...]:
    """Tilde coboundaries whose product is the restriction of gamma."""
    return symdiff(*((2 * i, 2 * t - 2 * i + 1) for i in range(1, (t - 1) // 2 + 1)))


def gamma_compensator(t: int) -> tuple[int, ...]:
    """D_4t coboundaries that restrict to the same product as gamma."""
    return symdiff(*((4 * i - 1, 4 * t - 4 * i + 1) for i in range(1, (t - 1) // 2 + 1)))


def restrict_spec(spec: CocycleSpec) -> CocycleSpec:
    if spec.m % 2:
        raise ValueError(f"restriction needs an even half-order, got m={spec.m}")
    t = spec.m // 2
    deltas = [(d + 1) // 2 for d in spec.deltas if d % 2]
    if spec.k3:
        deltas = symdiff(deltas, gamma_restriction(t))
    return CocycleSpec(t, tuple(deltas), 0, spec.k2, 0)


class ExtensionFamily(Sequence):
    """All D_4t-specs that restrict to a given D_2t-spec carrying beta~_2.

    Member ``index`` is decoded from its bits: bit i-1 toggles d_{2i}
    (i = 1 .. 2t-1), the next bit toggles gamma together with its
    compensator, and, when ``with_beta1`` is set, the top bit toggles
    beta_1.  Every member carries beta_2 and the lifted odd coboundaries
    of the seed.  Indexing is random-access so that ranges of the family
    can be scanned independently.
    """

    def __init__(self, seed: CocycleSpec, with_beta1: bool = True):
        if seed.m % 2 == 0 or seed.m < 3:
            raise ValueError(f"seed must be over D_2t with t odd >= 3, got m={seed.m}")
        if not seed.k2:
            raise ValueError("seed must include beta~_2")
        self.seed = seed
        self.t = seed.m
        self.with_beta1 = with_beta1
        self.lifted = tuple(2 * i - 1 for i in seed.deltas)
        self.compensator = gamma_compensator(self.t)
        self.nbits = 2 * self.t + (1 if with_beta1 else 0)

    def __len__(self) -> int:
        return 1 << self.nbits

    def decode(self, index: int) -> tuple[tuple[int, ...], int, int]:
        """(alphas, k, k1) for a member index."""
        t = self.t
        alphas = tuple(index >> (i - 1) & 1 for i in range(1, 2 * t))
        k = index >> (2 * t - 1) & 1
        k1 = index >> (2 * t) & 1 if self.with_beta1 else 0
        return alphas, k, k1

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(len(self)))]
        if index < 0:
            index += len(self)
        if not 0 <= index < len(self):
            raise IndexError(index)
        alphas, k, k1 = self.decode(index)
        evens = [2 * i for i, a in enumerate(alphas, start=1) if a]
        deltas = symdiff(evens, self.lifted, self.compensator if k else ())
        return CocycleSpec(2 * self.t, deltas, k1, 1, k)


def extension_family(seed: CocycleSpec, with_beta1: bool = True) -> ExtensionFamily:
    return ExtensionFamily(seed, with_beta1)
