"""Dihedral group D_2m with the fixed element ordering used throughout.

Elements are indexed 1..2m in the order

    1, a, a^2, ..., a^(m-1), b, ab, ..., a^(m-1)b

so index i <= m is the rotation a^(i-1) and index i > m is the
reflection a^(i-m-1)b.  The presentation is a^m = b^2 = (ab)^2 = 1,
which gives b a = a^(-1) b.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DihedralGroup:
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"half-order must be a positive integer, got {self.m!r}")

    @property
    def order(self) -> int:
        return 2 * self.m

    def _check(self, i: int) -> None:
        if not 1 <= i <= 2 * self.m:
            raise ValueError(f"element index {i} out of range 1..{2 * self.m}")

    def decompose(self, i: int) -> tuple[int, int]:
        """Return (rotation exponent, reflection bit) of element i."""
        self._check(i)
        i -= 1
        return (i, 0) if i < self.m else (i - self.m, 1)

    def index(self, rot: int, ref: int) -> int:
        return rot % self.m + (ref & 1) * self.m + 1

    def mul(self, i: int, j: int) -> int:
        ri, fi = self.decompose(i)
        rj, fj = self.decompose(j)
        # a^ri b^fi a^rj b^fj = a^(ri +- rj) b^(fi + fj)
        return self.index(ri - rj if fi else ri + rj, fi ^ fj)

    def inverse(self, i: int) -> int:
        r, f = self.decompose(i)
        if f:
            return i
        return self.index(-r, 0)

    def elements(self) -> range:
        return range(1, 2 * self.m + 1)

    def cayley_table(self) -> list[list[int]]:
        """1-based Cayley table as nested lists; row i-1 holds g_i * g_j."""
        return [[self.mul(i, j) for j in self.elements()] for i in self.elements()]


def embed_subgroup(t: int, i: int) -> int:
    """Index in D_4t of the i-th element of <a^2, b>, a copy of D_2t.

    The image is exactly the odd indices 1, 3, ..., 4t-1.
    """
    DihedralGroup(t)._check(i)
    return 2 * i - 1
