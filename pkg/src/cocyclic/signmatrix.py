"""Exact linear algebra on +-1 matrices.

Rows are stored bit-packed: bit j of ``rows[i]`` is set iff entry (i, j)
is -1 (0-based internally).  Pointwise product is then XOR and a row sum
is ``n - 2 * popcount``.  Determinants are exact (fraction-free Bareiss
elimination on Python integers); following the usual convention in this
area, ``determinant`` reports the absolute value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class SignMatrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError("row mask wider than the matrix")

    # -- construction -------------------------------------------------

    @classmethod
    def from_entries(cls, entries: Iterable[Iterable[int]]) -> SignMatrix:
        data = [list(map(int, row)) for row in entries]
        n = len(data)
        rows = []
        for row in data:
            if len(row) != n:
                raise ValueError("matrix must be square")
            mask = 0
            for j, v in enumerate(row):
                if v == -1:
                    mask |= 1 << j
                elif v != 1:
                    raise ValueError(f"entry {v} is not +-1")
            rows.append(mask)
        return cls(n, tuple(rows))

    @classmethod
    def ones(cls, n: int) -> SignMatrix:
        return cls(n, (0,) * n)

    @classmethod
    def from_text(cls, text: str) -> SignMatrix:
        """Parse the ``n`` + rows-of-``+``/``-`` format."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        try:
            n = int(lines[0])
        except ValueError:
            raise ValueError(f"first line must be the order, got {lines[0]!r}") from None
        body = lines[1:]
        if len(body) != n:
            raise ValueError(f"expected {n} rows, got {len(body)}")
        rows = []
        for ln in body:
            if len(ln) != n or set(ln) - {"+", "-"}:
                raise ValueError(f"malformed row {ln!r}")
            rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "-"))
        return cls(n, tuple(rows))

    def to_text(self) -> str:
        out = [str(self.n)]
        for r in self.rows:
            out.append("".join("-" if r >> j & 1 else "+" for j in range(self.n)))
        return "\n".join(out) + "\n"

    # -- access -------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"position ({i}, {j}) outside order {self.n}")
        return -1 if self.rows[i - 1] >> (j - 1) & 1 else 1

    def to_lists(self) -> list[list[int]]:
        return [[-1 if r >> j & 1 else 1 for j in range(self.n)] for r in self.rows]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.int64).reshape(self.n, self.n)

    def __mul__(self, other: SignMatrix) -> SignMatrix:
        """Pointwise (Hadamard) product."""
        if not isinstance(other, SignMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("order mismatch in pointwise product")
        return SignMatrix(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def transpose(self) -> SignMatrix:
        rows = []
        for j in range(self.n):
            rows.append(sum(1 << i for i, r in enumerate(self.rows) if r >> j & 1))
        return SignMatrix(self.n, tuple(rows))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> SignMatrix:
        """New matrix whose (i, j) entry is self[row_perm[i], col_perm[j]] (0-based).

        Index lists shorter than n select a square submatrix.
        """
        if len(row_perm) != len(col_perm):
            raise ValueError("row and column selections differ in length")
        rows = []
        for i in row_perm:
            r = self.rows[i]
            rows.append(sum(1 << k for k, j in enumerate(col_perm) if r >> j & 1))
        return SignMatrix(len(rows), tuple(rows))

    def submatrix(self, idx: Sequence[int]) -> SignMatrix:
        """Principal submatrix on the given 0-based indices."""
        idx = list(idx)
        return self.permute(idx, idx)

    def row_sums(self) -> list[int]:
        return [self.n - 2 * _popcount(r) for r in self.rows]

    def is_normalized(self) -> bool:
        return self.rows[0] == 0 and all(r & 1 == 0 for r in self.rows)


# -- determinants -------------------------------------------------------


def bareiss_det(a: list[list[int]]) -> int:
    """Signed determinant of an integer matrix (destroys ``a``)."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def signed_determinant(M: SignMatrix) -> int:
    return bareiss_det(M.to_lists())


def determinant(M: SignMatrix) -> int:
    return abs(signed_determinant(M))


def principal_minors(M: SignMatrix) -> list[int]:
    """|det| of the leading j x j submatrices, j = 1..n."""
    full = M.to_lists()
    return [abs(bareiss_det([row[:j] for row in full[:j]])) for j in range(1, M.n + 1)]


# -- row excess and the cocyclic Hadamard test -------------------------


def row_excess(M: SignMatrix) -> int:
    return sum(abs(s) for s in M.row_sums()[1:])


def hadamard_test(M: SignMatrix) -> bool:
    """Row-sum test; valid for normalized cocyclic matrices."""
    half = M.n // 2
    if M.n > 1 and M.n % 2:
        return False
    return all(_popcount(r) == half for r in M.rows[1:])


def is_hadamard(M: SignMatrix) -> bool:
    """Direct check M M^T = n I."""
    return bool(np.array_equal(gram_rows(M), M.n * np.eye(M.n, dtype=np.int64)))


# -- Gram matrices ------------------------------------------------------


def gram_rows(M: SignMatrix) -> np.ndarray:
    A = M.to_array()
    return A @ A.T


def gram_cols(M: SignMatrix) -> np.ndarray:
    A = M.to_array()
    return A.T @ A


def gram_rows_cocyclic(M: SignMatrix, group) -> np.ndarray:
    """Row Gram matrix of a cocyclic matrix from the cocycle values alone.

    Entry (i, j) is psi(g_i g_j^-1, g_j) * sum_g psi(g_i g_j^-1, g), so it
    only needs the row sums of M and one lookup per entry.
    """
    n = M.n
    if group.order != n:
        raise ValueError("matrix order does not match group order")
    sums = M.row_sums()
    G = np.empty((n, n), dtype=np.int64)
    for i in group.elements():
        for j in group.elements():
            h = group.mul(i, group.inverse(j))
            G[i - 1, j - 1] = M.entry(h, j) * sums[h - 1]
    return G


def gram_cols_cocyclic(M: SignMatrix, group) -> np.ndarray:
    """Column Gram matrix: psi(g_i, g_i^-1 g_j) * sum_g psi(g, g_i^-1 g_j)."""
    n = M.n
    if group.order != n:
        raise ValueError("matrix order does not match group order")
    col_sums = M.transpose().row_sums()
    G = np.empty((n, n), dtype=np.int64)
    for i in group.elements():
        for j in group.elements():
            h = group.mul(group.inverse(i), j)
            G[i - 1, j - 1] = M.entry(i, h) * col_sums[h - 1]
    return G


# -- bounds and efficiency ----------------------------------------------


def hadamard_bound_squared(n: int) -> int:
    """n^n, the square of Hadamard's bound n^(n/2) (kept integral for odd n)."""
    return n**n


def ehlich_wojtas_bound(n: int) -> int:
    """(2n-2)(n-2)^((n-2)/2), the determinant bound for n = 2 mod 4."""
    if n % 4 != 2:
        raise ValueError(f"bound applies to n = 2 (mod 4), got n={n}")
    return (2 * n - 2) * (n - 2) ** ((n - 2) // 2)


def efficiency(detvalue: int, t: int) -> Fraction:
    """det / ((4t-2)(2t-2)^(t-1)) as an exact fraction."""
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t must be odd and >= 3, got {t}")
    return Fraction(detvalue, ehlich_wojtas_bound(2 * t))
