"""Gaussian elimination with complete pivoting, in exact arithmetic.

Pivot choice at step k: the largest-magnitude entry of the trailing
submatrix.  If the entry already at (k, k) attains the maximum it is kept;
otherwise ties go to the smallest row, then the smallest column.  The
tie-break matters because pivot patterns are not invariant under
Hadamard equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .restriction import restrict_matrix
from .signmatrix import SignMatrix, bareiss_det, determinant, principal_minors


@dataclass(frozen=True)
class PivotReport:
    n: int
    pivots: tuple[Fraction, ...]
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    growth: Fraction
    max_entry: Fraction
    was_cp: bool
    rank: int

    @property
    def singular(self) -> bool:
        return self.rank < self.n

    def format_pivots(self) -> str:
        return " ".join(str(p) for p in self.pivots)

    def to_line(self) -> str:
        """Machine-readable single line: key=value fields, exact fractions."""
        return (
            f"n={self.n} pivots={','.join(map(str, self.pivots))} "
            f"growth={self.growth} cp={str(self.was_cp).lower()} rank={self.rank} "
            f"row_perm={','.join(str(i + 1) for i in self.row_perm)} "
            f"col_perm={','.join(str(j + 1) for j in self.col_perm)}"
        )


def _eliminate(a: list[list[int]]) -> PivotReport:
    """Fraction-free elimination with complete pivoting.

    After k steps the working entries are the true Schur-complement entries
    times the signed product ``prev`` of the first k pivots, so magnitudes
    within a step compare as integers and each true pivot is |a_kk| / |prev|.
    """
    n = len(a)
    rp = list(range(n))
    cp = list(range(n))
    pivots: list[Fraction] = []
    was_cp = True
    rank = n
    prev = 1
    for k in range(n):
        best = abs(a[k][k])
        bi, bj = k, k
        for i in range(k, n):
            row = a[i]
            for j in range(k, n):
                v = abs(row[j])
                if v > best:
                    best, bi, bj = v, i, j
        if best == 0:
            rank = k
            pivots.extend([Fraction(0)] * (n - k))
            break
        if (bi, bj) != (k, k):
            was_cp = False
            a[k], a[bi] = a[bi], a[k]
            rp[k], rp[bi] = rp[bi], rp[k]
            for row in a:
                row[k], row[bj] = row[bj], row[k]
            cp[k], cp[bj] = cp[bj], cp[k]
        piv = a[k][k]
        pivots.append(Fraction(abs(piv), abs(prev)))
        rowk = a[k]
        for i in range(k + 1, n):
            row = a[i]
            aik = row[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * piv - aik * rowk[j]) // prev
            row[k] = 0
        prev = piv
    # under complete pivoting each step's largest entry is its pivot
    biggest = max(pivots, default=Fraction(0))
    growth = biggest / pivots[0] if pivots and pivots[0] else Fraction(0)
    return PivotReport(n, tuple(pivots), tuple(rp), tuple(cp), growth, biggest, was_cp, rank)


def ge_complete_pivoting(M: SignMatrix) -> PivotReport:
    return _eliminate(M.to_lists())


def is_cp(M: SignMatrix) -> bool:
    return ge_complete_pivoting(M).was_cp


def cp_transform(M: SignMatrix) -> tuple[SignMatrix, tuple[int, ...], tuple[int, ...]]:
    """Permute M so that complete pivoting needs no exchanges.

    Returns the permuted matrix and the 0-based row and column orders;
    no negations are applied.
    """
    rep = ge_complete_pivoting(M)
    return M.permute(rep.row_perm, rep.col_perm), rep.row_perm, rep.col_perm


def pivots_from_minors(M: SignMatrix) -> list[Fraction | None]:
    """p_j = A(j) / A(j-1) from exact leading minors, for a CP matrix.

    After a zero minor the remaining ratios are undefined and given as None.
    """
    if not is_cp(M):
        raise ValueError("pivot/minor identity holds only for completely pivoted matrices")
    out: list[Fraction | None] = []
    prev = 1
    for a in principal_minors(M):
        if prev == 0:
            out.append(None)
        else:
            out.append(Fraction(a, prev))
        prev = a
    return out


def growth_factor(M: SignMatrix) -> Fraction:
    return ge_complete_pivoting(M).growth


def embedded_minor_value(H: SignMatrix) -> int:
    """|det| of the odd-index restriction of an order-4t matrix."""
    return determinant(restrict_matrix(H))


def border_completions(core: list[list[int]], corner_row: int = 1, corner_col: int = 1):
    """All (n+1)x(n+1) matrices bordering ``core`` with free +-1 cells.

    The new column is ``corner_row`` in row 1 and free below; the new row
    is ``corner_col`` in column 1 and free elsewhere (including the new
    diagonal cell): 2n - 1 free cells in all.
    """
    n = len(core)
    free = 2 * n - 1
    for bits in product((1, -1), repeat=free):
        col = (corner_row,) + bits[: n - 1]
        last = [corner_col, *bits[n - 1:]]
        yield [list(r) + [c] for r, c in zip(core, col)] + [last]


def extension_maxdet_check(core: SignMatrix, corner_row: int = 1, corner_col: int = 1) -> tuple[int, int]:
    """Max |det| over every bordered completion of ``core``, and how many attain it."""
    best, count = -1, 0
    for a in border_completions(core.to_lists(), corner_row, corner_col):
        d = abs(bareiss_det(a))
        if d > best:
            best, count = d, 1
        elif d == best:
            count += 1
    return best, count
