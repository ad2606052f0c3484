"""Compiled Gray-code scan over products of +-1 generator matrices.

Matrices are arrays of int64 row masks (bit j set iff entry j is -1),
so orders up to 62 fit.  Walking the subsets of ``gens`` in Gray-code
order changes the running product by one generator per step: one XOR
per row.  A normalized cocyclic product is Hadamard iff every row but
the first has exactly n/2 bits set.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_ORDER = 62

_M1 = 0x5555555555555555
_M2 = 0x3333333333333333
_M4 = 0x0F0F0F0F0F0F0F0F


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & _M1)
    x = (x & _M2) + ((x >> 2) & _M2)
    x = (x + (x >> 4)) & _M4
    x = x + (x >> 8)
    x = x + (x >> 16)
    x = x + (x >> 32)
    return x & 0x7F


@njit(cache=True)
def _balanced(cur, half):
    for r in range(1, cur.shape[0]):
        if _popcount(cur[r]) != half:
            return False
    return True


@njit(cache=True)
def gray_scan(base, gens):
    """Subset masks (bit b = gens[b]) whose product with ``base`` passes the row-sum test.

    Masks are returned in Gray-code visiting order, not sorted.
    """
    n = base.shape[0]
    k = gens.shape[0]
    half = n // 2
    cur = base.copy()
    out = np.empty(64, dtype=np.int64)
    count = 0
    mask = 0
    total = 1 << k
    for c in range(total):
        if c:
            b = 0
            while not (c >> b) & 1:
                b += 1
            mask ^= 1 << b
            g = gens[b]
            for r in range(n):
                cur[r] ^= g[r]
        if _balanced(cur, half):
            if count == out.shape[0]:
                grown = np.empty(2 * count, dtype=np.int64)
                grown[:count] = out
                out = grown
            out[count] = mask
            count += 1
    return out[:count].copy()


def as_rows(M) -> np.ndarray:
    return np.array(M.rows, dtype=np.int64)


def stack_rows(mats, n: int) -> np.ndarray:
    if not mats:
        return np.zeros((0, n), dtype=np.int64)
    return np.array([m.rows for m in mats], dtype=np.int64)


def scan(base, gens) -> list[int]:
    """Sorted subset masks of ``gens`` whose product with ``base`` is balanced."""
    if base.n > MAX_ORDER:
        raise ValueError(f"order {base.n} exceeds kernel limit {MAX_ORDER}")
    hits = gray_scan(as_rows(base), stack_rows(gens, base.n))
    return sorted(int(h) for h in hits)
