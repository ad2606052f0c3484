"""Cocyclic matrices over D_2m built from a basis of cocycles.

A basis for (normalized) cocycles over D_2m is

    odd m:   coboundaries d_2 .. d_{2m-1}  and  beta_2
    even m:  coboundaries d_2 .. d_{2m-2}  and  beta_1, beta_2, gamma

and every cocyclic matrix is the pointwise product of a subset of these.
A :class:`CocycleSpec` names such a subset.  Every factor squares to the
all-ones matrix, so specs combine by symmetric difference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .dihedral import DihedralGroup
from .signmatrix import SignMatrix


def delta_range(m: int) -> range:
    """Coboundary indices that belong to the basis for D_2m."""
    return range(2, 2 * m) if m % 2 else range(2, 2 * m - 1)


@dataclass(frozen=True)
class CocycleSpec:
    m: int
    deltas: tuple[int, ...] = ()
    k1: int = 0
    k2: int = 0
    k3: int = 0

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"half-order must be a positive integer, got {self.m!r}")
        ds = tuple(sorted(set(self.deltas)))
        object.__setattr__(self, "deltas", ds)
        allowed = delta_range(self.m)
        for d in ds:
            if d not in allowed:
                raise ValueError(
                    f"coboundary index {d} outside {allowed.start}..{allowed.stop - 1} for m={self.m}"
                )
        for name in ("k1", "k2", "k3"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"{name} must be 0 or 1")
        if self.m % 2 and (self.k1 or self.k3):
            raise ValueError("beta_1 and gamma exist only for even m")

    def __xor__(self, other: CocycleSpec) -> CocycleSpec:
        """Spec of the pointwise product of the two assembled matrices."""
        if other.m != self.m:
            raise ValueError("specs over different groups")
        return CocycleSpec(
            self.m,
            tuple(set(self.deltas) ^ set(other.deltas)),
            self.k1 ^ other.k1,
            self.k2 ^ other.k2,
            self.k3 ^ other.k3,
        )

    def to_text(self) -> str:
        d = ",".join(map(str, self.deltas))
        return f"m={self.m}; d={d}; k1={self.k1}; k2={self.k2}; k3={self.k3}"

    @classmethod
    def from_text(cls, text: str) -> CocycleSpec:
        fields = {}
        for part in text.strip().split(";"):
            part = part.strip()
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep:
                raise ValueError(f"malformed spec field {part!r}")
            fields[key.strip()] = value.strip()
        if set(fields) != {"m", "d", "k1", "k2", "k3"}:
            raise ValueError(f"spec must have fields m, d, k1, k2, k3: {text!r}")
        try:
            deltas = tuple(int(x) for x in re.split(r"\s*,\s*", fields["d"]) if x)
            return cls(
                int(fields["m"]), deltas, int(fields["k1"]), int(fields["k2"]), int(fields["k3"])
            )
        except ValueError as exc:
            raise ValueError(f"malformed spec {text!r}: {exc}") from None


def symdiff(*groups: Iterable[int]) -> tuple[int, ...]:
    acc: set[int] = set()
    for g in groups:
        acc ^= set(g)
    return tuple(sorted(acc))


# -- basis matrices -----------------------------------------------------


@lru_cache(maxsize=None)
def coboundary_matrix(m: int, d: int) -> SignMatrix:
    """Elementary coboundary from the characteristic map of g_d."""
    g = DihedralGroup(m)
    n = g.order
    if d == 1:
        raise ValueError("the trivial coboundary d=1 is excluded from the basis")
    if not 2 <= d <= n:
        raise ValueError(f"coboundary index {d} out of range 2..{n}")
    # entry (i, j) is -1 iff an odd number of g_i, g_j, g_i g_j equal g_d
    rows = []
    for i in g.elements():
        mask = 0
        for j in g.elements():
            hits = (i == d) + (j == d) + (g.mul(i, j) == d)
            if hits & 1:
                mask |= 1 << (j - 1)
        rows.append(mask)
    return SignMatrix(n, tuple(rows))


@lru_cache(maxsize=None)
def beta2_matrix(m: int) -> SignMatrix:
    """[[1, 1], [1, -1]] (x) J_m."""
    if m < 1:
        raise ValueError("m must be positive")
    low = (1 << m) - 1
    return SignMatrix(2 * m, (0,) * m + (low << m,) * m)


@lru_cache(maxsize=None)
def beta1_matrix(m: int) -> SignMatrix:
    """J_m (x) [[1, 1], [1, -1]]."""
    if m < 1:
        raise ValueError("m must be positive")
    odd_cols = sum(1 << (2 * k + 1) for k in range(m))
    return SignMatrix(2 * m, (0, odd_cols) * m)


@lru_cache(maxsize=None)
def gamma_matrix(m: int) -> SignMatrix:
    """Transgression cocycle [[A, A], [B, B]] for even m."""
    if m < 2 or m % 2:
        raise ValueError(f"gamma is defined only for even m, got {m}")
    rows = []
    for i in range(1, m + 1):
        a = sum(1 << (j - 1) for j in range(1, m + 1) if i + j > m + 1)
        rows.append(a | a << m)
    for i in range(1, m + 1):
        b = sum(1 << (j - 1) for j in range(1, m + 1) if i < j)
        rows.append(b | b << m)
    return SignMatrix(2 * m, tuple(rows))


def assemble(spec: CocycleSpec) -> SignMatrix:
    m = spec.m
    rows = [0] * (2 * m)

    def mix(M: SignMatrix):
        for i, r in enumerate(M.rows):
            rows[i] ^= r

    for d in spec.deltas:
        mix(coboundary_matrix(m, d))
    if spec.k1:
        mix(beta1_matrix(m))
    if spec.k2:
        mix(beta2_matrix(m))
    if spec.k3:
        mix(gamma_matrix(m))
    return SignMatrix(2 * m, tuple(rows))


def verify_cocycle(m: int, M: SignMatrix) -> bool:
    """Check psi(i,j) psi(ij,k) == psi(j,k) psi(i,jk) for every triple."""
    g = DihedralGroup(m)
    n = g.order
    if M.n != n:
        raise ValueError(f"matrix of order {M.n} cannot be a cocycle over D_{n}")
    E = M.to_lists()
    table = [[g.mul(i, j) - 1 for j in g.elements()] for i in g.elements()]
    for i in range(n):
        Ei, Ti = E[i], table[i]
        for j in range(n):
            eij = Ei[j]
            Eij = E[Ti[j]]
            Ej, Tj = E[j], table[j]
            for k in range(n):
                if eij * Eij[k] != Ej[k] * Ei[Tj[k]]:
                    return False
    return True
