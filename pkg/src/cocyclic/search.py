"""Exhaustive searches for D_4t-Hadamard matrices and their embedded D_2t-matrices.

Two routes to the determinant spectrum of embedded matrices:

* :func:`spectrum` walks every D_4t spec  d_{i1} ... d_{iw} beta_2 gamma,
  keeps the Hadamard ones and groups their restrictions by determinant.
* :func:`spectrum_via_embedding` walks the D_2t specs instead and asks,
  for each, which members of its extension family are Hadamard.

The search space for :func:`enumerate_hadamard` is indexed by a subset
counter: bit b selects d_{b+2}.  Results are always reported in ascending
counter order, whatever the chunking or worker count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .cocycle import (
    CocycleSpec,
    assemble,
    beta1_matrix,
    beta2_matrix,
    coboundary_matrix,
    gamma_matrix,
)
from .kernel import scan
from .restriction import ExtensionFamily, gamma_compensator
from .signmatrix import SignMatrix, determinant, efficiency, hadamard_test, row_excess


def check_t(t: int) -> None:
    if not isinstance(t, int) or t < 3 or t % 2 == 0:
        raise ValueError(f"t must be an odd integer >= 3, got {t!r}")


# -- Hadamard enumeration ---------------------------------------------------


def search_bits(t: int) -> int:
    """Number of coboundaries d_2 .. d_{4t-2} in the D_4t search space."""
    return 4 * t - 3


def hadamard_base(t: int) -> SignMatrix:
    return beta2_matrix(2 * t) * gamma_matrix(2 * t)


def hadamard_generators(t: int) -> list[SignMatrix]:
    return [coboundary_matrix(2 * t, d) for d in range(2, 4 * t - 1)]


def spec_from_counter(t: int, counter: int) -> CocycleSpec:
    deltas = tuple(b + 2 for b in range(search_bits(t)) if counter >> b & 1)
    return CocycleSpec(2 * t, deltas, 0, 1, 1)


def counter_from_spec(spec: CocycleSpec) -> int:
    return sum(1 << (d - 2) for d in spec.deltas)


def scan_range(t: int, chunk: int, low_bits: int) -> list[int]:
    """Hadamard counters in [chunk << low_bits, (chunk + 1) << low_bits), sorted.

    Every hit is re-checked with the plain row-sum test on the assembled
    matrix before it is reported.
    """
    check_t(t)
    gens = hadamard_generators(t)
    base = hadamard_base(t)
    for b in range(low_bits, len(gens)):
        if chunk >> (b - low_bits) & 1:
            base = base * gens[b]
    hits = [(chunk << low_bits) | low for low in scan(base, gens[:low_bits])]
    for h in hits:
        if not hadamard_test(assemble(spec_from_counter(t, h))):
            raise RuntimeError(f"kernel reported non-Hadamard counter {h} at t={t}")
    return hits


def enumerate_hadamard(t: int) -> Iterator[CocycleSpec]:
    check_t(t)
    for h in scan_range(t, 0, search_bits(t)):
        yield spec_from_counter(t, h)


# -- restriction of many specs at once ---------------------------------------


class Restrictor:
    """Restricted matrices for D_4t specs in the Hadamard search space.

    Even coboundaries restrict to J, so only the odd ones (and beta_2 gamma)
    contribute; their restricted row masks are precomputed.
    """

    def __init__(self, t: int):
        self.t = t
        keep = range(0, 4 * t, 2)
        self._base = hadamard_base(t).submatrix(keep).rows
        self._gens = {
            b: coboundary_matrix(2 * t, b + 2).submatrix(keep).rows
            for b in range(search_bits(t))
            if (b + 2) % 2
        }

    def rows(self, counter: int) -> tuple[int, ...]:
        rows = list(self._base)
        for b, g in self._gens.items():
            if counter >> b & 1:
                for i, r in enumerate(g):
                    rows[i] ^= r
        return tuple(rows)

    def matrix(self, counter: int) -> SignMatrix:
        return SignMatrix(2 * self.t, self.rows(counter))


# -- spectrum records ----------------------------------------------------------


@dataclass(frozen=True)
class SpectrumRecord:
    t: int
    det_tilde: int
    hadamard_count: int
    distinct_embedded: int
    re_tilde: int
    efficiency: Fraction

    @property
    def det_over_pow2(self) -> int:
        q, r = divmod(self.det_tilde, 1 << (2 * self.t - 1))
        if r:
            raise ValueError(f"det {self.det_tilde} not divisible by 2^(2t-1)")
        return q

    def to_line(self) -> str:
        return json.dumps(
            {
                "t": self.t,
                "det": self.det_tilde,
                "det_over_pow2": self.det_over_pow2,
                "count": self.hadamard_count,
                "distinct": self.distinct_embedded,
                "re": self.re_tilde,
                "efficiency_num": self.efficiency.numerator,
                "efficiency_den": self.efficiency.denominator,
            }
        )

    @classmethod
    def from_line(cls, line: str) -> SpectrumRecord:
        d = json.loads(line)
        rec = cls(
            d["t"], d["det"], d["count"], d["distinct"], d["re"],
            Fraction(d["efficiency_num"], d["efficiency_den"]),
        )
        if rec.det_over_pow2 != d["det_over_pow2"]:
            raise ValueError(f"inconsistent det_over_pow2 in {line!r}")
        return rec


def format_records(records: Iterable[SpectrumRecord]) -> str:
    return "".join(r.to_line() + "\n" for r in records)


def parse_records(text: str) -> list[SpectrumRecord]:
    return [SpectrumRecord.from_line(ln) for ln in text.splitlines() if ln.strip()]


class _Group:
    __slots__ = ("count", "keys")

    def __init__(self):
        self.count = 0
        self.keys = set()


def _finish(t: int, groups: dict, kappa: Fraction) -> list[SpectrumRecord]:
    out = []
    for (det, re), g in groups.items():
        eff = efficiency(det, t)
        if eff >= kappa:
            out.append(SpectrumRecord(t, det, g.count, len(g.keys), re, eff))
    out.sort(key=lambda r: (-r.det_tilde, r.re_tilde))
    return out


def records_from_hits(t: int, hits: Iterable[int], kappa=0) -> list[SpectrumRecord]:
    """Group Hadamard counters by (det, RE) of their restrictions."""
    kappa = Fraction(kappa)
    res = Restrictor(t)
    cache: dict[tuple[int, ...], tuple[int, int]] = {}
    groups: dict[tuple[int, int], _Group] = {}
    for h in hits:
        key = res.rows(h)
        if key not in cache:
            M = SignMatrix(2 * t, key)
            cache[key] = (determinant(M), row_excess(M))
        g = groups.setdefault(cache[key], _Group())
        g.count += 1
        g.keys.add(key)
    return _finish(t, groups, kappa)


def spectrum(t: int, kappa=0, workers: int = 1, chunk_size: int | None = None) -> list[SpectrumRecord]:
    from .checkpoint import run_chunked

    check_t(t)
    ck = run_chunked(t, chunk_size or default_chunk_size(t), workers=workers)
    return records_from_hits(t, ck.hits(), kappa)


def default_chunk_size(t: int) -> int:
    return 1 << min(search_bits(t), 20)


# -- embedding a D_2t matrix ----------------------------------------------------


def _family_scan(family: ExtensionFamily) -> list[int]:
    """Sorted member indices of ``family`` that are Hadamard."""
    t = family.t
    m = 2 * t
    base = assemble(CocycleSpec(m, family.lifted, 0, 1, 0))
    gens = [coboundary_matrix(m, 2 * i) for i in range(1, 2 * t)]
    twist = gamma_matrix(m)
    for d in gamma_compensator(t):
        twist = twist * coboundary_matrix(m, d)
    gens.append(twist)
    if family.with_beta1:
        gens.append(beta1_matrix(m))
    return scan(base, gens)


def embed_search(seed: CocycleSpec, with_beta1: bool = False) -> CocycleSpec | None:
    """First Hadamard member of the extension family of ``seed``, or None.

    By default only the beta_1-free part of the family is searched.
    """
    family = ExtensionFamily(seed, with_beta1)
    for idx in _family_scan(family):
        phi = family[idx]
        if hadamard_test(assemble(phi)):
            return phi
        raise RuntimeError(f"kernel reported non-Hadamard member {idx}")
    return None


def tilde_seeds(t: int) -> Iterator[CocycleSpec]:
    """All D_2t specs d~_{i1} ... d~_{iw} beta~_2, in ascending subset order."""
    check_t(t)
    k = 2 * t - 2
    for c in range(1 << k):
        yield CocycleSpec(t, tuple(b + 2 for b in range(k) if c >> b & 1), 0, 1, 0)


def spectrum_via_embedding(t: int, kappa=0) -> list[SpectrumRecord]:
    """Spectrum built from the D_2t side.

    Counts cover Hadamard extensions carrying gamma, matching the
    population of :func:`spectrum`; a determinant is listed only if some
    seed with that determinant embeds.
    """
    kappa = Fraction(kappa)
    groups: dict[tuple[int, int], _Group] = {}
    gamma_bit = 1 << (2 * t - 1)
    for seed in tilde_seeds(t):
        M = assemble(seed)
        det = determinant(M)
        if efficiency(det, t) < kappa:
            continue
        hits = _family_scan(ExtensionFamily(seed, with_beta1=False))
        with_gamma = sum(1 for h in hits if h & gamma_bit)
        if not with_gamma:
            continue
        g = groups.setdefault((det, row_excess(M)), _Group())
        g.count += with_gamma
        g.keys.add(M.rows)
    return _finish(t, groups, kappa)
