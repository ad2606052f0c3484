"""Bundled reference data: the order-10 D-optimal design, the order-20
worked example and the reference determinant spectra for t = 3, 5, 7."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .cocycle import CocycleSpec
from .signmatrix import SignMatrix


def _read(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text()


def d10() -> SignMatrix:
    return SignMatrix.from_text(_read("d10.mat"))


def d20_example() -> CocycleSpec:
    return CocycleSpec.from_text(_read("d20_example.spec"))


@dataclass(frozen=True)
class ReferenceRow:
    t: int
    hadamard_total: int
    det_over_pow2: int
    count: int
    distinct: int
    re: int
    r_printed: str

    @property
    def det(self) -> int:
        return self.det_over_pow2 << (2 * self.t - 1)


def reference_table(t: int | None = None) -> list[ReferenceRow]:
    rows = []
    for line in _read("spectra.txt").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        f = line.split()
        row = ReferenceRow(*map(int, f[:6]), f[6])
        if t is None or row.t == t:
            rows.append(row)
    return rows
