from fractions import Fraction

import pytest
from conftest import SYLVESTER4, random_sign_matrix

from cocyclic import (
    CocycleSpec,
    SignMatrix,
    assemble,
    cp_transform,
    determinant,
    embedded_minor_value,
    enumerate_hadamard,
    extension_maxdet_check,
    ge_complete_pivoting,
    growth_factor,
    is_cp,
    pivots_from_minors,
    restrict_matrix,
)
from cocyclic.pivots import border_completions
from cocyclic.signmatrix import bareiss_det

D10_PIVOTS = [1, 2, 2, 4, 3, Fraction(10, 3), Fraction(16, 5), 5, Fraction(24, 5), 6]


def fraction_ge(M):
    """Oracle: textbook complete pivoting on Fractions, tracking every entry."""
    a = [[Fraction(x) for x in row] for row in M.to_lists()]
    n = len(a)
    pivots, biggest = [], max(abs(x) for row in a for x in row)
    exchanged = False
    for k in range(n):
        cands = [(abs(a[i][j]), i, j) for i in range(k, n) for j in range(k, n)]
        best = max(c[0] for c in cands)
        if best == 0:
            pivots += [Fraction(0)] * (n - k)
            break
        if abs(a[k][k]) == best:
            i, j = k, k
        else:
            i, j = min((i, j) for v, i, j in cands if v == best)
            exchanged = True
        a[k], a[i] = a[i], a[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        p = a[k][k]
        pivots.append(abs(p))
        for r in range(k + 1, n):
            f = a[r][k] / p
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
                biggest = max(biggest, abs(a[r][c]))
    return pivots, biggest, not exchanged


def test_d10_pivot_pattern(D10):
    rep = ge_complete_pivoting(D10)
    assert list(rep.pivots) == D10_PIVOTS
    assert rep.growth == 6 and growth_factor(D10) == 6
    assert rep.was_cp and is_cp(D10)
    assert pivots_from_minors(D10) == D10_PIVOTS


def test_sylvester_and_trivial():
    rep = ge_complete_pivoting(SYLVESTER4)
    assert list(rep.pivots) == [1, 2, 2, 4] and rep.growth == 4
    one = ge_complete_pivoting(SignMatrix.from_entries([[1]]))
    assert list(one.pivots) == [1] and one.growth == 1
    assert pivots_from_minors(SignMatrix.from_entries([[1, 1], [1, -1]])) == [1, 2]


def test_matches_fraction_oracle(rng):
    for _ in range(150):
        M = random_sign_matrix(rng, rng.randint(1, 9))
        rep = ge_complete_pivoting(M)
        pivots, biggest, cp = fraction_ge(M)
        assert list(rep.pivots) == pivots
        assert rep.max_entry == biggest
        assert rep.was_cp == cp


def test_non_cp_permutation(D10):
    swapped = D10.permute([3, 1, 2, 0, 4, 5, 6, 7, 8, 9], range(10))
    assert not is_cp(swapped)
    with pytest.raises(ValueError):
        pivots_from_minors(swapped)


def test_cp_transform(D10):
    T, rp, cp = cp_transform(D10)
    assert T == D10 and rp == tuple(range(10)) and cp == tuple(range(10))
    rev = D10.permute(range(10), range(9, -1, -1))
    T, _, _ = cp_transform(rev)
    assert is_cp(T)
    assert pivots_from_minors(T) == D10_PIVOTS


def test_cp_pivots_equal_minor_ratios(rng):
    done = 0
    while done < 200:
        M = random_sign_matrix(rng, rng.randint(1, 12))
        if determinant(M) == 0:
            continue
        T, _, _ = cp_transform(M)
        assert is_cp(T)
        rep = ge_complete_pivoting(T)
        assert list(rep.pivots) == pivots_from_minors(T)
        assert rep.pivots == ge_complete_pivoting(M).pivots
        done += 1


def test_pivot_product_is_determinant(rng):
    done = 0
    while done < 200:
        M = random_sign_matrix(rng, rng.randint(1, 12))
        d = determinant(M)
        if d == 0:
            continue
        prod = Fraction(1)
        for p in ge_complete_pivoting(M).pivots:
            prod *= p
        assert prod == d
        done += 1


def test_singular_input():
    rep = ge_complete_pivoting(SignMatrix.ones(4))
    assert rep.singular and rep.rank == 1
    assert list(rep.pivots) == [1, 0, 0, 0]
    assert is_cp(SignMatrix.ones(4))
    assert pivots_from_minors(SignMatrix.ones(3)) == [1, 0, None]


@pytest.mark.parametrize("t", [3, 5])
def test_growth_of_hadamard_family(t):
    n = 4 * t
    for spec in enumerate_hadamard(t):
        T, _, _ = cp_transform(assemble(spec))
        assert is_cp(T)
        g = growth_factor(T)
        assert g <= n, f"growth {g} exceeds order {n} for {spec.to_text()}"


def test_extension_check_d10(D10):
    best, count = extension_maxdet_check(D10.submatrix(range(7)))
    assert best <= 2560
    assert best == determinant(D10.submatrix(range(8)))
    assert count >= 1


def test_extension_check_matches_independent_enumeration():
    core = SignMatrix.ones(7)
    best, count = extension_maxdet_check(core)
    # oracle: walk completions by an integer counter, different order and code path
    dets = []
    for c in range(1 << 13):
        bits = [-1 if c >> b & 1 else 1 for b in range(13)]
        rows = [[1] * 7 + [1]] + [[1] * 7 + [bits[i]] for i in range(6)]
        rows.append([1] + bits[6:])
        dets.append(abs(bareiss_det(rows)))
    assert best == max(dets)
    assert count == dets.count(best)


def test_border_completion_count():
    assert sum(1 for _ in border_completions([[1] * 7 for _ in range(7)])) == 2**13


def test_embedded_minor_value(D10):
    H = assemble(CocycleSpec(10, (2, 4, 8, 10, 13, 14), 0, 1, 1))
    assert embedded_minor_value(H) == 64000 == 125 * 2**9
    assert embedded_minor_value(SignMatrix.ones(20)) == 0
    dopt = [s for s in enumerate_hadamard(5) if embedded_minor_value(assemble(s)) == 73728]
    assert len(dopt) == 100
    assert all(determinant(restrict_matrix(assemble(s))) == 73728 for s in dopt)
