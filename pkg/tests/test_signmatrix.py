from fractions import Fraction

import numpy as np
import pytest
import sympy
from conftest import SYLVESTER4, random_sign_matrix, random_spec
from hypothesis import given
from hypothesis import strategies as st

from cocyclic import (
    CocycleSpec,
    DihedralGroup,
    SignMatrix,
    assemble,
    determinant,
    efficiency,
    gram_rows,
    gram_rows_cocyclic,
    hadamard_test,
    principal_minors,
    row_excess,
)
from cocyclic.signmatrix import (
    ehlich_wojtas_bound,
    gram_cols,
    gram_cols_cocyclic,
    is_hadamard,
    signed_determinant,
)


def sympy_det(M):
    return int(sympy.Matrix(M.to_lists()).det(method="berkowitz"))


def test_determinant_small_cases(D10):
    assert determinant(SignMatrix.from_entries([[1]])) == 1
    assert determinant(SignMatrix.from_entries([[1, 1], [1, -1]])) == 2
    assert determinant(SignMatrix.ones(5)) == 0
    assert determinant(D10) == 73728 == 144 * 2**9
    assert determinant(D10) == ehlich_wojtas_bound(10)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 11])
def test_determinant_matches_sympy(rng, n):
    for _ in range(20):
        M = random_sign_matrix(rng, n)
        assert signed_determinant(M) == sympy_det(M)


def test_determinant_metamorphic(rng):
    for _ in range(50):
        n = rng.randint(2, 10)
        M = random_sign_matrix(rng, n)
        rp, cp = list(range(n)), list(range(n))
        rng.shuffle(rp)
        rng.shuffle(cp)
        P = M.permute(rp, cp)
        neg = rng.randrange(n)
        rows = list(P.rows)
        rows[neg] ^= (1 << n) - 1
        assert determinant(SignMatrix(n, tuple(rows))) == determinant(M)
        assert determinant(M.transpose()) == determinant(M)


def test_hadamard_bound(rng):
    for _ in range(100):
        n = rng.randint(1, 9)
        M = random_sign_matrix(rng, n)
        assert determinant(M) ** 2 <= n**n


@pytest.mark.parametrize("t", [3, 5])
def test_hadamard_specs_meet_hadamard_bound(t):
    from cocyclic import enumerate_hadamard

    for spec in enumerate_hadamard(t):
        n = 4 * t
        assert determinant(assemble(spec)) == n ** (n // 2)


def test_principal_minors(D10):
    assert principal_minors(D10) == [1, 2, 4, 16, 48, 160, 512, 2560, 12288, 73728]
    assert principal_minors(SignMatrix.ones(4)) == [1, 0, 0, 0]
    assert principal_minors(SignMatrix.from_entries([[1, 1], [1, -1]])) == [1, 2]


def test_row_excess_examples():
    assert row_excess(SignMatrix.ones(6)) == 5 * 6
    assert row_excess(SYLVESTER4) == 0
    assert row_excess(assemble(CocycleSpec(10, (2, 4, 8, 10, 13, 14), 0, 1, 1))) == 0


@pytest.mark.parametrize("t", [3, 5, 7])
def test_row_excess_lower_bound(rng, t):
    for _ in range(1000):
        M = assemble(random_spec(rng, t))
        assert row_excess(M) >= 2 * t - 2


def test_hadamard_test_examples():
    assert hadamard_test(assemble(CocycleSpec(10, (2, 4, 8, 10, 13, 14), 0, 1, 1)))
    assert not hadamard_test(SignMatrix.ones(4))
    assert hadamard_test(SYLVESTER4)


def test_hadamard_test_agrees_with_gram(rng):
    hits = 0
    for i in range(1000):
        m = (3, 5, 6, 10)[i % 4]
        # bias toward the beta_2 gamma family so that hits actually occur
        if m % 2 == 0 and i % 3 == 0:
            spec = CocycleSpec(m, random_spec(rng, m).deltas, 0, 1, 1)
        else:
            spec = random_spec(rng, m)
        M = assemble(spec)
        h = hadamard_test(M)
        hits += h
        assert h == is_hadamard(M)
    assert hits > 0


@pytest.mark.parametrize("m", [3, 5, 6, 10])
def test_gram_cocyclic_formula(rng, m):
    g = DihedralGroup(m)
    for _ in range(50):
        M = assemble(random_spec(rng, m))
        assert np.array_equal(gram_rows_cocyclic(M, g), gram_rows(M))
        assert np.array_equal(gram_cols_cocyclic(M, g), gram_cols(M))


def test_gram_examples():
    H = assemble(CocycleSpec(10, (2, 4, 8, 10, 13, 14), 0, 1, 1))
    assert np.array_equal(gram_rows(H), 20 * np.eye(20, dtype=int))
    assert (gram_rows(SignMatrix.ones(6)) == 6).all()
    G = gram_rows(assemble(CocycleSpec(5, (3, 7), 0, 1, 0)))
    assert (G == G.T).all() and (np.diag(G) == 10).all()


def test_efficiency_examples():
    assert efficiency(73728, 5) == 1
    assert efficiency(64000, 5) == Fraction(125, 144)
    assert round(float(efficiency(64000, 5)), 3) == 0.868
    assert efficiency(128, 3) == Fraction(4, 5)
    with pytest.raises(ValueError):
        efficiency(1, 4)


def test_text_format(D10):
    text = D10.to_text()
    assert text.splitlines()[0] == "10"
    assert text.splitlines()[1] == "-++++-++++"
    assert SignMatrix.from_text(text) == D10
    for bad in ["", "2\n++\n", "2\n+x\n--\n", "x\n"]:
        with pytest.raises(ValueError):
            SignMatrix.from_text(bad)


@given(st.integers(1, 12).flatmap(lambda n: st.lists(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_matrix_round_trip(entries):
    M = SignMatrix.from_entries(entries)
    assert M.to_lists() == entries
    assert SignMatrix.from_text(M.to_text()) == M


def test_rejects_non_sign_entries():
    with pytest.raises(ValueError):
        SignMatrix.from_entries([[1, 0], [1, 1]])
