import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcohom.gf2 import (
    BooleanMatrix,
    Echelon,
    in_span,
    kernel_basis,
    pack,
    rank,
    solve,
    unpack,
)


def span_rank(rows):
    """log2 of the number of distinct row combinations."""
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


@st.composite
def matrices(draw, max_rows=8, max_cols=8):
    nr = draw(st.integers(1, max_rows))
    nc = draw(st.integers(1, max_cols))
    data = draw(st.lists(st.lists(st.integers(0, 1), min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    return BooleanMatrix.from_lists(data)


def test_rank_trivial_cases():
    assert rank(BooleanMatrix.identity(3)) == 3
    assert rank(BooleanMatrix.zeros(2, 5)) == 0


def test_rank_random_6x6_against_enumeration():
    rng = random.Random(6)
    for _ in range(20):
        M = BooleanMatrix.from_lists([[rng.randint(0, 1) for _ in range(6)] for _ in range(6)])
        assert rank(M) == span_rank(M.rows)


def test_kernel_examples():
    assert kernel_basis(BooleanMatrix.from_lists([[1, 1]])) == [(1, 1)]
    assert kernel_basis(BooleanMatrix.identity(4)) == []


def test_kernel_random_5x7():
    rng = random.Random(57)
    for _ in range(20):
        M = BooleanMatrix.from_lists([[rng.randint(0, 1) for _ in range(7)] for _ in range(5)])
        kb = kernel_basis(M)
        assert len(kb) == 7 - span_rank(M.rows)
        assert all(not any(M.matvec(v)) for v in kb)
        assert span_rank([pack(v) for v in kb]) == len(kb)


def test_solve_examples():
    assert solve(BooleanMatrix.from_lists([[1]]), (1,)) == (1,)
    assert solve(BooleanMatrix.from_lists([[0]]), (1,)) is None
    # A for n=7, k=2 is the 1x1 matrix [C(3,2) mod 2] = [1]
    assert solve(BooleanMatrix.from_lists([[1]]), (1,)) == (1,)
    with pytest.raises(ValueError):
        solve(BooleanMatrix.identity(2), (1,))


def test_in_span_examples():
    assert in_span([(1, 0)], (1, 0))
    assert in_span([], (0, 0))
    assert in_span([(1, 1, 0), (0, 1, 1)], (1, 0, 1))
    assert not in_span([(1, 1, 0), (0, 1, 1)], (1, 0, 0))
    with pytest.raises(ValueError):
        in_span([(1, 0)], (1, 0, 0))


def test_matrix_construction_checks():
    with pytest.raises(ValueError):
        BooleanMatrix.from_lists([[1, 0], [1]])
    with pytest.raises(ValueError):
        BooleanMatrix.from_lists([[2, 0]])
    with pytest.raises(ValueError):
        BooleanMatrix(1, 2, (4,))
    M = BooleanMatrix.from_lists([[1, 0, 1], [0, 1, 1]])
    with pytest.raises(AttributeError):
        M.rows = (0, 0)
    assert M.entry(0, 2) == 1 and M.entry(1, 0) == 0
    assert M.transpose().to_lists() == [[1, 0], [0, 1], [1, 1]]
    assert BooleanMatrix.from_columns(M.columns(), 2) == M
    assert (M @ M.transpose()).to_lists() == [[0, 1], [1, 0]]


def test_pack_roundtrip():
    assert unpack(pack((1, 0, 1, 1)), 4) == (1, 0, 1, 1)


@given(matrices())
def test_rank_plus_nullity(M):
    assert rank(M) + len(kernel_basis(M)) == M.ncols


@given(matrices())
def test_rank_matches_span_oracle(M):
    assert rank(M) == span_rank(M.rows)


@given(matrices(), st.data())
def test_solve_contract(M, data):
    b = tuple(data.draw(st.lists(st.integers(0, 1), min_size=M.nrows, max_size=M.nrows)))
    x = solve(M, b)
    if x is not None:
        assert M.matvec(x) == b
    else:
        augmented = BooleanMatrix(M.nrows, M.ncols + 1,
                                  tuple(r | (bi << M.ncols) for r, bi in zip(M.rows, b)))
        assert rank(augmented) == rank(M) + 1


@settings(max_examples=50)
@given(matrices(), st.randoms(use_true_random=False))
def test_rank_permutation_invariant(M, rnd):
    rows = M.to_lists()
    rnd.shuffle(rows)
    perm = list(range(M.ncols))
    rnd.shuffle(perm)
    shuffled = BooleanMatrix.from_lists([[r[p] for p in perm] for r in rows])
    assert rank(shuffled) == rank(M)


def test_kernel_is_deterministic():
    M = BooleanMatrix.from_lists([[1, 1, 0, 1], [0, 1, 1, 0]])
    assert kernel_basis(M) == kernel_basis(M)
    assert kernel_basis(M) == [(1, 1, 1, 0), (1, 0, 0, 1)]


def test_echelon_normal_forms_are_canonical():
    ech = Echelon([0b0110, 0b0011])
    assert len(ech) == 2
    assert not ech.add(0b0101)
    # vectors equal modulo the span reduce to the same word
    assert ech.reduce(0b1000) == ech.reduce(0b1000 ^ 0b0101)
    assert ech.contains(0b0101)
