import random
from itertools import combinations

import pytest

from mcohom import gf2
from mcohom.cohomology import (
    betti,
    betti_graded,
    classes_independent,
    d_apply,
    is_coboundary,
    is_cocycle,
)
from mcohom.combinatorics import split_pow2
from mcohom.exterior import ZERO, Form, e, enumerate_basis, pack_form, parse_form, render, wedge
from mcohom.lie import make_m0, make_m2, truncation_for_degree
from mcohom.maxclass import (
    B_set,
    D1_apply,
    D_apply,
    D_block,
    F,
    closed_betti,
    decompose_12,
    f_apply,
    h2_basis_m0n,
    h2_basis_m2n,
    h3_basis_m0n,
    h3_basis_m2n,
    infinite_H_basis,
    kerD3_dim_closed,
    kerD_basis_infinite,
    kerD_basis_truncated,
    kerD_dim,
    matrix_A,
    row_dependency,
    x_solution,
)
from reference_data import EXAMPLE_TABLE


def random_h_form(rng, q, k, n):
    return Form(m for m in enumerate_basis(q, k, 2, n) if rng.random() < 0.5)


def test_D_examples():
    assert D_apply(e(3, 4)) == e(2, 4)
    assert D_apply(e(2)) == ZERO
    assert D_apply(e(2, 3, 4)) == ZERO
    with pytest.raises(ValueError):
        D_apply(e(1, 3))


def test_D1_examples():
    assert D1_apply(e(1)) == ZERO
    assert D1_apply(e(4)) == e(3)
    assert D1_apply(e(1, 4)) == e(1, 3)


def test_F_examples():
    assert F(e(2), 2) == e(2, 3)
    assert F(e(3), 3) == e(3, 4) + e(2, 5)
    assert F(e(3, 4), 4) == e(3, 4, 5) + e(2, 4, 6) + e(2, 3, 7)
    # the e^{i,i+1} + e^{i-1,i+2} + ... + e^{2,2i-1} expansion
    assert F(e(4), 4) == e(4, 5) + e(3, 6) + e(2, 7)
    for i in range(2, 12):
        assert F(e(i), i) == Form((j, 2 * i + 1 - j) for j in range(2, i + 1))
    with pytest.raises(ValueError):
        F(e(3), 1)


def test_kerD_infinite_examples():
    assert kerD_basis_infinite(2, 5) == [e(2, 3)]
    assert kerD_basis_infinite(2, 6) == []
    assert kerD_basis_infinite(3, 9) == [F(e(2, 3), 3)] == [e(2, 3, 4)]


def test_kerD_truncated_examples():
    assert kerD_basis_truncated(2, 7, 7) == [e(3, 4) + e(2, 5)]
    assert sum(len(kerD_basis_truncated(3, k, 7)) for k in range(9, 19)) == 4
    assert kerD_basis_truncated(3, 9, 4) == [e(2, 3, 4)]


def test_kerD_truncated_rank2_matches_F_list():
    for n in range(3, 20):
        found = [w for k in range(5, 2 * n) for w in kerD_basis_truncated(2, k, n)]
        expected = [F(e(i), i) for i in range(2, (n + 1) // 2 + 1)]
        assert sorted(map(render, found)) == sorted(map(render, expected))


@pytest.mark.parametrize("q_plus_1", [2, 3])
def test_truncated_kernel_is_intersection(q_plus_1):
    # ker D over e^2..e^n = span(F-generators of the infinite algebra) ∩ Λ(e^2..e^n)
    for n in range(4, 14):
        for k in range(sum(range(2, q_plus_1 + 2)), sum(range(n - q_plus_1 + 1, n + 1)) + 1):
            gens = kerD_basis_infinite(q_plus_1, k)
            full = enumerate_basis(q_plus_1, k, 2, k)
            index = {m: j for j, m in enumerate(full)}
            outside = sum(1 << index[m] for m in full if m[-1] > n)
            words = [pack_form(w, index) for w in gens]
            projected = gf2.Echelon(w & outside for w in words)
            intersection_dim = len(words) - len(projected)
            brute = kerD_basis_truncated(q_plus_1, k, n)
            assert len(brute) == intersection_dim, (n, k)
            span = gf2.Echelon(words)
            assert all(span.contains(pack_form(w, index)) for w in brute)


def test_matrix_A_examples():
    s = matrix_A(7, 2)
    assert (s.a, s.b) == (4, 4)
    assert s.A.to_lists() == [[1]] and s.rhs == (1,)
    s = matrix_A(8, 2)
    assert (s.a, s.b) == (5, 5)
    assert s.A.to_lists() == [[1]]
    with pytest.raises(ValueError):
        matrix_A(8, 5)
    with pytest.raises(ValueError):
        matrix_A(3, 2)


def test_x_solution_examples():
    assert x_solution(7, 2) == (1,)
    assert x_solution(7, 2) == gf2.solve(matrix_A(7, 2).A, (1,))
    for k in (2, 3):
        s = matrix_A(12, k)
        assert s.A.matvec(x_solution(12, k)) == s.rhs
    with pytest.raises(ValueError):
        x_solution(9, 2)


def test_unsolvable_when_k_exceeds_m():
    for n in range(4, 41):
        _, m = split_pow2(n)
        for k in range(m + 1, n // 2 + 1):
            s = matrix_A(n, k)
            assert gf2.solve(s.A, s.rhs) is None
            assert not any(s.A.vecmat(row_dependency(n, k)))
    with pytest.raises(ValueError):
        row_dependency(12, 3)


def test_closed_betti_examples():
    assert closed_betti(7, 3) == 7
    assert closed_betti(16, 3) == 42
    assert closed_betti(20, 2) == 10
    assert closed_betti(3, 3) == 1
    assert closed_betti(11, 1) == 2
    with pytest.raises(ValueError):
        closed_betti(7, 4)


def test_b3_midpoint_recurrence():
    for n in range(5, 200, 2):
        assert 2 * closed_betti(n, 3) == closed_betti(n - 1, 3) + closed_betti(n + 1, 3)


def test_kernel_recurrence():
    for n in range(5, 27):
        _, m = split_pow2(n)
        assert kerD_dim(3, n) == kerD_dim(3, n - 1) + m - 1
        assert kerD_dim(3, n) == kerD3_dim_closed(n)
    assert kerD_dim(3, 4) == 1


def test_h2_bases():
    assert h2_basis_m0n(7) == [e(1, 7), e(2, 3), e(3, 4) + e(2, 5), e(4, 5) + e(3, 6) + e(2, 7)]
    assert h2_basis_m2n(7)[0] == e(1, 7) + e(2, 6)
    assert h2_basis_m2n(7)[1:] == h2_basis_m0n(7)[1:]
    for n in range(3, 16):
        g = make_m0(n)
        basis = h2_basis_m0n(n)
        assert len(basis) == (n + 1) // 2
        assert all(is_cocycle(g, w) and not is_coboundary(g, w) for w in basis)
        assert classes_independent(g, basis)
    for n in range(5, 16):
        g = make_m2(n)
        basis = h2_basis_m2n(n)
        assert all(is_cocycle(g, w) and not is_coboundary(g, w) for w in basis)
        assert classes_independent(g, basis) and len(basis) == betti(g, 2).betti


def test_B_sets_match_example_table():
    for t, entries in EXAMPLE_TABLE.items():
        got = [render(w) for w in B_set(t)]
        assert got == [render(parse_form(s)) for s in entries], t


def test_h3_basis_examples():
    b7 = h3_basis_m0n(7)
    assert e(3, 4, 5) + e(2, 4, 6) + e(2, 3, 7) in b7
    assert e(3, 5, 6) + e(2, 5, 7) + e(3, 4, 7) in b7
    b12 = h3_basis_m0n(12)
    assert parse_form(EXAMPLE_TABLE[12][2]) in b12
    for n in range(4, 27):
        assert len(h3_basis_m0n(n)) == closed_betti(n, 3)


def test_h3_basis_m2n_via_involution():
    for n in range(5, 15):
        g = make_m2(n)
        basis = h3_basis_m2n(n)
        assert all(w.max_index() <= n and is_cocycle(g, w) for w in basis)
        assert classes_independent(g, basis) and len(basis) == betti(g, 3).betti
    # f fixes the e^1-free elements but moves e^{1,i-1,i}
    for t in range(4, 15):
        assert all(f_apply(w) == w for w in B_set(t))
    assert f_apply(e(1, 6, 7)) == e(1, 6, 7) + e(2, 5, 7)


def test_decompose_examples():
    d = decompose_12(e(1, 4))
    assert (d.xi, d.eta, d.zeta) == (e(4), ZERO, ZERO)
    d = decompose_12(e(2, 3))
    assert (d.xi, d.eta, d.zeta) == (ZERO, e(3), ZERO)
    d = decompose_12(e(3, 4, 5))
    assert (d.xi, d.eta, d.zeta) == (ZERO, ZERO, e(3, 4, 5))
    w = e(1, 2, 5) + e(2, 3, 4) + e(3, 4, 6) + e(1, 3, 7)
    assert decompose_12(w).recompose() == w
    with pytest.raises(ValueError):
        decompose_12(e(1) + e(2, 3))


def test_f_examples():
    assert f_apply(e(1, 4)) == e(1, 4) + e(2, 3)
    assert f_apply(e(3, 4, 5)) == e(3, 4, 5)
    assert f_apply(e(4)) == e(4)
    rng = random.Random(11)
    for _ in range(200):
        w = Form(m for q in range(1, 5) for m in combinations(range(1, 9), q) if rng.random() < 0.05)
        assert f_apply(f_apply(w)) == w


def test_infinite_basis_examples():
    assert infinite_H_basis(2, 7) == [e(2, 3), e(3, 4) + e(2, 5)]
    assert infinite_H_basis(3, 9) == [e(2, 3, 4)]
    assert infinite_H_basis(1, 30, "m2") == [e(1), e(2)]
    assert infinite_H_basis(3, 20, "m0") == infinite_H_basis(3, 20, "m2")
    with pytest.raises(ValueError):
        infinite_H_basis(2, 10, "v")


def test_infinite_basis_classes_in_both_algebras():
    for q in (2, 3, 4):
        for w in infinite_H_basis(q, 24):
            k = max(w.degrees)
            for family in ("m0", "m2"):
                g = truncation_for_degree(family, k)
                assert is_cocycle(g, w) and not is_coboundary(g, w)
        for k in range(q * (q + 1) // 2, 25):
            part = [w for w in infinite_H_basis(q, 24) if w.degrees == {k}]
            for family in ("m0", "m2"):
                g = truncation_for_degree(family, k)
                assert len(part) == betti_graded(g, q, k).betti
                assert classes_independent(g, part)


def test_d_factors_through_D():
    rng = random.Random(32)
    g = make_m0(14)
    for _ in range(200):
        q = rng.randint(1, 4)
        w = random_h_form(rng, q, rng.randint(sum(range(2, q + 2)), 30), 14)
        assert d_apply(g, w) == wedge(e(1), D_apply(w))


def test_DF_identity():
    rng = random.Random(33)
    for _ in range(200):
        q = rng.randint(1, 3)
        w = random_h_form(rng, q, rng.randint(sum(range(2, q + 2)), 20), 10)
        i = rng.randint(2, 10)
        assert D_apply(F(w, i)) == wedge(w, e(i))


def test_D_surjective_blocks():
    for q in range(1, 5):
        for k in range(sum(range(2, q + 2)) + 1, 26):
            _, target, M = D_block(q, k, k)
            assert gf2.rank(M) == len(target), (q, k)
