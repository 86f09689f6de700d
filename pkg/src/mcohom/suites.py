"""Named verification suites run by ``mcohom verify``.

Each suite yields :class:`Check` records; a failed check carries the first
counterexample found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from . import gf2
from .cohomology import betti, betti_graded, classes_independent, d_apply, is_cocycle
from .combinatorics import partitions_exact, split_pow2
from .exterior import Form, pack_form, render
from .lie import make_m0, make_m2, truncation_for_degree
from .maxclass import (
    D_block,
    closed_betti,
    f_apply,
    h3_basis_m0n,
    infinite_H_basis,
    kerD_basis_infinite,
    kerD_dim,
    matrix_A,
    row_dependency,
    x_solution,
)

B3_TABLE = {
    3: 1, 4: 2, 5: 3, 6: 4, 7: 7, 8: 10, 9: 11, 10: 12, 11: 15,
    12: 18, 13: 23, 14: 28, 15: 35, 16: 42, 17: 43, 18: 44, 19: 47, 20: 50,
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _first_failure(name: str, items, test: Callable) -> Check:
    count = 0
    for item in items:
        count += 1
        msg = test(item)
        if msg:
            return Check(name, False, msg)
    return Check(name, True, f"{count} cases")


def suite_b3_table() -> Iterator[Check]:
    def test(n):
        got = betti(make_m0(n), 3).betti
        if got != B3_TABLE[n]:
            return f"n={n}: brute force b3={got}, table {B3_TABLE[n]}"
    yield _first_failure("b3(m0(n)) matches table, n=3..20", sorted(B3_TABLE), test)


def suite_closed_forms() -> Iterator[Check]:
    for q, ns in ((1, range(3, 41)), (2, range(3, 41)), (3, range(4, 27))):
        def test(n, q=q):
            got = betti(make_m0(n), q).betti
            if got != closed_betti(n, q):
                return f"n={n}: b{q}={got}, closed form {closed_betti(n, q)}"
        yield _first_failure(f"closed-form b{q}(m0(n)), n={ns.start}..{ns.stop - 1}", ns, test)
    for q in (1, 2, 3):
        def test(n, q=q):
            b0, b2 = betti(make_m0(n), q).betti, betti(make_m2(n), q).betti
            if b0 != b2:
                return f"n={n}: b{q}(m0)={b0}, b{q}(m2)={b2}"
        yield _first_failure(f"b{q}(m2(n)) = b{q}(m0(n)), n=5..24", range(5, 25), test)


def _monomials(max_rank: int, max_index: int):
    for q in range(1, max_rank + 1):
        for m in combinations(range(1, max_index + 1), q):
            yield Form([m])


def suite_interweaving(max_rank: int = 4, max_index: int = 12) -> Iterator[Check]:
    g0, g2 = make_m0(max_index), make_m2(max_index)

    def involution(w):
        if f_apply(f_apply(w)) != w:
            return f"f(f(w)) != w for w={render(w)}"

    def weave(w):
        if f_apply(d_apply(g0, w)) != d_apply(g2, f_apply(w)):
            return f"f d0 w != d2 f w for w={render(w)}"
        if f_apply(d_apply(g2, w)) != d_apply(g0, f_apply(w)):
            return f"f d2 w != d0 f w for w={render(w)}"

    def graded(w):
        v = f_apply(w)
        if v and (v.ranks != w.ranks or v.degrees != w.degrees):
            return f"f changes rank/degree on {render(w)}"

    yield _first_failure("f is an involution", _monomials(max_rank, max_index), involution)
    yield _first_failure("f preserves rank and degree", _monomials(max_rank, max_index), graded)
    yield _first_failure("f d0 = d2 f and f d2 = d0 f", _monomials(max_rank, max_index), weave)


def suite_kernels() -> Iterator[Check]:
    def surjective(qk):
        q, k = qk
        _, target, M = D_block(q, k, k)
        if gf2.rank(M) != len(target):
            return f"D not onto at rank {q}, degree {k}"

    yield _first_failure(
        "D surjective on blocks, rank<=4, degree<=25",
        [(q, k) for q in range(1, 5) for k in range(3, 26)], surjective)

    def span_equivalence(qk):
        qp1, k = qk
        domain, _, M = D_block(qp1, k, k)
        index = {m: j for j, m in enumerate(domain)}
        gens = [pack_form(w, index) for w in kerD_basis_infinite(qp1, k)]
        dim_ker = M.ncols - gf2.rank(M)
        ech = gf2.Echelon(gens)
        if len(ech) != len(gens) or len(gens) != dim_ker:
            return f"rank {qp1}, degree {k}: {len(gens)} generators, kernel dim {dim_ker}"
        if any(M.matvec(gf2.unpack(w, M.ncols)) != (0,) * M.nrows for w in gens):
            return f"rank {qp1}, degree {k}: generator outside kernel"

    yield _first_failure(
        "F-generators span ker D, rank<=5, degree<=25",
        [(q, k) for q in range(2, 6) for k in range(3, 26)], span_equivalence)

    def recurrence(n):
        _, m = split_pow2(n)
        if kerD_dim(3, n) != kerD_dim(3, n - 1) + m - 1:
            return f"n={n}: d_n={kerD_dim(3, n)}, d_(n-1)+m-1={kerD_dim(3, n - 1) + m - 1}"

    yield _first_failure("kernel recurrence d_n = d_(n-1)+m-1, n=5..26", range(5, 27), recurrence)

    yield from suite_a_system()
    yield from suite_h3_basis()


def suite_a_system(n_max: int = 40) -> Iterator[Check]:
    cases = [(n, k) for n in range(4, n_max + 1) for k in range(2, n // 2 + 1)]

    def solvable(nk):
        n, k = nk
        _, m = split_pow2(n)
        sys_ = matrix_A(n, k)
        x = gf2.solve(sys_.A, sys_.rhs)
        if (x is not None) != (k <= m):
            return f"n={n}, k={k}, m={m}: solvable={x is not None}"

    def explicit(nk):
        n, k = nk
        _, m = split_pow2(n)
        sys_ = matrix_A(n, k)
        if k <= m:
            if sys_.A.matvec(x_solution(n, k)) != sys_.rhs:
                return f"n={n}, k={k}: A x != rhs"
        else:
            c = row_dependency(n, k)
            if c[0] != 1 or any(sys_.A.vecmat(c)):
                return f"n={n}, k={k}: row dependency fails"

    yield _first_failure(f"A x = (1,0,..) solvable iff k<=m, n=4..{n_max}", cases, solvable)
    yield _first_failure(f"explicit x / row dependency, n=4..{n_max}", cases, explicit)


def suite_h3_basis(n_max: int = 26) -> Iterator[Check]:
    def test(n):
        g = make_m0(n)
        basis = h3_basis_m0n(n)
        if len(basis) != closed_betti(n, 3):
            return f"n={n}: {len(basis)} elements, b3={closed_betti(n, 3)}"
        bad = [w for w in basis if w.max_index() > n or not is_cocycle(g, w)]
        if bad:
            return f"n={n}: not a cocycle: {render(bad[0])}"
        if not classes_independent(g, basis):
            return f"n={n}: dependent modulo coboundaries"

    yield _first_failure(f"explicit H^3(m0(n)) basis, n=4..{n_max}", range(4, n_max + 1), test)


def suite_partitions(k_max: int = 30) -> Iterator[Check]:
    cases = [(q, k) for q in (2, 3, 4) for k in range(q * (q + 1) // 2, k_max + 1)]
    bases = {q: infinite_H_basis(q, k_max) for q in (2, 3, 4)}

    def test(qk):
        q, k = qk
        count = sum(1 for w in bases[q] if w.degrees == {k})
        j = k - q * (q + 1) // 2
        formula = partitions_exact(j, q) - partitions_exact(j - 1, q)
        brute = betti_graded(truncation_for_degree("m0", k), q, k).betti
        if not count == formula == brute:
            return f"q={q}, degree {k}: basis {count}, partitions {formula}, brute force {brute}"

    yield _first_failure(f"graded dims of H^q(m0), q=2..4, degree<={k_max}", cases, test)


def suite_gf2_oracle(trials: int = 500, seed: int = 0) -> Iterator[Check]:
    rng = random.Random(seed)

    def span_rank(rows):
        span = {0}
        for r in rows:
            span |= {s ^ r for s in span}
        return len(span).bit_length() - 1

    def test(_):
        nr, nc = rng.randint(1, 8), rng.randint(1, 8)
        M = gf2.BooleanMatrix.from_lists([[rng.randint(0, 1) for _ in range(nc)] for _ in range(nr)])
        r = gf2.rank(M)
        if r != span_rank(M.rows):
            return f"rank mismatch on {M.to_lists()}"
        kb = gf2.kernel_basis(M)
        null = sum(1 for x in range(1 << nc) if not any(M.matvec(gf2.unpack(x, nc))))
        if len(kb) != nc - r or null != 1 << len(kb):
            return f"kernel mismatch on {M.to_lists()}"
        b = tuple(rng.randint(0, 1) for _ in range(nr))
        x = gf2.solve(M, b)
        exists = any(M.matvec(gf2.unpack(y, nc)) == b for y in range(1 << nc))
        if (x is not None) != exists or (x is not None and M.matvec(x) != b):
            return f"solve mismatch on {M.to_lists()}, b={b}"

    yield _first_failure(f"rank/kernel/solve vs enumeration, {trials} matrices", range(trials), test)


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "paper-table": suite_b3_table,
    "closed-forms": suite_closed_forms,
    "interweaving": suite_interweaving,
    "kernels": suite_kernels,
    "partitions": suite_partitions,
    "gf2-oracle": suite_gf2_oracle,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    try:
        return list(SUITES[name]())
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
