"""Closed forms and explicit cocycles for the maximal-class algebras m0, m2.

``D`` acts on forms over ``e^2, e^3, ...`` by ``De^2 = 0``, ``De^i = e^{i-1}``
(a derivation), and satisfies ``d_0 w = e^1 ∧ Dw`` in m0.  ``D1`` extends it
by ``D1 e^1 = 0``.  ``F(w, i) = sum_l D^l w ∧ e^{i+1+l}``.

Note: for ``F(e^i, i)`` the sum expands to
``e^{i,i+1} + e^{i-1,i+2} + ... + e^{2,2i-1}``; the second term is sometimes
quoted as ``e^{i-1,i+3}``, which does not have the right degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .combinatorics import binom_mod2, split_pow2
from .exterior import Form, Monomial, ZERO, e, enumerate_basis, wedge
from .gf2 import BooleanMatrix, kernel_words
from .exterior import unpack_form

Family = Literal["m0", "m2"]


def _lower(f: Form, floor: int) -> Form:
    """Derivation with ``e^i -> e^{i-1}`` for ``i > floor`` and ``e^i -> 0`` otherwise."""
    out: set[Monomial] = set()
    for m in f.terms:
        s = set(m)
        for t, idx in enumerate(m):
            if idx <= floor or (idx - 1) in s:
                continue
            out ^= {m[:t] + (idx - 1,) + m[t + 1:]}
    return Form(out)


def D_apply(f: Form) -> Form:
    if any(m and m[0] == 1 for m in f.terms):
        raise ValueError("D is defined only on forms without e^1")
    return _lower(f, 2)


def D1_apply(f: Form) -> Form:
    return _lower(f, 2)


def F(omega: Form, i: int) -> Form:
    """``sum_{l >= 0} D^l(omega) ∧ e^{i+1+l}``; the sum stops once ``D^l omega`` vanishes."""
    if i < 2:
        raise ValueError(f"F needs i >= 2, got {i}")
    out = ZERO
    cur = omega
    l = 0
    while cur:
        out = out + wedge(cur, e(i + 1 + l))
        cur = D_apply(cur)
        l += 1
    return out


def F_mono(indices: Monomial) -> Form:
    """``F(e^{i1...iq}, i_q)``, the generator attached to an index tuple."""
    return F(e(*indices), indices[-1])


def _F_sources(q: int, k: int) -> list[Monomial]:
    """Index tuples ``2 <= i1 < ... < iq`` with ``i_q + 1 + sum = k``."""
    out = []
    top = 2
    while 2 * top + 1 <= k:
        for rest in enumerate_basis(q - 1, k - 1 - 2 * top, 2, top - 1):
            out.append(rest + (top,))
        top += 1
    return sorted(out)


def kerD_basis_infinite(q_plus_1: int, k: int) -> list[Form]:
    """``F(e^{i1..iq}, e^{iq})`` spanning ker D on rank ``q+1``, degree ``k`` (infinite algebra)."""
    if q_plus_1 < 2:
        raise ValueError("rank must be at least 2")
    return [F_mono(src) for src in _F_sources(q_plus_1 - 1, k)]


def D_block(q: int, k: int, n: int) -> tuple[list[Monomial], list[Monomial], BooleanMatrix]:
    """``D: Λ^q_k -> Λ^q_{k-1}`` on ``span(e^2..e^n)``; columns follow the domain basis."""
    domain = enumerate_basis(q, k, 2, n)
    target = enumerate_basis(q, k - 1, 2, n)
    index = {m: j for j, m in enumerate(target)}
    cols = []
    for m in domain:
        w = 0
        for t in D_apply(Form([m])).terms:
            w ^= 1 << index[t]
        cols.append(w)
    return domain, target, BooleanMatrix.from_columns(cols, len(target))


def kerD_basis_truncated(q_plus_1: int, k: int, n: int) -> list[Form]:
    """Brute-force kernel of D on rank ``q+1``, degree ``k`` forms over ``e^2..e^n``."""
    if q_plus_1 < 2 or n < 3:
        raise ValueError("need rank >= 2 and n >= 3")
    domain, _, M = D_block(q_plus_1, k, n)
    return [unpack_form(w, domain) for w in kernel_words(M.rows, M.ncols)]


def kerD_dim(q: int, n: int) -> int:
    """Total dimension of ker D on rank-``q`` forms over ``e^2..e^n``."""
    lo = sum(range(2, q + 2))
    hi = sum(range(n - q + 1, n + 1))
    total = 0
    for k in range(lo, hi + 1):
        domain, _, M = D_block(q, k, n)
        total += len(kernel_words(M.rows, M.ncols))
    return total


@dataclass(frozen=True)
class ASystem:
    n: int
    k: int
    a: int
    b: int
    A: BooleanMatrix
    rhs: tuple[int, ...]


def _bounds(n: int, k: int) -> tuple[int, int]:
    a = -(-(n + 2 * k + 1) // 3)
    b = n // 2 + k - 1
    return a, b


def matrix_A(n: int, k: int) -> ASystem:
    """``A_ij = C(n - r + 2(i-1), r + (i-1) - k) mod 2`` with ``r = a + j - 1``."""
    if n < 4 or not 2 <= k <= n // 2:
        raise ValueError(f"matrix_A needs n >= 4 and 2 <= k <= n//2, got n={n}, k={k}")
    a, b = _bounds(n, k)
    rows = []
    for i in range(1, k):
        rows.append([binom_mod2(n - r + 2 * (i - 1), r + (i - 1) - k) for r in range(a, b + 1)])
    A = BooleanMatrix.from_lists(rows, ncols=b - a + 1)
    rhs = tuple(1 if i == 1 else 0 for i in range(1, k))
    return ASystem(n, k, a, b, A, rhs)


def x_solution(n: int, k: int) -> tuple[int, ...]:
    """Explicit solution ``x_j = sum_s C(m-k, n - r - 2^s) mod 2`` of ``A x = (1,0,...,0)``."""
    p, m = split_pow2(n)
    if not 2 <= k <= m:
        raise ValueError(f"no solution for k={k} outside 2..m={m}")
    a, b = _bounds(n, k)
    return tuple(
        sum(binom_mod2(m - k, n - r - (1 << s)) for s in range(p)) & 1
        for r in range(a, b + 1)
    )


def row_dependency(n: int, k: int) -> tuple[int, ...]:
    """For ``k > m``: ``c`` with ``c_i = C(k-m-1, i-1)`` (zero past ``k-m``); ``c^T A = 0``."""
    _, m = split_pow2(n)
    if k <= m:
        raise ValueError(f"row dependency only exists for k > m={m}")
    N = k - m - 1
    return tuple(binom_mod2(N, i) if i <= N else 0 for i in range(k - 1))


def closed_betti(n: int, q: int) -> int:
    """First three Betti numbers of m0(n) (equal to those of m2(n)) in closed form."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if q == 1:
        return 2
    if q == 2:
        return (n + 1) // 2
    if q == 3:
        if n == 3:
            return 1
        p, m = split_pow2(n)
        return ((1 << p) - 1) * ((1 << (p - 1)) - 1) // 3 + m * (m - 1) // 2 + (n - 1) // 2
    raise ValueError(f"closed form only for q in 1..3, got {q}")


def kerD3_dim_closed(n: int) -> int:
    p, m = split_pow2(n)
    return ((1 << p) - 1) * ((1 << (p - 1)) - 1) // 3 + m * (m - 1) // 2


def h1_basis() -> list[Form]:
    return [e(1), e(2)]


def h2_basis_m0n(n: int) -> list[Form]:
    if n < 3:
        raise ValueError("n must be >= 3")
    return [e(1, n)] + [F(e(i), i) for i in range(2, (n + 1) // 2 + 1)]


def h2_basis_m2n(n: int) -> list[Form]:
    if n < 5:
        raise ValueError("n must be >= 5")
    return [e(1, n) + e(2, n - 1)] + [F(e(i), i) for i in range(2, (n + 1) // 2 + 1)]


def B_set(t: int) -> list[Form]:
    """The rank-3 D-cocycles contributed at dimension ``t``, one per ``2 <= k <= m``."""
    p, m = split_pow2(t)
    out = []
    for k in range(2, m + 1):
        a, b = _bounds(t, k)
        acc = ZERO
        for r in range(a, b + 1):
            coeff = sum(binom_mod2(m - k, t - r - (1 << s)) for s in range(p)) & 1
            if coeff:
                acc = acc + F(e(t + 2 * k - 2 * r, r), r)
        out.append(acc)
    return out


def h3_basis_m0n(n: int) -> list[Form]:
    """Explicit H^3(m0(n)) basis: ``e^{1,i-1,i}`` for ``i >= 2 + n//2`` and ``B_4 ∪ ... ∪ B_n``."""
    if n < 4:
        raise ValueError("n must be >= 4")
    out = [e(1, i - 1, i) for i in range(2 + n // 2, n + 1)]
    for t in range(4, n + 1):
        out.extend(B_set(t))
    return out


def h3_basis_m2n(n: int) -> list[Form]:
    """Images under ``f`` of the m0(n) basis; ``f`` carries d0-classes to d2-classes."""
    if n < 5:
        raise ValueError("n must be >= 5")
    return [f_apply(w) for w in h3_basis_m0n(n)]


@dataclass(frozen=True)
class Decomposition12:
    xi: Form
    eta: Form
    zeta: Form

    def recompose(self) -> Form:
        return wedge(e(1), self.xi) + wedge(e(2), self.eta) + self.zeta


def decompose_12(omega: Form) -> Decomposition12:
    """``omega = e^1 ∧ xi + e^2 ∧ eta + zeta`` with xi over ``e^{>=2}``, eta, zeta over ``e^{>=3}``."""
    q = omega.rank
    if q < 2 and omega:
        raise ValueError("decomposition needs rank >= 2")
    xi, eta, zeta = [], [], []
    for m in omega.terms:
        if m[0] == 1:
            xi.append(m[1:])
        elif m[0] == 2:
            eta.append(m[1:])
        else:
            zeta.append(m)
    return Decomposition12(Form(xi), Form(eta), Form(zeta))


def f_apply(omega: Form) -> Form:
    """The involution exchanging the m0 and m2 differentials, applied rank by rank."""
    out = ZERO
    for q in sorted(omega.ranks):
        part = omega.rank_component(q)
        if q < 2:
            out = out + part
            continue
        dec = decompose_12(part)
        out = out + dec.recompose() + wedge(e(2), D1_apply(dec.xi))
    return out


def infinite_H_basis(q: int, k_max: int, algebra: Family = "m0") -> list[Form]:
    """Basis cocycles of ``H^q`` of the infinite algebra up to degree ``k_max``, ordered by degree.

    The same list serves m0 and m2.
    """
    if algebra not in ("m0", "m2"):
        raise ValueError(f"unknown family {algebra!r}")
    if q < 1:
        raise ValueError("q must be >= 1")
    if q == 1:
        return [w for w in (e(1), e(2)) if max(w.degrees) <= k_max]
    out = []
    for k in range(q * (q + 1) // 2, k_max + 1):
        out.extend(kerD_basis_infinite(q, k))
    return out
