"""Chevalley-Eilenberg cochains with trivial GF(2) coefficients.

For a graded algebra the differential preserves the degree (index sum), so
every computation is done one ``(rank, degree)`` block at a time.  Algebras
whose brackets break the grading fall back to a single block per rank,
keyed by ``k = None``.

Class representatives are normal forms: reduce modulo a reduced echelon
basis of the coboundaries whose pivots are the lex-first monomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Optional

from .exterior import (
    Form,
    Monomial,
    ZERO,
    all_monomials,
    enumerate_basis,
    pack_form,
    unpack_form,
)
from .gf2 import BooleanMatrix, Echelon, kernel_words
from .lie import LieAlgebra


def _d_monomial(g: LieAlgebra, m: Monomial) -> set[Monomial]:
    out: set[Monomial] = set()
    for t, idx in enumerate(m):
        rest = m[:t] + m[t + 1:]
        rest_set = set(rest)
        for a, b in g.dual_pairs(idx):
            if a in rest_set or b in rest_set:
                continue
            out ^= {tuple(sorted(rest + (a, b)))}
    return out


def d_apply(g: LieAlgebra, f: Form) -> Form:
    """The differential: ``d e^k = sum of e^{ij}`` over ``[e_i, e_j] ∋ e_k``, extended by Leibniz."""
    if f.max_index() > g.n:
        raise ValueError(f"form uses index {f.max_index()} beyond dim {g.n}")
    out: set[Monomial] = set()
    for m in f.terms:
        out ^= _d_monomial(g, m)
    return Form(out)


def degree_range(g: LieAlgebra, q: int) -> list[Optional[int]]:
    if not g.is_graded:
        return [None]
    if q > g.n:
        return []
    lo = q * (q + 1) // 2
    hi = sum(range(g.n - q + 1, g.n + 1))
    return list(range(lo, hi + 1))


def block_basis(g: LieAlgebra, q: int, k: Optional[int]) -> list[Monomial]:
    if q < 0 or q > g.n:
        return []
    if k is None:
        return all_monomials(q, 1, g.n)
    return enumerate_basis(q, k, 1, g.n)


@dataclass(frozen=True)
class CochainBlock:
    """``d`` restricted to ``Λ^q_k -> Λ^{q+1}_k``; rows follow ``target_basis``."""

    algebra: LieAlgebra
    q: int
    k: Optional[int]
    domain_basis: list[Monomial]
    target_basis: list[Monomial]
    matrix: BooleanMatrix


@lru_cache(maxsize=4096)
def _block_columns(g: LieAlgebra, q: int, k: Optional[int]):
    domain = block_basis(g, q, k)
    target = block_basis(g, q + 1, k)
    index = {m: j for j, m in enumerate(target)}
    cols = []
    for m in domain:
        w = 0
        for t in _d_monomial(g, m):
            w ^= 1 << index[t]
        cols.append(w)
    return tuple(domain), tuple(target), tuple(cols)


def block(g: LieAlgebra, q: int, k: Optional[int]) -> CochainBlock:
    if q < 0 or q > g.n:
        raise ValueError(f"rank {q} outside 0..{g.n}")
    domain, target, cols = _block_columns(g, q, k)
    return CochainBlock(g, q, k, list(domain), list(target), BooleanMatrix.from_columns(cols, len(target)))


@dataclass
class _BlockData:
    domain: tuple
    kernel: list[int]            # packed over domain
    image_prev: Echelon          # coboundaries, packed over domain


@lru_cache(maxsize=4096)
def _block_data(g: LieAlgebra, q: int, k: Optional[int]) -> _BlockData:
    domain, target, cols = _block_columns(g, q, k)
    rows = BooleanMatrix.from_columns(cols, len(target)).rows
    kernel = kernel_words(rows, len(domain))
    image = Echelon()
    if q >= 1:
        _, _, prev_cols = _block_columns(g, q - 1, k)
        for c in prev_cols:
            image.add(c)
    return _BlockData(domain, kernel, image)


@dataclass
class BettiReport:
    algebra: str
    q: int
    k: Optional[int]
    dim_ker: int
    dim_im_prev: int
    betti: int
    representatives: Optional[list[Form]] = field(default=None)

    def __post_init__(self):
        if self.betti != self.dim_ker - self.dim_im_prev or self.betti < 0:
            raise ValueError("inconsistent Betti report")


def betti_graded(g: LieAlgebra, q: int, k: Optional[int], with_basis: bool = False) -> BettiReport:
    """``dim H^q_k``; ``k=None`` for the single block of a non-graded algebra."""
    if q < 0 or q > g.n:
        return BettiReport(g.label(), q, k, 0, 0, 0, [] if with_basis else None)
    data = _block_data(g, q, k)
    reps = _class_basis(data) if with_basis else None
    if reps is not None:
        reps = [unpack_form(w, data.domain) for w in reps]
    return BettiReport(g.label(), q, k, len(data.kernel), len(data.image_prev),
                       len(data.kernel) - len(data.image_prev), reps)


def _class_basis(data: _BlockData) -> list[int]:
    """Normal forms of cocycles completing the coboundaries, in pivot order."""
    complement = Echelon()
    for v in data.kernel:
        r = data.image_prev.reduce(v)
        if r:
            complement.add(r)
    # complement vectors stay normal w.r.t. the image: their bits avoid image pivots
    return complement.basis()


def betti(g: LieAlgebra, q: int, with_basis: bool = False) -> BettiReport:
    """``b_q`` summed over homogeneous blocks."""
    dim_ker = dim_im = 0
    reps: list[Form] | None = [] if with_basis else None
    for k in degree_range(g, q):
        r = betti_graded(g, q, k, with_basis)
        dim_ker += r.dim_ker
        dim_im += r.dim_im_prev
        if with_basis:
            reps.extend(r.representatives)
    return BettiReport(g.label(), q, None, dim_ker, dim_im, dim_ker - dim_im, reps)


def kernel_dim(g: LieAlgebra, q: int) -> int:
    """``dim ker(d: Λ^q -> Λ^{q+1})``."""
    if q < 0 or q > g.n:
        return 0
    return sum(len(_block_data(g, q, k).kernel) for k in degree_range(g, q))


def betti_via_kernels(g: LieAlgebra, q: int) -> int:
    """``b_q = dim ker d_q + dim ker d_{q-1} - C(n, q-1)``."""
    prev = kernel_dim(g, q - 1) if q >= 1 else 0
    return kernel_dim(g, q) + prev - (comb(g.n, q - 1) if q >= 1 else 0)


def cohomology_basis(g: LieAlgebra, q: int) -> list[Form]:
    return betti(g, q, with_basis=True).representatives


def _split_blocks(g: LieAlgebra, f: Form) -> dict[Optional[int], Form]:
    if not g.is_graded:
        return {None: f}
    parts: dict[Optional[int], set] = {}
    for m in f.terms:
        parts.setdefault(sum(m), set()).add(m)
    return {k: Form(v) for k, v in parts.items()}


def _uniform_rank(f: Form) -> int:
    try:
        return f.rank
    except ValueError:
        raise ValueError("form must have uniform rank") from None


def is_cocycle(g: LieAlgebra, f: Form) -> bool:
    _uniform_rank(f)
    return not d_apply(g, f)


def normal_form(g: LieAlgebra, f: Form) -> Form:
    """Canonical representative of ``f`` modulo coboundaries (``f`` need not be closed)."""
    q = _uniform_rank(f)
    if f.max_index() > g.n:
        raise ValueError(f"form uses index {f.max_index()} beyond dim {g.n}")
    out = ZERO
    for k, part in _split_blocks(g, f).items():
        data = _block_data(g, q, k)
        index = {m: j for j, m in enumerate(data.domain)}
        out = out + unpack_form(data.image_prev.reduce(pack_form(part, index)), data.domain)
    return out


def is_coboundary(g: LieAlgebra, f: Form) -> bool:
    if not f:
        return True
    return not normal_form(g, f)


def cup_product(g: LieAlgebra, a: Form, b: Form) -> Form:
    """Normal form of ``[a] ⌣ [b]``; both inputs must be cocycles."""
    if not is_cocycle(g, a) or not is_cocycle(g, b):
        raise ValueError("cup product needs cocycle representatives")
    prod = a * b
    if not prod:
        return ZERO
    return normal_form(g, prod)


def classes_independent(g: LieAlgebra, forms: list[Form]) -> bool:
    """True iff the forms are linearly independent modulo coboundaries.

    Every form must be homogeneous in rank; mixed-degree forms are split per block.
    """
    if not forms:
        return True
    q = _uniform_rank(forms[0])
    # Independence mod coboundaries is checked on the full direct sum of blocks:
    # concatenate block coordinates into one packed word per form.
    offsets: dict[Optional[int], int] = {}
    total = 0
    image_words: list[int] = []
    for k in degree_range(g, q):
        data = _block_data(g, q, k)
        offsets[k] = total
        image_words.extend(w << total for w in data.image_prev.basis())
        total += len(data.domain)
    ech = Echelon(image_words)
    for f in forms:
        if _uniform_rank(f) != q:
            raise ValueError("forms must share a rank")
        w = 0
        for k, part in _split_blocks(g, f).items():
            data = _block_data(g, q, k)
            index = {m: j for j, m in enumerate(data.domain)}
            w |= pack_form(part, index) << offsets[k]
        if not ech.add(w):
            return False
    return True
