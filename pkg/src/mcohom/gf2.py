"""Dense linear algebra over GF(2).

Rows are packed into Python ints (bit ``j`` holds column ``j``), so row
updates are single XORs regardless of width.  Public vectors are tuples of
0/1 ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

BooleanVector = tuple[int, ...]


def pack(bits: Iterable[int]) -> int:
    """Pack a 0/1 sequence into an int, element ``j`` at bit ``j``."""
    out = 0
    for j, b in enumerate(bits):
        if b & 1:
            out |= 1 << j
    return out


def unpack(word: int, length: int) -> BooleanVector:
    return tuple((word >> j) & 1 for j in range(length))


def _low_bit(word: int) -> int:
    return (word & -word).bit_length() - 1


@dataclass(frozen=True)
class BooleanMatrix:
    """Immutable ``nrows x ncols`` matrix over GF(2) with packed rows."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "BooleanMatrix":
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            if any(x not in (0, 1) for x in row):
                raise ValueError("entries must be 0 or 1")
        return cls(len(data), ncols, tuple(pack(row) for row in data))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "BooleanMatrix":
        """Build from packed columns (bit ``i`` of ``columns[j]`` is entry ``(i, j)``)."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            while col:
                i = _low_bit(col)
                if i >= nrows:
                    raise ValueError("column has bits outside the row range")
                rows[i] |= 1 << j
                col &= col - 1
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BooleanMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "BooleanMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError((i, j))
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [list(unpack(r, self.ncols)) for r in self.rows]

    def columns(self) -> list[int]:
        """Packed columns, bit ``i`` = row ``i``."""
        return list(self.transpose().rows)

    def transpose(self) -> "BooleanMatrix":
        cols = [0] * self.ncols
        for i, row in enumerate(self.rows):
            while row:
                j = _low_bit(row)
                cols[j] |= 1 << i
                row &= row - 1
        return BooleanMatrix(self.ncols, self.nrows, tuple(cols))

    def matvec(self, x: Sequence[int]) -> BooleanVector:
        if len(x) != self.ncols:
            raise ValueError(f"vector length {len(x)} != {self.ncols} columns")
        xw = pack(x)
        return tuple((r & xw).bit_count() & 1 for r in self.rows)

    def vecmat(self, y: Sequence[int]) -> BooleanVector:
        """Row combination ``y^T M``."""
        if len(y) != self.nrows:
            raise ValueError(f"vector length {len(y)} != {self.nrows} rows")
        acc = 0
        for yi, r in zip(y, self.rows):
            if yi & 1:
                acc ^= r
        return unpack(acc, self.ncols)

    def __matmul__(self, other: "BooleanMatrix") -> "BooleanMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = 0
            while r:
                j = _low_bit(r)
                acc ^= other.rows[j]
                r &= r - 1
            out.append(acc)
        return BooleanMatrix(self.nrows, other.ncols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.rows)


def _rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; pivot = first nonzero column, scanned left to right."""
    work = list(rows)
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        found = -1
        for r in range(top, len(work)):
            if work[r] & bit:
                found = r
                break
        if found < 0:
            continue
        work[top], work[found] = work[found], work[top]
        prow = work[top]
        for r in range(len(work)):
            if r != top and work[r] & bit:
                work[r] ^= prow
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(M: BooleanMatrix) -> int:
    return len(_rref(M.rows, M.ncols)[1])


def kernel_basis(M: BooleanMatrix) -> list[BooleanVector]:
    """Basis of ``{v : Mv = 0}``, one vector per free column in increasing order."""
    return [unpack(w, M.ncols) for w in kernel_words(M.rows, M.ncols)]


def kernel_words(rows: Sequence[int], ncols: int) -> list[int]:
    reduced, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(reduced, pivots):
            if (row >> free) & 1:
                v |= 1 << p
        out.append(v)
    return out


def solve(M: BooleanMatrix, b: Sequence[int]) -> BooleanVector | None:
    """Some ``x`` with ``Mx = b``, or ``None`` when the system is inconsistent."""
    if len(b) != M.nrows:
        raise ValueError(f"rhs length {len(b)} != {M.nrows} rows")
    flag = 1 << M.ncols
    aug = [r | (flag if bi & 1 else 0) for r, bi in zip(M.rows, b)]
    reduced, pivots = _rref(aug, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = 0
    for row, p in zip(reduced, pivots):
        if row & flag:
            x |= 1 << p
    return unpack(x, M.ncols)


def in_span(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    n = len(v)
    if any(len(b) != n for b in basis):
        raise ValueError("vectors must share a length")
    ech = Echelon()
    for b in basis:
        ech.add(pack(b))
    return ech.reduce(pack(v)) == 0


class Echelon:
    """Incrementally built reduced basis of a subspace of packed vectors.

    Each stored vector owns its lowest set bit (its pivot), and no other
    stored vector has that bit set, so ``reduce`` yields a canonical
    representative of ``v`` modulo the span.
    """

    def __init__(self, vectors: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v: int) -> int:
        for p, w in self.pivots.items():
            if (v >> p) & 1:
                v ^= w
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = _low_bit(v)
        for q, w in list(self.pivots.items()):
            if (w >> p) & 1:
                self.pivots[q] = w ^ v
        self.pivots[p] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def basis(self) -> list[int]:
        return [self.pivots[p] for p in sorted(self.pivots)]
