"""Finite-dimensional Lie algebras over GF(2) given by structure constants.

Basis ``e_1..e_n`` with ``deg e_i = i``.  Only brackets ``[e_i, e_j]`` with
``i < j`` are stored; in characteristic 2 ``[e_j, e_i] = [e_i, e_j]``.

Algebra file format (line oriented, ``#`` starts a comment)::

    dim 5
    1 2 : 3
    1 3 : 4
    2 3 : 5

The first non-blank line must be ``dim N``.  Every further line is
``i j : k1 k2 ...`` meaning ``[e_i, e_j] = e_k1 + e_k2 + ...`` with
``1 <= i < j <= N`` and distinct ``1 <= k <= N``.  A pair may appear once.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path


class AlgebraParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class AlgebraValidationError(ValueError):
    pass


class ValidationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    n: int
    brackets: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]
    name: str = field(default="", compare=False)
    _table: dict = field(init=False, repr=False, compare=False, hash=False)
    _dual: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        table: dict[tuple[int, int], tuple[int, ...]] = {}
        dual: dict[int, list[tuple[int, int]]] = {}
        for (i, j), ks in self.brackets:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad bracket pair ({i}, {j})")
            if any(not 1 <= k <= self.n for k in ks) or len(set(ks)) != len(ks):
                raise ValueError(f"bad bracket value for ({i}, {j}): {ks}")
            if (i, j) in table:
                raise ValueError(f"duplicate bracket ({i}, {j})")
            if ks:
                table[(i, j)] = tuple(sorted(ks))
                for k in ks:
                    dual.setdefault(k, []).append((i, j))
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_dual", {k: tuple(sorted(v)) for k, v in dual.items()})

    @classmethod
    def from_dict(cls, n: int, table: dict, name: str = "") -> "LieAlgebra":
        items = []
        for (i, j), ks in table.items():
            if i > j:
                i, j = j, i
            ks = tuple(sorted(ks))
            if ks:
                items.append(((i, j), ks))
        return cls(n, tuple(sorted(items)), name)

    def bracket(self, i: int, j: int) -> tuple[int, ...]:
        """Indices ``k`` with ``c_ij^k = 1``."""
        if i == j:
            return ()
        if i > j:
            i, j = j, i
        return self._table.get((i, j), ())

    def dual_pairs(self, k: int) -> tuple[tuple[int, int], ...]:
        """Pairs ``(i, j)``, ``i < j``, whose bracket contains ``e_k``; ``d e^k`` is their sum."""
        return self._dual.get(k, ())

    @property
    def is_graded(self) -> bool:
        return all(k == i + j for (i, j), ks in self._table.items() for k in ks)

    def label(self) -> str:
        return self.name or f"algebra(dim={self.n})"


def make_m0(n: int) -> LieAlgebra:
    """``[e_1, e_i] = e_{i+1}`` for ``1 < i < n``."""
    if n < 3:
        raise ValueError(f"m0(n) needs n >= 3, got {n}")
    table = {(1, i): (i + 1,) for i in range(2, n)}
    return LieAlgebra.from_dict(n, table, name=f"m0({n})")


def make_m2(n: int) -> LieAlgebra:
    """``m0(n)`` brackets plus ``[e_2, e_j] = e_{j+2}`` for ``2 < j < n - 1``."""
    if n < 5:
        raise ValueError(f"m2(n) needs n >= 5, got {n}")
    table = {(1, i): (i + 1,) for i in range(2, n)}
    table.update({(2, j): (j + 2,) for j in range(3, n - 1)})
    return LieAlgebra.from_dict(n, table, name=f"m2({n})")


FAMILIES = {"m0": make_m0, "m2": make_m2}
MIN_DIM = {"m0": 3, "m2": 5}


def make_family(family: str, n: int) -> LieAlgebra:
    try:
        return FAMILIES[family](n)
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None


def truncation_for_degree(family: str, k: int) -> LieAlgebra:
    """A finite truncation whose degree-``k`` cochains agree with the infinite algebra's."""
    return make_family(family, max(k, MIN_DIM[family]))


@dataclass
class ValidationReport:
    jacobi: list[tuple[int, int, int]] = field(default_factory=list)
    grading: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.jacobi and not self.grading

    def lines(self) -> list[str]:
        out = [f"grading violation at ({i},{j}): e_{k} has degree {k} != {i + j}" for i, j, k in self.grading]
        out += [f"Jacobi identity fails on (e_{i}, e_{j}, e_{k})" for i, j, k in self.jacobi]
        return out


def _bracket_vec(g: LieAlgebra, i: int, vec: frozenset) -> frozenset:
    out: set[int] = set()
    for k in vec:
        out ^= set(g.bracket(i, k))
    return frozenset(out)


def validate(g: LieAlgebra) -> ValidationReport:
    """Exhaustive grading and Jacobi check."""
    report = ValidationReport()
    for (i, j), ks in sorted(g._table.items()):
        for k in ks:
            if k != i + j:
                report.grading.append((i, j, k))
    for i, j, k in combinations(range(1, g.n + 1), 3):
        total = (
            _bracket_vec(g, i, frozenset(g.bracket(j, k)))
            ^ _bracket_vec(g, j, frozenset(g.bracket(k, i)))
            ^ _bracket_vec(g, k, frozenset(g.bracket(i, j)))
        )
        if total:
            report.jacobi.append((i, j, k))
    return report


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise AlgebraParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def loads(text: str, strict: bool = False, name: str = "") -> LieAlgebra:
    """Parse the algebra file format.

    Validation failures become :class:`ValidationWarning` warnings, or an
    :class:`AlgebraValidationError` when ``strict``.
    """
    g = parse(text, name=name)
    report = validate(g)
    if not report.ok:
        msg = "; ".join(report.lines())
        if strict:
            raise AlgebraValidationError(msg)
        warnings.warn(msg, ValidationWarning, stacklevel=2)
    return g


def parse(text: str, name: str = "") -> LieAlgebra:
    """Parse without validating the Lie axioms."""
    n = None
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim":
                raise AlgebraParseError("expected header 'dim N'", lineno)
            (n,) = _ints(parts[1:], lineno)
            if n < 1:
                raise AlgebraParseError("dimension must be positive", lineno)
            continue
        if line.count(":") != 1:
            raise AlgebraParseError("expected 'i j : k1 k2 ...'", lineno)
        lhs, rhs = line.split(":")
        pair = _ints(lhs.split(), lineno)
        ks = _ints(rhs.split(), lineno)
        if len(pair) != 2:
            raise AlgebraParseError("expected exactly two indices before ':'", lineno)
        i, j = pair
        if not 1 <= i < j <= n:
            raise AlgebraParseError(f"pair ({i}, {j}) must satisfy 1 <= i < j <= {n}", lineno)
        bad = [k for k in ks if not 1 <= k <= n]
        if bad:
            raise AlgebraParseError(f"index {bad[0]} out of range 1..{n}", lineno)
        if len(set(ks)) != len(ks):
            raise AlgebraParseError("repeated index on right-hand side", lineno)
        if (i, j) in table:
            raise AlgebraParseError(f"bracket ({i}, {j}) given twice", lineno)
        table[(i, j)] = tuple(ks)
    if n is None:
        raise AlgebraParseError("empty algebra file: missing 'dim N' header", 1)
    return LieAlgebra.from_dict(n, table, name=name)


def load(path: str | Path, strict: bool = False) -> LieAlgebra:
    path = Path(path)
    return loads(path.read_text(), strict=strict, name=path.name)


def dumps(g: LieAlgebra) -> str:
    lines = [f"# {g.name}"] if g.name else []
    lines.append(f"dim {g.n}")
    for (i, j), ks in g.brackets:
        lines.append(f"{i} {j} : " + " ".join(map(str, ks)))
    return "\n".join(lines) + "\n"
