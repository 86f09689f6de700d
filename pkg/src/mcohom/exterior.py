"""Exterior algebra over GF(2) on the dual basis ``e^1, e^2, ...``.

A monomial ``e^{i1...iq}`` is a strictly increasing tuple of positive
indices; the empty tuple is the scalar 1.  A :class:`Form` is a finite set of
monomials (every coefficient is 1), so addition is symmetric difference and
wedge products carry no signs.

Text rendering uses delimited index lists, ``e{2,4,10}``, because the
positional style ``e^{24(10)}`` is ambiguous without the parentheses
convention.  Both are accepted by :func:`parse_form`:

    =================  ==================
    rendering          compact notation
    =================  ==================
    ``e{2,3}``         ``e^{23}``
    ``e{2,4,10}``      ``e^{24(10)}``
    ``e{1,11}``        ``e^{1(11)}``
    =================  ==================
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

Monomial = tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def _check_monomial(m: Monomial) -> Monomial:
    if any(i <= 0 for i in m) or any(a >= b for a, b in zip(m, m[1:])):
        raise ValueError(f"not a monomial: {m!r}")
    return m


class Form:
    """Immutable element of the exterior algebra over GF(2)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, monomials: Iterable[Sequence[int]] = ()):
        terms: set[Monomial] = set()
        for m in monomials:
            terms ^= {_check_monomial(tuple(m))}
        self._terms = frozenset(terms)
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset) -> "Form":
        f = cls.__new__(cls)
        f._terms = terms
        f._hash = None
        return f

    @property
    def terms(self) -> frozenset:
        return self._terms

    def monomials(self) -> list[Monomial]:
        """Monomials in canonical (lexicographic) order."""
        return sorted(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, m) -> bool:
        return tuple(m) in self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Form):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            if other == 0:
                return self
            return NotImplemented
        return Form._raw(self._terms ^ other._terms)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        return wedge(self, other)

    @property
    def ranks(self) -> set[int]:
        return {len(m) for m in self._terms}

    @property
    def degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    @property
    def rank(self) -> int:
        """The common rank; raises if the form mixes ranks."""
        r = self.ranks
        if len(r) > 1:
            raise ValueError(f"form has mixed ranks {sorted(r)}")
        return r.pop() if r else 0

    def max_index(self) -> int:
        return max((m[-1] for m in self._terms if m), default=0)

    def rank_component(self, q: int) -> "Form":
        return Form._raw(frozenset(m for m in self._terms if len(m) == q))

    def degree_component(self, k: int) -> "Form":
        return Form._raw(frozenset(m for m in self._terms if sum(m) == k))

    def __repr__(self) -> str:
        return f"Form({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


ZERO = Form()
ONE = Form([()])


def e(*indices: int) -> Form:
    """The monomial form ``e^{indices}``; zero on a repeat or on index 0."""
    if any(i < 0 for i in indices):
        raise ValueError(f"negative index in {indices}")
    if 0 in indices or len(set(indices)) != len(indices):
        return ZERO
    return Form._raw(frozenset([tuple(sorted(indices))]))


def from_monomials(monomials: Iterable[Sequence[int]]) -> Form:
    return Form(monomials)


def _wedge_mono(a: Monomial, b: Monomial) -> Monomial | None:
    if not a:
        return b
    if not b:
        return a
    if set(a).intersection(b):
        return None
    return tuple(sorted(a + b))


def wedge(f: Form, g: Form) -> Form:
    out: set[Monomial] = set()
    for a in f.terms:
        for b in g.terms:
            m = _wedge_mono(a, b)
            if m is not None:
                out ^= {m}
    return Form._raw(frozenset(out))


def wedge_all(*forms: Form) -> Form:
    acc = ONE
    for f in forms:
        acc = wedge(acc, f)
    return acc


def enumerate_basis(q: int, k: int, min_index: int, max_index: int) -> list[Monomial]:
    """All rank-``q`` monomials of degree ``k`` with indices in ``[min_index, max_index]``, lex order."""
    if q < 0:
        raise ValueError("q must be >= 0")
    min_index = max(min_index, 1)
    out: list[Monomial] = []

    def rec(prefix: list[int], start: int, left: int, remaining: int) -> None:
        if left == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        tri = left * (left - 1) // 2
        if left * max_index - tri < remaining:
            return
        for i in range(start, max_index - left + 2):
            if left * i + tri > remaining:
                break
            prefix.append(i)
            rec(prefix, i + 1, left - 1, remaining - i)
            prefix.pop()

    rec([], min_index, q, k)
    return out


def all_monomials(q: int, min_index: int, max_index: int) -> list[Monomial]:
    """Every rank-``q`` monomial on the given index range, lex order."""
    from itertools import combinations

    return list(combinations(range(max(min_index, 1), max_index + 1), q))


def to_coords(f: Form, basis: Sequence[Monomial]) -> tuple[int, ...]:
    index = {m: j for j, m in enumerate(basis)}
    v = [0] * len(basis)
    for m in f.terms:
        try:
            v[index[m]] = 1
        except KeyError:
            raise ValueError(f"monomial {render_monomial(m)} not in basis") from None
    return tuple(v)


def from_coords(v: Sequence[int], basis: Sequence[Monomial]) -> Form:
    if len(v) != len(basis):
        raise ValueError("coordinate vector length does not match basis")
    return Form._raw(frozenset(m for m, b in zip(basis, v) if b & 1))


def pack_form(f: Form, index: dict[Monomial, int]) -> int:
    """Packed coordinates of ``f`` with respect to a monomial->position map."""
    w = 0
    for m in f.terms:
        try:
            w |= 1 << index[m]
        except KeyError:
            raise ValueError(f"monomial {render_monomial(m)} not in basis") from None
    return w


def unpack_form(w: int, basis: Sequence[Monomial]) -> Form:
    terms = []
    while w:
        j = (w & -w).bit_length() - 1
        terms.append(basis[j])
        w &= w - 1
    return Form._raw(frozenset(terms))


def render_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "e{" + ",".join(map(str, m)) + "}"


def render(f: Form) -> str:
    if not f:
        return "0"
    return "+".join(render_monomial(m) for m in f.monomials())


def render_compact(f: Form) -> str:
    """Positional notation, indices >= 10 in parentheses: ``e^{24(10)}``."""
    if not f:
        return "0"
    parts = []
    for m in f.monomials():
        if not m:
            parts.append("1")
            continue
        body = "".join(str(i) if i < 10 else f"({i})" for i in m)
        parts.append("e^{" + body + "}")
    return "+".join(parts)


_DELIM = re.compile(r"e\{([0-9,\s]*)\}")
_COMPACT = re.compile(r"e\^\{?([0-9()]+)\}?")


def _parse_term(term: str) -> tuple[int, ...]:
    term = term.strip()
    if term == "1":
        return ()
    mt = _DELIM.fullmatch(term)
    if mt:
        body = mt.group(1).strip()
        return tuple(int(x) for x in body.split(",")) if body else ()
    mt = _COMPACT.fullmatch(term)
    if mt:
        return tuple(int(a or b) for a, b in re.findall(r"\((\d+)\)|(\d)", mt.group(1)))
    raise ValueError(f"cannot parse term {term!r}")


def parse_form(text: str) -> Form:
    """Inverse of :func:`render`; also reads the compact ``e^{24(10)}`` style."""
    text = text.strip()
    if text in ("", "0"):
        return ZERO
    out: list[Monomial] = []
    for term in text.split("+"):
        idx = _parse_term(term)
        if 0 in idx or len(set(idx)) != len(idx):
            continue
        out.append(tuple(sorted(idx)))
    return Form(out)


def form_to_json(f: Form) -> list[list[int]]:
    return [list(m) for m in f.monomials()]


def form_from_json(data: Sequence[Sequence[int]]) -> Form:
    return Form(tuple(m) for m in data)
