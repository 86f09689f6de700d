"""Binomials mod 2, partition counts and the ``n = 2^p + m`` split."""

from __future__ import annotations

from functools import lru_cache


def binom_mod2(N: int, t: int) -> int:
    """C(N, t) mod 2, taken as 0 outside ``0 <= t <= N``.

    Lucas: the coefficient is odd iff the bits of ``t`` are a subset of those of ``N``.
    """
    if t < 0 or t > N:
        return 0
    return 1 if (N & t) == t else 0


@lru_cache(maxsize=None)
def _partition_table(kmax: int, qmax: int) -> tuple[tuple[int, ...], ...]:
    # P[q][k] = partitions of k into exactly q positive parts
    P = [[0] * (kmax + 1) for _ in range(qmax + 1)]
    P[0][0] = 1
    for q in range(1, qmax + 1):
        for k in range(q, kmax + 1):
            P[q][k] = P[q - 1][k - 1] + P[q][k - q]
    return tuple(tuple(row) for row in P)


def partitions_exact(k: int, q: int) -> int:
    """Number of partitions of ``k`` into exactly ``q`` positive parts.

    Zero for ``k <= 0`` and for ``k < q``.
    """
    if k <= 0 or q <= 0 or k < q:
        return 0
    return _partition_table(k, q)[q][k]


def split_pow2(n: int) -> tuple[int, int]:
    """The unique ``(p, m)`` with ``n = 2**p + m`` and ``0 < m <= 2**p``."""
    if n < 2:
        raise ValueError(f"split_pow2 needs n >= 2, got {n}")
    p = (n - 1).bit_length() - 1
    return p, n - (1 << p)
