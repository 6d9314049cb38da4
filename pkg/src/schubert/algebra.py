"""Determinants over commutative rings given only ``+``, ``-`` and ``*``."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Any, Sequence

LEIBNIZ_MAX = 6


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((-1 if inversions & 1 else 1, perm))
    return tuple(out)


def leibniz_det(mat: Sequence[Sequence[Any]], one, zero):
    """Permutation-sum expansion; products with a zero entry are skipped."""
    n = len(mat)
    if n == 0:
        return one
    total = None
    for sign, perm in _signed_permutations(n):
        prod = None
        for i in range(n):
            entry = mat[i][perm[i]]
            if not entry:
                prod = None
                break
            prod = entry if prod is None else prod * entry
        else:
            term = prod if sign > 0 else -prod
            total = term if total is None else total + term
    return zero if total is None else total


def laplace_det(mat: Sequence[Sequence[Any]], one, zero):
    """Cofactor expansion along rows with minors memoized by column set."""
    n = len(mat)
    memo: dict[tuple[int, frozenset], Any] = {}

    def minor(row: int, cols: frozenset):
        if row == n:
            return one
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = None
        ordered = sorted(cols)
        for pos, c in enumerate(ordered):
            entry = mat[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols - {c})
            if not sub:
                continue
            term = entry * sub
            if pos & 1:
                term = -term
            acc = term if acc is None else acc + term
        memo[key] = zero if acc is None else acc
        return memo[key]

    return minor(0, frozenset(range(n)))


def det(mat: Sequence[Sequence[Any]], one, zero):
    if len(mat) <= LEIBNIZ_MAX:
        return leibniz_det(mat, one, zero)
    return laplace_det(mat, one, zero)
