"""Partitions and their bijection with strictly increasing wedge indices.

A partition of length at most ``r`` labels the wedge basis element

    [b]^r_lam = b_{lam_r} ^ b_{1+lam_{r-1}} ^ ... ^ b_{r-1+lam_1}

so the index vector ``(lam_r, 1+lam_{r-1}, ..., r-1+lam_1)`` determines ``lam``
and ``r`` and vice versa.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence


class InvalidArguments(ValueError):
    """Raised when an operation is called outside its domain."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are trimmed on construction, so ``Partition((1, 0))`` and
    ``Partition((1,))`` are the same value and the null partition is ``()``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise InvalidArguments(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidArguments(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part ``lam_i``; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, r: int) -> tuple[int, ...]:
        if len(self) > r:
            raise InvalidArguments(f"{self.label()} has more than {r} parts")
        return tuple(self) + (0,) * (r - len(self))

    def sort_key(self) -> tuple:
        """Graded-lexicographic key: weight first, then the parts."""
        return (self.weight, tuple(self))

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment ``other`` inside ``self``."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def label(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "(0)"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


NULL = Partition()


def as_partition(value) -> Partition:
    return value if isinstance(value, Partition) else Partition(value)


def enumerate_partitions(r: int, n: int) -> list[Partition]:
    """All partitions with at most ``r`` parts, each at most ``n - r``.

    Returned in graded-lexicographic order; there are ``binomial(n, r)``.
    """
    if r < 0 or n < r:
        raise InvalidArguments(f"need n >= r >= 0, got r={r}, n={n}")
    found = [partition_from_indices(idx)[0] for idx in combinations(range(n), r)]
    return sorted(found, key=Partition.sort_key)


def hook_indices(lam: Sequence[int], r: int) -> tuple[int, ...]:
    lam = as_partition(lam)
    padded = lam.padded(r)
    return tuple(padded[r - 1 - j] + j for j in range(r))


def partition_from_indices(idx: Sequence[int]) -> tuple[Partition, int]:
    idx = tuple(idx)
    if any(i < 0 for i in idx) or any(idx[j] >= idx[j + 1] for j in range(len(idx) - 1)):
        raise InvalidArguments(f"indices must be strictly increasing and nonnegative: {idx}")
    r = len(idx)
    return Partition(idx[j] - j for j in reversed(range(r))), r


def add_ones(lam: Sequence[int], r: int, sign: int) -> Partition | None:
    """``lam + (1^r)`` or ``lam - (1^r)``; ``None`` when subtraction leaves the monoid."""
    padded = as_partition(lam).padded(r)
    if sign not in (1, -1):
        raise InvalidArguments("sign must be +1 or -1")
    if sign < 0 and r > 0 and padded[-1] == 0:
        return None
    return Partition(p + sign for p in padded)


def pieri_interlace(lam: Sequence[int], mu: Sequence[int], r: int) -> bool:
    """True iff mu_1 >= lam_1 >= mu_2 >= lam_2 >= ... >= mu_r >= lam_r."""
    lam = as_partition(lam).padded(r)
    mu = as_partition(mu).padded(r)
    for i in range(r):
        if mu[i] < lam[i]:
            return False
        if i + 1 < r and lam[i] < mu[i + 1]:
            return False
    return True


def partitions_of(w: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``w`` (largest part bounded by ``max_part``)."""
    if max_part is None:
        max_part = w
    if w == 0:
        return [NULL]
    out = []
    for first in range(min(w, max_part), 0, -1):
        for rest in partitions_of(w - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return out
