"""The exterior algebra on the basis b_0, b_1, ... with integer coefficients.

Elements are homogeneous: an :class:`ExteriorElement` of degree ``r`` maps
strictly increasing index tuples to nonzero Python ints.  ``a ^ b`` is the
wedge product, as in most geometric-algebra packages.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .algebra import leibniz_det
from .laurent import Laurent
from .partitions import InvalidArguments, as_partition, hook_indices, partition_from_indices


def sort_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort; inputs are short
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return 0, ()
    return sign, tuple(idx)


def merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Wedge two sorted index tuples: (sign, merged) with sign 0 on overlap."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    i = j = 0
    swaps = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif a[i] > b[j]:
            out.append(b[j])
            swaps += len(a) - i
            j += 1
        else:
            return 0, ()
    out.extend(a[i:])
    out.extend(b[j:])
    return (-1 if swaps & 1 else 1), tuple(out)


class ExteriorElement:
    """Sparse homogeneous element of the exterior power of degree ``degree``."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Sequence[int], int] | None = None):
        self.degree = degree
        clean: dict[tuple[int, ...], int] = {}
        for key, c in (terms or {}).items():
            if not c:
                continue
            if len(key) != degree:
                raise InvalidArguments(f"monomial {key} does not have degree {degree}")
            sign, key = sort_sign(key)
            if sign:
                clean[key] = clean.get(key, 0) + sign * int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, degree: int, terms: dict[tuple[int, ...], int]) -> "ExteriorElement":
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, degree: int) -> "ExteriorElement":
        return cls._raw(degree, {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.degree != other.degree:
            raise InvalidArguments(f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ExteriorElement._raw(self.degree, out)

    def __neg__(self) -> "ExteriorElement":
        return ExteriorElement._raw(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "ExteriorElement") -> "ExteriorElement":
        return self + (-other)

    def __mul__(self, c) -> "ExteriorElement":
        if isinstance(c, ExteriorElement):
            return self ^ c
        if not c:
            return ExteriorElement.zero(self.degree)
        return ExteriorElement._raw(self.degree, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "ExteriorElement") -> "ExteriorElement":
        return wedge(self, other)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            mono = "^".join(f"b{i}" for i in key) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def max_index(self) -> int:
        """Largest basis index occurring; -1 for scalars and zero."""
        return max((k[-1] for k in self.terms if k), default=-1)

    def coefficient(self, indices: Sequence[int]) -> int:
        sign, key = sort_sign(indices)
        return sign * self.terms.get(key, 0)


def basis(*indices: int) -> ExteriorElement:
    """``b_{i1} ^ ... ^ b_{ik}`` with the sign of the sorting permutation."""
    return ExteriorElement(len(indices), {tuple(indices): 1})


def scalar(c: int) -> ExteriorElement:
    return ExteriorElement(0, {(): c})


def vector(coeffs: Iterable[int]) -> ExteriorElement:
    """Degree-one element ``sum_i coeffs[i] b_i``."""
    return ExteriorElement(1, {(i,): c for i, c in enumerate(coeffs)})


def wedge_basis(lam, r: int) -> ExteriorElement:
    """The basis element ``[b]^r_lam``."""
    return ExteriorElement._raw(r, {hook_indices(lam, r): 1})


def vacuum(r: int) -> ExteriorElement:
    """``[b]^r_0 = b_0 ^ ... ^ b_{r-1}``."""
    return ExteriorElement._raw(r, {tuple(range(r)): 1})


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    out: dict[tuple[int, ...], int] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            sign, key = merge_sign(ka, kb)
            if sign:
                out[key] = out.get(key, 0) + sign * va * vb
    return ExteriorElement._raw(a.degree + b.degree, {k: v for k, v in out.items() if v})


def contract(j: int, m: ExteriorElement) -> ExteriorElement:
    """``beta_j`` contracted into ``m``: drop ``b_j`` with sign ``(-1)^(position)``."""
    if m.degree == 0:
        raise InvalidArguments("cannot contract a scalar")
    out: dict[tuple[int, ...], int] = {}
    for key, c in m.terms.items():
        if j in key:
            pos = key.index(j)
            out[key[:pos] + key[pos + 1:]] = -c if pos & 1 else c
    return ExteriorElement._raw(m.degree - 1, out)


def truncate(m: ExteriorElement, n: int) -> ExteriorElement:
    """Drop every monomial that uses an index ``>= n``."""
    return ExteriorElement._raw(m.degree, {k: v for k, v in m.terms.items() if not k or k[-1] < n})


def contraction_stream(m: ExteriorElement) -> Laurent:
    """``sum_j (beta_j contracted into m) z^(-j-1)``; finite and exact."""
    if m.degree == 0:
        raise InvalidArguments("contraction stream needs degree >= 1")
    top = m.max_index()
    coeffs = {-j - 1: contract(j, m) for j in range(top + 1)}
    zero = ExteriorElement.zero(m.degree - 1)
    if top < 0:
        return Laurent({}, zero, -1, -1, True)
    return Laurent(coeffs, zero, -top - 1, -1, True)


def insertion_stream(m: ExteriorElement, hi: int) -> Laurent:
    """``sum_{j <= hi} (b_j ^ m) z^j``, known up to ``z^hi``."""
    coeffs = {j: wedge(basis(j), m) for j in range(hi + 1)}
    return Laurent(coeffs, ExteriorElement.zero(m.degree + 1), 0, hi, False)


def schur_coefficients(m: ExteriorElement) -> dict:
    """Read off ``a_lam`` from ``m = sum a_lam [b]^r_lam``."""
    return {partition_from_indices(k)[0]: v for k, v in m.terms.items()}


def from_schur(coeffs: Mapping, r: int) -> ExteriorElement:
    out = {}
    for lam, c in coeffs.items():
        if c:
            out[hook_indices(as_partition(lam), r)] = c
    return ExteriorElement._raw(r, out)


def pairing(covector: Sequence[Sequence[int]], m: ExteriorElement) -> int:
    """Evaluate ``mu_1 ^ ... ^ mu_r`` on ``m`` via ``det(mu_i(b_j))``.

    ``covector[i][k]`` is the value of ``mu_i`` on ``b_k``.  Used as an
    independent check on :func:`contract`.
    """
    total = 0
    for key, c in m.terms.items():
        mat = [[row[k] if k < len(row) else 0 for k in key] for row in covector]
        total += c * leibniz_det(mat, 1, 0)
    return total
