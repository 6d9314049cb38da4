"""Windowed Laurent series over an arbitrary coefficient ring, and sparse tensors.

A :class:`Laurent` value stores finitely many coefficients together with the
range over which they are known.  Everything below ``lo`` is zero.  Coefficients
up to ``hi`` are known; above ``hi`` they are zero when ``exact`` is set and
*not computed* otherwise.  Products and residues refuse to read coefficients
that were never computed, so a too-short truncation raises instead of
silently producing a wrong answer.

Coefficients only need ``+``, unary ``-``, ``bool`` (false for zero) and
whatever multiplication the caller passes to :meth:`Laurent.mul`.
"""

from __future__ import annotations

import operator
from typing import Any, Callable, Iterator


class WindowError(ValueError):
    """A coefficient outside the computed window was requested."""


class Laurent:
    __slots__ = ("coeffs", "lo", "hi", "exact", "zero")

    def __init__(self, coeffs: dict[int, Any], zero, lo: int, hi: int, exact: bool):
        self.zero = zero
        self.lo = lo
        self.hi = hi
        self.exact = exact
        self.coeffs = {}
        for e, c in coeffs.items():
            if not c:
                continue
            if e < lo or e > hi:
                raise WindowError(f"exponent {e} outside window [{lo}, {hi}]")
            self.coeffs[e] = c

    @classmethod
    def finite(cls, coeffs: dict[int, Any], zero) -> "Laurent":
        support = [e for e, c in coeffs.items() if c]
        if not support:
            return cls({}, zero, 0, 0, True)
        return cls(coeffs, zero, min(support), max(support), True)

    @classmethod
    def constant(cls, c, zero) -> "Laurent":
        return cls.finite({0: c}, zero)

    def __getitem__(self, e: int):
        if e > self.hi and not self.exact:
            raise WindowError(f"coefficient of z^{e} not computed (known up to z^{self.hi})")
        return self.coeffs.get(e, self.zero)

    def items(self) -> Iterator[tuple[int, Any]]:
        return iter(sorted(self.coeffs.items()))

    def known(self, e: int) -> bool:
        return self.exact or e <= self.hi

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*z^{e}" for e, c in self.items()) or "0"
        tail = "" if self.exact else f" + O(z^{self.hi + 1})"
        return f"Laurent[{body}{tail}]"

    # -- arithmetic -----------------------------------------------------

    def map(self, fn: Callable[[Any], Any], zero=None) -> "Laurent":
        """Apply a linear map coefficientwise."""
        zero = fn(self.zero) if zero is None else zero
        return Laurent({e: fn(c) for e, c in self.coeffs.items()}, zero,
                       self.lo, self.hi, self.exact)

    def shift(self, k: int) -> "Laurent":
        """Multiply by ``z^k``."""
        return Laurent({e + k: c for e, c in self.coeffs.items()}, self.zero,
                       self.lo + k, self.hi + k, self.exact)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self.coeffs.items()}, self.zero,
                       self.lo, self.hi, self.exact)

    def __add__(self, other: "Laurent") -> "Laurent":
        if not isinstance(other, Laurent):
            return NotImplemented
        if self.exact and other.exact:
            hi, exact = max(self.hi, other.hi), True
        else:
            his = [x.hi for x in (self, other) if not x.exact]
            hi, exact = min(his), False
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        out = {e: c for e, c in out.items() if e <= hi or exact}
        lo = min(self.lo, other.lo)
        return Laurent(out, self.zero, lo, max(hi, lo) if exact else hi, exact)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Laurent):
            return self.mul(other)
        return self.map(lambda c: c * other)

    def __rmul__(self, other):
        return self.map(lambda c: other * c)

    def product_window(self, other: "Laurent") -> tuple[int, int, bool]:
        lo = self.lo + other.lo
        if self.exact and other.exact:
            return lo, self.hi + other.hi, True
        bounds = []
        if not other.exact:
            bounds.append(other.hi + self.lo)
        if not self.exact:
            bounds.append(self.hi + other.lo)
        return lo, min(bounds), False

    def mul(self, other: "Laurent", op: Callable[[Any, Any], Any] = operator.mul,
            zero=None, hi: int | None = None) -> "Laurent":
        """Cauchy product with coefficient multiplication ``op``.

        The result window is the largest one in which every contributing
        coefficient was known; ``hi`` caps it further.
        """
        lo, top, exact = self.product_window(other)
        if hi is not None and (hi < top or not exact):
            top, exact = min(top, hi), False
        if zero is None:
            zero = op(self.zero, other.zero)
        out: dict[int, Any] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e > top:
                    continue
                c = op(c1, c2)
                out[e] = out[e] + c if e in out else c
        top = max(top, lo) if exact else top
        return Laurent(out, zero, lo, top, exact)

    def truncated(self, hi: int) -> "Laurent":
        if hi >= self.hi and not self.exact:
            return self
        kept = {e: c for e, c in self.coeffs.items() if e <= hi}
        return Laurent(kept, self.zero, min(self.lo, hi), hi, False)

    def residue(self):
        """Coefficient of ``z^-1``."""
        return self[-1]

    def agrees(self, other: "Laurent", lo: int, hi: int) -> bool:
        """Coefficientwise equality on ``[lo, hi]``."""
        return all(self[e] == other[e] for e in range(lo, hi + 1))


def residue_of_product(a: Laurent, b: Laurent, op: Callable[[Any, Any], Any] = operator.mul):
    """``Res_z a(z) b(z)``, reading only the coefficients it needs."""
    acc = None
    for e, c in a.coeffs.items():
        d = b[-1 - e]
        if not d:
            continue
        term = op(c, d)
        acc = term if acc is None else acc + term
    if acc is None:
        return op(a.zero, b.zero)
    return acc


class Tensor:
    """Sparse element of ``A (x) B`` keyed by pairs of basis keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def of(cls, a, b) -> "Tensor":
        return cls({(ka, kb): va * vb for ka, va in a.terms.items() for kb, vb in b.terms.items()})

    def __add__(self, other: "Tensor") -> "Tensor":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Tensor(out)

    def __neg__(self) -> "Tensor":
        return Tensor({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __mul__(self, c) -> "Tensor":
        return Tensor({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Tensor({self.terms!r})"

    def first(self):
        """Smallest key with its coefficient, or ``None`` for the zero tensor."""
        if not self.terms:
            return None
        key = min(self.terms, key=repr)
        return key, self.terms[key]


def tensor(a, b) -> Tensor:
    return Tensor.of(a, b)
