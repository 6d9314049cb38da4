"""The ring B_r = Z[e_1, ..., e_r] and its identification with the r-th exterior power.

Elements of B_r are kept as e-monomial expansions (:class:`EPolynomial`).  The
Schur basis is never straightened symbolically: :func:`phi` sends a polynomial
to the exterior algebra, where the basis coefficients are read off directly.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import det
from .derivations import SIGMA_BAR_MINUS, SIGMA_MINUS, apply_component, SIGMA_BAR_PLUS, apply_series
from .exterior import ExteriorElement, from_schur, schur_coefficients, truncate, vacuum
from .laurent import Laurent
from .partitions import InvalidArguments, Partition, as_partition


class EPolynomial:
    """Sparse integer polynomial in ``e_1..e_rank``; keys are exponent tuples."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], int] | None = None):
        self.rank = rank
        clean: dict[tuple[int, ...], int] = {}
        for key, c in (terms or {}).items():
            key = tuple(int(k) for k in key)
            if len(key) != rank or any(k < 0 for k in key):
                raise InvalidArguments(f"bad exponent vector {key} for rank {rank}")
            if c:
                clean[key] = clean.get(key, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "EPolynomial":
        obj = cls.__new__(cls)
        obj.rank = rank
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, rank: int, c: int = 1) -> "EPolynomial":
        return cls._raw(rank, {(0,) * rank: c} if c else {})

    @classmethod
    def zero(cls, rank: int) -> "EPolynomial":
        return cls._raw(rank, {})

    @classmethod
    def e(cls, i: int, rank: int) -> "EPolynomial":
        """The generator ``e_i``; ``e_0 = 1`` and ``e_i = 0`` outside ``0..rank``."""
        if i == 0:
            return cls.constant(rank)
        if i < 0 or i > rank:
            return cls.zero(rank)
        key = [0] * rank
        key[i - 1] = 1
        return cls._raw(rank, {tuple(key): 1})

    def _check(self, other: "EPolynomial"):
        if self.rank != other.rank:
            raise InvalidArguments(f"rank mismatch {self.rank} vs {other.rank}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0,) * self.rank: other} if other else {})
        if not isinstance(other, EPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __add__(self, other) -> "EPolynomial":
        if isinstance(other, int):
            other = EPolynomial.constant(self.rank, other)
        if not isinstance(other, EPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return EPolynomial._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> "EPolynomial":
        return EPolynomial._raw(self.rank, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "EPolynomial":
        return self + (-other)

    def __rsub__(self, other) -> "EPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "EPolynomial":
        if isinstance(other, int):
            if not other:
                return EPolynomial.zero(self.rank)
            return EPolynomial._raw(self.rank, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, EPolynomial):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                out[k] = out.get(k, 0) + va * vb
        return EPolynomial._raw(self.rank, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EPolynomial":
        out = EPolynomial.constant(self.rank)
        for _ in range(n):
            out = out * self
        return out

    def weights(self) -> set[int]:
        """Weighted degrees of the monomials (``e_i`` has weight ``i``)."""
        return {sum((i + 1) * a for i, a in enumerate(k)) for k in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        w = self.weights()
        return len(w) <= 1 and (d is None or not w or w == {d})

    def degree(self) -> int:
        return max(self.weights(), default=0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (sum((i + 1) * a for i, a in enumerate(k)), k)):
            mono = "*".join(f"e{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(key) if a)
            c = self.terms[key]
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# -- the H-sequence ------------------------------------------------------

def _h_step(n: int, r: int, prev: Sequence[EPolynomial]) -> EPolynomial:
    """One step of ``h_n = sum_{i=1..min(n,r)} (-1)^(i+1) e_i h_(n-i)``."""
    out = EPolynomial.zero(r)
    for i in range(1, min(n, r) + 1):
        term = EPolynomial.e(i, r) * prev[n - i]
        out = out + term if i & 1 else out - term
    return out


# one cache per rank; h(n, r) and h(n, r + 1) are different polynomials
_H_CACHE: dict[int, list[EPolynomial]] = {}


def h(n: int, r: int) -> EPolynomial:
    """Complete homogeneous ``h_n`` of B_r, from ``E_r(z) H_r(z) = 1``."""
    if n < 0:
        return EPolynomial.zero(r)
    seq = _H_CACHE.setdefault(r, [EPolynomial.constant(r)])
    while len(seq) <= n:
        seq.append(_h_step(len(seq), r, seq))
    return seq[n]


def clear_caches():
    """Drop every memo table that depends on the H-sequence."""
    _H_CACHE.clear()
    _schur_delta_cached.cache_clear()
    _phi_monomial.cache_clear()


def e_series(r: int) -> Laurent:
    """``E_r(z) = 1 - e_1 z + ... + (-1)^r e_r z^r``, exact."""
    return Laurent.finite({i: EPolynomial.e(i, r) * (-1) ** i for i in range(r + 1)},
                          EPolynomial.zero(r))


def h_series(r: int, hi: int) -> Laurent:
    """``H_r(z) = sum h_n z^n`` known up to ``z^hi``."""
    return Laurent({n: h(n, r) for n in range(hi + 1)}, EPolynomial.zero(r), 0, hi, False)


# -- Schur determinants ----------------------------------------------------

def _jt_size(lam: Partition) -> int:
    # rows beyond the length form a unitriangular block, so the determinant
    # of size len(lam) agrees with the r x r one whenever len(lam) <= r
    return len(lam)


@lru_cache(maxsize=None)
def _schur_delta_cached(lam: Partition, r: int) -> EPolynomial:
    k = _jt_size(lam)
    mat = [[h(lam[j] - j + i, r) for j in range(k)] for i in range(k)]
    return det(mat, EPolynomial.constant(r), EPolynomial.zero(r))


def schur_delta(lam, r: int) -> EPolynomial:
    """``Delta_lam(H_r) = det(h_{lam_j - j + i})``.

    Partitions longer than ``r`` are accepted; the determinant then has size
    ``len(lam)`` and may vanish, e.g. ``Delta_(1,1)(H_1) = 0``.
    """
    return _schur_delta_cached(as_partition(lam), r)


# -- the isomorphism with the exterior power -------------------------------

@lru_cache(maxsize=100_000)
def _phi_monomial(key: tuple[int, ...]) -> ExteriorElement:
    r = len(key)
    for i, a in enumerate(key):
        if a:
            rest = list(key)
            rest[i] -= 1
            return apply_component(SIGMA_BAR_PLUS, i + 1, _phi_monomial(tuple(rest)))
    return vacuum(r)


def phi(p: EPolynomial, r: int | None = None) -> ExteriorElement:
    """Evaluate ``p`` on ``[b]^r_0`` with ``e_i`` acting as ``sigma_bar_i``."""
    if r is None:
        r = p.rank
    if p.rank != r:
        raise InvalidArguments(f"polynomial has rank {p.rank}, expected {r}")
    out: dict[tuple[int, ...], int] = {}
    for key, c in p.terms.items():
        for k, v in _phi_monomial(key).terms.items():
            out[k] = out.get(k, 0) + c * v
    return ExteriorElement._raw(r, {k: v for k, v in out.items() if v})


class TensorCoefficients:
    """The coefficients ``a_lam`` of ``sum a_lam [b]^r_lam``."""

    __slots__ = ("rank", "coeffs")

    def __init__(self, rank: int, coeffs: Mapping | Iterable = ()):
        self.rank = rank
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Partition, int] = {}
        for lam, c in items:
            lam = as_partition(lam)
            if len(lam) > rank:
                raise InvalidArguments(f"{lam.label()} has more than {rank} parts")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        self.coeffs = {k: v for k, v in clean.items() if v}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorCoefficients):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(f"{lam.label()}: {c}" for lam, c in self.sorted_items())
        return f"TensorCoefficients(r={self.rank}, {{{body}}})"

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def max_weight(self) -> int:
        return max((lam.weight for lam in self.coeffs), default=0)

    def to_exterior(self) -> ExteriorElement:
        return from_schur(self.coeffs, self.rank)

    def to_epoly(self) -> EPolynomial:
        out = EPolynomial.zero(self.rank)
        for lam, c in self.coeffs.items():
            out = out + schur_delta(lam, self.rank) * c
        return out

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "coeffs": [{"partition": list(lam), "coeff": str(c)} for lam, c in self.sorted_items()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "TensorCoefficients":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            rank = data["rank"]
            entries = data["coeffs"]
            if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
                raise InvalidArguments(f"rank must be a nonnegative integer, got {rank!r}")
            pairs = []
            for entry in entries:
                parts = entry["partition"]
                if not isinstance(parts, list) or not all(isinstance(p, int) for p in parts):
                    raise InvalidArguments(f"partition must be a list of integers: {parts!r}")
                coeff = entry["coeff"]
                if not isinstance(coeff, (str, int)) or isinstance(coeff, bool):
                    raise InvalidArguments(f"coeff must be a decimal string: {coeff!r}")
                pairs.append((Partition(parts), int(coeff)))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidArguments):
                raise
            raise InvalidArguments(f"malformed tensor JSON: {exc}") from exc
        return cls(rank, pairs)


def phi_inverse(m: ExteriorElement) -> TensorCoefficients:
    return TensorCoefficients(m.degree, schur_coefficients(m))


def to_schur(p: EPolynomial) -> TensorCoefficients:
    """Schur-basis coefficients of ``p``."""
    return phi_inverse(phi(p))


# -- sigma_-(z) and its inverse on B_r -------------------------------------

def _laurent_zero(r: int) -> Laurent:
    return Laurent.finite({}, EPolynomial.zero(r))


def sigma_minus_h(n: int, r: int, barred: bool = False) -> Laurent:
    """``sigma_-(z) h_n = sum_{j=0..n} h_(n-j) z^-j``; barred: ``h_n - h_(n-1) z^-1``."""
    zero = EPolynomial.zero(r)
    if n < 0:
        return _laurent_zero(r)
    if barred:
        return Laurent.finite({0: h(n, r), -1: -h(n - 1, r)}, zero)
    return Laurent.finite({-j: h(n - j, r) for j in range(n + 1)}, zero)


def schur_delta_transformed(lam, r: int, barred: bool = False) -> Laurent:
    """``Delta_lam(T H_r)`` with ``T`` = ``sigma_-(z)`` or ``sigma_bar_-(z)``.

    At ``r = 0`` this gives ``Delta_(n)(sigma_-(z) H_0) = z^-n``.
    """
    lam = as_partition(lam)
    k = _jt_size(lam)
    mat = [[sigma_minus_h(lam[j] - j + i, r, barred) for j in range(k)] for i in range(k)]
    return det(mat, Laurent.constant(EPolynomial.constant(r), EPolynomial.zero(r)), _laurent_zero(r))


def sigma_minus_poly(p: EPolynomial, r: int | None = None, barred: bool = False) -> Laurent:
    """``sigma_-(z) p`` (or the barred series) as an element of ``B_r[z^-1]``.

    Computed as ``phi^-1 o sigma_-(z) o phi``: the operator acts on the
    exterior image of ``p`` and every coefficient is pulled back to B_r.
    """
    if r is None:
        r = p.rank
    kind = SIGMA_BAR_MINUS if barred else SIGMA_MINUS
    series = apply_series(kind, phi(p, r))
    return series.map(lambda m: phi_inverse(m).to_epoly(), EPolynomial.zero(r))


def sigma_minus_generator_hom(p: EPolynomial, r: int | None = None, barred: bool = False) -> Laurent:
    """Extend ``e_i -> Delta_(1^i)(T H_r)`` multiplicatively.

    This agrees with :func:`sigma_minus_poly` only on polynomials of low
    enough weight compared with ``r``; kept to exhibit where it breaks.
    """
    if r is None:
        r = p.rank
    one = Laurent.constant(EPolynomial.constant(r), EPolynomial.zero(r))
    gens = [schur_delta_transformed((1,) * i, r, barred) for i in range(1, r + 1)]
    out = _laurent_zero(r)
    for key, c in p.terms.items():
        term = one
        for g, a in zip(gens, key):
            for _ in range(a):
                term = term * g
        out = out + term * c
    return out


# -- Laksov-Thorup and truncation ------------------------------------------

def laksov_thorup(f_list: Sequence[Sequence[int]], r: int) -> EPolynomial:
    """``det Res(X^(i-1) f_(r-j)(X) / p_r(X))`` with residues written in the h's.

    Each ``f`` is a coefficient list ``[a_0, a_1, ...]`` for ``sum a_k X^k``.
    """
    if len(f_list) != r:
        raise InvalidArguments(f"expected {r} polynomials, got {len(f_list)}")

    def entry(i: int, f: Sequence[int]) -> EPolynomial:
        out = EPolynomial.zero(r)
        for k, a in enumerate(f):
            if a:
                out = out + h(i + k - r, r) * a
        return out

    mat = [[entry(i, f_list[r - j]) for j in range(1, r + 1)] for i in range(1, r + 1)]
    return det(mat, EPolynomial.constant(r), EPolynomial.zero(r))


def truncated_reduce(p: EPolynomial, r: int, n: int) -> TensorCoefficients:
    """Schur-basis representative of ``p`` modulo ``(h_(n-r+1), ..., h_n)``."""
    if n < r:
        raise InvalidArguments(f"need n >= r, got r={r}, n={n}")
    return phi_inverse(truncate(phi(p, r), n))
