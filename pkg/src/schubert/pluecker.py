"""Decomposability of tensors in the r-th exterior power, three ways, and Pluecker quadrics.

* :func:`classical_criterion` tests ``sum_i (beta_i -| m) (x) (b_i ^ m) = 0``.
* :func:`theorem1_check` evaluates the vertex-operator residue inside the
  exterior algebra.
* :func:`theorem2_check` evaluates the same residue in ``B_(r-1) (x) B_(r+1)``
  through the truncated vertex operators :func:`gamma_star_r`, :func:`gamma_r`.
"""

from __future__ import annotations

import enum
import json
import random
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Mapping

from .derivations import (SIGMA_BAR_MINUS, SIGMA_BAR_PLUS, SIGMA_MINUS, SIGMA_PLUS,
                          apply_component, apply_series, apply_series_laurent)
from .exterior import (ExteriorElement, basis, contract, contraction_stream, insertion_stream,
                       truncate, vector, wedge)
from .laurent import Laurent, Tensor, residue_of_product
from .partitions import InvalidArguments, Partition, as_partition, enumerate_partitions
from .symmetric import (EPolynomial, TensorCoefficients, e_series, h_series, phi, phi_inverse,
                        schur_delta_transformed, to_schur)


# -- the classical criterion ----------------------------------------------

def classical_tensor(m: ExteriorElement) -> Tensor:
    """``sum_i (beta_i -| m) (x) (b_i ^ m)`` keyed by pairs of wedge monomials."""
    if m.degree < 1:
        raise InvalidArguments("the criterion needs degree r >= 1")
    out = Tensor()
    for i in range(m.max_index() + 2):
        left = contract(i, m)
        if left:
            out = out + Tensor.of(left, wedge(basis(i), m))
    return out


def classical_criterion(m: ExteriorElement) -> bool:
    return not classical_tensor(m)


def wedge_square_vanishes(m: ExteriorElement) -> bool:
    """``m ^ m = 0``; equivalent to decomposability only in degree 2."""
    return not wedge(m, m)


# -- the exterior-side residue --------------------------------------------

class Variant(enum.Enum):
    AS_STATED = "as-stated"
    AS_PROVED = "as-proved"


# the variant that agrees with the classical criterion on the oracle corpus
NORMATIVE = Variant.AS_STATED


def _exterior_residue(left: Laurent, right: Laurent) -> Tensor:
    return residue_of_product(left, right, Tensor.of)


def theorem1_left(m: ExteriorElement, variant: Variant = NORMATIVE) -> Laurent:
    r = m.degree
    inner_kind = SIGMA_MINUS if variant is Variant.AS_STATED else SIGMA_BAR_MINUS
    outer_kind = SIGMA_BAR_PLUS if variant is Variant.AS_STATED else SIGMA_BAR_MINUS
    inner = apply_series(inner_kind, m)
    zero = ExteriorElement.zero(r - 1)
    inner = inner.map(lambda c: apply_component(SIGMA_BAR_MINUS, r - 1, contract(0, c)), zero)
    return apply_series_laurent(outer_kind, inner)


def theorem1_right(m: ExteriorElement, hi: int) -> Laurent:
    r = m.degree
    start = wedge(basis(0), apply_component(SIGMA_BAR_PLUS, r, m))
    return apply_series_laurent(SIGMA_PLUS, apply_series(SIGMA_BAR_MINUS, start), hi)


def theorem1_residue(m: ExteriorElement, variant: Variant = NORMATIVE) -> Tensor:
    if m.degree < 1:
        raise InvalidArguments("the criterion needs degree r >= 1")
    left = theorem1_left(m, variant)
    # the left factor reaches down to z^lo, so the right one is needed up to -1 - lo
    hi = max(0, -1 - left.lo)
    return _exterior_residue(left, theorem1_right(m, hi))


def theorem1_check(m: ExteriorElement, variant: Variant = NORMATIVE) -> bool:
    return not theorem1_residue(m, variant)


def theorem1_prefactor_identities(m: ExteriorElement) -> tuple[bool, bool]:
    """Compare both streams with the two operator expressions, prefactors included.

    Returns whether ``sum_j (beta_j -| m) z^(-j-1) = (-1)^(r-1) z^-r L(z)`` and
    ``sum_j (b_j ^ m) z^j = (-1)^r z^r R(z)`` hold on the window that matters.
    """
    r = m.degree
    left = theorem1_left(m, Variant.AS_STATED)
    lhs = contraction_stream(m)
    scaled = left.shift(-r) * (-1 if (r - 1) & 1 else 1)
    ok_left = scaled.exact and lhs.coeffs == scaled.coeffs
    hi = m.max_index() + 2
    right = theorem1_right(m, hi + r)
    scaled_r = right.shift(r) * (-1 if r & 1 else 1)
    ins = insertion_stream(m, hi)
    ok_right = scaled_r.agrees(ins, scaled_r.lo, hi)
    return ok_left, ok_right


# -- the ring-side residue --------------------------------------------------

def _schur_form(p) -> TensorCoefficients:
    if isinstance(p, TensorCoefficients):
        return p
    if isinstance(p, EPolynomial):
        return to_schur(p)
    raise InvalidArguments(f"expected a polynomial or tensor coefficients, got {type(p).__name__}")


@lru_cache(maxsize=4096)
def _gamma_star_basis(lam: Partition, r: int) -> Laurent:
    return e_series(r - 1) * schur_delta_transformed(lam, r - 1, barred=False)


@lru_cache(maxsize=4096)
def _gamma_basis(mu: Partition, r: int, hi: int) -> Laurent:
    delta = schur_delta_transformed(mu, r + 1, barred=True)
    # H is a power series; the product is valid up to H.hi + delta.lo
    series = h_series(r + 1, hi - delta.lo)
    return series.mul(delta, hi=hi)


def _combine(parts: Iterable[tuple[Laurent, int]], zero) -> Laurent:
    out = None
    for series, c in parts:
        term = series * c
        out = term if out is None else out + term
    return Laurent.finite({}, zero) if out is None else out


def clear_caches():
    _gamma_star_basis.cache_clear()
    _gamma_basis.cache_clear()
    _reduce_monomial.cache_clear()


def gamma_star_r(p, r: int) -> Laurent:
    """``Gamma*_r(z) p = sum a_lam E_(r-1)(z) Delta_lam(sigma_-(z) H_(r-1))``, exact."""
    if r < 1:
        raise InvalidArguments("Gamma*_r needs r >= 1")
    t = _schur_form(p)
    return _combine(((_gamma_star_basis(lam, r), c) for lam, c in t.coeffs.items()),
                    EPolynomial.zero(r - 1))


def gamma_r(p, r: int, hi: int) -> Laurent:
    """``Gamma_r(z) p = sum a_mu H_(r+1)(z) Delta_mu(sigma_bar_-(z) H_(r+1))`` up to ``z^hi``."""
    t = _schur_form(p)
    out = _combine(((_gamma_basis(mu, r, hi), c) for mu, c in t.coeffs.items()),
                   EPolynomial.zero(r + 1))
    if out.exact or out.hi > hi:
        out = out.truncated(hi)
    return out


def pair_residue(lam, mu, r: int, hi: int | None = None) -> Tensor:
    """``Res Gamma*_r(z) Delta_lam (x) Gamma_r(z) Delta_mu`` in B_(r-1) (x) B_(r+1)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if hi is None:
        hi = max(lam.weight, mu.weight) + 1
    return residue_of_product(_gamma_star_basis(lam, r), _gamma_basis(mu, r, hi), Tensor.of)


def theorem2_residue(t: TensorCoefficients) -> Tensor:
    r = t.rank
    if r < 1:
        raise InvalidArguments("the criterion needs rank r >= 1")
    hi = t.max_weight() + 1
    left = gamma_star_r(t, r)
    right = gamma_r(t, r, hi)
    return residue_of_product(left, right, Tensor.of)


def theorem2_check(t: TensorCoefficients) -> bool:
    return not theorem2_residue(t)


# -- symbolic Pluecker quadrics --------------------------------------------

class SymbolicQuadric:
    """Quadratic form ``sum c a_lam a_mu`` over unordered pairs of partitions."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Mapping, order: Mapping[Partition, int]):
        self.order = order
        clean: dict[tuple[Partition, Partition], int] = {}
        for (lam, mu), c in terms.items():
            lam, mu = as_partition(lam), as_partition(mu)
            if order[mu] < order[lam]:
                lam, mu = mu, lam
            clean[(lam, mu)] = clean.get((lam, mu), 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    def keys(self) -> list[tuple[Partition, Partition]]:
        # ordered by the larger factor first, then the smaller one
        return sorted(self.terms, key=lambda k: (self.order[k[1]], self.order[k[0]]))

    def normalized(self) -> "SymbolicQuadric":
        if not self.terms:
            return self
        g = reduce(gcd, (abs(v) for v in self.terms.values()))
        lead = self.terms[self.keys()[0]]
        s = g if lead > 0 else -g
        return SymbolicQuadric({k: v // s for k, v in self.terms.items()}, self.order)

    def signature(self) -> tuple:
        return tuple((tuple(lam), tuple(mu), self.terms[(lam, mu)]) for lam, mu in self.keys())

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicQuadric) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def evaluate(self, t: TensorCoefficients) -> int:
        return sum(c * t.coeffs.get(lam, 0) * t.coeffs.get(mu, 0) for (lam, mu), c in self.terms.items())

    def text(self) -> str:
        out = []
        for lam, mu in self.keys():
            c = self.terms[(lam, mu)]
            mono = f"a[{','.join(map(str, lam))}]*a[{','.join(map(str, mu))}]"
            mag = abs(c)
            body = mono if mag == 1 else f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out) if out else "0"

    def to_json(self) -> dict:
        return {"terms": [{"left": list(lam), "right": list(mu), "coeff": str(self.terms[(lam, mu)])}
                          for lam, mu in self.keys()]}

    def __repr__(self) -> str:
        return f"SymbolicQuadric({self.text()})"


def _monomial(key: tuple[int, ...]) -> EPolynomial:
    return EPolynomial._raw(len(key), {key: 1})


@lru_cache(maxsize=100_000)
def _reduce_monomial(key: tuple[int, ...], n: int) -> tuple:
    # phi followed by truncation; for rank > n the truncated power is zero
    return tuple(phi_inverse(truncate(phi(_monomial(key)), n)).coeffs.items())


def pluecker_ideal(r: int, n: int) -> list[SymbolicQuadric]:
    """Quadrics cutting out decomposable tensors among ``sum_{lam in P_(r,n)} a_lam [b]^r_lam``."""
    if r < 1 or n < r:
        raise InvalidArguments(f"need n >= r >= 1, got r={r}, n={n}")
    parts = enumerate_partitions(r, n)
    order = {lam: i for i, lam in enumerate(parts)}
    hi = max(lam.weight for lam in parts) + 1
    forms: dict[tuple, dict[tuple[Partition, Partition], int]] = {}
    for lam in parts:
        for mu in parts:
            res = pair_residue(lam, mu, r, hi)
            for (k1, k2), c in res.terms.items():
                for alpha, c1 in _reduce_monomial(k1, n):
                    for beta, c2 in _reduce_monomial(k2, n):
                        bucket = forms.setdefault((alpha, beta), {})
                        bucket[(lam, mu)] = bucket.get((lam, mu), 0) + c * c1 * c2
    seen = set()
    out = []
    for bucket in forms.values():
        q = SymbolicQuadric(bucket, order).normalized()
        if q.terms and q not in seen:
            seen.add(q)
            out.append(q)
    out.sort(key=lambda q: [(order[b], order[a], -c) for a, b, c in
                            ((lam, mu, q.terms[(lam, mu)]) for lam, mu in q.keys())])
    return out


# -- oracle inputs ------------------------------------------------------------

def random_decomposable(r: int, n: int, seed: int) -> TensorCoefficients:
    """``phi^-1`` of a wedge of ``r`` random integer vectors on ``b_0..b_(n-1)``."""
    if r < 1 or n < r:
        raise InvalidArguments(f"need n >= r >= 1, got r={r}, n={n}")
    rng = random.Random(seed)
    while True:
        m = vector([rng.randint(-9, 9) for _ in range(n)])
        for _ in range(r - 1):
            m = wedge(m, vector([rng.randint(-9, 9) for _ in range(n)]))
        if m:
            return phi_inverse(m)


def perturbed(t: TensorCoefficients, n: int, rng: random.Random) -> TensorCoefficients:
    """Add a random nonzero multiple of one basis element from ``P_(r,n)``."""
    lam = rng.choice(enumerate_partitions(t.rank, n))
    c = 0
    while not c:
        c = rng.randint(-9, 9)
    coeffs = dict(t.coeffs)
    coeffs[lam] = coeffs.get(lam, 0) + c
    return TensorCoefficients(t.rank, coeffs)


def oracle_corpus(r: int, n: int, count: int = 100, seed: int = 0) -> list[TensorCoefficients]:
    """``count`` decomposable tensors followed by ``count`` perturbed ones."""
    rng = random.Random(f"corpus-{r}-{n}-{seed}")
    clean = [random_decomposable(r, n, rng.randrange(2**32)) for _ in range(count)]
    noisy = [perturbed(random_decomposable(r, n, rng.randrange(2**32)), n, rng) for _ in range(count)]
    return clean + noisy


def quadrics_to_json(quadrics: list[SymbolicQuadric], r: int, n: int) -> str:
    return json.dumps({"r": r, "n": n, "quadrics": [q.to_json() for q in quadrics]})
