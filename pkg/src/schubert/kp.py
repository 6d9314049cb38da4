"""The r -> infinity limit: the x-variables, bosonic vertex operators and the KP residue.

Everything here is truncated at an explicit weight bound ``W`` (``x_i`` and
``h_i`` have weight ``i``), so a passing check means "the residue vanishes up
to weight W" and nothing more.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Mapping

from .algebra import det
from .derivations import sigma
from .exterior import vacuum
from .laurent import Laurent, Tensor, residue_of_product
from .partitions import InvalidArguments, Partition, as_partition, partitions_of
from .pluecker import theorem2_residue
from .symmetric import phi_inverse

FAMILIES = ("x", "h")

Key = tuple  # ((var, power), ...) sorted by var, powers positive


def key_weight(key: Key) -> int:
    return sum(v * p for v, p in key)


def _merge(a: Key, b: Key) -> Key:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, p in b:
        out[v] = out.get(v, 0) + p
    return tuple(sorted(out.items()))


class QPolynomial:
    """Sparse rational polynomial in ``x_1, x_2, ...`` or ``h_1, h_2, ...``, truncated at weight ``W``."""

    __slots__ = ("family", "terms", "weight_bound")

    def __init__(self, family: str, terms: Mapping[Key, Any] | None, weight_bound: int):
        if family not in FAMILIES:
            raise InvalidArguments(f"unknown variable family {family!r}")
        self.family = family
        self.weight_bound = weight_bound
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            key = tuple(sorted((int(v), int(p)) for v, p in key if p))
            if any(v < 1 or p < 0 for v, p in key):
                raise InvalidArguments(f"bad monomial {key}")
            if len({v for v, _ in key}) != len(key):
                raise InvalidArguments(f"repeated variable in {key}")
            c = Fraction(c)
            if c and key_weight(key) <= weight_bound:
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, family, terms, weight_bound) -> "QPolynomial":
        obj = cls.__new__(cls)
        obj.family = family
        obj.terms = terms
        obj.weight_bound = weight_bound
        return obj

    @classmethod
    def constant(cls, family: str, c, weight_bound: int) -> "QPolynomial":
        c = Fraction(c)
        return cls._raw(family, {(): c} if c else {}, weight_bound)

    @classmethod
    def var(cls, family: str, i: int, weight_bound: int) -> "QPolynomial":
        return cls(family, {((i, 1),): 1}, weight_bound)

    def zero(self) -> "QPolynomial":
        return QPolynomial._raw(self.family, {}, self.weight_bound)

    def _like(self, terms) -> "QPolynomial":
        return QPolynomial._raw(self.family, terms, self.weight_bound)

    def _check(self, other: "QPolynomial"):
        if self.family != other.family:
            raise InvalidArguments(f"cannot mix families {self.family} and {other.family}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.family == other.family and self.terms == other.terms

    def __hash__(self):
        return hash((self.family, frozenset(self.terms.items())))

    def __add__(self, other) -> "QPolynomial":
        if isinstance(other, (int, Fraction)):
            other = QPolynomial.constant(self.family, other, self.weight_bound)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "QPolynomial":
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.zero()
            return self._like({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        self._check(other)
        w = min(self.weight_bound, other.weight_bound)
        out: dict[Key, Fraction] = {}
        for ka, va in self.terms.items():
            wa = key_weight(ka)
            for kb, vb in other.terms.items():
                if wa + key_weight(kb) > w:
                    continue
                k = _merge(ka, kb)
                out[k] = out.get(k, 0) + va * vb
        return QPolynomial._raw(self.family, {k: v for k, v in out.items() if v}, w)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "QPolynomial":
        return self * (1 / Fraction(c))

    def weight(self) -> int:
        return max((key_weight(k) for k in self.terms), default=0)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.terms.values())

    def substitute(self, images: Mapping[int, "QPolynomial"], family: str) -> "QPolynomial":
        """Replace every variable ``i`` by ``images[i]`` (a polynomial of ``family``)."""
        one = QPolynomial.constant(family, 1, self.weight_bound)
        out = QPolynomial._raw(family, {}, self.weight_bound)
        for key, c in self.terms.items():
            term = one
            for v, p in key:
                for _ in range(p):
                    term = term * images[v]
            out = out + term * c
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (key_weight(k), k)):
            mono = "*".join(f"{self.family}{v}" + (f"^{p}" if p > 1 else "") for v, p in key)
            c = self.terms[key]
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"({c})*{mono}"))
        return " + ".join(parts)

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {"family": self.family, "weight_bound": self.weight_bound,
                "terms": [{"exponents": [[v, p] for v, p in key], "coeff": str(c)}
                          for key, c in sorted(self.terms.items(), key=lambda kv: (key_weight(kv[0]), kv[0]))]}

    @classmethod
    def from_json(cls, data) -> "QPolynomial":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            family = data["family"]
            w = data["weight_bound"]
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InvalidArguments(f"weight_bound must be a positive integer, got {w!r}")
            terms: dict[Key, Fraction] = {}
            for entry in data["terms"]:
                key = tuple((int(v), int(p)) for v, p in entry["exponents"])
                coeff = entry["coeff"]
                if not isinstance(coeff, (str, int)) or isinstance(coeff, bool):
                    raise InvalidArguments(f"coeff must be a string like 'p/q': {coeff!r}")
                c = Fraction(coeff)
                if key_weight(key) > w and c:
                    raise InvalidArguments(f"monomial {key} exceeds weight bound {w}")
                skey = tuple(sorted(key))
                terms[skey] = terms.get(skey, 0) + c
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InvalidArguments):
                raise
            raise InvalidArguments(f"malformed tau JSON: {exc}") from exc
        return cls(family, terms, w)


# -- change of variables ------------------------------------------------------

def _multiplicities(mu: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in mu:
        out[p] = out.get(p, 0) + 1
    return out


@lru_cache(maxsize=None)
def _h_in_x_terms(n: int) -> tuple:
    # coefficient of z^n in exp(sum x_i z^i) = sum over mu |- n of prod x_i^m_i / m_i!
    out = []
    for mu in partitions_of(n):
        mult = _multiplicities(mu)
        c = Fraction(1)
        for m in mult.values():
            c /= factorial(m)
        out.append((tuple(sorted(mult.items())), c))
    return tuple(out)


def h_in_x(n: int, W: int) -> QPolynomial:
    if n > W:
        raise InvalidArguments(f"h_{n} exceeds weight bound {W}")
    if n < 0:
        return QPolynomial.constant("x", 0, W)
    return QPolynomial("x", dict(_h_in_x_terms(n)), W)


@lru_cache(maxsize=None)
def _x_in_h_terms(i: int) -> tuple:
    # coefficient of z^i in log(1 + sum_{n>=1} h_n z^n)
    out = []
    for mu in partitions_of(i):
        mult = _multiplicities(mu)
        ell = len(mu)
        c = Fraction((-1) ** (ell - 1) * factorial(ell - 1))
        for m in mult.values():
            c /= factorial(m)
        out.append((tuple(sorted(mult.items())), c))
    return tuple(out)


def x_in_h(i: int, W: int) -> QPolynomial:
    if i < 1:
        raise InvalidArguments("x_i is defined for i >= 1")
    if i > W:
        raise InvalidArguments(f"x_{i} exceeds weight bound {W}")
    return QPolynomial("h", dict(_x_in_h_terms(i)), W)


def h_to_x(p: QPolynomial) -> QPolynomial:
    if p.family == "x":
        return p
    W = p.weight_bound
    return p.substitute({i: h_in_x(i, W) for i in range(1, W + 1)}, "x")


def x_to_h(p: QPolynomial) -> QPolynomial:
    if p.family == "h":
        return p
    W = p.weight_bound
    return p.substitute({i: x_in_h(i, W) for i in range(1, W + 1)}, "h")


def diff_x(p: QPolynomial, j: int) -> QPolynomial:
    """``d p / d x_j``."""
    if p.family != "x":
        raise InvalidArguments("diff_x needs a polynomial in the x variables")
    out: dict[Key, Fraction] = {}
    for key, c in p.terms.items():
        for pos, (v, e) in enumerate(key):
            if v == j:
                rest = key[:pos] + ((v, e - 1),) + key[pos + 1:] if e > 1 else key[:pos] + key[pos + 1:]
                out[rest] = out.get(rest, 0) + c * e
    return p._like({k: v for k, v in out.items() if v})


def schur_h(lam, W: int) -> QPolynomial:
    """``Delta_lam`` as a polynomial in the h's (Jacobi-Trudi)."""
    lam = as_partition(lam)
    one = QPolynomial.constant("h", 1, W)
    zero = QPolynomial.constant("h", 0, W)

    def entry(k):
        if k < 0:
            return zero
        return one if k == 0 else QPolynomial.var("h", k, W)

    mat = [[entry(lam[j] - j + i) for j in range(len(lam))] for i in range(len(lam))]
    return det(mat, one, zero)


# -- vertex operators ---------------------------------------------------------

def _exp_series(sign: int, W: int, hi: int) -> Laurent:
    """``exp(sign * sum x_i z^i)`` up to ``z^hi``: coefficients ``h_n(sign x)``."""
    coeffs = {}
    for n in range(0, min(hi, W) + 1):
        p = h_in_x(n, W)
        if sign < 0:
            p = p._like({k: v * (-1) ** sum(e for _, e in k) for k, v in p.terms.items()})
        coeffs[n] = p
    # coefficients beyond z^W have weight > W and truncate to zero
    return Laurent(coeffs, QPolynomial.constant("x", 0, W), 0, hi, False)


def shift_operator(p: QPolynomial, sign: int) -> Laurent:
    """``exp(sign * sum_i z^-i / i d/dx_i) p``; a finite sum because ``p`` has bounded weight."""
    zero = p.zero()
    total: dict[int, QPolynomial] = {0: p} if p else {}
    current = dict(total)
    k = 0
    while current:
        k += 1
        nxt: dict[int, QPolynomial] = {}
        for e, c in current.items():
            for i in range(1, c.weight() + 1):
                d = diff_x(c, i)
                if d:
                    term = d * Fraction(sign, i)
                    nxt[e - i] = nxt[e - i] + term if e - i in nxt else term
        current = {e: c for e, c in nxt.items() if c}
        # D^k / k!: divide the fresh layer once more than the last one
        current = {e: c / k for e, c in current.items()}
        for e, c in current.items():
            total[e] = total[e] + c if e in total else c
    return Laurent.finite(total, zero)


def gamma_boson(p: QPolynomial, star: bool = False, window: tuple[int | None, int] = (None, 0)) -> Laurent:
    """``Gamma(z) p`` or ``Gamma*(z) p`` on the window ``[lo, hi]``.

    ``lo = None`` keeps every negative power (there are finitely many).
    """
    if p.family != "x":
        p = h_to_x(p)
    lo, hi = window
    sign = -1 if star else 1
    shifted = shift_operator(p, -sign)
    expo = _exp_series(sign, p.weight_bound, hi - shifted.lo)
    out = expo.mul(shifted, hi=hi)
    if lo is not None:
        kept = {e: c for e, c in out.coeffs.items() if e >= lo}
        out = Laurent(kept, out.zero, min(lo, hi), out.hi, out.exact)
    return out


def gamma_on_h(n: int, star: bool, W: int, hi: int) -> Laurent:
    """The h-side formulas for the vertex operators on ``h_n``, mapped to x.

    ``Gamma(z) h_n = (sum h_k z^k)(h_n - h_(n-1) z^-1)`` and
    ``Gamma*(z) h_n = E(z) sum_j h_(n-j) z^-j`` with ``E(z) = 1 / sum h_k z^k``.
    """
    one = QPolynomial.constant("h", 1, W)
    zero = QPolynomial.constant("h", 0, W)

    def hq(k):
        if k < 0:
            return zero
        return one if k == 0 else QPolynomial.var("h", k, W)

    if star:
        eps = [one]
        for k in range(1, W + 1):
            acc = zero
            for i in range(1, k + 1):
                acc = acc - hq(i) * eps[k - i]
            eps.append(acc)
        front = Laurent({k: eps[k] for k in range(W + 1)}, zero, 0, W, False)
        back = Laurent.finite({-j: hq(n - j) for j in range(n + 1)}, zero)
    else:
        front = Laurent({k: hq(k) for k in range(W + 1)}, zero, 0, W, False)
        back = Laurent.finite({0: hq(n), -1: -hq(n - 1)}, zero)
    out = front.mul(back, hi=min(hi, front.hi + back.lo))
    return out.map(h_to_x, QPolynomial.constant("x", 0, W))


# -- KP checks ----------------------------------------------------------------

@dataclass(frozen=True)
class KPVerdict:
    """Outcome of a truncated KP check; ``passed`` means "vanishes up to weight W"."""

    passed: bool
    weight_bound: int
    witness: tuple | None = None
    method: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"pass: residue vanishes up to weight {self.weight_bound} ({self.method})"
        (left, right), value = self.witness
        return (f"fail: residue nonzero up to weight {self.weight_bound} ({self.method}); "
                f"first nonzero coefficient {value} at {_mono_text(left, chr(39))} (x) "
                f"{_mono_text(right, chr(39) * 2)}")


def _mono_text(key, mark: str) -> str:
    """Readable monomial: exponent vectors are in the e's, pair tuples in the x's."""
    if all(isinstance(a, int) for a in key):
        parts = [f"e{mark}{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(key) if a]
    else:
        parts = [f"x{mark}{v}" + (f"^{p}" if p > 1 else "") for v, p in key]
    return "*".join(parts) or "1"


def _first_witness(res: Tensor):
    key = min(res.terms, key=lambda k: (repr(k[0]), repr(k[1])))
    return key, res.terms[key]


def h_polynomial_to_schur(p: QPolynomial, r: int):
    """Schur coefficients at rank ``r`` of an integral h-polynomial (``h_n`` acts as ``sigma_n``)."""
    if p.family != "h":
        raise InvalidArguments("expected a polynomial in the h variables")
    if not p.is_integral():
        raise InvalidArguments("the integer check needs integer h-coefficients")
    m_total = None
    start = vacuum(r)
    for key, c in p.terms.items():
        m = start
        for v, e in key:
            for _ in range(e):
                m = sigma(v, m)
        term = m * int(c)
        m_total = term if m_total is None else m_total + term
    if m_total is None:
        m_total = start * 0
    return phi_inverse(m_total)


def kp_integer_check(p: QPolynomial, W: int | None = None) -> KPVerdict:
    """Integer form of the KP residue, run as the finite-rank criterion at rank ``W``."""
    if W is None:
        W = p.weight_bound
    if p.family == "x":
        p = x_to_h(p)
    if p.weight() > W:
        raise InvalidArguments(f"polynomial weight {p.weight()} exceeds bound {W}")
    t = h_polynomial_to_schur(p, W)
    res = theorem2_residue(t)
    if not res:
        return KPVerdict(True, W, None, f"integer form at rank {W}")
    return KPVerdict(False, W, _first_witness(res), f"integer form at rank {W}")


def kp_residue_check(tau: QPolynomial, W: int | None = None, window: tuple[int, int] | None = None) -> KPVerdict:
    """``Res_z Gamma*(z) tau (x) Gamma(z) tau`` over Q with two alphabets, truncated at ``W``."""
    if W is None:
        W = tau.weight_bound
    if tau.family == "h":
        tau = h_to_x(tau)
    if tau.weight() > W:
        raise InvalidArguments(f"tau has weight {tau.weight()} above bound {W}")
    tau = QPolynomial._raw("x", dict(tau.terms), W)
    d = tau.weight()
    hi = window[1] if window is not None else max(d - 1, 0)
    left = gamma_boson(tau, star=True, window=(None, hi))
    right = gamma_boson(tau, star=False, window=(None, max(hi, -1 - left.lo)))
    res = residue_of_product(left, right, Tensor.of)
    if not res:
        return KPVerdict(True, W, None, "bosonic vertex operators")
    return KPVerdict(False, W, _first_witness(res), "bosonic vertex operators")
