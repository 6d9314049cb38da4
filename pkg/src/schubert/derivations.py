"""Schubert derivations: the four Hasse-Schmidt derivations generated by index shifts.

Each kind is fixed by its action on a single basis vector::

    SIGMA_PLUS       b_i -> sum_{j>=0} b_{i+j} z^j
    SIGMA_BAR_PLUS   b_i -> b_i - b_{i+1} z
    SIGMA_MINUS      b_i -> sum_{j=0..i} b_{i-j} z^-j
    SIGMA_BAR_MINUS  b_i -> b_i - b_{i-1} z^-1        (b_-1 = 0)

and extended multiplicatively to wedge products.  The barred series carry
alternating signs, ``sigma_bar(z) = sum (-1)^i sigma_bar_i z^(+-i)``;
:func:`apply_component` returns the *unsigned* operator ``sigma_bar_i`` so
that ``sigma_bar_i b_k = b_{k+1}`` for ``i = 1``.  That sign lives only in
:func:`apply_component`; :func:`apply_series` never applies it.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from functools import lru_cache
from itertools import combinations

from .algebra import _signed_permutations
from .exterior import ExteriorElement, sort_sign, vacuum, wedge_basis
from .laurent import Laurent
from .partitions import InvalidArguments, as_partition, enumerate_partitions, pieri_interlace


class SchubertKind(enum.Enum):
    SIGMA_PLUS = "sigma+"
    SIGMA_BAR_PLUS = "sigmabar+"
    SIGMA_MINUS = "sigma-"
    SIGMA_BAR_MINUS = "sigmabar-"

    @property
    def barred(self) -> bool:
        return self in (SchubertKind.SIGMA_BAR_PLUS, SchubertKind.SIGMA_BAR_MINUS)

    @property
    def positive(self) -> bool:
        return self in (SchubertKind.SIGMA_PLUS, SchubertKind.SIGMA_BAR_PLUS)

    @property
    def inverse(self) -> "SchubertKind":
        return _INVERSE[self]


_INVERSE = {
    SchubertKind.SIGMA_PLUS: SchubertKind.SIGMA_BAR_PLUS,
    SchubertKind.SIGMA_BAR_PLUS: SchubertKind.SIGMA_PLUS,
    SchubertKind.SIGMA_MINUS: SchubertKind.SIGMA_BAR_MINUS,
    SchubertKind.SIGMA_BAR_MINUS: SchubertKind.SIGMA_MINUS,
}

SIGMA_PLUS = SchubertKind.SIGMA_PLUS
SIGMA_BAR_PLUS = SchubertKind.SIGMA_BAR_PLUS
SIGMA_MINUS = SchubertKind.SIGMA_MINUS
SIGMA_BAR_MINUS = SchubertKind.SIGMA_BAR_MINUS


def generator_terms(kind: SchubertKind, i: int, hi: int | None) -> list[tuple[int, int, int]]:
    """``(exponent, index, coefficient)`` triples of the series applied to ``b_i``."""
    if kind is SIGMA_PLUS:
        return [(j, i + j, 1) for j in range(hi + 1)]
    if kind is SIGMA_BAR_PLUS:
        return [(0, i, 1), (1, i + 1, -1)]
    if kind is SIGMA_MINUS:
        return [(-j, i - j, 1) for j in range(i + 1)]
    return [(0, i, 1), (-1, i - 1, -1)] if i > 0 else [(0, i, 1)]


def _insert(key: tuple[int, ...], j: int) -> tuple[int, tuple[int, ...]]:
    """``key ^ b_j`` for sorted ``key``: sign and merged tuple."""
    pos = bisect_right(key, j)
    if pos and key[pos - 1] == j:
        return 0, ()
    sign = -1 if (len(key) - pos) & 1 else 1
    return sign, key[:pos] + (j,) + key[pos:]


def _series_on_monomial(kind, key, hi):
    # exponents of partial products only grow for the positive kinds, so pruning is safe there
    cap = hi if kind.positive else None
    state: dict[int, dict[tuple[int, ...], int]] = {0: {(): 1}}
    for i in key:
        nxt: dict[int, dict[tuple[int, ...], int]] = {}
        for d, j, g in generator_terms(kind, i, hi):
            for e, terms in state.items():
                ne = e + d
                if cap is not None and ne > cap:
                    continue
                bucket = nxt.setdefault(ne, {})
                for k, c in terms.items():
                    sign, nk = _insert(k, j)
                    if sign:
                        bucket[nk] = bucket.get(nk, 0) + sign * g * c
        state = nxt
    return state


def apply_series(kind: SchubertKind, m: ExteriorElement, hi: int | None = None) -> Laurent:
    """``D(z) m`` for the Schubert derivation ``D`` of the given kind.

    ``SIGMA_PLUS`` produces an infinite power series, so ``hi`` (the highest
    exponent to materialize) is mandatory there.  The other kinds are finite and
    are returned exactly unless ``hi`` cuts them.
    """
    if kind is SIGMA_PLUS and hi is None:
        raise InvalidArguments("SIGMA_PLUS needs an upper exponent hi")
    acc: dict[int, dict[tuple[int, ...], int]] = {}
    for key, c in m.terms.items():
        for e, terms in _series_on_monomial(kind, key, hi).items():
            bucket = acc.setdefault(e, {})
            for k, v in terms.items():
                bucket[k] = bucket.get(k, 0) + c * v
    coeffs = {e: ExteriorElement._raw(m.degree, {k: v for k, v in t.items() if v})
              for e, t in acc.items()}
    zero = ExteriorElement.zero(m.degree)
    if kind is SIGMA_PLUS:
        return Laurent(coeffs, zero, 0, hi, False)
    out = Laurent.finite(coeffs, zero)
    if hi is not None and hi < out.hi:
        out = out.truncated(hi)
    return out


def apply_series_laurent(kind: SchubertKind, series: Laurent, hi: int | None = None) -> Laurent:
    """Apply ``D(z)`` to a Laurent series with exterior coefficients."""
    if not series.exact:
        if not kind.positive:
            raise InvalidArguments("a z^-1 series cannot act on a truncated power series")
        hi = series.hi if hi is None else min(hi, series.hi)
    if kind is SIGMA_PLUS and hi is None:
        raise InvalidArguments("SIGMA_PLUS needs an upper exponent hi")
    total = Laurent.finite({}, series.zero)
    for e, c in series.items():
        if hi is not None and kind.positive and e > hi:
            continue
        total = total + apply_series(kind, c, None if hi is None else hi - e).shift(e)
    if hi is not None and (not total.exact or hi < total.hi):
        total = total.truncated(hi)
    return total


def _bounded_compositions(total: int, bounds: tuple[int, ...]):
    """Weak compositions of ``total`` with part ``t`` at most ``bounds[t]``."""
    if not bounds:
        if total == 0:
            yield ()
        return
    head, rest = bounds[0], bounds[1:]
    room = sum(rest)
    for c in range(max(0, total - room), min(head, total) + 1):
        for tail in _bounded_compositions(total - c, rest):
            yield (c,) + tail


@lru_cache(maxsize=200_000)
def _component_on_monomial(kind: SchubertKind, i: int, key: tuple[int, ...]) -> tuple:
    out: dict[tuple[int, ...], int] = {}
    if kind is SIGMA_PLUS:
        shifts = _bounded_compositions(i, (i,) * len(key))
        candidates = (tuple(k + s for k, s in zip(key, sh)) for sh in shifts)
    elif kind is SIGMA_MINUS:
        shifts = _bounded_compositions(i, key)
        candidates = (tuple(k - s for k, s in zip(key, sh)) for sh in shifts)
    else:
        step = 1 if kind is SIGMA_BAR_PLUS else -1
        candidates = []
        for pos in combinations(range(len(key)), i):
            new = list(key)
            for p in pos:
                new[p] += step
            if min(new, default=0) >= 0:
                candidates.append(tuple(new))
    for cand in candidates:
        sign, k = sort_sign(cand)
        if sign:
            out[k] = out.get(k, 0) + sign
    return tuple((k, v) for k, v in out.items() if v)


def apply_component(kind: SchubertKind, i: int, m: ExteriorElement) -> ExteriorElement:
    """The operator ``sigma_{+-i}`` or the unsigned ``sigma_bar_{+-i}`` applied to ``m``.

    Zero for ``i < 0``.
    """
    if i < 0:
        return ExteriorElement.zero(m.degree)
    if i == 0:
        return m
    out: dict[tuple[int, ...], int] = {}
    for key, c in m.terms.items():
        for k, v in _component_on_monomial(kind, i, key):
            out[k] = out.get(k, 0) + c * v
    return ExteriorElement._raw(m.degree, {k: v for k, v in out.items() if v})


def sigma(i: int, m: ExteriorElement) -> ExteriorElement:
    return apply_component(SIGMA_PLUS, i, m)


def sigma_bar(i: int, m: ExteriorElement) -> ExteriorElement:
    return apply_component(SIGMA_BAR_PLUS, i, m)


def pieri_expand(i: int, lam, r: int) -> ExteriorElement:
    """Sum of ``[b]^r_mu`` over ``mu`` interlacing ``lam`` with ``|mu| = |lam| + i``."""
    lam = as_partition(lam)
    if len(lam) > r:
        raise InvalidArguments(f"{lam.label()} has more than {r} parts")
    if i < 0:
        return ExteriorElement.zero(r)
    top = (lam[0] if lam else 0) + i
    out = ExteriorElement.zero(r)
    for mu in enumerate_partitions(r, r + top) if r else []:
        if mu.weight == lam.weight + i and pieri_interlace(lam, mu, r):
            out = out + wedge_basis(mu, r)
    if r == 0 and i == 0:
        out = vacuum(0)
    return out


def giambelli(lam, r: int) -> ExteriorElement:
    """``det(sigma_{lam_j - j + i}) [b]^r_0`` by the permutation expansion."""
    lam = as_partition(lam)
    parts = lam.padded(r)
    start = vacuum(r)
    out = ExteriorElement.zero(r)
    for sign, perm in _signed_permutations(r):
        # row i pairs with column perm[i]
        orders = [parts[perm[i]] - perm[i] + i for i in range(r)]
        if min(orders, default=0) < 0:
            continue
        m = start
        for k in orders:
            m = sigma(k, m)
            if not m:
                break
        out = out + (m if sign > 0 else -m)
    return out
