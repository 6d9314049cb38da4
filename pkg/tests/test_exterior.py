import random

import pytest
from hypothesis import given, strategies as st

from schubert.exterior import (ExteriorElement, basis, contract, contraction_stream, from_schur,
                               insertion_stream, pairing, schur_coefficients, truncate, vector, wedge,
                               wedge_basis)
from schubert.partitions import InvalidArguments

from oracles import wedge_of_vectors_coefficients


def test_basis_sign_normalization():
    assert basis(1, 0) == -basis(0, 1)
    assert not basis(2, 2)


def test_wedge_anticommutes_on_vectors():
    assert wedge(basis(0), basis(1)) == -wedge(basis(1), basis(0))
    assert wedge(basis(0), basis(0)) == ExteriorElement.zero(2)


def test_wedge_basis():
    assert wedge_basis((2, 2), 2) == basis(2, 3)
    assert wedge_basis((), 3) == basis(0, 1, 2)


def test_contract_signs():
    m = basis(0, 2, 5)
    assert contract(0, m) == basis(2, 5)
    assert contract(2, m) == -basis(0, 5)
    assert contract(5, m) == basis(0, 2)
    assert not contract(1, m)
    with pytest.raises(InvalidArguments):
        contract(0, ExteriorElement(0, {(): 1}))


vectors = st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=3)


@given(vectors)
def test_wedge_of_vectors_matches_minors(vs):
    m = vector(vs[0])
    for v in vs[1:]:
        m = wedge(m, vector(v))
    from itertools import combinations
    for idx in combinations(range(5), len(vs)):
        assert m.coefficient(idx) == wedge_of_vectors_coefficients(vs, idx)


def test_contraction_against_pairing_oracle():
    # <beta_{j1} ^ beta_{j2}, m> computed by the determinant pairing agrees
    # with contracting beta_{j1} first, then beta_{j2}
    rng = random.Random(3)
    for _ in range(30):
        m = ExteriorElement(2, {tuple(sorted(rng.sample(range(6), 2))): rng.randint(-5, 5) for _ in range(4)})
        for j1 in range(6):
            for j2 in range(6):
                cov = [[1 if k == j1 else 0 for k in range(6)], [1 if k == j2 else 0 for k in range(6)]]
                twice = contract(j2, contract(j1, m))
                assert pairing(cov, m) == twice.coefficient(())


def test_streams():
    m = basis(0, 2)
    cs = contraction_stream(m)
    assert cs.exact and cs[-1] == basis(2) and cs[-3] == -basis(0) and cs[-2] == ExteriorElement.zero(1)
    ins = insertion_stream(m, 3)
    assert ins[1] == basis(1, 0, 2) and ins[3] == basis(3, 0, 2) and not ins[0]


def test_truncate_and_schur_roundtrip():
    m = 3 * basis(0, 2) - basis(1, 5)
    assert truncate(m, 5) == 3 * basis(0, 2)
    assert from_schur(schur_coefficients(m), 2) == m
