import pytest

from schubert.laurent import Laurent, Tensor, WindowError, residue_of_product


def series(coeffs, hi=None):
    if hi is None:
        return Laurent.finite(coeffs, 0)
    return Laurent(coeffs, 0, min(coeffs, default=0), hi, False)


def test_uncomputed_coefficient_raises():
    s = series({0: 1, 1: 1}, hi=1)
    assert s[1] == 1
    with pytest.raises(WindowError):
        s[2]


def test_exact_series_reads_zero_beyond_support():
    assert series({-1: 2, 3: 1})[7] == 0


def test_product_window_of_truncated_series():
    a = series({0: 1, 1: 1, 2: 1}, hi=2)  # 1/(1-z) to order 2
    b = Laurent.finite({0: 1, 1: -1}, 0)
    p = a * b
    assert p.hi == 2 and not p.exact
    assert [p[e] for e in range(3)] == [1, 0, 0]


def test_laurent_times_power_series_window_shrinks():
    a = Laurent.finite({-2: 1}, 0)
    b = series({0: 1, 1: 1, 2: 1, 3: 1}, hi=3)
    assert (a * b).hi == 1


def test_residue_reads_only_what_it_needs():
    left = Laurent.finite({-3: 1, 0: 2}, 0)
    right = series({0: 5, 1: 7, 2: 11}, hi=2)
    assert residue_of_product(left, right) == 11
    with pytest.raises(WindowError):
        residue_of_product(Laurent.finite({-4: 1}, 0), right)


def test_mul_cap():
    a = Laurent.finite({0: 1, 5: 1}, 0)
    p = a.mul(a, hi=4)
    assert not p.exact and p[0] == 1 and p.hi == 4


def test_tensor_arithmetic():
    t = Tensor({("a", "b"): 2}) + Tensor({("a", "b"): -2})
    assert not t
    assert Tensor({("a", "b"): 1}) * 3 == Tensor({("a", "b"): 3})
