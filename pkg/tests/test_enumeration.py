"""Completion scans against naive trial division, plus shift sets."""

from itertools import combinations

import pytest

from tnomial import (CapError, FactorSpec, HypothesisError, ProductSpec,
                     build_shift_set, count_tnomials, count_trinomials,
                     degree_sum, enumerate_tnomials, poly_mod, poly_mul,
                     primitive_poly, shift_set_size, tnomial_poly)
from tnomial import enumeration


def naive_tnomials(poly, e, t, cap=None):
    """Every t-nomial multiple by packing and trial division, no tables."""
    cap = e - 1 if cap is None else cap
    found = []
    for exps in combinations(range(1, cap + 1), t - 1):
        p = 1
        for a in exps:
            p |= 1 << a
        if poly_mod(p, poly) == 0:
            found.append(tuple(reversed(exps)))
    return sorted(found)


GRID = [(primitive_poly(d), (1 << d) - 1) for d in range(2, 7)]


@pytest.mark.parametrize('poly,e', GRID)
@pytest.mark.parametrize('t', [3, 4, 5])
def test_scan_matches_naive_single(poly, e, t):
    if e > 31 and t == 5:
        pytest.skip('naive oracle too slow')
    expected = naive_tnomials(poly, e, t)
    assert enumerate_tnomials(poly, e, t) == expected
    assert count_tnomials(poly, e, t) == len(expected)


@pytest.mark.parametrize('t', [3, 4, 5])
def test_scan_matches_naive_product(t):
    spec = ProductSpec.from_degrees([2, 3])
    expected = naive_tnomials(spec.poly, spec.exponent, t)
    assert enumerate_tnomials(spec.poly, spec.exponent, t) == expected
    assert count_tnomials(spec.poly, spec.exponent, t) == len(expected)


@pytest.mark.parametrize('poly,e,t,cap', [
    (primitive_poly(6), 63, 5, 20),
    (primitive_poly(7), 127, 4, 30),
    (primitive_poly(4), 15, 3, 10),
])
def test_scan_matches_naive_capped(poly, e, t, cap):
    expected = naive_tnomials(poly, e, t, cap)
    assert enumerate_tnomials(poly, e, t, degree_cap=cap) == expected
    assert count_tnomials(poly, e, t, degree_cap=cap) == len(expected)


def test_pinned_counts():
    assert count_trinomials(primitive_poly(3), 7) == 3
    assert count_trinomials(primitive_poly(5), 31) == 15
    assert count_tnomials(primitive_poly(5), 31, 5) == 840
    spec = ProductSpec.from_degrees([2, 3])
    assert count_tnomials(spec.poly, spec.exponent, 3) == 6
    assert count_tnomials(spec.poly, spec.exponent, 5) == 155


def test_trinomial_fast_path_matches_scan():
    for d in range(2, 9):
        f, e = primitive_poly(d), (1 << d) - 1
        assert count_trinomials(f, e) == (e - 1) // 2
        assert count_tnomials(f, e, 3, degree_cap=e - 1) == (e - 1) // 2


def test_enumerate_example():
    assert enumerate_tnomials(0b1011, 7, 3) == [(3, 1), (5, 4), (6, 2)]


def test_enumerate_is_deterministic():
    spec = ProductSpec.from_degrees([3, 4])
    first = enumerate_tnomials(spec.poly, spec.exponent, 4)
    assert enumerate_tnomials(spec.poly, spec.exponent, 4) == first
    capped = enumerate_tnomials(spec.poly, spec.exponent, 4, degree_cap=40)
    assert capped == [m for m in first if m[0] <= 40]
    assert enumerate_tnomials(spec.poly, spec.exponent, 4) == first


@pytest.mark.parametrize('t', [4, 5])
@pytest.mark.parametrize('d', [6, 7])
def test_kernel_matches_python_scan(monkeypatch, d, t):
    if (d, t) == (7, 5):
        pytest.skip('python reference too slow at this size')
    poly, e = primitive_poly(d), (1 << d) - 1
    monkeypatch.setattr(enumeration, 'KERNEL_THRESHOLD', 10 ** 18)
    py = enumeration._scan(poly, e, t, e - 1, collect=True)
    monkeypatch.setattr(enumeration, 'KERNEL_THRESHOLD', 0)
    jit = enumeration._scan(poly, e, t, e - 1, collect=True)
    assert (py[0], py[1]) == (jit[0], jit[1])
    assert sorted(py[2]) == sorted(jit[2])


def test_degree_sum_example():
    assert degree_sum(0b1011, 7, 3) == 3 + 5 + 6
    for t in (3, 4, 5):
        f, e = primitive_poly(5), 31
        found = enumerate_tnomials(f, e, t)
        assert degree_sum(f, e, t) == sum(m[0] for m in found)


def test_tnomial_poly():
    assert tnomial_poly((6, 2)) == 0b1000101
    assert tnomial_poly(()) == 1
    assert tnomial_poly((3, 1)) == 0b1011
    with pytest.raises(ValueError):
        tnomial_poly((3, 0))
    with pytest.raises(ValueError):
        tnomial_poly((3, 3))


def test_shift_set_example():
    ss = build_shift_set((0b1011, 7))
    assert ss.elements == ((4, 2, 1), (5, 3, 2), (6, 4, 3), (6, 5, 1))
    assert len(ss) == 4
    for a, b, s in ss.elements:
        assert a > b > s >= 1 and a < 7
        assert poly_mod((1 << a) | (1 << b) | (1 << s), 0b1011) == 0


def test_shift_set_inputs_and_sizes():
    assert len(build_shift_set(FactorSpec.from_poly(0b1011))) == 4
    assert len(build_shift_set((0b111, 3))) == 0
    pair = ProductSpec.from_degrees([2, 3])
    assert len(build_shift_set((pair.poly, 21))) == 36
    assert shift_set_size(7, 3) == 4
    assert shift_set_size(21, 6) == 36
    assert shift_set_size(3, 1) == 0
    with pytest.raises(ValueError):
        shift_set_size(7, 2)


def test_weight_validation():
    for t in (2, 6):
        with pytest.raises(ValueError):
            count_tnomials(0b1011, 7, t)
        with pytest.raises(ValueError):
            enumerate_tnomials(0b1011, 7, t)


def test_degree_cap_validation():
    for cap in (0, 7, -2):
        with pytest.raises(ValueError):
            count_tnomials(0b1011, 7, 4, degree_cap=cap)


def test_scan_degree_cap():
    with pytest.raises(CapError):
        count_tnomials((1 << 25) | 0b111011, 100, 4)


def test_scan_rejects_wrong_exponent():
    with pytest.raises(HypothesisError):
        count_tnomials(0b1011, 6, 4)


def test_multiples_are_multiples():
    spec = ProductSpec.from_degrees([3, 5])
    for m in enumerate_tnomials(spec.poly, spec.exponent, 4):
        assert poly_mod(tnomial_poly(m), spec.poly) == 0
        assert m[0] < spec.exponent


def test_product_multiples_divisible_by_each_factor():
    spec = ProductSpec.from_degrees([2, 5])
    assert poly_mul(spec.factors[0].poly, spec.factors[1].poly) == spec.poly
    for m in enumerate_tnomials(spec.poly, spec.exponent, 4):
        p = tnomial_poly(m)
        for f in spec.factors:
            assert poly_mod(p, f.poly) == 0
