"""Closed-form pair and product counts against scans and trial division."""

from itertools import combinations

import pytest

from tnomial import (CapError, HypothesisError, ProductSpec, count3_product,
                     count4_pair, count5_pair, count_product_recursive,
                     count_tnomials, five_term_cases, lower_bound_t,
                     oracle_count_product, poly_mod, primitive_poly)

CASE_KEYS = {'five_five', 'pad3_five', 'five_pad3', 'shift_five', 'five_shift',
             'shift_shift', 'shift_pad3', 'pad3_shift', 'pad3_pad3'}


def test_product_spec_from_polys():
    spec = ProductSpec.from_polys([0b111, 0b1011])
    assert spec.poly == 0b110001
    assert spec.exponent == 21
    assert spec.degrees == (2, 3)
    assert spec.polynomials == ('x^2+x+1', 'x^3+x+1')
    single = ProductSpec.from_polys([0b100101])
    assert (single.poly, single.exponent) == (0b100101, 31)


def test_product_spec_from_degrees():
    spec = ProductSpec.from_degrees([2, 3, 5])
    assert [f.poly for f in spec.factors] == [0b111, 0b1011, 0b100101]
    assert spec.exponent == 3 * 7 * 31


def test_product_spec_validation():
    with pytest.raises(HypothesisError):
        ProductSpec.from_polys([0b111, 0b11111])       # second factor not primitive
    with pytest.raises(HypothesisError):
        ProductSpec.from_degrees([2, 4])               # orders 3 and 15 share 3
    with pytest.raises(HypothesisError):
        ProductSpec.from_polys([0b1011, 0b1101])       # both degree 3, orders equal
    with pytest.raises(ValueError):
        ProductSpec.from_polys([])


def test_lower_bound_examples():
    assert lower_bound_t([15], 3) == 15
    assert lower_bound_t([1, 3], 3) == 6
    assert lower_bound_t([1, 3, 15], 3) == 180
    assert lower_bound_t([0, 0, 840], 5) == 0
    assert lower_bound_t([56, 5440680], 5) == 24 * 56 * 5440680
    with pytest.raises(ValueError):
        lower_bound_t([], 4)


def test_count3_product():
    assert count3_product([1, 3]) == 6
    assert count3_product([1, 3, 15]) == 180
    assert count3_product([15]) == 15
    with pytest.raises(ValueError):
        count3_product([])


def test_count4_pair_example():
    assert count4_pair(3, 7, 0, 4) == 40
    with pytest.raises(HypothesisError):
        count4_pair(3, 15, 0, 4)


def test_five_term_cases_example():
    cases = five_term_cases(3, 7, 1, 3, 0, 0, 0, 4)
    assert set(cases) == CASE_KEYS
    assert cases['pad3_shift'] == 56
    assert cases['pad3_pad3'] == 99
    assert sum(cases.values()) == 155
    assert count5_pair(3, 7, 1, 3, 0, 0, 0, 4) == 155


def test_five_term_cases_validation():
    with pytest.raises(HypothesisError):
        five_term_cases(3, 15, 1, 7, 0, 0, 0, 28)   # non-coprime orders
    with pytest.raises(HypothesisError):
        five_term_cases(3, 7, 1, 3, 0, 0, 1, 4)     # n1 != 3*1/3 - 1


def naive_count(poly, e, t):
    total = 0
    for exps in combinations(range(1, e), t - 1):
        p = 1
        for a in exps:
            p |= 1 << a
        total += poly_mod(p, poly) == 0
    return total


@pytest.mark.parametrize('t,expected', [(4, 40), (5, 155)])
def test_pair_formula_matches_trial_division(t, expected):
    spec = ProductSpec.from_degrees([2, 3])
    assert count_product_recursive(spec, t).exact == expected
    assert naive_count(spec.poly, spec.exponent, t) == expected


def test_recursive_report_single_factor():
    rep = count_product_recursive(ProductSpec.from_degrees([5]), 5)
    assert rep.route == 'oracle'
    assert rep.exact == 840
    assert rep.lower_bound == 840
    assert rep.prefix_stats == ()
    assert rep.factor_stats[0]['trinomial_count'] == 15
    assert rep.factor_stats[0]['shift_set_size'] == 140


def test_recursive_report_pair():
    rep = count_product_recursive(
        ProductSpec.from_polys([0b10011, 0b1001011001]), 5)
    assert rep.route == 'closed_form_pair'
    assert rep.exact == 17533740245
    assert rep.lower_bound == 24 * 56 * 5440680
    assert [s['tnomial_count'] for s in rep.factor_stats] == [56, 5440680]
    assert rep.prefix_stats[0]['label'] == 'f1*f2'
    assert rep.prefix_stats[0]['exponent'] == 7665


def test_recursive_report_triple():
    spec = ProductSpec.from_degrees([2, 3, 5])
    rep = count_product_recursive(spec, 5)
    assert rep.route == 'recursion'
    assert rep.exact == 7117650
    assert [s['label'] for s in rep.prefix_stats] == ['f1*f2', 'f1*f2*f3']
    assert rep.prefix_stats[0]['tnomial_count'] == 155
    assert rep.prefix_stats[1]['trinomial_count'] == 180
    assert count_product_recursive(spec, 3).exact == 180
    assert count_product_recursive(spec, 3).lower_bound == 180
    assert count_product_recursive(spec, 4).exact == 46380


def test_fold_order_invariance():
    t5 = {ds: count_product_recursive(ProductSpec.from_degrees(ds), 5).exact
          for ds in [(2, 3), (3, 2)]}
    assert t5[(2, 3)] == t5[(3, 2)] == 155


def test_recursion_matches_scan_on_triple():
    spec = ProductSpec.from_degrees([2, 3, 5])
    for t in (3, 4, 5):
        assert (count_product_recursive(spec, t).exact
                == count_tnomials(spec.poly, spec.exponent, t))


def test_weight_validation():
    spec = ProductSpec.from_degrees([2, 3])
    with pytest.raises(ValueError):
        count_product_recursive(spec, 6)
    with pytest.raises(ValueError):
        oracle_count_product(spec, 3)


def test_oracle_cap():
    spec = ProductSpec.from_polys([0b10011, 0b1001011001])
    with pytest.raises(CapError):
        oracle_count_product(spec, 4)  # e = 7665 over the default 1024
    assert oracle_count_product(spec, 4, max_exponent=8000) == count_tnomials(
        spec.poly, 7665, 4)


def test_report_serialization():
    rep = count_product_recursive(ProductSpec.from_degrees([2, 3]), 4)
    d = rep.as_dict()
    assert d['degrees'] == [2, 3]
    assert d['exact'] == 40
    assert d['route'] == 'closed_form_pair'
    assert d['factor_stats'][1]['exponent'] == 7
    assert rep.csv_row() == '2,3;4;40;0;closed_form_pair'


def test_pair_formulas_all_small_pairs():
    for degs in [(2, 3), (2, 5), (3, 4), (3, 5)]:
        spec = ProductSpec.from_degrees(degs)
        for t in (4, 5):
            assert (count_product_recursive(spec, t).exact
                    == oracle_count_product(spec, t)), (degs, t)


def test_trinomial_formula_all_small_pairs():
    for degs in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        spec = ProductSpec.from_degrees(degs)
        n3 = count3_product(
            [(f.exponent - 1) // 2 for f in spec.factors])
        assert n3 == count_tnomials(spec.poly, spec.exponent, 3)
        assert n3 == count_product_recursive(spec, 3).exact


def test_primitive_poly_helper_consistency():
    assert primitive_poly(9) == 0b1000010001
