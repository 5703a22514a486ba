"""CRT exponent lifting and the case-by-case 5-nomial reconstruction."""

import math

import pytest

from tnomial import (CapError, HypothesisError, LiftPlan, ProductSpec,
                     Rejection, crt_combine, enumerate_5nomials_by_cases,
                     enumerate_tnomials, lift_pair, poly_mod, primitive_poly,
                     tnomial_poly)


def test_crt_combine_examples():
    assert crt_combine(1, 3, 2, 7) == 16
    assert crt_combine(0, 3, 0, 7) == 0
    assert crt_combine(2, 3, 6, 7) == 20


@pytest.mark.parametrize('e1,e2', [(3, 7), (7, 15), (15, 31), (31, 511)])
def test_crt_combine_is_inverse_of_reduction(e1, e2):
    step = max(1, e1 * e2 // 200)
    for i in range(0, e1 * e2, step):
        assert crt_combine(i % e1, e1, i % e2, e2) == i


def test_crt_combine_validation():
    with pytest.raises(HypothesisError):
        crt_combine(1, 6, 2, 9)
    with pytest.raises(ValueError):
        crt_combine(3, 3, 2, 7)
    with pytest.raises(ValueError):
        crt_combine(1, 3, -1, 7)


def test_lift_pair_valid():
    plan = LiftPlan(e1=3, e2=7, left=(1, 0, 2, 1), right=(2, 3, 5, 6))
    lifted = lift_pair(plan)
    assert lifted == (16, 13, 5, 3)
    assert lifted == tuple(sorted(
        (crt_combine(a, 3, b, 7) for a, b in zip(plan.left, plan.right)),
        reverse=True))
    assert sorted(x % 3 for x in lifted) == sorted(plan.left)
    assert sorted(x % 7 for x in lifted) == sorted(plan.right)


def test_lift_pair_rejections():
    dup = lift_pair(LiftPlan(e1=3, e2=7, left=(1, 2, 1, 0), right=(4, 5, 4, 6)))
    assert dup == Rejection('duplicate_pair', (0, 2))
    const = lift_pair(LiftPlan(e1=3, e2=7, left=(1, 0, 2, 0), right=(4, 0, 5, 6)))
    assert const == Rejection('constant_pair', (1,))
    with pytest.raises(ValueError):
        lift_pair(LiftPlan(e1=3, e2=7, left=(1, 2), right=(4, 5, 6)))


def test_lift_round_trips_every_pair_multiple():
    spec = ProductSpec.from_degrees([2, 3])
    for m in enumerate_tnomials(spec.poly, 21, 5):
        plan = LiftPlan(e1=3, e2=7,
                        left=tuple(i % 3 for i in m),
                        right=tuple(i % 7 for i in m))
        assert lift_pair(plan) == m


def test_case_enumeration_small_pair():
    cases = enumerate_5nomials_by_cases((0b111, 3), (0b1011, 7))
    assert cases.exponent == 21
    by = {t.case: t for t in cases.tallies}
    assert by['pad3_shift'].accepted == by['pad3_shift'].closed_form == 56
    assert by['pad3_pad3'].accepted == by['pad3_pad3'].closed_form == 99
    assert by['pad3_shift'].generated == 288
    assert by['pad3_pad3'].generated == 612
    assert all(t.accepted == t.closed_form for t in cases.tallies)
    assert cases.total == 155
    assert by['pad3_shift'].as_dict() == {
        'case': 'pad3_shift', 'generated': 288, 'accepted': 56,
        'closed_form': 56}


def test_cases_partition_and_match_direct_enumeration():
    spec = ProductSpec.from_degrees([2, 3])
    cases = enumerate_5nomials_by_cases(*spec.factors)
    assert sum(t.accepted for t in cases.tallies) == cases.total
    seen = set()
    for case, found in cases.by_case.items():
        assert not seen & set(found), f'{case} overlaps another case'
        seen |= set(found)
    assert sorted(seen) == list(cases.multiples)
    assert list(cases.multiples) == enumerate_tnomials(spec.poly, 21, 5)


def test_case_multiples_divide():
    spec = ProductSpec.from_degrees([2, 3])
    cases = enumerate_5nomials_by_cases(*spec.factors)
    for m in cases.multiples:
        assert poly_mod(tnomial_poly(m), spec.poly) == 0


def test_case_enumeration_validation():
    with pytest.raises(HypothesisError):
        enumerate_5nomials_by_cases((0b111, 3), (0b10101, 6))
    big1 = (primitive_poly(9), 511)
    big2 = (primitive_poly(13), (1 << 13) - 1)
    assert math.gcd(511, (1 << 13) - 1) == 1
    with pytest.raises(CapError):
        enumerate_5nomials_by_cases(big1, big2)
