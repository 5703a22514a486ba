"""End-to-end self checks over pinned regression values.

Every expected number here was frozen from an independent brute-force
enumeration (direct divisibility tests over all exponent combinations)
before the closed forms were wired up; the checks compare the fast
routes against those pinned values and against the live oracle scans.
Each criterion returns a CheckResult; run_criteria prints one line per
criterion and reports overall success.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations

from .counting import ProductSpec, count_product_recursive, oracle_count_product
from .crtlift import enumerate_5nomials_by_cases
from .degree import check_conjecture, estimate_least_degree, least_tnomial_multiple
from .enumeration import (build_shift_set, count_tnomials, count_trinomials,
                          degree_sum, enumerate_tnomials, shift_set_size)
from .gf2 import all_primitive_polys, degree, parse_poly
from .tables import build_zech


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _run(name, body):
    t0 = time.perf_counter()
    try:
        detail = body()
        passed = True
    except Exception as exc:  # report, never raise: the caller prints one line per criterion
        detail = f'{type(exc).__name__}: {exc}'
        passed = False
    return CheckResult(name=name, passed=passed, detail=detail,
                       seconds=time.perf_counter() - t0)


def criterion_small_product_regression():
    """Degrees (2, 3, 5): every intermediate of the 5-term recursion, under 1 s."""

    def body():
        t0 = time.perf_counter()
        spec = ProductSpec.from_degrees([2, 3, 5])
        rep = count_product_recursive(spec, 5)
        fs = rep.factor_stats
        assert [s['exponent'] for s in fs] == [3, 7, 31]
        assert [s['trinomial_count'] for s in fs] == [1, 3, 15]
        assert [s['tnomial_count'] for s in fs] == [0, 0, 840]
        assert [s['shift_set_size'] for s in fs] == [0, 4, 140]
        p12 = rep.prefix_stats[0]
        assert p12['exponent'] == 21
        assert p12['trinomial_count'] == 6
        assert p12['shift_set_size'] == 36
        assert p12['tnomial_count'] == 155
        assert rep.exact == 7_117_650
        assert count_product_recursive(spec, 3).exact == 180
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0, f'took {elapsed:.2f}s, budget 1s'
        return ('e=(3,7,31) n3=(1,3,15) n5=(0,0,840) shifts=(0,4,140); '
                'pair: e=21 n3=6 shifts=36 n5=155; '
                f'full n3=180 n5=7117650; {elapsed:.2f}s')

    return _run('small-product regression', body)


def criterion_pair_formulas_vs_oracle():
    """Pair closed forms and the triple recursion agree with direct scans."""

    def body():
        t0 = time.perf_counter()
        pieces = []
        for degs in [(2, 3), (3, 4), (3, 5), (4, 5)]:
            spec = ProductSpec.from_degrees(degs)
            for t in (4, 5):
                formula = count_product_recursive(spec, t).exact
                oracle = oracle_count_product(spec, t)
                assert formula == oracle, \
                    f'{degs} t={t}: formula {formula} != oracle {oracle}'
                pieces.append(f'{degs[0]}x{degs[1]}/t{t}={formula}')
        spec = ProductSpec.from_degrees([2, 3, 5])
        formula = count_product_recursive(spec, 5).exact
        oracle = oracle_count_product(spec, 5)
        assert formula == oracle == 7_117_650, \
            f'triple: recursion {formula} vs oracle {oracle}'
        elapsed = time.perf_counter() - t0
        assert elapsed < 300, f'took {elapsed:.1f}s, budget 300s'
        return ' '.join(pieces) + f' triple/t5={formula}; {elapsed:.1f}s'

    return _run('pair formulas vs oracle', body)


def criterion_case_partition():
    """The nine pattern families tile the 5-nomial set without overlap."""

    def body():
        t0 = time.perf_counter()
        pieces = []
        for degs in [(2, 3), (3, 5)]:
            spec = ProductSpec.from_degrees(degs)
            f1, f2 = spec.factors
            cases = enumerate_5nomials_by_cases(f1, f2)
            for tally in cases.tallies:
                assert tally.accepted == tally.closed_form, \
                    f'{degs} {tally.case}: accepted {tally.accepted} != closed {tally.closed_form}'
            assert sum(tally.accepted for tally in cases.tallies) == cases.total, \
                f'{degs}: case sets overlap'
            direct = enumerate_tnomials(spec.poly, spec.exponent, 5)
            assert set(direct) == set(cases.multiples), f'{degs}: union mismatch'
            assert cases.total == count_product_recursive(spec, 5).exact
            if degs == (2, 3):
                by = {tally.case: tally.accepted for tally in cases.tallies}
                assert by['pad3_shift'] == 56 and by['pad3_pad3'] == 99, \
                    f'2x3 split {by}'
            live = sum(1 for tally in cases.tallies if tally.accepted)
            pieces.append(f'{degs[0]}x{degs[1]}: {cases.total} in {live} live cases')
        elapsed = time.perf_counter() - t0
        return '; '.join(pieces) + f'; 2x3 split 56+99; {elapsed:.1f}s'

    return _run('case partition', body)


def criterion_least_degree():
    """Pinned least-degree multiples, each found inside its 2-minute budget."""

    def body():
        cases = [
            (('x^5+x^2+1', 'x^3+x+1'), 4, (13, 8, 4)),
            (('x^5+x^4+x^3+x^2+1', 'x^7+x+1'), 5, (22, 16, 7, 3)),
            (('x^4+x+1', 'x^9+x^6+x^4+x^3+1'), 5, (19, 17, 8, 4)),
            (('x^4+x+1', 'x^5+x^4+x^3+x^2+1', 'x^9+x^8+x^6+x^5+1'), 4, (135, 92, 47)),
        ]
        pieces = []
        for polys, t, expected in cases:
            t1 = time.perf_counter()
            spec = ProductSpec.from_polys(parse_poly(p) for p in polys)
            got = least_tnomial_multiple(spec, t)
            dt = time.perf_counter() - t1
            assert got == expected, f'{polys} t={t}: got {got}, expected {expected}'
            assert dt < 120, f'{polys} t={t}: took {dt:.1f}s, budget 120s'
            pieces.append(f'deg{got[0]}/t{t} in {dt:.2f}s')
        return ' '.join(pieces)

    return _run('least-degree search', body)


def criterion_conjecture_counterexamples():
    """Both pinned products break exponent distinctness mod a factor order."""

    def body():
        spec = ProductSpec.from_polys(
            [parse_poly('x^4+x+1'), parse_poly('x^9+x^6+x^4+x^3+1')])
        rep = check_conjecture(spec, 5)
        assert rep.applicable, f'pair hypotheses unmet: counts {rep.factor_counts}'
        assert rep.least_multiple == (19, 17, 8, 4)
        assert rep.collisions == ((1, 1, 4, 4),), f'pair collisions {rep.collisions}'
        assert rep.verdict == 'counterexample'

        spec = ProductSpec.from_polys(
            [parse_poly('x^4+x+1'), parse_poly('x^5+x^4+x^3+x^2+1'),
             parse_poly('x^9+x^8+x^6+x^5+1')])
        rep = check_conjecture(spec, 4)
        assert rep.applicable, f'triple hypotheses unmet: counts {rep.factor_counts}'
        assert rep.least_multiple == (135, 92, 47)
        assert rep.collisions == ((1, 2, 3, 2),), f'triple collisions {rep.collisions}'
        assert (1, 1) in rep.zero_residues  # 135 is a multiple of 15
        assert rep.verdict == 'counterexample'
        return ('pair: slots 1,4 share 4 mod 15; '
                'triple: slots 2,3 share 2 mod 15, slot 1 hits 0')

    return _run('residue-collision counterexamples', body)


def criterion_invariant_suites():
    """Degree-sum identity, shift sizes, trinomial counts, invariance, bounds."""

    def body():
        t0 = time.perf_counter()
        checks = 0
        product_degrees = [(2, 3), (2, 5), (3, 5), (4, 5), (2, 3, 5)]

        # sum of degrees = (t-1)/t * e * count, singles then products
        for d in range(2, 8):
            e = (1 << d) - 1
            for f in all_primitive_polys(d):
                for t in (3, 4, 5):
                    n = count_tnomials(f, e, t)
                    assert t * degree_sum(f, e, t) == (t - 1) * e * n, \
                        f'degree-sum identity fails: d={d} poly={f:#x} t={t}'
                    checks += 1
        for degs in product_degrees:
            spec = ProductSpec.from_degrees(degs)
            e = spec.exponent
            for t in (3, 4, 5):
                n = count_tnomials(spec.poly, e, t)
                assert t * degree_sum(spec.poly, e, t) == (t - 1) * e * n, \
                    f'degree-sum identity fails: {degs} t={t}'
                assert n == count_product_recursive(spec, t).exact, \
                    f'scan vs closed form: {degs} t={t}'
                checks += 1

        # shift sets match their closed-form size (build_shift_set re-checks)
        for d in range(2, 8):
            e = (1 << d) - 1
            for f in all_primitive_polys(d):
                assert len(build_shift_set((f, e))) == shift_set_size(e, count_trinomials(f, e))
                checks += 1
        for degs in product_degrees:
            spec = ProductSpec.from_degrees(degs)
            ss = build_shift_set((spec.poly, spec.exponent))
            assert len(ss) == shift_set_size(spec.exponent,
                                             count_trinomials(spec.poly, spec.exponent))
            checks += 1

        # trinomial count 2^(d-1) - 1 three ways: formula, general scan, Zech pairs
        for d in range(2, 10):
            e = (1 << d) - 1
            expected = (1 << (d - 1)) - 1
            for f in all_primitive_polys(d):
                assert count_trinomials(f, e) == expected
                assert count_tnomials(f, e, 3, degree_cap=e - 1) == expected
                z = build_zech(f).zech
                assert sum(1 for i in range(1, e) if z[i] > i) == expected
                checks += 1

        # counts only depend on the degree, not the primitive polynomial chosen
        for d in range(2, 8):
            e = (1 << d) - 1
            rows = {tuple(count_tnomials(f, e, t) for t in (3, 4, 5))
                    for f in all_primitive_polys(d)}
            assert len(rows) == 1, f'counts differ across degree-{d} primitives: {rows}'
            checks += 1

        # lower bound never exceeds the exact count; equality at t = 3
        for degs in product_degrees:
            spec = ProductSpec.from_degrees(degs)
            for t in (3, 4, 5):
                rep = count_product_recursive(spec, t)
                assert rep.lower_bound <= rep.exact
                if t == 3:
                    assert rep.lower_bound == rep.exact
                checks += 1

        # fold order does not matter
        for t in (3, 4, 5):
            vals = {count_product_recursive(ProductSpec.from_degrees(perm), t).exact
                    for perm in permutations([2, 3, 5])}
            assert len(vals) == 1, f'fold order changes t={t} count: {vals}'
            checks += 1

        elapsed = time.perf_counter() - t0
        return f'{checks} invariant checks in {elapsed:.1f}s'

    return _run('invariant suites', body)


def criterion_estimates():
    """Crude and refined least-degree estimates on the pinned instances."""

    def body():
        spec = ProductSpec.from_polys([parse_poly('x^5+x^2+1'), parse_poly('x^3+x+1')])
        n4 = count_product_recursive(spec, 4).exact
        est4 = estimate_least_degree(n4, spec.exponent, degree(spec.poly), 4)
        assert abs(est4.crude_c - 2 ** (8 / 3)) < 1e-3, f'crude {est4.crude_c}'
        assert est4.refined_c == 13, f'refined {est4.refined_c}, observed least is 13'

        spec = ProductSpec.from_polys(
            [parse_poly('x^5+x^4+x^3+x^2+1'), parse_poly('x^7+x+1')])
        n5 = count_product_recursive(spec, 5).exact
        est5 = estimate_least_degree(n5, spec.exponent, degree(spec.poly), 5)
        assert 19 <= est5.refined_c <= 21, f'refined {est5.refined_c} outside [19, 21]'
        return (f'crude(d=8,t=4)={est4.crude_c:.4f} refined={est4.refined_c}; '
                f'refined(d=12,t=5)={est5.refined_c} with n5={n5}')

    return _run('least-degree estimates', body)


ALL_CRITERIA = (
    criterion_small_product_regression,
    criterion_pair_formulas_vs_oracle,
    criterion_case_partition,
    criterion_least_degree,
    criterion_conjecture_counterexamples,
    criterion_invariant_suites,
    criterion_estimates,
)


def run_criteria(only=None, out=print):
    """Run the numbered criteria (all by default), printing one line each."""
    results = []
    for idx, crit in enumerate(ALL_CRITERIA, 1):
        if only and idx not in only:
            continue
        r = crit()
        results.append(r)
        out(f'{"PASS" if r.passed else "FAIL"} {idx}. {r.name} '
            f'({r.seconds:.2f}s): {r.detail}')
    out(f'{sum(r.passed for r in results)}/{len(results)} criteria passed')
    return bool(results) and all(r.passed for r in results)
