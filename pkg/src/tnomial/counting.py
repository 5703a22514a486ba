"""Closed-form and recursive counts of t-nomial multiples of products.

Factors must be primitive with pairwise-coprime orders; an exponent
below the product order then splits uniquely into per-factor exponents,
which is what the pair formulas count.  Products of three or more
factors fold left to right, treating each prefix product as a single
factor whose trinomial count, t-nomial count, and shift-set size are
carried along.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapError, HypothesisError
from .enumeration import SUPPORTED_WEIGHTS, count_tnomials, shift_set_size
from .gf2 import FactorSpec, degree, format_poly, poly_gcd, poly_mul, primitive_poly


def _require_coprime(e1, e2):
    if math.gcd(e1, e2) != 1:
        raise HypothesisError(f'factor exponents {e1} and {e2} are not coprime')


def _require_shift_consistent(e, n3, n):
    if n != shift_set_size(e, n3):
        raise HypothesisError(f'shift-set size {n} inconsistent with e={e}, n3={n3}')


@dataclass(frozen=True)
class ProductSpec:
    """A product of primitive factors with pairwise-coprime orders."""

    factors: tuple
    poly: int
    exponent: int

    @classmethod
    def from_polys(cls, polys):
        """Validate the factors and multiply them out."""
        factors = tuple(FactorSpec.from_poly(p) for p in polys)
        if not factors:
            raise ValueError('need at least one factor')
        prod = 1
        e = 1
        for i, f in enumerate(factors):
            for g in factors[i + 1:]:
                if math.gcd(f.exponent, g.exponent) != 1:
                    raise HypothesisError(
                        f'factor exponents {f.exponent} and {g.exponent} are not coprime')
                if degree(poly_gcd(f.poly, g.poly)) > 0:
                    raise HypothesisError('factors share a common divisor')
            prod = poly_mul(prod, f.poly)
            e *= f.exponent
        return cls(factors=factors, poly=prod, exponent=e)

    @classmethod
    def from_degrees(cls, degrees):
        """Use the smallest-mask primitive polynomial of each degree."""
        return cls.from_polys(primitive_poly(d) for d in degrees)

    @property
    def degrees(self):
        return tuple(f.degree for f in self.factors)

    @property
    def polynomials(self):
        return tuple(format_poly(f.poly) for f in self.factors)


def lower_bound_t(counts, t):
    """Lower bound for a product: ((t-1)!)^(k-1) * prod of per-factor counts.

    Every way of pairing up per-factor t-nomials slot by slot gives a
    distinct multiple, so the bound is exact for t = 3 and a strict
    undercount for t > 3 whenever degenerate patterns exist.
    """
    counts = list(counts)
    if not counts:
        raise ValueError('need at least one factor count')
    return math.factorial(t - 1) ** (len(counts) - 1) * math.prod(counts)


def count3_product(counts3):
    """Exact trinomial count for a product: 2^(k-1) * prod of factor counts."""
    counts3 = list(counts3)
    if not counts3:
        raise ValueError('need at least one factor count')
    return (1 << (len(counts3) - 1)) * math.prod(counts3)


def count4_pair(e1, e2, n14, n24):
    """Exact 4-term count for a two-factor product from the per-factor counts."""
    _require_coprime(e1, e2)
    return (6 * n14 * n24
            + (e1 - 1) * (e2 - 1)
            + (3 * (e1 - 1) + 1) * n24
            + (3 * (e2 - 1) + 1) * n14)


def five_term_cases(e1, e2, n13, n23, n15, n25, n1, n2):
    """Per-family closed forms behind count5_pair, keyed by left/right pattern.

    A side contributes a genuine 5-nomial ('five'), a trinomial with one
    exponent doubled ('pad3'), or a shifted trinomial padded with the
    constant ('shift'); n1, n2 are the shift-set sizes.
    """
    _require_coprime(e1, e2)
    _require_shift_consistent(e1, n13, n1)
    _require_shift_consistent(e2, n23, n2)
    return {
        'five_five': 24 * n15 * n25,
        'pad3_five': n13 * n25 * (12 * (e1 - 2) + 8),
        'five_pad3': n23 * n15 * (12 * (e2 - 2) + 8),
        'shift_five': 24 * n1 * n25,
        'five_shift': 24 * n2 * n15,
        'shift_shift': 18 * n1 * n2,
        'shift_pad3': n1 * n23 * (12 * (e2 - 3) + 14),
        'pad3_shift': n2 * n13 * (12 * (e1 - 3) + 14),
        'pad3_pad3': n13 * n23 * (5 * (e1 - 3) * (e2 - 3)
                                  + 7 * (e1 - 3) + 7 * (e2 - 3) + 5),
    }


def count5_pair(e1, e2, n13, n23, n15, n25, n1, n2):
    """Exact 5-term count for a two-factor product: sum over the pattern families."""
    return sum(five_term_cases(e1, e2, n13, n23, n15, n25, n1, n2).values())


@dataclass(frozen=True)
class CountReport:
    """Exact count with the per-factor and per-prefix quantities that fed it."""

    degrees: tuple
    polynomials: tuple
    weight: int
    exact: int
    lower_bound: int
    route: str  # 'oracle' | 'closed_form_pair' | 'recursion'
    factor_stats: tuple
    prefix_stats: tuple

    def as_dict(self):
        return {
            'degrees': list(self.degrees),
            'polynomials': list(self.polynomials),
            'weight': self.weight,
            'exact': self.exact,
            'lower_bound': self.lower_bound,
            'route': self.route,
            'factor_stats': [dict(s) for s in self.factor_stats],
            'prefix_stats': [dict(s) for s in self.prefix_stats],
        }

    def csv_row(self):
        degrees = ','.join(str(d) for d in self.degrees)
        return ';'.join([degrees, str(self.weight), str(self.exact),
                         str(self.lower_bound), self.route])


def count_product_recursive(spec, t):
    """Exact t-nomial count of the product, folding factors left to right."""
    if t not in SUPPORTED_WEIGHTS:
        raise ValueError(f'weight must be one of {SUPPORTED_WEIGHTS}, got {t}')
    factor_stats = []
    for idx, f in enumerate(spec.factors, 1):
        n3 = count_tnomials(f.poly, f.exponent, 3)
        nt = n3 if t == 3 else count_tnomials(f.poly, f.exponent, t)
        factor_stats.append({
            'label': f'f{idx}',
            'degree': f.degree,
            'exponent': f.exponent,
            'trinomial_count': n3,
            'tnomial_count': nt,
            'shift_set_size': shift_set_size(f.exponent, n3),
        })
    lower = lower_bound_t([s['tnomial_count'] for s in factor_stats], t)

    cur = factor_stats[0]
    cur_e, cur_n3 = cur['exponent'], cur['trinomial_count']
    cur_nt, cur_ns = cur['tnomial_count'], cur['shift_set_size']
    label = 'f1'
    prefix_stats = []
    for idx in range(1, len(factor_stats)):
        nxt = factor_stats[idx]
        e2, m3 = nxt['exponent'], nxt['trinomial_count']
        mt, ms = nxt['tnomial_count'], nxt['shift_set_size']
        if t == 3:
            cur_nt = 2 * cur_n3 * m3
        elif t == 4:
            cur_nt = count4_pair(cur_e, e2, cur_nt, mt)
        else:
            cur_nt = count5_pair(cur_e, e2, cur_n3, m3, cur_nt, mt, cur_ns, ms)
        cur_e *= e2
        cur_n3 = 2 * cur_n3 * m3
        cur_ns = shift_set_size(cur_e, cur_n3)
        label += f'*f{idx + 1}'
        prefix_stats.append({
            'label': label,
            'exponent': cur_e,
            'trinomial_count': cur_n3,
            'tnomial_count': cur_nt,
            'shift_set_size': cur_ns,
        })
    route = {1: 'oracle', 2: 'closed_form_pair'}.get(len(factor_stats), 'recursion')
    return CountReport(
        degrees=spec.degrees,
        polynomials=spec.polynomials,
        weight=t,
        exact=cur_nt,
        lower_bound=lower,
        route=route,
        factor_stats=tuple(factor_stats),
        prefix_stats=tuple(prefix_stats),
    )


def oracle_count_product(spec, t, max_exponent=1024):
    """Direct completion-scan count over the product's residue table."""
    if t not in (4, 5):
        raise ValueError(f'oracle covers weights 4 and 5, got {t}')
    if spec.exponent > max_exponent:
        raise CapError(f'product exponent {spec.exponent} exceeds oracle cap {max_exponent}')
    return count_tnomials(spec.poly, spec.exponent, t)
