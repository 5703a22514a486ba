"""Least-degree t-nomial multiples, degree estimates, and residue collisions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .enumeration import count_tnomials, tnomial_poly
from .errors import CapError, HypothesisError
from .gf2 import degree, format_poly, weight

DEFAULT_DEGREE_BUDGET = 1 << 20


def least_tnomial_multiple(spec, t, max_degree=None):
    """Exponents of the least-degree t-nomial multiple of the product.

    Scans degree j upward from the product degree, testing every choice
    of t-2 middle exponents below j; ties at the winning degree break to
    the lexicographically smallest exponent tuple.  Gives up past
    min(e-1, max_degree or 2^20) since some multiple of degree below e
    exists whenever any multiple exists at all.
    """
    if t < 3:
        raise ValueError(f'weight must be at least 3, got {t}')
    poly, e = spec.poly, spec.exponent
    d = degree(poly)
    limit = min(e - 1, DEFAULT_DEGREE_BUDGET if max_degree is None else max_degree)
    res = [1]
    r = 1
    for j in range(1, limit + 1):
        r <<= 1
        if r >> d & 1:
            r ^= poly
        res.append(r)
        if j < d:
            continue
        target = res[j] ^ 1
        hits = []
        for middle in combinations(range(1, j), t - 2):
            acc = 0
            for m in middle:
                acc ^= res[m]
            if acc == target:
                hits.append((j,) + tuple(reversed(middle)))
        if hits:
            return min(hits)
    raise CapError(f'no weight-{t} multiple of {format_poly(poly)} '
                   f'with degree <= {limit}')


@dataclass(frozen=True)
class EstimateReport:
    """Least-degree predictions from the exact multiple count."""

    exact_count: int
    exponent: int
    total_degree: int
    weight: int
    crude_c: float
    refined_c: int
    observed_least_degree: int | None = None

    def as_dict(self):
        return {
            'exact_count': self.exact_count,
            'exponent': self.exponent,
            'total_degree': self.total_degree,
            'weight': self.weight,
            'crude_c': self.crude_c,
            'refined_c': self.refined_c,
            'observed_least_degree': self.observed_least_degree,
        }


def estimate_least_degree(n_exact, e, d, t):
    """Predict the least t-nomial degree from the count of multiples below e.

    crude_c treats the multiples as spread uniformly over exponent
    combinations, giving 2^(d/(t-1)); refined_c is the least c with
    C(c, t-1) * n_exact >= C(e-1, t-1), found by monotone bisection.
    """
    if n_exact < 1:
        raise HypothesisError('estimate needs a positive multiple count')
    if t < 3:
        raise ValueError(f'weight must be at least 3, got {t}')
    crude = 2.0 ** (d / (t - 1))
    total = math.comb(e - 1, t - 1)
    lo, hi = t - 1, e - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if math.comb(mid, t - 1) * n_exact >= total:
            hi = mid
        else:
            lo = mid + 1
    return EstimateReport(exact_count=n_exact, exponent=e, total_degree=d,
                          weight=t, crude_c=crude, refined_c=lo)


@dataclass(frozen=True)
class ConjectureReport:
    """Residues of the least multiple's exponents modulo each factor order."""

    degrees: tuple
    polynomials: tuple
    weight: int
    product_weight: int
    factor_exponents: tuple
    factor_counts: tuple
    applicable: bool
    least_multiple: tuple
    residues: tuple
    collisions: tuple      # (factor, v, w, residue) with 1-based slots
    zero_residues: tuple   # (factor, v)
    verdict: str           # 'counterexample' | 'holds' | 'not_applicable'

    def as_dict(self):
        return {
            'degrees': list(self.degrees),
            'polynomials': list(self.polynomials),
            'weight': self.weight,
            'product_weight': self.product_weight,
            'factor_exponents': list(self.factor_exponents),
            'factor_counts': list(self.factor_counts),
            'applicable': self.applicable,
            'least_multiple': list(self.least_multiple),
            'least_polynomial': format_poly(tnomial_poly(self.least_multiple)),
            'residues': [list(row) for row in self.residues],
            'collisions': [list(c) for c in self.collisions],
            'zero_residues': [list(z) for z in self.zero_residues],
            'verdict': self.verdict,
        }


def check_conjecture(spec, t, max_degree=None):
    """Are the least multiple's exponents distinct modulo every factor order?

    Applicability needs 4 <= t < weight of the product and a nonzero
    t-nomial count for every factor; with the hypotheses unmet the
    verdict is 'not_applicable'.  Residues equal to zero are reported
    separately since the implicit constant term always contributes 0.
    """
    if t not in (4, 5):
        raise ValueError(f'collision check covers weights 4 and 5, got {t}')
    product_weight = weight(spec.poly)
    counts = tuple(count_tnomials(f.poly, f.exponent, t) for f in spec.factors)
    applicable = t < product_weight and all(c > 0 for c in counts)
    least = least_tnomial_multiple(spec, t, max_degree)
    residues = tuple(tuple(i % f.exponent for i in least) for f in spec.factors)
    collisions = []
    zeros = []
    for r, row in enumerate(residues, 1):
        for v in range(len(row)):
            if row[v] == 0:
                zeros.append((r, v + 1))
            for w in range(v + 1, len(row)):
                if row[v] == row[w]:
                    collisions.append((r, v + 1, w + 1, row[v]))
    verdict = ('not_applicable' if not applicable
               else 'counterexample' if collisions else 'holds')
    return ConjectureReport(
        degrees=spec.degrees,
        polynomials=spec.polynomials,
        weight=t,
        product_weight=product_weight,
        factor_exponents=tuple(f.exponent for f in spec.factors),
        factor_counts=counts,
        applicable=applicable,
        least_multiple=least,
        residues=residues,
        collisions=tuple(collisions),
        zero_residues=tuple(zeros),
        verdict=verdict,
    )
