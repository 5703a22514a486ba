"""Sparse (3/4/5-term) multiples of primitive polynomials over GF(2).

Counts, enumerates, and analyzes t-nomial multiples of primitive
polynomials and of products of primitive polynomials with pairwise
coprime orders: exact closed-form counts with oracle cross-checks,
case-by-case reconstruction for two-factor products, least-degree
search and estimates, and residue-collision reports.
"""

from .counting import (CountReport, ProductSpec, count3_product, count4_pair,
                       count5_pair, count_product_recursive, five_term_cases,
                       lower_bound_t, oracle_count_product)
from .crtlift import (CaseEnumeration, CaseTally, LiftPlan, Rejection,
                      crt_combine, enumerate_5nomials_by_cases, lift_pair)
from .degree import (ConjectureReport, EstimateReport, check_conjecture,
                     estimate_least_degree, least_tnomial_multiple)
from .enumeration import (ShiftSet, build_shift_set, count_tnomials,
                          count_trinomials, degree_sum, enumerate_tnomials,
                          shift_set_size, tnomial_poly)
from .errors import CapError, HypothesisError, PolyParseError
from .gf2 import (FactorSpec, all_primitive_polys, degree, format_hex,
                  format_poly, is_irreducible, is_primitive, order, parse_poly,
                  poly_divmod, poly_gcd, poly_mod, poly_mul, poly_pow_mod,
                  primitive_poly, product_order, weight)
from .tables import ResidueTable, ZechTable, build_residue_table, build_zech

__all__ = [
    'CapError', 'CaseEnumeration', 'CaseTally', 'ConjectureReport',
    'CountReport', 'EstimateReport', 'FactorSpec', 'HypothesisError',
    'LiftPlan', 'PolyParseError', 'ProductSpec', 'Rejection', 'ResidueTable',
    'ShiftSet', 'ZechTable', 'all_primitive_polys', 'build_residue_table',
    'build_shift_set', 'build_zech', 'check_conjecture', 'count3_product',
    'count4_pair', 'count5_pair', 'count_product_recursive', 'count_tnomials',
    'count_trinomials', 'crt_combine', 'degree', 'degree_sum',
    'enumerate_5nomials_by_cases', 'enumerate_tnomials',
    'estimate_least_degree', 'five_term_cases', 'format_hex', 'format_poly',
    'is_irreducible', 'is_primitive', 'least_tnomial_multiple',
    'lift_pair', 'lower_bound_t', 'oracle_count_product', 'order',
    'parse_poly', 'poly_divmod', 'poly_gcd', 'poly_mod', 'poly_mul',
    'poly_pow_mod', 'primitive_poly', 'product_order', 'shift_set_size',
    'tnomial_poly', 'weight',
]
