"""Command line for counting, enumerating, and analyzing sparse multiples.

Exit codes: 0 success, 1 formula/oracle disagreement, 2 parse or usage
error, 3 hypothesis violation, 4 cap exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .counting import ProductSpec, count_product_recursive, oracle_count_product
from .degree import check_conjecture, estimate_least_degree, least_tnomial_multiple
from .enumeration import count_trinomials, enumerate_tnomials, tnomial_poly
from .errors import CapError, HypothesisError, PolyParseError
from .gf2 import degree, format_poly, parse_poly

CSV_HEADER = 'degrees;t;exact;lower_bound;route;oracle;agree'


def _spec_from_args(args):
    if args.poly and args.degrees:
        raise PolyParseError('give either --poly or --degrees, not both')
    if args.poly:
        return ProductSpec.from_polys(parse_poly(p) for p in args.poly)
    if args.degrees:
        try:
            degs = [int(part) for part in args.degrees.split(',')]
        except ValueError:
            raise PolyParseError(f'bad degree list {args.degrees!r}') from None
        return ProductSpec.from_degrees(degs)
    raise PolyParseError('need --poly (repeatable) or --degrees')


def _dump(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def _cmd_count(args):
    spec = _spec_from_args(args)
    report = count_product_recursive(spec, args.weight)
    oracle = None
    if spec.exponent <= args.max_e:
        if args.weight == 3:
            oracle = count_trinomials(spec.poly, spec.exponent)
        else:
            oracle = oracle_count_product(spec, args.weight, args.max_e)
    agree = None if oracle is None else oracle == report.exact
    if args.format == 'json':
        payload = report.as_dict()
        payload['oracle'] = oracle
        payload['agree'] = agree
        _dump(payload)
    elif args.format == 'csv':
        print(CSV_HEADER)
        oracle_part = '' if oracle is None else str(oracle)
        agree_part = '' if agree is None else ('yes' if agree else 'no')
        print(f'{report.csv_row()};{oracle_part};{agree_part}')
    else:
        print('factors:', ', '.join(report.polynomials))
        for s in list(report.factor_stats) + list(report.prefix_stats):
            print(f"  {s['label']}: e={s['exponent']}"
                  f" trinomials={s['trinomial_count']}"
                  f" weight{args.weight}={s['tnomial_count']}"
                  f" shifts={s['shift_set_size']}")
        print(f'exact: {report.exact} (route: {report.route})')
        print(f'lower bound: {report.lower_bound}')
        if oracle is None:
            print(f'oracle: skipped (e={spec.exponent} > cap {args.max_e})')
        else:
            print(f"oracle: {oracle} agree: {'yes' if agree else 'no'}")
    return 1 if agree is False else 0


def _cmd_enumerate(args):
    spec = _spec_from_args(args)
    found = enumerate_tnomials(spec.poly, spec.exponent, args.weight,
                               degree_cap=args.max_degree)
    if args.format == 'json':
        _dump({'polynomials': list(spec.polynomials), 'weight': args.weight,
               'count': len(found), 'multiples': [list(m) for m in found]})
    else:
        for m in found:
            print(','.join(str(i) for i in m))
    return 0


def _cmd_least(args):
    spec = _spec_from_args(args)
    exps = least_tnomial_multiple(spec, args.weight, max_degree=args.max_degree)
    if args.format == 'json':
        _dump({'polynomials': list(spec.polynomials), 'weight': args.weight,
               'degree': exps[0], 'exponents': list(exps),
               'multiple': format_poly(tnomial_poly(exps))})
    else:
        print(f'{format_poly(tnomial_poly(exps))} (degree {exps[0]})')
    return 0


def _cmd_estimate(args):
    spec = _spec_from_args(args)
    exact = count_product_recursive(spec, args.weight).exact
    est = estimate_least_degree(exact, spec.exponent, degree(spec.poly), args.weight)
    if args.observe:
        observed = least_tnomial_multiple(spec, args.weight, max_degree=args.max_degree)
        est = dataclasses.replace(est, observed_least_degree=observed[0])
    if args.format == 'json':
        payload = est.as_dict()
        payload['polynomials'] = list(spec.polynomials)
        _dump(payload)
    else:
        print('factors:', ', '.join(spec.polynomials))
        print(f'exact count: {est.exact_count}')
        print(f'crude degree estimate: {est.crude_c:.4f}')
        print(f'refined degree estimate: {est.refined_c}')
        if est.observed_least_degree is not None:
            print(f'observed least degree: {est.observed_least_degree}')
    return 0


def _cmd_conjecture(args):
    spec = _spec_from_args(args)
    rep = check_conjecture(spec, args.weight, max_degree=args.max_degree)
    if args.format == 'json':
        _dump(rep.as_dict())
    else:
        print('factors:', ', '.join(rep.polynomials))
        print(f'product weight: {rep.product_weight},'
              f' factor weight-{rep.weight} counts: {list(rep.factor_counts)}')
        print(f'applicable: {"yes" if rep.applicable else "no"}')
        least = format_poly(tnomial_poly(rep.least_multiple))
        print(f'least multiple: {least} exponents {list(rep.least_multiple)}')
        for r, row in enumerate(rep.residues):
            print(f'  mod e{r + 1}={rep.factor_exponents[r]}: {list(row)}')
        for factor, v, w, residue in rep.collisions:
            print(f'collision: factor {factor}, slots {v} and {w} share residue {residue}')
        for factor, v in rep.zero_residues:
            print(f'zero residue: factor {factor}, slot {v}')
        print(f'verdict: {rep.verdict}')
    return 0


def _cmd_selftest(args):
    from .selftest import run_criteria

    only = None
    if args.only:
        try:
            only = {int(part) for part in args.only.split(',')}
        except ValueError:
            raise PolyParseError(f'bad criteria list {args.only!r}') from None
    return 0 if run_criteria(only=only) else 1


def _weight_arg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'bad weight {text!r}') from None
    if value < 3:
        raise argparse.ArgumentTypeError('weight must be at least 3')
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog='tnomial',
        description='count, enumerate, and analyze 3/4/5-term multiples of '
                    'primitive polynomials over GF(2) and their products')
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p, weights):
        p.add_argument('--poly', action='append', metavar='P',
                       help='factor polynomial, caret form (x^4+x+1) or hex mask '
                            '(0x13); repeat for products')
        p.add_argument('--degrees', metavar='D1,D2,...',
                       help='factor degrees; uses the smallest-mask primitive '
                            'polynomial of each degree')
        if weights is None:
            p.add_argument('-t', '--weight', type=_weight_arg, default=3,
                           help='number of terms including the constant (default 3)')
        else:
            p.add_argument('-t', '--weight', type=int, choices=weights,
                           default=weights[0],
                           help=f'number of terms including the constant '
                                f'(default {weights[0]})')
        p.add_argument('--format', choices=('text', 'json', 'csv'), default='text')

    p = sub.add_parser('count', help='closed-form count, cross-checked by a scan')
    common(p, (3, 4, 5))
    p.add_argument('--max-e', type=int, default=1024, metavar='E',
                   help='largest product exponent the oracle scan runs at (default 1024)')
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser('enumerate', help='list every multiple below the order')
    common(p, (3, 4, 5))
    p.add_argument('--max-degree', type=int, metavar='N',
                   help='only multiples of degree at most N')
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser('least', help='least-degree multiple')
    common(p, None)
    p.add_argument('--max-degree', type=int, metavar='N',
                   help='give up past degree N')
    p.set_defaults(func=_cmd_least)

    p = sub.add_parser('estimate', help='predict the least degree from the count')
    common(p, (3, 4, 5))
    p.add_argument('--observe', action='store_true',
                   help='also run the search and report the actual least degree')
    p.add_argument('--max-degree', type=int, metavar='N',
                   help='search budget when --observe is set')
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser('conjecture',
                       help='check the least multiple for residue collisions')
    common(p, (4, 5))
    p.add_argument('--max-degree', type=int, metavar='N',
                   help='give up past degree N')
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser('selftest', help='run the built-in regression battery')
    p.add_argument('--only', metavar='N1,N2,...',
                   help='run only these criterion numbers')
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PolyParseError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 2
    except HypothesisError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 3
    except CapError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 4


if __name__ == '__main__':
    sys.exit(main())
