"""Polynomial arithmetic over GF(2) on bit-packed coefficients.

A polynomial is a nonnegative Python int: bit i holds the coefficient of
x^i, so x^4 + x + 1 is 0b10011 = 0x13 = 19.  Addition is xor, and the
zero polynomial is 0.  All functions work on plain ints; FactorSpec is a
thin record for a factor whose primitivity and order have been checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapError, HypothesisError, PolyParseError

# order() of an irreducible of degree d needs 2^d - 1 factored
MAX_ORDER_DEGREE = 64

_TRIAL_DIVISION_BOUND = 1 << 20


def degree(a):
    """Degree of a, with degree(0) == -1."""
    return a.bit_length() - 1


def weight(a):
    """Number of nonzero terms of a."""
    return a.bit_count()


def poly_mul(a, b):
    """Product of a and b in GF(2)[x]."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    res = 0
    while a:
        low = a & -a
        res ^= b << (low.bit_length() - 1)
        a ^= low
    return res


def poly_divmod(a, m):
    """Quotient and remainder of a divided by m."""
    if m == 0:
        raise ZeroDivisionError('polynomial division by zero')
    dm = m.bit_length()
    q = 0
    da = a.bit_length()
    while da >= dm:
        shift = da - dm
        q |= 1 << shift
        a ^= m << shift
        da = a.bit_length()
    return q, a


def poly_mod(a, m):
    """Remainder of a modulo m."""
    if m == 0:
        raise ZeroDivisionError('polynomial division by zero')
    dm = m.bit_length()
    da = a.bit_length()
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length()
    return a


def poly_gcd(a, b):
    """Greatest common divisor of a and b."""
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_pow_mod(base, n, m):
    """base^n modulo m, by repeated squaring."""
    res = poly_mod(1, m)
    base = poly_mod(base, m)
    while n:
        if n & 1:
            res = poly_mod(poly_mul(res, base), m)
        base = poly_mod(poly_mul(base, base), m)
        n >>= 1
    return res


def parse_poly(text):
    """Parse 'x^4+x+1' or a hex mask '0x13' into a packed int.

    Terms may appear in any order but must be distinct.  Whitespace is
    ignored.  Raises PolyParseError on malformed input.
    """
    s = text.replace(' ', '').replace('\t', '').lower()
    if not s:
        raise PolyParseError('empty polynomial')
    if s.startswith('0x'):
        try:
            return int(s, 16)
        except ValueError:
            raise PolyParseError(f'bad hex mask: {text!r}') from None
    p = 0
    for term in s.split('+'):
        if term == '1':
            exp = 0
        elif term == 'x':
            exp = 1
        elif term.startswith('x^'):
            try:
                exp = int(term[2:])
            except ValueError:
                raise PolyParseError(f'bad term {term!r} in {text!r}') from None
            if exp < 0:
                raise PolyParseError(f'negative exponent in {text!r}')
        else:
            raise PolyParseError(f'bad term {term!r} in {text!r}')
        if p >> exp & 1:
            raise PolyParseError(f'repeated term x^{exp} in {text!r}')
        p |= 1 << exp
    return p


def format_poly(p):
    """Render p as a caret expression, highest exponent first."""
    if p == 0:
        return '0'
    terms = []
    for exp in range(p.bit_length() - 1, -1, -1):
        if p >> exp & 1:
            terms.append('1' if exp == 0 else 'x' if exp == 1 else f'x^{exp}')
    return '+'.join(terms)


def format_hex(p):
    """Render p as a hex coefficient mask."""
    return hex(p)


def is_irreducible(f):
    """Test irreducibility of f (Ben-Or): gcd(x^2^i - x, f) for i <= deg f / 2."""
    if f <= 1:
        return False
    b = 2
    for _ in range(degree(f) // 2):
        b = poly_mod(poly_mul(b, b), f)
        if poly_gcd(b ^ 2, f) != 1:
            return False
    return True


def _factorize(n):
    """Prime factorization of n as a dict prime -> multiplicity."""
    factors = {}
    p = 2
    while p * p <= n and p <= _TRIAL_DIVISION_BOUND:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        if n < _TRIAL_DIVISION_BOUND * _TRIAL_DIVISION_BOUND:
            factors[n] = factors.get(n, 0) + 1
        else:
            from sympy import factorint

            for q, m in factorint(n).items():
                factors[q] = factors.get(q, 0) + m
    return factors


def _order_irreducible(f):
    """Multiplicative order of x modulo an irreducible f."""
    d = degree(f)
    if d > MAX_ORDER_DEGREE:
        raise CapError(f'order computation capped at degree {MAX_ORDER_DEGREE}, got {d}')
    e = (1 << d) - 1
    for p in _factorize(e):
        while e % p == 0 and poly_pow_mod(2, e // p, f) == 1:
            e //= p
    return e


def _factor_poly(f):
    """Factor f (odd constant term) into irreducibles by trial division."""
    factors = {}
    rem = f
    k = 1
    while degree(rem) > 0 and not is_irreducible(rem):
        hit = None
        while hit is None:
            for g in range((1 << k) | 1, 1 << (k + 1), 2):
                if poly_mod(rem, g) == 0:
                    hit = g
                    break
            else:
                k += 1
                if k > degree(rem) // 2:
                    hit = rem
        mult = 0
        while poly_mod(rem, hit) == 0:
            rem = poly_divmod(rem, hit)[0]
            mult += 1
        factors[hit] = mult
    if degree(rem) > 0:
        factors[rem] = factors.get(rem, 0) + 1
    return factors


def order(f):
    """Least e > 0 with f dividing x^e - 1.

    f must have nonzero constant term and positive degree.  For a
    reducible f = prod g_i^{b_i} the order is lcm over i of
    order(g_i) * 2^ceil(log2 b_i).
    """
    if f <= 1 or f & 1 == 0:
        raise HypothesisError('order undefined: need positive degree and nonzero constant term')
    if is_irreducible(f):
        return _order_irreducible(f)
    e = 1
    for g, b in _factor_poly(f).items():
        e = math.lcm(e, _order_irreducible(g) << (b - 1).bit_length())
    return e


def product_order(factors):
    """Order of a product of pairwise-coprime polynomials: lcm of the orders."""
    factors = list(factors)
    for i, a in enumerate(factors):
        for b in factors[i + 1:]:
            if degree(poly_gcd(a, b)) > 0:
                raise HypothesisError(
                    f'common factor between {format_poly(a)} and {format_poly(b)}')
    e = 1
    for f in factors:
        e = math.lcm(e, order(f))
    return e


def is_primitive(f):
    """Test whether f is primitive: irreducible with order 2^deg(f) - 1."""
    if not is_irreducible(f):
        return False
    if f == 2:  # f = x has order undefined
        return False
    return _order_irreducible(f) == (1 << degree(f)) - 1


_PRIMITIVE_CACHE = {}


def primitive_poly(d):
    """Primitive polynomial of degree d with the smallest coefficient mask."""
    if d < 1:
        raise ValueError('degree must be positive')
    if d not in _PRIMITIVE_CACHE:
        for mask in range((1 << d) | 1, 1 << (d + 1), 2):
            if is_primitive(mask):
                _PRIMITIVE_CACHE[d] = mask
                break
        else:
            raise RuntimeError(f'no primitive polynomial of degree {d} found')
    return _PRIMITIVE_CACHE[d]


def all_primitive_polys(d):
    """All primitive polynomials of degree d, ascending by mask."""
    return [mask for mask in range((1 << d) | 1, 1 << (d + 1), 2) if is_primitive(mask)]


@dataclass(frozen=True)
class FactorSpec:
    """A primitive factor: packed polynomial, its degree, and its order."""

    poly: int
    degree: int
    exponent: int

    @classmethod
    def from_poly(cls, poly):
        """Build a FactorSpec, checking primitivity."""
        if not is_primitive(poly):
            raise HypothesisError(f'{format_poly(poly)} is not primitive')
        d = degree(poly)
        return cls(poly=poly, degree=d, exponent=(1 << d) - 1)
