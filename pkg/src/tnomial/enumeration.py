"""Enumeration and counting of t-nomial multiples below the order.

A t-nomial with nonzero constant term is stored as the tuple of its t-1
nonzero exponents in decreasing order; the trailing +1 is implicit, so
x^6 + x^2 + 1 is (6, 2).  Such a tuple is a multiple of m exactly when
the residues x^i mod m xor to 1 over its exponents, so scans walk
ascending exponent combinations and complete each one from a bucket map
keyed by residue value; every multiple is seen once, from its lowest
exponents.  Small scans run in pure Python, large ones in the compiled
kernels (same bucket layout, cross-checked in the tests).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapError
from .gf2 import FactorSpec, degree, is_primitive
from .tables import build_residue_table

# bucket arrays need 2^degree slots
MAX_SCAN_DEGREE = 24
# combination count above which the compiled kernels take over
KERNEL_THRESHOLD = 150_000

SUPPORTED_WEIGHTS = (3, 4, 5)

ScanTables = namedtuple('ScanTables', 'res start items prefix res_l start_l items_l')


def _check_weight(t):
    if t not in SUPPORTED_WEIGHTS:
        raise ValueError(f'weight must be one of {SUPPORTED_WEIGHTS}, got {t}')


def _poly_exponent(factor):
    """Accept a FactorSpec or a (poly, e) pair."""
    if isinstance(factor, FactorSpec):
        return factor.poly, factor.exponent
    poly, e = factor
    return poly, e


def _effective_cap(e, degree_cap):
    if degree_cap is None:
        return e - 1
    if not 1 <= degree_cap < e:
        raise ValueError(f'degree cap {degree_cap} outside [1, {e - 1}]')
    return degree_cap


@lru_cache(maxsize=16)
def _scan_tables(poly, e):
    """Residue table plus completion indexes, shared by all scan routines."""
    d = degree(poly)
    if d > MAX_SCAN_DEGREE:
        raise CapError(f'completion scans capped at modulus degree {MAX_SCAN_DEGREE}, got {d}')
    res = build_residue_table(poly, e).residues
    items = np.argsort(res, kind='stable').astype(np.int64)
    counts = np.bincount(res, minlength=1 << d)
    start = np.zeros((1 << d) + 1, dtype=np.int64)
    np.cumsum(counts, out=start[1:])
    prefix = np.zeros(e + 1, dtype=np.int64)
    np.cumsum(items, out=prefix[1:])
    return ScanTables(res, start, items, prefix, res.tolist(), start.tolist(), items.tolist())


def _py_scan(res, start, items, cap, t, collect):
    """Reference completion scan; returns (count, degree_total, found or None)."""
    count = 0
    total = 0
    found = [] if collect else None
    full = cap == len(res) - 1
    if t == 3:
        for i in range(1, cap):
            v = res[i] ^ 1
            lo, hi = start[v], start[v + 1]
            p1 = bisect_right(items, i, lo, hi)
            p2 = hi if full else bisect_right(items, cap, lo, hi)
            count += p2 - p1
            for p in range(p1, p2):
                total += items[p]
                if collect:
                    found.append((items[p], i))
    elif t == 4:
        for i in range(1, cap - 1):
            ri = res[i] ^ 1
            for j in range(i + 1, cap):
                v = ri ^ res[j]
                lo, hi = start[v], start[v + 1]
                p1 = bisect_right(items, j, lo, hi)
                p2 = hi if full else bisect_right(items, cap, lo, hi)
                count += p2 - p1
                for p in range(p1, p2):
                    total += items[p]
                    if collect:
                        found.append((items[p], j, i))
    else:
        for i in range(1, cap - 2):
            ri = res[i] ^ 1
            for j in range(i + 1, cap - 1):
                rij = ri ^ res[j]
                for k in range(j + 1, cap):
                    v = rij ^ res[k]
                    lo, hi = start[v], start[v + 1]
                    p1 = bisect_right(items, k, lo, hi)
                    p2 = hi if full else bisect_right(items, cap, lo, hi)
                    count += p2 - p1
                    for p in range(p1, p2):
                        total += items[p]
                        if collect:
                            found.append((items[p], k, j, i))
    return count, total, found


def _scan(poly, e, t, cap, collect):
    tabs = _scan_tables(poly, e)
    if t == 3 or math.comb(cap, t - 1) <= KERNEL_THRESHOLD:
        return _py_scan(tabs.res_l, tabs.start_l, tabs.items_l, cap, t, collect)
    from . import _kernels

    scan = _kernels.scan_weight4 if t == 4 else _kernels.scan_weight5
    count, total = scan(tabs.res, tabs.start, tabs.items, tabs.prefix, cap)
    count, total = int(count), int(total)
    if not collect:
        return count, total, None
    gather = _kernels.collect_weight4 if t == 4 else _kernels.collect_weight5
    out = np.empty((count, t - 1), dtype=np.int64)
    written = gather(tabs.res, tabs.start, tabs.items, cap, out)
    assert written == count
    return count, total, [tuple(row) for row in out.tolist()]


@lru_cache(maxsize=4096)
def _scan_counts(poly, e, t, cap):
    count, total, _ = _scan(poly, e, t, cap, collect=False)
    return count, total


def count_tnomials(poly, e, t, degree_cap=None):
    """Number of t-nomial multiples of poly with degree below e (or up to degree_cap)."""
    _check_weight(t)
    cap = _effective_cap(e, degree_cap)
    if (t == 3 and degree_cap is None
            and e == (1 << degree(poly)) - 1 and is_primitive(poly)):
        return (e - 1) // 2
    return _scan_counts(poly, e, t, cap)[0]


def count_trinomials(poly, e):
    """Trinomial multiples below e: (e-1)/2 when poly is primitive, scanned otherwise."""
    return count_tnomials(poly, e, 3)


def degree_sum(poly, e, t):
    """Sum of degrees over all t-nomial multiples of poly below e."""
    _check_weight(t)
    return _scan_counts(poly, e, t, e - 1)[1]


def enumerate_tnomials(poly, e, t, degree_cap=None):
    """All t-nomial multiples as decreasing exponent tuples, sorted."""
    _check_weight(t)
    cap = _effective_cap(e, degree_cap)
    found = _scan(poly, e, t, cap, collect=True)[2]
    found.sort()
    return found


def tnomial_poly(exponents):
    """Packed polynomial for a t-nomial given by its nonzero exponents."""
    p = 1
    for a in exponents:
        if a < 1 or p >> a & 1:
            raise ValueError('exponents must be distinct positive integers')
        p |= 1 << a
    return p


def shift_set_size(e, trinomial_count):
    """Closed-form shift-set size: e*n3/3 - n3 shifts survive the degree cap."""
    total = e * trinomial_count
    if total % 3:
        raise ValueError(f'shift size needs 3 | e*n3, got e={e}, n3={trinomial_count}')
    return total // 3 - trinomial_count


@dataclass(frozen=True)
class ShiftSet:
    """Shifted trinomial multiples x^s * (x^a + x^b + 1) of degree below the order."""

    poly: int
    exponent: int
    elements: tuple  # (a+s, b+s, s) triples, entries decreasing

    def __len__(self):
        return len(self.elements)


def build_shift_set(factor):
    """All shifted trinomial multiples of a factor with degree below its order."""
    poly, e = _poly_exponent(factor)
    tris = enumerate_tnomials(poly, e, 3)
    elems = []
    for a, b in tris:
        elems.extend((a + s, b + s, s) for s in range(1, e - a))
    elems.sort()
    expected = shift_set_size(e, len(tris))
    if len(elems) != expected:
        raise AssertionError(f'shift set size {len(elems)} != closed form {expected}')
    return ShiftSet(poly=poly, exponent=e, elements=tuple(elems))
