"""Compiled completion-scan kernels for large exponent ranges.

Shared layout: res[i] = x^i mod m; items lists the exponents sorted by
residue value, bucket for value v spanning items[start[v]:start[v+1]];
prefix[p] = sum(items[:p]).  Scans visit each multiple once, from its
lowest exponents, and count bucket entries above the last one.
"""

from numba import njit


@njit(cache=True)
def _first_above(items, lo, hi, x):
    while lo < hi:
        mid = (lo + hi) >> 1
        if items[mid] > x:
            hi = mid
        else:
            lo = mid + 1
    return lo


@njit(cache=True)
def scan_weight4(res, start, items, prefix, cap):
    count = 0
    total = 0
    for i in range(1, cap - 1):
        ri = res[i] ^ 1
        for j in range(i + 1, cap):
            v = ri ^ res[j]
            lo = start[v]
            hi = start[v + 1]
            p1 = _first_above(items, lo, hi, j)
            p2 = _first_above(items, lo, hi, cap)
            count += p2 - p1
            total += prefix[p2] - prefix[p1]
    return count, total


@njit(cache=True)
def scan_weight5(res, start, items, prefix, cap):
    count = 0
    total = 0
    for i in range(1, cap - 2):
        ri = res[i] ^ 1
        for j in range(i + 1, cap - 1):
            rij = ri ^ res[j]
            for k in range(j + 1, cap):
                v = rij ^ res[k]
                lo = start[v]
                hi = start[v + 1]
                p1 = _first_above(items, lo, hi, k)
                p2 = _first_above(items, lo, hi, cap)
                count += p2 - p1
                total += prefix[p2] - prefix[p1]
    return count, total


@njit(cache=True)
def collect_weight4(res, start, items, cap, out):
    n = 0
    for i in range(1, cap - 1):
        ri = res[i] ^ 1
        for j in range(i + 1, cap):
            v = ri ^ res[j]
            lo = start[v]
            hi = start[v + 1]
            p1 = _first_above(items, lo, hi, j)
            p2 = _first_above(items, lo, hi, cap)
            for p in range(p1, p2):
                out[n, 0] = items[p]
                out[n, 1] = j
                out[n, 2] = i
                n += 1
    return n


@njit(cache=True)
def collect_weight5(res, start, items, cap, out):
    n = 0
    for i in range(1, cap - 2):
        ri = res[i] ^ 1
        for j in range(i + 1, cap - 1):
            rij = ri ^ res[j]
            for k in range(j + 1, cap):
                v = rij ^ res[k]
                lo = start[v]
                hi = start[v + 1]
                p1 = _first_above(items, lo, hi, k)
                p2 = _first_above(items, lo, hi, cap)
                for p in range(p1, p2):
                    out[n, 0] = items[p]
                    out[n, 1] = k
                    out[n, 2] = j
                    out[n, 3] = i
                    n += 1
    return n
