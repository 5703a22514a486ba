"""Discrete-log and power-residue tables for GF(2)[x] moduli.

Both tables index powers of x modulo a fixed polynomial.  They are kept
in memory as numpy int64 arrays and never serialized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapError, HypothesisError
from .gf2 import FactorSpec, degree, format_poly, is_primitive, order

# largest exponent for which a full table is allowed (memory cap)
MAX_TABLE_EXPONENT = 1 << 26


def _as_poly(f):
    """Accept a FactorSpec or a packed int."""
    return f.poly if isinstance(f, FactorSpec) else f


def _power_residues(m, e):
    """[x^0, x^1, ..., x^(e-1)] mod m, failing if e is not the order of m."""
    if e < 1 or e > MAX_TABLE_EXPONENT:
        raise CapError(f'table exponent {e} outside [1, {MAX_TABLE_EXPONENT}]')
    d = degree(m)
    res = np.empty(e, dtype=np.int64)
    r = 1
    for i in range(e):
        if r == 1 and i > 0:
            raise HypothesisError(f'{e} is not the order of {format_poly(m)}')
        res[i] = r
        r <<= 1
        if r >> d & 1:
            r ^= m
    if r != 1:
        raise HypothesisError(f'{e} is not the order of {format_poly(m)}')
    return res


@dataclass(frozen=True, eq=False)
class ResidueTable:
    """Powers of x modulo a polynomial, one entry per exponent below e."""

    modulus: int
    exponent: int
    residues: np.ndarray  # residues[i] = x^i mod modulus


def build_residue_table(m, e=None):
    """Residue table for modulus m with exponent e (defaults to order(m))."""
    m = _as_poly(m)
    if e is None:
        e = order(m)
    return ResidueTable(modulus=m, exponent=e, residues=_power_residues(m, e))


@dataclass(frozen=True, eq=False)
class ZechTable:
    """Zech logarithms for a primitive modulus.

    antilog[i] = x^i mod modulus; dlog inverts antilog (dlog[0] = -1);
    zech[i] solves x^zech[i] = x^i + 1 for 1 <= i < e, with zech[0] = -1
    standing for log 0, since x^0 + 1 = 0.
    """

    modulus: int
    exponent: int
    antilog: np.ndarray
    dlog: np.ndarray
    zech: np.ndarray

    def zech_of(self, i):
        """Exponent z with x^z = x^i + 1, for 1 <= i < e."""
        if not 0 < i < self.exponent:
            raise ValueError(f'index {i} outside [1, {self.exponent - 1}]')
        return int(self.zech[i])


def build_zech(f):
    """Zech-logarithm table for a primitive polynomial (or FactorSpec)."""
    poly = _as_poly(f)
    if not is_primitive(poly):
        raise HypothesisError(f'{format_poly(poly)} is not primitive')
    d = degree(poly)
    e = (1 << d) - 1
    antilog = _power_residues(poly, e)
    dlog = np.full(1 << d, -1, dtype=np.int64)
    dlog[antilog] = np.arange(e, dtype=np.int64)
    zech = np.concatenate(([np.int64(-1)], dlog[antilog[1:] ^ 1]))
    return ZechTable(modulus=poly, exponent=e, antilog=antilog, dlog=dlog, zech=zech)
