"""Pairing per-factor exponent data into 5-nomials of a two-factor product.

With coprime orders e1, e2, an exponent below e1*e2 is determined by its
residues mod e1 and mod e2.  A 5-nomial multiple of f1*f2 is therefore a
pairing of four exponent slots seen by f1 against four seen by f2, valid
when the four (left, right) pairs are distinct and none collides with
the implicit constant term at (0, 0).  On each side the slots come from
one of three patterns that reduce to a multiple of that factor alone:

  five   a genuine 5-nomial multiple, four distinct nonzero exponents;
  pad3   a trinomial multiple with an extra exponent doubled, (a, b, k, k),
         where k sweeps the whole range and may hit 0, a, or b;
  shift  a shifted trinomial padded with the constant, (a, b, c, 0).

The generator fixes the left slots and tries every distinct ordering of
the right multiset, so each pattern pair is tallied against its own
closed form, and the union over all nine pairs is the full 5-nomial set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .counting import five_term_cases
from .enumeration import _poly_exponent, build_shift_set, enumerate_tnomials
from .errors import CapError, HypothesisError

# full crt lookup tables get unwieldy past this product exponent
MAX_CASE_EXPONENT = 1 << 20

_SLOT_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def crt_combine(r1, e1, r2, e2):
    """The unique exponent below e1*e2 reducing to r1 mod e1 and r2 mod e2."""
    if math.gcd(e1, e2) != 1:
        raise HypothesisError(f'moduli {e1} and {e2} are not coprime')
    if not (0 <= r1 < e1 and 0 <= r2 < e2):
        raise ValueError('residues out of range')
    return (r2 + e2 * ((r1 - r2) * pow(e2, -1, e1) % e1)) % (e1 * e2)


@dataclass(frozen=True)
class LiftPlan:
    """Four exponent slots per factor; position v pairs left[v] with right[v]."""

    e1: int
    e2: int
    left: tuple
    right: tuple


@dataclass(frozen=True)
class Rejection:
    """Why a slot pairing yields no 5-nomial, with the offending positions."""

    reason: str  # 'duplicate_pair' or 'constant_pair'
    slots: tuple


def lift_pair(plan):
    """Exponents of the lifted 5-nomial, or the Rejection explaining why not."""
    if len(plan.left) != len(plan.right):
        raise ValueError('left and right need one slot per nonconstant term')
    pairs = list(zip(plan.left, plan.right))
    for v in range(len(pairs)):
        for w in range(v + 1, len(pairs)):
            if pairs[v] == pairs[w]:
                return Rejection('duplicate_pair', (v, w))
    for v, p in enumerate(pairs):
        if p == (0, 0):
            return Rejection('constant_pair', (v,))
    lifted = sorted((crt_combine(a, plan.e1, b, plan.e2) for a, b in pairs), reverse=True)
    return tuple(lifted)


@dataclass(frozen=True)
class CaseTally:
    """Outcome of one pattern pair: attempts, survivors, and the closed form."""

    case: str
    generated: int
    accepted: int
    closed_form: int

    def as_dict(self):
        return {'case': self.case, 'generated': self.generated,
                'accepted': self.accepted, 'closed_form': self.closed_form}


@dataclass(frozen=True, eq=False)
class CaseEnumeration:
    """Per-pattern-pair 5-nomial multiples of a two-factor product."""

    exponent: int
    tallies: tuple
    by_case: dict
    multiples: tuple

    @property
    def total(self):
        return len(self.multiples)


def _run_case(left_slots, right_slots, table):
    """Try every right ordering against each fixed left; dedup the lifts."""
    flat = []
    for right in right_slots:
        flat.extend(set(permutations(right)))
    found = set()
    for left in left_slots:
        rows = [table[a] for a in left]
        eq_pairs = [(v, w) for v, w in _SLOT_PAIRS if left[v] == left[w]]
        zero_slots = [v for v in range(4) if left[v] == 0]
        r0, r1, r2, r3 = rows
        for p in flat:
            ok = True
            for v, w in eq_pairs:
                if p[v] == p[w]:
                    ok = False
                    break
            if ok:
                for v in zero_slots:
                    if p[v] == 0:
                        ok = False
                        break
            if ok:
                found.add(tuple(sorted((r0[p[0]], r1[p[1]], r2[p[2]], r3[p[3]]),
                                       reverse=True)))
    return found, len(left_slots) * len(flat)


def enumerate_5nomials_by_cases(f1, f2):
    """All 5-nomial multiples of f1*f2 built from per-factor data, case by case."""
    p1, e1 = _poly_exponent(f1)
    p2, e2 = _poly_exponent(f2)
    if math.gcd(e1, e2) != 1:
        raise HypothesisError(f'factor exponents {e1} and {e2} are not coprime')
    if e1 * e2 > MAX_CASE_EXPONENT:
        raise CapError(f'case enumeration capped at product exponent {MAX_CASE_EXPONENT}')

    tri1 = enumerate_tnomials(p1, e1, 3)
    tri2 = enumerate_tnomials(p2, e2, 3)
    five1 = enumerate_tnomials(p1, e1, 5)
    five2 = enumerate_tnomials(p2, e2, 5)
    sh1 = build_shift_set((p1, e1)).elements
    sh2 = build_shift_set((p2, e2)).elements
    closed = five_term_cases(e1, e2, len(tri1), len(tri2), len(five1), len(five2),
                             len(sh1), len(sh2))

    slots1 = {
        'five': five1,
        'pad3': [(a, b, k, k) for a, b in tri1 for k in range(e1)],
        'shift': [(a, b, c, 0) for a, b, c in sh1],
    }
    slots2 = {
        'five': five2,
        'pad3': [(a, b, k, k) for a, b in tri2 for k in range(e2)],
        'shift': [(a, b, c, 0) for a, b, c in sh2],
    }
    table = [[crt_combine(a, e1, b, e2) for b in range(e2)] for a in range(e1)]

    tallies = []
    by_case = {}
    union = set()
    for case in closed:
        lkind, rkind = case.split('_')
        found, generated = _run_case(slots1[lkind], slots2[rkind], table)
        tallies.append(CaseTally(case=case, generated=generated,
                                 accepted=len(found), closed_form=closed[case]))
        by_case[case] = tuple(sorted(found))
        union |= found
    return CaseEnumeration(exponent=e1 * e2, tallies=tuple(tallies),
                           by_case=by_case, multiples=tuple(sorted(union)))
