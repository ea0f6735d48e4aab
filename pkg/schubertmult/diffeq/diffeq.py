# -*- coding: utf-8 -*-

"""Pointwise evaluation of the polynomials P_s(t) and executable checks of the
difference equations they satisfy.

P_s(t) = (-1)^|s| det[binom(t_q, p - 1 - s_q)]. Polynomials are never expanded
symbolically; every claim is checked at integer lattice points.
"""

import itertools
import math

from dataclasses import dataclass
from typing import Optional, Tuple

from ..arith.arith import binom, exact_div, factorial_superproduct
from ..detmat.detmat import build_binomial_matrix, determinant_bareiss, vandermonde


class DiffeqException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


@dataclass(frozen=True)
class LatticeBox:
    """The cube [low, high]^dimension of integer points."""

    low: int
    high: int
    dimension: int

    def __post_init__(self):
        if self.dimension < 1:
            raise DiffeqException('box dimension invalid: %d' % self.dimension)
        if self.low > self.high:
            raise DiffeqException('box bounds invalid: [%d, %d]' % (self.low, self.high))

    def __iter__(self):
        return itertools.product(range(self.low, self.high + 1), repeat=self.dimension)

    def __len__(self):
        return (self.high - self.low + 1) ** self.dimension


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checked: int
    passed: bool
    witness: Optional[Tuple[int, ...]] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def to_dict(self):
        return {
            'name': self.name,
            'checked': self.checked,
            'passed': self.passed,
            'witness': list(self.witness) if self.witness is not None else None,
            'lhs': str(self.lhs) if self.lhs is not None else None,
            'rhs': str(self.rhs) if self.rhs is not None else None,
        }


def _check_lengths(s, t):
    s, t = tuple(s), tuple(t)
    if len(s) != len(t):
        raise DiffeqException('length mismatch: s has %d entries, t has %d' % (len(s), len(t)))
    if len(s) < 1:
        raise DiffeqException('lattice point empty')
    return s, t


def _check_direction(q, d):
    if q < 1 or q > d:
        raise DiffeqException('direction invalid: q=%d outside [1, %d]' % (q, d))


def _shift(t, q, step):
    return t[:q - 1] + (t[q - 1] + step,) + t[q:]


def eval_P(s, t):
    s, t = _check_lengths(s, t)
    sign = -1 if sum(s) % 2 else 1
    return sign * determinant_bareiss(build_binomial_matrix(t, s))


def delta_eval(s, q, t, evaluator=eval_P):
    s, t = _check_lengths(s, t)
    _check_direction(q, len(t))
    return evaluator(s, t) - evaluator(s, _shift(t, q, -1))


def multiple_sum(s, t):
    """Alternating box sum of shifted Vandermonde products over 0 <= k <= s."""
    s, t = _check_lengths(s, t)
    if any(x < 0 for x in s):
        raise DiffeqException('shift vector negative: %s' % (s,))
    total = 0
    for k in itertools.product(*(range(x + 1) for x in s)):
        coefficient = math.prod(binom(a, b) for a, b in zip(s, k))
        term = coefficient * vandermonde(a + b for a, b in zip(t, k))
        total += -term if sum(k) % 2 else term
    return exact_div(total, factorial_superproduct(len(s)), 'multiple sum at %s' % (t,))


class _Memo(object):
    def __init__(self, evaluator, s):
        self._evaluator = evaluator
        self._s = s
        self._buf = {}

    def __call__(self, t):
        value = self._buf.get(t)
        if value is None:
            value = self._buf[t] = self._evaluator(self._s, t)
        return value


def check_difference_eq(s, box, evaluator=eval_P):
    """Sum over q of Delta_q P_s(t) vanishes at every t in the box."""
    s = tuple(s)
    if len(s) != box.dimension:
        raise DiffeqException('length mismatch: s has %d entries, box dimension %d' % (len(s), box.dimension))
    memo = _Memo(evaluator, s)
    checked = 0
    for t in box:
        here = memo(t)
        total = sum(here - memo(_shift(t, q, -1)) for q in range(1, len(s) + 1))
        checked += 1
        if total != 0:
            return VerificationReport('difference-equation', checked, False, t, total, 0)
    return VerificationReport('difference-equation', checked, True)


def check_shift_identity(s, q, box, evaluator=eval_P):
    """Delta_q P_s(t) = -P_{s + e_q}(t - e_q) at every t in the box."""
    s = tuple(s)
    if len(s) != box.dimension:
        raise DiffeqException('length mismatch: s has %d entries, box dimension %d' % (len(s), box.dimension))
    _check_direction(q, len(s))
    memo = _Memo(evaluator, s)
    raised = _Memo(evaluator, _shift(s, q, 1))
    checked = 0
    for t in box:
        below = _shift(t, q, -1)
        lhs = memo(t) - memo(below)
        rhs = -raised(below)
        checked += 1
        if lhs != rhs:
            return VerificationReport('shift-identity', checked, False, t, lhs, rhs)
    return VerificationReport('shift-identity', checked, True)
