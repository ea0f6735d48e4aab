# -*- coding: utf-8 -*-

import math

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..arith.arith import binom, exact_div

COFACTOR_GUARD = 10


class DetmatException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


@dataclass(frozen=True)
class ExactMatrix:
    """Dense square matrix of Python integers, rows[p][q] 0-indexed."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        order = len(self.rows)
        if order < 1:
            raise DetmatException('matrix empty')
        for p, row in enumerate(self.rows):
            if len(row) != order:
                raise DetmatException('matrix not square: row %d has %d entries, expected %d'
                                      % (p + 1, len(row), order))

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def order(self):
        return len(self.rows)

    def __getitem__(self, key):
        p, q = key
        return self.rows[p][q]

    def swap_columns(self, a, b):
        def _swap(row):
            buf = list(row)
            buf[a], buf[b] = buf[b], buf[a]
            return tuple(buf)
        return ExactMatrix(tuple(_swap(row) for row in self.rows))

    def tolist(self):
        return [list(row) for row in self.rows]


def determinant_bareiss(m):
    """Fraction-free Gaussian elimination; every division is exact."""
    n = m.order
    if n == 1:
        return m[0, 0]

    buf = m.tolist()
    sign = 1
    previous = 1

    for k in range(n - 1):
        if buf[k][k] == 0:
            for i in range(k + 1, n):
                if buf[i][k] != 0:
                    buf[k], buf[i] = buf[i], buf[k]
                    sign = -sign
                    break
            else:
                return 0

        pivot = buf[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = pivot * buf[i][j] - buf[i][k] * buf[k][j]
                buf[i][j] = exact_div(elt, previous, 'bareiss step %d' % k)
            buf[i][k] = 0
        previous = pivot

    return sign * buf[n - 1][n - 1]


def determinant_cofactor(m):
    """Laplace expansion along the first row. Test oracle only."""
    if m.order > COFACTOR_GUARD:
        raise DetmatException('cofactor expansion guard exceeded: order %d > %d' % (m.order, COFACTOR_GUARD))

    def _det(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = 0
        for q, head in enumerate(rows[0]):
            if head == 0:
                continue
            minor = [row[:q] + row[q + 1:] for row in rows[1:]]
            term = head * _det(minor)
            total += -term if q % 2 else term
        return total

    return _det([list(row) for row in m.rows])


def _pair(a, b, what):
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise DetmatException('%s length mismatch: %d != %d' % (what, len(a), len(b)))
    if len(a) < 1:
        raise DetmatException('%s empty' % what)
    return a, b


def build_binomial_matrix(i, s):
    """Entry (p, q) = binom(i_q, p - s_q) with 0-indexed p."""
    i, s = _pair(getattr(i, 'entries', i), s, 'binomial matrix')
    if any(x < 0 for x in s):
        raise DetmatException('shift vector negative: %s' % (s,))
    d = len(i)
    return ExactMatrix(tuple(tuple(binom(i[q], p - s[q]) for q in range(d)) for p in range(d)))


def build_shifted_vandermonde_matrix(t, k):
    t, k = _pair(t, k, 'shifted vandermonde matrix')
    d = len(t)
    return ExactMatrix(tuple(tuple(binom(t[q] + k[q], p) for q in range(d)) for p in range(d)))


def vandermonde(t: Sequence[int]):
    t = tuple(t)
    return math.prod(t[p] - t[q] for p in range(len(t)) for q in range(p))
