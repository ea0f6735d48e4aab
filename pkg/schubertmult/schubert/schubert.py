# -*- coding: utf-8 -*-

"""Multiplicity M_j(i) of a point of the cell X_j^0 on the Schubert variety X_i.

Five independent routes are provided:
    determinant  signed binomial determinant, the production route
    recurrence   M_j(j) = 1, M_j(i) = sum of M_j(k) over lower neighbours / deg(j, i)
    sum          alternating sum of shifted Vandermonde products
    product      Vandermonde product, only when j_d <= i_1
    weyman       Frobenius-coordinate determinant, only when j = (1, ..., d)
"""

import threading

from dataclasses import dataclass
from typing import Tuple

from ..arith.arith import binom, exact_div, factorial_superproduct
from ..detmat.detmat import ExactMatrix, build_binomial_matrix, determinant_bareiss, vandermonde
from ..diffeq.diffeq import multiple_sum
from ..poset.poset import GrassmannIndex, base, interval, leq, lower_neighbors
from ..proto.proto import Record, Route


class SchubertException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


class RouteException(SchubertException):
    pass


@dataclass(frozen=True)
class FrobeniusCoordinates:
    rank: int
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]


@dataclass(frozen=True)
class MultiplicityRecord:
    n: int
    i: GrassmannIndex
    j: GrassmannIndex
    value: int
    route: str

    @property
    def d(self):
        return self.i.d

    def to_dict(self):
        return {
            Record.N: self.n,
            Record.D: self.d,
            Record.I: list(self.i.entries),
            Record.J: list(self.j.entries),
            Record.ROUTE: self.route,
            Record.VALUE: str(self.value),
        }


def _contained(i, j):
    if not leq(j, i):
        raise SchubertException('cell not contained in variety: j=%s is not below i=%s' % (j, i))


def s_vector(i, j):
    _contained(i, j)
    return tuple(sum(1 for jp in j.entries if jp > iq) for iq in i.entries)


def degree(i, j):
    _contained(i, j)
    shared = set(j.entries)
    return i.d - sum(1 for iq in i.entries if iq in shared)


def mult_det(i, j):
    s = s_vector(i, j)
    sign = -1 if sum(s) % 2 else 1
    return sign * determinant_bareiss(build_binomial_matrix(i, s))


class RecurrenceCache(object):
    """Memo table of M_j(k) for one fixed j, keyed by the entries of k."""

    def __init__(self, j):
        self._j = j
        self._buf = {j.entries: 1}
        self._lock = threading.Lock()

    @property
    def j(self):
        return self._j

    def __contains__(self, k):
        return k.entries in self._buf

    def __len__(self):
        return len(self._buf)

    def get(self, k):
        return self._buf.get(k.entries)

    def fill(self, i):
        """Fill every k in [j, i] by increasing weight and return M_j(i)."""
        with self._lock:
            value = self._buf.get(i.entries)
            if value is not None:
                return value
            for k in interval(self._j, i):
                if k.entries in self._buf:
                    continue
                total = sum(self._buf[x.entries] for _, x in lower_neighbors(k, self._j))
                self._buf[k.entries] = exact_div(total, degree(k, self._j), 'recurrence at %s over %s' % (k, self._j))
            return self._buf[i.entries]


def mult_rec(i, j, cache=None):
    _contained(i, j)
    if cache is None:
        cache = RecurrenceCache(j)
    elif cache.j != j:
        raise SchubertException('cache bound to j=%s, asked for j=%s' % (cache.j, j))
    return cache.fill(i)


def mult_sum(i, j):
    return multiple_sum(s_vector(i, j), i.entries)


def mult_product(i, j):
    _contained(i, j)
    if not applicable(i, j, Route.PRODUCT):
        raise RouteException('product route inapplicable: j_d=%d exceeds i_1=%d' % (j.entries[-1], i.entries[0]))
    return exact_div(vandermonde(i.entries), factorial_superproduct(i.d), 'product at %s' % i)


def conjugate(partition):
    partition = tuple(partition)
    if not partition:
        return ()
    return tuple(sum(1 for part in partition if part > k) for k in range(partition[0]))


def frobenius_coordinates(partition):
    partition = tuple(partition)
    for p, part in enumerate(partition):
        if part < 0:
            raise SchubertException('partition invalid: part %d (=%d) negative' % (p + 1, part))
        if p > 0 and part > partition[p - 1]:
            raise SchubertException('partition invalid: part %d (=%d) exceeds part %d (=%d)'
                                    % (p + 1, part, p, partition[p - 1]))
    dual = conjugate(partition)
    rank = sum(1 for p, part in enumerate(partition, 1) if part >= p)
    alpha = tuple(partition[p] - (p + 1) for p in range(rank))
    beta = tuple(dual[p] - (p + 1) for p in range(rank))
    return FrobeniusCoordinates(rank, alpha, beta)


def partition_of(i):
    """(i_d - d, ..., i_2 - 2, i_1 - 1)"""
    return tuple(i.entries[q] - (q + 1) for q in reversed(range(i.d)))


def mult_weyman(i):
    coordinates = frobenius_coordinates(partition_of(i))
    if coordinates.rank == 0:
        return 1
    alpha, beta = coordinates.alpha, coordinates.beta
    matrix = ExactMatrix(tuple(tuple(binom(a + b, a) for b in beta) for a in alpha))
    return determinant_bareiss(matrix)


def multiplicity(i, j, route, cache=None):
    if route == Route.DETERMINANT:
        value = mult_det(i, j)
    elif route == Route.RECURRENCE:
        value = mult_rec(i, j, cache)
    elif route == Route.SUM:
        value = mult_sum(i, j)
    elif route == Route.PRODUCT:
        value = mult_product(i, j)
    elif route == Route.WEYMAN:
        _contained(i, j)
        if not applicable(i, j, route):
            raise RouteException('weyman route inapplicable: j=%s is not (1..%d)' % (j, j.d))
        value = mult_weyman(i)
    else:
        raise SchubertException('route invalid: %s' % route)
    return MultiplicityRecord(i.n, i, j, value, route)


def applicable(i, j, route):
    if route == Route.PRODUCT:
        return j.entries[-1] <= i.entries[0]
    if route == Route.WEYMAN:
        return j == base(j.d, j.n)
    return True
