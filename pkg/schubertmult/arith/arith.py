# -*- coding: utf-8 -*-

import functools
import math


class ArithException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


class InexactException(Exception):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


def exact_div(a, b, where='division'):
    if b == 0:
        raise InexactException('%s: division by zero' % where)
    quotient, remainder = divmod(a, b)
    if remainder != 0:
        raise InexactException('%s: %d not divisible by %d' % (where, a, b))
    return quotient


@functools.lru_cache(maxsize=65536)
def binom(a, b):
    """Generalized binomial coefficient a(a-1)...(a-b+1)/b!, zero for b < 0.

    After step k the running value is binom(a, k+1), so every division is exact
    for any integer a, negative ones included.
    """
    if b < 0:
        return 0
    value = 1
    for k in range(b):
        value = exact_div(value * (a - k), k + 1, 'binom(%d, %d)' % (a, b))
        if value == 0:
            break
    return value


def factorial_superproduct(d):
    """1! * 2! * ... * (d-1)!"""
    if d < 1:
        raise ArithException('superproduct order invalid: %s' % d)
    return math.prod(math.factorial(k) for k in range(1, d))
