# -*- coding: utf-8 -*-

import itertools

from dataclasses import dataclass
from typing import Tuple


class PosetException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


@dataclass(frozen=True)
class GrassmannIndex:
    """Strictly increasing vector 1 <= i_1 < ... < i_d <= n."""

    entries: Tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.entries) == 0:
            raise PosetException('index empty')
        if self.n < len(self.entries):
            raise PosetException('index invalid: d=%d exceeds n=%d' % (len(self.entries), self.n))
        for q, value in enumerate(self.entries):
            if value < 1 or value > self.n:
                raise PosetException('index invalid: entry %d (=%d) outside [1, %d]' % (q + 1, value, self.n))
            if q > 0 and value <= self.entries[q - 1]:
                raise PosetException('index invalid: entry %d (=%d) not greater than entry %d (=%d)'
                                     % (q + 1, value, q, self.entries[q - 1]))

    @property
    def d(self):
        return len(self.entries)

    @property
    def weight(self):
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, q):
        return self.entries[q]

    def __str__(self):
        return '-'.join(str(x) for x in self.entries)


def validate(entries, n):
    return GrassmannIndex(tuple(int(x) for x in entries), int(n))


def parse(text, n):
    """Parse comma-separated entries such as '2,4'."""
    try:
        entries = [int(x) for x in text.split(',') if x.strip() != '']
    except ValueError:
        raise PosetException('index invalid: %s' % text)
    return validate(entries, n)


def base(d, n):
    """The minimal element (1, 2, ..., d)."""
    return validate(range(1, d + 1), n)


def _same_shape(j, i):
    if j.d != i.d or j.n != i.n:
        raise PosetException('index shape mismatch: I(%d,%d) vs I(%d,%d)' % (j.d, j.n, i.d, i.n))


def leq(j, i):
    _same_shape(j, i)
    return all(a <= b for a, b in zip(j.entries, i.entries))


def enumerate_indices(d, n):
    """All of I(d, n), lexicographic."""
    if d < 1 or d > n:
        raise PosetException('shape invalid: need 1 <= d <= n, got d=%d n=%d' % (d, n))
    for entries in itertools.combinations(range(1, n + 1), d):
        yield GrassmannIndex(entries, n)


def lower_neighbors(i, j):
    """(q, i - e_q) for every q keeping the index valid and above j; q is 1-based."""
    if not leq(j, i) or i == j:
        raise PosetException('neighbors undefined: need j < i, got j=%s i=%s' % (j, i))
    buf = []
    for q in range(i.d):
        below = i.entries[q - 1] if q > 0 else 0
        value = i.entries[q] - 1
        if value > below and value >= j.entries[q]:
            entries = i.entries[:q] + (value,) + i.entries[q + 1:]
            buf.append((q + 1, GrassmannIndex(entries, i.n)))
    return buf


def interval(j, i):
    """Every k with j <= k <= i, ordered by weight then lexicographically."""
    if not leq(j, i):
        raise PosetException('interval empty: j=%s not below i=%s' % (j, i))

    def _helper(q, floor, prefix):
        if q == i.d:
            yield prefix
            return
        for value in range(max(j.entries[q], floor + 1), i.entries[q] + 1):
            yield from _helper(q + 1, value, prefix + (value,))

    buf = [GrassmannIndex(entries, i.n) for entries in _helper(0, 0, ())]
    return sorted(buf, key=lambda k: (k.weight, k.entries))


def pairs(d, n):
    """All (i, j) with j <= i, lexicographic by i then j."""
    indices = list(enumerate_indices(d, n))
    for i in indices:
        for j in indices:
            if leq(j, i):
                yield i, j
