# -*- coding: utf-8 -*-

import time

from dataclasses import dataclass

from ..logger.logger import Logger
from ..poset.poset import pairs
from ..proto.proto import Route
from ..schubert.schubert import RecurrenceCache, applicable, multiplicity
from ..table.table import guard


class BenchException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


@dataclass(frozen=True)
class BenchResult:
    route: str
    pairs: int
    seconds: float

    @property
    def rate(self):
        return self.pairs / self.seconds if self.seconds > 0 else float('inf')

    def __str__(self):
        return 'route=%s pairs=%d seconds=%.6f pairs_per_sec=%.1f' % (self.route, self.pairs, self.seconds, self.rate)


class Bencher(object):
    def __init__(self, config=None):
        self._config = config if config is not None else {}

    def _once(self, d, n, route):
        caches = {}
        count = 0
        for i, j in pairs(d, n):
            if not applicable(i, j, route):
                continue
            cache = None
            if route == Route.RECURRENCE:
                if j.entries not in caches:
                    caches[j.entries] = RecurrenceCache(j)
                cache = caches[j.entries]
            multiplicity(i, j, route, cache)
            count += 1
        return count

    def run(self, d, n, routes, repetitions=None, force=False):
        guard(self._config, n, force)
        if repetitions is None:
            repetitions = self._config.get('bench', {}).get('repetitions', 3)
        if repetitions < 1:
            raise BenchException('repetitions invalid: %d' % repetitions)
        for route in routes:
            if route not in Route.ALL:
                raise BenchException('route invalid: %s' % route)

        buf = []
        for route in routes:
            best = None
            count = 0
            for _ in range(repetitions):
                start = time.perf_counter()
                count = self._once(d, n, route)
                elapsed = time.perf_counter() - start
                best = elapsed if best is None else min(best, elapsed)
            Logger.debug('bench %s: %d pairs, best of %d' % (route, count, repetitions))
            buf.append(BenchResult(route, count, best))
        return buf
