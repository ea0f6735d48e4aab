# -*- coding: utf-8 -*-

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

from ..logger.logger import Logger
from ..poset.poset import GrassmannIndex, enumerate_indices, leq
from ..proto.proto import Route
from ..schubert.schubert import RecurrenceCache, applicable, multiplicity

GUARD_N = 12


class TableException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


class GuardException(TableException):
    pass


def guard(config, n, force=False):
    """Cap n so that a C(n, d)^2 sweep stays desk-sized."""
    limit = config.get('guard', {}).get('n', GUARD_N) if config else GUARD_N
    if n > limit and not force:
        raise GuardException('guard exceeded: n=%d > %d, use --force to override' % (n, limit))


@dataclass(frozen=True)
class TableRequest:
    d: int
    n: int
    fmt: Optional[str] = None
    routes: Tuple[str, ...] = (Route.DETERMINANT,)
    out: Optional[str] = None
    jobs: int = 1
    force: bool = False


def rows_for(entries, n, routes):
    """Every record with outer index i; recurrence caches stay local to this call."""
    i = GrassmannIndex(tuple(entries), n)
    buf = []
    for j in enumerate_indices(i.d, n):
        if not leq(j, i):
            continue
        cache = RecurrenceCache(j) if Route.RECURRENCE in routes else None
        for route in routes:
            if applicable(i, j, route):
                buf.append(multiplicity(i, j, route, cache))
    return buf


class Tabler(object):
    def __init__(self, config=None):
        self._config = config if config is not None else {}

    def _routes(self, routes):
        buf = []
        for route in routes:
            if route not in Route.ALL:
                raise TableException('route invalid: %s' % route)
        for route in Route.ALL:
            if route in routes:
                buf.append(route)
        if len(buf) == 0:
            raise TableException('route empty')
        return tuple(buf)

    def run(self, request):
        guard(self._config, request.n, request.force)
        routes = self._routes(request.routes)
        indices = [i.entries for i in enumerate_indices(request.d, request.n)]

        Logger.debug('table d=%d n=%d routes=%s jobs=%d' % (request.d, request.n, ','.join(routes), request.jobs))

        if request.jobs <= 1:
            chunks = [rows_for(entries, request.n, routes) for entries in indices]
        else:
            with ProcessPoolExecutor(max_workers=request.jobs) as ex:
                chunks = list(ex.map(rows_for, indices, [request.n] * len(indices), [routes] * len(indices)))

        return [record for chunk in chunks for record in chunk]
