# -*- coding: utf-8 -*-

import random
import time

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Tuple

from ..arith.arith import binom, factorial_superproduct
from ..detmat.detmat import ExactMatrix, build_shifted_vandermonde_matrix, determinant_bareiss, \
    determinant_cofactor, vandermonde
from ..diffeq.diffeq import LatticeBox, VerificationReport, check_difference_eq, check_shift_identity, eval_P
from ..logger.logger import Logger
from ..poset.poset import GrassmannIndex, enumerate_indices, leq, lower_neighbors
from ..proto.proto import Report, Route
from ..schubert.schubert import RecurrenceCache, applicable, degree, mult_det, mult_product, mult_rec, mult_sum, \
    mult_weyman, s_vector
from ..table.table import guard

SUITES = {
    'pascal': {},
    'determinant': {'cases': 200, 'order': 6, 'entry': 99},
    'v-form': {'cases': 500, 'dimension': 5, 'entry': 8, 'shift': 4},
    'alternating-binomial': {'cases': 500, 'shift': 6, 'entry': 10, 'row': 6},
    'difference-equation': {'cases': 40, 'dimension': 3, 'shift': 4, 'low': -3, 'high': 4},
    'shift-identity': {'cases': 40, 'dimension': 3, 'shift': 4, 'low': -3, 'high': 4},
    'equal-columns': {'cases': 200, 'dimension': 4, 'shift': 3, 'entry': 6},
}


class VerifierException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


@dataclass(frozen=True)
class Mismatch:
    i: Tuple[int, ...]
    j: Tuple[int, ...]
    route_a: str
    value_a: int
    route_b: str
    value_b: int

    def to_dict(self):
        return {
            'i': list(self.i),
            'j': list(self.j),
            'route_a': self.route_a,
            'value_a': str(self.value_a),
            'route_b': self.route_b,
            'value_b': str(self.value_b),
        }


@dataclass
class VerifyReport:
    d: int
    n: int
    pairs_checked: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    identities_checked: List[VerificationReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self):
        return len(self.mismatches) == 0 and all(item.passed for item in self.identities_checked)

    def to_dict(self):
        return {
            Report.D: self.d,
            Report.N: self.n,
            Report.PAIRS: self.pairs_checked,
            Report.MISMATCHES: [item.to_dict() for item in self.mismatches],
            Report.IDENTITIES: [item.to_dict() for item in self.identities_checked],
            Report.ELAPSED: round(self.elapsed, 6),
            Report.OK: self.ok,
        }


def sweep_for(entries, n):
    """Compare every route against the determinant for the fixed cell j."""
    j = GrassmannIndex(tuple(entries), n)
    cache = RecurrenceCache(j)
    checked = 0
    mismatches = []
    inductions = [0, None]

    for i in enumerate_indices(j.d, n):
        if not leq(j, i):
            continue
        checked += 1
        expected = mult_det(i, j)
        found = [(Route.RECURRENCE, mult_rec(i, j, cache)), (Route.SUM, mult_sum(i, j))]
        if applicable(i, j, Route.PRODUCT):
            found.append((Route.PRODUCT, mult_product(i, j)))
        if applicable(i, j, Route.WEYMAN):
            found.append((Route.WEYMAN, mult_weyman(i)))
        if expected < 1:
            mismatches.append(Mismatch(i.entries, j.entries, Route.DETERMINANT, expected, 'positivity', 1))
        for route, value in found:
            if value != expected:
                mismatches.append(Mismatch(i.entries, j.entries, Route.DETERMINANT, expected, route, value))

        if i != j:
            lhs = degree(i, j) * eval_P(s_vector(i, j), i.entries)
            rhs = sum(eval_P(s_vector(k, j), k.entries) for _, k in lower_neighbors(i, j))
            inductions[0] += 1
            if lhs != rhs and inductions[1] is None:
                inductions[1] = (i.entries + j.entries, lhs, rhs)

    return checked, mismatches, inductions


class Verifier(object):
    def __init__(self, config=None):
        self._config = config if config is not None else {}
        suites = self._config.get('verify', {}).get('suites', {})
        for name in suites:
            if name not in SUITES:
                raise VerifierException('suite invalid: %s' % name)
        self._suites = {name: dict(value, **suites.get(name, {})) for name, value in SUITES.items()}

    def _sweep(self, d, n, jobs):
        cells = [j.entries for j in enumerate_indices(d, n)]
        if jobs <= 1:
            results = [sweep_for(entries, n) for entries in cells]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                results = list(ex.map(sweep_for, cells, [n] * len(cells)))

        checked = 0
        mismatches = []
        count = 0
        witness = None
        for pairs, found, inductions in results:
            checked += pairs
            mismatches.extend(found)
            count += inductions[0]
            if witness is None and inductions[1] is not None:
                witness = inductions[1]

        if witness is None:
            induction = VerificationReport('induction-step', count, True)
        else:
            induction = VerificationReport('induction-step', count, False, *witness)
        return checked, mismatches, induction

    def _pascal(self, rng, suite):
        checked = 0
        for t in range(-10, 11):
            for s in range(-2, 11):
                checked += 1
                lhs = binom(t, s)
                rhs = binom(t - 1, s) + binom(t - 1, s - 1)
                if lhs != rhs:
                    return VerificationReport('pascal', checked, False, (t, s), lhs, rhs)
        return VerificationReport('pascal', checked, True)

    def _determinant(self, rng, suite):
        for case in range(suite['cases']):
            order = rng.randint(1, suite['order'])
            rows = [[rng.randint(-suite['entry'], suite['entry']) for _ in range(order)] for _ in range(order)]
            m = ExactMatrix.from_rows(rows)
            lhs, rhs = determinant_bareiss(m), determinant_cofactor(m)
            if lhs != rhs:
                return VerificationReport('determinant', case + 1, False, (case, order), lhs, rhs)
        return VerificationReport('determinant', suite['cases'], True)

    def _v_form(self, rng, suite):
        for case in range(suite['cases']):
            d = rng.randint(1, suite['dimension'])
            t = tuple(rng.randint(-suite['entry'], suite['entry']) for _ in range(d))
            k = tuple(rng.randint(0, suite['shift']) for _ in range(d))
            lhs = vandermonde(a + b for a, b in zip(t, k))
            rhs = factorial_superproduct(d) * determinant_bareiss(build_shifted_vandermonde_matrix(t, k))
            if lhs != rhs:
                return VerificationReport('v-form', case + 1, False, t + k, lhs, rhs)
        return VerificationReport('v-form', suite['cases'], True)

    def _alternating_binomial(self, rng, suite):
        for case in range(suite['cases']):
            s = rng.randint(0, suite['shift'])
            t = rng.randint(-suite['entry'], suite['entry'])
            p = rng.randint(1, suite['row'])
            lhs = sum((-1) ** k * binom(s, k) * binom(t + k, p - 1) for k in range(s + 1))
            rhs = (-1) ** s * binom(t, p - 1 - s)
            if lhs != rhs:
                return VerificationReport('alternating-binomial', case + 1, False, (s, t, p), lhs, rhs)
        return VerificationReport('alternating-binomial', suite['cases'], True)

    def _random_shift(self, rng, suite):
        d = rng.randint(1, suite['dimension'])
        return tuple(rng.randint(0, suite['shift']) for _ in range(d))

    def _difference_equation(self, rng, suite):
        checked = 0
        for _ in range(suite['cases']):
            s = self._random_shift(rng, suite)
            report = check_difference_eq(s, LatticeBox(suite['low'], suite['high'], len(s)))
            checked += report.checked
            if not report.passed:
                return VerificationReport(report.name, checked, False, report.witness, report.lhs, report.rhs)
        return VerificationReport('difference-equation', checked, True)

    def _shift_identity(self, rng, suite):
        checked = 0
        for _ in range(suite['cases']):
            s = self._random_shift(rng, suite)
            q = rng.randint(1, len(s))
            report = check_shift_identity(s, q, LatticeBox(suite['low'], suite['high'], len(s)))
            checked += report.checked
            if not report.passed:
                return VerificationReport(report.name, checked, False, report.witness, report.lhs, report.rhs)
        return VerificationReport('shift-identity', checked, True)

    def _equal_columns(self, rng, suite):
        for case in range(suite['cases']):
            d = rng.randint(2, max(2, suite['dimension']))
            s = [rng.randint(0, suite['shift']) for _ in range(d)]
            t = [rng.randint(-suite['entry'], suite['entry']) for _ in range(d)]
            q = rng.randint(1, d - 1)
            s[q], t[q] = s[q - 1], t[q - 1]
            value = eval_P(s, t)
            if value != 0:
                return VerificationReport('equal-columns', case + 1, False, tuple(t), value, 0)
        return VerificationReport('equal-columns', suite['cases'], True)

    def identities(self, seed):
        rng = random.Random(seed)
        handlers = [
            ('pascal', self._pascal),
            ('determinant', self._determinant),
            ('v-form', self._v_form),
            ('alternating-binomial', self._alternating_binomial),
            ('difference-equation', self._difference_equation),
            ('shift-identity', self._shift_identity),
            ('equal-columns', self._equal_columns),
        ]
        buf = []
        for name, handler in handlers:
            report = handler(rng, self._suites[name])
            Logger.debug('identity %s: checked=%d passed=%s' % (name, report.checked, report.passed))
            buf.append(report)
        return buf

    def run(self, d, n, seed=None, jobs=1, force=False):
        guard(self._config, n, force)
        if seed is None:
            seed = self._config.get('verify', {}).get('seed', 0)

        start = time.perf_counter()
        report = VerifyReport(d, n)
        report.pairs_checked, report.mismatches, induction = self._sweep(d, n, jobs)
        report.identities_checked = [induction] + self.identities(seed)
        report.elapsed = time.perf_counter() - start

        for item in report.mismatches:
            Logger.error('mismatch i=%s j=%s: %s=%d %s=%d' % (
                '-'.join(map(str, item.i)), '-'.join(map(str, item.j)),
                item.route_a, item.value_a, item.route_b, item.value_b))
        for item in report.identities_checked:
            if not item.passed:
                Logger.error('identity %s failed at %s: %s != %s' % (item.name, item.witness, item.lhs, item.rhs))

        return report
