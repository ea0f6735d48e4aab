# -*- coding: utf-8 -*-

import json
import os
import sys

from .arith.arith import ArithException, InexactException
from .bench.bench import Bencher, BenchException
from .cmd.argument import Argument
from .cmd.banner import BANNER
from .detmat.detmat import DetmatException
from .diffeq.diffeq import DiffeqException
from .logger.logger import Logger
from .poset.poset import PosetException, parse
from .printer.printer import Printer, PrinterException
from .proto.proto import Code, Route
from .schubert.schubert import RouteException, SchubertException, applicable, multiplicity
from .table.table import GuardException, TableException, Tabler, TableRequest
from .verifier.verifier import Verifier, VerifierException

CONFIG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config', 'config.json')

INVALID = (ArithException, BenchException, DetmatException, DiffeqException, PosetException, PrinterException,
           SchubertException, TableException, VerifierException)


def load(name):
    with open(name, 'r') as f:
        if name.endswith('.json'):
            data = json.load(f)
        else:
            data = None
    return data


def _jobs(arg, config):
    if arg.jobs is not None:
        return arg.jobs
    return config.get('table', {}).get('jobs', 1)


def compute(arg, config):
    i = parse(arg.i, arg.n)
    j = parse(arg.j, arg.n)
    if i.d != j.d:
        raise PosetException('index shape mismatch: i has %d entries, j has %d' % (i.d, j.d))

    requested = arg.routes is not None
    routes = [route for route in Route.ALL if route in arg.routes] if requested else list(Route.ALL)

    buf = []
    skipped = []
    for route in routes:
        if not applicable(i, j, route):
            skipped.append(route)
            continue
        buf.append(multiplicity(i, j, route).to_dict())

    # Containment is checked inside every route; an all-inapplicable request still has to fail on j > i.
    if len(buf) == 0:
        multiplicity(i, j, Route.DETERMINANT)

    Printer(config).run(buf, arg.out, arg.format)

    if requested and len(skipped) != 0:
        Logger.error('route inapplicable: %s' % ', '.join(skipped))
        return Code.INAPPLICABLE
    return Code.SUCCESS


def table(arg, config):
    request = TableRequest(d=arg.d,
                           n=arg.n,
                           fmt=arg.format,
                           routes=tuple(arg.routes) if arg.routes is not None else (Route.DETERMINANT,),
                           out=arg.out,
                           jobs=_jobs(arg, config),
                           force=arg.force)
    records = Tabler(config).run(request)
    Printer(config).run([record.to_dict() for record in records], request.out, request.fmt)
    Logger.info('table d=%d n=%d: %d rows' % (request.d, request.n, len(records)))
    return Code.SUCCESS


def verify(arg, config):
    report = Verifier(config).run(arg.d, arg.n, arg.seed, _jobs(arg, config), arg.force)
    Printer(config).report(report.to_dict(), arg.out)
    Logger.info('verify d=%d n=%d: %d pairs, %d mismatches, %d identities, %.3fs' % (
        report.d, report.n, report.pairs_checked, len(report.mismatches),
        len(report.identities_checked), report.elapsed))
    return Code.SUCCESS if report.ok else Code.MISMATCH


def bench(arg, config):
    routes = [route for route in Route.ALL if route in arg.routes] if arg.routes is not None else list(Route.ALL)
    for result in Bencher(config).run(arg.d, arg.n, routes, arg.repetitions, arg.force):
        sys.stdout.write('%s\n' % result)
    sys.stdout.flush()
    return Code.SUCCESS


def main():
    sys.stderr.write(BANNER)

    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)

    argument = Argument()
    arg = argument.parse(sys.argv)

    config_file = arg.config_file if arg.config_file is not None else CONFIG_FILE
    if os.path.exists(config_file) and config_file.endswith('.json'):
        config = load(config_file)
    else:
        Logger.error('config invalid: %s' % config_file)
        return Code.INVALID

    try:
        Logger.level(arg.log_level if arg.log_level is not None else config.get('logger', {}).get('level', 'info'))
    except ValueError as e:
        Logger.error(str(e))
        return Code.INVALID

    handlers = {
        'bench': bench,
        'compute': compute,
        'table': table,
        'verify': verify,
    }

    try:
        return handlers[arg.command](arg, config)
    except RouteException as e:
        Logger.error(str(e))
        return Code.INAPPLICABLE
    except GuardException as e:
        Logger.error(str(e))
        return Code.GUARD
    except InexactException as e:
        Logger.error('arithmetic inexact: %s' % str(e))
        return Code.MISMATCH
    except INVALID as e:
        Logger.error(str(e))
        return Code.INVALID
