# -*- coding: utf-8 -*-

import argparse

from ..logger.logger import LEVELS
from ..printer.printer import Printer
from ..proto.proto import Route
from .version import VERSION


class Argument(object):
    def __init__(self):
        self._parser = argparse.ArgumentParser(description='Multiplicities of Points on Schubert Varieties')
        self._parser.add_argument('-v', '--version',
                                  action='version',
                                  version=VERSION)
        self._common = argparse.ArgumentParser(add_help=False)
        self._add_common()
        self._commands = self._parser.add_subparsers(dest='command', metavar='COMMAND')
        self._commands.required = True
        self._add_compute()
        self._add_table()
        self._add_verify()
        self._add_bench()

    def _add_common(self):
        self._common.add_argument('-c', '--config-file',
                                  default=None,
                                  dest='config_file',
                                  help='config file, format: .json')
        self._common.add_argument('-l', '--log-level',
                                  choices=LEVELS,
                                  default=None,
                                  dest='log_level',
                                  help='log level')

    def _add_shape(self, parser):
        parser.add_argument('--d',
                            dest='d',
                            help='subspace dimension d',
                            required=True,
                            type=int)
        parser.add_argument('--n',
                            dest='n',
                            help='ambient dimension n',
                            required=True,
                            type=int)
        parser.add_argument('--force',
                            action='store_true',
                            dest='force',
                            help='lift the n guard')

    def _add_route(self, parser, default=None):
        parser.add_argument('--route',
                            action='append',
                            choices=Route.ALL,
                            default=default,
                            dest='routes',
                            help='computation route, repeatable')

    def _add_output(self, parser):
        parser.add_argument('--format',
                            choices=Printer.format(),
                            default=None,
                            dest='format',
                            help='output format')
        parser.add_argument('--out',
                            default=None,
                            dest='out',
                            help='output file, standard output if omitted')

    def _add_jobs(self, parser):
        parser.add_argument('--jobs',
                            default=None,
                            dest='jobs',
                            help='worker processes',
                            type=int)

    def _add_compute(self):
        parser = self._commands.add_parser('compute', parents=[self._common], help='multiplicity of one pair')
        parser.add_argument('--n',
                            dest='n',
                            help='ambient dimension n',
                            required=True,
                            type=int)
        parser.add_argument('--i',
                            dest='i',
                            help='variety index, comma-separated',
                            required=True)
        parser.add_argument('--j',
                            dest='j',
                            help='cell index, comma-separated',
                            required=True)
        self._add_route(parser)
        self._add_output(parser)

    def _add_table(self):
        parser = self._commands.add_parser('table', parents=[self._common], help='multiplicities of all pairs')
        self._add_shape(parser)
        self._add_route(parser)
        self._add_output(parser)
        self._add_jobs(parser)

    def _add_verify(self):
        parser = self._commands.add_parser('verify', parents=[self._common], help='cross-check all routes')
        self._add_shape(parser)
        parser.add_argument('--seed',
                            default=None,
                            dest='seed',
                            help='seed of the identity suites',
                            type=int)
        parser.add_argument('--out',
                            default=None,
                            dest='out',
                            help='report file, standard output if omitted')
        self._add_jobs(parser)

    def _add_bench(self):
        parser = self._commands.add_parser('bench', parents=[self._common], help='time routes over a table')
        self._add_shape(parser)
        self._add_route(parser)
        parser.add_argument('--repetitions',
                            default=None,
                            dest='repetitions',
                            help='runs per route, best is reported',
                            type=int)

    def parse(self, argv):
        return self._parser.parse_args(argv[1:])
