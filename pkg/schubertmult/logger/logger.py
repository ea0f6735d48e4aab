# -*- coding: utf-8 -*-

import colorama
import sys
import time

LEVELS = ('debug', 'info', 'warn', 'error')


class Logger(object):
    _level = LEVELS.index('info')

    def __init__(self):
        pass

    @staticmethod
    def level(name=None):
        if name is not None:
            if name not in LEVELS:
                raise ValueError('log level invalid: %s' % name)
            Logger._level = LEVELS.index(name)
        return LEVELS[Logger._level]

    @staticmethod
    def _write(name, color, msg):
        if LEVELS.index(name) < Logger._level:
            return
        sys.stderr.write(u'{color}{time} {label}:{reset} {msg}\n'.format(
            color=color + colorama.Style.BRIGHT,
            time=time.strftime('%Y-%m-%d %H:%M:%S', time.localtime(time.time())),
            label=name.upper(),
            reset=colorama.Style.RESET_ALL,
            msg=msg))

    @staticmethod
    def debug(msg):
        Logger._write('debug', colorama.Fore.GREEN, msg)

    @staticmethod
    def error(msg):
        Logger._write('error', colorama.Fore.RED, msg)

    @staticmethod
    def info(msg):
        Logger._write('info', colorama.Fore.WHITE, msg)

    @staticmethod
    def warn(msg):
        Logger._write('warn', colorama.Fore.YELLOW, msg)
