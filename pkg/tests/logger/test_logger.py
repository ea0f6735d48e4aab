# -*- coding: utf-8 -*-

import pytest

from schubertmult.logger.logger import Logger


@pytest.fixture(autouse=True)
def _level():
    saved = Logger.level()
    yield
    Logger.level(saved)


def test_debug(capsys):
    Logger.level('debug')
    logger = Logger()
    logger.debug('debug')
    captured = capsys.readouterr()
    assert 'debug\n' in captured.err
    assert 'DEBUG' in captured.err


def test_error(capsys):
    logger = Logger()
    logger.error('error')
    captured = capsys.readouterr()
    assert 'error\n' in captured.err
    assert captured.out == ''


def test_info(capsys):
    logger = Logger()
    logger.info('info')
    captured = capsys.readouterr()
    assert 'info\n' in captured.err


def test_warn(capsys):
    logger = Logger()
    logger.warn('warn')
    captured = capsys.readouterr()
    assert 'warn\n' in captured.err


def test_level_filter(capsys):
    Logger.level('warn')
    Logger.debug('hidden debug')
    Logger.info('hidden info')
    Logger.warn('shown')
    captured = capsys.readouterr()
    assert 'hidden' not in captured.err
    assert 'shown\n' in captured.err


def test_level_invalid():
    saved = Logger.level()
    with pytest.raises(ValueError):
        Logger.level('verbose')
    assert Logger.level() == saved
