# -*- coding: utf-8 -*-

import unittest.mock

from schubertmult.cmd.banner import BANNER
from schubertmult.main import main


def test_banner():
    assert len(BANNER.strip()) != 0


def test_banner_on_stderr(capsys):
    with unittest.mock.patch('sys.argv', ['schubertmult', 'compute', '--n', '3', '--i', '2', '--j', '1']):
        main()
    captured = capsys.readouterr()
    assert BANNER in captured.err
    assert BANNER not in captured.out
