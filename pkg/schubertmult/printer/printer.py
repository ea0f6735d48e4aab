# -*- coding: utf-8 -*-

import csv
import io
import json
import openpyxl
import sys

from openpyxl.styles import Alignment, Font
from ..proto.proto import Format, Record

head = {
    'A': Record.N,
    'B': Record.D,
    'C': Record.I,
    'D': Record.J,
    'E': Record.ROUTE,
    'F': Record.VALUE
}


class PrinterException(Exception):
    def __init__(self, info):
        super().__init__(self)
        self._info = info

    def __str__(self):
        return self._info


def _entries(value):
    return '-'.join(str(x) for x in value)


class Printer(object):
    _format = list(Format.ALL)

    def __init__(self, config=None):
        self._config = config if config is not None else {}

    @staticmethod
    def format():
        return Printer._format

    def _emit(self, text, name):
        if name is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        try:
            with open(name, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        except OSError:
            raise PrinterException('output invalid: %s' % name)

    def _csv(self, data, name):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow([head[key] for key in sorted(head.keys())])
        for item in data:
            buf = []
            for key in sorted(head.keys()):
                value = item[head[key]]
                buf.append(_entries(value) if head[key] in (Record.I, Record.J) else value)
            writer.writerow(buf)
        self._emit(out.getvalue(), name)

    def _json(self, data, name):
        self._emit(json.dumps(data, ensure_ascii=False, indent=2) + '\n', name)

    def _xlsx(self, data, name):
        def _styling_head(sheet):
            for item in head.keys():
                sheet[item+'1'].alignment = Alignment(horizontal='center', shrink_to_fit=True, vertical='center')
                sheet[item+'1'].font = Font(bold=True, name='Calibri')
            sheet.freeze_panes = sheet['A2']

        if name is None:
            raise PrinterException('xlsx output requires a file name')

        wb = openpyxl.Workbook()
        ws = wb.active
        ws.title = 'multiplicities'
        ws.append([head[key].upper() for key in sorted(head.keys())])
        for item in data:
            buf = []
            for key in sorted(head.keys()):
                value = item[head[key]]
                buf.append(_entries(value) if head[key] in (Record.I, Record.J) else value)
            ws.append(buf)
        _styling_head(ws)
        try:
            wb.save(filename=name)
        except OSError:
            raise PrinterException('output invalid: %s' % name)

    def report(self, data, name=None):
        self._json(data, name)

    def run(self, data, name=None, fmt=None):
        if fmt is None:
            fmt = self._config.get('table', {}).get('format', Format.CSV)
        func = Printer.__dict__.get('_' + fmt, None) if fmt in Printer._format else None
        if func is None:
            raise PrinterException('format invalid: %s' % fmt)
        func(self, data, name)
