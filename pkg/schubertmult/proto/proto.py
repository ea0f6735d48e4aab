# -*- coding: utf-8 -*-


"""Prototype
CSV:
    n,d,i,j,route,value
    4,2,2-4,1-2,determinant,2

JSON:
    [
        {
            "n": 4,
            "d": 2,
            "i": [2, 4],
            "j": [1, 2],
            "route": "determinant",
            "value": "2"
        }
    ]
"""


class Code:
    SUCCESS = 0
    MISMATCH = 1
    INVALID = 2
    INAPPLICABLE = 3
    GUARD = 4


class Format:
    CSV = 'csv'
    JSON = 'json'
    XLSX = 'xlsx'

    ALL = (CSV, JSON, XLSX)


class Record:
    D = 'd'
    I = 'i'  # noqa: E741
    J = 'j'
    N = 'n'
    ROUTE = 'route'
    VALUE = 'value'

    HEAD = (N, D, I, J, ROUTE, VALUE)


class Report:
    D = 'd'
    ELAPSED = 'elapsed'
    IDENTITIES = 'identities_checked'
    MISMATCHES = 'mismatches'
    N = 'n'
    OK = 'ok'
    PAIRS = 'pairs_checked'


class Route:
    DETERMINANT = 'determinant'
    RECURRENCE = 'recurrence'
    SUM = 'sum'
    PRODUCT = 'product'
    WEYMAN = 'weyman'

    ALL = (DETERMINANT, RECURRENCE, SUM, PRODUCT, WEYMAN)
