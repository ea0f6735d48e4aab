# -*- coding: utf-8 -*-

import itertools
import math

import pytest

from schubertmult.poset.poset import GrassmannIndex, PosetException, base, enumerate_indices, interval, leq, \
    lower_neighbors, pairs, parse, validate


def test_exception():
    exception = PosetException('exception')
    assert str(exception) == 'exception'


def test_validate():
    i = validate((1, 3, 4), 5)
    assert i.entries == (1, 3, 4)
    assert i.d == 3
    assert i.n == 5
    assert i.weight == 8
    assert str(i) == '1-3-4'


@pytest.mark.parametrize('entries, n, position', [
    ((1, 3, 3), 5, 'entry 3'),
    ((0, 2), 4, 'entry 1'),
    ((1, 6), 5, 'entry 2'),
    ((2, 1), 4, 'entry 2'),
])
def test_validate_invalid(entries, n, position):
    with pytest.raises(PosetException) as e:
        validate(entries, n)
    assert position in str(e.value)


def test_validate_empty():
    with pytest.raises(PosetException):
        validate((), 3)


def test_parse():
    assert parse('2,4', 4) == validate((2, 4), 4)
    assert parse('3', 5).entries == (3,)
    with pytest.raises(PosetException):
        parse('2,x', 4)
    with pytest.raises(PosetException):
        parse('4,2', 4)


def test_base():
    assert base(3, 7).entries == (1, 2, 3)


def test_leq():
    assert leq(validate((1, 2), 4), validate((2, 4), 4))
    assert not leq(validate((1, 4), 4), validate((2, 3), 4))
    i = validate((2, 3), 4)
    assert leq(i, i)


def test_leq_shape_mismatch():
    with pytest.raises(PosetException):
        leq(validate((1, 2), 4), validate((1, 2), 5))
    with pytest.raises(PosetException):
        leq(validate((1,), 4), validate((1, 2), 4))


def test_enumerate_indices():
    assert [i.entries for i in enumerate_indices(2, 3)] == [(1, 2), (1, 3), (2, 3)]
    assert [i.entries for i in enumerate_indices(1, 3)] == [(1,), (2,), (3,)]
    assert len(list(enumerate_indices(2, 6))) == 15
    for n in range(1, 9):
        for d in range(1, n + 1):
            assert len(list(enumerate_indices(d, n))) == math.comb(n, d)


def test_enumerate_indices_invalid():
    with pytest.raises(PosetException):
        list(enumerate_indices(4, 3))
    with pytest.raises(PosetException):
        list(enumerate_indices(0, 3))


def test_lower_neighbors():
    i, j = validate((2, 4), 4), validate((1, 2), 4)
    assert [(q, k.entries) for q, k in lower_neighbors(i, j)] == [(1, (1, 4)), (2, (2, 3))]

    i, j = validate((1, 3), 4), validate((1, 2), 4)
    assert [(q, k.entries) for q, k in lower_neighbors(i, j)] == [(2, (1, 2))]


def test_lower_neighbors_invalid():
    i = validate((1, 2, 3), 5)
    with pytest.raises(PosetException):
        lower_neighbors(i, i)
    with pytest.raises(PosetException):
        lower_neighbors(validate((1, 3), 4), validate((2, 3), 4))


def _brute_force(i, j, n):
    buf = []
    for k in enumerate_indices(i.d, n):
        if leq(j, k) and leq(k, i) and k != i and k.weight == i.weight - 1:
            buf.append(k.entries)
    return sorted(buf)


def test_lower_neighbors_brute_force():
    for n in range(1, 8):
        for d in range(1, n + 1):
            for i, j in pairs(d, n):
                if i == j:
                    continue
                found = [k for _, k in lower_neighbors(i, j)]
                assert sorted(k.entries for k in found) == _brute_force(i, j, n)


def test_lower_neighbors_properties():
    for n in range(1, 9):
        for d in range(1, n + 1):
            for i, j in pairs(d, n):
                if i == j:
                    continue
                found = lower_neighbors(i, j)
                assert len(found) != 0
                for q, k in found:
                    assert leq(j, k) and leq(k, i) and k != i
                    assert k.weight == i.weight - 1
                    assert k.entries[q - 1] == i.entries[q - 1] - 1


def test_interval():
    j, i = validate((1, 2), 4), validate((2, 4), 4)
    assert [k.entries for k in interval(j, i)] == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
    assert [k.entries for k in interval(i, i)] == [(2, 4)]
    with pytest.raises(PosetException):
        interval(i, j)


def test_interval_brute_force():
    for n in range(1, 7):
        for d in range(1, n + 1):
            for i, j in pairs(d, n):
                expected = [k for k in enumerate_indices(d, n) if leq(j, k) and leq(k, i)]
                found = interval(j, i)
                assert sorted(k.entries for k in found) == sorted(k.entries for k in expected)
                weights = [k.weight for k in found]
                assert weights == sorted(weights)


def test_pairs():
    assert len(list(pairs(2, 4))) == 20
    assert len(list(pairs(2, 6))) == 105
    assert len(list(pairs(1, 3))) == 6
    buf = list(pairs(2, 3))
    assert [(i.entries, j.entries) for i, j in buf] == [
        ((1, 2), (1, 2)),
        ((1, 3), (1, 2)), ((1, 3), (1, 3)),
        ((2, 3), (1, 2)), ((2, 3), (1, 3)), ((2, 3), (2, 3)),
    ]


def test_index_hashable():
    buf = {validate((1, 2), 4): 1}
    assert buf[GrassmannIndex((1, 2), 4)] == 1
    assert list(itertools.chain(validate((2, 5), 6))) == [2, 5]
