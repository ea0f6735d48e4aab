# -*- coding: utf-8 -*-

import json
import os
import tempfile
import unittest.mock

from schubertmult.main import CONFIG_FILE, load, main
from schubertmult.proto.proto import Code


def _run(*argv):
    with unittest.mock.patch('sys.argv', ['schubertmult'] + list(argv)):
        return main()


def _small_config(path):
    config = load(CONFIG_FILE)
    for name in ('difference-equation', 'shift-identity'):
        config['verify']['suites'][name] = {'cases': 4, 'dimension': 2, 'shift': 3, 'low': -2, 'high': 3}
    config['verify']['suites']['determinant'] = {'cases': 40, 'order': 5, 'entry': 99}
    with open(path, 'w') as f:
        json.dump(config, f)
    return path


def test_load_json():
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
        json.dump({'test': 'data'}, f)
        f.flush()
        temp_file = f.name

    try:
        data = load(temp_file)
        assert data is not None
        assert data['test'] == 'data'
    finally:
        os.remove(temp_file)


def test_load_invalid_extension():
    with tempfile.NamedTemporaryFile(mode='w', suffix='.txt', delete=False) as f:
        f.write('test')
        f.flush()
        temp_file = f.name

    try:
        data = load(temp_file)
        assert data is None
    finally:
        os.remove(temp_file)


def test_main_invalid_config():
    assert _run('compute', '--n', '4', '--i', '2,4', '--j', '1,2', '--config-file', 'nonexistent.json') \
        == Code.INVALID


def test_compute(capsys):
    assert _run('compute', '--n', '4', '--i', '2,4', '--j', '1,2') == Code.SUCCESS
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[0] == 'n,d,i,j,route,value'
    assert lines[1:] == [
        '4,2,2-4,1-2,determinant,2',
        '4,2,2-4,1-2,recurrence,2',
        '4,2,2-4,1-2,sum,2',
        '4,2,2-4,1-2,product,2',
        '4,2,2-4,1-2,weyman,2',
    ]


def test_compute_base(capsys):
    assert _run('compute', '--n', '5', '--i', '1,3', '--j', '1,3', '--format', 'json') == Code.SUCCESS
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert len(data) != 0
    assert all(item['value'] == '1' for item in data)
    assert data[0] == {'n': 5, 'd': 2, 'i': [1, 3], 'j': [1, 3], 'route': 'determinant', 'value': '1'}


def test_compute_not_contained(capsys):
    assert _run('compute', '--n', '4', '--i', '2,3', '--j', '1,4') == Code.INVALID
    captured = capsys.readouterr()
    assert 'cell not contained in variety' in captured.err
    assert captured.out == ''


def test_compute_not_contained_inapplicable_route():
    assert _run('compute', '--n', '4', '--i', '2,3', '--j', '1,4', '--route', 'weyman') == Code.INVALID


def test_compute_invalid_index(capsys):
    assert _run('compute', '--n', '4', '--i', '3,3', '--j', '1,2') == Code.INVALID
    captured = capsys.readouterr()
    assert 'entry 2' in captured.err
    assert _run('compute', '--n', '4', '--i', '2,4', '--j', '1') == Code.INVALID
    assert _run('compute', '--n', '4', '--i', '2,5', '--j', '1,2') == Code.INVALID


def test_compute_inapplicable(capsys):
    assert _run('compute', '--n', '4', '--i', '2,3', '--j', '1,3', '--route', 'product') == Code.INAPPLICABLE
    assert _run('compute', '--n', '4', '--i', '3,4', '--j', '1,3', '--route', 'weyman',
                '--route', 'determinant') == Code.INAPPLICABLE
    captured = capsys.readouterr()
    assert '4,2,3-4,1-3,determinant,1' in captured.out


def test_table(capsys):
    assert _run('table', '--d', '2', '--n', '4') == Code.SUCCESS
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[0] == 'n,d,i,j,route,value'
    assert len(lines) == 21
    assert '4,2,2-4,1-2,determinant,2' in lines


def test_table_routes_agree(capsys):
    assert _run('table', '--d', '2', '--n', '4', '--route', 'determinant', '--route', 'recurrence',
                '--route', 'sum', '--format', 'json') == Code.SUCCESS
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 60
    values = {}
    for item in data:
        values.setdefault((tuple(item['i']), tuple(item['j'])), set()).add(item['value'])
    assert all(len(found) == 1 for found in values.values())


def test_table_deterministic(tmp_path):
    outputs = []
    for index, jobs in enumerate(['1', '1', '4']):
        for fmt in ('csv', 'json'):
            name = str(tmp_path / ('table-%d.%s' % (index, fmt)))
            assert _run('table', '--d', '3', '--n', '6', '--route', 'determinant', '--route', 'recurrence',
                        '--format', fmt, '--out', name, '--jobs', jobs) == Code.SUCCESS
            with open(name, 'rb') as f:
                outputs.append((fmt, f.read()))
    csv_outputs = [data for fmt, data in outputs if fmt == 'csv']
    json_outputs = [data for fmt, data in outputs if fmt == 'json']
    assert len(set(csv_outputs)) == 1
    assert len(set(json_outputs)) == 1
    assert b'\r' not in csv_outputs[0]


def test_table_xlsx(tmp_path):
    name = str(tmp_path / 'table.xlsx')
    assert _run('table', '--d', '2', '--n', '4', '--format', 'xlsx', '--out', name) == Code.SUCCESS
    assert os.path.isfile(name)
    assert _run('table', '--d', '2', '--n', '4', '--format', 'xlsx') == Code.INVALID


def test_table_output_invalid(capsys):
    assert _run('table', '--d', '2', '--n', '4', '--out', '/nonexistent/dir/t.csv') == Code.INVALID
    assert 'output invalid' in capsys.readouterr().err
    assert _run('table', '--d', '2', '--n', '4', '--format', 'xlsx', '--out', '/nonexistent/dir/t.xlsx') \
        == Code.INVALID


def test_compute_output_invalid(tmp_path):
    name = str(tmp_path / 'missing' / 'pair.json')
    assert _run('compute', '--n', '4', '--i', '2,4', '--j', '1,2', '--format', 'json', '--out', name) \
        == Code.INVALID


def test_table_config_format(tmp_path, capsys):
    config = load(CONFIG_FILE)
    config['table']['format'] = 'json'
    path = str(tmp_path / 'config.json')
    with open(path, 'w') as f:
        json.dump(config, f)
    assert _run('table', '--d', '1', '--n', '3', '--config-file', path) == Code.SUCCESS
    assert len(json.loads(capsys.readouterr().out)) == 6


def test_table_guard():
    assert _run('table', '--d', '1', '--n', '13') == Code.GUARD


def test_table_guard_force(capsys):
    assert _run('table', '--d', '1', '--n', '13', '--force') == Code.SUCCESS
    assert len(capsys.readouterr().out.splitlines()) == 1 + 13 * 14 // 2


def test_table_invalid_shape():
    assert _run('table', '--d', '5', '--n', '4') == Code.INVALID


def test_verify(tmp_path, capsys):
    config = _small_config(str(tmp_path / 'config.json'))
    assert _run('verify', '--d', '2', '--n', '6', '--config-file', config) == Code.SUCCESS
    report = json.loads(capsys.readouterr().out)
    assert report['pairs_checked'] == 105
    assert report['mismatches'] == []
    assert report['ok'] is True
    assert all(item['passed'] for item in report['identities_checked'])


def test_verify_out(tmp_path):
    config = _small_config(str(tmp_path / 'config.json'))
    name = str(tmp_path / 'report.json')
    assert _run('verify', '--d', '1', '--n', '10', '--seed', '5', '--jobs', '2',
                '--config-file', config, '--out', name) == Code.SUCCESS
    with open(name, 'r') as f:
        report = json.load(f)
    assert report['d'] == 1
    assert report['n'] == 10
    assert report['pairs_checked'] == 55


def test_verify_output_invalid(tmp_path):
    config = _small_config(str(tmp_path / 'config.json'))
    assert _run('verify', '--d', '1', '--n', '4', '--config-file', config,
                '--out', '/nonexistent/dir/report.json') == Code.INVALID


def test_verify_mismatch(tmp_path):
    config = _small_config(str(tmp_path / 'config.json'))
    with unittest.mock.patch('schubertmult.verifier.verifier.mult_sum', lambda i, j: 0):
        assert _run('verify', '--d', '2', '--n', '4', '--config-file', config) == Code.MISMATCH


def test_verify_guard():
    assert _run('verify', '--d', '2', '--n', '13') == Code.GUARD


def test_bench(capsys):
    assert _run('bench', '--d', '3', '--n', '10', '--route', 'determinant', '--route', 'recurrence',
                '--repetitions', '1') == Code.SUCCESS
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith('route=determinant pairs=')
    assert lines[1].startswith('route=recurrence pairs=')
