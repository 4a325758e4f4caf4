import io
import json

import pytest

from TowerLab.main import emit_report, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_pq():
    code, out, _ = invoke('pq', '--k', '1,1')
    assert code == 0
    report = json.loads(out)
    assert report['result']['p'] == ['1', '2', '9']
    assert report['result']['q'] == ['1', '2', '8']
    assert report['command'] == {'verb': 'pq', 'argv': ['pq', '--k', '1,1']}
    assert report['window'] is None


def test_tower_none_found():
    code, out, _ = invoke('tower', '--partition', 'E:cantor', '--kappa', '3', '--lambda', '3', '--window', '64x8')
    assert code == 0
    assert json.loads(out)['result'] == 'none found'


def test_refute():
    code, out, _ = invoke('refute', '--mode', 'sel', '--f', 'const:0', '--k', '1,1')
    assert code == 0
    result = json.loads(out)['result']
    assert result['outcome']['outcome'] == 'Witness'
    assert result['windowUsed'] == [514, 2]


def test_color():
    code, out, _ = invoke('color', '--partition', 'E:cantor', '--x', '2', '--y', '1')
    assert code == 0
    assert json.loads(out)['result'] == 'B:0'


def test_gen():
    code, out, _ = invoke('gen', '--partition', 'vertical', '--window', '4x4')
    assert code == 0
    cells = json.loads(out)['result']['cells']
    assert len(cells) == 16
    assert cells[5] == [1, 1, 'blk:1']


def test_criteria_table2():
    code, out, _ = invoke('criteria', 'table2', '--a', 'vertical', '--partition', 'rows', '--ideal', 'sel',
                          '--window', '16x16')
    assert code == 0
    assert json.loads(out)['result']['verdict'] == 'ConsistentAtScale'


@pytest.mark.parametrize('argv', [
    ['bogus'],
    [],
    ['pq'],
    ['tower', '--partition', 'E:cantor', '--kappa', '3', '--lambda', '3', '--window', '0x0'],
    ['tower', '--partition', 'nope', '--kappa', '1', '--lambda', '1'],
    ['pq', '--k', '1,-1'],
    ['table1', '--row', 'maximal'],
])
def test_bad_input_exits_with_two(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == ''
    assert err


@pytest.mark.parametrize('argv', [
    ('gen', '--partition', 'E:cantor', '--window', '8x8'),
    ('color', '--partition', 'E:dyadic', '--x', '5', '--y', '2'),
    ('tower', '--partition', 'rows', '--kappa', '2', '--lambda', '3', '--window', '8x8'),
    ('ed-seq', '--partition', 'rows', '--count', '3', '--window', '16x16'),
    ('refute', '--mode', 'ed', '--f', 'const:0', '--k', '1,1'),
    ('criteria', 'table2', '--partition', 'rows', '--window', '16x16'),
    ('criteria', 'ed-ofin', '--partition', 'absorbed', '--window', '16x16'),
    ('pq', '--k', '2,2'),
    ('verify-claims',),
    ('table1', '--row', 'sel', '--col', 'ofin'),
])
def test_reports_are_deterministic(argv):
    first = invoke(*argv)
    assert first[0] in (0, 1)
    assert first == invoke(*argv)


def test_empty_sequence_is_not_none_found():
    code, out, _ = invoke('ed-seq', '--partition', 'rows', '--count', '0', '--window', '8x8')
    assert code == 0
    assert json.loads(out)['result'] == {'towers': []}


def test_criteria_ed_ofin():
    code, out, _ = invoke('criteria', 'ed-ofin', '--partition', 'absorbed', '--window', '16x16')
    assert code == 0
    result = json.loads(out)['result']
    assert result['verdict'] == 'ConsistentAtScale'
    assert result['details']['verified']

    code, out, _ = invoke('criteria', 'ed-ofin', '--partition', 'vertical', '--window', '16x16')
    assert code == 0
    result = json.loads(out)['result']
    assert result['verdict'] == 'Refuted'
    assert result['witness']['half'] == 'finGen'


def test_table1_text():
    code, out, _ = invoke('table1', '--row', 'sel', '--col', 'ed', '--format', 'text')
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ['I', '\\', 'J', 'P(ED)']
    assert lines[1].split() == ['Sel', '✓']


def test_emit_report_empty_payload():
    report = {'command': {'verb': 'pq', 'argv': []}, 'result': None, 'window': None, 'versions': {}}
    assert json.loads(emit_report(report)) == report
    assert emit_report(report) == emit_report(report)
