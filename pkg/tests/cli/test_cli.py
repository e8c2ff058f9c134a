import json

import pytest

from pypaq.cli import main, parse_patterns, parse_pattern_token
from pypaq.permutations import patternSet, permutation, iota
from pypaq.avoidance import P0, pi_partial
from pypaq.qsym import qsymF


@pytest.fixture(autouse=True)
def no_bound_override(monkeypatch):
    monkeypatch.delenv('QSYM_BOUND', raising=False)


def test_qn_schur(capsys):
    assert main(['qn', '--patterns', '', '--n', '3', '--basis', 's']) == 0
    assert capsys.readouterr().out.strip() == '(3):1 (2,1):2 (1,1,1):1'


def test_qn_fundamental(capsys):
    assert main(['qn', '--patterns', '12', '--n', '3']) == 0
    assert capsys.readouterr().out.strip() == '(1,1,1):1'


def test_qn_not_symmetric(capsys):
    assert main(['qn', '--patterns', '132', '--n', '3', '--basis', 's']) == 2
    assert 'NOT SYMMETRIC' in capsys.readouterr().out


def test_qn_json(capsys):
    assert main(['--output', 'json', 'qn', '--patterns', '123 321', '--n',
                 '4', '--basis', 's']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['patterns'] == ['123', '321']
    assert data['result']['basis'] == 's'
    assert data['result']['terms'] == [{'index': [2, 2], 'coeff': 2}]


def test_bound_flag(capsys):
    assert main(['--bound', '3', 'qn', '--n', '4']) == 3
    assert 'resource limit' in capsys.readouterr().err


def test_bound_environment(monkeypatch, capsys):
    monkeypatch.setenv('QSYM_BOUND', '3')
    assert main(['qn', '--n', '4']) == 3
    assert main(['--bound', '4', 'qn', '--n', '4']) == 0


def test_bad_token(capsys):
    assert main(['qn', '--patterns', 'iota:x', '--n', '3']) == 1
    assert "iota:x" in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(['qn', '--patterns', '12'])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(['qn', '--n', '-1'])
    assert info.value.code == 1


def test_knuth_shape(capsys):
    assert main(['knuth', '--shape', '3,1,1', '--count']) == 0
    assert capsys.readouterr().out.strip() == '36'


def test_knuth_single_part_shape(capsys):
    assert main(['knuth', '--shape', '10', '--count']) == 0
    assert capsys.readouterr().out.strip() == '1'
    assert main(['--bound', '12', 'knuth', '--shape', '12', '--count']) == 0
    assert capsys.readouterr().out.strip() == '1'


def test_knuth_tableau_file(tmp_path, capsys):
    path = tmp_path / 'p0.json'
    path.write_text(json.dumps(P0.to_json()))
    assert main(['knuth', '--tableau', str(path), '--count']) == 0
    assert capsys.readouterr().out.strip() == '6'
    text = tmp_path / 'p0.txt'
    text.write_text('1 2 4\n3\n5\n')
    assert main(['knuth', '--tableau', str(text), '--list']) == 0
    assert len(capsys.readouterr().out.split()) == 6


def test_knuth_missing_file(tmp_path, capsys):
    assert main(['knuth', '--tableau', str(tmp_path / 'none'), '--count']) == 1


def test_survey(capsys):
    assert main(['survey', '--k', '2', '--p', '1', '--n-max', '4']) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ['{12}', '{21}',
                   '2 of 2 candidate sets have Q_n symmetric for n <= 4.']


def test_survey_budget(capsys):
    assert main(['survey', '--k', '3', '--p', '2', '--n-max', '4',
                 '--budget', '5']) == 3


def test_rs(capsys):
    assert main(['rs', '25143']) == 0
    assert capsys.readouterr().out == 'P:\n1 3\n2 4\n5\nQ:\n1 2\n3 4\n5\n'


def test_expand(tmp_path, capsys):
    path = tmp_path / 'q.json'
    q = qsymF(3, {(3,): 1, (2, 1): 2, (1, 2): 2, (1, 1, 1): 1})
    path.write_text(json.dumps(q.to_json()))
    assert main(['expand', str(path)]) == 0
    assert capsys.readouterr().out.strip() == '(3):1 (2,1):2 (1,1,1):1'
    assert main(['expand', str(path), '--basis', 'M']) == 0
    assert capsys.readouterr().out.strip().startswith('(3):1 ')


def test_expand_not_symmetric(tmp_path, capsys):
    path = tmp_path / 'q.json'
    path.write_text(json.dumps(qsymF(2, {(2,): 1}).to_json()))
    assert main(['expand', str(path)]) == 0
    path.write_text(json.dumps(qsymF(3, {(1, 2): 1}).to_json()))
    assert main(['expand', str(path)]) == 2


def test_verify(capsys):
    assert main(['verify', 'lemma-iode', '--n', '3', '--k', '2']) == 0
    assert 'HOLDS' in capsys.readouterr().out
    assert main(['verify', '--list']) == 0
    assert 'thm-ps' in capsys.readouterr().out
    assert main(['verify', 'thm-nonexistent']) == 1
    assert main(['verify', 'thm-ps', '--r', '2']) == 1
    assert main(['verify', 'thm-hook-expansion', '--r', '2', '--n', '3']) == 1
    assert 'together' in capsys.readouterr().err


def test_pattern_tokens():
    assert parse_pattern_token('iota:4') == patternSet([iota(4)])
    assert parse_pattern_token('pshuffle:2,1') == pi_partial(2, 1)
    assert len(parse_pattern_token('K(3,1,1)')) == 36
    assert len(parse_pattern_token('pi0')) == 30
    assert parse_pattern_token('10,2,5,1,4,3,6,7,8,9') == \
        patternSet([permutation.parse('10,2,5,1,4,3,6,7,8,9')])
    assert parse_patterns(['132;213', '321']) == \
        patternSet(['132', '213', '321'])
    with pytest.raises(ValueError):
        parse_pattern_token('delta:0')
