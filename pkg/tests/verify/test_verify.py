import json

import pytest

from pypaq.verify import CLAIMS, run_claim, knuth_unions, f_sum
from pypaq.permutations import iterate_permutations
from pypaq.qsym import qsymF
from pypaq.tableaux import syt_enumerate, knuth_class
from pypaq import closure
from pypaq.closure import verificationReport


QUICK = [
    ('thm-rs', {'n': 5}),
    ('cor-knuth', {'n': 5}),
    ('prop-rc', {'k': 3, 'n': 5}),
    ('lemma-iode', {'n': 5, 'k': 4}),
    ('lemma-iode', {'n': 0}),
    ('thm-single-pattern', {'k': 3, 'n': 5}),
    ('lemma-monotone-pair', {'k': 3, 'l': 3, 'n': 5}),
    ('exception-213-231', {'n': 6}),
    ('thm-ss', {'n': 4}),
    ('thm-hook-expansion', {'n': 6, 'r': 2, 's': 2}),
    ('thm-ps', {'k': 2, 'n': 6}),
    ('lemma-phi-psi', {'k': 2, 'n': 5}),
    ('remark-pi-a', {'k': 2, 'n': 5}),
    ('prop-union', {'n': 3}),
    ('lemma-uid', {'n': 6}),
    ('thm-pkc-shape', {'n': 6, 'a': 2, 'b': 1}),
    ('lemma-ssh', {'n': 5}),
    ('lemma-swap-union', {'n': 4}),
    ('thm-swap-closed', {'n': 4}),
    ('lemma-4points', {'n': 5}),
    ('lemma-swpright', {'n': 4}),
    ('lemma-pkcinduct', {'n': 4}),
    ('lemma-rs-ds', {'n': 5}),
    ('lemma-pairs-hooks', {'n': 4}),
    ('lemma-1n', {'n': 4}),
    ('lemma-doubles', {'n': 5}),
    ('thm-single', {'n': 4}),
    ('thm-pairs', {'n': 4}),
    ('three-class-counterexample', {}),
]


@pytest.mark.parametrize('claim_id,params', QUICK)
def test_claim_holds(claim_id, params):
    report = run_claim(claim_id, **params)
    assert report.holds, report.witnesses
    assert report.witnesses == []
    json.dumps(report.to_json())


def test_every_claim_has_a_quick_check():
    quick = set(claim_id for claim_id, _ in QUICK)
    assert set(CLAIMS) - quick == {'thm-two-patterns', 'sec6-stability'}


def test_lemma_iode_vacuous():
    report = run_claim('lemma-iode', n=0)
    assert report.params['n'] == 0
    assert report.enumerated > 0


def test_counterexample_details():
    report = run_claim('three-class-counterexample')
    source, target = report.details['swap']
    assert str(source) == '3124'
    assert str(target) == '3142'


def test_unknown_claim():
    with pytest.raises(KeyError, match='known claims'):
        run_claim('thm-nonexistent')


def test_unknown_parameter():
    with pytest.raises(TypeError):
        run_claim('thm-ps', r=3)


def test_two_patterns_requires_length_four():
    with pytest.raises(ValueError):
        run_claim('thm-two-patterns', k=3)


def test_parameter_pairs_go_together():
    with pytest.raises(ValueError, match='r and s'):
        run_claim('thm-hook-expansion', r=2, n=4)
    with pytest.raises(ValueError, match='a and b'):
        run_claim('thm-pkc-shape', b=1, n=4)
    # one (r, s) case, one check per size 0..3
    assert run_claim('thm-hook-expansion', r=2, s=2, n=3).enumerated == 4


def test_stability_fields_are_computed(monkeypatch):
    report = run_claim('sec6-stability', n=7)
    assert report.holds, report.witnesses
    assert report.details['equal_from'] == 7
    assert report.details['Q6_symmetric'] is False
    assert report.details['N6_witness']

    def always_equal(Pi, other, N, cfg=None):
        return verificationReport('stability', {'N': N}, True)
    monkeypatch.setattr(closure, 'stability_check', always_equal)
    report = run_claim('sec6-stability', n=7)
    assert report.details['equal_from'] == 5
    assert not report.holds
    assert ('equal_from', 5) in report.witnesses


def test_knuth_unions():
    unions = list(knuth_unions(3))
    # four SYT of size 3, so every nonempty union
    assert len(unions) == 15
    for chosen, Pi in unions:
        assert len(Pi) == sum(len(knuth_class(S)) for S in chosen)


def test_f_sum():
    perms = list(iterate_permutations(2))
    assert f_sum(perms, 2) == qsymF(2, {(2,): 1, (1, 1): 1})
    assert len(syt_enumerate((2, 1))) == 2


@pytest.mark.slow
def test_two_patterns_of_length_four():
    report = run_claim('thm-two-patterns', k=4, n=6)
    assert report.holds, report.witnesses
    assert [str(p) for p in report.details['survivors'][0]] == ['1234', '4321']


@pytest.mark.slow
def test_stability_facts():
    report = run_claim('sec6-stability', n=8)
    assert report.holds, report.witnesses
    assert report.details['equal_from'] == 7
    assert report.details['K311_closed_bound'] == 6
    assert report.details['N6_witness']


@pytest.mark.slow
@pytest.mark.parametrize('claim_id', sorted(CLAIMS))
def test_claim_defaults(claim_id):
    assert run_claim(claim_id).holds
