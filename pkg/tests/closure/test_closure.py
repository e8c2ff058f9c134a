from itertools import combinations
from math import factorial

import pytest

from pypaq.common import ResourceLimitError, config
from pypaq.permutations import permutation, patternSet, iota, delta
from pypaq.tableaux import (tableau, superstandard, knuth_class, partitions,
                            syt_enumerate)
from pypaq.avoidance import pi_zero, shape_patterns, P0
from pypaq.closure import (
    d_j_inverse, pi_j, swap_neighbors, swap_class, is_swap_closed,
    is_union_of_d_j, is_i_descent_consistent, is_pattern_knuth_closed,
    union_of_classes_witness, is_interval_form, doubles_sets,
    descent_complete_pairs, descent_complete_pairs_bruteforce,
    classify_knuth_union, stability_check, rc_orbit, survey_symmetric_sets,
    verificationReport
)


def subsets(n):
    for size in range(n):
        yield from combinations(range(1, n), size)


def test_d_j_inverse():
    assert d_j_inverse(3, {1}) == {permutation.parse('213'),
                                   permutation.parse('231')}
    for n in range(1, 6):
        assert sum(len(d_j_inverse(n, J)) for J in subsets(n)) == factorial(n)
    with pytest.raises(ValueError):
        d_j_inverse(3, {3})


@pytest.mark.parametrize('n', range(1, 6))
def test_pi_j_generates_d_j_inverse(n):
    for J in subsets(n):
        assert swap_class(pi_j(J, n)) == d_j_inverse(n, J)


def test_pi_j():
    assert pi_j({2}, 4) == permutation.parse('3412')
    assert pi_j((), 3) == iota(3)
    assert pi_j({1, 2}, 3) == delta(3)


def test_swaps():
    assert swap_neighbors(permutation.parse('132')) == {permutation.parse('312')}
    result = is_swap_closed(patternSet(['132']))
    assert not result.holds
    assert result.witnesses == [(permutation.parse('132'),
                                 permutation.parse('312'))]
    Pi = patternSet(d_j_inverse(4, {2}))
    assert is_swap_closed(Pi).holds
    assert is_union_of_d_j(Pi)
    assert not is_union_of_d_j(patternSet(['2413']))


def test_i_descent_consistency():
    assert is_i_descent_consistent(patternSet(['213', '231']))
    assert not is_i_descent_consistent(patternSet(['213', '312']))
    with pytest.raises(ValueError):
        is_i_descent_consistent(patternSet(['21', '231']))
    with pytest.raises(ValueError):
        is_i_descent_consistent(patternSet())


def test_pattern_knuth_closure():
    R = superstandard((3, 1, 1), 'row')
    result = is_pattern_knuth_closed(patternSet(knuth_class(R)))
    assert result.holds
    assert result.bound_used == 6
    result = is_pattern_knuth_closed(patternSet(knuth_class(P0)))
    assert not result.holds
    sigma, tau = result.witnesses[0]
    assert sigma.n == tau.n
    assert union_of_classes_witness(sigma.n, patternSet(knuth_class(P0))) == \
        (sigma, tau)


def test_pattern_knuth_closure_bound():
    Pi = patternSet(knuth_class(superstandard((3, 1, 1))))
    with pytest.raises(ResourceLimitError):
        is_pattern_knuth_closed(Pi, cfg=config(enumeration_bound=5))


def test_monotone_sets_are_closed():
    for k in range(1, 5):
        assert is_pattern_knuth_closed(patternSet([iota(k)])).holds
        assert is_pattern_knuth_closed(patternSet([delta(k)])).holds
    assert is_pattern_knuth_closed(patternSet()).holds


def test_interval_form():
    assert is_interval_form(set(), 4)
    assert is_interval_form({1, 2}, 4)
    assert is_interval_form({2, 3}, 4)
    assert is_interval_form({1, 2, 3}, 4)
    assert not is_interval_form({2}, 4)
    assert not is_interval_form({1, 3}, 4)


def test_doubles_sets():
    assert doubles_sets(4) == {frozenset({2}), frozenset({1, 3})}


def test_descent_complete_pairs_small():
    pairs = descent_complete_pairs(4)
    assert len(pairs) == 2
    assert (tableau([[1, 2], [3, 4]]), tableau([[1, 2, 4], [3]])) in pairs
    with pytest.raises(ValueError):
        descent_complete_pairs(3)


@pytest.mark.parametrize('n', [4, 5, 6])
def test_descent_complete_pairs_exhaustive(n):
    assert descent_complete_pairs(n) == descent_complete_pairs_bruteforce(n)


def test_classify_single_class():
    report = classify_knuth_union([P0])
    assert isinstance(report, verificationReport)
    assert report.holds
    assert not any(report.details.values())
    report = classify_knuth_union([superstandard((2, 1, 1), 'col')])
    assert report.holds
    assert all(report.details.values())


@pytest.mark.parametrize('n', range(1, 5))
def test_classify_all_pairs(n):
    tabs = [S for lam in partitions(n) for S in syt_enumerate(lam)]
    for S, T in combinations(tabs, 2):
        assert classify_knuth_union([S, T]).holds


def test_classify_validation():
    with pytest.raises(ValueError):
        classify_knuth_union([P0, P0])
    with pytest.raises(ValueError):
        classify_knuth_union([P0, tableau([[1, 2], [3]])])
    with pytest.raises(ValueError):
        classify_knuth_union([])


def test_stability():
    K311 = shape_patterns((3, 1, 1))
    Pi0 = pi_zero()
    assert stability_check(Pi0, K311, 7).holds
    at_six = stability_check(Pi0, K311, 6)
    assert not at_six.holds
    assert at_six.witnesses[0].n == 6
    with pytest.raises(ValueError):
        stability_check(patternSet(), K311, 7)
    with pytest.raises(ValueError):
        stability_check(Pi0, K311, 4)


def test_rc_orbit():
    Pi = patternSet(['213', '231'])
    assert rc_orbit(Pi) == {Pi, patternSet(['132', '312'])}
    assert len(rc_orbit(patternSet(['132']))) == 4


def test_survey_monotone():
    found = list(survey_symmetric_sets(2, 1, 5))
    assert found == [(patternSet(['12']), True), (patternSet(['21']), True)]


def test_survey_two_patterns_of_length_three():
    survivors = [Pi for Pi, sym in survey_symmetric_sets(3, 2, 6) if sym]
    assert patternSet(['213', '231']) in survivors
    assert patternSet(['132', '312']) in survivors
    assert patternSet(['123', '321']) in survivors


def test_survey_canonical_matches_full():
    canonical = sorted((sorted(Pi.patterns), s)
                       for Pi, s in survey_symmetric_sets(3, 1, 5))
    full = sorted((sorted(Pi.patterns), s)
                  for Pi, s in survey_symmetric_sets(3, 1, 5, canonical=False))
    assert canonical == full


def test_survey_budget():
    with pytest.raises(ResourceLimitError):
        next(survey_symmetric_sets(3, 2, 5, cfg=config(survey_budget=10)))
