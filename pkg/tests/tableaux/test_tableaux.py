from collections import Counter
from math import factorial

from hypothesis import given, settings, strategies as st
import pytest

from pypaq.permutations import permutation
from pypaq.tableaux import (
    tableau, check_partition, parse_partition, partitions, transpose,
    shape_contains, has_cell, is_hook, hook_lengths, f_lambda, syt_enumerate,
    des_tableau, rs, rs_inverse, p_tableau, row_word, column_word,
    knuth_neighbors, knuth_class, knuth_class_by_filter, knuth_class_shape,
    superstandard, is_superstandard_hook, has_ascending, av_tableaux,
    delete_max, delete_value
)

P0 = tableau([[1, 2, 4], [3], [5]])


@st.composite
def partition_strategy(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                         min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


@st.composite
def permutation_strategy(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return permutation(draw(st.permutations(range(1, n + 1))))


def test_partitions():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions(0) == ((),)
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_helpers():
    assert parse_partition('3,1,1') == (3, 1, 1)
    assert parse_partition('(311)') == (3, 1, 1)
    assert parse_partition('12') == (12,)
    assert parse_partition('10') == (10,)
    assert parse_partition('11') == (1, 1)
    assert parse_partition('11,') == (11,)
    with pytest.raises(ValueError):
        parse_partition('1,3')
    with pytest.raises(ValueError):
        check_partition((2, 0))
    assert transpose((3, 1, 1)) == (3, 1, 1)
    assert transpose((4, 2)) == (2, 2, 1, 1)
    assert shape_contains((3, 2), (2, 2))
    assert not shape_contains((3, 1, 1), (2, 2))
    assert has_cell((3, 1), 2, 1) and not has_cell((3, 1), 2, 2)
    assert is_hook((4, 1, 1)) and not is_hook((2, 2))


@pytest.mark.parametrize('lam,f', [((1,), 1), ((2, 1), 2), ((3, 1, 1), 6),
                                   ((3, 2), 5), ((5, 4, 1), 288),
                                   ((4, 3, 2, 1), 768)])
def test_f_lambda_known_values(lam, f):
    assert f_lambda(lam) == f


def test_hook_lengths():
    assert hook_lengths((2, 1)) == [[3, 1], [1]]


@pytest.mark.parametrize('n', range(1, 9))
def test_sum_of_squares(n):
    assert sum(f_lambda(lam)**2 for lam in partitions(n)) == factorial(n)


@settings(deadline=None, max_examples=40)
@given(partition_strategy())
def test_syt_enumerate(lam):
    tabs = syt_enumerate(lam)
    assert len(tabs) == f_lambda(lam)
    assert len(set(tabs)) == len(tabs)
    assert all(T.shape == lam for T in tabs)


INVOLUTIONS = [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496]


@pytest.mark.parametrize('n', [*range(1, 9),
                               pytest.param(9, marks=pytest.mark.slow),
                               pytest.param(10, marks=pytest.mark.slow)])
def test_syt_counts_for_every_shape(n):
    total = 0
    for lam in partitions(n):
        tabs = syt_enumerate(lam)
        assert len(tabs) == f_lambda(lam)
        assert len(set(tabs)) == len(tabs)
        total += len(tabs)
    # one SYT per involution under RS
    assert total == INVOLUTIONS[n]


def test_tableau_validation():
    with pytest.raises(ValueError, match='Row 1 is not increasing at column 2'):
        tableau([[2, 1]])
    with pytest.raises(ValueError, match='Column 1 is not increasing at row 2'):
        tableau([[2, 3], [1]])
    with pytest.raises(ValueError):
        tableau([[1], [2, 3]])
    with pytest.raises(ValueError):
        tableau([[1, 2], [4]])


def test_tableau_parse_and_json():
    assert tableau.parse('1 2 4\n3\n5') == P0
    assert tableau.parse('124/3/5') == P0
    assert tableau.from_json(P0.to_json()) == P0
    with pytest.raises(ValueError):
        tableau.from_json({'shape': [3, 2], 'rows': [[1, 2, 4], [3], [5]]})


def test_rs_example():
    P, Q = rs(permutation.parse('25143'))
    assert P == tableau([[1, 3], [2, 4], [5]])
    assert Q == tableau([[1, 2], [3, 4], [5]])
    assert des_tableau(Q) == {2, 4}


@given(permutation_strategy())
def test_rs_properties(sigma):
    P, Q = rs(sigma)
    assert rs_inverse(P, Q) == sigma
    assert rs_inverse(rs(sigma)) == sigma
    assert des_tableau(Q) == {i for i in range(1, sigma.n)
                              if sigma[i - 1] > sigma[i]}
    assert p_tableau(sigma.reverse()) == P.transpose()
    assert tuple(rs(sigma.inverse())) == (Q, P)


@given(permutation_strategy(min_n=1))
def test_delete_max_commutes_with_insertion(sigma):
    assert p_tableau(delete_value(sigma, sigma.n)) == delete_max(p_tableau(sigma))


def test_reading_words():
    assert row_word(P0) == permutation.parse('53124')
    assert column_word(P0) == permutation.parse('53124')
    assert p_tableau(row_word(P0)) == P0
    assert p_tableau(column_word(P0)) == P0


def test_knuth_neighbors_stay_in_class():
    sigma = permutation.parse('25143')
    P = p_tableau(sigma)
    assert all(p_tableau(tau) == P for tau in knuth_neighbors(sigma))


@pytest.mark.parametrize('n', [*range(1, 6),
                               pytest.param(6, marks=pytest.mark.slow)])
def test_knuth_class_matches_filter(n):
    for lam in partitions(n):
        for P in syt_enumerate(lam):
            assert knuth_class(P) == knuth_class_by_filter(P)


def test_knuth_class_sizes():
    assert len(knuth_class(P0)) == 6
    assert len(knuth_class_shape((3, 1, 1))) == 36
    assert knuth_class_shape((4,)) == {permutation.parse('1234')}


def test_superstandard():
    assert superstandard((3, 1, 1), 'row') == tableau([[1, 2, 3], [4], [5]])
    assert superstandard((3, 1, 1), 'col') == tableau([[1, 4, 5], [2], [3]])
    assert is_superstandard_hook(superstandard((3, 1, 1), 'col'))
    assert not is_superstandard_hook(P0)
    assert not is_superstandard_hook(superstandard((2, 2)))
    with pytest.raises(ValueError):
        superstandard((2, 1), 'diagonal')


def test_ascending_sequences():
    assert has_ascending(P0, 1, 3)
    assert has_ascending(P0, 3, 2)
    assert not has_ascending(P0, 3, 3)
    assert not has_ascending(P0, 4, 1)
    assert av_tableaux(3, 1, 2) == {(3,): 1}


def test_delete():
    assert delete_max(P0) == tableau([[1, 2, 4], [3]])
    assert delete_value(permutation.parse('25143'), 5) == permutation.parse('2143')
    assert delete_value(permutation.parse('25143'), 1) == permutation.parse('1432')
    with pytest.raises(ValueError):
        delete_value(permutation.parse('213'), 4)
