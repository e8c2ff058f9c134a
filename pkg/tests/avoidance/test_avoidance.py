import numba
import pytest

from pypaq.common import set_threads
from pypaq.permutations import patternSet, iota, delta
from pypaq.tableaux import knuth_class
from pypaq.qsym import (qsymF, schurVector, notSymmetric, schur_expand,
                        is_symmetric)
from pypaq.avoidance import (
    qn, f_schur_sum, iode_rhs, pi_general, pi_partial, fattened_hooks,
    lambda_bar, ps_rhs, shapes_avoiding, pkc_shape_rhs, pkc_shape_patterns,
    hook_expansion_rhs, superstandard_hook_patterns, pi_zero, P0,
    knuth_patterns, shape_patterns
)


def test_qn_empty_set():
    v = schur_expand(qn(patternSet(), 3))
    assert v == schurVector(3, {(3,): 1, (2, 1): 2, (1, 1, 1): 1})
    assert qn(patternSet(), 0) == qsymF(0, {(): 1})


def test_qn_132():
    q = qn(patternSet(['132']), 3)
    assert q.mass() == 5
    assert q == qsymF(3, {(3,): 1, (1, 2): 2, (2, 1): 1, (1, 1, 1): 1})
    assert isinstance(schur_expand(q), notSymmetric)


def test_qn_123_at_four():
    v = schur_expand(qn(patternSet(['123']), 4))
    assert v == schurVector(4, {(2, 2): 2, (2, 1, 1): 3, (1, 1, 1, 1): 1})
    assert v == iode_rhs(4, 'iota', 3)


@pytest.mark.parametrize('n', range(0, 7))
@pytest.mark.parametrize('k', range(1, 5))
def test_monotone_patterns(n, k):
    assert schur_expand(qn(patternSet([iota(k)]), n)) == iode_rhs(n, 'iota', k)
    assert schur_expand(qn(patternSet([delta(k)]), n)) == iode_rhs(n, 'delta', k)


def test_iode_rhs_validation():
    assert iode_rhs(3, 'empty') == f_schur_sum([(3,), (2, 1), (1, 1, 1)], 3)
    with pytest.raises(ValueError):
        iode_rhs(3, 'iota')
    with pytest.raises(ValueError):
        iode_rhs(3, 'zigzag', 2)


def test_partial_shuffles():
    assert pi_partial(1, 2) == patternSet(['132', '312'])
    assert pi_partial(1, 1) == patternSet(['213', '132'])
    assert pi_partial(2, 2) == pi_general(4, 2)
    assert len(pi_partial(3, 1)) == 4
    with pytest.raises(ValueError):
        pi_partial(2, 3)
    with pytest.raises(ValueError):
        pi_general(6, 3)


def test_fattened_hooks_and_lambda_bar():
    assert fattened_hooks(4, 2) == [(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)]
    assert lambda_bar((5, 2), 3) == (3, 2)
    assert lambda_bar((2, 1), 3) == (2, 1)
    with pytest.raises(ValueError):
        lambda_bar((5, 4), 3)


@pytest.mark.parametrize('k', [1, 2, 3])
def test_partial_shuffle_expansion(k):
    for n in range(0, 7):
        q1 = qn(pi_partial(k, 1), n)
        q2 = qn(pi_partial(k, 2), n)
        assert q1 == q2
        assert schur_expand(q2) == ps_rhs(n, k)


def test_pi_general_matches_formula():
    for a in range(1, 5):
        for n in range(0, 7):
            assert schur_expand(qn(pi_general(a, 2), n)) == ps_rhs(n, 2)


def test_shapes_avoiding():
    assert shapes_avoiding(4, (2, 1, 1)) == [(4,), (3, 1), (2, 2), (1, 1, 1, 1)]
    assert pkc_shape_rhs(4, 2, 2) == f_schur_sum(
        [(4,), (3, 1), (2, 2), (1, 1, 1, 1)], 4)
    with pytest.raises(ValueError):
        pkc_shape_patterns(1, 1)


@pytest.mark.parametrize('a,b', [(2, 1), (3, 1), (2, 2)])
def test_pkc_shape(a, b):
    Pi = pkc_shape_patterns(a, b)
    assert Pi.lengths() == [a + b, a + b + 1]
    for n in range(0, 7):
        assert schur_expand(qn(Pi, n)) == pkc_shape_rhs(n, a, b)


@pytest.mark.parametrize('r,s', [(2, 2), (3, 2), (2, 3)])
def test_hook_expansion(r, s):
    Pi = superstandard_hook_patterns(r, s)
    for n in range(0, 7):
        assert schur_expand(qn(Pi, n)) == hook_expansion_rhs(n, r, s)


def test_pi_zero():
    Pi0 = pi_zero()
    assert len(Pi0) == 30
    assert not (set(Pi0.patterns) & knuth_class(P0))
    assert Pi0 | knuth_patterns(P0) == shape_patterns((3, 1, 1))
    assert not is_symmetric(qn(Pi0, 6))
    assert is_symmetric(qn(Pi0, 5))


def test_qn_is_thread_independent():
    Pi = patternSet(['2413', '3142'])
    expected = qn(Pi, 7)
    set_threads(1)
    try:
        assert qn(Pi, 7) == expected
    finally:
        set_threads(numba.config.NUMBA_NUM_THREADS)
