"""
The generating function Q_n(Pi) and the closed forms it is compared with.
"""
import logging

import numpy as np

from .common import make_progress
from .permutations import (patternSet, iota, delta, avoider_mask,
                           all_permutations, descent_masks, mask_to_set,
                           partial_shuffle)
from .qsym import qsymF, schurVector, set_to_comp
from . import tableaux
from .tableaux import (tableau, partitions, f_lambda, has_cell,
                       shape_contains)

logger = logging.getLogger(__name__)

# The tableau with rows 124 / 3 / 5
P0 = tableau([[1, 2, 4], [3], [5]])


def qn(Pi, n, cfg=None, progress_bar=False):
    """
    Q_n(Pi): the sum of F_{Des sigma} over the avoiders sigma in S_n(Pi)

    Parameters
    ----------
    Pi : patternSet
    n : int
    cfg : pypaq.common.config, optional
    progress_bar : bool, optional
        Report progress while the descent sets are tallied.  Default: False

    Returns
    -------
    q : qsymF
    """
    mask = avoider_mask(n, Pi, cfg=cfg)
    rows = all_permutations(n)[mask]
    progress = make_progress(1, progress_bar, prefix='Q_%d:' % n)
    masks, counts = np.unique(descent_masks(rows), return_counts=True)
    progress.advance()
    q = qsymF(n, {set_to_comp(mask_to_set(int(m)), n): int(c)
                  for m, c in zip(masks, counts)})
    assert q.mass() == int(mask.sum())
    logger.debug('Q_%d(%d patterns): %d avoiders, %d F-terms.',
                 n, len(Pi), q.mass(), len(q))
    return q


def f_schur_sum(lams, degree):
    """
    sum of f^lam s_lam over the given shapes
    """
    return schurVector(degree, {lam: f_lambda(lam) for lam in lams})


def iode_rhs(n, variant='empty', k=None):
    """
    Schur expansion of Q_n for the empty set, {iota_k} or {delta_k}

    Parameters
    ----------
    n : int
    variant : str
        'empty', 'iota' or 'delta'.
    k : int, optional
        Pattern length; required for 'iota' and 'delta'.
    """
    if variant == 'empty':
        return f_schur_sum(partitions(n), n)
    if k is None or k < 1:
        raise ValueError('Variant %r needs a positive k.' % variant)
    if variant == 'iota':
        return f_schur_sum([lam for lam in partitions(n)
                            if (lam[0] if lam else 0) < k], n)
    elif variant == 'delta':
        return f_schur_sum([lam for lam in partitions(n) if len(lam) < k], n)
    else:
        raise ValueError('Variant %r not understood.' % variant)


def pi_general(a, k):
    """
    (1, 2, ..., a omitted, ..., k+2) partially shuffled with a
    """
    if k < 1:
        raise ValueError('k must be at least 1, not %d.' % k)
    if not 1 <= a <= k + 2:
        raise ValueError('a must lie in [1, %d], not %d.' % (k + 2, a))
    u = [v for v in range(1, k + 3) if v != a]
    return partial_shuffle(u, a)


def pi_partial(k, which):
    """
    The partial shuffles Pi_{k,1} (which=1) and Pi_{k,2} (which=2)
    """
    if which == 1:
        Pi = partial_shuffle(list(range(1, k + 1)) + [k + 2], k + 1)
    elif which == 2:
        Pi = partial_shuffle(list(range(1, k + 2)), k + 2)
    else:
        raise ValueError('which must be 1 or 2, not %r.' % (which,))
    assert Pi == pi_general(k + which, k)
    return Pi


def fattened_hooks(n, k):
    """
    Partitions of n without the cell (2, k)
    """
    if k < 1:
        raise ValueError('k must be at least 1, not %d.' % k)
    return [lam for lam in partitions(n) if not has_cell(lam, 2, k)]


def lambda_bar(lam, k):
    """
    lam with its first part replaced by min(lam_1, k)
    """
    lam = tuple(lam)
    if not lam:
        return lam
    capped = (min(lam[0], k),) + lam[1:]
    if len(capped) > 1 and capped[0] < capped[1]:
        raise ValueError('Capping %r at %d is not a partition.' % (lam, k))
    return capped


def ps_rhs(n, k):
    """
    sum of f^{lambda_bar} s_lam over lam in H_{n,k+1}
    """
    return schurVector(n, {lam: f_lambda(lambda_bar(lam, k))
                           for lam in fattened_hooks(n, k + 1)})


def shapes_avoiding(n, mu):
    """
    Partitions of n that do not contain mu
    """
    return [lam for lam in partitions(n) if not shape_contains(lam, mu)]


def pkc_shape_rhs(n, a, b):
    """
    sum of f^lam s_lam over the shapes of size n avoiding (a, 1^b)
    """
    if a < 1 or b < 0:
        raise ValueError('Need a >= 1 and b >= 0, got a=%d, b=%d.' % (a, b))
    return f_schur_sum(shapes_avoiding(n, (a,) + (1,)*b), n)


def hook_shape(a, b):
    return (a,) + (1,)*b


def knuth_patterns(P, cfg=None):
    """
    K(P) as a patternSet
    """
    return patternSet(tableaux.knuth_class(P, cfg=cfg))


def shape_patterns(lam, cfg=None):
    """
    K(lam) as a patternSet
    """
    return patternSet(tableaux.knuth_class_shape(lam, cfg=cfg))


def pkc_shape_patterns(a, b, cfg=None):
    """
    K(mu) together with K(tau) for mu = (a, 1^b) and tau = (a, 2, 1^(b-1))
    """
    if a < 2 or b < 1:
        raise ValueError('Need a >= 2 and b >= 1, got a=%d, b=%d.' % (a, b))
    mu = hook_shape(a, b)
    tau = (a, 2) + (1,)*(b - 1)
    return shape_patterns(mu, cfg=cfg) | shape_patterns(tau, cfg=cfg)


def hook_expansion_rhs(n, r, s):
    """
    Schur expansion predicted for Q_n(K(R)), R row superstandard of shape
    (r, 1^(s-1)): the shape counts of tableaux with no (r,s)-ascending
    sequence.
    """
    return schurVector(n, dict(tableaux.av_tableaux(n, r, s)))


def superstandard_hook_patterns(r, s, cfg=None):
    R = tableaux.superstandard(hook_shape(r, s - 1), 'row')
    return knuth_patterns(R, cfg=cfg)


def pi_zero():
    """
    K(3,1,1) with the class of P0 removed
    """
    Pi0 = shape_patterns((3, 1, 1)) - knuth_patterns(P0)
    assert len(Pi0) == (f_lambda((3, 1, 1)) - 1)*f_lambda((3, 1, 1))
    return Pi0


def iota_patterns(k):
    return patternSet([iota(k)])


def delta_patterns(k):
    return patternSet([delta(k)])
