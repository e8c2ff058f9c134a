"""
Descent-preserving bijections from the avoiders of the partial shuffles
Pi_{k,2} and Pi_{k,1} onto masked words.

Both maps hide t(sigma), the (k+1)-endpoints of sigma, behind INF and
standardize what is left, so that the two images are the same set.  The
inverses rebuild sigma from where the INF entries sit and are checked by
mapping the result forward again.
"""
import logging

from .common import WitnessError
from .permutations import (INF, permutation, contains, occurrence,
                           standardize, k_endpoints, rt_decomposition, mask,
                           standardize_masked)
from .avoidance import pi_partial

logger = logging.getLogger(__name__)


def _require_avoider(sigma, k, which):
    Pi = pi_partial(k, which)
    for pi in Pi:
        if contains(sigma, pi):
            raise WitnessError('%s contains %s from Pi_{%d,%d}.' %
                               (sigma, pi, k, which),
                               witness=(pi, occurrence(sigma, pi)))


def is_interval(values, low, high):
    return sorted(values) == list(range(low, high + 1))


def in_pi_k2_by_structure(sigma, k):
    """
    t(sigma) is increasing with values forming [a, n]
    """
    _, t, _ = rt_decomposition(sigma, k)
    if list(t) != sorted(t):
        return False
    return is_interval(t, sigma.n - len(t) + 1, sigma.n)


def in_pi_k1_by_structure(sigma, k):
    """
    Every block t_i(sigma) is increasing with values forming (r_i, a_i]
    """
    r, _, blocks = rt_decomposition(sigma, k)
    for ri, block in zip(r, blocks):
        if list(block) != sorted(block):
            return False
        if not is_interval(block, ri + 1, ri + len(block)):
            return False
    return True


def hide_t(sigma, k):
    """
    sigma with t(sigma) replaced by INF and the rest standardized
    """
    return standardize_masked(mask(sigma, rt_decomposition(sigma, k)[1]))


def phi(sigma, k):
    """
    Hide t(sigma) for sigma avoiding Pi_{k,2}

    The finite entries of the image are already 1, ..., a-1.

    Raises
    ------
    WitnessError
        If sigma contains a pattern of Pi_{k,2}; the witness is the pattern
        and its first occurrence.
    """
    _require_avoider(sigma, k, 2)
    return hide_t(sigma, k)


def psi(sigma, k):
    """
    Hide t(sigma) for sigma avoiding Pi_{k,1}
    """
    _require_avoider(sigma, k, 1)
    return hide_t(sigma, k)


def _to_permutation(entries, xi):
    try:
        return permutation(entries)
    except ValueError:
        raise WitnessError('%s is not the image of a permutation.' % xi,
                           witness=xi)


def phi_inverse(xi, k):
    """
    Fill the INF entries of xi with [a, n] in increasing order

    Raises
    ------
    WitnessError
        If xi is not the image under phi of a Pi_{k,2}-avoider.
    """
    n = xi.n
    fill = iter(range(n - len(xi.inf_positions()) + 1, n + 1))
    sigma = _to_permutation([next(fill) if e is INF else e for e in xi], xi)
    try:
        ok = phi(sigma, k) == xi
    except WitnessError:
        ok = False
    if not ok:
        raise WitnessError('%s is not in the image of phi for k=%d.' % (xi, k),
                           witness=xi)
    return sigma


def psi_inverse(xi, k):
    """
    Rebuild sigma by giving the INF entries between r_i and r_{i+1} the
    values r_i + 1, r_i + 2, ... in increasing order

    The r_i are the k-endpoints of the finite part of xi.  Finite entries
    are valued in increasing order, each r_i reserving the interval just
    above it for its block.

    Raises
    ------
    WitnessError
        If xi is not the image under psi of a Pi_{k,1}-avoider.
    """
    finite = [(i, e) for i, e in enumerate(xi) if e is not INF]
    if not finite:
        raise WitnessError('%s has no finite entries.' % xi, witness=xi)
    word = standardize(e for _, e in finite)
    block = {finite[j - 1][0]: 0 for j in k_endpoints(word, k)}

    owner = None
    for i, e in enumerate(xi):
        if i in block:
            owner = i
        elif e is INF:
            if owner is None:
                raise WitnessError('%s has INF before its first k-endpoint.' %
                                   xi, witness=xi)
            block[owner] += 1

    values = {}
    nxt = 1
    for i, _ in sorted(finite, key=lambda ie: ie[1]):
        values[i] = nxt
        nxt += 1 + block.get(i, 0)

    entries = []
    current = None
    for i, e in enumerate(xi):
        if e is INF:
            current += 1
            entries.append(current)
        else:
            entries.append(values[i])
            if i in block:
                current = values[i]
    sigma = _to_permutation(entries, xi)
    try:
        ok = psi(sigma, k) == xi
    except WitnessError:
        ok = False
    if not ok:
        raise WitnessError('%s is not in the image of psi for k=%d.' % (xi, k),
                           witness=xi)
    return sigma


def shuffle_bijection(sigma, k):
    """
    psi^{-1}(phi(sigma)): Pi_{k,2}-avoiders to Pi_{k,1}-avoiders, keeping
    the descent set
    """
    return psi_inverse(phi(sigma, k), k)


def shuffle_bijection_inverse(sigma, k):
    return phi_inverse(psi(sigma, k), k)
