"""
Closure properties of pattern sets: D_J^{-1} sets, swap closure,
pattern-Knuth closure, i-descent-complete pairs, stability and the survey of
small symmetric sets.
"""
import collections
import functools
import itertools
import logging
from math import factorial

import numpy as np
from scipy.special import comb

from .common import ResourceLimitError, get_config, make_progress
from .permutations import (permutation, patternSet, avoider_mask,
                           all_permutations, descent_masks, set_to_mask,
                           ides)
from .tableaux import (tableau, p_tableau, des_tableau, syt_enumerate,
                       partitions, knuth_class, is_superstandard_hook)
from .qsym import is_symmetric
from .avoidance import qn

logger = logging.getLogger(__name__)


def _jsonable(obj):
    if isinstance(obj, tableau):
        return obj.to_json()
    if isinstance(obj, (frozenset, set)):
        return [_jsonable(o) for o in sorted(obj)]
    if isinstance(obj, (tuple, list)):
        return [_jsonable(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if hasattr(obj, 'to_json'):
        return obj.to_json()
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    if isinstance(obj, np.integer):
        return int(obj)
    return str(obj)


class verificationReport(object):
    """
    Outcome of checking one claim on a bounded range

    Parameters
    ----------
    claim : str
        Stable identifier of the claim.
    params : dict
        Parameters and ranges the claim was checked on.
    holds : bool
    witnesses : list, optional
        Counterexamples, smallest first.  Required when holds is False.
    enumerated : int, optional
        Number of objects enumerated.
    details : dict, optional
        Claim-specific extra facts.
    """
    def __init__(self, claim, params, holds, witnesses=None, enumerated=0,
                 details=None):
        self.claim = claim
        self.params = dict(params)
        self.holds = bool(holds)
        self.witnesses = list(witnesses or [])
        self.enumerated = int(enumerated)
        self.details = dict(details or {})
        if not self.holds and not self.witnesses:
            raise ValueError('Claim %s fails without a witness.' % claim)

    def __bool__(self):
        return self.holds

    def to_json(self):
        out = {'claim': self.claim, 'params': _jsonable(self.params),
               'holds': self.holds,
               'witnesses': [_jsonable(w) for w in self.witnesses],
               'enumerated': self.enumerated}
        if self.details:
            out['details'] = _jsonable(self.details)
        return out

    def __str__(self):
        lines = ['%s %s' % (self.claim, 'HOLDS' if self.holds else 'FAILS')]
        for k in sorted(self.params):
            lines.append('  %s = %s' % (k, self.params[k]))
        for k in sorted(self.details):
            lines.append('  %s: %s' % (k, self.details[k]))
        for w in self.witnesses:
            lines.append('  witness: %s' % (w,))
        lines.append('  enumerated: %d' % self.enumerated)
        return '\n'.join(lines)

    def __repr__(self):
        return 'verificationReport(%r, holds=%r)' % (self.claim, self.holds)


class closureResult(object):
    """
    Outcome of a closure test

    Attributes
    ----------
    kind : str
        'pattern_knuth', 'swap' or 'i_descent_consistent'.
    holds : bool
    bound_used : int
        Largest n examined; M+1 for pattern-Knuth closure.
    witnesses : list
        For a failure, a pair (sigma, tau) of equivalent permutations of
        which only sigma lies in the set under test.
    """
    def __init__(self, kind, holds, bound_used, witnesses=()):
        self.kind = kind
        self.holds = bool(holds)
        self.bound_used = bound_used
        self.witnesses = list(witnesses)

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {'kind': self.kind, 'holds': self.holds,
                'bound_used': self.bound_used,
                'witnesses': [_jsonable(w) for w in self.witnesses]}

    def __repr__(self):
        return 'closureResult(%r, holds=%r, bound_used=%r)' % (
            self.kind, self.holds, self.bound_used)


@functools.lru_cache(maxsize=4)
def ides_masks(n):
    """
    i-descent sets of the rows of `all_permutations(n)` as bit masks
    """
    perms = all_permutations(n)
    inverse = np.argsort(perms, axis=1).astype(np.int8) + 1
    return descent_masks(inverse)


@functools.lru_cache(maxsize=4)
def knuth_labels(n):
    """
    Label each row of `all_permutations(n)` by its insertion tableau
    """
    logger.debug('Computing insertion tableaux of S_%d.', n)
    index = {}
    labels = np.empty(factorial(n), dtype=np.int64)
    for ii, row in enumerate(all_permutations(n)):
        labels[ii] = index.setdefault(p_tableau(permutation(row)), len(index))
    return labels


def d_j_inverse(n, J, cfg=None):
    """
    All permutations of [n] whose i-descent set is J
    """
    J = frozenset(J)
    if any(not 1 <= j <= n - 1 for j in J):
        raise ValueError('%r is not a subset of [%d].' % (sorted(J), n - 1))
    get_config(cfg).check_n(n)
    rows = all_permutations(n)[ides_masks(n) == set_to_mask(J)]
    return frozenset(permutation(row) for row in rows)


def pi_j(J, n):
    """
    The member of D_J^{-1} made of increasing runs of values, largest first
    """
    cuts = [0] + sorted(J) + [n]
    word = []
    for i in range(len(cuts) - 1, 0, -1):
        word.extend(range(cuts[i - 1] + 1, cuts[i] + 1))
    pi = permutation(word)
    assert ides(pi) == frozenset(J)
    return pi


def swap_neighbors(pi):
    """
    Results of exchanging adjacent entries that differ by more than one
    """
    w = pi.word
    return frozenset(permutation(w[:i] + (w[i + 1], w[i]) + w[i + 2:])
                     for i in range(len(w) - 1) if abs(w[i] - w[i + 1]) > 1)


def swap_class(pi):
    seen = {pi}
    queue = collections.deque([pi])
    while queue:
        for nb in swap_neighbors(queue.popleft()):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return frozenset(seen)


def is_swap_closed(Pi):
    """
    Is Pi closed under swaps?

    Patterns of different lengths never interact, so mixed lengths are
    handled length by length.
    """
    for pi in Pi:
        for nb in sorted(swap_neighbors(pi)):
            if nb not in Pi:
                return closureResult('swap', False, Pi.max_len, [(pi, nb)])
    return closureResult('swap', True, Pi.max_len)


def is_union_of_d_j(Pi, cfg=None):
    """
    Is Pi the union of the D_J^{-1} meeting it?
    """
    by_length = collections.defaultdict(set)
    for pi in Pi:
        by_length[pi.n].add(ides(pi))
    union = set()
    for n, Js in by_length.items():
        for J in Js:
            union |= d_j_inverse(n, J, cfg=cfg)
    return union == set(Pi.patterns)


def _check_equal_lengths(Pi):
    if len(Pi.lengths()) > 1:
        raise ValueError('Patterns have different lengths %r.' % Pi.lengths())


def is_i_descent_consistent(Pi):
    """
    Do all members of Pi share one i-descent set?
    """
    if len(Pi) == 0:
        raise ValueError('Pattern set is empty.')
    _check_equal_lengths(Pi)
    return len(set(ides(pi) for pi in Pi)) == 1


def union_of_classes_witness(n, Pi, cfg=None):
    """
    None if S_n(Pi) is a union of Knuth classes, otherwise the lexicographically
    first avoider together with the first Knuth-equivalent non-avoider
    """
    mask = avoider_mask(n, Pi, cfg=cfg)
    labels = knuth_labels(n)
    total = np.bincount(labels)
    inside = np.bincount(labels, weights=mask.astype(np.int64),
                         minlength=len(total)).astype(np.int64)
    bad = (inside > 0) & (inside < total)
    if not bad.any():
        return None
    perms = all_permutations(n)
    first = int(np.flatnonzero(bad[labels] & mask)[0])
    partner = int(np.flatnonzero((labels == labels[first]) & ~mask)[0])
    return permutation(perms[first]), permutation(perms[partner])


def is_pattern_knuth_closed(Pi, cfg=None):
    """
    Is S_n(Pi) a union of Knuth classes for every n?

    It suffices to check n <= M+1, M the longest pattern length.

    Raises
    ------
    ResourceLimitError
        If M+1 exceeds the enumeration bound.
    """
    cfg = get_config(cfg)
    bound = Pi.max_len + 1
    if bound > cfg.enumeration_bound:
        raise ResourceLimitError('Pattern-Knuth closure needs n=%d, above the '
                                 'enumeration bound %d.' %
                                 (bound, cfg.enumeration_bound))
    for n in range(1, bound + 1):
        witness = union_of_classes_witness(n, Pi, cfg=cfg)
        if witness is not None:
            logger.debug('S_%d(Pi) splits a Knuth class: %s ~ %s.', n, *witness)
            return closureResult('pattern_knuth', False, bound, [witness])
    return closureResult('pattern_knuth', True, bound)


def is_interval_form(J, n):
    """
    J = [1, k] or J = [k, n-1], the empty set included
    """
    J = frozenset(J)
    k = len(J)
    return J == frozenset(range(1, k + 1)) or J == frozenset(range(n - k, n))


def doubles_sets(n):
    """
    Descent sets carried by i-descent-complete pairs
    """
    out = set()
    for k in range(2, n - 1):
        out.add(frozenset(range(k, n - 1)))
    for k in range(4, n + 1):
        out.add(frozenset(range(2, k - 1)))
    full = frozenset(range(1, n))
    return out | set(full - J for J in out)


def _pair_family_one(n, k):
    S = tableau([list(range(1, k + 1)) + [n]] + [[v] for v in range(k + 1, n)])
    T = tableau([list(range(1, k + 1)), [k + 1, n]] +
                [[v] for v in range(k + 2, n)])
    return S, T


def _pair_family_two(n, k):
    S = tableau([[1, 2] + list(range(k, n + 1))] + [[v] for v in range(3, k)])
    T = tableau([[1, 2] + list(range(k + 1, n + 1)), [3, k]] +
                [[v] for v in range(4, k)])
    return S, T


def _ordered(S, T):
    return (S, T) if S < T else (T, S)


def descent_complete_pairs(n):
    """
    The pairs S != T with K(S) and K(T) together making up one D_J^{-1}

    Returns
    -------
    pairs : list of (tableau, tableau)
        Each pair ordered, the list sorted.
    """
    if n < 4:
        raise ValueError('i-descent-complete pairs need n >= 4, not %d.' % n)
    pairs = set()
    for k in range(2, n - 1):
        pairs.add(_ordered(*_pair_family_one(n, k)))
    for k in range(4, n + 1):
        pairs.add(_ordered(*_pair_family_two(n, k)))
    for S, T in list(pairs):
        pairs.add(_ordered(S.transpose(), T.transpose()))
    for S, T in pairs:
        assert des_tableau(S) == des_tableau(T)
    return sorted(pairs)


def descent_complete_pairs_bruteforce(n, cfg=None):
    """
    Search all pairs of SYT(n) for i-descent-complete pairs
    """
    by_des = collections.defaultdict(list)
    for lam in partitions(n):
        for S in syt_enumerate(lam):
            by_des[des_tableau(S)].append(S)
    pairs = []
    for J, group in by_des.items():
        target = d_j_inverse(n, J, cfg=cfg)
        for S, T in itertools.combinations(sorted(group), 2):
            if knuth_class(S, cfg=cfg) | knuth_class(T, cfg=cfg) == target:
                pairs.append((S, T))
    return sorted(pairs)


def _d_j_form(tabs, Pi, n, cfg):
    Js = [des_tableau(S) for S in tabs]
    if len(tabs) == 1:
        return (is_interval_form(Js[0], n) and
                set(Pi.patterns) == d_j_inverse(n, Js[0], cfg=cfg))
    if Js[0] != Js[1]:
        return all(is_interval_form(J, n) and
                   knuth_class(S, cfg=cfg) == d_j_inverse(n, J, cfg=cfg)
                   for S, J in zip(tabs, Js))
    return (Js[0] in doubles_sets(n) and
            set(Pi.patterns) == d_j_inverse(n, Js[0], cfg=cfg))


def _tableau_form(tabs, n):
    if all(is_superstandard_hook(S) for S in tabs):
        return True
    if len(tabs) == 2 and n >= 4:
        return _ordered(*tabs) in descent_complete_pairs(n)
    return False


def classify_knuth_union(tabs, cfg=None):
    """
    Evaluate the four conditions characterising pattern-Knuth closed unions
    of one or two Knuth classes

    Parameters
    ----------
    tabs : sequence of tableau
        One tableau, or two distinct tableaux of the same size.

    Returns
    -------
    report : verificationReport
        Holds when the four conditions agree.  `details` records each
        condition under the keys pattern_knuth, swap, d_j_form and
        tableau_form.
    """
    tabs = list(tabs)
    if len(tabs) not in (1, 2):
        raise ValueError('Expected one or two tableaux, got %d.' % len(tabs))
    n = tabs[0].n
    if len(tabs) == 2 and (tabs[0] == tabs[1] or tabs[1].n != n):
        raise ValueError('Expected two distinct tableaux of the same size.')
    Pi = patternSet(itertools.chain.from_iterable(knuth_class(S, cfg=cfg)
                                                  for S in tabs))
    pkc = is_pattern_knuth_closed(Pi, cfg=cfg)
    swap = is_swap_closed(Pi)
    conditions = {'pattern_knuth': pkc.holds,
                  'swap': swap.holds,
                  'd_j_form': _d_j_form(tabs, Pi, n, cfg),
                  'tableau_form': _tableau_form(tabs, n)}
    holds = len(set(conditions.values())) == 1
    witnesses = [] if holds else [tuple(tabs)] + pkc.witnesses + swap.witnesses
    return verificationReport('knuth-union', {'tableaux': tabs, 'n': n}, holds,
                              witnesses, enumerated=len(Pi),
                              details=conditions)


def stability_check(Pi, Pi_prime, N, cfg=None):
    """
    Compare S_N(Pi) with S_N(Pi'); equality at N >= M persists for all
    larger n.

    Raises
    ------
    ValueError
        If either set is empty or N is smaller than the longest pattern.
    """
    if len(Pi) == 0 or len(Pi_prime) == 0:
        raise ValueError('Both pattern sets must be nonempty.')
    M = max(Pi.max_len, Pi_prime.max_len)
    if N < M:
        raise ValueError('N=%d is smaller than the longest pattern %d.' % (N, M))
    a = avoider_mask(N, Pi, cfg=cfg)
    b = avoider_mask(N, Pi_prime, cfg=cfg)
    differ = np.flatnonzero(a != b)
    params = {'N': N, 'M': M}
    if len(differ) == 0:
        return verificationReport('stability', params, True, enumerated=len(a),
                                  details={'equal_for_all_n_from': N})
    sigma = permutation(all_permutations(N)[differ[0]])
    return verificationReport('stability', params, False, [sigma],
                              enumerated=len(a),
                              details={'first_avoids': bool(a[differ[0]])})


def rc_orbit(Pi):
    """
    Images of Pi under reverse, complement and both
    """
    r = Pi.apply('reverse')
    return {Pi, r, Pi.apply('complement'), r.apply('complement')}


def _key(Pi):
    return tuple(sorted(Pi.patterns))


def survey_symmetric_sets(k, p, n_max, canonical=True, cfg=None,
                          progress_bar=False):
    """
    Look for p-element subsets of S_k whose Q_n is symmetric for n <= n_max

    Parameters
    ----------
    k, p, n_max : int
    canonical : bool, optional
        Test one representative per reverse/complement orbit and report the
        verdict for every member of the orbit.  Default: True
    cfg : pypaq.common.config, optional
    progress_bar : bool, optional

    Yields
    ------
    (Pi, symmetric) : (patternSet, bool)
        symmetric is True when Q_n(Pi) is symmetric for every n <= n_max.

    Raises
    ------
    ResourceLimitError
        Before any work, when C(k!, p) exceeds the survey budget.
    """
    cfg = get_config(cfg)
    total = comb(factorial(k), p, exact=True)
    if total > cfg.survey_budget:
        raise ResourceLimitError('Survey of %d candidate sets exceeds the '
                                 'budget %d.' % (total, cfg.survey_budget))
    cfg.check_n(n_max)
    logger.info('Surveying %d subsets of S_%d of size %d up to n=%d.',
                total, k, p, n_max)
    members = [permutation(row) for row in all_permutations(k)]
    progress = make_progress(total, progress_bar, prefix='Survey:')
    for subset in itertools.combinations(members, p):
        progress.advance()
        Pi = patternSet(subset)
        orbit = rc_orbit(Pi) if canonical else {Pi}
        if canonical and _key(Pi) != min(_key(o) for o in orbit):
            continue
        # below length k nothing is avoided, so Q_n is Q_n(empty set)
        symmetric = all(is_symmetric(qn(Pi, n, cfg=cfg))
                        for n in range(k, n_max + 1))
        for member in sorted(orbit, key=_key):
            yield member, symmetric
