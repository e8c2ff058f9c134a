"""
Registry of checkable claims.

Every claim is verified on an explicit, bounded range of parameters and
produces a `verificationReport`.  Claims are addressed by stable string ids,
for example::

    >>> from pypaq.verify import run_claim
    >>> run_claim('thm-ps', k=2, n=6).holds
    True

Objects are always visited in lexicographic order, so the first witness of a
failing claim is the smallest one.
"""
import collections
import inspect
import itertools
import logging

from .common import get_config
from .permutations import (permutation, patternSet, iota, delta, descent_set,
                           ides, lis_lds, masked_descents, avoider_mask,
                           all_permutations, move_max_right, move_max_to_end,
                           move_max_to_front, iterate_permutations)
from .tableaux import (tableau, partitions, syt_enumerate, f_lambda, rs,
                       rs_inverse, p_tableau, des_tableau, knuth_class,
                       knuth_class_shape, is_superstandard_hook,
                       delete_max, delete_value, is_hook)
from .qsym import (qsymF, schurVector, notSymmetric, is_symmetric, schur_to_f,
                   schur_expand, is_schur_nonneg, transpose_schur, set_to_comp)
from . import avoidance
from .avoidance import qn
from . import bijections
from . import closure
from .closure import verificationReport

logger = logging.getLogger(__name__)

MAX_WITNESSES = 5

HOOK_EXPANSION_CASES = ((2, 2), (3, 2), (2, 3), (4, 2), (3, 3), (2, 4))
PKC_SHAPE_CASES = ((2, 1), (3, 1), (2, 2), (3, 2))

claimSpec = collections.namedtuple('claimSpec',
                                   ['claim_id', 'func', 'defaults', 'summary'])

CLAIMS = {}


def claim(claim_id):
    """
    Register a check under `claim_id`; its keyword defaults are the
    default ranges.
    """
    def register(func):
        signature = inspect.signature(func)
        defaults = {name: p.default for name, p in signature.parameters.items()
                    if name not in ('chk', 'cfg')}
        summary = (func.__doc__ or '').strip().splitlines()[0]
        CLAIMS[claim_id] = claimSpec(claim_id, func, defaults, summary)
        return func
    return register


class _checker(object):
    """
    Counts checked instances and keeps the first few failures
    """
    def __init__(self):
        self.witnesses = []
        self.enumerated = 0

    def check(self, condition, witness):
        self.enumerated += 1
        if not condition and len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)
        return condition

    @property
    def holds(self):
        return not self.witnesses


def run_claim(claim_id, cfg=None, **params):
    """
    Check the claim `claim_id` with the given parameter overrides

    Raises
    ------
    KeyError
        If `claim_id` is unknown.
    TypeError
        If a parameter is not understood by the claim.
    """
    try:
        spec = CLAIMS[claim_id]
    except KeyError:
        raise KeyError('Unknown claim %r; known claims: %s.' %
                       (claim_id, ', '.join(sorted(CLAIMS))))
    unknown = set(params) - set(spec.defaults)
    if unknown:
        raise TypeError('Claim %s does not take %s.' %
                        (claim_id, ', '.join(sorted(unknown))))
    full = dict(spec.defaults)
    full.update({k: v for k, v in params.items() if v is not None})
    chk = _checker()
    details = spec.func(chk, cfg=get_config(cfg), **full) or {}
    report = verificationReport(claim_id, full, chk.holds, chk.witnesses,
                                chk.enumerated, details)
    logger.info('%s: %s (%d checked).', claim_id,
                'holds' if report.holds else 'fails', report.enumerated)
    return report


def f_sum(perms, n):
    """
    sum of F_{Des sigma} over the given permutations of [n]
    """
    counts = collections.Counter(set_to_comp(descent_set(s), n) for s in perms)
    return qsymF(n, counts)


def all_syt(n):
    return [S for lam in partitions(n) for S in syt_enumerate(lam)]


def knuth_unions(n, cfg=None, max_subsets=1024):
    """
    Unions of Knuth classes of S_n: all of them when there are at most
    `max_subsets`, otherwise the unions of one or two classes.
    """
    tabs = all_syt(n)
    sizes = range(1, len(tabs) + 1) if 2**len(tabs) <= max_subsets else (1, 2)
    classes = {S: knuth_class(S, cfg=cfg) for S in tabs}
    for size in sizes:
        for chosen in itertools.combinations(tabs, size):
            yield chosen, patternSet(itertools.chain.from_iterable(
                classes[S] for S in chosen))


def parameter_pair(names, values, default_cases):
    """
    The single case named by a parameter pair, or `default_cases` when both
    are unset

    Raises
    ------
    ValueError
        If only one of the pair is given.
    """
    given = [v is not None for v in values]
    if all(given):
        return (tuple(values),)
    if any(given):
        raise ValueError('Parameters %s and %s must be given together.' %
                         names)
    return default_cases


# Background

@claim('thm-rs')
def _check_rs(chk, n=6, cfg=None):
    """
    Robinson-Schensted: Des sigma = Des Q, lambda_1 = lis, P(sigma^r) = P^t,
    RS(sigma^-1) = (Q, P), and the inverse map undoes RS
    """
    for m in range(1, n + 1):
        for sigma in iterate_permutations(m, cfg=cfg):
            P, Q = rs(sigma)
            chk.check(descent_set(sigma) == des_tableau(Q), ('a', sigma))
            chk.check(P.shape[0] == lis_lds(sigma)[0], ('b', sigma))
            chk.check(p_tableau(sigma.reverse()) == P.transpose(), ('c', sigma))
            chk.check(tuple(rs(sigma.inverse())) == (Q, P), ('d', sigma))
            chk.check(rs_inverse(P, Q) == sigma, ('inverse', sigma))


@claim('cor-knuth')
def _check_cor_knuth(chk, n=6, cfg=None):
    """
    F-sums over K(P) and K(lambda) are s_lambda and f^lambda s_lambda
    """
    for m in range(1, n + 1):
        for lam in partitions(m):
            s = schur_to_f(lam)
            for P in syt_enumerate(lam):
                chk.check(f_sum(knuth_class(P, cfg=cfg), m) == s, P)
            chk.check(f_sum(knuth_class_shape(lam, cfg=cfg), m) ==
                      f_lambda(lam)*s, lam)


@claim('prop-rc')
def _check_prop_rc(chk, k=3, n=7, cfg=None):
    """
    Reverse and complement transpose the Schur expansion of a symmetric Q_n
    """
    members = [permutation(row) for row in all_permutations(k)]
    for size in (1, 2):
        for subset in itertools.combinations(members, size):
            Pi = patternSet(subset)
            for m in range(n + 1):
                v = schur_expand(qn(Pi, m, cfg=cfg))
                vr = schur_expand(qn(Pi.apply('reverse'), m, cfg=cfg))
                vc = schur_expand(qn(Pi.apply('complement'), m, cfg=cfg))
                if isinstance(v, notSymmetric):
                    chk.check(isinstance(vr, notSymmetric) and
                              isinstance(vc, notSymmetric), (Pi, m))
                else:
                    t = transpose_schur(v)
                    chk.check(vr == t and vc == t, (Pi, m))


# Small pattern sets

@claim('lemma-iode')
def _check_iode(chk, n=7, k=5, cfg=None):
    """
    Q_n of the empty set, {iota_k} and {delta_k} as sums of f^lambda s_lambda
    """
    for m in range(n + 1):
        chk.check(schur_expand(qn(patternSet(), m, cfg=cfg)) ==
                  avoidance.iode_rhs(m, 'empty'), ('empty', m))
        for j in range(1, k + 1):
            chk.check(schur_expand(qn(patternSet([iota(j)]), m, cfg=cfg)) ==
                      avoidance.iode_rhs(m, 'iota', j), ('iota', m, j))
            chk.check(schur_expand(qn(patternSet([delta(j)]), m, cfg=cfg)) ==
                      avoidance.iode_rhs(m, 'delta', j), ('delta', m, j))


@claim('thm-single-pattern')
def _check_single_pattern(chk, k=4, n=7, cfg=None):
    """
    Q_n({pi}) is symmetric for all n only for pi = iota_k or delta_k
    """
    for j in range(1, k + 1):
        monotone = {iota(j), delta(j)}
        for pi in iterate_permutations(j, cfg=cfg):
            symmetric = is_symmetric(qn(patternSet([pi]), j, cfg=cfg))
            chk.check(symmetric == (pi in monotone), pi)
        for pi in sorted(monotone):
            for m in range(n + 1):
                chk.check(is_symmetric(qn(patternSet([pi]), m, cfg=cfg)),
                          (pi, m))


@claim('lemma-monotone-pair')
def _check_monotone_pair(chk, k=4, l=4, n=7, cfg=None):
    """
    Q_n({iota_k, delta_l}) is the sum of f^lambda s_lambda over lambda_1 < k
    and lambda_1^t < l
    """
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            Pi = patternSet([iota(i), delta(j)])
            for m in range(n + 1):
                v = schur_expand(qn(Pi, m, cfg=cfg))
                rhs = avoidance.f_schur_sum(
                    [lam for lam in partitions(m)
                     if (lam[0] if lam else 0) < i and len(lam) < j], m)
                chk.check(v == rhs and is_schur_nonneg(v), (i, j, m))


@claim('thm-two-patterns')
def _check_two_patterns(chk, k=4, n=6, cfg=None):
    """
    Among 2-subsets of S_k only {iota_k, delta_k} keeps Q_n symmetric
    """
    if k < 4:
        raise ValueError('The two-pattern classification needs k >= 4.')
    expected = patternSet([iota(k), delta(k)])
    survivors = []
    for Pi, symmetric in closure.survey_symmetric_sets(k, 2, n, cfg=cfg):
        chk.check(not symmetric or Pi == expected, Pi)
        if symmetric:
            survivors.append(Pi)
    chk.check(expected in survivors, ('missing', expected))
    return {'survivors': survivors}


@claim('exception-213-231')
def _check_exception(chk, n=8, cfg=None):
    """
    Q_n({213, 231}) is symmetric and Schur nonnegative
    """
    Pi = patternSet([permutation((2, 1, 3)), permutation((2, 3, 1))])
    for m in range(n + 1):
        v = schur_expand(qn(Pi, m, cfg=cfg))
        chk.check(isinstance(v, schurVector) and is_schur_nonneg(v), m)


# Superstandard hooks

@claim('thm-ss')
def _check_ss(chk, n=5, cfg=None):
    """
    K(P) is pattern-Knuth closed exactly when P is a superstandard hook
    """
    for m in range(1, n + 1):
        for P in all_syt(m):
            closed = closure.is_pattern_knuth_closed(
                patternSet(knuth_class(P, cfg=cfg)), cfg=cfg).holds
            chk.check(closed == is_superstandard_hook(P), P)


@claim('thm-hook-expansion')
def _check_hook_expansion(chk, n=8, r=None, s=None, cfg=None):
    """
    Schur coefficients of Q_n(K(R)) count tableaux without an (r,s)-ascending
    sequence
    """
    cases = parameter_pair(('r', 's'), (r, s), HOOK_EXPANSION_CASES)
    for rr, ss in cases:
        Pi = avoidance.superstandard_hook_patterns(rr, ss, cfg=cfg)
        for m in range(n + 1):
            chk.check(schur_expand(qn(Pi, m, cfg=cfg)) ==
                      avoidance.hook_expansion_rhs(m, rr, ss), (rr, ss, m))


# Partial shuffles

@claim('thm-ps')
def _check_ps(chk, k=3, n=8, cfg=None):
    """
    Q_n(Pi_{k,1}) = Q_n(Pi_{k,2}) = sum over H_{n,k+1} of f^{lambda_bar}
    s_lambda
    """
    for j in range(1, k + 1):
        one = avoidance.pi_partial(j, 1)
        two = avoidance.pi_partial(j, 2)
        for m in range(n + 1):
            q1 = qn(one, m, cfg=cfg)
            q2 = qn(two, m, cfg=cfg)
            chk.check(q1 == q2, ('equal', j, m))
            chk.check(schur_expand(q2) == avoidance.ps_rhs(m, j), ('rhs', j, m))


@claim('lemma-phi-psi')
def _check_phi_psi(chk, k=3, n=7, cfg=None):
    """
    phi and psi characterise the avoiders, invert, and keep descent sets
    """
    for j in range(1, k + 1):
        for m in range(1, n + 1):
            perms = list(iterate_permutations(m, cfg=cfg))
            in_two = avoider_mask(m, avoidance.pi_partial(j, 2), cfg=cfg)
            in_one = avoider_mask(m, avoidance.pi_partial(j, 1), cfg=cfg)
            images = {}
            for sigma, a2, a1 in zip(perms, in_two, in_one):
                chk.check(bool(a2) == bijections.in_pi_k2_by_structure(sigma, j),
                          ('structure-2', j, sigma))
                chk.check(bool(a1) == bijections.in_pi_k1_by_structure(sigma, j),
                          ('structure-1', j, sigma))
                for which, avoids, fwd, back in (
                        (2, a2, bijections.phi, bijections.phi_inverse),
                        (1, a1, bijections.psi, bijections.psi_inverse)):
                    if not avoids:
                        continue
                    xi = fwd(sigma, j)
                    images.setdefault(which, set()).add(xi)
                    chk.check(back(xi, j) == sigma, ('inverse', which, j, sigma))
                    chk.check(masked_descents(xi) == descent_set(sigma),
                              ('descents', which, j, sigma))
            chk.check(len(images.get(2, ())) == int(in_two.sum()),
                      ('phi-injective', j, m))
            chk.check(len(images.get(1, ())) == int(in_one.sum()),
                      ('psi-injective', j, m))
            chk.check(images.get(2) == images.get(1), ('images', j, m))


@claim('remark-pi-a')
def _check_pi_a(chk, k=3, n=8, cfg=None):
    """
    Evidence only: Q_n(Pi(a)) matches the partial-shuffle formula for every a
    """
    for j in range(1, k + 1):
        for a in range(1, j + 3):
            Pi = avoidance.pi_general(a, j)
            for m in range(n + 1):
                chk.check(schur_expand(qn(Pi, m, cfg=cfg)) ==
                          avoidance.ps_rhs(m, j), (a, j, m))
    return {'evidence_only': True}


# Pattern-Knuth closure

@claim('prop-union')
def _check_union(chk, n=4, cfg=None):
    """
    Unions of pattern-Knuth closed sets are pattern-Knuth closed
    """
    family = []
    for m in range(2, n + 1):
        for P in all_syt(m):
            if is_superstandard_hook(P):
                family.append(patternSet(knuth_class(P, cfg=cfg)))
        family += [patternSet([iota(m)]), patternSet([delta(m)])]
    closed = [Pi for Pi in family
              if closure.is_pattern_knuth_closed(Pi, cfg=cfg).holds]
    chk.check(len(closed) == len(family), 'family')
    for A, B in itertools.combinations(closed, 2):
        chk.check(closure.is_pattern_knuth_closed(A | B, cfg=cfg).holds, (A, B))


@claim('lemma-uid')
def _check_uid(chk, n=8, cfg=None):
    """
    An increasing sequence of length a merged with a decreasing one of length
    b has shape (a,1^b), (a+1,1^(b-1)) or (a,2,1^(b-2))
    """
    def splits(word):
        # (a, b) for every split of word into increasing and decreasing parts
        out = set()

        def grow(i, last_inc, last_dec, a):
            if i == len(word):
                out.add((a, len(word) - a))
                return
            v = word[i]
            if v > last_inc:
                grow(i + 1, v, last_dec, a + 1)
            if v < last_dec:
                grow(i + 1, last_inc, v, a)

        grow(0, 0, len(word) + 1, 0)
        return out

    for m in range(2, n + 1):
        for sigma in iterate_permutations(m, cfg=cfg):
            shape = p_tableau(sigma).shape
            for a, b in splits(sigma.word):
                if a < 1 or b < 1:
                    continue
                allowed = [(a,) + (1,)*b, (a + 1,) + (1,)*(b - 1)]
                if a >= 2 and b >= 2:
                    allowed.append((a, 2) + (1,)*(b - 2))
                chk.check(shape in allowed, (sigma, a, b))
    smallest = permutation((6, 5, 1, 2, 7, 8, 4, 3))
    chk.check(p_tableau(smallest).shape == (4, 2, 1, 1), smallest)


@claim('thm-pkc-shape')
def _check_pkc_shape(chk, n=7, a=None, b=None, cfg=None):
    """
    K(a,1^b) with K(a,2,1^(b-1)) is pattern-Knuth closed with Q_n the sum of
    f^lambda s_lambda over shapes avoiding (a,1^b)
    """
    cases = parameter_pair(('a', 'b'), (a, b), PKC_SHAPE_CASES)
    for aa, bb in cases:
        Pi = avoidance.pkc_shape_patterns(aa, bb, cfg=cfg)
        chk.check(closure.is_pattern_knuth_closed(Pi, cfg=cfg).holds,
                  ('closed', aa, bb))
        for m in range(n + 1):
            chk.check(schur_expand(qn(Pi, m, cfg=cfg)) ==
                      avoidance.pkc_shape_rhs(m, aa, bb), (aa, bb, m))


@claim('lemma-ssh')
def _check_ssh(chk, n=6, cfg=None):
    """
    K(S) = D_J^{-1} iff J is an interval at either end iff S is a
    superstandard hook
    """
    for m in range(1, n + 1):
        for S in all_syt(m):
            J = des_tableau(S)
            whole = knuth_class(S, cfg=cfg) == closure.d_j_inverse(m, J, cfg=cfg)
            interval = whole and closure.is_interval_form(J, m)
            chk.check(whole == interval == is_superstandard_hook(S), S)


@claim('lemma-swap-union')
def _check_swap_union(chk, n=5, cfg=None):
    """
    A set is swap closed iff it is a union of D_J^{-1} sets
    """
    for m in range(1, n + 1):
        for J in itertools.chain.from_iterable(
                itertools.combinations(range(1, m), size) for size in range(m)):
            target = closure.d_j_inverse(m, J, cfg=cfg)
            chk.check(closure.swap_class(closure.pi_j(J, m)) == target,
                      ('pi_J', m, J))
        if m <= 3:
            members = [permutation(row) for row in all_permutations(m)]
            candidates = (patternSet(c) for size in range(1, len(members) + 1)
                          for c in itertools.combinations(members, size))
        else:
            candidates = (Pi for _, Pi in knuth_unions(m, cfg=cfg))
        for Pi in candidates:
            chk.check(closure.is_swap_closed(Pi).holds ==
                      closure.is_union_of_d_j(Pi, cfg=cfg), Pi)


@claim('thm-swap-closed')
def _check_swap_closed(chk, n=5, cfg=None):
    """
    Pattern-Knuth closed, i-descent consistent sets are swap closed and equal
    D_J^{-1}
    """
    for m in range(1, n + 1):
        by_des = collections.defaultdict(list)
        for S in all_syt(m):
            by_des[des_tableau(S)].append(S)
        for J, group in sorted(by_des.items(), key=lambda kv: sorted(kv[0])):
            for size in range(1, len(group) + 1):
                for chosen in itertools.combinations(group, size):
                    Pi = patternSet(itertools.chain.from_iterable(
                        knuth_class(S, cfg=cfg) for S in chosen))
                    if not closure.is_pattern_knuth_closed(Pi, cfg=cfg).holds:
                        continue
                    chk.check(closure.is_swap_closed(Pi).holds and
                              set(Pi.patterns) ==
                              closure.d_j_inverse(m, J, cfg=cfg), chosen)


@claim('lemma-4points')
def _check_4points(chk, n=6, cfg=None):
    """
    With m-3, m-1, m, m-2 in that order, deleting x keeps the i-descents of
    deleting m-2 only for x = m-2
    """
    for size in range(4, n + 1):
        for pi in iterate_permutations(size, cfg=cfg):
            pos = {v: i for i, v in enumerate(pi.word)}
            for m in range(4, size + 1):
                if not pos[m - 3] < pos[m - 1] < pos[m] < pos[m - 2]:
                    continue
                target = ides(delete_value(pi, m - 2))
                for x in range(1, size + 1):
                    chk.check((ides(delete_value(pi, x)) == target) ==
                              (x == m - 2), (pi, m, x))


def _closed(Pi, cfg):
    return closure.is_pattern_knuth_closed(Pi, cfg=cfg).holds


@claim('lemma-swpright')
def _check_swpright(chk, n=4, cfg=None):
    """
    In a pattern-Knuth closed set avoiding the i-descent n-1, n may always be
    swapped right
    """
    for m in range(2, n + 1):
        for chosen, Pi in knuth_unions(m, cfg=cfg):
            if any(m - 1 in ides(pi) for pi in Pi) or not _closed(Pi, cfg):
                continue
            for pi in Pi:
                chk.check(move_max_right(pi) in Pi, (chosen, pi))


@claim('lemma-pkcinduct')
def _check_pkcinduct(chk, n=5, cfg=None):
    """
    If n can always be moved to an end inside a pattern-Knuth closed set, the
    set with n deleted is pattern-Knuth closed
    """
    for m in range(2, n + 1):
        for chosen, Pi in knuth_unions(m, cfg=cfg):
            if not all(move_max_to_end(pi) in Pi or move_max_to_front(pi) in Pi
                       for pi in Pi):
                continue
            if not _closed(Pi, cfg):
                continue
            hat = patternSet(delete_value(pi, m) for pi in Pi)
            chk.check(_closed(hat, cfg), chosen)


@claim('lemma-rs-ds')
def _check_rs_ds(chk, n=6, cfg=None):
    """
    For S in SYT(n): some member of K(S) ends in n iff deleting n commutes
    with K and n is in the top row iff moving n to the end stays in K(S)
    """
    for m in range(1, n + 1):
        for S in all_syt(m):
            K = knuth_class(S, cfg=cfg)
            first = any(pi.word[-1] == m for pi in K)
            second = (S.position(m)[0] == 1 and
                      knuth_class(delete_max(S), cfg=cfg) ==
                      frozenset(delete_value(pi, m) for pi in K))
            third = all(move_max_to_end(sigma) in K for sigma in K)
            chk.check(first == second == third, S)
    for m in range(1, n + 1):
        for sigma in iterate_permutations(m, cfg=cfg):
            chk.check(p_tableau(delete_value(sigma, m)) ==
                      delete_max(p_tableau(sigma)), sigma)


@claim('lemma-pairs-hooks')
def _check_pairs_hooks(chk, n=4, cfg=None):
    """
    Hook tableaux whose n-deletions are superstandard hooks and whose classes
    form a pattern-Knuth closed union are superstandard
    """
    for m in range(1, n + 1):
        hooks = [S for S in all_syt(m) if is_hook(S.shape) and
                 is_superstandard_hook(delete_max(S))]
        for S, T in itertools.combinations(hooks, 2):
            Pi = patternSet(knuth_class(S, cfg=cfg) | knuth_class(T, cfg=cfg))
            if _closed(Pi, cfg):
                chk.check(is_superstandard_hook(S) and is_superstandard_hook(T),
                          (S, T))


@claim('lemma-1n')
def _check_1n(chk, n=5, cfg=None):
    """
    Under the descent hypotheses a closed union K(S) with K(T) has a member
    of K(S) ending in n and one of K(T) starting with n
    """
    for m in range(4, n + 1):
        tabs = all_syt(m)
        closed = {}
        for S, T in itertools.permutations(tabs, 2):
            dS, dT = des_tableau(S), des_tableau(T)
            if m - 1 in dS or m - 1 not in dT or 1 not in dS ^ dT:
                continue
            key = frozenset((S, T))
            if key not in closed:
                closed[key] = _closed(patternSet(knuth_class(S, cfg=cfg) |
                                                 knuth_class(T, cfg=cfg)), cfg)
            if not closed[key]:
                continue
            chk.check(any(pi.word[-1] == m for pi in knuth_class(S, cfg=cfg)) and
                      any(pi.word[0] == m for pi in knuth_class(T, cfg=cfg)),
                      (S, T))


@claim('lemma-doubles')
def _check_doubles(chk, n=6, cfg=None):
    """
    The displayed pair families are exactly the i-descent-complete pairs
    """
    for m in range(4, n + 1):
        built = closure.descent_complete_pairs(m)
        found = closure.descent_complete_pairs_bruteforce(m, cfg=cfg)
        chk.check(built == found, m)


@claim('thm-single')
def _check_single(chk, n=5, cfg=None):
    """
    For a single Knuth class the four closure conditions agree
    """
    for m in range(1, n + 1):
        for S in all_syt(m):
            report = closure.classify_knuth_union([S], cfg=cfg)
            chk.check(report.holds, (S, report.details))


@claim('thm-pairs')
def _check_pairs(chk, n=5, cfg=None):
    """
    For a union of two Knuth classes the four closure conditions agree
    """
    for m in range(2, n + 1):
        for S, T in itertools.combinations(all_syt(m), 2):
            report = closure.classify_knuth_union([S, T], cfg=cfg)
            chk.check(report.holds, (S, T, report.details))


T1 = tableau([[1, 2, 4], [3]])
T2 = tableau([[1, 3, 4], [2]])
T3 = tableau([[1, 2, 3], [4]])
T4 = tableau([[1, 2], [3, 4]])


@claim('three-class-counterexample')
def _check_three_classes(chk, cfg=None):
    """
    K(T1), K(T2), K(T3) together are pattern-Knuth closed but not swap closed
    """
    Pi = patternSet(itertools.chain.from_iterable(
        knuth_class(T, cfg=cfg) for T in (T1, T2, T3)))
    pkc = closure.is_pattern_knuth_closed(Pi, cfg=cfg)
    chk.check(pkc.holds, ('pattern_knuth', pkc.witnesses))
    chk.check(not closure.is_swap_closed(Pi).holds, 'swap')
    source = permutation((3, 1, 2, 4))
    target = permutation((3, 1, 4, 2))
    chk.check(p_tableau(source) == T1, source)
    chk.check(target in closure.swap_neighbors(source), (source, target))
    chk.check(p_tableau(target) == T4 and target not in Pi, target)
    return {'swap': (source, target), 'bound_used': pkc.bound_used}


# Stability

@claim('sec6-stability')
def _check_stability(chk, n=8, cfg=None):
    """
    K(3,1,1) is closed, Q_6(Pi0) is not symmetric, S_N(Pi0) = S_N(K(3,1,1))
    first at N = 7, so Q_n(Pi0) is Schur nonnegative from n = 7 on
    """
    K311 = avoidance.shape_patterns((3, 1, 1), cfg=cfg)
    Pi0 = avoidance.pi_zero()
    pkc = closure.is_pattern_knuth_closed(K311, cfg=cfg)
    chk.check(pkc.holds and pkc.bound_used == 6, ('pattern_knuth', pkc.witnesses))
    q6_symmetric = is_symmetric(qn(Pi0, 6, cfg=cfg))
    chk.check(not q6_symmetric, 'Q_6(Pi0) symmetric')

    equal_from = None
    witnesses = {}
    for N in range(max(Pi0.max_len, K311.max_len), n + 1):
        report = closure.stability_check(Pi0, K311, N, cfg=cfg)
        if report.holds:
            equal_from = N
            break
        witnesses[N] = report.witnesses
    chk.check(equal_from == 7, ('equal_from', equal_from))
    if equal_from is not None:
        for m in range(equal_from, n + 1):
            v = schur_expand(qn(Pi0, m, cfg=cfg))
            chk.check(isinstance(v, schurVector) and is_schur_nonneg(v), m)
    return {'K311_closed_bound': pkc.bound_used,
            'Q6_symmetric': q6_symmetric,
            'equal_from': equal_from,
            'N6_witness': witnesses.get(6, [])}
