"""
Permutations, patterns and descents.

Permutations are words on [n] with 1-indexed positions and values.  The
heavy lifting (enumerating S_n, pattern containment, descent sets of every
element of S_n) is done on numpy arrays by numba kernels; the
`permutation` class is the light-weight value type used everywhere else.
"""
import bisect
import functools
import itertools
import logging
from math import factorial

import numba
import numpy as np
from scipy.special import comb

from .common import get_config, make_progress

logger = logging.getLogger(__name__)


class _infinity(object):
    """
    The symbol used for masked entries of a maskedWord

    It compares greater than every finite entry and equal to itself, so
    INF > INF is false.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __repr__(self):
        return 'INF'

    def __str__(self):
        return '*'

    def __hash__(self):
        return hash('pypaq.INF')

    def __reduce__(self):
        return (_infinity, ())


INF = _infinity()


class permutation():
    """
    A permutation of [n] in one-line notation

    Parameters
    ----------
    word : sequence of int
        The values pi_1, ..., pi_n.  Every value in 1..n must appear exactly
        once.  The empty word is the empty permutation.

    Attributes
    ----------
    word : tuple of int
        One-line notation.
    n : int
        Length of the permutation.

    Notes
    -----
    Instances are immutable and hashable, and sort lexicographically, which
    is the order used for every witness reported by pypaq.
    """
    __slots__ = ('word', 'n', '_hash')

    def __init__(self, word):
        word = tuple(int(v) for v in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError('%r is not a permutation of [%d].' %
                             (word, len(word)))
        object.__setattr__(self, 'word', word)
        object.__setattr__(self, 'n', len(word))
        object.__setattr__(self, '_hash', hash(word))

    def __setattr__(self, name, value):
        raise AttributeError('permutation is immutable.')

    @classmethod
    def parse(cls, text):
        """
        Parse the text form: a digit string such as '25143', or a comma
        separated list such as '10,2,5,...'.  The empty string is the
        empty permutation.
        """
        text = text.strip()
        if text == '':
            return cls(())
        if ',' in text:
            try:
                return cls(int(v) for v in text.split(','))
            except ValueError:
                raise ValueError('Cannot parse permutation %r.' % text)
        if not text.isdigit():
            raise ValueError('Cannot parse permutation %r.' % text)
        return cls(int(c) for c in text)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __eq__(self, other):
        if isinstance(other, permutation):
            return self.word == other.word
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, permutation):
            return NotImplemented
        return (self.n, self.word) < (other.n, other.word)

    def __le__(self, other):
        if not isinstance(other, permutation):
            return NotImplemented
        return (self.n, self.word) <= (other.n, other.word)

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self.n <= 9:
            return ''.join(str(v) for v in self.word)
        return ','.join(str(v) for v in self.word)

    def __repr__(self):
        return 'permutation(%s)' % str(self)

    def __add__(self, other):
        """
        Concatenation; the result must again be a permutation
        """
        return permutation(self.word + tuple(other))

    def array(self):
        return np.array(self.word, dtype=np.int64)

    def position(self, value):
        """
        1-indexed position of `value`
        """
        return self.word.index(value) + 1

    def inverse(self):
        inv = [0]*self.n
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return permutation(inv)

    def reverse(self):
        return permutation(self.word[::-1])

    def complement(self):
        return permutation(self.n + 1 - v for v in self.word)


def iota(n):
    """The increasing permutation of [n]."""
    return permutation(range(1, n + 1))


def delta(n):
    """The decreasing permutation of [n]."""
    return permutation(range(n, 0, -1))


def standardize(seq):
    """
    Standardize a sequence of distinct reals

    Parameters
    ----------
    seq : sequence of real
        Pairwise distinct entries (ints, Fractions or floats).

    Returns
    -------
    pi : permutation
        The permutation with the same relative order as `seq`.
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise ValueError('Cannot standardize %r: entries are not distinct.' %
                         (seq,))
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return permutation(rank[v] for v in seq)


def symmetries(sigma, which):
    """
    Apply reverse, complement or inverse

    Parameters
    ----------
    sigma : permutation
    which : str
        One of 'reverse', 'complement', 'inverse'.
    """
    if which == 'reverse':
        return sigma.reverse()
    elif which == 'complement':
        return sigma.complement()
    elif which == 'inverse':
        return sigma.inverse()
    else:
        raise ValueError('Symmetry %r not understood.' % which)


# Numba kernels.  Permutation arrays are 2D with one permutation per row.

@numba.njit(cache=True)
def _contains(word, patt, k):
    """
    Backtracking search for an occurrence of patt[:k] in word.

    Positions are chosen left to right; a partial choice is kept only if
    it is order isomorphic to the matching prefix of the pattern, and the
    search never starts a position that leaves too few entries to finish.
    """
    n = word.shape[0]
    if k == 0:
        return True
    if k > n:
        return False
    idx = np.empty(k, dtype=np.int64)
    d = 0
    idx[0] = -1
    while d >= 0:
        idx[d] += 1
        if idx[d] > n - k + d:
            d -= 1
            continue
        v = word[idx[d]]
        ok = True
        for j in range(d):
            if (word[idx[j]] < v) != (patt[j] < patt[d]):
                ok = False
                break
        if ok:
            if d == k - 1:
                return True
            d += 1
            idx[d] = idx[d - 1]
    return False


@numba.njit(parallel=True, cache=True)
def _avoid_mask(perms, patts, lens):
    out = np.ones(perms.shape[0], dtype=np.bool_)
    for r in numba.prange(perms.shape[0]):
        for p in range(patts.shape[0]):
            if _contains(perms[r], patts[p], lens[p]):
                out[r] = False
                break
    return out


@numba.njit(cache=True)
def _descent_masks(perms):
    # bit i-1 is set when i is a descent
    out = np.zeros(perms.shape[0], dtype=np.int64)
    for r in range(perms.shape[0]):
        m = 0
        for i in range(perms.shape[1] - 1):
            if perms[r, i] > perms[r, i + 1]:
                m |= 1 << i
        out[r] = m
    return out


@functools.lru_cache(maxsize=4)
def all_permutations(n):
    """
    All of S_n as an array of shape (n!, n), rows in lexicographic order

    The array is cached and shared; do not modify it.
    """
    count = factorial(n)
    logger.debug('Enumerating S_%d (%d permutations).', n, count)
    flat = itertools.chain.from_iterable(itertools.permutations(range(1, n + 1)))
    return np.fromiter(flat, dtype=np.int8, count=n*count).reshape(count, n)


def descent_masks(perms):
    """
    Descent sets of the rows of `perms` as bit masks (bit i-1 for descent i)
    """
    return _descent_masks(np.ascontiguousarray(perms))


def mask_to_set(mask):
    out = set()
    i = 1
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(positions):
    m = 0
    for i in positions:
        m |= 1 << (i - 1)
    return m


class patternSet():
    """
    A finite set of patterns

    Parameters
    ----------
    patterns : iterable of permutation (or anything `permutation` accepts)
        Members; duplicates are removed.

    Attributes
    ----------
    patterns : frozenset of permutation
    max_len : int
        Length M of the longest member, 0 for the empty set.
    """
    def __init__(self, patterns=()):
        members = set()
        for p in patterns:
            if not isinstance(p, permutation):
                p = permutation(p)
            members.add(p)
        self.patterns = frozenset(members)
        self.max_len = max((p.n for p in self.patterns), default=0)
        self._arrays = None

    def __len__(self):
        return len(self.patterns)

    def __iter__(self):
        return iter(sorted(self.patterns))

    def __contains__(self, pi):
        return pi in self.patterns

    def __eq__(self, other):
        if isinstance(other, patternSet):
            return self.patterns == other.patterns
        return NotImplemented

    def __hash__(self):
        return hash(self.patterns)

    def __or__(self, other):
        return patternSet(self.patterns | other.patterns)

    def __sub__(self, other):
        return patternSet(self.patterns - other.patterns)

    def __repr__(self):
        return 'patternSet({%s})' % ', '.join(str(p) for p in self)

    def lengths(self):
        return sorted(set(p.n for p in self.patterns))

    def apply(self, which):
        """
        Apply a symmetry ('reverse', 'complement', 'inverse') elementwise
        """
        return patternSet(symmetries(p, which) for p in self.patterns)

    def arrays(self):
        """
        Padded pattern array and the array of lengths, for the kernels
        """
        if self._arrays is None:
            width = max(self.max_len, 1)
            patts = np.zeros((len(self.patterns), width), dtype=np.int64)
            lens = np.zeros(len(self.patterns), dtype=np.int64)
            for ii, p in enumerate(sorted(self.patterns)):
                patts[ii, :p.n] = p.word
                lens[ii] = p.n
            self._arrays = (patts, lens)
        return self._arrays


def contains(sigma, pi):
    """
    Does `sigma` contain `pi` as a pattern?
    """
    return bool(_contains(sigma.array(), pi.array(), pi.n))


def contains_bruteforce(sigma, pi):
    """
    Exhaustive-subsequence oracle for `contains`
    """
    return any(standardize(sub) == pi
               for sub in itertools.combinations(sigma.word, pi.n))


def occurrence(sigma, pi):
    """
    The lexicographically first occurrence of `pi` in `sigma`, as a tuple of
    values, or None.
    """
    for positions in itertools.combinations(range(sigma.n), pi.n):
        sub = [sigma.word[i] for i in positions]
        if standardize(sub) == pi:
            return tuple(sub)
    return None


def avoider_mask(n, Pi, cfg=None):
    """
    Boolean mask over the rows of `all_permutations(n)` selecting S_n(Pi)
    """
    cfg = get_config(cfg)
    cfg.check_n(n)
    perms = all_permutations(n)
    if len(Pi) == 0:
        return np.ones(perms.shape[0], dtype=np.bool_)
    patts, lens = Pi.arrays()
    logger.debug('Filtering S_%d against %d patterns.', n, len(Pi))
    return _avoid_mask(perms, patts, lens)


def avoiders(n, Pi, complement=False, cfg=None):
    """
    The avoiders S_n(Pi), or with `complement` the containers

    Parameters
    ----------
    n : int
        Size of the symmetric group; must not exceed the enumeration bound.
    Pi : patternSet
        Patterns to avoid.  Mixed lengths are allowed.
    complement : bool, optional
        Return the complement of S_n(Pi) in S_n instead.  Default: False
    cfg : pypaq.common.config, optional

    Returns
    -------
    perms : list of permutation
        In lexicographic order.
    """
    mask = avoider_mask(n, Pi, cfg=cfg)
    if complement:
        mask = ~mask
    return [permutation(row) for row in all_permutations(n)[mask]]


def descent_set(sigma):
    """
    Positions i with sigma_i > sigma_{i+1}
    """
    w = sigma.word
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def ides(sigma):
    """
    i-descents: values a with a+1 to the left of a, i.e. Des(sigma^{-1})
    """
    pos = {v: i for i, v in enumerate(sigma.word)}
    return frozenset(a for a in range(1, sigma.n) if pos[a + 1] < pos[a])


def lis_lds(sigma):
    """
    Lengths of a longest increasing and a longest decreasing subsequence

    Uses patience sorting.
    """
    def longest(word):
        piles = []
        for v in word:
            ii = bisect.bisect_left(piles, v)
            if ii == len(piles):
                piles.append(v)
            else:
                piles[ii] = v
        return len(piles)

    return longest(sigma.word), longest([-v for v in sigma.word])


def lis_bruteforce(sigma):
    for size in range(sigma.n, 0, -1):
        for sub in itertools.combinations(sigma.word, size):
            if all(sub[i] < sub[i + 1] for i in range(size - 1)):
                return size
    return 0


class maskedWord():
    """
    A word whose entries are distinct integers or the symbol INF

    Parameters
    ----------
    entries : sequence
        Integers and INF; finite entries must be distinct.

    Notes
    -----
    `mask` keeps the original finite values; `standardize_masked` replaces
    them by 1, 2, ... in the same relative order, which is the form the
    descent-preserving bijections produce.
    """
    def __init__(self, entries):
        entries = tuple(INF if e is INF else int(e) for e in entries)
        finite = [e for e in entries if e is not INF]
        if len(set(finite)) != len(finite):
            raise ValueError('Finite entries of %r are not distinct.' %
                             (entries,))
        self.entries = entries
        self.n = len(entries)

    @classmethod
    def parse(cls, text):
        """
        Parse '**1*326' or '*,*,10,...' with '*' standing for INF
        """
        text = text.strip()
        tokens = text.split(',') if ',' in text else list(text)
        entries = []
        for tok in tokens:
            tok = tok.strip()
            if tok in ('*', 'inf', 'INF'):
                entries.append(INF)
            elif tok.isdigit():
                entries.append(int(tok))
            else:
                raise ValueError('Cannot parse masked word %r.' % text)
        return cls(entries)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if isinstance(other, maskedWord):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        finite = [e for e in self.entries if e is not INF]
        if all(e <= 9 for e in finite):
            return ''.join(str(e) for e in self.entries)
        return ','.join(str(e) for e in self.entries)

    def __repr__(self):
        return 'maskedWord(%s)' % str(self)

    def finite_positions(self):
        return [i + 1 for i, e in enumerate(self.entries) if e is not INF]

    def inf_positions(self):
        return [i + 1 for i, e in enumerate(self.entries) if e is INF]

    def descents(self):
        return masked_descents(self)


def mask(sigma, tau):
    """
    Replace the entries of the subsequence `tau` of `sigma` by INF

    Parameters
    ----------
    sigma : permutation
    tau : sequence of int
        Values of a subsequence of sigma, in the order they occur in sigma.
    """
    tau = tuple(tau)
    pos = [sigma.position(v) if v in sigma.word else None for v in tau]
    if None in pos or any(pos[i] >= pos[i + 1] for i in range(len(pos) - 1)):
        raise ValueError('%r is not a subsequence of %s.' % (tau, sigma))
    hidden = set(tau)
    return maskedWord(INF if v in hidden else v for v in sigma.word)


def standardize_masked(xi):
    """
    Replace the finite entries of xi by 1, 2, ... keeping their relative order

    Descents are unchanged.
    """
    finite = sorted(e for e in xi if e is not INF)
    rank = {v: i + 1 for i, v in enumerate(finite)}
    return maskedWord(INF if e is INF else rank[e] for e in xi)


def masked_descents(xi):
    """
    Positions i with INF >= xi_i > xi_{i+1}

    An INF followed by a finite entry is a descent; two consecutive INF
    entries are not.
    """
    e = xi.entries
    return frozenset(i + 1 for i in range(len(e) - 1) if e[i] > e[i + 1])


def _longest_ending(word):
    # longest increasing subsequence ending at each position
    ends = []
    for j, v in enumerate(word):
        ends.append(1 + max((ends[i] for i in range(j) if word[i] < v),
                            default=0))
    return ends


def k_endpoints(sigma, k):
    """
    1-indexed positions j such that an occurrence of iota_k ends at j
    """
    if k < 1:
        raise ValueError('k must be positive, not %d.' % k)
    ends = _longest_ending(sigma.word)
    return frozenset(j + 1 for j, length in enumerate(ends) if length >= k)


def rt_decomposition(sigma, k):
    """
    Split the k-endpoints of `sigma` into r(sigma) and t(sigma)

    Returns
    -------
    r : tuple of int
        Left-to-right minima of the subsequence of k-endpoints.
    t : tuple of int
        The remaining k-endpoints; these are exactly the (k+1)-endpoints.
    blocks : list of tuple of int
        t cut into t_1, ..., t_s, where t_i holds the entries lying between
        r_i and r_{i+1} (t_s: right of r_s).
    """
    positions = sorted(k_endpoints(sigma, k))
    r, t, blocks = [], [], []
    current_min = None
    for j in positions:
        v = sigma.word[j - 1]
        if current_min is None or v < current_min:
            current_min = v
            r.append(v)
            blocks.append([])
        else:
            t.append(v)
            blocks[-1].append(v)
    return tuple(r), tuple(t), [tuple(b) for b in blocks]


def shuffle_set(u, v):
    """
    All interleavings of the words u and v preserving their internal orders

    Returns
    -------
    words : frozenset of tuple of int
    """
    u, v = tuple(u), tuple(v)
    if set(u) & set(v):
        raise ValueError('Words %r and %r share values.' % (u, v))
    n = len(u) + len(v)
    out = set()
    for slots in itertools.combinations(range(n), len(u)):
        word = [None]*n
        ui = iter(u)
        vi = iter(v)
        chosen = set(slots)
        for i in range(n):
            word[i] = next(ui) if i in chosen else next(vi)
        out.add(tuple(word))
    assert len(out) == comb(n, len(u), exact=True)
    return frozenset(out)


def partial_shuffle(u, a):
    """
    The partial shuffle u (shuffled with the letter a) minus the identity

    Parameters
    ----------
    u : sequence of int
        A word with u together with a making up [n].
    a : int
        The inserted letter.
    """
    u = tuple(u)
    if a in u:
        raise ValueError('Letter %d already occurs in %r.' % (a, u))
    n = len(u) + 1
    if set(u) | {a} != set(range(1, n + 1)):
        raise ValueError('%r together with %d is not [%d].' % (u, a, n))
    words = shuffle_set(u, (a,))
    return patternSet(permutation(w) for w in words) - patternSet([iota(n)])


def add_value(pi, m, position, sign=+1):
    """
    Add m^+ (sign=+1) or m^- (sign=-1) to pi so that it lands in `position`

    Parameters
    ----------
    pi : permutation
    m : int
    position : int
        1-indexed position of the new entry in the result.
    sign : int, optional
        +1 for m + 1/2, -1 for m - 1/2.

    Returns
    -------
    sigma : permutation
        The standardized result, of length n+1.
    """
    if not 1 <= position <= pi.n + 1:
        raise ValueError('Position %d out of range for length %d.' %
                         (position, pi.n))
    new = 2*m + (1 if sign > 0 else -1)
    word = [2*v for v in pi.word]
    word.insert(position - 1, new)
    return standardize(word)


def move_max_right(pi):
    """
    Swap n with its right neighbour unless that neighbour is n-1 or n is last
    """
    w = list(pi.word)
    i = w.index(pi.n)
    if i == len(w) - 1 or w[i + 1] == pi.n - 1:
        return pi
    w[i], w[i + 1] = w[i + 1], w[i]
    return permutation(w)


def move_max_left(pi):
    w = list(pi.word)
    i = w.index(pi.n)
    if i == 0 or w[i - 1] == pi.n - 1:
        return pi
    w[i], w[i - 1] = w[i - 1], w[i]
    return permutation(w)


def move_max_to_end(pi):
    """
    Remove n and place it at the right end
    """
    w = [v for v in pi.word if v != pi.n]
    return permutation(w + [pi.n])


def move_max_to_front(pi):
    w = [v for v in pi.word if v != pi.n]
    return permutation([pi.n] + w)


def iterate_permutations(n, cfg=None, progress_bar=False):
    """
    Yield the elements of S_n as permutations, in lexicographic order
    """
    get_config(cfg).check_n(n)
    progress = make_progress(factorial(n), progress_bar, prefix='S_%d:' % n)
    for row in all_permutations(n):
        progress.advance()
        yield permutation(row)
