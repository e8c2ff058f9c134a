"""
Partitions, standard Young tableaux and the Robinson-Schensted correspondence.

Partitions are tuples of positive ints in weakly decreasing order.  Cells
are addressed as (row, column), both 1-indexed.
"""
import bisect
import collections
import functools
import json
import logging
from math import factorial, prod

from sympy.utilities.iterables import partitions as _sympy_partitions

from .common import get_config
from .permutations import permutation, standardize, all_permutations

logger = logging.getLogger(__name__)

tableauPair = collections.namedtuple('tableauPair', ['P', 'Q'])


def check_partition(lam):
    lam = tuple(int(p) for p in lam)
    if any(p < 1 for p in lam):
        raise ValueError('Partition %r has non-positive parts.' % (lam,))
    for i in range(len(lam) - 1):
        if lam[i + 1] > lam[i]:
            raise ValueError('Partition %r is not in decreasing order.' % (lam,))
    return lam


def parse_partition(text):
    """
    Parse '3,1,1' (or '311' for single-digit parts) into a partition

    A digit string whose digits do not form a partition is read as a single
    part, so '12' is (12,) while '11' stays (1,1); write '11,' for (11,).
    """
    text = text.strip().strip('()')
    if text == '':
        return ()
    if ',' in text:
        parts = [p for p in text.split(',') if p.strip()]
    else:
        parts = list(text)
        digits = [int(p) for p in parts if p.isdigit()]
        if (len(digits) == len(parts) and
                (0 in digits or digits != sorted(digits, reverse=True))):
            parts = [text]
    try:
        return check_partition(int(p) for p in parts)
    except ValueError:
        raise ValueError('Cannot parse partition %r.' % text)


@functools.lru_cache(maxsize=None)
def partitions(n):
    """
    All partitions of n, in lexicographically decreasing order
    """
    if n == 0:
        return ((),)
    out = []
    for p in _sympy_partitions(n):
        # sympy reuses the dictionary it yields
        out.append(tuple(sorted((k for k, m in p.items() for _ in range(m)),
                                reverse=True)))
    return tuple(sorted(out, reverse=True))


def transpose(lam):
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def shape_contains(lam, mu):
    """
    True iff the diagram of mu fits inside the diagram of lam
    """
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def has_cell(lam, i, j):
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def is_hook(lam):
    return len(lam) <= 1 or lam[1] <= 1


def hook_lengths(lam):
    """
    Hook length of every cell, as a list of rows
    """
    lt = transpose(lam)
    return [[(lam[i] - j - 1) + (lt[j] - i - 1) + 1 for j in range(lam[i])]
            for i in range(len(lam))]


@functools.lru_cache(maxsize=None)
def f_lambda(lam):
    """
    Number of standard Young tableaux of shape lam, by the hook-length formula
    """
    lam = check_partition(lam)
    n = sum(lam)
    return factorial(n)//prod(h for row in hook_lengths(lam) for h in row)


class tableau():
    """
    A standard Young tableau

    Parameters
    ----------
    rows : sequence of sequence of int
        Rows from top to bottom.

    Attributes
    ----------
    rows : tuple of tuple of int
    shape : tuple of int
    n : int
        Number of cells.

    Raises
    ------
    ValueError
        If the rows do not form a standard Young tableau.  The message names
        the row and column of the first violation.
    """
    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        rows = tuple(row for row in rows if row)
        shape = tuple(len(row) for row in rows)
        try:
            check_partition(shape)
        except ValueError:
            raise ValueError('Row lengths %r do not form a partition.' % (shape,))
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if j > 0 and row[j - 1] >= v:
                    raise ValueError('Row %d is not increasing at column %d.' %
                                     (i + 1, j + 1))
                if i > 0 and rows[i - 1][j] >= v:
                    raise ValueError('Column %d is not increasing at row %d.' %
                                     (j + 1, i + 1))
        n = sum(shape)
        if sorted(v for row in rows for v in row) != list(range(1, n + 1)):
            raise ValueError('Entries are not exactly 1..%d.' % n)

        self.rows = rows
        self.shape = shape
        self.n = n

    @classmethod
    def parse(cls, text):
        """
        Parse rows separated by newlines (or '/'), entries by spaces
        """
        text = text.strip()
        lines = text.replace('/', '\n').splitlines()
        rows = []
        for ii, line in enumerate(lines):
            tokens = line.replace(',', ' ').split()
            if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
                tokens = list(tokens[0])
            try:
                rows.append([int(t) for t in tokens])
            except ValueError:
                raise ValueError('Cannot parse row %d of tableau: %r.' %
                                 (ii + 1, line))
        return cls(rows)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        P = cls(data['rows'])
        if 'shape' in data and tuple(data['shape']) != P.shape:
            raise ValueError('Declared shape %r does not match rows %r.' %
                             (tuple(data['shape']), P.shape))
        return P

    def to_json(self):
        return {'shape': list(self.shape), 'rows': [list(r) for r in self.rows]}

    def __eq__(self, other):
        if isinstance(other, tableau):
            return self.rows == other.rows
        return NotImplemented

    def __lt__(self, other):
        return ((self.n, self.shape, self.rows) <
                (other.n, other.shape, other.rows))

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return '\n'.join(' '.join(str(v) for v in row) for row in self.rows)

    def __repr__(self):
        return 'tableau(%s)' % '/'.join(' '.join(str(v) for v in row)
                                        for row in self.rows)

    def entry(self, i, j):
        return self.rows[i - 1][j - 1]

    def position(self, value):
        """
        (row, column) of `value`, 1-indexed
        """
        for i, row in enumerate(self.rows):
            if value in row:
                return i + 1, row.index(value) + 1
        raise ValueError('%d could not be found in tableau.' % value)

    def transpose(self):
        lt = transpose(self.shape)
        return tableau([[self.rows[i][j] for i in range(lt[j])]
                        for j in range(len(lt))])


def _add_cell(lam, i):
    lam = list(lam)
    if i == len(lam):
        lam.append(1)
    else:
        lam[i] += 1
    return tuple(lam)


@functools.lru_cache(maxsize=64)
def syt_enumerate(lam):
    """
    All standard Young tableaux of shape lam, sorted

    The largest entry always sits in a removable corner, so SYT(lam) is
    built from SYT(lam minus a corner).
    """
    lam = check_partition(lam)
    if sum(lam) == 0:
        return (tableau(()),)
    n = sum(lam)
    out = []
    for i in range(len(lam)):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if lam[i] > below:
            smaller = list(lam)
            smaller[i] -= 1
            smaller = tuple(p for p in smaller if p > 0)
            for T in syt_enumerate(smaller):
                rows = [list(r) for r in T.rows]
                if i == len(rows):
                    rows.append([])
                rows[i].append(n)
                out.append(tableau(rows))
    out.sort()
    assert len(out) == f_lambda(lam)
    return tuple(out)


def des_tableau(Q):
    """
    Descent set of a tableau: i such that i+1 lies in a lower row than i
    """
    return frozenset(i for i in range(1, Q.n)
                     if Q.position(i + 1)[0] > Q.position(i)[0])


def _insert(P, Q, x, k):
    # row insertion of x into P, recording k in Q; rows are mutable lists
    for i in range(len(P)):
        row = P[i]
        jj = bisect.bisect_right(row, x)
        if jj == len(row):
            row.append(x)
            Q[i].append(k)
            return
        row[jj], x = x, row[jj]
    P.append([x])
    Q.append([k])


def rs(sigma):
    """
    Robinson-Schensted by row insertion

    Returns
    -------
    pair : tableauPair
        Insertion tableau P and recording tableau Q.
    """
    P, Q = [], []
    for k, x in enumerate(sigma.word):
        _insert(P, Q, x, k + 1)
    return tableauPair(tableau(P), tableau(Q))


def rs_inverse(P, Q=None):
    """
    Inverse Robinson-Schensted

    Parameters
    ----------
    P : tableau or tableauPair
    Q : tableau, optional
        Required unless P is a tableauPair.
    """
    if Q is None:
        P, Q = P
    if P.shape != Q.shape:
        raise ValueError('Shapes %r and %r of P and Q differ.' %
                         (P.shape, Q.shape))
    rows = [list(r) for r in P.rows]
    word = [0]*P.n
    for k in range(P.n, 0, -1):
        i = Q.position(k)[0] - 1
        x = rows[i].pop()
        for ii in range(i - 1, -1, -1):
            row = rows[ii]
            jj = bisect.bisect_left(row, x) - 1
            row[jj], x = x, row[jj]
        word[k - 1] = x
        while rows and not rows[-1]:
            rows.pop()
    return permutation(word)


def p_tableau(sigma):
    return rs(sigma).P


def shape_of(sigma):
    return p_tableau(sigma).shape


def row_word(P):
    """
    Rows read bottom to top, each left to right
    """
    return permutation(v for row in reversed(P.rows) for v in row)


def column_word(P):
    """
    Columns read left to right, each bottom to top
    """
    T = P.transpose()
    return permutation(v for col in T.rows for v in reversed(col))


def knuth_neighbors(sigma):
    """
    Permutations one Knuth move away from sigma

    acb <-> cab swaps the first two letters of a factor whose third letter
    lies between them; bac <-> bca swaps the last two letters of a factor
    whose first letter lies between them.
    """
    w = sigma.word
    out = set()
    for i in range(len(w) - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if min(x, y) < z < max(x, y):
            out.add(permutation(w[:i] + (y, x, z) + w[i + 3:]))
        if min(y, z) < x < max(y, z):
            out.add(permutation(w[:i] + (x, z, y) + w[i + 3:]))
    return frozenset(out)


def knuth_equivalent(sigma, tau):
    return sigma.n == tau.n and p_tableau(sigma) == p_tableau(tau)


def knuth_component(sigma):
    """
    Breadth first search over Knuth moves starting from sigma
    """
    seen = {sigma}
    queue = collections.deque([sigma])
    while queue:
        current = queue.popleft()
        for nb in knuth_neighbors(current):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return frozenset(seen)


def knuth_class(P, cfg=None):
    """
    K(P): all permutations with insertion tableau P

    Enumerated as the Knuth-move component of the row word of P.
    """
    get_config(cfg).check_n(P.n)
    K = knuth_component(row_word(P))
    assert len(K) == f_lambda(P.shape)
    return K


def knuth_class_by_filter(P):
    """
    K(P) by filtering S_n; slow, used to cross-check `knuth_class`
    """
    return frozenset(s for s in (permutation(row) for row in
                                 all_permutations(P.n))
                     if p_tableau(s) == P)


def knuth_class_shape(lam, cfg=None):
    """
    K(lam): all permutations whose insertion tableau has shape lam
    """
    lam = check_partition(lam)
    get_config(cfg).check_n(sum(lam))
    out = set()
    for P in syt_enumerate(lam):
        out |= knuth_class(P, cfg=cfg)
    assert len(out) == f_lambda(lam)**2
    logger.debug('K(%s) has %d elements.', lam, len(out))
    return frozenset(out)


def superstandard(lam, orient='row'):
    """
    Fill the rows (orient='row') or columns (orient='col') of lam
    consecutively with 1..n
    """
    lam = check_partition(lam)
    if orient == 'row':
        rows, start = [], 1
        for p in lam:
            rows.append(list(range(start, start + p)))
            start += p
        return tableau(rows)
    elif orient == 'col':
        return superstandard(transpose(lam), 'row').transpose()
    else:
        raise ValueError('orient must be row or col, not %r.' % orient)


def is_superstandard_hook(P):
    if not is_hook(P.shape):
        return False
    return P in (superstandard(P.shape, 'row'), superstandard(P.shape, 'col'))


def has_ascending(P, r, s):
    """
    Is there an (r,s)-ascending sequence in P?

    That is s increasing entries, the first at cell (1, r), lying in strictly
    increasing rows.
    """
    if r < 1 or s < 1:
        raise ValueError('r and s must be positive, got r=%d, s=%d.' % (r, s))
    if not has_cell(P.shape, 1, r):
        return False
    # longest chain starting from each cell, rows processed bottom up
    best = [[1]*len(row) for row in P.rows]
    for i in range(len(P.rows) - 2, -1, -1):
        for j, v in enumerate(P.rows[i]):
            best[i][j] = 1 + max((best[ii][jj]
                                  for ii in range(i + 1, len(P.rows))
                                  for jj, w in enumerate(P.rows[ii]) if w > v),
                                 default=0)
    return best[0][r - 1] >= s


def av_tableaux(n, r, s):
    """
    Shape counts of the tableaux in SYT(n) without an (r,s)-ascending sequence

    Returns
    -------
    counts : collections.Counter
        Maps each shape to the number of such tableaux of that shape.
    """
    counts = collections.Counter()
    for lam in partitions(n):
        for P in syt_enumerate(lam):
            if not has_ascending(P, r, s):
                counts[lam] += 1
    return counts


def delete_max(P):
    """
    Remove the cell containing n
    """
    return tableau([[v for v in row if v != P.n] for row in P.rows])


def delete_value(sigma, m):
    """
    Remove the value m from sigma and standardize
    """
    if m not in sigma.word:
        raise ValueError('%d does not occur in %s.' % (m, sigma))
    return standardize(v for v in sigma.word if v != m)
