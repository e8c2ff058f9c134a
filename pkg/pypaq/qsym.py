"""
Homogeneous quasisymmetric functions in the fundamental (F) and monomial (M)
bases, symmetric functions in the Schur basis, and conversions between them.

All coefficients are Python ints, so arithmetic is exact.  Compositions are
tuples of positive ints; the canonical order of indices is lexicographic
with the larger first part earlier.
"""
import functools
import itertools
import json
import logging

import sympy
from sympy.utilities.iterables import multiset_permutations

from . import tableaux

logger = logging.getLogger(__name__)


def check_composition(alpha):
    alpha = tuple(int(p) for p in alpha)
    if any(p < 1 for p in alpha):
        raise ValueError('Composition %r has non-positive parts.' % (alpha,))
    return alpha


@functools.lru_cache(maxsize=None)
def compositions(n):
    """
    All compositions of n in canonical order
    """
    if n == 0:
        return ((),)
    out = [set_to_comp(S, n) for size in range(n)
           for S in itertools.combinations(range(1, n), size)]
    return tuple(sorted(out, reverse=True))


def comp_to_set(alpha):
    """
    Interior prefix sums {a_1, a_1 + a_2, ...} of alpha
    """
    alpha = check_composition(alpha)
    sums = list(itertools.accumulate(alpha))
    return frozenset(sums[:-1])


def set_to_comp(S, n):
    S = sorted(S)
    if any(not 1 <= s <= n - 1 for s in S):
        raise ValueError('%r is not a subset of [%d].' % (S, n - 1))
    cuts = [0] + S + [n]
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)) if n else ()


def refines(beta, alpha):
    """
    Is beta a refinement of alpha?
    """
    if sum(beta) != sum(alpha):
        raise ValueError('%r and %r have different sizes.' % (beta, alpha))
    return comp_to_set(alpha) <= comp_to_set(beta)


class _homogeneous(object):
    """
    Exact-integer coefficient map of a fixed degree

    Subclasses set `basis` and `_check_index`.  Zero coefficients are never
    stored.
    """
    basis = None

    def __init__(self, degree, coeffs=None):
        self.degree = int(degree)
        self.coeffs = {}
        for index, c in (coeffs or {}).items():
            index = self._check_index(index)
            if sum(index) != self.degree:
                raise ValueError('Index %r does not have degree %d.' %
                                 (index, self.degree))
            c = int(c)
            if c:
                self.coeffs[index] = self.coeffs.get(index, 0) + c
                if self.coeffs[index] == 0:
                    del self.coeffs[index]

    @staticmethod
    def _check_index(index):
        return check_composition(index)

    def _new(self, coeffs):
        return type(self)(self.degree, coeffs)

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError('Cannot combine %s with %s.' %
                            (type(self).__name__, type(other).__name__))
        if other.degree != self.degree:
            raise ValueError('Degrees %d and %d differ.' %
                             (self.degree, other.degree))

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return self._new({k: c for k, c in out.items() if c})

    def __neg__(self):
        return self._new({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return self._new({k: scalar*c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is type(self):
            return self.degree == other.degree and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.basis, self.degree, frozenset(self.coeffs.items())))

    def __getitem__(self, index):
        return self.coeffs.get(tuple(index), 0)

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def items(self):
        """
        (index, coefficient) pairs in canonical order
        """
        return sorted(self.coeffs.items(), reverse=True)

    def mass(self):
        return sum(self.coeffs.values())

    def to_json(self):
        return {'degree': self.degree, 'basis': self.basis,
                'terms': [{'index': list(k), 'coeff': c}
                          for k, c in self.items()]}

    def __str__(self):
        if not self.coeffs:
            return '0'
        return ' '.join('(%s):%d' % (','.join(str(p) for p in k), c)
                        for k, c in self.items())

    def __repr__(self):
        return '%s(%d, {%s})' % (type(self).__name__, self.degree,
                                 ', '.join('%r: %d' % kc for kc in self.items()))


class qsymF(_homogeneous):
    """
    A quasisymmetric function in the fundamental basis

    Parameters
    ----------
    degree : int
    coeffs : dict, optional
        Maps compositions of `degree` to integer coefficients.
    """
    basis = 'F'

    @classmethod
    def from_set(cls, S, n, coeff=1):
        """
        coeff * F_S for a subset S of [n-1]
        """
        return cls(n, {set_to_comp(S, n): coeff})

    def set_items(self):
        """
        (subset, coefficient) pairs, indices translated to subsets of [n-1]
        """
        return [(comp_to_set(k), c) for k, c in self.items()]


class qsymM(_homogeneous):
    """
    A quasisymmetric function in the monomial basis
    """
    basis = 'M'


class schurVector(_homogeneous):
    """
    A symmetric function in the Schur basis

    Parameters
    ----------
    degree : int
    coeffs : dict, optional
        Maps partitions of `degree` to integer coefficients.
    """
    basis = 's'

    @staticmethod
    def _check_index(index):
        return tableaux.check_partition(index)

    @property
    def symmetric(self):
        return True


class notSymmetric(object):
    """
    Outcome of a Schur extraction that left a nonzero remainder

    Attributes
    ----------
    residue : qsymF
        What is left after peeling off every Schur function.
    """
    symmetric = False

    def __init__(self, residue):
        self.residue = residue
        self.degree = residue.degree

    def __eq__(self, other):
        if isinstance(other, notSymmetric):
            return self.residue == other.residue
        return NotImplemented

    def __hash__(self):
        return hash(('notSymmetric', self.residue))

    def __str__(self):
        return 'NOT SYMMETRIC residue: %s' % self.residue

    def __repr__(self):
        return 'notSymmetric(%r)' % (self.residue,)

    def to_json(self):
        return {'degree': self.degree, 'symmetric': False,
                'residue': self.residue.to_json()}


_BASES = {'F': qsymF, 'M': qsymM, 's': schurVector}


def from_json(data):
    """
    Rebuild a qsymF, qsymM or schurVector from its JSON form
    """
    if isinstance(data, str):
        data = json.loads(data)
    try:
        cls = _BASES[data['basis']]
    except KeyError:
        raise ValueError('Unknown basis %r.' % data.get('basis'))
    coeffs = {}
    for term in data['terms']:
        index = tuple(term['index'])
        if index in coeffs:
            raise ValueError('Index %r repeated.' % (index,))
        coeffs[index] = term['coeff']
    return cls(data['degree'], coeffs)


def f_to_m(q):
    """
    F_alpha = sum of M_beta over the refinements beta of alpha
    """
    out = {}
    for alpha, c in q.coeffs.items():
        S = comp_to_set(alpha)
        rest = sorted(set(range(1, q.degree)) - S)
        for size in range(len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                beta = set_to_comp(S | set(extra), q.degree)
                out[beta] = out.get(beta, 0) + c
    return qsymM(q.degree, {k: c for k, c in out.items() if c})


def m_to_f(q):
    """
    Inverse of `f_to_m`: the unitriangular system is solved by inclusion
    and exclusion over refinements.
    """
    out = {}
    for alpha, c in q.coeffs.items():
        S = comp_to_set(alpha)
        rest = sorted(set(range(1, q.degree)) - S)
        for size in range(len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                beta = set_to_comp(S | set(extra), q.degree)
                out[beta] = out.get(beta, 0) + (-1)**size*c
    return qsymF(q.degree, {k: c for k, c in out.items() if c})


def rearrangements(lam):
    """
    All distinct compositions rearranging the parts of lam
    """
    return [tuple(a) for a in multiset_permutations(list(lam))]


def monomial_sym_to_M(lam):
    lam = tableaux.check_partition(lam)
    return qsymM(sum(lam), {alpha: 1 for alpha in rearrangements(lam)})


def is_symmetric(q):
    """
    Are M-coefficients constant on rearrangement classes?
    """
    qm = f_to_m(q) if isinstance(q, qsymF) else q
    seen = set()
    for alpha in qm.coeffs:
        lam = tuple(sorted(alpha, reverse=True))
        if lam in seen:
            continue
        seen.add(lam)
        values = set(qm[a] for a in rearrangements(lam))
        if len(values) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def schur_to_f(lam):
    """
    s_lam as the sum of F_{Des Q} over the standard tableaux Q of shape lam
    """
    lam = tableaux.check_partition(lam)
    n = sum(lam)
    coeffs = {}
    for Q in tableaux.syt_enumerate(lam):
        alpha = set_to_comp(tableaux.des_tableau(Q), n)
        coeffs[alpha] = coeffs.get(alpha, 0) + 1
    return qsymF(n, coeffs)


@functools.lru_cache(maxsize=None)
def schur_to_m(lam):
    return f_to_m(schur_to_f(lam))


def kostka(lam, mu):
    """
    Number of semistandard tableaux of shape lam and content mu

    Read off as the coefficient of M_mu in s_lam.
    """
    return schur_to_m(tuple(lam))[tuple(mu)]


def schur_combination(v):
    """
    The F-basis expansion of a schurVector
    """
    out = qsymF(v.degree)
    for lam, c in v.coeffs.items():
        out = out + c*schur_to_f(lam)
    return out


def schur_expand(q):
    """
    Expand q in the Schur basis

    Partitions are visited in lexicographically decreasing order; at each
    step the coefficient of F_lam (lam read as a composition) fixes the
    coefficient of s_lam, which is then subtracted.

    Returns
    -------
    v : schurVector or notSymmetric
        notSymmetric carries the nonzero remainder.
    """
    remainder = q
    found = {}
    for lam in tableaux.partitions(q.degree):
        c = remainder[lam]
        if c:
            found[lam] = c
            remainder = remainder - c*schur_to_f(lam)
    if not remainder.is_zero():
        logger.debug('Schur extraction left %d terms.', len(remainder))
        return notSymmetric(remainder)
    v = schurVector(q.degree, found)
    assert schur_combination(v) == q
    return v


def schur_expand_kostka(q):
    """
    Schur expansion through the Kostka matrix, used to cross-check
    `schur_expand`

    The M-coefficients of q on partitions are solved against the
    unitriangular Kostka matrix with exact sympy arithmetic.
    """
    lams = tableaux.partitions(q.degree)
    qm = f_to_m(q)
    K = sympy.Matrix(len(lams), len(lams), lambda i, j: kostka(lams[i], lams[j]))
    b = sympy.Matrix([qm[mu] for mu in lams])
    c = K.T.LUsolve(b)
    v = schurVector(q.degree, {lam: int(c[i]) for i, lam in enumerate(lams)})
    residue = q - schur_combination(v)
    if not residue.is_zero():
        return notSymmetric(residue)
    return v


def is_schur_nonneg(v):
    return all(c >= 0 for c in v.coeffs.values())


def transpose_schur(v):
    return schurVector(v.degree, {tableaux.transpose(lam): c
                                  for lam, c in v.coeffs.items()})
