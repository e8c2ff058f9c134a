"""
Q_n of K(3,1,1) with the class of P0 removed: not symmetric at n = 6, equal
to Q_n(K(3,1,1)) from n = 7 on, hence Schur nonnegative there.
"""
import time

import pypaq

n_max = 8

K311 = pypaq.shape_patterns((3, 1, 1))
Pi0 = pypaq.pi_zero()
print('K(3,1,1) pattern-Knuth closed: %s' %
      pypaq.is_pattern_knuth_closed(K311).holds)

for n in range(5, n_max + 1):
    tic = time.time()
    v = pypaq.schur_expand(pypaq.qn(Pi0, n))
    toc = time.time()
    print('n=%d (%.2f s): %s' % (n, toc-tic, v))

for N in (6, 7):
    report = pypaq.stability_check(Pi0, K311, N)
    print('S_%d(Pi0) = S_%d(K(3,1,1)): %s %s' %
          (N, N, report.holds, report.witnesses))
