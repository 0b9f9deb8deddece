# coding: utf-8

# # Truncated Magnus series as an integrator
#
# Polynomial A(t) lets each iterated integral be evaluated with exact rational weights.
# Truncating Omega keeps the propagator in the group; truncating the Neumann series does not.

# In[1]:

import numpy as np

from magnus_perm.numerics import (
    get_problem,
    magnus_propagate,
    neumann_reference,
    unitarity_defect,
    iterated_integral_exact,
    iterated_integral_mc,
)
from magnus_perm.numerics.solvers import error_slope


# In[2]:

p = get_problem("skew2")
for n in range(1, 6):
    _, rep = magnus_propagate(p, 0.1, n)
    print(n, "magnus defect %.1e  error %.1e" % (rep.unitarity_defect, rep.error),
          " neumann defect %.1e" % unitarity_defect(neumann_reference(p.a, 0.5, n)))


# Local error against a Runge-Kutta reference.
# The omitted term Omega_2 is itself O(t^3) and even grades above it vanish one order faster,
# so the observed orders are 3, 5, 5, 7, 7.

# In[3]:

lin = get_problem("linear3")
for n, t0 in [(1, 0.1), (2, 0.1), (3, 0.1), (4, 0.3), (5, 0.3)]:
    times = [t0 * 2.0**-k for k in range(4)]
    slope, errs = error_slope(lin.a, n, times)
    print(n, round(slope, 2), ["%.1e" % e for e in errs])


# Monte Carlo against the exact evaluator.

# In[4]:

sigma = (3, 1, 2)
exact = iterated_integral_exact(sigma, lin.a, 0.5)
est = iterated_integral_mc(sigma, lin.a, 0.5, samples=200_000, seed=1)
print(np.linalg.norm(est.value - exact), est.stderr_norm, est.agrees_with(exact))
