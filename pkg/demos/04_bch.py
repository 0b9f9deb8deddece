# coding: utf-8

# # BCH terms from a two-piece A(t)
#
# With A = Y on [0,1) and A = X on [1,2], the flow at t = 2 is exp(X) exp(Y),
# so each Magnus term becomes a homogeneous term of log(exp(X) exp(Y)).

# In[1]:

import numpy as np
from scipy.linalg import expm, logm

from magnus_perm.bch import bch_words, evaluate_words
from magnus_perm.serialize import to_text


# In[2]:

for n in range(1, 5):
    print(n, to_text(bch_words(n)))


# Partial sums against a matrix logarithm.

# In[3]:

rng = np.random.default_rng(0)
X, Y = 0.05 * rng.standard_normal((2, 3, 3))
z = logm(expm(X) @ expm(Y))
partial = np.zeros((3, 3))
for n in range(1, 7):
    partial = partial + evaluate_words(bch_words(n), X, Y)
    print(n, "%.2e" % np.linalg.norm(partial - z))
