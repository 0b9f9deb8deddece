# coding: utf-8

# # Magnus terms as permutations
#
# An iterated integral over t > t_1 > ... > t_n of a product A(t_i)A(t_j)...
# is recorded by the permutation listing which time sits in each slot.
# Every Magnus term is then a rational combination of permutations.

# In[1]:

from magnus_perm import omega_word, omega_via_log, omega_rnested, expand_rnested
from magnus_perm.perm import descents
from magnus_perm.serialize import to_text, to_latex


# Grade 3 in the word basis. The coefficient depends only on the number of descents.

# In[2]:

w3 = omega_word(3)
print(to_text(w3))
for sigma, c in w3.sorted_items():
    print(sigma, descents(sigma), c)


# The same element comes out of the logarithm of the time-ordered exponential,
# computed with products of permutations only.

# In[3]:

for n in range(1, 7):
    print(n, omega_via_log(n) == omega_word(n))


# Right-nested commutators anchored at the first time need (n-1)! terms instead of n!.

# In[4]:

r4 = omega_rnested(4, "first")
print(to_text(r4))
print(to_latex(r4))
print(len(omega_word(6)), len(omega_rnested(6)))
print(expand_rnested(omega_rnested(6, "last")) == omega_word(6))
