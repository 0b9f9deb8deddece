# coding: utf-8

# # Two products and two coproducts on permutations
#
# star multiplies iterated integrals; star_prime is the shifted shuffle.
# Inversion turns one into the other.

# In[1]:

from magnus_perm import hopf
from magnus_perm.hopf_checks import run_checks, duality_probe
from magnus_perm.serialize import to_text


# In[2]:

print(to_text(hopf.star((1,), (1, 2))))
print(to_text(hopf.star_prime((1,), (1, 2))))
print(hopf.coproduct_prime((2, 4, 3, 1)).sorted_items())
print(hopf.coproduct((2, 4, 3, 1)).sorted_items())


# In[3]:

s, t = (2, 1, 3), (1, 2)
lhs = hopf.star(s, t)
rhs = hopf.theta(hopf.star_prime(hopf.inverse(s), hopf.inverse(t)))
print(lhs == rhs)


# Exhaustive axiom checks up to the default grade caps, plus random spot checks above them.

# In[4]:

report = run_checks("both", seed=0)
print(report["ok"], len(report["identities"]))
probe = duality_probe(4)
print(probe["holding"])
for name, flags in probe["per_grade"].items():
    print(name, flags)
