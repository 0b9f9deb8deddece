from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magnus_perm import hopf
from magnus_perm.hopf import (
    coproduct,
    coproduct_prime,
    counit,
    pairing,
    shuffle,
    star,
    star_prime,
)
from magnus_perm.hopf_checks import duality_probe, run_checks
from magnus_perm.perm import Combination


def B(*perms):
    return Combination({tuple(p): 1 for p in perms})


def T(*pairs):
    return Combination({(tuple(a), tuple(b)): 1 for a, b in pairs})


def test_shuffle_examples():
    assert sorted(shuffle((1,), (2, 3))) == [(1, 2, 3), (2, 1, 3), (2, 3, 1)]
    assert shuffle((4, 2), ()) == [(4, 2)]
    out = shuffle((1, 2), (3, 4))
    assert len(out) == 6
    assert out[0] == (1, 2, 3, 4) and out[-1] == (3, 4, 1, 2)


def test_shuffle_rejects_overlap():
    with pytest.raises(hopf.InvalidInput):
        shuffle((1, 2), (2, 3))


def test_star_prime_examples():
    assert star_prime((1,), (1, 2)) == B((1, 2, 3), (2, 1, 3), (2, 3, 1))
    assert star_prime((1,), (2, 1)) == B((1, 3, 2), (3, 1, 2), (3, 2, 1))
    assert star_prime((1, 2), (1, 2)) == B(
        (1, 2, 3, 4), (1, 3, 2, 4), (1, 3, 4, 2), (3, 1, 2, 4), (3, 1, 4, 2), (3, 4, 1, 2)
    )
    assert star_prime((), (2, 1)) == B((2, 1))


def test_star_examples():
    assert star((1,), (1, 2)) == B((1, 2, 3), (2, 1, 3), (3, 1, 2))
    assert star((1,), (2, 1)) == B((1, 3, 2), (2, 3, 1), (3, 2, 1))
    assert star((1, 2), (1, 2)) == B(
        (1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3), (3, 4, 1, 2)
    )
    assert star((), (3, 1, 2)) == B((3, 1, 2))
    # the grade-3 example with the identity of grade 3
    assert star((1,), (1, 2, 3)) == B((4, 1, 2, 3), (3, 1, 2, 4), (2, 1, 3, 4), (1, 2, 3, 4))


def test_coproduct_prime_example():
    assert coproduct_prime((2, 4, 3, 1)) == T(
        ((), (2, 4, 3, 1)), ((1,), (3, 2, 1)), ((1, 2), (2, 1)), ((1, 3, 2), (1,)), ((2, 4, 3, 1), ())
    )
    assert coproduct_prime(()) == T(((), ()))
    assert coproduct_prime((1,)) == T(((), (1,)), ((1,), ()))


def test_coproduct_example():
    assert coproduct((2, 4, 3, 1)) == T(
        ((), (2, 4, 3, 1)), ((1,), (1, 3, 2)), ((2, 1), (2, 1)), ((2, 3, 1), (1,)), ((2, 4, 3, 1), ())
    )
    assert coproduct(()) == T(((), ()))
    assert coproduct((2, 1)) == T(((), (2, 1)), ((1,), (1,)), ((2, 1), ()))


def test_counit():
    assert counit(B(())) == 1
    assert counit(B((2, 1, 3))) == 0
    x = Combination({(): Fraction(1, 2), (1, 2): Fraction(1, 3)})
    assert counit(x) == Fraction(1, 2)


def test_pairing():
    assert pairing(B((1, 2)), B((1, 2))) == 1
    assert pairing(B((1, 2)), B((2, 1))) == 0
    assert pairing(star((1,), (1, 2)), B((3, 1, 2))) == 1
    assert pairing(T(((1,), (2, 1))), coproduct_prime((1, 3, 2))) == 1


perm_of = lambda lo, hi: st.integers(lo, hi).flatmap(lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


@settings(max_examples=60, deadline=None)
@given(perm_of(0, 4), perm_of(0, 4))
def test_term_counts_and_unit_coefficients(s, t):
    for prod in (star(s, t), star_prime(s, t)):
        assert len(prod) == comb(len(s) + len(t), len(s))
        assert set(prod.values()) <= {1}
        assert prod.grade == len(s) + len(t)


@settings(max_examples=40, deadline=None)
@given(perm_of(0, 3), perm_of(0, 3), perm_of(0, 3))
def test_random_associativity_beyond_exhaustive(s, t, r):
    # grade sums up to 9 lie past the exhaustive cap
    for mul in (hopf.product, hopf.product_prime):
        assert mul(mul(B(s), B(t)), B(r)) == mul(B(s), mul(B(t), B(r)))


@settings(max_examples=40, deadline=None)
@given(perm_of(0, 4), perm_of(0, 4))
def test_conjugation_random(s, t):
    assert star(s, t) == hopf.theta(star_prime(hopf.inverse(s), hopf.inverse(t)))


def test_mixed_grade_products_distribute():
    x = Combination({(): 2, (1,): Fraction(1, 3)})
    y = Combination({(1, 2): 1, (2, 1): -1})
    got = hopf.product(x, y)
    want = 2 * y + Fraction(1, 3) * (star((1,), (1, 2)) - star((1,), (2, 1)))
    assert got == want


@pytest.mark.parametrize("structure", ["star", "starprime"])
def test_axioms_each_structure_small(structure):
    report = run_checks(structure, max_grade=3, spot_checks=3, seed=7)
    failing = [r for r in report["identities"] if not r["holds"]]
    assert report["ok"], failing


def test_axioms_default_caps():
    report = run_checks("both", seed=1)
    failing = [r for r in report["identities"] if not r["holds"]]
    assert report["ok"], failing
    names = {r["name"] for r in report["identities"]}
    assert {"conjugation:product", "conjugation:coproduct", "star:bialgebra", "starprime:coassociativity"} <= names
    caps = {r["name"]: r["grade"] for r in report["identities"] if r["mode"] == "exhaustive"}
    assert caps["star:associativity"] == 6
    assert caps["starprime:coassociativity"] == 5
    assert caps["star:bialgebra"] == 4
    assert caps["conjugation:product"] == 6
    assert caps["conjugation:coproduct"] == 5


def test_checker_reports_counterexample():
    # the product paired with the wrong coproduct fails from grade 3 on
    probe = duality_probe(4)
    assert probe["per_grade"]["star~coproduct"][3] is False
    assert probe["holding"] == ["star_prime~coproduct", "star~coproduct_prime"]
    assert probe["consistent"]
