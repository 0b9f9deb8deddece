"""
Exit criteria, one test each. The tolerances are 1e-12 for exact-evaluator
identities, four reported standard errors for Monte Carlo and 0.25 for fitted
slopes.
"""
import time
from fractions import Fraction as F
from itertools import product
from math import comb, factorial

import numpy as np
import pytest

from magnus_perm.bch import bch_words, bracket, evaluate_words
from magnus_perm.hopf import star, star_prime
from magnus_perm.hopf_checks import run_checks
from magnus_perm.magnus import expand_rnested, omega_rnested, omega_via_log, omega_word
from magnus_perm.numerics import (
    dense_reference,
    evaluate_exact,
    get_problem,
    iterated_integral_exact,
    iterated_integral_mc,
    magnus_propagate,
    neumann_reference,
    unitarity_defect,
)
from magnus_perm.numerics.solvers import error_slope
from magnus_perm.perm import Combination, descents, inverse, permutations, reverse

from oracles import bch_grade, random_small

EXACT_TOL = 1e-12
SIGMAS = 4.0
SLOPE_TOL = 0.25


@pytest.mark.acceptance("1 golden exactness")
def test_golden_exactness():
    start = time.perf_counter()
    assert omega_word(2) == Combination({(1, 2): F(1, 2), (2, 1): F(-1, 2)})
    assert omega_word(3) == Combination(
        {(1, 2, 3): F(1, 3), (1, 3, 2): F(-1, 6), (2, 1, 3): F(-1, 6),
         (2, 3, 1): F(-1, 6), (3, 1, 2): F(-1, 6), (3, 2, 1): F(1, 3)}
    )
    assert omega_rnested(3, "first").terms == Combination({(3, 2, 1): F(1, 3), (2, 3, 1): F(-1, 6)})
    assert omega_rnested(4, "first").terms == Combination(
        {(4, 3, 2, 1): F(-1, 4), (4, 2, 3, 1): F(1, 12), (3, 2, 4, 1): F(1, 12),
         (3, 4, 2, 1): F(1, 12), (2, 4, 3, 1): F(1, 12), (2, 3, 4, 1): F(-1, 12)}
    )
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("2 route equivalence")
def test_route_equivalence():
    start = time.perf_counter()
    for n in range(1, 8):
        w = omega_word(n)
        assert omega_via_log(n) == w, n
        for anchor in ("first", "last"):
            assert expand_rnested(omega_rnested(n, anchor)) == w, (n, anchor)
    assert time.perf_counter() - start < 30.0


@pytest.mark.acceptance("3 structural counts")
def test_structural_counts():
    for n in range(1, 8):
        w = omega_word(n)
        assert len(w) == factorial(n)
        for anchor in ("first", "last"):
            assert len(omega_rnested(n, anchor)) == factorial(n - 1)
        if n >= 2:
            assert sum(w.values()) == 0
        for s, c in w.items():
            assert w[reverse(s)] == (-1) ** (n - 1) * c
        # commutator coefficient of (σ..., n): (-1)^{d_b} d_a! d_b! / n! = (-1)^{d_b} / (n C(n-1, d_b))
        for idx, c in omega_rnested(n, "last").terms.items():
            db = descents(idx)
            da = n - 1 - db
            assert c == F((-1) ** db * factorial(da) * factorial(db), factorial(n))
            assert c == F((-1) ** db, n * comb(n - 1, db))


@pytest.mark.acceptance("4 hopf axioms")
def test_hopf_axioms():
    start = time.perf_counter()
    report = run_checks("both", seed=0)
    failing = [r for r in report["identities"] if not r["holds"]]
    assert report["ok"], failing
    assert report["duality"]["consistent"], report["duality"]
    assert time.perf_counter() - start < 60.0


@pytest.mark.acceptance("5 integral homomorphism")
def test_integral_homomorphism():
    a, t = get_problem("linear3").a, get_problem("linear3").horizon
    perms = [p for k in range(4) for p in permutations(k)]
    checked = 0
    for s, u in product(perms, repeat=2):
        if len(s) + len(u) > 4:
            continue
        lhs = evaluate_exact(Combination({s: 1}), a, t) @ evaluate_exact(Combination({u: 1}), a, t)
        assert np.linalg.norm(lhs - evaluate_exact(star(s, u), a, t)) <= EXACT_TOL, (s, u)
        lhs_p = evaluate_exact(Combination({inverse(s): 1}), a, t) @ evaluate_exact(Combination({inverse(u): 1}), a, t)
        rhs_p = evaluate_exact(star_prime(s, u).map_keys(inverse), a, t)
        assert np.linalg.norm(lhs_p - rhs_p) <= EXACT_TOL, (s, u)
        checked += 1
    assert checked > 0


@pytest.mark.acceptance("6 convergence order")
def test_convergence_order():
    # Stated target: slope N+1 over t = 0.1 * 2^-k, k = 0..4, for N = 1..5.
    a = get_problem("linear3").a
    times = [0.1 * 2.0**-k for k in range(5)]
    slopes = {n: error_slope(a, n, times)[0] for n in range(1, 6)}
    bad = {n: round(s, 3) for n, s in slopes.items() if abs(s - (n + 1)) > SLOPE_TOL}
    assert not bad, f"fitted slopes off target N+1: {bad}"


@pytest.mark.acceptance("7 structure preservation")
def test_structure_preservation():
    p = get_problem("skew2")
    for n in range(1, 6):
        _, report = magnus_propagate(p, 0.1, n)
        assert report.unitarity_defect <= EXACT_TOL, (n, report.unitarity_defect)
        assert unitarity_defect(neumann_reference(p.a, 0.5, n)) >= 1e-6, n
    assert dense_reference(p.a, 0.5).converged


@pytest.mark.acceptance("8 bch")
def test_bch():
    assert bch_words(1) == Combination({"X": 1, "Y": 1})
    assert bch_words(2) == Combination({"XY": F(1, 2), "YX": F(-1, 2)})
    assert bch_words(3) == F(1, 12) * bracket("XXY") + F(1, 12) * bracket("YYX")
    rng = np.random.default_rng(20170403)
    for _ in range(3):
        X, Y = random_small(rng, 3, 0.1), random_small(rng, 3, 0.1)
        for n in range(1, 6):
            err = np.linalg.norm(evaluate_words(bch_words(n), X, Y) - bch_grade(X, Y, n))
            assert err <= 1e-10, (n, err)


@pytest.mark.acceptance("9 mc cross-check")
def test_mc_cross_check():
    p = get_problem("linear3")
    worst = 0.0
    for n in range(1, 5):
        for s in permutations(n):
            est = iterated_integral_mc(s, p.a, p.horizon, samples=10**6, seed=2017)
            exact = iterated_integral_exact(s, p.a, p.horizon)
            assert est.agrees_with(exact, SIGMAS), s
            worst = max(worst, float(np.linalg.norm(est.value - exact)) / est.stderr_norm)
    assert worst <= SIGMAS
