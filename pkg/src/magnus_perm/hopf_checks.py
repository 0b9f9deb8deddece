"""
Exhaustive and randomized checks of the Hopf algebra identities.

Every check returns :class:`IdentityResult` records, one per identity and
grade, with the first counterexample found (if any). Used by the test-suite
and by the ``hopf-check`` command.
"""
from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterable, Iterator
from dataclasses import asdict, dataclass
from math import comb

from . import hopf
from .perm import Combination, Permutation, permutations

# exhaustive grade caps: products by total grade, coproducts by grade
ASSOCIATIVITY_MAX = 6
COASSOCIATIVITY_MAX = 5
BIALGEBRA_MAX = 4
CONJUGATION_PRODUCT_MAX = 6
CONJUGATION_COPRODUCT_MAX = 5
DUALITY_MAX = 4


@dataclass
class IdentityResult:
    name: str
    grade: int
    holds: bool
    checked: int
    counterexample: list | None = None
    mode: str = "exhaustive"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Structure:
    name: str
    terms: Callable[[Permutation, Permutation], tuple]
    coproduct: Callable[[Permutation], Combination]

    def mul(self, x: Combination, y: Combination) -> Combination:
        return hopf._bilinear(x, y, self.terms)

    def delta(self, x: Combination) -> Combination:
        acc = Combination()
        for k, c in x.items():
            acc = acc + c * self.coproduct(k)
        return acc


STAR = Structure("star", hopf._star_terms, hopf.coproduct)
STAR_PRIME = Structure("starprime", hopf._star_prime_terms, hopf.coproduct_prime)
STRUCTURES = {"star": STAR, "starprime": STAR_PRIME}


def _b(p) -> Combination:
    return Combination({tuple(p): 1})


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # weak compositions of total into parts
    for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _tuples(total: int, parts: int) -> Iterator[tuple[Permutation, ...]]:
    for grades in _compositions(total, parts):
        yield from itertools.product(*(list(permutations(g)) for g in grades))


def _run(name: str, grade: int, cases: Iterable, check: Callable[..., bool], mode: str = "exhaustive") -> IdentityResult:
    count = 0
    for case in cases:
        count += 1
        if not check(*case):
            return IdentityResult(name, grade, False, count, [list(p) for p in case], mode)
    return IdentityResult(name, grade, True, count, None, mode)


def _associative(s: Structure) -> Callable[..., bool]:
    def check(a, b, c):
        return s.mul(s.mul(_b(a), _b(b)), _b(c)) == s.mul(_b(a), s.mul(_b(b), _b(c)))

    return check


def _unit(s: Structure) -> Callable[..., bool]:
    def check(a):
        return s.mul(_b(()), _b(a)) == _b(a) == s.mul(_b(a), _b(()))

    return check


def _term_count(s: Structure) -> Callable[..., bool]:
    def check(a, b):
        terms = s.terms(a, b)
        return len(terms) == len(set(terms)) == comb(len(a) + len(b), len(a))

    return check


def _coassociative(s: Structure) -> Callable[..., bool]:
    def check(a):
        d = s.coproduct(a)
        return hopf.apply_left(d, s.coproduct) == hopf.apply_right(d, s.coproduct)

    return check


def _counit(s: Structure) -> Callable[..., bool]:
    def check(a):
        d = s.coproduct(a)
        return hopf.counit_left(d) == _b(a) == hopf.counit_right(d)

    return check


def _bialgebra(s: Structure) -> Callable[..., bool]:
    def check(a, b):
        lhs = s.delta(s.mul(_b(a), _b(b)))
        rhs = hopf.tensor_product(s.coproduct(a), s.coproduct(b), s.terms)
        return lhs == rhs

    return check


def _conj_product(a, b) -> bool:
    lhs = hopf.star(a, b)
    rhs = hopf.theta(hopf.star_prime(hopf.inverse(a), hopf.inverse(b)))
    return lhs == rhs


def _conj_coproduct(a) -> bool:
    return hopf.coproduct(a) == hopf.theta_tensor(hopf.coproduct_prime(hopf.inverse(a)))


DUALITY_ORIENTATIONS = {
    "star~coproduct_prime": (STAR, hopf.coproduct_prime),
    "star_prime~coproduct": (STAR_PRIME, hopf.coproduct),
    "star~coproduct": (STAR, hopf.coproduct),
    "star_prime~coproduct_prime": (STAR_PRIME, hopf.coproduct_prime),
}


def _dual(s: Structure, cop: Callable) -> Callable[..., bool]:
    # <a*b, r> == <a (x) b, cop(r)> for every r of grade |a|+|b|
    def check(a, b):
        prod = s.mul(_b(a), _b(b))
        pair = Combination({(a, b): 1})
        return all(
            hopf.pairing(prod, _b(r)) == hopf.pairing(pair, cop(r)) for r in permutations(len(a) + len(b))
        )

    return check


def _random_perm(rng: random.Random, n: int) -> Permutation:
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return tuple(p)


def _random_cases(rng: random.Random, total: int, parts: int, count: int) -> list[tuple[Permutation, ...]]:
    cases = []
    for _ in range(count):
        cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
        bounds = [0] + cuts + [total]
        cases.append(tuple(_random_perm(rng, bounds[i + 1] - bounds[i]) for i in range(parts)))
    return cases


def run_checks(
    structure: str = "both",
    max_grade: int | None = None,
    seed: int = 0,
    spot_checks: int = 10,
) -> dict:
    """
    Check the Hopf identities and return a JSON-ready report.

    Without ``max_grade`` each identity uses its default exhaustive cap;
    with it, every identity is checked exhaustively up to ``max_grade``.
    ``spot_checks`` random cases per identity are then drawn at the two grades
    just above the cap, from a ``random.Random(seed)`` stream.
    """
    if structure not in ("both", "star", "starprime"):
        raise ValueError(f"unknown structure {structure!r}")
    chosen = list(STRUCTURES.values()) if structure == "both" else [STRUCTURES[structure]]
    cap = (lambda default: default) if max_grade is None else (lambda default: max_grade)
    rng = random.Random(seed)
    results: list[IdentityResult] = []

    def exhaustive_and_spot(name, limit, parts, check, start=0):
        for g in range(start, limit + 1):
            results.append(_run(name, g, _tuples(g, parts), check))
        for g in (limit + 1, limit + 2):
            if spot_checks > 0:
                results.append(_run(name, g, _random_cases(rng, g, parts, spot_checks), check, mode="random"))

    for s in chosen:
        tag = s.name
        exhaustive_and_spot(f"{tag}:associativity", cap(ASSOCIATIVITY_MAX), 3, _associative(s))
        exhaustive_and_spot(f"{tag}:unit", cap(ASSOCIATIVITY_MAX), 1, _unit(s))
        exhaustive_and_spot(f"{tag}:term_count", cap(ASSOCIATIVITY_MAX), 2, _term_count(s))
        exhaustive_and_spot(f"{tag}:coassociativity", cap(COASSOCIATIVITY_MAX), 1, _coassociative(s))
        exhaustive_and_spot(f"{tag}:counit", cap(COASSOCIATIVITY_MAX), 1, _counit(s))
        exhaustive_and_spot(f"{tag}:bialgebra", cap(BIALGEBRA_MAX), 2, _bialgebra(s))
    if structure == "both":
        exhaustive_and_spot("conjugation:product", cap(CONJUGATION_PRODUCT_MAX), 2, _conj_product)
        exhaustive_and_spot("conjugation:coproduct", cap(CONJUGATION_COPRODUCT_MAX), 1, _conj_coproduct)

    duality = duality_probe(cap(DUALITY_MAX))
    ok = all(r.holds for r in results) and duality["consistent"]
    return {
        "ok": ok,
        "structure": structure,
        "max_grade": max_grade,
        "seed": seed,
        "identities": [r.to_dict() for r in results],
        "duality": duality,
    }


def duality_probe(max_grade: int = DUALITY_MAX) -> dict:
    """
    Test ``<σ·τ, ρ> = <σ ⊗ τ, Δ(ρ)>`` for each pairing of a product with a coproduct.

    An orientation holds when it holds at every total grade up to ``max_grade``.
    The probe is consistent when some orientation holds and no orientation
    that fails at one grade holds again at a higher grade (at low grades
    every orientation is satisfied trivially).
    """
    per_grade: dict[str, list[bool]] = {}
    for name, (s, cop) in DUALITY_ORIENTATIONS.items():
        check = _dual(s, cop)
        per_grade[name] = [_run(name, g, _tuples(g, 2), check).holds for g in range(max_grade + 1)]
    holding = sorted(name for name, flags in per_grade.items() if all(flags))
    monotone = all(
        not (earlier is False and later is True)
        for flags in per_grade.values()
        for earlier, later in zip(flags, flags[1:])
    )
    consistent = bool(holding) and monotone
    return {
        "max_grade": max_grade,
        "per_grade": per_grade,
        "holding": holding,
        "consistent": consistent,
    }
