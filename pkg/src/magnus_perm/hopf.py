"""
The two Hopf algebra structures on the graded span of all permutations.

``star_prime`` is the shifted shuffle product and ``coproduct_prime`` the
deconcatenate-and-standardize coproduct. ``star`` and ``coproduct`` form the
second structure, which is the conjugate of the first under ``theta``
(permutation inversion). ``star`` is the product that matches the product of
iterated integrals ``A(σ)·A(τ)``.

Elements are :class:`~magnus_perm.perm.Combination` objects keyed by
permutation tuples. Tensors are combinations keyed by pairs (or triples) of
permutations.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from fractions import Fraction
from functools import lru_cache

from .perm import (
    Combination,
    InvalidWordError,
    Permutation,
    Word,
    check_permutation,
    check_word,
    inverse,
    restrict,
    shift,
    standardize,
)

EMPTY: Permutation = ()


class InvalidInput(InvalidWordError):
    """Operands violate a precondition, e.g. overlapping letters in a shuffle."""


def shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    """
    All interleavings of ``u`` and ``v`` that keep the internal order of each.

    The result is a list (a multiset in general); with disjoint letters every
    interleaving is a distinct word.

    >>> shuffle((1,), (2, 3))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1)]
    """
    u, v = check_word(u), check_word(v)
    if set(u) & set(v):
        raise InvalidInput(f"shuffle operands share letters: {u}, {v}")
    n = len(u) + len(v)
    out = []
    for slots in itertools.combinations(range(n), len(u)):
        word = [0] * n
        iu = iter(u)
        iv = iter(v)
        chosen = set(slots)
        for i in range(n):
            word[i] = next(iu) if i in chosen else next(iv)
        out.append(tuple(word))
    return out


@lru_cache(maxsize=None)
def _star_prime_terms(sigma: Permutation, tau: Permutation) -> tuple[Permutation, ...]:
    return tuple(shuffle(sigma, shift(tau, len(sigma))))


@lru_cache(maxsize=None)
def _star_terms(sigma: Permutation, tau: Permutation) -> tuple[Permutation, ...]:
    k, l = len(sigma), len(tau)
    letters = range(1, k + l + 1)
    out = []
    for left in itertools.combinations(letters, k):
        right = [a for a in letters if a not in left]
        u = tuple(left[s - 1] for s in sigma)
        v = tuple(right[s - 1] for s in tau)
        out.append(u + v)
    return tuple(out)


def star_prime(sigma: Sequence[int], tau: Sequence[int]) -> Combination:
    """
    Shifted shuffle product ``σ ∗′ τ``.

    >>> star_prime((1,), (2, 1)).sorted_items()
    [((1, 3, 2), Fraction(1, 1)), ((3, 1, 2), Fraction(1, 1)), ((3, 2, 1), Fraction(1, 1))]
    """
    terms = _star_prime_terms(check_permutation(sigma), check_permutation(tau))
    return Combination._trusted({w: Fraction(1) for w in terms})


def star(sigma: Sequence[int], tau: Sequence[int]) -> Combination:
    """
    Sum of the concatenations ``uv`` that are permutations with ``st(u) = σ`` and ``st(v) = τ``.

    >>> sorted(star((1,), (1, 2)))
    [(1, 2, 3), (2, 1, 3), (3, 1, 2)]
    """
    terms = _star_terms(check_permutation(sigma), check_permutation(tau))
    return Combination._trusted({w: Fraction(1) for w in terms})


def _bilinear(x: Combination, y: Combination, terms: Callable) -> Combination:
    acc: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            c = ca * cb
            for w in terms(a, b):
                acc[w] = acc.get(w, 0) + c
    return Combination(acc)


def product(x: Combination, y: Combination) -> Combination:
    """Bilinear extension of :func:`star` to arbitrary (mixed-grade) elements."""
    return _bilinear(x, y, _star_terms)


def product_prime(x: Combination, y: Combination) -> Combination:
    """Bilinear extension of :func:`star_prime`."""
    return _bilinear(x, y, _star_prime_terms)


def coproduct_prime(alpha: Sequence[int]) -> Combination:
    """
    Sum over the cuts ``α = uv`` of ``st(u) ⊗ st(v)``.

    >>> [k for k, _ in coproduct_prime((1,)).sorted_items()]
    [((), (1,)), ((1,), ())]
    """
    a = check_permutation(alpha)
    return Combination(
        ((standardize(a[:i]), standardize(a[i:])), 1) for i in range(len(a) + 1)
    )


def coproduct(alpha: Sequence[int]) -> Combination:
    """
    Sum over ``i`` of ``α|{1..i} ⊗ st(α|{i+1..n})``.

    >>> [k for k, _ in coproduct((2, 1)).sorted_items()]
    [((), (2, 1)), ((1,), (1,)), ((2, 1), ())]
    """
    a = check_permutation(alpha)
    n = len(a)
    return Combination(
        ((restrict(a, range(1, i + 1)), standardize(restrict(a, range(i + 1, n + 1)))), 1)
        for i in range(n + 1)
    )


def counit(x: Combination) -> Fraction:
    """Coefficient of the empty permutation."""
    return x.coefficient(EMPTY)


def theta(x: Combination) -> Combination:
    """Linear involution sending every permutation to its inverse."""
    return x.map_keys(inverse)


def theta_tensor(t: Combination) -> Combination:
    return t.map_keys(lambda key: tuple(inverse(p) for p in key))


def pairing(x: Combination, y: Combination) -> Fraction:
    """
    Inner product making the permutations an orthonormal basis.

    Works slotwise for tensor elements since their keys are tuples of permutations.
    """
    if len(x) > len(y):
        x, y = y, x
    return sum((c * y.coefficient(k) for k, c in x.items()), Fraction(0))


def linear(f: Callable[[Permutation], Combination]) -> Callable[[Combination], Combination]:
    """Extend a map on basis permutations linearly."""

    def apply(x: Combination) -> Combination:
        acc = Combination()
        for k, c in x.items():
            acc = acc + c * f(k)
        return acc

    return apply


def tensor(x: Combination, y: Combination) -> Combination:
    """``x ⊗ y`` with pair keys."""
    return Combination(((a, b), ca * cb) for a, ca in x.items() for b, cb in y.items())


def tensor_product(s: Combination, t: Combination, prod: Callable = _star_terms) -> Combination:
    """Slotwise product ``(a ⊗ b)·(c ⊗ d) = (a·c) ⊗ (b·d)`` on two-slot tensors."""
    acc: dict = {}
    for (a, b), c1 in s.items():
        for (c, d), c2 in t.items():
            coeff = c1 * c2
            for left in prod(a, c):
                for right in prod(b, d):
                    key = (left, right)
                    acc[key] = acc.get(key, 0) + coeff
    return Combination(acc)


def apply_left(t: Combination, f: Callable[[Permutation], Combination]) -> Combination:
    """``(f ⊗ id)`` on a two-slot tensor; ``f`` returns pair-keyed tensors, giving triples."""
    acc: dict = {}
    for (a, b), c in t.items():
        for (l1, l2), c2 in f(a).items():
            key = (l1, l2, b)
            acc[key] = acc.get(key, 0) + c * c2
    return Combination(acc)


def apply_right(t: Combination, f: Callable[[Permutation], Combination]) -> Combination:
    """``(id ⊗ f)`` on a two-slot tensor, giving triples."""
    acc: dict = {}
    for (a, b), c in t.items():
        for (r1, r2), c2 in f(b).items():
            key = (a, r1, r2)
            acc[key] = acc.get(key, 0) + c * c2
    return Combination(acc)


def counit_left(t: Combination) -> Combination:
    """``(ε ⊗ id)`` on a two-slot tensor."""
    return Combination((b, c) for (a, b), c in t.items() if a == EMPTY)


def counit_right(t: Combination) -> Combination:
    """``(id ⊗ ε)`` on a two-slot tensor."""
    return Combination((a, c) for (a, b), c in t.items() if b == EMPTY)
