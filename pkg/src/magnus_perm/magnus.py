"""
Exact terms of the Magnus series in the permutation (word) basis and in the
basis of right-nested commutators.

A permutation ``σ`` of grade ``n`` stands for the iterated integral

    A(σ) = ∫_{t > t_1 > ... > t_n} A(t_{σ(1)}) A(t_{σ(2)}) ... A(t_{σ(n)}),

and an index sequence ``(i_1, ..., i_n)`` in an :class:`RNestedCombination`
stands for the same integral of ``[A(t_{i_1}), [A(t_{i_2}), ... [A(t_{i_{n-1}}), A(t_{i_n})]...]]``.

Two independent routes produce the word form of ``Ω_n``: :func:`omega_via_log`
takes the logarithm of the Neumann series with the ``∗`` product of
permutations, and :func:`omega_word` uses the closed descent formula.
"""
from __future__ import annotations

import itertools
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Literal

from .hopf import _star_terms
from .perm import Combination, Permutation, ascents, descents, identity, permutations

Anchor = Literal["first", "last"]

DEFAULT_MAX_ORDER = 9
MAX_ORDER_ENV = "MAGNUS_MAX_ORDER"


class ResourceLimitError(RuntimeError):
    """Requested order exceeds the configured generation cap."""


class NotDecomposableError(ValueError):
    """Element is not a combination of right-nested commutators over the chosen anchor."""


def max_order(override: int | None = None) -> int:
    """Generation cap: explicit override, else ``$MAGNUS_MAX_ORDER``, else 9."""
    if override is not None:
        return override
    env = os.environ.get(MAX_ORDER_ENV)
    return int(env) if env else DEFAULT_MAX_ORDER


def _check_order(n: int, cap: int | None) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    limit = max_order(cap)
    if n > limit:
        raise ResourceLimitError(
            f"order {n} exceeds the cap {limit}: the word basis has {factorial(n)} terms "
            f"(raise the cap to proceed)"
        )


def neumann_P(n: int) -> Permutation:
    """The identity permutation of grade ``n``, encoding the Neumann term ``P_n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return identity(n)


@lru_cache(maxsize=None)
def _compositions_product(m: int, parts: int) -> dict[Permutation, int]:
    # sum of P_{i_1} * ... * P_{i_parts} over compositions of m; integer coefficients
    if parts == 1:
        return {identity(m): 1}
    acc: dict[Permutation, int] = {}
    for last in range(1, m - parts + 2):
        prefix = _compositions_product(m - last, parts - 1)
        p_last = identity(last)
        for sigma, c in prefix.items():
            for w in _star_terms(sigma, p_last):
                acc[w] = acc.get(w, 0) + c
    return acc


def omega_via_log(n: int, *, cap: int | None = None) -> Combination:
    """
    ``Ω_n`` from the series logarithm of the Neumann expansion.

    ``Ω_n = P_n - Σ_{j=2..n} (-1)^j / j · Σ_{i_1+...+i_j = n} P_{i_1} ∗ ... ∗ P_{i_j}``,
    with every product of iterated integrals realised by the ``∗`` product of
    permutations. Sums over compositions are built from memoised shorter sums.

    >>> omega_via_log(2).sorted_items()
    [((1, 2), Fraction(1, 2)), ((2, 1), Fraction(-1, 2))]
    """
    _check_order(n, cap)
    acc: dict[Permutation, Fraction] = {identity(n): Fraction(1)}
    for j in range(2, n + 1):
        weight = Fraction((-1) ** j, j)
        for sigma, c in _compositions_product(n, j).items():
            acc[sigma] = acc.get(sigma, 0) - weight * c
    return Combination(acc)


def word_coefficient(sigma: Sequence[int]) -> Fraction:
    """
    Coefficient of ``A(σ)`` in ``Ω_n``: ``(-1)^d / (n · C(n-1, d))`` with ``d`` the descents of ``σ``.

    >>> word_coefficient((3, 2, 1)), word_coefficient((1, 3, 2))
    (Fraction(1, 3), Fraction(-1, 6))
    """
    n = len(sigma)
    d = descents(sigma)
    return Fraction((-1) ** d, n * comb(n - 1, d))


def factorial_coefficient(sigma: Sequence[int]) -> Fraction:
    """Same coefficient written as ``(-1)^{d_b} d_a! d_b! / n!``."""
    n = len(sigma)
    da, db = ascents(sigma), descents(sigma)
    return Fraction((-1) ** db * factorial(da) * factorial(db), factorial(n))


@lru_cache(maxsize=16)
def _omega_word_cached(n: int) -> Combination:
    by_descents = [Fraction((-1) ** d, n * comb(n - 1, d)) for d in range(n)]
    return Combination._trusted({s: by_descents[descents(s)] for s in permutations(n)})


def omega_word(n: int, *, cap: int | None = None) -> Combination:
    """
    ``Ω_n`` in the word basis from the closed descent formula (``n!`` terms).

    >>> omega_word(3)[(1, 2, 3)], omega_word(3)[(2, 3, 1)]
    (Fraction(1, 3), Fraction(-1, 6))
    """
    _check_order(n, cap)
    return _omega_word_cached(n)


@dataclass(frozen=True)
class RNestedCombination:
    """
    Rational combination of right-nested commutator integrals ``A[i_1, ..., i_n]``.

    ``terms`` maps index sequences to coefficients. ``anchor`` records which time
    index closes every bracket (``"first"`` for ``1``, ``"last"`` for ``n``) and is
    ``None`` for unreduced collections such as the output of :func:`dsw_project`.
    """

    order: int
    anchor: Anchor | None
    terms: Combination

    def __post_init__(self):
        for idx in self.terms:
            if len(idx) != self.order:
                raise ValueError(f"index sequence {idx} does not have length {self.order}")
            if self.anchor is not None and self.order > 1 and idx[-1] != _anchor_index(self.order, self.anchor):
                raise ValueError(f"index sequence {idx} does not end in the {self.anchor} anchor")

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_items(self):
        return self.terms.sorted_items()

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        return self.terms.coefficient(tuple(indices))


def _anchor_index(n: int, anchor: Anchor) -> int:
    if anchor == "first":
        return 1
    if anchor == "last":
        return n
    raise ValueError(f"anchor must be 'first' or 'last', got {anchor!r}")


def omega_rnested(n: int, anchor: Anchor = "first", *, cap: int | None = None) -> RNestedCombination:
    """
    ``Ω_n`` over the ``(n-1)!`` right-nested commutators closed by ``A(t_1)`` or ``A(t_n)``.

    For ``anchor="first"`` the coefficient of ``A[σ(2), ..., σ(n), 1]`` is
    ``(-1)^{d_b+1} d_a! (d_b+1)! / n!`` with ``d_a, d_b`` the ascents and descents
    of ``(σ(2), ..., σ(n))``. For ``anchor="last"`` the coefficient of
    ``A[σ(1), ..., σ(n-1), n]`` is ``(-1)^{d_b} / (n · C(n-1, d_b))``.

    >>> omega_rnested(3).sorted_items()
    [((2, 3, 1), Fraction(-1, 6)), ((3, 2, 1), Fraction(1, 3))]
    """
    _check_order(n, cap)
    a = _anchor_index(n, anchor)
    if n == 1:
        return RNestedCombination(1, anchor, Combination({(1,): 1}))
    terms: dict[tuple[int, ...], Fraction] = {}
    if anchor == "first":
        nf = factorial(n)
        for rest in itertools.permutations(range(2, n + 1)):
            da, db = ascents(rest), descents(rest)
            terms[rest + (a,)] = Fraction((-1) ** (db + 1) * factorial(da) * factorial(db + 1), nf)
    else:
        for rest in permutations(n - 1):
            db = descents(rest)
            terms[rest + (a,)] = Fraction((-1) ** db, n * comb(n - 1, db))
    return RNestedCombination(n, anchor, Combination(terms))


@lru_cache(maxsize=None)
def _bracket_template(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # expansion of [x_0, [x_1, ... [x_{n-2}, x_{n-1}]...]] as signed position words
    words: list[tuple[tuple[int, ...], int]] = [((n - 1,), 1)]
    for pos in range(n - 2, -1, -1):
        nxt = []
        for w, s in words:
            nxt.append(((pos,) + w, s))
            nxt.append((w + (pos,), -s))
        words = nxt
    return tuple(words)


def expand_bracket(letters: Sequence) -> list[tuple[tuple, int]]:
    """
    Signed words of the right-nested bracket ``[l_1, [l_2, ... [l_{n-1}, l_n]...]]``.

    >>> expand_bracket((2, 1))
    [((2, 1), 1), ((1, 2), -1)]
    """
    letters = tuple(letters)
    return [(tuple(letters[p] for p in w), s) for w, s in _bracket_template(len(letters))]


def expand_rnested(c: RNestedCombination | Iterable[tuple[Sequence[int], Fraction]]) -> Combination:
    """
    Word-basis image of a right-nested combination, by distributing ``[X, Y] = XY - YX``.

    Accepts an :class:`RNestedCombination` or any iterable of ``(indices, coefficient)``
    pairs (possibly with repeated index sequences, as produced by :func:`dsw_project`).
    """
    items = c.terms.items() if isinstance(c, RNestedCombination) else c
    acc: dict[Permutation, Fraction] = {}
    for indices, coeff in items:
        for w, s in expand_bracket(indices):
            acc[w] = acc.get(w, 0) + s * coeff
    return Combination(acc)


def dragt_forest_extract(x: Combination, anchor: Anchor = "first") -> RNestedCombination:
    """
    Read off right-nested commutator coefficients from a homogeneous word combination.

    The coefficient of ``A[k, j, ..., i, a]`` is the coefficient of the word
    ``(k j ... i a)``, where ``a`` is the anchor index. The result is expanded
    again and compared with ``x``; a mismatch means ``x`` has no such
    decomposition and raises :class:`NotDecomposableError`.
    """
    if not x.is_homogeneous():
        raise ValueError(f"mixed grades {sorted(x.grades())}")
    n = x.grade
    if n == 0:
        raise ValueError("grade-0 elements have no commutator decomposition")
    a = _anchor_index(n, anchor)
    terms = {w: c for w, c in x.items() if w[-1] == a}
    result = RNestedCombination(n, anchor, Combination(terms))
    if expand_rnested(result) != x:
        raise NotDecomposableError("word combination is not a Lie element over the chosen anchor")
    return result


def dsw_project(x: Combination) -> list[tuple[tuple[int, ...], Fraction]]:
    """
    Replace every word by ``1/n`` times its right-nested bracket.

    The output is one (indices, coefficient) pair per input term, in canonical
    order, and is deliberately not reduced: the brackets are linearly dependent.
    Expanding it returns ``x`` exactly when ``x`` is a Lie element.
    """
    n = x.grade
    return [(w, c / n) for w, c in x.sorted_items()]


def is_lie_element(x: Combination) -> bool:
    """Dynkin-Specht-Wever test: ``x`` is fixed by bracketing-and-dividing."""
    return expand_rnested(dsw_project(x)) == x
