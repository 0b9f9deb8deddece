"""
Permutations, repeat-free words and formal rational linear combinations of them.

Permutations are stored in one-line notation as tuples of 1-indexed images,
``(σ(1), σ(2), ..., σ(n))``. The empty tuple is the grade-0 permutation and acts
as the unit of both products in :mod:`magnus_perm.hopf`. Words are tuples of
distinct positive integers; a word whose letters are exactly ``{1, ..., n}`` is a
permutation of grade ``n``.

Coefficients are :class:`fractions.Fraction` throughout.
"""
from __future__ import annotations

import itertools
from collections.abc import Hashable, Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from numbers import Rational
from typing import Any

Word = tuple[int, ...]
Permutation = tuple[int, ...]


class InvalidWordError(ValueError):
    """Raised when a word has repeated letters or is not a permutation when one is required."""


def is_word(letters: Sequence[int]) -> bool:
    """
    True when ``letters`` is a sequence of distinct positive integers.

    >>> is_word((3, 1, 7)), is_word((1, 1)), is_word(())
    (True, False, True)
    """
    return all(isinstance(a, int) and a > 0 for a in letters) and len(set(letters)) == len(letters)


def is_permutation(letters: Sequence[int]) -> bool:
    """
    True when ``letters`` is a permutation of ``{1, ..., len(letters)}``.

    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 3), (1, 1)]]
    [True, True, True, False, False]
    """
    n = len(letters)
    return sorted(letters) == list(range(1, n + 1))


def check_word(letters: Sequence[int]) -> Word:
    w = tuple(letters)
    if not is_word(w):
        raise InvalidWordError(f"not a repeat-free word of positive letters: {w}")
    return w


def check_permutation(letters: Sequence[int]) -> Permutation:
    p = tuple(letters)
    if not is_permutation(p):
        raise InvalidWordError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def identity(n: int) -> Permutation:
    """
    >>> identity(0), identity(3)
    ((), (1, 2, 3))
    """
    return tuple(range(1, n + 1))


def permutations(n: int) -> Iterator[Permutation]:
    """All permutations of grade ``n`` in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def ascents(p: Sequence[int]) -> int:
    """
    Number of positions ``i`` with ``p[i] < p[i+1]``.

    >>> ascents((2, 4, 3, 1)), ascents((1, 2, 3)), ascents(())
    (1, 2, 0)
    """
    return sum(1 for a, b in zip(p, p[1:]) if a < b)


def descents(p: Sequence[int]) -> int:
    """
    Number of positions ``i`` with ``p[i] > p[i+1]``.

    >>> descents((2, 4, 3, 1)), descents((3, 2, 1)), descents(())
    (2, 2, 0)
    """
    return sum(1 for a, b in zip(p, p[1:]) if a > b)


def standardize(letters: Sequence[int]) -> Permutation:
    """
    Apply the unique increasing bijection from the letters of ``w`` onto ``{1, ..., |w|}``.

    >>> standardize((3, 2, 4)), standardize(()), standardize((7, 1, 9))
    ((2, 1, 3), (), (2, 1, 3))
    """
    w = check_word(letters)
    rank = {a: i for i, a in enumerate(sorted(w), start=1)}
    return tuple(rank[a] for a in w)


def inverse(p: Sequence[int]) -> Permutation:
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(p)
    for i, a in enumerate(p, start=1):
        inv[a - 1] = i
    return tuple(inv)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``(p ∘ q)(i) = p(q(i))``."""
    return tuple(p[a - 1] for a in q)


def reverse(p: Sequence[int]) -> Permutation:
    return tuple(reversed(p))


def shift(p: Sequence[int], k: int) -> Word:
    """
    Add ``k`` to every letter.

    >>> shift((1, 2), 1), shift((2, 1), 2)
    ((2, 3), (4, 3))
    """
    return tuple(a + k for a in p)


def restrict(letters: Sequence[int], keep: Iterable[int]) -> Word:
    """
    Subsequence of ``w`` made of the letters in ``keep``, in their original order.

    >>> restrict((2, 4, 3, 1), {1, 2})
    (2, 1)
    """
    keep = set(keep)
    return tuple(a for a in letters if a in keep)


def _as_fraction(c: Any) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Combination(Mapping):
    """
    Finite formal linear combination with exact rational coefficients.

    Keys are any hashable, totally ordered basis labels (permutations, pairs of
    permutations for tensors, strings for words in X and Y). Zero coefficients
    are never stored, so two combinations are equal exactly when their
    canonical forms agree. Instances are immutable.

    >>> x = Combination({(1, 2): Fraction(1, 2), (2, 1): Fraction(-1, 2)})
    >>> (x + x)[(1, 2)]
    Fraction(1, 1)
    >>> (x - x) == Combination()
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] | None = None):
        acc: dict[Hashable, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                acc[key] = acc.get(key, Fraction(0)) + _as_fraction(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Hashable, Fraction]) -> "Combination":
        # terms must already be zero-free with Fraction values
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, key: Hashable, coefficient: Any = 1) -> "Combination":
        return cls({key: coefficient})

    def __getitem__(self, key: Hashable) -> Fraction:
        return self._terms[key]

    def coefficient(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    def sorted_items(self) -> list[tuple[Hashable, Fraction]]:
        """Terms in canonical (lexicographic key) order."""
        return sorted(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Combination):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Combination") -> "Combination":
        if not isinstance(other, Combination):
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms.items():
            s = acc.get(k, 0) + v
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return Combination._trusted(acc)

    def __neg__(self) -> "Combination":
        return Combination._trusted({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "Combination") -> "Combination":
        if not isinstance(other, Combination):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Any) -> "Combination":
        s = _as_fraction(scalar)
        if s == 0:
            return Combination()
        return Combination._trusted({k: v * s for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Any) -> "Combination":
        return self * (1 / _as_fraction(scalar))

    def map_keys(self, f) -> "Combination":
        """Apply ``f`` to every basis label, collecting coefficients linearly."""
        return Combination((f(k), v) for k, v in self._terms.items())

    def grades(self) -> set[int]:
        return {len(k) for k in self._terms}

    @property
    def grade(self) -> int:
        """Common length of all keys; raises ``ValueError`` for mixed grades."""
        gs = self.grades()
        if len(gs) > 1:
            raise ValueError(f"combination is not homogeneous, grades {sorted(gs)}")
        return gs.pop() if gs else 0

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def homogeneous_part(self, n: int) -> "Combination":
        return Combination._trusted({k: v for k, v in self._terms.items() if len(k) == n})

    def __repr__(self) -> str:
        if not self._terms:
            return "Combination()"
        body = " + ".join(f"{v}*{k}" for k, v in self.sorted_items())
        return f"Combination({body})"


PermCombination = Combination
HopfElement = Combination
