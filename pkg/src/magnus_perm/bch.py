"""
Homogeneous terms ``Z_n(X, Y)`` of ``log(e^X e^Y)`` from the Magnus series.

Take ``A(t) = Y`` on ``[0, 1)`` and ``A(t) = X`` on ``[1, 2]``. Then the solution
of ``U' = A U`` at ``t = 2`` is ``e^X e^Y`` and ``Ω(2) = log(e^X e^Y)``. In an
iterated integral of grade ``n``, the ordered times ``t_1 > ... > t_n`` split as
``t_1..t_j`` in ``[1, 2]`` (volume ``1/j!``) and the rest in ``[0, 1)`` (volume
``1/(n-j)!``), so ``A(σ)`` becomes a sum over ``j`` of words in ``X`` and ``Y``.

Words are plain strings over ``"XY"``; combinations are keyed by them.
"""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import factorial
from typing import Literal

import numpy as np

from .magnus import _check_order, expand_bracket, omega_rnested, omega_word
from .perm import Combination


def _split_weight(n: int, j: int) -> Fraction:
    return Fraction(1, factorial(j) * factorial(n - j))


def _letters(indices: Sequence[int], j: int) -> str:
    return "".join("X" if i <= j else "Y" for i in indices)


def bch_words(n: int, route: Literal["words", "rnested"] = "words", *, cap: int | None = None) -> Combination:
    """
    ``Z_n(X, Y)`` as a combination of words of length ``n``.

    ``route="words"`` substitutes into the word form of ``Ω_n``;
    ``route="rnested"`` substitutes into the commutator form anchored at ``t_n``
    and expands the brackets of letters. Both give the same element.

    >>> bch_words(2).sorted_items()
    [('XY', Fraction(1, 2)), ('YX', Fraction(-1, 2))]
    """
    _check_order(n, cap)
    acc: dict[str, Fraction] = {}
    if route == "words":
        for sigma, c in omega_word(n, cap=cap).items():
            for j in range(n + 1):
                w = _letters(sigma, j)
                acc[w] = acc.get(w, 0) + c * _split_weight(n, j)
    elif route == "rnested":
        for idx, c in omega_rnested(n, "last", cap=cap).terms.items():
            for j in range(n + 1):
                cj = c * _split_weight(n, j)
                for w, s in expand_bracket(_letters(idx, j)):
                    key = "".join(w)
                    acc[key] = acc.get(key, 0) + s * cj
    else:
        raise ValueError(f"unknown route {route!r}")
    return Combination(acc)


def bracket(letters: str) -> Combination:
    """
    Word expansion of the right-nested bracket of the given letters.

    >>> bracket("XY").sorted_items()
    [('XY', Fraction(1, 1)), ('YX', Fraction(-1, 1))]
    """
    acc: dict[str, int] = {}
    for w, s in expand_bracket(tuple(letters)):
        key = "".join(w)
        acc[key] = acc.get(key, 0) + s
    return Combination(acc)


def evaluate_words(x: Combination, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Substitute matrices for the letters of every word and sum."""
    mats = {"X": np.asarray(X), "Y": np.asarray(Y)}
    d = mats["X"].shape[0]
    out = np.zeros((d, d), dtype=np.result_type(mats["X"], mats["Y"], float))
    for w, c in x.sorted_items():
        m = np.eye(d, dtype=out.dtype)
        for letter in w:
            m = m @ mats[letter]
        out += float(c) * m
    return out
