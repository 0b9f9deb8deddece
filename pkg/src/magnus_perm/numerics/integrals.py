"""
Numerical values of iterated integrals ``A(σ)`` and of whole Magnus terms.

Two evaluators are provided and are meant to check each other:

* the exact evaluator distributes a polynomial ``A(t)`` into monomials and
  integrates each monomial over the ordered simplex in exact rationals; only the
  final contraction with matrix products is done in floating point;
* the Monte Carlo evaluator samples ordered times uniformly from the simplex and
  averages the integrand, reporting a standard error.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, ceil

import numpy as np

from ..magnus import RNestedCombination, expand_rnested
from ..perm import Combination, check_permutation, inverse
from .polynomial import MatrixPolynomial

DEFAULT_BLOCK_SIZE = 100_000


@lru_cache(maxsize=None)
def simplex_monomial(powers: tuple[int, ...]) -> Fraction:
    """
    ``∫_{t > t_1 > ... > t_n} Π_m t_m^{p_m}`` divided by ``t^{n + Σp}``.

    Integrating from the innermost variable outwards gives
    ``Π_m 1 / Σ_{i >= m} (p_i + 1)``.

    >>> simplex_monomial((0, 0)), simplex_monomial((1, 0))
    (Fraction(1, 2), Fraction(1, 3))
    """
    out = Fraction(1)
    tail = 0
    for p in reversed(powers):
        tail += p + 1
        out /= tail
    return out


@lru_cache(maxsize=64)
def position_weights(x: Combination, degree: int) -> np.ndarray:
    """
    Scalar weights ``W[j_1, ..., j_n]`` such that the word combination ``x`` evaluates to
    ``Σ_j W[j] t^{n + |j|} A_{j_1} ... A_{j_n}`` for ``A(t) = Σ_k A_k t^k`` of the given degree.

    Accumulated exactly and converted to floats once.
    """
    n = x.grade
    acc: dict[tuple[int, ...], Fraction] = {}
    for sigma, c in x.items():
        inv = inverse(sigma)
        for js in itertools.product(range(degree + 1), repeat=n):
            # variable t_m sits at position inv[m]
            powers = tuple(js[inv[m] - 1] for m in range(n))
            acc[js] = acc.get(js, 0) + c * simplex_monomial(powers)
    w = np.zeros((degree + 1,) * n)
    for js, v in acc.items():
        w[js] = float(v)
    w.setflags(write=False)
    return w


def _as_words(x) -> Combination:
    if isinstance(x, RNestedCombination):
        return expand_rnested(x)
    if isinstance(x, Combination):
        return x
    raise TypeError(f"expected a word or right-nested combination, got {type(x).__name__}")


def evaluate_exact(x, a: MatrixPolynomial, t: float) -> np.ndarray:
    """Exact-evaluator value of a homogeneous word or right-nested combination."""
    if not isinstance(a, MatrixPolynomial):
        raise TypeError("the exact evaluator needs A(t) as a MatrixPolynomial")
    words = _as_words(x)
    if not words:
        return np.zeros((a.dim, a.dim), dtype=complex)
    n = words.grade
    if n == 0:
        return words.coefficient(()) * np.eye(a.dim, dtype=complex)
    w = position_weights(words, a.degree)
    total_degree = np.indices(w.shape).sum(axis=0) + n
    scaled = w * float(t) ** total_degree
    return np.tensordot(scaled, a.position_products(n), axes=n)


def iterated_integral_exact(sigma: Sequence[int], a: MatrixPolynomial, t: float) -> np.ndarray:
    """
    ``A(σ)`` at time ``t`` for polynomial ``A``.

    >>> a = MatrixPolynomial([[[2.0]]])
    >>> complex(iterated_integral_exact((1, 2), a, 1.0)[0, 0])
    (2+0j)
    """
    sigma = check_permutation(sigma)
    return evaluate_exact(Combination({sigma: 1}), a, t)


@dataclass(frozen=True)
class MCEstimate:
    """Monte Carlo value with entrywise standard errors."""

    value: np.ndarray
    stderr: np.ndarray
    samples: int

    @property
    def stderr_norm(self) -> float:
        """Frobenius norm of the entrywise standard errors."""
        return float(np.sqrt(np.sum(self.stderr**2)))

    def agrees_with(self, exact: np.ndarray, n_sigma: float = 4.0, atol: float = 1e-12) -> bool:
        """``‖value - exact‖_F <= n_sigma * stderr_norm + atol``."""
        return float(np.linalg.norm(self.value - exact)) <= n_sigma * self.stderr_norm + atol


def _batched(a: Callable, times: np.ndarray) -> np.ndarray:
    out = np.asarray(a(times))
    if out.shape[:-2] == times.shape:
        return out
    return np.stack([np.asarray(a(float(s))) for s in times])


def monte_carlo(
    x,
    a: Callable,
    t: float,
    samples: int,
    seed: int,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> MCEstimate:
    """
    Monte Carlo value of a word or right-nested combination.

    Samples are drawn in blocks; block ``b`` uses a PCG64 stream from
    ``SeedSequence(seed).spawn(...)[b]``, so the result depends only on
    ``(seed, samples, block_size)``. Right-nested terms are evaluated as nested
    commutators of the sampled matrices.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    nested = isinstance(x, RNestedCombination)
    if nested:
        n = x.order
        terms = [(idx, complex(c)) for idx, c in x.sorted_items()]
    elif isinstance(x, Combination):
        n = x.grade
        terms = [(w, complex(c)) for w, c in x.sorted_items()]
    else:
        raise TypeError(f"expected a word or right-nested combination, got {type(x).__name__}")
    if n == 0:
        raise ValueError("grade must be >= 1")

    n_blocks = ceil(samples / block_size)
    streams = np.random.SeedSequence(seed).spawn(n_blocks)
    count = 0
    mean = None
    m2 = None
    for b, stream in enumerate(streams):
        m = min(block_size, samples - b * block_size)
        rng = np.random.Generator(np.random.PCG64(stream))
        times = -np.sort(-rng.uniform(0.0, t, size=(m, n)), axis=1)
        mats = [_batched(a, times[:, k]) for k in range(n)]
        f = np.zeros_like(mats[0], dtype=complex)
        for idx, c in terms:
            if nested:
                acc = mats[idx[-1] - 1]
                for i in reversed(idx[:-1]):
                    left = mats[i - 1]
                    acc = left @ acc - acc @ left
            else:
                acc = mats[idx[0] - 1]
                for i in idx[1:]:
                    acc = acc @ mats[i - 1]
            f = f + c * acc
        block_mean = f.mean(axis=0)
        block_m2 = np.sum(np.abs(f - block_mean) ** 2, axis=0)
        if mean is None:
            mean, m2, count = block_mean, block_m2, m
        else:
            # Chan et al. pairwise update
            total = count + m
            delta = block_mean - mean
            mean = mean + delta * (m / total)
            m2 = m2 + block_m2 + np.abs(delta) ** 2 * (count * m / total)
            count = total
    volume = float(t) ** n / factorial(n)
    var = m2 / (count - 1) if count > 1 else np.zeros_like(m2)
    return MCEstimate(value=volume * mean, stderr=volume * np.sqrt(var / count), samples=count)


def iterated_integral_mc(
    sigma: Sequence[int], a: Callable, t: float, samples: int, seed: int, block_size: int = DEFAULT_BLOCK_SIZE
) -> MCEstimate:
    """Monte Carlo estimate of ``A(σ)`` at time ``t``."""
    sigma = check_permutation(sigma)
    return monte_carlo(Combination({sigma: 1}), a, t, samples, seed, block_size)


def evaluate_series(
    x,
    a,
    t: float,
    evaluator: str = "exact",
    *,
    samples: int = 100_000,
    seed: int = 0,
) -> np.ndarray:
    """
    Matrix value of a homogeneous Magnus term given in either basis.

    ``evaluator="exact"`` requires a :class:`MatrixPolynomial` and evaluates
    right-nested input through its word expansion. ``evaluator="mc"`` accepts
    any callable ``A`` and evaluates nested commutators sample by sample.
    """
    if evaluator == "exact":
        return evaluate_exact(x, a, t)
    if evaluator == "mc":
        return monte_carlo(x, a, t, samples, seed).value
    raise ValueError(f"unknown evaluator {evaluator!r}")
