"""Matrix-coefficient polynomials ``A(t) = Σ_j A_j t^j``."""
from __future__ import annotations

from math import comb

import numpy as np


class MatrixPolynomial:
    """
    Polynomial in ``t`` with square matrix coefficients, stored as an array of
    shape ``(degree + 1, d, d)``.

    Calling the polynomial with a scalar returns a ``(d, d)`` matrix; with an
    array of times of shape ``S`` it returns ``S + (d, d)``.
    """

    def __init__(self, coefficients):
        c = np.asarray(coefficients, dtype=complex)
        if c.ndim == 2:
            c = c[None]
        if c.ndim != 3 or c.shape[1] != c.shape[2] or c.shape[1] < 1 or c.shape[0] < 1:
            raise ValueError(f"coefficients must have shape (p+1, d, d), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        self.coefficients = c
        self._products: dict[int, np.ndarray] = {}

    @property
    def degree(self) -> int:
        return self.coefficients.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.coefficients.shape[1]

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape + (self.dim, self.dim), dtype=complex)
        for c in self.coefficients[::-1]:
            out = out * t[..., None, None] + c
        return out

    def shift(self, t0: float) -> "MatrixPolynomial":
        """Re-expand about ``t0``: the returned polynomial ``B`` has ``B(s) = A(t0 + s)``."""
        p = self.degree
        new = np.zeros_like(self.coefficients)
        for k in range(p + 1):
            for j in range(k, p + 1):
                new[k] += comb(j, k) * t0 ** (j - k) * self.coefficients[j]
        return MatrixPolynomial(new)

    def position_products(self, n: int) -> np.ndarray:
        """
        All products ``A_{j_1} A_{j_2} ... A_{j_n}``, indexed by ``(j_1, ..., j_n)``.

        Shape ``(p+1,)*n + (d, d)``; cached per ``n``.
        """
        if n not in self._products:
            c = self.coefficients
            prod = c
            for _ in range(1, n):
                prod = np.einsum("...ab,jbc->...jac", prod, c)
            self._products[n] = prod
        return self._products[n]

    def is_skew_hermitian(self, atol: float = 1e-14) -> bool:
        c = self.coefficients
        return bool(np.allclose(c, -np.conj(np.swapaxes(c, 1, 2)), rtol=0, atol=atol))

    def __repr__(self) -> str:
        return f"MatrixPolynomial(degree={self.degree}, dim={self.dim})"
