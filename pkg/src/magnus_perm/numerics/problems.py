"""Builtin test problems ``Y' = A(t) Y`` with polynomial ``A``."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .polynomial import MatrixPolynomial

LINEAR_SEED = 20170401

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True, eq=False)
class Problem:
    name: str
    a: MatrixPolynomial
    horizon: float
    structure: str = "none"

    def __post_init__(self):
        if self.structure not in ("none", "skew-hermitian"):
            raise ValueError(f"unknown structure tag {self.structure!r}")
        if self.structure == "skew-hermitian":
            for s in np.linspace(0.0, self.horizon, 7):
                m = self.a(s)
                if not np.allclose(m.conj().T, -m, rtol=0, atol=1e-14):
                    raise ValueError(f"{self.name}: A({s}) is not skew-Hermitian")

    @property
    def dim(self) -> int:
        return self.a.dim


def _linear3() -> Problem:
    rng = np.random.default_rng(LINEAR_SEED)
    a0, a1 = rng.uniform(-1.0, 1.0, size=(2, 3, 3))
    return Problem("linear3", MatrixPolynomial([a0, a1]), horizon=0.5)


def _skew2() -> Problem:
    h0 = PAULI_Z + 0.5 * PAULI_X
    h1 = 2.0 * PAULI_X
    h2 = 1.5 * PAULI_Y
    return Problem("skew2", MatrixPolynomial([-1j * h0, -1j * h1, -1j * h2]), horizon=0.5, structure="skew-hermitian")


def _constant() -> Problem:
    rng = np.random.default_rng(LINEAR_SEED + 1)
    return Problem("constant", MatrixPolynomial([rng.uniform(-1.0, 1.0, size=(3, 3))]), horizon=0.5)


PROBLEMS = {
    "linear3": _linear3,
    "skew2": _skew2,
    "constant": _constant,
}


def get_problem(name: str) -> Problem:
    try:
        return PROBLEMS[name]()
    except KeyError:
        raise KeyError(f"unknown problem {name!r}; choose from {sorted(PROBLEMS)}") from None
