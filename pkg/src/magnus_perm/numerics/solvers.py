"""
Reference solutions of ``Y' = A(t) Y, Y(0) = I`` and truncated Magnus propagation.
"""
from __future__ import annotations

import time
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass, field
from math import ceil

import numpy as np

from ..magnus import omega_rnested, omega_word
from .integrals import evaluate_exact, monte_carlo
from .linalg import matrix_exponential, unitarity_defect
from .polynomial import MatrixPolynomial
from .problems import Problem

MAX_NEUMANN_ORDER = 40
MAX_RK4_STEPS = 1 << 16


def neumann_reference(a: MatrixPolynomial, t: float, order: int) -> np.ndarray:
    """
    ``I + Σ_{n<=order} P_n(t)`` with ``P_n(s) = ∫_0^s A(r) P_{n-1}(r) dr``.

    Each ``P_n`` is carried as a matrix polynomial in ``s`` and integrated
    termwise, so no permutation machinery is involved.
    """
    if not 0 <= order <= MAX_NEUMANN_ORDER:
        raise ValueError(f"order must be in [0, {MAX_NEUMANN_ORDER}]")
    d = a.dim
    coeffs = a.coefficients
    term = np.eye(d, dtype=complex)[None]  # P_0
    y = np.eye(d, dtype=complex)
    for _ in range(order):
        prod = np.zeros((term.shape[0] + a.degree, d, d), dtype=complex)
        for i, ai in enumerate(coeffs):
            prod[i : i + term.shape[0]] += np.einsum("ab,kbc->kac", ai, term)
        integ = np.zeros((prod.shape[0] + 1, d, d), dtype=complex)
        integ[1:] = prod / np.arange(1, prod.shape[0] + 1)[:, None, None]
        term = integ
        powers = float(t) ** np.arange(term.shape[0])
        y = y + np.tensordot(powers, term, axes=1)
    return y


@dataclass(frozen=True)
class DenseReference:
    value: np.ndarray
    error_estimate: float
    steps: int
    converged: bool


def _rk4(a: Callable, t: float, steps: int, d: int) -> np.ndarray:
    h = t / steps
    y = np.eye(d, dtype=complex)
    for i in range(steps):
        s = i * h
        a0 = np.asarray(a(s))
        am = np.asarray(a(s + h / 2))
        a1 = np.asarray(a(s + h))
        k1 = a0 @ y
        k2 = am @ (y + h / 2 * k1)
        k3 = am @ (y + h / 2 * k2)
        k4 = a1 @ (y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return y


def dense_reference(a: Callable, t: float, steps: int | None = None, tol: float = 1e-13) -> DenseReference:
    """
    Classical fourth-order Runge-Kutta with a Richardson error estimate.

    Starting from ``steps`` (default 64) the step count is doubled until
    ``‖Y_{2m} - Y_m‖_F / 15 <= tol`` or the step cap is reached; the finer
    solution is returned with ``converged=False`` in the latter case.
    """
    d = np.asarray(a(0.0)).shape[0]
    if t == 0:
        return DenseReference(np.eye(d, dtype=complex), 0.0, 0, True)
    m = steps or 64
    coarse = _rk4(a, t, m, d)
    while True:
        fine = _rk4(a, t, 2 * m, d)
        est = float(np.linalg.norm(fine - coarse)) / 15.0
        if est <= tol or 4 * m > MAX_RK4_STEPS:
            return DenseReference(fine, est, 2 * m, est <= tol)
        m *= 2
        coarse = fine


def magnus_omega(a: MatrixPolynomial, t: float, order: int) -> np.ndarray:
    """``Σ_{k<=order} Ω_k(t)`` with the exact evaluator."""
    return sum(evaluate_exact(omega_word(k), a, t) for k in range(1, order + 1))


def magnus_truncated(a: MatrixPolynomial, t: float, order: int) -> np.ndarray:
    """``exp(Σ_{k<=order} Ω_k(t))`` in a single step from 0 to ``t``."""
    return matrix_exponential(magnus_omega(a, t, order))


@dataclass
class EvalReport:
    order: int
    t: float
    error: float
    unitarity_defect: float
    wall_time: float
    problem: str = ""
    step: float | None = None
    evaluator: str = "exact"
    reference_error_estimate: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def magnus_propagate(
    problem: Problem, h: float, order: int, t: float | None = None, reference: np.ndarray | None = None
) -> tuple[np.ndarray, EvalReport]:
    """
    Truncated Magnus integrator with equal steps of size about ``h`` up to ``t``
    (the problem horizon by default).

    On every step the polynomial ``A`` is re-expanded about the step origin so
    the exact evaluator applies; the step propagator is ``exp(Σ_{k<=order} Ω_k(h))``.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    t_end = problem.horizon if t is None else float(t)
    start = time.perf_counter()
    steps = max(1, int(round(t_end / h)))
    if abs(steps * h - t_end) > 1e-12 * max(1.0, t_end):
        steps = max(1, ceil(t_end / h))
    step = t_end / steps
    y = np.eye(problem.dim, dtype=complex)
    for i in range(steps):
        local = problem.a.shift(i * step)
        y = magnus_truncated(local, step, order) @ y
    elapsed = time.perf_counter() - start
    if reference is None:
        ref = dense_reference(problem.a, t_end)
        reference, ref_est = ref.value, ref.error_estimate
    else:
        ref_est = None
    report = EvalReport(
        order=order,
        t=t_end,
        error=float(np.linalg.norm(y - reference)),
        unitarity_defect=unitarity_defect(y),
        wall_time=elapsed,
        problem=problem.name,
        step=step,
        reference_error_estimate=ref_est,
    )
    return y, report


def error_slope(a: MatrixPolynomial, order: int, times: Sequence[float]) -> tuple[float, list[float]]:
    """
    Least-squares slope of ``log ‖exp(Σ_{k<=order} Ω_k(t)) - Y_ref(t)‖`` against ``log t``.

    ``Y_ref`` is the dense Runge-Kutta reference. Returns the slope and the errors.
    """
    errors = []
    for s in times:
        ref = dense_reference(a, s).value
        errors.append(float(np.linalg.norm(magnus_truncated(a, s, order) - ref)))
    slope = float(np.polyfit(np.log(times), np.log(errors), 1)[0])
    return slope, errors


EXACT_TOL = 1e-12
MC_SIGMAS = 4.0
SLOPE_TOL = 0.25
NOISE_FLOOR = 1e-13


def _fit(times: Sequence[float], errors: Sequence[float]) -> float | None:
    if len(times) < 2:
        return None
    return float(np.polyfit(np.log(times), np.log(errors), 1)[0])


def verify(
    problem: Problem,
    order: int,
    t: float | None = None,
    evaluator: str = "exact",
    samples: int = 100_000,
    seed: int = 0,
) -> EvalReport:
    """
    One-step truncated Magnus check of a builtin problem at time ``t``.

    The report's ``extra`` holds the individual checks and ``passed``:

    * ``reference_converged``: the Runge-Kutta reference met its error target;
    * ``constant_exact`` (constant ``A`` only): error within ``1e-12``;
    * ``unitary`` (skew-Hermitian ``A`` only): defect within ``1e-12``;
    * ``mc_agrees`` (``evaluator="mc"``): every Monte Carlo ``Ω_k`` within four
      reported standard errors (plus ``1e-12`` for roundoff) of the exact value;
    * ``order_at_least``: the slope fitted on ``t·2^-k, k = 0..4`` (points below
      the roundoff floor dropped) is at least ``order + 1 - 0.25``.
    """
    t = problem.horizon if t is None else float(t)
    a = problem.a
    start = time.perf_counter()
    checks: dict[str, bool] = {}
    extra: dict = {}
    if evaluator == "exact":
        omega = magnus_omega(a, t, order)
    elif evaluator == "mc":
        omega = np.zeros((a.dim, a.dim), dtype=complex)
        agree = True
        deviations = []
        for k in range(1, order + 1):
            est = monte_carlo(omega_rnested(k, "first"), a, t, samples, seed + k)
            exact_k = evaluate_exact(omega_word(k), a, t)
            deviations.append([float(np.linalg.norm(est.value - exact_k)), est.stderr_norm])
            agree = agree and est.agrees_with(exact_k, MC_SIGMAS, EXACT_TOL)
            omega = omega + est.value
        extra["mc_deviation_and_stderr"] = deviations
        checks["mc_agrees"] = agree
    else:
        raise ValueError(f"unknown evaluator {evaluator!r}")
    y = matrix_exponential(omega)
    elapsed = time.perf_counter() - start

    ref = dense_reference(a, t)
    checks["reference_converged"] = ref.converged
    error = float(np.linalg.norm(y - ref.value))
    defect = unitarity_defect(y)
    if problem.name == "constant" or a.degree == 0:
        checks["constant_exact"] = error <= EXACT_TOL
    if problem.structure == "skew-hermitian":
        checks["unitary"] = defect <= EXACT_TOL

    times = [t * 2.0**-k for k in range(5)]
    _, errors = error_slope(a, order, times)
    kept = [(s, e) for s, e in zip(times, errors) if e > NOISE_FLOOR]
    slope = _fit([s for s, _ in kept], [e for _, e in kept])
    extra["fit_times"] = times
    extra["fit_errors"] = errors
    extra["fitted_slope"] = slope
    extra["fitted_slope_all_points"] = _fit(times, errors) if all(e > 0 for e in errors) else None
    if slope is not None:
        checks["order_at_least"] = slope >= order + 1 - SLOPE_TOL
    extra["checks"] = checks
    extra["passed"] = all(checks.values())

    return EvalReport(
        order=order,
        t=t,
        error=error,
        unitarity_defect=defect,
        wall_time=elapsed,
        problem=problem.name,
        step=t,
        evaluator=evaluator,
        reference_error_estimate=ref.error_estimate,
        extra=extra,
    )
