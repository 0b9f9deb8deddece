"""Matrix-valued evaluation of Magnus terms, references and propagation."""
from .integrals import (
    MCEstimate,
    evaluate_exact,
    evaluate_series,
    iterated_integral_exact,
    iterated_integral_mc,
    monte_carlo,
    position_weights,
    simplex_monomial,
)
from .linalg import commutator, matrix_exponential, unitarity_defect
from .polynomial import MatrixPolynomial
from .problems import PROBLEMS, Problem, get_problem
from .solvers import (
    DenseReference,
    EvalReport,
    dense_reference,
    error_slope,
    magnus_omega,
    magnus_propagate,
    magnus_truncated,
    neumann_reference,
    verify,
)
