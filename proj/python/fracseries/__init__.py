"""Alpha-power-series solvers for fractional differential equations of order in (0,1).

Thin python layer over the C++ core: special functions (rho, gamma inverse,
Mittag-Leffler), the scalar Cauchy solvers, the Frobenius construction for
regular singularities, the small-divisor analysis of the irregular model
equation, and the quadrature oracle.
"""

from ._fracseries import (  # noqa: F401
    AlphaSeries,
    DomainError,
    NumericError,
    PreciseAlpha,
    PreconditionError,
    __version__,
    beta_seq,
    build_formal_solution,
    caputo_derivative_quadrature,
    check_order_bound,
    diophantine_analyze,
    duality_check_monomial,
    estimate_order,
    formal_solution,
    frobenius_solve,
    gamma_inverse,
    gl_derivative,
    gl_integral,
    log_gamma,
    mellin_kappa,
    mellin_kappa_quadrature,
    mittag_leffler,
    model_scalar_exponent,
    mollifier_convergence_demo,
    pairing_growth,
    partial_sums,
    rho,
    solve,
    spectrum_report,
)

__all__ = [
    "AlphaSeries",
    "DomainError",
    "NumericError",
    "PreciseAlpha",
    "PreconditionError",
    "beta_seq",
    "build_formal_solution",
    "caputo_derivative_quadrature",
    "check_order_bound",
    "diophantine_analyze",
    "duality_check_monomial",
    "estimate_order",
    "formal_solution",
    "frobenius_solve",
    "gamma_inverse",
    "gl_derivative",
    "gl_integral",
    "log_gamma",
    "mellin_kappa",
    "mellin_kappa_quadrature",
    "mittag_leffler",
    "model_scalar_exponent",
    "mollifier_convergence_demo",
    "pairing_growth",
    "partial_sums",
    "rho",
    "solve",
    "spectrum_report",
]
