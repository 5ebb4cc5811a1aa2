#pragma once

#include "fracseries/alpha_series.hpp"

namespace fracseries::cauchy {

using series::AlphaSeries;
using series::Complex;

enum class Kind { RL, Caputo };

/// D^alpha u = A(t^alpha) u with A(z) = sum a_j z^j.
///
/// `initial` is u(0) for the Caputo kind and the coefficient of t^{alpha-1}
/// (equivalently the value of I^{1-alpha}u at 0+) for the RL kind.
struct ScalarProblem {
    Kind kind;
    Alpha alpha;
    std::vector<Complex> coeffs;  // a_0 .. a_m
    Complex initial;
    int truncation;
};

/// Offset-0 series with c_0 = initial and
///   c_n = (1/beta(n)) sum_{j<=min(m,n-1)} a_j c_{n-1-j}.
AlphaSeries solve_caputo(const ScalarProblem& p);

/// Offset-(alpha-1) series with c_0 = initial and
///   c_n = (1/rho(alpha-1+alpha n)) sum_{j<=min(m,n-1)} a_j c_{n-1-j}.
/// (rho(alpha-1) = 0 makes the n = 0 equation vacuous; c_0 is free.)
AlphaSeries solve_rl(const ScalarProblem& p);

AlphaSeries solve(const ScalarProblem& p);

struct OrderBoundReport {
    double estimate;        // NaN when degenerate
    double bound;           // (1 + deg A)/alpha
    double tolerance;       // slack allowed before flagging
    bool degenerate;        // too few nonzero coefficients to estimate
    bool violated;          // estimate > bound + tolerance
    int coefficients_used;
};

/// Empirical check of the order bound (1+m)/alpha for the Caputo problem.
/// Runs the recurrence in an extended-range representation (coefficients
/// underflow doubles long before n = 2000) and estimates the order from
/// coefficient log-magnitudes.
OrderBoundReport check_order_bound(const ScalarProblem& p, int truncation = 2000,
                                   double tolerance = 0.1);

}  // namespace fracseries::cauchy
