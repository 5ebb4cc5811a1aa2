#pragma once

#include <complex>
#include <vector>

#include "fracseries/special_functions.hpp"

namespace fracseries::series {

using Complex = std::complex<double>;

/// One term c * t^e or c * t^e * log t.  log_power = 1 only ever arises
/// from the Caputo derivative of t^{-k}, k natural; differentiating such a
/// term again is not supported.
struct LogMonomial {
    Complex coefficient;
    double exponent = 0.0;
    int log_power = 0;
};

/// Finite series sum_{n=0}^{N} c_n t^{offset + alpha n}.
///
/// Values are immutable after construction; every operation returns a new
/// series and never silently extends the truncation.
class AlphaSeries {
  public:
    AlphaSeries(Alpha alpha, double offset, std::vector<Complex> coeffs);

    static AlphaSeries zero(Alpha alpha, double offset, int truncation);

    Alpha alpha() const noexcept { return alpha_; }
    double offset() const noexcept { return offset_; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    Complex coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  private:
    Alpha alpha_;
    double offset_;
    std::vector<Complex> coeffs_;
};

struct EvalResult {
    Complex value;
    double tail_estimate;  // |c_N t^{offset + alpha N}|
};

/// D^alpha t^d = (Gamma(d+1)/Gamma(d+1-alpha)) t^{d-alpha}, d > -1.
/// Returns an exact zero coefficient at d = alpha-1.
LogMonomial rl_derivative_monomial(double d, Alpha alpha);

/// I^alpha t^d = (Gamma(d+1)/Gamma(d+1+alpha)) t^{d+alpha}, d > -1.
LogMonomial rl_integral_monomial(double d, Alpha alpha);

/// Caputo derivative of t^mu for mu < 0, distribution sense.
/// Non-integer mu: (Gamma(mu+1)/Gamma(mu+1-alpha)) t^{mu-alpha}.
/// mu = -k: ((-1)^{k-1} / ((k-1)! Gamma(-k+1-alpha))) t^{-k-alpha} log t.
LogMonomial caputo_derivative_monomial_negative(double mu, Alpha alpha);

/// Gelfond-Leontiev derivative: coefficient n-1 of the output is
/// c_n * beta(n); the truncation drops by one (a constant maps to the
/// zero series of truncation 0).  Requires offset 0.
AlphaSeries gl_derivative(const AlphaSeries& v);

/// Right inverse of gl_derivative: coefficient k+1 of the output is
/// f_k / beta(k+1), coefficient 0 is 0.  Requires offset 0.
AlphaSeries gl_integral(const AlphaSeries& f);

/// Horner evaluation in the variable t^alpha times t^offset.
/// t = 0 is allowed only for offset >= 0 (returning c_0 when offset = 0).
EvalResult evaluate(const AlphaSeries& s, double t);

/// Order-of-growth estimate for the entire function sum c_n z^n from
/// coefficient log-magnitudes: least-squares fit of
///   -log|c_n| = a (n log n) + b n + c
/// over the tail window n in [N/2, N]; the estimate is 1/a.  Entries that
/// are zero (log = -inf) are skipped.  Needs >= 50 usable coefficients.
double estimate_order_from_logs(const std::vector<double>& log_abs_coeffs);

/// Same estimate computed from a series' coefficients.
double estimate_order(const AlphaSeries& s);

}  // namespace fracseries::series
