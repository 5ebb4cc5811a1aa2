#pragma once

#include <complex>

#include "fracseries/errors.hpp"

namespace fracseries {

/// Order of the fractional derivative, restricted to (0,1).
class Alpha {
  public:
    explicit Alpha(double v) : value_(v) {
        if (!(v > 0.0 && v < 1.0))
            throw DomainError("alpha must lie in (0,1), got " + std::to_string(v));
    }
    double value() const noexcept { return value_; }

  private:
    double value_;
};

namespace specfun {

using Complex = std::complex<double>;

/// Principal branch of log Gamma(z).  Lanczos sum for Re(z) >= 0.5,
/// reflection otherwise.  Poles (z = 0, -1, -2, ...) raise DomainError.
Complex log_gamma(Complex z);

/// log Gamma(x) for real x > 0 (real-valued fast path).
double log_gamma_pos(double x);

/// log|Gamma(x)| for real non-pole x; *sign receives the sign of Gamma(x).
double log_abs_gamma(double x, int* sign = nullptr);

/// Gamma(num)/Gamma(den) for real arguments away from poles, sign included.
double gamma_ratio(double num, double den);

/// rho(t) = Gamma(t+1)/Gamma(t+1-alpha) on (-1, inf).
///
/// Strictly increasing from -inf to +inf with the single zero at
/// t = alpha-1 (returned exactly).  On (-1, alpha-1) the ratio is computed
/// through the reflected form
///     Gamma(alpha-t)/Gamma(-t) * sin(pi(t+1-alpha))/sin(pi(t+1)),
/// which keeps every Gamma argument positive.
double rho(double t, Alpha alpha);

/// beta(n) = Gamma(n*alpha+1)/Gamma(n*alpha+1-alpha) = rho(n*alpha).
/// Grows like (alpha*n)^alpha for large n.
double beta_seq(int n, Alpha alpha);

/// Inverse of rho: the unique t in (-1, inf) with |rho(t) - lambda| <= tol.
/// gamma_inverse(0) = alpha - 1 exactly; gamma_inverse(lambda) >= 0 iff
/// lambda >= 1/Gamma(1-alpha).
double gamma_inverse(double lambda, Alpha alpha, double tol = 1e-12);

/// Mittag-Leffler function E_order(z) = sum z^n / Gamma(order*n + 1) by
/// direct summation with a geometric tail bound.  `order` in (0, 1]; the
/// endpoint 1 gives exp(z).  Intended for desk-scale |z| (roughly <= 50);
/// the term budget is 10^5.
Complex mittag_leffler(double order, Complex z, double tol = 1e-14);

}  // namespace specfun
}  // namespace fracseries
