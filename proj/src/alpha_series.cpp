#include "fracseries/alpha_series.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fracseries::series {

using specfun::beta_seq;
using specfun::gamma_ratio;
using specfun::log_abs_gamma;
using specfun::log_gamma_pos;
using specfun::rho;

AlphaSeries::AlphaSeries(Alpha alpha, double offset, std::vector<Complex> coeffs)
    : alpha_(alpha), offset_(offset), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("AlphaSeries: coefficient list must be nonempty");
}

AlphaSeries AlphaSeries::zero(Alpha alpha, double offset, int truncation) {
    if (truncation < 0) throw DomainError("AlphaSeries::zero: truncation must be >= 0");
    return AlphaSeries(alpha, offset, std::vector<Complex>(static_cast<size_t>(truncation) + 1));
}

LogMonomial rl_derivative_monomial(double d, Alpha alpha) {
    if (!(d > -1.0)) throw DomainError("rl_derivative_monomial: d must exceed -1");
    // rho(d) is Gamma(d+1)/Gamma(d+1-alpha) and is exactly 0 at d = alpha-1
    return LogMonomial{Complex(rho(d, alpha)), d - alpha.value(), 0};
}

LogMonomial rl_integral_monomial(double d, Alpha alpha) {
    if (!(d > -1.0)) throw DomainError("rl_integral_monomial: d must exceed -1");
    const double c = std::exp(log_gamma_pos(d + 1.0) - log_gamma_pos(d + 1.0 + alpha.value()));
    return LogMonomial{Complex(c), d + alpha.value(), 0};
}

LogMonomial caputo_derivative_monomial_negative(double mu, Alpha alpha) {
    if (!(mu < 0.0))
        throw DomainError("caputo_derivative_monomial_negative: mu must be negative "
                          "(use the classical monomial rules for mu >= 0)");
    const double a = alpha.value();
    if (mu == std::floor(mu)) {
        // mu = -k: log term, coefficient (-1)^{k-1} / ((k-1)! Gamma(-k+1-alpha))
        const int k = static_cast<int>(-mu);
        int sg = 1;
        const double lg = log_abs_gamma(-k + 1.0 - a, &sg);
        double c = std::exp(-log_gamma_pos(static_cast<double>(k)) - lg) * sg;
        if (k % 2 == 0) c = -c;
        return LogMonomial{Complex(c), -k - a, 1};
    }
    return LogMonomial{Complex(gamma_ratio(mu + 1.0, mu + 1.0 - a)), mu - a, 0};
}

AlphaSeries gl_derivative(const AlphaSeries& v) {
    if (v.offset() != 0.0) throw PreconditionError("gl_derivative: series offset must be 0");
    const int n = v.truncation();
    if (n == 0) return AlphaSeries::zero(v.alpha(), 0.0, 0);
    std::vector<Complex> out(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) out[k - 1] = v.coeff(k) * beta_seq(k, v.alpha());
    return AlphaSeries(v.alpha(), 0.0, std::move(out));
}

AlphaSeries gl_integral(const AlphaSeries& f) {
    if (f.offset() != 0.0) throw PreconditionError("gl_integral: series offset must be 0");
    const int n = f.truncation();
    std::vector<Complex> out(static_cast<size_t>(n) + 2);
    out[0] = Complex(0.0);
    for (int k = 0; k <= n; ++k) out[k + 1] = f.coeff(k) / beta_seq(k + 1, f.alpha());
    return AlphaSeries(f.alpha(), 0.0, std::move(out));
}

EvalResult evaluate(const AlphaSeries& s, double t) {
    if (t < 0.0) throw DomainError("evaluate: t must be >= 0");
    if (t == 0.0) {
        if (s.offset() < 0.0) throw DomainError("evaluate: t = 0 with negative offset");
        if (s.offset() == 0.0) return {s.coeff(0), 0.0};
        return {Complex(0.0), 0.0};
    }
    const double x = std::pow(t, s.alpha().value());
    Complex acc(0.0);
    for (int n = s.truncation(); n >= 0; --n) acc = acc * x + s.coeff(n);
    const double pref = std::pow(t, s.offset());
    const double tail = std::abs(s.coeff(s.truncation())) * std::pow(t, s.offset() + s.alpha().value() * s.truncation());
    return {acc * pref, tail};
}

double estimate_order_from_logs(const std::vector<double>& log_abs_coeffs) {
    const int n_max = static_cast<int>(log_abs_coeffs.size()) - 1;
    int usable = 0;
    for (double l : log_abs_coeffs)
        if (std::isfinite(l)) ++usable;
    if (usable < 50)
        throw NumericError("estimate_order: needs at least 50 nonzero coefficients, have " +
                           std::to_string(usable));

    // normal equations for y = a*(n log n) + b*n + c over the tail window
    double m[3][3] = {};
    double rhs[3] = {};
    int pts = 0;
    for (int n = std::max(n_max / 2, 2); n <= n_max; ++n) {
        const double l = log_abs_coeffs[static_cast<size_t>(n)];
        if (!std::isfinite(l)) continue;
        const double y = -l;
        const double b0 = n * std::log(static_cast<double>(n)), b1 = n, b2 = 1.0;
        const double bb[3] = {b0, b1, b2};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) m[i][j] += bb[i] * bb[j];
            rhs[i] += bb[i] * y;
        }
        ++pts;
    }
    if (pts < 10) throw NumericError("estimate_order: tail window too sparse");

    // 3x3 Cramer solve for the leading coefficient only
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const double det_a = rhs[0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (rhs[1] * m[2][2] - m[1][2] * rhs[2]) +
                         m[0][2] * (rhs[1] * m[2][1] - m[1][1] * rhs[2]);
    if (det == 0.0) throw NumericError("estimate_order: singular fit");
    const double a = det_a / det;
    if (!(a > 0.0)) throw NumericError("estimate_order: non-positive leading fit coefficient");
    return 1.0 / a;
}

double estimate_order(const AlphaSeries& s) {
    std::vector<double> logs(s.coeffs().size());
    for (size_t i = 0; i < logs.size(); ++i) {
        const double m = std::abs(s.coeffs()[i]);
        logs[i] = m > 0.0 ? std::log(m) : -std::numeric_limits<double>::infinity();
    }
    return estimate_order_from_logs(logs);
}

}  // namespace fracseries::series
