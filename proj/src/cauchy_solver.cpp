#include "fracseries/cauchy_solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fracseries::cauchy {

using specfun::beta_seq;
using specfun::rho;

namespace {

void validate(const ScalarProblem& p, Kind expected, const char* who) {
    if (p.kind != expected) throw PreconditionError(std::string(who) + ": wrong problem kind");
    if (p.coeffs.empty()) throw PreconditionError(std::string(who) + ": A(z) needs coefficients");
    if (p.truncation < static_cast<int>(p.coeffs.size()))
        throw PreconditionError(std::string(who) + ": truncation must be >= deg A + 1");
}

template <typename Divisor>
std::vector<Complex> run_recurrence(const ScalarProblem& p, Divisor divisor) {
    const int m = static_cast<int>(p.coeffs.size()) - 1;
    std::vector<Complex> c(static_cast<size_t>(p.truncation) + 1);
    c[0] = p.initial;
    for (int n = 1; n <= p.truncation; ++n) {
        Complex s(0.0);
        for (int j = 0; j <= std::min(m, n - 1); ++j) s += p.coeffs[j] * c[n - 1 - j];
        c[n] = s / divisor(n);
    }
    return c;
}

// coefficient with a separate power-of-two exponent; keeps the order-bound
// recurrence alive far below the double underflow threshold
struct Scaled {
    Complex m;
    long e = 0;

    void normalize() {
        const double mag = std::abs(m);
        if (mag == 0.0) {
            e = 0;
            return;
        }
        int k = 0;
        std::frexp(mag, &k);
        if (k > 256 || k < -256) {
            m = Complex(std::ldexp(m.real(), -k), std::ldexp(m.imag(), -k));
            e += k;
        }
    }

    double log_abs() const {
        const double mag = std::abs(m);
        if (mag == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(mag) + static_cast<double>(e) * std::numbers::ln2;
    }
};

}  // namespace

AlphaSeries solve_caputo(const ScalarProblem& p) {
    validate(p, Kind::Caputo, "solve_caputo");
    auto c = run_recurrence(p, [&](int n) { return beta_seq(n, p.alpha); });
    return AlphaSeries(p.alpha, 0.0, std::move(c));
}

AlphaSeries solve_rl(const ScalarProblem& p) {
    validate(p, Kind::RL, "solve_rl");
    const double a = p.alpha.value();
    auto c = run_recurrence(p, [&](int n) { return rho(a - 1.0 + a * n, p.alpha); });
    return AlphaSeries(p.alpha, a - 1.0, std::move(c));
}

AlphaSeries solve(const ScalarProblem& p) {
    return p.kind == Kind::Caputo ? solve_caputo(p) : solve_rl(p);
}

OrderBoundReport check_order_bound(const ScalarProblem& p, int truncation, double tolerance) {
    if (p.kind != Kind::Caputo)
        throw PreconditionError("check_order_bound: stated only for the Caputo problem");
    if (p.coeffs.empty()) throw PreconditionError("check_order_bound: A(z) needs coefficients");
    const int m = static_cast<int>(p.coeffs.size()) - 1;

    std::vector<Scaled> c(static_cast<size_t>(truncation) + 1);
    c[0] = Scaled{p.initial, 0};
    c[0].normalize();
    std::vector<double> logs(c.size());
    logs[0] = c[0].log_abs();
    int nonzero = std::abs(p.initial) > 0.0 ? 1 : 0;
    for (int n = 1; n <= truncation; ++n) {
        long emax = std::numeric_limits<long>::min();
        for (int j = 0; j <= std::min(m, n - 1); ++j)
            if (std::abs(c[n - 1 - j].m) > 0.0) emax = std::max(emax, c[n - 1 - j].e);
        Scaled out;
        if (emax == std::numeric_limits<long>::min()) {
            out = Scaled{Complex(0.0), 0};
        } else {
            Complex s(0.0);
            for (int j = 0; j <= std::min(m, n - 1); ++j) {
                const Scaled& q = c[n - 1 - j];
                s += p.coeffs[j] * q.m * std::exp2(static_cast<double>(q.e - emax));
            }
            out = Scaled{s / beta_seq(n, p.alpha), emax};
            out.normalize();
        }
        c[n] = out;
        logs[n] = out.log_abs();
        if (std::isfinite(logs[n])) ++nonzero;
    }

    OrderBoundReport r;
    r.bound = (1.0 + m) / p.alpha.value();
    r.tolerance = tolerance;
    r.coefficients_used = nonzero;
    if (nonzero < 50) {
        r.degenerate = true;
        r.violated = false;
        r.estimate = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.degenerate = false;
    r.estimate = series::estimate_order_from_logs(logs);
    r.violated = r.estimate > r.bound + tolerance;
    return r;
}

}  // namespace fracseries::cauchy
