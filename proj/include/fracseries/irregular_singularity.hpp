#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "fracseries/special_functions.hpp"

namespace fracseries::irregular {

using Complex = std::complex<double>;

/// Alpha carried as an exact rational approximation with a known number of
/// significant decimal digits.  Continued fractions beyond ~15 terms are
/// meaningless from a plain double, so Diophantine work requires either a
/// symbolic tag (golden, sqrt2m1) expanded to `digits` places or a decimal
/// string.
class PreciseAlpha {
  public:
    /// (sqrt(5)-1)/2 to `digits` decimal places.
    static PreciseAlpha golden(int digits = default_digits());
    /// sqrt(2)-1 to `digits` decimal places.
    static PreciseAlpha sqrt2m1(int digits = default_digits());
    /// Parse "0.dddd..."; the digit count is taken from the string.
    static PreciseAlpha from_decimal(const std::string& text);
    /// Exact binary value of a double (~15 significant digits).
    static PreciseAlpha from_double(double v);

    /// FRAC_SERIES_PRECISION override, default 120.
    static int default_digits();

    double value() const noexcept { return value_; }
    int digits() const noexcept { return digits_; }
    const std::string& source() const noexcept { return source_; }
    const mpq_class& rational() const noexcept { return rational_; }
    Alpha alpha() const { return Alpha(value_); }

    /// Exact fractional part of n*alpha modulo `modulus` (1 or 2), as a double.
    double frac_multiple(long n, long modulus = 1) const;
    /// Exact distance from n*alpha to the nearest integer.
    double dist_to_integer(long n) const;
    /// sin(pi * n * alpha) with the product reduced exactly modulo 2.
    double sin_pi_multiple(long n) const;

  private:
    PreciseAlpha(mpq_class q, int digits, std::string source);

    mpq_class rational_;
    int digits_;
    double value_;
    std::string source_;
};

/// Formal solution u(t) = sum c_n t^{-n alpha} of t^{2 alpha} D^alpha u = lambda u,
/// c_n = lambda^n Gamma(1-(n+1)alpha)/Gamma(1-alpha) c_0.  Coefficients are
/// kept in log-magnitude/phase form; magnitudes span far beyond double range.
struct IrregularSolution {
    PreciseAlpha alpha;
    Complex lambda;
    Complex c0;
    std::vector<double> log_abs;         // log|c_n|
    std::vector<double> phase;           // arg c_n
    std::vector<double> small_divisors;  // sin(pi (n+1) alpha), exactly reduced
    double cross_check_delta;  // max log-magnitude gap, direct vs reflected Gamma form

    int truncation() const noexcept { return static_cast<int>(log_abs.size()) - 1; }
    /// c_n as a double complex; may overflow to inf for large |c_n|.
    Complex coeff(int n) const;
};

/// Build the coefficients, refusing when some (n+1)alpha is an integer
/// within 1e-12 (ResonanceError naming n).
IrregularSolution build_formal_solution(const PreciseAlpha& alpha, Complex lambda, Complex c0,
                                        int truncation);

enum class Convergence { Convergent, Slow, NotConvergent };

struct PartialSumReport {
    std::vector<int> orders;
    std::vector<Complex> sums;           // S_N for each requested order
    Convergence diagnosis;
    int dominant_term;                   // index of the largest |term|
    double max_tail_log;                 // log max |term| over the tail window
    std::vector<double> stirling_bound_log;  // log of C (n+1)^{1+eps} t^{-n alpha} / Gamma((n+1)alpha)
    double fitted_c, fitted_eps;
};

/// Partial sums S_N(t) for t > 0 with a Cauchy-tail convergence diagnosis
/// and the small-divisor term bound alongside.
PartialSumReport evaluate_partial_sums(const IrregularSolution& sol, double t,
                                       const std::vector<int>& orders);

enum class DiophantineVerdict { BadlyApproximable, Suspect, WellApproximable, Rational };

struct DiophantineConvergent {
    mpz_class p, q;
    double exponent_estimate;  // log(1/|alpha - p/q|) / log q; NaN for q = 1
};

struct DiophantineReport {
    std::vector<mpz_class> cf_terms;  // partial quotients a_1, a_2, ... (a_0 = 0)
    std::vector<DiophantineConvergent> convergents;
    double exponent_estimate;  // sup over usable convergents
    DiophantineVerdict verdict;
    int usable_terms;
    int digits;
};

/// Continued-fraction expansion with an empirical irrationality-measure
/// estimate.  The verdict is a finite-precision heuristic: the condition
/// |alpha - p/q| >= c q^{-2-eps} is asymptotic and undecidable from finite
/// data.  Terms stop once convergent denominators outrun the input digits.
DiophantineReport diophantine_analyze(const PreciseAlpha& alpha, int max_convergents);

struct SmallDivisorConstants {
    double c;
    double epsilon;
};

/// Fit c = min_n dist((n+1)alpha, Z) * (n+1)^{1+eps} with eps = 0 over n <= n_max.
SmallDivisorConstants fit_small_divisor_constants(const PreciseAlpha& alpha, int n_max);

struct SmallDivisorCheck {
    double bound;   // 2 c (n+1)^{-1-eps}
    double actual;  // |sin(pi (n+1) alpha)|
};

SmallDivisorCheck small_divisor_bound(const PreciseAlpha& alpha, const SmallDivisorConstants& cst,
                                      long n);

struct PairingTerm {
    int n;
    double log_abs;  // log |<c_n t^{-n alpha}, kappa_alpha>|
    double phase;
};

struct PairingReport {
    std::vector<PairingTerm> terms;
    double growth_ratio_lo, growth_ratio_hi;  // range of log|pairing_n|/n^2 over the tail
    bool divergent;                            // terms unbounded => divergence in distributions
};

/// Closed-form pairings <term_n, kappa_alpha> = c_n * kappa~(alpha-1-alpha n),
/// in log scale (the magnitudes grow like exp(alpha^2 n^2) and overflow
/// doubles quickly).
PairingReport distributional_pairing_terms(const IrregularSolution& sol, int n_max);

}  // namespace fracseries::irregular
