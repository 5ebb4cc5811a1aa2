#include "fracseries/irregular_singularity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

namespace fracseries::irregular {

namespace {

constexpr double kPi = std::numbers::pi;

mpz_class pow10(int d) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(d));
    return r;
}

// log of a positive rational, via mantissa + base-2 exponent
double log_mpq(const mpq_class& q) {
    signed long en, ed;
    const double dn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    const double dd = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log(std::abs(dn)) - std::log(std::abs(dd)) +
           static_cast<double>(en - ed) * std::numbers::ln2;
}

}  // namespace

PreciseAlpha::PreciseAlpha(mpq_class q, int digits, std::string source)
    : rational_(std::move(q)), digits_(digits), value_(rational_.get_d()), source_(std::move(source)) {
    rational_.canonicalize();
    if (!(value_ > 0.0 && value_ < 1.0))
        throw DomainError("PreciseAlpha: value must lie in (0,1), got " + std::to_string(value_));
}

int PreciseAlpha::default_digits() {
    if (const char* env = std::getenv("FRAC_SERIES_PRECISION")) {
        const int d = std::atoi(env);
        if (d >= 20 && d <= 100000) return d;
    }
    return 120;
}

PreciseAlpha PreciseAlpha::golden(int digits) {
    // (sqrt(5) - 1)/2 = (isqrt(5*10^(2d)) - 10^d) / (2*10^d), floor error < 10^-d
    const mpz_class scale = pow10(digits);
    mpz_class s = 5 * scale * scale;
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    return PreciseAlpha(mpq_class(s - scale, 2 * scale), digits, "golden");
}

PreciseAlpha PreciseAlpha::sqrt2m1(int digits) {
    const mpz_class scale = pow10(digits);
    mpz_class s = 2 * scale * scale;
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    return PreciseAlpha(mpq_class(s - scale, scale), digits, "sqrt2m1");
}

PreciseAlpha PreciseAlpha::from_decimal(const std::string& text) {
    std::string t = text;
    if (t.rfind("0.", 0) == 0)
        t = t.substr(2);
    else if (t.rfind(".", 0) == 0)
        t = t.substr(1);
    else
        throw PreconditionError("PreciseAlpha::from_decimal: expected \"0.ddd...\", got " + text);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw PreconditionError("PreciseAlpha::from_decimal: non-digit characters in " + text);
    const int digits = static_cast<int>(t.size());
    return PreciseAlpha(mpq_class(mpz_class(t, 10), pow10(digits)), digits, "decimal");
}

PreciseAlpha PreciseAlpha::from_double(double v) {
    return PreciseAlpha(mpq_class(v), 15, "double");
}

double PreciseAlpha::frac_multiple(long n, long modulus) const {
    mpz_class num = rational_.get_num() * n;
    const mpz_class den = rational_.get_den() * modulus;
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // non-negative remainder
    return mpq_class(r * modulus, den).get_d();
}

double PreciseAlpha::dist_to_integer(long n) const {
    const double f = frac_multiple(n, 1);
    return std::min(f, 1.0 - f);
}

double PreciseAlpha::sin_pi_multiple(long n) const {
    const double f2 = frac_multiple(n, 2);  // n*alpha mod 2, exact
    double r = f2 < 1.0 ? f2 : f2 - 1.0;
    const double sign = f2 < 1.0 ? 1.0 : -1.0;
    if (r > 0.5) r = 1.0 - r;
    return sign * std::sin(kPi * r);
}

Complex IrregularSolution::coeff(int n) const {
    const double la = log_abs.at(static_cast<size_t>(n));
    const double ph = phase.at(static_cast<size_t>(n));
    return std::exp(la) * Complex(std::cos(ph), std::sin(ph));
}

IrregularSolution build_formal_solution(const PreciseAlpha& alpha, Complex lambda, Complex c0,
                                        int truncation) {
    if (truncation < 0) throw PreconditionError("build_formal_solution: truncation must be >= 0");
    for (int n = 0; n <= truncation + 1; ++n) {
        if (alpha.dist_to_integer(n + 1) <= 1e-12) {
            std::ostringstream os;
            os << "resonance: (n+1)*alpha is an integer at n = " << n << " (alpha = "
               << alpha.value() << ")";
            throw ResonanceError(os.str(), n);
        }
    }

    const double a = alpha.value();
    const double log_lambda = std::abs(lambda) > 0.0 ? std::log(std::abs(lambda))
                                                     : -std::numeric_limits<double>::infinity();
    const double arg_lambda = std::arg(lambda);
    const double log_c0 = std::abs(c0) > 0.0 ? std::log(std::abs(c0))
                                             : -std::numeric_limits<double>::infinity();
    const double lg1ma = specfun::log_gamma_pos(1.0 - a);

    IrregularSolution sol{alpha, lambda, c0, {}, {}, {}, 0.0};
    sol.log_abs.resize(static_cast<size_t>(truncation) + 1);
    sol.phase.resize(sol.log_abs.size());
    sol.small_divisors.resize(sol.log_abs.size());

    double worst = 0.0;
    for (int n = 0; n <= truncation; ++n) {
        const double sd = alpha.sin_pi_multiple(n + 1);
        sol.small_divisors[static_cast<size_t>(n)] = sd;

        // reflected form: Gamma(1-(n+1)a) = pi / (sin(pi (n+1) a) Gamma((n+1) a)),
        // with the sine reduced exactly through the rational alpha
        const double lg_na = specfun::log_gamma_pos((n + 1) * a);
        const double log_refl = std::log(kPi) - std::log(std::abs(sd)) - lg_na;
        // direct form: the general signed log-Gamma, whose reduction of the
        // sine argument is double-precision only
        int sg_direct = 1;
        const double log_direct = specfun::log_abs_gamma(1.0 - (n + 1) * a, &sg_direct);
        worst = std::max(worst, std::abs(log_refl - log_direct));

        sol.log_abs[static_cast<size_t>(n)] =
            log_c0 + (n > 0 ? n * log_lambda : 0.0) + log_refl - lg1ma;
        sol.phase[static_cast<size_t>(n)] =
            std::arg(c0) + n * arg_lambda + (sd < 0.0 ? kPi : 0.0);
        if (sg_direct != (sd < 0.0 ? -1 : 1))
            throw NumericError("build_formal_solution: sign mismatch between the two Gamma forms");
    }
    sol.cross_check_delta = worst;
    return sol;
}

PartialSumReport evaluate_partial_sums(const IrregularSolution& sol, double t,
                                       const std::vector<int>& orders) {
    if (!(t > 0.0)) throw DomainError("evaluate_partial_sums: t must be positive");
    if (orders.empty()) throw PreconditionError("evaluate_partial_sums: no orders requested");
    const int n_max = *std::max_element(orders.begin(), orders.end());
    if (n_max > sol.truncation())
        throw PreconditionError("evaluate_partial_sums: order beyond the built truncation");

    const double a = sol.alpha.value();
    const double lt = std::log(t);
    std::vector<double> log_term(static_cast<size_t>(n_max) + 1);
    Complex sum(0.0);
    std::vector<Complex> cum(log_term.size());
    int dominant = 0;
    for (int n = 0; n <= n_max; ++n) {
        const double l = sol.log_abs[static_cast<size_t>(n)] - n * a * lt;
        log_term[static_cast<size_t>(n)] = l;
        const double ph = sol.phase[static_cast<size_t>(n)];
        sum += std::exp(l) * Complex(std::cos(ph), std::sin(ph));
        cum[static_cast<size_t>(n)] = sum;
        if (l > log_term[static_cast<size_t>(dominant)]) dominant = n;
    }

    PartialSumReport rep;
    rep.orders = orders;
    for (int o : orders) rep.sums.push_back(cum[static_cast<size_t>(o)]);
    rep.dominant_term = dominant;

    const int tail_lo = std::max(1, n_max / 2);
    double tail_max = -std::numeric_limits<double>::infinity();
    for (int n = tail_lo; n <= n_max; ++n) tail_max = std::max(tail_max, log_term[static_cast<size_t>(n)]);
    rep.max_tail_log = tail_max;
    const double ref = std::max(1.0, std::abs(cum[static_cast<size_t>(n_max)]));
    if (std::exp(tail_max) <= 1e-12 * ref && std::isfinite(ref)) {
        rep.diagnosis = Convergence::Convergent;
    } else {
        // trend over window quarters; single terms jitter with the divisors
        auto window_max = [&](int lo, int hi) {
            double m = -std::numeric_limits<double>::infinity();
            for (int n = lo; n <= hi; ++n) m = std::max(m, log_term[static_cast<size_t>(n)]);
            return m;
        };
        const double third = window_max(n_max / 2, 3 * n_max / 4);
        const double fourth = window_max(3 * n_max / 4, n_max);
        rep.diagnosis = fourth < third ? Convergence::Slow : Convergence::NotConvergent;
    }

    // small-divisor term bound |term_n| <= C (n+1)^{1+eps} t^{-n alpha} / Gamma((n+1) alpha)
    const auto cst = fit_small_divisor_constants(sol.alpha, std::max(n_max, 8));
    rep.fitted_c = cst.c;
    rep.fitted_eps = cst.epsilon;
    const double log_pref = std::log(kPi) - specfun::log_gamma_pos(1.0 - a) -
                            std::log(2.0 * cst.c) +
                            (std::abs(sol.c0) > 0 ? std::log(std::abs(sol.c0)) : 0.0);
    rep.stirling_bound_log.resize(log_term.size());
    const double log_lambda = std::abs(sol.lambda) > 0.0 ? std::log(std::abs(sol.lambda)) : 0.0;
    for (int n = 0; n <= n_max; ++n)
        rep.stirling_bound_log[static_cast<size_t>(n)] =
            log_pref + n * log_lambda + (1.0 + cst.epsilon) * std::log(n + 1.0) - n * a * lt -
            specfun::log_gamma_pos((n + 1) * a);
    return rep;
}

DiophantineReport diophantine_analyze(const PreciseAlpha& alpha, int max_convergents) {
    if (max_convergents < 1) throw PreconditionError("diophantine_analyze: need K >= 1");
    if (max_convergents > 15 && alpha.digits() < 30)
        throw PrecisionError("diophantine_analyze: alpha carries only " +
                             std::to_string(alpha.digits()) +
                             " digits; continued fractions beyond K = 15 need a high-precision "
                             "decimal or a symbolic tag");

    DiophantineReport rep;
    rep.digits = alpha.digits();

    // Euclid on the exact rational; convergents by the standard recurrence
    mpz_class num = alpha.rational().get_num();
    mpz_class den = alpha.rational().get_den();
    mpz_class p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
    mpz_class p_cur = 0, q_cur = 1;    // p_0 = a_0 = 0, q_0 = 1
    // convergent denominators are trustworthy while q^2 stays well below
    // the precision denominator of the alpha approximation
    const mpz_class q_limit = pow10(std::max(1, (alpha.digits() - 2) / 2));
    bool exact_end = false;

    while (static_cast<int>(rep.cf_terms.size()) < max_convergents) {
        if (num == 0) {
            exact_end = true;
            break;
        }
        mpz_class quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
        // continued fraction of num/den after the integer part: invert each step
        mpz_class p_next = quot * p_cur + p_prev;
        mpz_class q_next = quot * q_cur + q_prev;
        if (q_next > q_limit && !rep.cf_terms.empty()) break;
        rep.cf_terms.push_back(quot);
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        den = num;
        num = rem;

        DiophantineConvergent c;
        c.p = p_cur;
        c.q = q_cur;
        if (q_cur == 1) {
            c.exponent_estimate = std::numeric_limits<double>::quiet_NaN();
        } else {
            mpq_class diff = alpha.rational() - mpq_class(p_cur, q_cur);
            diff.canonicalize();
            if (diff == 0) {
                c.exponent_estimate = std::numeric_limits<double>::infinity();
                exact_end = true;
            } else {
                const double log_diff = log_mpq(mpq_class(abs(diff.get_num()), diff.get_den()));
                signed long eq;
                const double dq = mpz_get_d_2exp(&eq, q_cur.get_mpz_t());
                const double log_q = std::log(dq) + static_cast<double>(eq) * std::numbers::ln2;
                c.exponent_estimate = -log_diff / log_q;
            }
        }
        rep.convergents.push_back(std::move(c));
        if (exact_end) break;
    }

    rep.usable_terms = static_cast<int>(rep.cf_terms.size());
    // small denominators inflate the exponent (q = 2 gives ~3 even for the
    // golden ratio); only convergents with q >= 50 carry signal
    rep.exponent_estimate = 0.0;
    int above_25 = 0, tail_count = 0;
    mpz_class max_quot = 0;
    for (size_t k = 0; k < rep.convergents.size(); ++k) {
        max_quot = std::max(max_quot, rep.cf_terms[k]);
        const double e = rep.convergents[k].exponent_estimate;
        if (!std::isfinite(e) || rep.convergents[k].q < 50) continue;
        ++tail_count;
        rep.exponent_estimate = std::max(rep.exponent_estimate, e);
        if (e > 2.5) ++above_25;
    }

    if (exact_end)
        rep.verdict = DiophantineVerdict::Rational;
    else if (tail_count == 0)
        rep.verdict = DiophantineVerdict::Suspect;  // not enough data
    else if (above_25 >= 3 || rep.exponent_estimate > 4.0)
        rep.verdict = DiophantineVerdict::WellApproximable;
    else if (rep.exponent_estimate <= 2.3 && max_quot <= 100)
        rep.verdict = DiophantineVerdict::BadlyApproximable;
    else
        rep.verdict = DiophantineVerdict::Suspect;
    return rep;
}

SmallDivisorConstants fit_small_divisor_constants(const PreciseAlpha& alpha, int n_max) {
    double c = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= n_max; ++n) {
        const double d = alpha.dist_to_integer(n + 1);
        if (d == 0.0)
            throw PreconditionError("fit_small_divisor_constants: alpha is rational at multiple " +
                                    std::to_string(n + 1));
        c = std::min(c, d * (n + 1.0));
    }
    return {c, 0.0};
}

SmallDivisorCheck small_divisor_bound(const PreciseAlpha& alpha, const SmallDivisorConstants& cst,
                                      long n) {
    if (alpha.dist_to_integer(n + 1) == 0.0)
        throw PreconditionError("small_divisor_bound: alpha is rational, the bound is meaningless");
    SmallDivisorCheck chk;
    chk.bound = 2.0 * cst.c * std::pow(n + 1.0, -1.0 - cst.epsilon);
    chk.actual = std::abs(alpha.sin_pi_multiple(n + 1));
    return chk;
}

PairingReport distributional_pairing_terms(const IrregularSolution& sol, int n_max) {
    if (n_max > sol.truncation())
        throw PreconditionError("distributional_pairing_terms: n_max beyond the built truncation");
    const double a = sol.alpha.value();
    PairingReport rep;
    rep.terms.reserve(static_cast<size_t>(n_max) + 1);
    const double log_2sqrtpi = std::log(2.0 * std::sqrt(kPi));
    for (int n = 0; n <= n_max; ++n) {
        // <t^{-n alpha}, kappa_alpha> = kappa~(alpha - 1 - alpha n); its sine
        // factor reduces exactly: sin(pi(alpha-1-alpha n)) = sin(pi alpha (n-1))
        const double z = a - 1.0 - a * n;
        const double s = sol.alpha.sin_pi_multiple(n - 1);
        const double log_mellin = log_2sqrtpi + z * z - kPi * kPi / 4.0 +
                                  std::log(std::max(std::abs(s), 1e-300));
        PairingTerm term;
        term.n = n;
        term.log_abs = sol.log_abs[static_cast<size_t>(n)] + log_mellin;
        term.phase = sol.phase[static_cast<size_t>(n)] + (s < 0.0 ? kPi : 0.0);
        rep.terms.push_back(term);
    }

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int n = std::max(2, n_max / 2); n <= n_max; ++n) {
        const double r = rep.terms[static_cast<size_t>(n)].log_abs / (static_cast<double>(n) * n);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    rep.growth_ratio_lo = lo;
    rep.growth_ratio_hi = hi;
    rep.divergent = n_max >= 4 && rep.terms.back().log_abs >
                                      rep.terms[static_cast<size_t>(n_max / 2)].log_abs &&
                    rep.terms.back().log_abs > 0.0;
    return rep;
}

}  // namespace fracseries::irregular
