#include <doctest.h>

#include <cmath>
#include <random>

#include "fracseries/alpha_series.hpp"

using namespace fracseries;
using namespace fracseries::series;

namespace {
double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

AlphaSeries random_series(Alpha a, int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    return AlphaSeries(a, 0.0, std::move(c));
}
}  // namespace

TEST_SUITE_BEGIN("alpha_series");

TEST_CASE("rl_derivative_monomial") {
    const Alpha a(0.5);
    SUBCASE("annihilates t^{alpha-1} exactly") {
        const auto m = rl_derivative_monomial(a.value() - 1.0, a);
        CHECK(m.coefficient == Complex(0.0));
        CHECK(m.log_power == 0);
    }
    SUBCASE("d = 0 gives t^{-alpha}/Gamma(1-alpha)") {
        const auto m = rl_derivative_monomial(0.0, a);
        CHECK(rel_err(m.coefficient.real(), 0.56418958354775628694) < 1e-13);
        CHECK(m.exponent == doctest::Approx(-0.5));
    }
    SUBCASE("d = 1, alpha = 0.5 gives t^{0.5}/Gamma(1.5)") {
        const auto m = rl_derivative_monomial(1.0, a);
        CHECK(rel_err(m.coefficient.real(), 1.12837916709551257390) < 1e-13);
        CHECK(m.exponent == doctest::Approx(0.5));
    }
    CHECK_THROWS_AS(rl_derivative_monomial(-1.0, a), DomainError);
}

TEST_CASE("rl_integral_monomial") {
    const Alpha a(0.3);
    SUBCASE("d = 0 gives t^alpha / Gamma(1+alpha)") {
        const auto m = rl_integral_monomial(0.0, a);
        CHECK(rel_err(m.coefficient.real(), 1.0 / std::exp(specfun::log_gamma_pos(1.3))) < 1e-13);
        CHECK(m.exponent == doctest::Approx(0.3));
    }
    SUBCASE("d = -alpha maps t^{-alpha} to the constant Gamma(1-alpha)") {
        const auto m = rl_integral_monomial(-a.value(), a);
        CHECK(rel_err(m.coefficient.real(), 1.29805533264755778568) < 1e-12);  // Gamma(0.7)
        CHECK(m.exponent == doctest::Approx(0.0));
    }
    SUBCASE("derivative of integral is the identity on monomials") {
        for (double d : {-0.4, 0.0, 0.6, 1.7, 3.0}) {
            const auto mi = rl_integral_monomial(d, a);
            const auto md = rl_derivative_monomial(mi.exponent, a);
            CHECK(rel_err((mi.coefficient * md.coefficient).real(), 1.0) < 1e-13);
            CHECK(md.exponent == doctest::Approx(d));
        }
    }
    CHECK_THROWS_AS(rl_integral_monomial(-1.2, a), DomainError);
}

TEST_CASE("caputo_derivative_monomial_negative") {
    const Alpha a(0.3);
    SUBCASE("mu = -alpha (generic negative power)") {
        const auto m = caputo_derivative_monomial_negative(-0.3, a);
        // frozen: Gamma(0.7)/Gamma(0.4)
        CHECK(rel_err(m.coefficient.real(), 0.58519475585087010623) < 1e-13);
        CHECK(m.exponent == doctest::Approx(-0.6));
        CHECK(m.log_power == 0);
    }
    SUBCASE("mu = -1 produces the log term with 1/Gamma(-alpha)") {
        const auto m = caputo_derivative_monomial_negative(-1.0, a);
        // frozen: 1/Gamma(-0.3)
        CHECK(rel_err(m.coefficient.real(), -0.23111495515996979965) < 1e-13);
        CHECK(m.exponent == doctest::Approx(-1.3));
        CHECK(m.log_power == 1);
    }
    SUBCASE("mu = -2 carries (-1)^{k-1}/((k-1)! Gamma(-k+1-alpha))") {
        const auto m2 = caputo_derivative_monomial_negative(-2.0, a);
        // frozen: -1/Gamma(-1.3)
        CHECK(rel_err(m2.coefficient.real(), -0.30044944170796073955) < 1e-13);
        CHECK(m2.exponent == doctest::Approx(-2.3));
        CHECK(m2.log_power == 1);
    }
    CHECK_THROWS_AS(caputo_derivative_monomial_negative(0.0, a), DomainError);
    CHECK_THROWS_AS(caputo_derivative_monomial_negative(0.5, a), DomainError);
}

TEST_CASE("gl_derivative") {
    const Alpha a(0.4);
    SUBCASE("vanishes on constants") {
        const AlphaSeries c(a, 0.0, {Complex(3.0)});
        const auto d = gl_derivative(c);
        CHECK(d.truncation() == 0);
        CHECK(d.coeff(0) == Complex(0.0));
    }
    SUBCASE("single term c_1 = 1 maps to the constant beta(1)") {
        const AlphaSeries s(a, 0.0, {Complex(0.0), Complex(1.0)});
        const auto d = gl_derivative(s);
        CHECK(d.truncation() == 0);
        CHECK(rel_err(d.coeff(0).real(), specfun::beta_seq(1, a)) < 1e-15);
    }
    SUBCASE("Mittag-Leffler coefficients are an eigenvector: D v = lambda v") {
        const Complex lambda(0.7, 0.2);
        std::vector<Complex> c(101);
        for (int n = 0; n <= 100; ++n)
            c[static_cast<size_t>(n)] =
                std::pow(lambda, n) * std::exp(-specfun::log_gamma_pos(a.value() * n + 1.0));
        const AlphaSeries v(a, 0.0, std::move(c));
        const auto d = gl_derivative(v);
        for (int n = 0; n <= d.truncation(); ++n)
            CHECK(std::abs(d.coeff(n) - lambda * v.coeff(n)) <= 1e-13 * std::abs(lambda * v.coeff(n)));
    }
    SUBCASE("offset must be zero") {
        const AlphaSeries s(a, 0.2, {Complex(1.0)});
        CHECK_THROWS_AS(gl_derivative(s), PreconditionError);
    }
}

TEST_CASE("gl_integral") {
    const Alpha a(0.6);
    SUBCASE("constant 1 maps to z/Gamma-ratio at k=0") {
        const AlphaSeries one(a, 0.0, {Complex(1.0)});
        const auto i = gl_integral(one);
        CHECK(i.coeff(0) == Complex(0.0));
        CHECK(rel_err(i.coeff(1).real(), 1.0 / specfun::beta_seq(1, a)) < 1e-15);
    }
    SUBCASE("zero series stays zero") {
        const auto z = AlphaSeries::zero(a, 0.0, 4);
        const auto i = gl_integral(z);
        for (int n = 0; n <= i.truncation(); ++n) CHECK(i.coeff(n) == Complex(0.0));
    }
    SUBCASE("integral of derivative removes the constant term (random 50- and 200-term)") {
        for (int len : {50, 200}) {
            const auto v = random_series(a, len, 17u + static_cast<unsigned>(len));
            const auto back = gl_integral(gl_derivative(v));
            CHECK(back.truncation() == v.truncation());
            CHECK(back.coeff(0) == Complex(0.0));
            for (int n = 1; n <= v.truncation(); ++n)
                CHECK(std::abs(back.coeff(n) - v.coeff(n)) <= 1e-13 * std::abs(v.coeff(n)));
        }
    }
}

TEST_CASE("evaluate") {
    SUBCASE("constants") {
        const AlphaSeries c(Alpha(0.3), 0.0, {Complex(3.0)});
        CHECK(evaluate(c, 0.7).value == Complex(3.0));
        CHECK(evaluate(c, 0.0).value == Complex(3.0));
    }
    SUBCASE("Mittag-Leffler at alpha -> 1 scale: order-1 series evaluates to e") {
        // coefficients 1/n! with alpha = 0.999... is out of Alpha's domain;
        // instead check the alpha = 0.5 series against its direct sum
        const Alpha a(0.5);
        std::vector<Complex> c(200);
        for (int n = 0; n < 200; ++n)
            c[static_cast<size_t>(n)] = std::exp(-specfun::log_gamma_pos(0.5 * n + 1.0));
        const AlphaSeries s(a, 0.0, std::move(c));
        CHECK(rel_err(evaluate(s, 1.0).value.real(), 5.0089800807622834663) < 1e-12);
    }
    SUBCASE("RL eigenfunction t^{alpha-1}") {
        const Alpha a(0.5);
        const AlphaSeries s(a, a.value() - 1.0, {Complex(1.0)});
        CHECK(rel_err(evaluate(s, 4.0).value.real(), 0.5) < 1e-14);
    }
    SUBCASE("domain errors") {
        const Alpha a(0.5);
        const AlphaSeries neg(a, -0.5, {Complex(1.0)});
        CHECK_THROWS_AS(evaluate(neg, -1.0), DomainError);
        CHECK_THROWS_AS(evaluate(neg, 0.0), DomainError);
    }
    SUBCASE("t = 0 with positive offset gives 0") {
        const AlphaSeries s(Alpha(0.5), 0.25, {Complex(7.0)});
        const auto r = evaluate(s, 0.0);
        CHECK(r.value == Complex(0.0));
        CHECK(r.tail_estimate == 0.0);
    }
    SUBCASE("empty coefficient lists are rejected at construction") {
        CHECK_THROWS_AS(AlphaSeries(Alpha(0.5), 0.0, {}), DomainError);
    }
    SUBCASE("tail estimate is |c_N t^{offset + alpha N}|") {
        const Alpha a(0.5);
        const AlphaSeries s(a, 0.0, {Complex(1.0), Complex(2.0)});
        const auto r = evaluate(s, 4.0);
        CHECK(r.tail_estimate == doctest::Approx(2.0 * 2.0));  // |c_1| * 4^{0.5}
    }
}

TEST_CASE("estimate_order") {
    SUBCASE("Mittag-Leffler coefficients give 1/alpha within 5% by N = 500") {
        for (double av : {0.3, 0.5, 0.7}) {
            std::vector<double> logs(501);
            for (int n = 0; n <= 500; ++n) logs[static_cast<size_t>(n)] = -specfun::log_gamma_pos(av * n + 1.0);
            const double est = estimate_order_from_logs(logs);
            CHECK(std::abs(est - 1.0 / av) <= 0.05 / av);
        }
    }
    SUBCASE("1/n! has order 1") {
        std::vector<double> logs(501);
        for (int n = 0; n <= 500; ++n) logs[static_cast<size_t>(n)] = -std::lgamma(n + 1.0);
        CHECK(std::abs(estimate_order_from_logs(logs) - 1.0) < 0.05);
    }
    SUBCASE("1/Gamma(n/2+1) has order 2") {
        std::vector<double> logs(501);
        for (int n = 0; n <= 500; ++n) logs[static_cast<size_t>(n)] = -std::lgamma(n / 2.0 + 1.0);
        CHECK(std::abs(estimate_order_from_logs(logs) - 2.0) < 0.1);
    }
    SUBCASE("too few nonzero coefficients") {
        std::vector<double> logs(30, 0.0);
        CHECK_THROWS_AS(estimate_order_from_logs(logs), NumericError);
    }
}

TEST_SUITE_END();
