#include <doctest.h>

#include <cmath>

#include "fracseries/cauchy_solver.hpp"

using namespace fracseries;
using namespace fracseries::cauchy;

TEST_SUITE_BEGIN("cauchy_solver");

TEST_CASE("constant coefficient reproduces the Mittag-Leffler coefficients") {
    for (double av : {0.3, 0.5, 0.7}) {
        const Alpha a(av);
        const Complex lambda(1.3, -0.4);
        const auto u = solve_caputo({Kind::Caputo, a, {lambda}, Complex(1.0), 80});
        for (int n = 0; n <= 80; ++n) {
            const Complex want = std::pow(lambda, n) * std::exp(-specfun::log_gamma_pos(av * n + 1.0));
            CHECK(std::abs(u.coeff(n) - want) <= 1e-12 * std::abs(want));
        }
    }
}

TEST_CASE("constant coefficient evaluates to the Mittag-Leffler function") {
    for (double av : {0.3, 0.5, 0.7}) {
        const Alpha a(av);
        for (double lv : {-1.5, 0.5, 2.0}) {
            const auto u = solve_caputo({Kind::Caputo, a, {Complex(lv)}, Complex(1.0), 200});
            for (double t : {0.3, 1.0, 2.0}) {
                const Complex direct = specfun::mittag_leffler(av, lv * std::pow(t, av), 1e-15);
                const Complex got = series::evaluate(u, t).value;
                CHECK(std::abs(got - direct) <= 1e-10 * std::abs(direct));
            }
        }
    }
}

TEST_CASE("A = 0 gives the constant solution") {
    const auto u = solve_caputo({Kind::Caputo, Alpha(0.4), {Complex(0.0)}, Complex(2.5), 10});
    CHECK(u.coeff(0) == Complex(2.5));
    for (int n = 1; n <= 10; ++n) CHECK(u.coeff(n) == Complex(0.0));
}

TEST_CASE("A(z) = z index bookkeeping") {
    // c_1 = 0 (a_0 = 0), c_2 = a_1 c_0 / beta(2) = 1/rho(1)
    const Alpha a(0.5);
    const auto u = solve_caputo({Kind::Caputo, a, {Complex(0.0), Complex(1.0)}, Complex(1.0), 8});
    CHECK(u.coeff(1) == Complex(0.0));
    CHECK(std::abs(u.coeff(2).real() - 0.88622692545275801364) < 1e-13);
    // hand-unrolled next step: c_3 = a_1 c_1 / beta(3) = 0, c_4 = a_1 c_2 / beta(4)
    CHECK(u.coeff(3) == Complex(0.0));
    const double want4 = 0.88622692545275801364 / specfun::beta_seq(4, a);
    CHECK(std::abs(u.coeff(4).real() - want4) < 1e-13);
}

TEST_CASE("symbolic expansion cross-check for N <= 6") {
    // A(z) = a0 + a1 z; expand D_alpha v = A v by hand:
    //   c1 b1 = a0 c0;  c2 b2 = a0 c1 + a1 c0;  c3 b3 = a0 c2 + a1 c1; ...
    const Alpha a(0.35);
    const Complex a0(0.8, 0.1), a1(-0.5, 0.3), c0(1.2, -0.7);
    const auto u = solve_caputo({Kind::Caputo, a, {a0, a1}, c0, 6});
    auto b = [&](int n) { return specfun::beta_seq(n, a); };
    std::vector<Complex> c(7);
    c[0] = c0;
    c[1] = a0 * c[0] / b(1);
    c[2] = (a0 * c[1] + a1 * c[0]) / b(2);
    c[3] = (a0 * c[2] + a1 * c[1]) / b(3);
    c[4] = (a0 * c[3] + a1 * c[2]) / b(4);
    c[5] = (a0 * c[4] + a1 * c[3]) / b(5);
    c[6] = (a0 * c[5] + a1 * c[4]) / b(6);
    for (int n = 0; n <= 6; ++n) CHECK(std::abs(u.coeff(n) - c[static_cast<size_t>(n)]) <= 1e-14 * std::abs(c[static_cast<size_t>(n)]));
}

TEST_CASE("RL solve") {
    const Alpha a(0.5);
    SUBCASE("A = 0 gives t^{alpha-1} exactly") {
        const auto u = solve_rl({Kind::RL, a, {Complex(0.0)}, Complex(1.0), 6});
        CHECK(u.offset() == doctest::Approx(-0.5));
        CHECK(u.coeff(0) == Complex(1.0));
        for (int n = 1; n <= 6; ++n) CHECK(u.coeff(n) == Complex(0.0));
    }
    SUBCASE("constant A: unrolled product formula") {
        const Complex lambda(0.9, 0.2);
        const auto u = solve_rl({Kind::RL, a, {lambda}, Complex(1.0), 30});
        Complex prod(1.0);
        for (int n = 1; n <= 30; ++n) {
            prod *= lambda / specfun::rho(a.value() - 1.0 + a.value() * n, a);
            CHECK(std::abs(u.coeff(n) - prod) <= 1e-12 * std::abs(prod));
        }
    }
    SUBCASE("linearity: doubling the initial datum doubles every coefficient") {
        const auto u1 = solve_rl({Kind::RL, a, {Complex(0.7)}, Complex(1.0), 20});
        const auto u2 = solve_rl({Kind::RL, a, {Complex(0.7)}, Complex(2.0), 20});
        for (int n = 0; n <= 20; ++n) CHECK(u2.coeff(n) == 2.0 * u1.coeff(n));
    }
}

TEST_CASE("determinism: identical problems give bitwise-identical coefficients") {
    const ScalarProblem p{Kind::Caputo, Alpha(0.61), {Complex(0.3, 0.4), Complex(-1.1)}, Complex(0.5, -0.25), 64};
    const auto u1 = solve(p);
    const auto u2 = solve(p);
    REQUIRE(u1.truncation() == u2.truncation());
    for (int n = 0; n <= u1.truncation(); ++n) {
        CHECK(u1.coeff(n).real() == u2.coeff(n).real());
        CHECK(u1.coeff(n).imag() == u2.coeff(n).imag());
    }
}

TEST_CASE("check_order_bound") {
    SUBCASE("m = 0 hits 1/alpha within 5% and respects the bound") {
        for (double av : {0.3, 0.5, 0.7}) {
            const auto rep = check_order_bound({Kind::Caputo, Alpha(av), {Complex(1.0)}, Complex(1.0), 1}, 2000);
            CHECK(!rep.degenerate);
            CHECK(std::abs(rep.estimate - 1.0 / av) <= 0.05 / av);
            CHECK(rep.estimate <= rep.bound + rep.tolerance);
            CHECK(!rep.violated);
        }
    }
    SUBCASE("m = 1 stays below (1+m)/alpha + tol at N = 2000") {
        const auto rep = check_order_bound(
            {Kind::Caputo, Alpha(0.5), {Complex(1.0), Complex(1.0)}, Complex(1.0), 2}, 2000);
        CHECK(rep.bound == doctest::Approx(4.0));
        CHECK(rep.estimate <= 4.0 + rep.tolerance);
        CHECK(!rep.violated);
    }
    SUBCASE("A = 0 is degenerate") {
        const auto rep = check_order_bound({Kind::Caputo, Alpha(0.5), {Complex(0.0)}, Complex(1.0), 1}, 500);
        CHECK(rep.degenerate);
        CHECK(!rep.violated);
    }
    SUBCASE("RL kind refused") {
        CHECK_THROWS_AS(check_order_bound({Kind::RL, Alpha(0.5), {Complex(1.0)}, Complex(1.0), 1}, 100),
                        PreconditionError);
    }
}

TEST_SUITE_END();
