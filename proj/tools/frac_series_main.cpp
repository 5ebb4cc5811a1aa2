#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracseries/oracle.hpp"
#include "fracseries/serialization.hpp"

namespace fs = fracseries;
using fs::io::format_double;
using Complex = std::complex<double>;
using nlohmann::json;

namespace {

// complex token: "1.5" or "1.5:-0.25" (re:im)
Complex parse_complex(const std::string& tok) {
    const auto colon = tok.find(':');
    try {
        if (colon == std::string::npos) return Complex(std::stod(tok), 0.0);
        return Complex(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
    } catch (const std::exception&) {
        throw fs::PreconditionError("cannot parse complex value \"" + tok +
                                    "\" (expected re or re:im)");
    }
}

std::vector<Complex> parse_complex_list(const std::string& csv) {
    std::vector<Complex> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_complex(tok));
    if (out.empty()) throw fs::PreconditionError("empty coefficient list");
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw fs::PreconditionError("cannot parse number \"" + tok + "\"");
        }
    }
    return out;
}

fs::irregular::PreciseAlpha parse_precise_alpha(const std::string& tag) {
    if (tag == "golden") return fs::irregular::PreciseAlpha::golden();
    if (tag == "sqrt2m1") return fs::irregular::PreciseAlpha::sqrt2m1();
    if (tag.rfind("dec:", 0) == 0)
        return fs::irregular::PreciseAlpha::from_decimal(tag.substr(4));
    throw fs::PreconditionError("--alpha must be golden, sqrt2m1 or dec:<0.digits>, got " + tag);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        fs::io::atomic_write(out_path, j.dump(2) + "\n");
}

json error_json(const char* kind, const std::string& what) {
    return json{{"error", {{"kind", kind}, {"message", what}}}};
}

json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw fs::PreconditionError("cannot read " + path);
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw fs::PreconditionError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
    std::string kind = "caputo";
    double alpha = 0.5;
    std::string coeffs = "0";
    std::string init = "1";
    int order = 50;
    std::string out, eval, eval_out, coeffs_csv;
};

int run_solve(const SolveArgs& a) {
    fs::cauchy::ScalarProblem p{a.kind == "rl" ? fs::cauchy::Kind::RL : fs::cauchy::Kind::Caputo,
                                fs::Alpha(a.alpha), parse_complex_list(a.coeffs),
                                parse_complex(a.init), a.order};
    const auto u = fs::cauchy::solve(p);
    if (!a.out.empty()) fs::io::atomic_write(a.out, fs::io::series_to_json(u).dump(2) + "\n");
    if (!a.coeffs_csv.empty()) {
        std::ostringstream os;
        fs::io::write_series_csv(os, u);
        fs::io::atomic_write(a.coeffs_csv, os.str());
    }

    if (!a.eval.empty()) {
        std::ostringstream csv;
        csv << "t,re,im,tail_estimate\n";
        for (double t : parse_double_list(a.eval)) {
            const auto r = fs::series::evaluate(u, t);
            csv << format_double(t) << ',' << format_double(r.value.real()) << ','
                << format_double(r.value.imag()) << ',' << format_double(r.tail_estimate) << '\n';
        }
        if (a.eval_out.empty())
            std::cout << csv.str();
        else
            fs::io::atomic_write(a.eval_out, csv.str());
    } else if (a.out.empty()) {
        std::cout << fs::io::series_to_json(u).dump(2) << "\n";
    }
    return 0;
}

// ---- frobenius -------------------------------------------------------------

struct FrobeniusArgs {
    std::optional<double> alpha;
    std::string system;
    int order = 20;
    std::string out;
};

int run_frobenius(const FrobeniusArgs& a) {
    json j = read_json_file(a.system);
    if (a.alpha) j["alpha"] = *a.alpha;
    fs::cauchy::Kind kind;
    const auto A = fs::io::system_from_json(j, &kind);
    const auto sol = fs::regular::frobenius_solve(A, a.order, kind == fs::cauchy::Kind::Caputo);
    const double residual = fs::regular::substitution_residual(sol, A);
    emit(fs::io::frobenius_to_json(sol, residual), a.out);
    return 0;
}

// ---- irregular -------------------------------------------------------------

struct IrregularArgs {
    std::string alpha;
    std::string lambda = "1";
    std::string c0 = "1";
    int order = 200;
    int convergents = 40;
    std::string eval, out;
    bool pairings = false;
};

int run_irregular(const IrregularArgs& a) {
    const auto alpha = parse_precise_alpha(a.alpha);
    const auto sol = fs::irregular::build_formal_solution(alpha, parse_complex(a.lambda),
                                                          parse_complex(a.c0), a.order);

    json j{{"schema", fs::io::kSchemaTag},
           {"alpha", {{"value", alpha.value()}, {"source", alpha.source()}, {"digits", alpha.digits()}}},
           {"lambda", {sol.lambda.real(), sol.lambda.imag()}},
           {"c0", {sol.c0.real(), sol.c0.imag()}},
           {"order", a.order},
           {"cross_check_delta", sol.cross_check_delta}};

    json coeffs = json::array();
    for (int n = 0; n <= sol.truncation(); ++n)
        coeffs.push_back({{"n", n},
                          {"log_abs", sol.log_abs[static_cast<size_t>(n)]},
                          {"phase", sol.phase[static_cast<size_t>(n)]},
                          {"small_divisor", sol.small_divisors[static_cast<size_t>(n)]}});
    j["coeffs"] = std::move(coeffs);

    j["diophantine"] = fs::io::diophantine_to_json(fs::irregular::diophantine_analyze(alpha, a.convergents));

    if (!a.eval.empty()) {
        json evals = json::array();
        for (double t : parse_double_list(a.eval)) {
            const auto rep = fs::irregular::evaluate_partial_sums(sol, t, {a.order / 2, a.order});
            const char* diag = rep.diagnosis == fs::irregular::Convergence::Convergent ? "convergent"
                               : rep.diagnosis == fs::irregular::Convergence::Slow     ? "slow"
                                                                                       : "not-convergent";
            evals.push_back({{"t", t},
                             {"partial_sums",
                              {{"half", {rep.sums[0].real(), rep.sums[0].imag()}},
                               {"full", {rep.sums[1].real(), rep.sums[1].imag()}}}},
                             {"diagnosis", diag},
                             {"dominant_term", rep.dominant_term}});
        }
        j["partial_sums"] = std::move(evals);
    }

    if (a.pairings) {
        const auto rep = fs::irregular::distributional_pairing_terms(sol, sol.truncation());
        json terms = json::array();
        for (const auto& t : rep.terms)
            terms.push_back({{"n", t.n}, {"log_abs", t.log_abs}, {"phase", t.phase}});
        j["pairings"] = {{"terms", std::move(terms)},
                         {"growth_ratio_lo", rep.growth_ratio_lo},
                         {"growth_ratio_hi", rep.growth_ratio_hi},
                         {"alpha_squared", alpha.value() * alpha.value()},
                         {"divergent_in_distributions", rep.divergent}};
    }

    emit(j, a.out);
    return 0;
}

// ---- oracle check ----------------------------------------------------------

int run_oracle_suite(const std::string& suite, double alpha_value) {
    const fs::Alpha a(alpha_value);
    struct Row {
        std::string name;
        double err;
        double tol;
    };
    std::vector<Row> rows;

    if (suite == "monomials") {
        for (double av : {0.3, 0.5, 0.7}) {
            const fs::Alpha aa(av);
            double worst_c = 0.0, worst_r = 0.0;
            for (double d : {0.2, 0.7, 1.5}) {
                for (double t : {0.5, 1.0, 2.0}) {
                    const auto mono = fs::series::rl_derivative_monomial(d, aa);
                    const double want = mono.coefficient.real() * std::pow(t, mono.exponent);
                    auto f = [d](double tau) { return std::pow(tau, d); };
                    auto df = [d](double tau) { return d * std::pow(tau, d - 1.0); };
                    const auto qr = fs::oracle::rl_derivative_quadrature(f, aa, t, {}, d);
                    const auto qc = fs::oracle::caputo_derivative_quadrature(df, aa, t, {}, d - 1.0);
                    worst_r = std::max(worst_r, std::abs(qr.value.real() - want) / std::abs(want));
                    worst_c = std::max(worst_c, std::abs(qc.value.real() - want) / std::abs(want));
                }
            }
            std::ostringstream nm;
            nm << "monomials rl alpha=" << av;
            rows.push_back({nm.str(), worst_r, 1e-6});
            nm.str("");
            nm << "monomials caputo alpha=" << av;
            rows.push_back({nm.str(), worst_c, 1e-6});
        }
    } else if (suite == "duality") {
        for (double mu : {-0.3, -1.7, -1.0, -2.0}) {
            const auto chk = fs::oracle::duality_check_monomial(mu, a);
            std::ostringstream nm;
            nm << "monomial mu=" << mu;
            rows.push_back({nm.str(), chk.rel_err, 1e-4});
        }
        auto u1 = [](double t) { return t * std::exp(-t); };
        auto du1 = [](double t) { return std::exp(-t) * (1.0 - t); };
        auto u2 = [](double t) { return -std::expm1(-t); };
        auto du2 = [](double t) { return std::exp(-t); };
        rows.push_back({"pair t*exp(-t)", fs::oracle::duality_check_pair(u1, du1, a).rel_err, 1e-5});
        rows.push_back({"pair 1-exp(-t)", fs::oracle::duality_check_pair(u2, du2, a).rel_err, 1e-5});
    } else if (suite == "mellin") {
        for (int k = 0; k <= 3; ++k) {
            const auto q = fs::oracle::mellin_kappa_quadrature(-static_cast<double>(k));
            rows.push_back({"moment k=" + std::to_string(k), std::abs(q.value), 1e-8});
        }
        const double z = a.value() - 2.0;
        const auto q = fs::oracle::mellin_kappa_quadrature(z);
        const double closed = fs::oracle::mellin_kappa(Complex(z)).real();
        rows.push_back({"R = kappa~(alpha-2)", std::abs(q.value.real() - closed) / closed, 1e-6});
    } else if (suite == "mollifier") {
        for (int N : {1, 2, 4})
            rows.push_back({"normalization N=" + std::to_string(N),
                            std::abs(fs::oracle::mollifier_normalization(N, a) - 1.0), 1e-8});
        const auto errs = fs::oracle::mollifier_convergence_demo(2, {1, 2, 4, 8}, a);
        bool decreasing = true;
        for (size_t i = 0; i + 1 < errs.size(); ++i) decreasing &= errs[i + 1] < errs[i];
        rows.push_back({"L2 error decreasing", decreasing ? 0.0 : 1.0, 0.5});
    } else {
        throw fs::PreconditionError("unknown suite: " + suite +
                                    " (expected monomials|duality|mellin|mollifier)");
    }

    bool all_ok = true;
    std::cout << "suite: " << suite << "\n";
    for (const auto& r : rows) {
        const bool ok = r.err <= r.tol;
        all_ok &= ok;
        std::cout << (ok ? "PASS  " : "FAIL  ") << r.name << "  max_err=" << format_double(r.err)
                  << "  tol=" << format_double(r.tol) << "\n";
    }
    return all_ok ? 0 : 1;
}

// ---- specfun ----------------------------------------------------------------

void print_complex(Complex v) {
    if (v.imag() == 0.0)
        std::cout << format_double(v.real()) << "\n";
    else
        std::cout << format_double(v.real()) << (v.imag() < 0 ? "" : "+") << format_double(v.imag())
                  << "j\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-power-series solvers for fractional differential equations"};
    app.require_subcommand(1);

    // specfun
    auto* sf = app.add_subcommand("specfun", "Gamma-ratio kernels and the Mittag-Leffler function");
    sf->require_subcommand(1);
    double sf_alpha = 0.5, sf_t = 0.0, sf_lambda = 0.0, sf_tol = 1e-14;
    int sf_n = 0;
    std::string sf_z = "1", sf_x = "1";
    auto* ml = sf->add_subcommand("ml", "Mittag-Leffler E_alpha(z)");
    ml->add_option("--alpha", sf_alpha, "order in (0,1]")->required();
    ml->add_option("--z", sf_z, "argument (re or re:im)")->required();
    ml->add_option("--tol", sf_tol, "series tail tolerance");
    auto* rho_cmd = sf->add_subcommand("rho", "rho(t) = Gamma(t+1)/Gamma(t+1-alpha)");
    rho_cmd->add_option("--alpha", sf_alpha)->required();
    rho_cmd->add_option("--t", sf_t)->required();
    auto* beta_cmd = sf->add_subcommand("beta", "beta(n) = rho(n alpha)");
    beta_cmd->add_option("--alpha", sf_alpha)->required();
    beta_cmd->add_option("--n", sf_n)->required();
    auto* gi = sf->add_subcommand("gamma-inverse", "inverse of rho");
    gi->add_option("--alpha", sf_alpha)->required();
    gi->add_option("--lambda", sf_lambda)->required();
    gi->add_option("--tol", sf_tol);
    auto* lgm = sf->add_subcommand("log-gamma", "principal log Gamma");
    lgm->add_option("--x", sf_x)->required();

    // solve
    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "scalar Cauchy problem D^alpha u = A(t^alpha) u");
    solve->add_option("--kind", sa.kind, "caputo|rl")->check(CLI::IsMember({"caputo", "rl"}));
    solve->add_option("--alpha", sa.alpha)->required();
    solve->add_option("--coeffs", sa.coeffs, "a0,a1,... (complex tokens re:im)")->required();
    solve->add_option("--init", sa.init, "initial datum");
    solve->add_option("--order", sa.order, "truncation N")->required();
    solve->add_option("--out", sa.out, "series JSON path");
    solve->add_option("--eval", sa.eval, "evaluation points t1,t2,...");
    solve->add_option("--eval-out", sa.eval_out, "CSV path (default stdout)");
    solve->add_option("--coeffs-csv", sa.coeffs_csv, "coefficient CSV path (n,re,im)");

    // frobenius
    FrobeniusArgs fa;
    auto* frob = app.add_subcommand("frobenius", "fundamental solution of t^alpha D^alpha u = A(t^alpha) u");
    double fa_alpha = 0.0;
    auto* fa_alpha_opt = frob->add_option("--alpha", fa_alpha, "override alpha from system.json");
    frob->add_option("--system", fa.system, "system JSON path")->required();
    frob->add_option("--order", fa.order, "truncation N")->required();
    frob->add_option("--out", fa.out, "solution JSON path");

    // irregular
    IrregularArgs ia;
    auto* irr = app.add_subcommand("irregular", "model equation t^{2alpha} D^alpha u = lambda u");
    irr->add_option("--alpha", ia.alpha, "golden|sqrt2m1|dec:<0.digits>")->required();
    irr->add_option("--lambda", ia.lambda);
    irr->add_option("--c0", ia.c0);
    irr->add_option("--order", ia.order);
    irr->add_option("--convergents", ia.convergents, "continued-fraction terms");
    irr->add_option("--eval", ia.eval, "points for partial sums");
    irr->add_flag("--pairings", ia.pairings, "emit distributional pairing growth");
    irr->add_option("--out", ia.out);

    // oracle
    auto* orc = app.add_subcommand("oracle", "quadrature ground-truth checks");
    auto* chk = orc->add_subcommand("check", "run a validation suite");
    std::string suite;
    double orc_alpha = 0.5;
    chk->add_option("--suite", suite, "monomials|duality|mellin|mollifier")->required();
    chk->add_option("--alpha", orc_alpha);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_json("usage", e.what()).dump(2) << "\n";
        return 2;
    }

    try {
        if (ml->parsed()) {
            print_complex(fs::specfun::mittag_leffler(sf_alpha, parse_complex(sf_z), sf_tol));
        } else if (rho_cmd->parsed()) {
            std::cout << format_double(fs::specfun::rho(sf_t, fs::Alpha(sf_alpha))) << "\n";
        } else if (beta_cmd->parsed()) {
            std::cout << format_double(fs::specfun::beta_seq(sf_n, fs::Alpha(sf_alpha))) << "\n";
        } else if (gi->parsed()) {
            std::cout << format_double(fs::specfun::gamma_inverse(sf_lambda, fs::Alpha(sf_alpha),
                                                                  sf_tol == 1e-14 ? 1e-12 : sf_tol))
                      << "\n";
        } else if (lgm->parsed()) {
            print_complex(fs::specfun::log_gamma(parse_complex(sf_x)));
        } else if (solve->parsed()) {
            return run_solve(sa);
        } else if (frob->parsed()) {
            if (*fa_alpha_opt) fa.alpha = fa_alpha;
            return run_frobenius(fa);
        } else if (irr->parsed()) {
            return run_irregular(ia);
        } else if (chk->parsed()) {
            return run_oracle_suite(suite, orc_alpha);
        }
        return 0;
    } catch (const fs::PreconditionError& e) {
        std::cout << error_json("precondition", e.what()).dump(2) << "\n";
        return 2;
    } catch (const fs::DomainError& e) {
        std::cout << error_json("domain", e.what()).dump(2) << "\n";
        return 2;
    } catch (const fs::NumericError& e) {
        std::cout << error_json("numeric", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << error_json("internal", e.what()).dump(2) << "\n";
        return 1;
    }
}
