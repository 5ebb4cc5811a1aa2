#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracseries/cauchy_solver.hpp"
#include "fracseries/irregular_singularity.hpp"
#include "fracseries/oracle.hpp"
#include "fracseries/regular_singularity.hpp"

namespace py = pybind11;
using namespace fracseries;
using Complex = std::complex<double>;

namespace {

cauchy::Kind parse_kind(const std::string& k) {
    if (k == "caputo") return cauchy::Kind::Caputo;
    if (k == "rl") return cauchy::Kind::RL;
    throw PreconditionError("kind must be \"caputo\" or \"rl\", got " + k);
}

regular::MatrixCoefficientSeries make_system(double alpha,
                                             const std::vector<std::vector<std::vector<Complex>>>& mats) {
    std::vector<regular::Matrix> ms;
    for (const auto& jm : mats) {
        const int n = static_cast<int>(jm.size());
        regular::Matrix m(n, n);
        for (int r = 0; r < n; ++r) {
            if (static_cast<int>(jm[static_cast<size_t>(r)].size()) != n)
                throw PreconditionError("matrices must be square");
            for (int c = 0; c < n; ++c) m(r, c) = jm[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
        ms.push_back(std::move(m));
    }
    return regular::MatrixCoefficientSeries(Alpha(alpha), std::move(ms));
}

irregular::PreciseAlpha make_precise_alpha(const std::string& tag) {
    if (tag == "golden") return irregular::PreciseAlpha::golden();
    if (tag == "sqrt2m1") return irregular::PreciseAlpha::sqrt2m1();
    return irregular::PreciseAlpha::from_decimal(tag);
}

}  // namespace

PYBIND11_MODULE(_fracseries, m) {
    m.doc() = "alpha-power-series solvers for fractional differential equations of order in (0,1)";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);

    // special functions
    m.def("log_gamma", [](Complex z) { return specfun::log_gamma(z); }, py::arg("z"));
    m.def("rho", [](double t, double alpha) { return specfun::rho(t, Alpha(alpha)); },
          py::arg("t"), py::arg("alpha"));
    m.def("beta_seq", [](int n, double alpha) { return specfun::beta_seq(n, Alpha(alpha)); },
          py::arg("n"), py::arg("alpha"));
    m.def("gamma_inverse",
          [](double lam, double alpha, double tol) { return specfun::gamma_inverse(lam, Alpha(alpha), tol); },
          py::arg("lam"), py::arg("alpha"), py::arg("tol") = 1e-12);
    m.def("mittag_leffler",
          [](double order, Complex z, double tol) { return specfun::mittag_leffler(order, z, tol); },
          py::arg("order"), py::arg("z"), py::arg("tol") = 1e-14);

    // series
    py::class_<series::AlphaSeries>(m, "AlphaSeries")
        .def(py::init([](double alpha, double offset, std::vector<Complex> coeffs) {
                 return series::AlphaSeries(Alpha(alpha), offset, std::move(coeffs));
             }),
             py::arg("alpha"), py::arg("offset"), py::arg("coeffs"))
        .def_property_readonly("alpha", [](const series::AlphaSeries& s) { return s.alpha().value(); })
        .def_property_readonly("offset", &series::AlphaSeries::offset)
        .def_property_readonly("coeffs", &series::AlphaSeries::coeffs)
        .def_property_readonly("truncation", &series::AlphaSeries::truncation)
        .def("evaluate",
             [](const series::AlphaSeries& s, double t) {
                 const auto r = series::evaluate(s, t);
                 return py::make_tuple(r.value, r.tail_estimate);
             },
             py::arg("t"), "returns (value, tail_estimate)")
        .def("__len__", [](const series::AlphaSeries& s) { return s.coeffs().size(); });

    m.def("gl_derivative", &series::gl_derivative, py::arg("v"));
    m.def("gl_integral", &series::gl_integral, py::arg("f"));
    m.def("estimate_order", py::overload_cast<const series::AlphaSeries&>(&series::estimate_order),
          py::arg("series"));

    // Cauchy solver
    m.def("solve",
          [](const std::string& kind, double alpha, std::vector<Complex> coeffs, Complex init, int order) {
              return cauchy::solve({parse_kind(kind), Alpha(alpha), std::move(coeffs), init, order});
          },
          py::arg("kind"), py::arg("alpha"), py::arg("coeffs"), py::arg("init"), py::arg("order"));
    m.def("check_order_bound",
          [](double alpha, std::vector<Complex> coeffs, Complex init, int truncation) {
              const int min_order = static_cast<int>(coeffs.size()) + 1;
              const auto r = cauchy::check_order_bound(
                  {cauchy::Kind::Caputo, Alpha(alpha), std::move(coeffs), init, min_order},
                  truncation);
              return py::dict(py::arg("estimate") = r.estimate, py::arg("bound") = r.bound,
                              py::arg("degenerate") = r.degenerate, py::arg("violated") = r.violated);
          },
          py::arg("alpha"), py::arg("coeffs"), py::arg("init") = Complex(1.0),
          py::arg("truncation") = 2000);

    // regular singularity
    m.def("spectrum_report",
          [](std::vector<double> eigs, double alpha, int k_max, double tol) {
              const auto rep = regular::spectrum_report(eigs, Alpha(alpha), k_max, tol);
              py::list viol;
              for (const auto& v : rep.violations) viol.append(py::make_tuple(v.i, v.j, v.k));
              return py::dict(py::arg("gammas") = rep.gammas, py::arg("good") = rep.good(),
                              py::arg("violations") = viol);
          },
          py::arg("eigenvalues"), py::arg("alpha"), py::arg("k_max") = 100, py::arg("tol") = 1e-9);
    m.def("model_scalar_exponent",
          [](double lam, double alpha, const std::string& kind) {
              const auto r = regular::model_scalar_exponent(lam, Alpha(alpha), parse_kind(kind));
              const char* v = r.verdict == regular::ModelScalarResult::Verdict::PowerSolution
                                  ? "power"
                                  : r.verdict == regular::ModelScalarResult::Verdict::ConstantSolution
                                        ? "constant"
                                        : "none";
              return py::make_tuple(v, r.exponent);
          },
          py::arg("lam"), py::arg("alpha"), py::arg("kind"));
    m.def("frobenius_solve",
          [](double alpha, const std::vector<std::vector<std::vector<Complex>>>& mats, int order,
             bool caputo) {
              const auto A = make_system(alpha, mats);
              const auto sol = regular::frobenius_solve(A, order, caputo);
              py::list sigmas;
              for (const auto& s : sol.sigma_mats) {
                  py::list rows;
                  for (int r = 0; r < s.rows(); ++r) {
                      py::list row;
                      for (int c = 0; c < s.cols(); ++c) row.append(s(r, c));
                      rows.append(row);
                  }
                  sigmas.append(rows);
              }
              return py::dict(py::arg("exponents") = sol.exponents, py::arg("sigma_mats") = sigmas,
                              py::arg("radius_estimate") = sol.radius_estimate,
                              py::arg("residual") = regular::substitution_residual(sol, A));
          },
          py::arg("alpha"), py::arg("A_mats"), py::arg("order"), py::arg("caputo") = false);
    m.def("formal_solution",
          [](const std::string& kind, double alpha,
             const std::vector<std::vector<std::vector<Complex>>>& mats, std::vector<Complex> u0,
             int order) {
              const auto A = make_system(alpha, mats);
              regular::Vector v0(static_cast<long>(u0.size()));
              for (size_t i = 0; i < u0.size(); ++i) v0(static_cast<long>(i)) = u0[i];
              const auto sol = regular::formal_solution(parse_kind(kind), A, v0, order);
              py::list out;
              for (const auto& c : sol.coeffs) {
                  py::list v;
                  for (long i = 0; i < c.size(); ++i) v.append(c(i));
                  out.append(v);
              }
              return out;
          },
          py::arg("kind"), py::arg("alpha"), py::arg("A_mats"), py::arg("u0"), py::arg("order"));

    // irregular singularity
    py::class_<irregular::PreciseAlpha>(m, "PreciseAlpha")
        .def(py::init(&make_precise_alpha), py::arg("tag"),
             "tag: \"golden\", \"sqrt2m1\" or a decimal string \"0.ddd...\"")
        .def_property_readonly("value", &irregular::PreciseAlpha::value)
        .def_property_readonly("digits", &irregular::PreciseAlpha::digits)
        .def("sin_pi_multiple", &irregular::PreciseAlpha::sin_pi_multiple, py::arg("n"));
    m.def("build_formal_solution",
          [](const irregular::PreciseAlpha& a, Complex lam, Complex c0, int order) {
              const auto sol = irregular::build_formal_solution(a, lam, c0, order);
              return py::dict(py::arg("log_abs") = sol.log_abs, py::arg("phase") = sol.phase,
                              py::arg("small_divisors") = sol.small_divisors,
                              py::arg("cross_check_delta") = sol.cross_check_delta);
          },
          py::arg("alpha"), py::arg("lam") = Complex(1.0), py::arg("c0") = Complex(1.0),
          py::arg("order") = 200);
    m.def("partial_sums",
          [](const irregular::PreciseAlpha& a, Complex lam, Complex c0, double t,
             std::vector<int> orders) {
              const int n = *std::max_element(orders.begin(), orders.end());
              const auto sol = irregular::build_formal_solution(a, lam, c0, n);
              const auto rep = irregular::evaluate_partial_sums(sol, t, orders);
              const char* diag = rep.diagnosis == irregular::Convergence::Convergent ? "convergent"
                                 : rep.diagnosis == irregular::Convergence::Slow     ? "slow"
                                                                                     : "not-convergent";
              return py::dict(py::arg("sums") = rep.sums, py::arg("diagnosis") = diag,
                              py::arg("dominant_term") = rep.dominant_term);
          },
          py::arg("alpha"), py::arg("lam"), py::arg("c0"), py::arg("t"), py::arg("orders"));
    m.def("diophantine_analyze",
          [](const irregular::PreciseAlpha& a, int k) {
              const auto rep = irregular::diophantine_analyze(a, k);
              py::list terms;
              for (const auto& t : rep.cf_terms) terms.append(py::int_(py::str(t.get_str())));
              const char* verdict =
                  rep.verdict == irregular::DiophantineVerdict::BadlyApproximable ? "badly-approximable"
                  : rep.verdict == irregular::DiophantineVerdict::WellApproximable ? "well-approximable"
                  : rep.verdict == irregular::DiophantineVerdict::Rational          ? "rational"
                                                                                    : "suspect";
              return py::dict(py::arg("cf_terms") = terms,
                              py::arg("exponent_estimate") = rep.exponent_estimate,
                              py::arg("verdict") = verdict, py::arg("usable_terms") = rep.usable_terms);
          },
          py::arg("alpha"), py::arg("max_convergents") = 40);
    m.def("pairing_growth",
          [](const irregular::PreciseAlpha& a, Complex lam, int n_max) {
              const auto sol = irregular::build_formal_solution(a, lam, Complex(1.0), n_max + 2);
              const auto rep = irregular::distributional_pairing_terms(sol, n_max);
              std::vector<double> logs;
              for (const auto& t : rep.terms) logs.push_back(t.log_abs);
              return py::dict(py::arg("log_abs") = logs, py::arg("lo") = rep.growth_ratio_lo,
                              py::arg("hi") = rep.growth_ratio_hi,
                              py::arg("divergent") = rep.divergent);
          },
          py::arg("alpha"), py::arg("lam") = Complex(1.0), py::arg("n_max") = 100);

    // oracle
    m.def("caputo_derivative_quadrature",
          [](const series::AlphaSeries& u, double t) {
              const auto r = oracle::caputo_derivative_quadrature(u, t);
              return py::make_tuple(r.value, r.error_estimate);
          },
          py::arg("u"), py::arg("t"));
    m.def("mellin_kappa", [](Complex z) { return oracle::mellin_kappa(z); }, py::arg("z"));
    m.def("mellin_kappa_quadrature",
          [](double z) { return oracle::mellin_kappa_quadrature(z).value; }, py::arg("z"));
    m.def("mollifier_convergence_demo",
          [](int p, std::vector<int> scales, double alpha) {
              return oracle::mollifier_convergence_demo(p, scales, Alpha(alpha));
          },
          py::arg("p"), py::arg("scales"), py::arg("alpha") = 0.5);
    m.def("duality_check_monomial",
          [](double mu, double alpha) {
              const auto c = oracle::duality_check_monomial(mu, Alpha(alpha));
              return py::make_tuple(c.lhs, c.rhs, c.rel_err);
          },
          py::arg("mu"), py::arg("alpha"));

#ifdef FRACSERIES_VERSION
    m.attr("__version__") = FRACSERIES_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
