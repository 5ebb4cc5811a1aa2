#pragma once

#include <functional>

#include "fracseries/alpha_series.hpp"

namespace fracseries::oracle {

using series::AlphaSeries;
using series::Complex;

/// Quadrature backend for the singular fractional kernels.  GaussJacobi
/// absorbs the endpoint singularity into the weight; GradedMesh is a
/// composite Gauss-Legendre product rule on a mesh graded toward the
/// endpoints.  Either way the node count is doubled until two successive
/// answers agree to tolerance (self-validating).
struct QuadratureScheme {
    enum class Kind { GaussJacobi, GradedMesh };
    Kind kind = Kind::GaussJacobi;
    int nodes = 64;
    double grading = 3.0;
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int max_nodes = 16384;
};

struct QuadratureResult {
    Complex value;
    double error_estimate;
    int nodes_used;
};

/// Gauss-Jacobi rule on [0,1] for the weight (1-x)^a x^b, a,b > -1
/// (Golub-Welsch on the Jacobi recurrence; independent of the library's
/// own log-Gamma).
void gauss_jacobi_01(int n, double a, double b, std::vector<double>& x, std::vector<double>& w);

/// Caputo derivative of an offset-0 alpha-series at t > 0: quadrature of
/// (1/Gamma(1-alpha)) int_0^t (t-tau)^{-alpha} u'(tau) dtau after the
/// substitution tau = t s^{1/alpha}, which makes the series factor entire
/// in s.
QuadratureResult caputo_derivative_quadrature(const AlphaSeries& u, double t,
                                              QuadratureScheme scheme = {});

/// Caputo derivative of a scalar function with a supplied derivative:
/// (1/Gamma(1-alpha)) int_0^t (t-tau)^{-alpha} f'(tau) dtau.  `df_left_exponent`
/// declares f'(tau) ~ tau^sigma near 0 so the weight can absorb it.
QuadratureResult caputo_derivative_quadrature(const std::function<double(double)>& df, Alpha alpha,
                                              double t, QuadratureScheme scheme = {},
                                              double df_left_exponent = 0.0);

/// Caputo derivative without a derivative of f: central 5-point stencil on
/// the quadratured I^{1-alpha} f minus t^{-alpha} f(0)/Gamma(1-alpha).
QuadratureResult caputo_derivative_quadrature_nodiff(const std::function<double(double)>& f,
                                                     Alpha alpha, double t,
                                                     QuadratureScheme scheme = {},
                                                     double f_left_exponent = 0.0);

/// Riemann-Liouville derivative d/dt I^{1-alpha} f via the same stencil.
QuadratureResult rl_derivative_quadrature(const std::function<double(double)>& f, Alpha alpha,
                                          double t, QuadratureScheme scheme = {},
                                          double f_left_exponent = 0.0);

/// Right-sided integral (I_-^order phi)(t) = (1/Gamma(order)) *
/// int_t^inf (tau-t)^{order-1} phi(tau) dtau for rapidly decaying phi.
/// The integral is taken in logarithmic coordinates (no endpoint
/// singularity there).  With `zero_moment` set, phi(s) is subtracted from
/// phi(t+s) pointwise - valid exactly when int s^{order-1} phi(s) ds = 0,
/// as it is for kappa_alpha - which removes the catastrophic cancellation
/// at small t.
QuadratureResult right_integral_quadrature(const std::function<double(double)>& phi, double order,
                                           double t, QuadratureScheme scheme = {},
                                           bool zero_moment = false);

/// The test function kappa_alpha(x) = x^{alpha-2} exp(-log^2 x / 4) sin((pi/2) log x).
struct TestFunctionKappa {
    Alpha alpha;
    double operator()(double x) const;
};

/// Mellin transform of kappa: kappa~(z) = 2 sqrt(pi) e^{z^2 - pi^2/4} sin(pi z).
Complex mellin_kappa(Complex z);
/// d/dz of the closed form.
Complex mellin_kappa_prime(Complex z);
/// Quadrature cross-check of the closed form (real z).
QuadratureResult mellin_kappa_quadrature(double z, QuadratureScheme scheme = {});
/// Mellin transform of kappa_alpha: kappa~(z + alpha - 2).
Complex mellin_kappa_alpha(Complex z, Alpha alpha);
/// <t^nu, kappa_alpha> by quadrature (= kappa~_alpha(nu+1)).
QuadratureResult kappa_alpha_moment_quadrature(double nu, Alpha alpha, QuadratureScheme scheme = {});

struct DualityCheck {
    double lhs;  // closed form
    double rhs;  // quadrature
    double rel_err;
};

/// Duality check on negative monomials: <D^alpha t^mu, kappa_alpha>
/// (closed forms for mu < 0, including the log case at negative integers)
/// against mu <t^{mu-1}, I_-^{1-alpha} kappa_alpha> by double quadrature.
DualityCheck duality_check_monomial(double mu, Alpha alpha, QuadratureScheme scheme = {});

/// <kappa_alpha, D^alpha u> = <u', I_-^{1-alpha} kappa_alpha> for a smooth
/// u with u(0) = 0 and power-bounded growth, both sides by quadrature.
DualityCheck duality_check_pair(const std::function<double(double)>& u,
                                const std::function<double(double)>& du, Alpha alpha,
                                QuadratureScheme scheme = {});

/// Normalization int z_N(x) x^{-1} dx for z_N(x) = (N/R) kappa_alpha(x^N).
double mollifier_normalization(int n_scale, Alpha alpha);

/// ||z_N *_M f - f||_p for the fixed demo input f(x) = x/(1+x^2) in
/// L_p((0,inf), dt/t), p in {1,2}; one error per entry of `n_scales`.
std::vector<double> mollifier_convergence_demo(int p, const std::vector<int>& n_scales,
                                               Alpha alpha);

}  // namespace fracseries::oracle
