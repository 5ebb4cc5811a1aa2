#pragma once

#include <Eigen/Dense>

#include "fracseries/cauchy_solver.hpp"

namespace fracseries::regular {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using series::Complex;

/// A(z) = A_0 + sum_{m>=1} A_m z^m with the growth envelope
/// ||A_m|| <= M mu^m.  The envelope constants are recomputed from the
/// matrices at construction, never trusted from the caller.
class MatrixCoefficientSeries {
  public:
    MatrixCoefficientSeries(Alpha alpha, std::vector<Matrix> mats);

    Alpha alpha() const noexcept { return alpha_; }
    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return static_cast<int>(mats_.size()) - 1; }
    const std::vector<Matrix>& mats() const noexcept { return mats_; }
    const Matrix& mat(int m) const { return mats_.at(static_cast<size_t>(m)); }
    double bound_M() const noexcept { return bound_M_; }
    double bound_mu() const noexcept { return bound_mu_; }

  private:
    Alpha alpha_;
    std::vector<Matrix> mats_;
    int dim_;
    double bound_M_, bound_mu_;
};

/// Vector-valued alpha-power series sum u_k t^{offset + alpha k}.
struct VectorAlphaSeries {
    Alpha alpha;
    double offset;
    std::vector<Vector> coeffs;

    int truncation() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    Vector evaluate(double t) const;
};

/// Power-series solution of t^alpha D^alpha u = A(t^alpha) u by the
/// recurrence [A_0 - beta(l)] u_l = -sum_{k=1}^{l} A_k u_{l-k}.
///
/// The compatibility condition on u_0 (A_0 u_0 = u_0/Gamma(1-alpha) for the
/// RL kind, A_0 u_0 = 0 for Caputo) is checked to 1e-10; a singular
/// A_0 - beta(l) I raises SpectralCollisionError naming l.
VectorAlphaSeries formal_solution(cauchy::Kind kind, const MatrixCoefficientSeries& A,
                                  const Vector& u0, int truncation);

struct RadiusBound {
    bool unbounded;  // polynomial coefficient, infinite radius
    double r;        // ||u_l|| <= r^l certified for all l
    double radius;   // 1/r, lower bound on the alpha-series radius in t^alpha
    int l0;          // threshold with ||[A_0 - beta(l)]^{-1}|| <= 1 beyond it
};

/// Certified convergence-radius lower bound from the inductive envelope
/// ||u_l|| <= r^l with r >= mu(M+1) and r covering the prefix up to l0.
RadiusBound radius_lower_bound(const MatrixCoefficientSeries& A, const std::vector<Vector>& u);

struct ModelScalarResult {
    enum class Verdict {
        PowerSolution,    // const * t^{gamma(lambda)}
        ConstantSolution, // Caputo with lambda = 0
        NoPowerSolution,  // Caputo, no continuous power solution with phi(0)=0
    };
    Verdict verdict;
    double exponent;  // gamma(lambda) when verdict == PowerSolution
};

/// Solutions of the model equations t^alpha D^alpha phi = lambda phi.
/// RL kind always yields t^{gamma(lambda)}; the Caputo kind requires the
/// solution to be continuous with phi(0) = 0, which holds only for
/// lambda > 1/Gamma(1-alpha).
ModelScalarResult model_scalar_exponent(double lambda, Alpha alpha, cauchy::Kind kind);

struct SpectrumViolation {
    int i, j, k;
    double mismatch;  // |gamma_j - gamma_i - alpha k|
};

struct SpectrumReport {
    std::vector<double> eigenvalues;
    std::vector<double> gammas;
    std::vector<SpectrumViolation> violations;  // within tol
    std::vector<SpectrumViolation> warnings;    // within warn_tol but not tol
    double tol, warn_tol;

    bool good() const noexcept { return violations.empty(); }
};

/// Scan gamma(lambda_j) - gamma(lambda_i) = alpha k for k = 1..k_max.
/// Beyond k_max collisions are excluded automatically once
/// gamma spans are smaller than alpha k.  Near-misses within warn_tol are
/// reported separately: the entrywise denominators become ill-conditioned.
SpectrumReport spectrum_report(const std::vector<double>& eigenvalues, Alpha alpha, int k_max,
                               double tol = 1e-9, double warn_tol = 1e-6);

/// Fundamental solution u(t) = S(t^alpha) diag(t^{gamma(lambda_i)}),
/// S(z) = sum sigma_nu z^nu, sigma_0 = I.
struct FrobeniusSolution {
    Alpha alpha;
    std::vector<double> exponents;   // gamma(lambda_i)
    std::vector<Matrix> sigma_mats;  // sigma_0 .. sigma_N
    double radius_estimate;          // root-test estimate on ||sigma_k||, inf if polynomial tail
    SpectrumReport spectrum;
    bool repeated_exponents;

    /// Column j of the solution at t > 0: sum_nu sigma_nu[:,j] t^{gamma_j + alpha nu}.
    Matrix evaluate(double t) const;
};

/// Solve sigma_k rho(gamma_j + alpha k) - lambda_i sigma_k = B entrywise,
/// B = sum_{l<k} A_{k-l} sigma_l.  Requires A_0 = diag(lambda_1..lambda_n)
/// real (Hermitian inputs are diagonalized by the caller; see
/// hermitian_eigenvalues) and a good spectrum through k = truncation.
/// With `caputo` set, additionally requires every lambda_i >= 1/Gamma(1-alpha).
FrobeniusSolution frobenius_solve(const MatrixCoefficientSeries& A, int truncation,
                                  bool caputo = false);

/// Max over nu of the relative mismatch between the t^alpha D^alpha u and
/// A(t^alpha) u coefficients of the computed solution.
double substitution_residual(const FrobeniusSolution& sol, const MatrixCoefficientSeries& A);

/// Plumbing helper: eigenvalues of a Hermitian matrix (callers diagonalize
/// A_0 themselves before frobenius_solve).
std::vector<double> hermitian_eigenvalues(const Matrix& A0, double tol = 1e-10);

}  // namespace fracseries::regular
