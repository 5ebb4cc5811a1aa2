#include "fracseries/regular_singularity.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fracseries::regular {

using specfun::beta_seq;
using specfun::gamma_inverse;
using specfun::log_gamma_pos;
using specfun::rho;

namespace {

double op_norm(const Matrix& m) {
    return m.jacobiSvd().singularValues()(0);
}

double min_singular_value(const Matrix& m) {
    auto sv = m.jacobiSvd().singularValues();
    return sv(sv.size() - 1);
}

}  // namespace

MatrixCoefficientSeries::MatrixCoefficientSeries(Alpha alpha, std::vector<Matrix> mats)
    : alpha_(alpha), mats_(std::move(mats)) {
    if (mats_.empty()) throw PreconditionError("MatrixCoefficientSeries: need at least A_0");
    dim_ = static_cast<int>(mats_[0].rows());
    for (const auto& m : mats_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw PreconditionError("MatrixCoefficientSeries: matrices must be square, same size");
    // envelope ||A_m|| <= M mu^m: mu = max ||A_m||^{1/m} (m >= 1), then
    // every ||A_m|| <= mu^m and M picks up A_0
    bound_mu_ = 0.0;
    for (size_t m = 1; m < mats_.size(); ++m) {
        const double nm = op_norm(mats_[m]);
        if (nm > 0.0) bound_mu_ = std::max(bound_mu_, std::pow(nm, 1.0 / static_cast<double>(m)));
    }
    bound_M_ = std::max(op_norm(mats_[0]), bound_mu_ > 0.0 ? 1.0 : 0.0);
}

Vector VectorAlphaSeries::evaluate(double t) const {
    if (t <= 0.0) {
        if (t < 0.0 || offset < 0.0) throw DomainError("VectorAlphaSeries::evaluate: bad t");
        return offset == 0.0 ? coeffs[0] : Vector(Vector::Zero(coeffs[0].size()));
    }
    const double x = std::pow(t, alpha.value());
    Vector acc = Vector::Zero(coeffs[0].size());
    for (int n = truncation(); n >= 0; --n) acc = acc * x + coeffs[static_cast<size_t>(n)];
    return acc * std::pow(t, offset);
}

VectorAlphaSeries formal_solution(cauchy::Kind kind, const MatrixCoefficientSeries& A,
                                  const Vector& u0, int truncation) {
    if (u0.size() != A.dim()) throw PreconditionError("formal_solution: u0 dimension mismatch");
    if (truncation < 0) throw PreconditionError("formal_solution: truncation must be >= 0");

    const Matrix& A0 = A.mat(0);
    Vector residual;
    if (kind == cauchy::Kind::RL) {
        // A_0 u_0 = u_0 / Gamma(1-alpha), i.e. beta(0) u_0
        residual = A0 * u0 - beta_seq(0, A.alpha()) * u0;
    } else {
        residual = A0 * u0;
    }
    if (residual.norm() > 1e-10 * std::max(1.0, u0.norm())) {
        std::ostringstream os;
        os << "formal_solution: compatibility condition on u0 violated, residual norm = "
           << residual.norm()
           << (kind == cauchy::Kind::RL ? " (need A0 u0 = u0/Gamma(1-alpha))" : " (need A0 u0 = 0)");
        throw PreconditionError(os.str());
    }

    std::vector<Vector> u(static_cast<size_t>(truncation) + 1);
    u[0] = u0;
    const Matrix id = Matrix::Identity(A.dim(), A.dim());
    for (int l = 1; l <= truncation; ++l) {
        Vector rhs = Vector::Zero(A.dim());
        for (int k = 1; k <= std::min(l, A.degree()); ++k) rhs -= A.mat(k) * u[static_cast<size_t>(l - k)];
        const Matrix lhs = A0 - beta_seq(l, A.alpha()) * id;
        if (min_singular_value(lhs) < 1e-12 * std::max(1.0, op_norm(lhs))) {
            std::ostringstream os;
            os << "formal_solution: A0 - beta(l) I singular at l = " << l
               << " (beta(l) = " << beta_seq(l, A.alpha()) << " is an eigenvalue of A0)";
            throw SpectralCollisionError(os.str(), -1, -1, l);
        }
        u[static_cast<size_t>(l)] = lhs.partialPivLu().solve(rhs);
    }
    return VectorAlphaSeries{A.alpha(), 0.0, std::move(u)};
}

RadiusBound radius_lower_bound(const MatrixCoefficientSeries& A, const std::vector<Vector>& u) {
    RadiusBound out{};
    if (A.degree() == 0 || A.bound_mu() == 0.0) {
        out.unbounded = true;
        out.r = 0.0;
        out.radius = std::numeric_limits<double>::infinity();
        out.l0 = 0;
        return out;
    }

    // l0: once beta(l) >= ||A_0|| + 1, ||[A_0 - beta(l)]^{-1}|| <= 1 for
    // every following l as well (beta is increasing)
    const double a0_norm = op_norm(A.mat(0));
    int l0 = 1;
    while (beta_seq(l0, A.alpha()) < a0_norm + 1.0) {
        ++l0;
        if (l0 > 1000000) throw NumericError("radius_lower_bound: l0 scan did not terminate");
    }
    if (static_cast<int>(u.size()) <= l0)
        throw PreconditionError("radius_lower_bound: coefficients must be computed through l0 = " +
                                std::to_string(l0));

    // scale so the starting vector has norm <= 1 (scaling a solution does
    // not move the convergence radius)
    const double s = std::max(1.0, u[0].norm());
    double r = A.bound_mu() * (A.bound_M() + 1.0);
    for (int l = 1; l <= l0; ++l) {
        const double nl = u[static_cast<size_t>(l)].norm() / s;
        if (nl > 0.0) r = std::max(r, std::pow(nl, 1.0 / static_cast<double>(l)));
    }
    out.unbounded = false;
    out.r = r;
    out.radius = 1.0 / r;
    out.l0 = l0;
    return out;
}

ModelScalarResult model_scalar_exponent(double lambda, Alpha alpha, cauchy::Kind kind) {
    if (kind == cauchy::Kind::RL)
        return {ModelScalarResult::Verdict::PowerSolution, gamma_inverse(lambda, alpha)};
    if (lambda == 0.0) return {ModelScalarResult::Verdict::ConstantSolution, 0.0};
    const double threshold = std::exp(-log_gamma_pos(1.0 - alpha.value()));  // 1/Gamma(1-alpha)
    if (lambda > threshold)
        return {ModelScalarResult::Verdict::PowerSolution, gamma_inverse(lambda, alpha)};
    return {ModelScalarResult::Verdict::NoPowerSolution, std::numeric_limits<double>::quiet_NaN()};
}

SpectrumReport spectrum_report(const std::vector<double>& eigenvalues, Alpha alpha, int k_max,
                               double tol, double warn_tol) {
    SpectrumReport rep;
    rep.eigenvalues = eigenvalues;
    rep.tol = tol;
    rep.warn_tol = warn_tol;
    rep.gammas.reserve(eigenvalues.size());
    for (double l : eigenvalues) rep.gammas.push_back(gamma_inverse(l, alpha, 1e-13));

    const int n = static_cast<int>(eigenvalues.size());
    const double a = alpha.value();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double diff = rep.gammas[static_cast<size_t>(j)] - rep.gammas[static_cast<size_t>(i)];
            if (diff < 0.5 * a) continue;  // alpha N starts at alpha
            for (int k = 1; k <= k_max; ++k) {
                const double mis = std::abs(diff - a * k);
                if (mis <= tol)
                    rep.violations.push_back({i, j, k, mis});
                else if (mis <= warn_tol)
                    rep.warnings.push_back({i, j, k, mis});
                if (a * k > diff + 1.0) break;
            }
        }
    }
    return rep;
}

Matrix FrobeniusSolution::evaluate(double t) const {
    if (t <= 0.0) throw DomainError("FrobeniusSolution::evaluate: t must be positive");
    const int n = static_cast<int>(exponents.size());
    const double x = std::pow(t, alpha.value());
    Matrix acc = Matrix::Zero(n, n);
    for (int nu = static_cast<int>(sigma_mats.size()) - 1; nu >= 0; --nu)
        acc = acc * x + sigma_mats[static_cast<size_t>(nu)];
    Vector diag(n);
    for (int j = 0; j < n; ++j) diag(j) = std::pow(t, exponents[static_cast<size_t>(j)]);
    return acc * diag.asDiagonal();
}

FrobeniusSolution frobenius_solve(const MatrixCoefficientSeries& A, int truncation, bool caputo) {
    const int n = A.dim();
    const Matrix& A0 = A.mat(0);
    const double scale = std::max(1.0, op_norm(A0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && std::abs(A0(i, j)) > 1e-14 * scale)
                throw PreconditionError("frobenius_solve: A_0 must be diagonal "
                                        "(diagonalize Hermitian input first)");
            if (i == j && std::abs(A0(i, j).imag()) > 1e-14 * scale)
                throw PreconditionError("frobenius_solve: A_0 diagonal must be real");
        }

    std::vector<double> eigs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eigs[static_cast<size_t>(i)] = A0(i, i).real();
    if (caputo) {
        const double threshold = std::exp(-log_gamma_pos(1.0 - A.alpha().value()));
        for (double l : eigs)
            if (l < threshold - 1e-12)
                throw PreconditionError(
                    "frobenius_solve: Caputo variant needs every eigenvalue >= 1/Gamma(1-alpha)");
    }

    FrobeniusSolution sol{A.alpha(), {}, {}, 0.0, spectrum_report(eigs, A.alpha(), truncation), false};
    if (!sol.spectrum.good()) {
        const auto& v = sol.spectrum.violations.front();
        std::ostringstream os;
        os << "frobenius_solve: spectral collision gamma(l_" << v.j << ") - gamma(l_" << v.i
           << ") = alpha*" << v.k << " (mismatch " << v.mismatch << ")";
        throw SpectralCollisionError(os.str(), v.i, v.j, v.k);
    }
    sol.exponents = sol.spectrum.gammas;
    sol.repeated_exponents = false;
    for (size_t i = 0; i < sol.exponents.size(); ++i)
        for (size_t j = i + 1; j < sol.exponents.size(); ++j)
            if (std::abs(sol.exponents[i] - sol.exponents[j]) <= sol.spectrum.tol)
                sol.repeated_exponents = true;

    sol.sigma_mats.reserve(static_cast<size_t>(truncation) + 1);
    sol.sigma_mats.push_back(Matrix::Identity(n, n));
    const double a = A.alpha().value();
    for (int k = 1; k <= truncation; ++k) {
        Matrix b = Matrix::Zero(n, n);
        for (int l = std::max(0, k - A.degree()); l <= k - 1; ++l)
            b += A.mat(k - l) * sol.sigma_mats[static_cast<size_t>(l)];
        Matrix sigma(n, n);
        for (int j = 0; j < n; ++j) {
            const double rkj = rho(sol.exponents[static_cast<size_t>(j)] + a * k, A.alpha());
            for (int i = 0; i < n; ++i) {
                const double den = rkj - eigs[static_cast<size_t>(i)];
                if (std::abs(den) < 1e-9 * std::max(1.0, std::abs(rkj))) {
                    std::ostringstream os;
                    os << "frobenius_solve: denominator collapse at (i,j,k) = (" << i << "," << j
                       << "," << k << ")";
                    throw SpectralCollisionError(os.str(), i, j, k);
                }
                sigma(i, j) = b(i, j) / den;
            }
        }
        sol.sigma_mats.push_back(std::move(sigma));
    }

    // root-test radius estimate over the tail half of the computed sigmas
    double lim = 0.0;
    for (int k = std::max(1, truncation / 2); k <= truncation; ++k) {
        const double nk = op_norm(sol.sigma_mats[static_cast<size_t>(k)]);
        if (nk > 0.0) lim = std::max(lim, std::pow(nk, 1.0 / static_cast<double>(k)));
    }
    sol.radius_estimate = lim > 0.0 ? 1.0 / lim : std::numeric_limits<double>::infinity();
    return sol;
}

double substitution_residual(const FrobeniusSolution& sol, const MatrixCoefficientSeries& A) {
    const int n = A.dim();
    const double a = A.alpha().value();
    double worst = 0.0;
    for (int nu = 0; nu < static_cast<int>(sol.sigma_mats.size()); ++nu) {
        // left side: sigma_nu R_nu (column j scaled by rho(gamma_j + alpha nu))
        Matrix lhs = sol.sigma_mats[static_cast<size_t>(nu)];
        for (int j = 0; j < n; ++j)
            lhs.col(j) *= rho(sol.exponents[static_cast<size_t>(j)] + a * nu, A.alpha());
        Matrix rhs = Matrix::Zero(n, n);
        for (int m = 0; m <= std::min(nu, A.degree()); ++m)
            rhs += A.mat(m) * sol.sigma_mats[static_cast<size_t>(nu - m)];
        const double scale = std::max({1.0, op_norm(lhs), op_norm(rhs)});
        worst = std::max(worst, op_norm(lhs - rhs) / scale);
    }
    return worst;
}

std::vector<double> hermitian_eigenvalues(const Matrix& A0, double tol) {
    if ((A0 - A0.adjoint()).norm() > tol * std::max(1.0, A0.norm()))
        throw PreconditionError("hermitian_eigenvalues: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(A0);
    std::vector<double> out(static_cast<size_t>(A0.rows()));
    for (int i = 0; i < A0.rows(); ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return out;
}

}  // namespace fracseries::regular
