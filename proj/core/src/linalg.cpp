#include "qei/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace qei {

HermitianOperator::HermitianOperator(Matrix m, double hermit_tol) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols())
        throw NonHermitian("matrix is not square: " + std::to_string(mat_.rows()) + "x" +
                           std::to_string(mat_.cols()));
    if (!mat_.allFinite()) throw NonHermitian("matrix has non-finite entries");
    double scale = frobenius(mat_);
    double dev = frobenius(mat_ - mat_.adjoint().eval());
    if (dev > hermit_tol * std::max(scale, 1.0))
        throw NonHermitian("Hermiticity residual " + std::to_string(dev) +
                           " exceeds tolerance");
}

DensityOperator::DensityOperator(Matrix m, double psd_tol, double trace_tol)
    : herm_(std::move(m)), mat_(herm_.mat()) {
    double tr_dev = std::abs(mat_.trace() - Complex(1.0, 0.0));
    if (tr_dev > trace_tol)
        throw InvariantViolation("density trace deviates from 1 by " + std::to_string(tr_dev));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NoConvergence("eigenvalue iteration failed");
    min_eig_ = solver.eigenvalues().minCoeff();
    if (min_eig_ < -psd_tol)
        throw NotPositive("density has eigenvalue " + std::to_string(min_eig_));
}

Spectrum eig_hermitian(const HermitianOperator& m, double eig_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat());
    if (solver.info() != Eigen::Success) throw NoConvergence("eigenvalue iteration failed");
    Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
    double scale = std::max(frobenius(m.mat()), 1.0);
    Matrix rebuilt = s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.adjoint();
    if (frobenius(rebuilt - m.mat()) > eig_tol * scale)
        throw NoConvergence("eigendecomposition reconstruction residual too large");
    int d = m.dim();
    if (frobenius(s.eigenvectors.adjoint() * s.eigenvectors - Matrix::Identity(d, d)) > eig_tol)
        throw NoConvergence("eigenvector matrix not unitary within tolerance");
    return s;
}

HermitianOperator matrix_function(const HermitianOperator& m,
                                  const std::function<double(double)>& f,
                                  KernelPolicy policy, double cutoff_scale) {
    Spectrum s = eig_hermitian(m);
    int d = m.dim();
    if (cutoff_scale < 0) cutoff_scale = tol::support_cutoff(d);
    double lambda_max = s.eigenvalues.cwiseAbs().maxCoeff();
    double cut = cutoff_scale * lambda_max;

    RealVector mapped(d);
    for (int i = 0; i < d; ++i) {
        double lam = s.eigenvalues[i];
        bool in_kernel_band = lam <= cut && lam >= -tol::psd;
        if (policy.kind != KernelPolicy::Kind::Error && in_kernel_band) {
            mapped[i] = policy.kind == KernelPolicy::Kind::MapZeroToZero ? 0.0 : policy.value;
            continue;
        }
        double v = f(lam);
        if (!std::isfinite(v))
            throw DomainError("scalar function not finite at eigenvalue " + std::to_string(lam));
        mapped[i] = v;
    }
    Matrix out = s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
    // symmetrize away rounding before revalidation
    return HermitianOperator(0.5 * (out + out.adjoint().eval()));
}

HermitianOperator matrix_exp(const HermitianOperator& m) {
    return matrix_function(m, [](double x) { return std::exp(x); });
}

HermitianOperator matrix_log(const HermitianOperator& m) {
    return matrix_function(m, [](double x) { return std::log(x); });
}

HermitianOperator matrix_log0(const HermitianOperator& m) {
    return matrix_function(m, [](double x) { return std::log(x); },
                           KernelPolicy::zero_to_zero());
}

HermitianOperator matrix_sqrt(const HermitianOperator& m) {
    return matrix_function(m, [](double x) { return std::sqrt(x); },
                           KernelPolicy::zero_to_zero());
}

Matrix imaginary_power(const DensityOperator& rho, double t, double pos_tol) {
    if (!rho.strictly_positive(pos_tol))
        throw SingularState("rho^{it} requires a strictly positive state (min eigenvalue " +
                            std::to_string(rho.min_eigenvalue()) + ")");
    Spectrum s = eig_hermitian(rho.hermitian());
    int d = rho.dim();
    Vector phases(d);
    for (int i = 0; i < d; ++i) {
        double arg = t * std::log(s.eigenvalues[i]);
        phases[i] = Complex(std::cos(arg), std::sin(arg));
    }
    return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

HermitianOperator support_projection(const HermitianOperator& m, double cutoff) {
    Spectrum s = eig_hermitian(m);
    int d = m.dim();
    if (cutoff < 0) cutoff = tol::support_cutoff(d);
    double lambda_max = s.eigenvalues.cwiseAbs().maxCoeff();
    double cut = cutoff * lambda_max;
    Matrix p = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        if (s.eigenvalues[i] > cut) p += s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint();
    return HermitianOperator(0.5 * (p + p.adjoint().eval()));
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("hs_inner shapes differ");
    return (a.adjoint() * b).trace();
}

} // namespace qei
