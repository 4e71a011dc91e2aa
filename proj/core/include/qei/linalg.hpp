// linalg.hpp — Hermitian eigendecomposition, matrix functions, support
// projections, and the Hilbert-Schmidt inner product
#pragma once

#include "qei/errors.hpp"
#include "qei/types.hpp"

#include <functional>
#include <string>

namespace qei {

// Dense complex square matrix verified Hermitian on construction.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix m, double hermit_tol = tol::hermit);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }

private:
    Matrix mat_;
};

// Eigenvalues ascending; eigenvectors are the matching columns of a unitary.
struct Spectrum {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

// Hermitian, positive semi-definite, unit trace (all within tolerance).
class DensityOperator {
public:
    explicit DensityOperator(Matrix m, double psd_tol = tol::psd,
                             double trace_tol = tol::trace);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }
    const HermitianOperator& hermitian() const { return herm_; }

    double min_eigenvalue() const { return min_eig_; }
    bool strictly_positive(double pos_tol = tol::pos) const { return min_eig_ > pos_tol; }

private:
    HermitianOperator herm_;
    Matrix mat_;
    double min_eig_;
};

Spectrum eig_hermitian(const HermitianOperator& m, double eig_tol = tol::eig);

// What to do with eigenvalues inside the kernel band
// [-psd_tol, support_cutoff * lambda_max] before applying f.
struct KernelPolicy {
    enum class Kind { Error, MapZeroToZero, MapZeroTo };
    Kind kind = Kind::Error;
    double value = 0.0;

    static KernelPolicy error() { return {Kind::Error, 0.0}; }
    static KernelPolicy zero_to_zero() { return {Kind::MapZeroToZero, 0.0}; }
    static KernelPolicy zero_to(double v) { return {Kind::MapZeroTo, v}; }
};

// U f(Lambda) U^dag. Throws DomainError if f evaluates non-finite on a
// retained eigenvalue.
HermitianOperator matrix_function(const HermitianOperator& m,
                                  const std::function<double(double)>& f,
                                  KernelPolicy policy = KernelPolicy::error(),
                                  double cutoff_scale = -1.0);

// Named wrappers used throughout. matrix_log0 applies the 0*log0 = 0
// convention (kernel eigenvalues contribute zero).
HermitianOperator matrix_exp(const HermitianOperator& m);
HermitianOperator matrix_log(const HermitianOperator& m);   // errors on kernel
HermitianOperator matrix_log0(const HermitianOperator& m);  // kernel -> 0
HermitianOperator matrix_sqrt(const HermitianOperator& m);  // kernel -> 0

// rho^{it} for strictly positive rho; unitary result.
Matrix imaginary_power(const DensityOperator& rho, double t, double pos_tol = tol::pos);

// Projection onto eigenspaces with lambda > cutoff * lambda_max.
// Negative cutoff selects the default dim * 1e-12.
HermitianOperator support_projection(const HermitianOperator& m, double cutoff = -1.0);

// Tr A^dag B.
Complex hs_inner(const Matrix& a, const Matrix& b);

} // namespace qei
