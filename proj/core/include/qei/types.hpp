// types.hpp — matrix aliases and the library-wide tolerance set
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace qei {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {

// Relative Frobenius bound for accepting a matrix as Hermitian.
inline constexpr double hermit = 1e-12;
// Eigendecomposition residual bound (reconstruction and unitarity).
inline constexpr double eig = 1e-10;
// Eigenvalues of a density may dip this far below zero.
inline constexpr double psd = 1e-10;
// |Tr rho - 1| bound for densities.
inline constexpr double trace = 1e-10;
// Strict-positivity threshold: min eigenvalue must exceed this.
inline constexpr double pos = 1e-10;
// Trace-preservation bound for Kraus sets.
inline constexpr double tp = 1e-10;
// Residual threshold for equality-condition classification.
inline constexpr double eq = 1e-8;
// Looser threshold used when flagging an equality case of an inequality.
inline constexpr double equality_flag = 1e-8;

// Support cutoff: eigenvalues at or below cutoff(dim)*lambda_max count as
// kernel. Single zero-threshold for the whole library.
inline double support_cutoff(int dim) { return static_cast<double>(dim) * 1e-12; }

// Default verifier tolerance on inequality gaps; grows with dimension
// past 16 to absorb ulp accumulation.
inline double default_gap(int total_dim) {
    double base = 1e-9;
    return total_dim <= 16 ? base : base * (static_cast<double>(total_dim) / 16.0);
}

} // namespace tol

inline double frobenius(const Matrix& m) { return m.norm(); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

} // namespace qei
