#include "qei/entropy.hpp"

#include <cmath>

namespace qei {

namespace {

constexpr double kZeroProb = 1e-14;
// Probability mass allowed on the kernel of the second argument before the
// relative entropy is declared infinite.
constexpr double kKernelMass = 1e-10;

// Sum of p_i log(lam_i) over the support of lam, with p_i the diagonal of
// rho in lam's eigenbasis; also reports the mass rho places on the kernel.
struct LogPairing {
    double value;
    double kernel_mass;
};

LogPairing pair_log(const Matrix& rho, const Spectrum& s, double cut) {
    LogPairing out{0.0, 0.0};
    int d = static_cast<int>(s.eigenvalues.size());
    for (int i = 0; i < d; ++i) {
        double p = (s.eigenvectors.col(i).adjoint() * rho * s.eigenvectors.col(i))(0, 0).real();
        if (s.eigenvalues[i] > cut)
            out.value += p * std::log(s.eigenvalues[i]);
        else
            out.kernel_mass += p;
    }
    return out;
}

double support_cut(const Spectrum& s) {
    int d = static_cast<int>(s.eigenvalues.size());
    double lam_max = s.eigenvalues.cwiseAbs().maxCoeff();
    return tol::support_cutoff(d) * lam_max;
}

std::optional<double> relent_impl(const Matrix& a, const Matrix& b) {
    Spectrum sa = eig_hermitian(HermitianOperator(a));
    Spectrum sb = eig_hermitian(HermitianOperator(b));
    double cut_a = support_cut(sa);
    double cut_b = support_cut(sb);

    double tr_a_log_a = 0.0;
    for (int i = 0; i < sa.eigenvalues.size(); ++i)
        if (sa.eigenvalues[i] > cut_a)
            tr_a_log_a += sa.eigenvalues[i] * std::log(sa.eigenvalues[i]);

    LogPairing cross = pair_log(a, sb, cut_b);
    if (cross.kernel_mass > kKernelMass) return std::nullopt;
    return tr_a_log_a - cross.value;
}

void require_psd(const HermitianOperator& m, const char* name) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NoConvergence("eigenvalue iteration failed");
    if (solver.eigenvalues().minCoeff() < -tol::psd)
        throw NotPositive(std::string(name) + " has eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()));
}

} // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw LengthMismatch("probability vector is empty");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= -1e-12))
            throw InvariantViolation("negative probability " + std::to_string(p));
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::trace)
        throw InvariantViolation("probabilities sum to " + std::to_string(sum));
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
    double lam_max = eigenvalues.cwiseAbs().maxCoeff();
    double cut = tol::support_cutoff(static_cast<int>(eigenvalues.size())) * lam_max;
    double s = 0.0;
    for (int i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] > cut) s -= eigenvalues[i] * std::log(eigenvalues[i]);
    return s;
}

double von_neumann_entropy(const DensityOperator& rho) {
    Spectrum s = eig_hermitian(rho.hermitian());
    return entropy_of_spectrum(s.eigenvalues);
}

std::optional<double> relative_entropy(const DensityOperator& rho, const DensityOperator& gamma) {
    if (rho.dim() != gamma.dim()) throw DimMismatch("relative_entropy dimension mismatch");
    return relent_impl(rho.mat(), gamma.mat());
}

std::optional<double> relative_entropy_psd(const HermitianOperator& a,
                                           const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw DimMismatch("relative_entropy dimension mismatch");
    require_psd(a, "first argument");
    require_psd(b, "second argument");
    return relent_impl(a.mat(), b.mat());
}

std::optional<double> klein_gap(const HermitianOperator& a, const HermitianOperator& b) {
    auto h = relative_entropy_psd(a, b);
    if (!h) return std::nullopt;
    return *h - (a.mat().trace().real() - b.mat().trace().real());
}

double shannon_entropy(const ProbabilityVector& p) {
    double s = 0.0;
    for (double x : p.probs())
        if (x > kZeroProb) s -= x * std::log(x);
    return s;
}

std::optional<double> classical_relative_entropy(const ProbabilityVector& p,
                                                 const ProbabilityVector& q) {
    if (p.size() != q.size()) throw LengthMismatch("distributions have different lengths");
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= kZeroProb) continue;
        if (q[i] <= kZeroProb) return std::nullopt;
        h += p[i] * std::log(p[i] / q[i]);
    }
    return h;
}

double conditional_entropy(const MultipartiteState& s) {
    if (s.shape().factors() != 2)
        throw ShapeMismatch("conditional entropy needs a bipartite state");
    MultipartiteState first = partial_trace(s, {0});
    return von_neumann_entropy(first.rho()) - von_neumann_entropy(s.rho());
}

} // namespace qei
