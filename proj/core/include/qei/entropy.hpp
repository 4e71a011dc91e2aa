// entropy.hpp — entropy functionals in nats; Infinite is an out-of-band
// nullopt so callers must branch rather than let inf propagate
#pragma once

#include "qei/tensor.hpp"

#include <optional>
#include <vector>

namespace qei {

class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

// S(rho) = -Tr rho log rho; kernel eigenvalues contribute zero.
double von_neumann_entropy(const DensityOperator& rho);

// Entropy of the eigenvalue list of any PSD operator (0 log 0 = 0).
double entropy_of_spectrum(const RealVector& eigenvalues);

// Tr rho (log rho - log gamma); nullopt when supp(gamma) does not cover
// supp(rho) within tolerance.
std::optional<double> relative_entropy(const DensityOperator& rho, const DensityOperator& gamma);

// Same functional on arbitrary PSD pairs, Tr A = Tr B not required.
std::optional<double> relative_entropy_psd(const HermitianOperator& a, const HermitianOperator& b);

// Tr A (log A - log B) - Tr(A - B) >= 0 for PSD A, B; nullopt on support violation.
std::optional<double> klein_gap(const HermitianOperator& a, const HermitianOperator& b);

double shannon_entropy(const ProbabilityVector& p);

std::optional<double> classical_relative_entropy(const ProbabilityVector& p,
                                                 const ProbabilityVector& q);

// S(rho_1) - S(rho_12) for a bipartite state.
double conditional_entropy(const MultipartiteState& s);

} // namespace qei
