// equality.hpp — residuals for the equality conditions of the entropy
// inequalities, plus constructive generators of exact-equality instances
#pragma once

#include "qei/channels.hpp"

#include <map>
#include <string>

namespace qei {

struct ResidualReport {
    std::string condition_name;
    double residual = 0.0;
    bool satisfied = false;
    double eq_tol = tol::eq;
    std::map<std::string, double> components;
};

ResidualReport make_residual_report(std::string name, double residual, double eq_tol,
                                    std::map<std::string, double> components = {});

// One (weight, rho, gamma) term of a joint-convexity mixture.
struct WeightedPair {
    double weight;
    DensityOperator rho;
    DensityOperator gamma;
};

// || log rho_123 - log rho_12 + log rho_2 - log rho_23 ||_F with reductions
// embedded by identity factors. Requires a strictly positive state.
ResidualReport ssa_equality_residual(const MultipartiteState& s, double pos_tol = tol::pos);

const std::vector<double>& default_petz_grid();

// max_t || rho_12^{it} rho_2^{-it} - rho_123^{it} rho_23^{-it} ||_F over the grid.
ResidualReport petz_residual(const MultipartiteState& s,
                             const std::vector<double>& t_grid = default_petz_grid(),
                             double pos_tol = tol::pos);

// Frobenius norm of the central t-difference of the Petz identity at t = 0;
// reproduces the SSA equality residual up to O(t_step^2).
double petz_derivative_norm(const MultipartiteState& s, double t_step = 1e-4,
                            double pos_tol = tol::pos);

// || log rho_12 - log gamma_12 - (log rho_2 - log gamma_2) ||_F.
ResidualReport mpt_equality_residual(const MultipartiteState& rho12,
                                     const MultipartiteState& gamma12,
                                     double pos_tol = tol::pos);

// max_k || (log rho - log gamma) - (log rho^k - log gamma^k) ||_F.
ResidualReport jc_equality_residual(const std::vector<WeightedPair>& components,
                                    double pos_tol = tol::pos);

// || (log rho - log gamma) - Phi^hat[log Phi(rho) - log Phi(gamma)] ||_F.
ResidualReport mono_equality_residual(const KrausChannel& phi, const DensityOperator& rho,
                                      const DensityOperator& gamma, double pos_tol = tol::pos);

// Two necessary conditions for monotonicity equality: the dilation projector
// V V^dag commutes with log Phi(rho) - log Phi(gamma), and
// Phi(log rho - log gamma) = Phi(I) [log Phi(rho) - log Phi(gamma)].
ResidualReport vv_commutation_residual(const KrausChannel& phi, const DensityOperator& rho,
                                       const DensityOperator& gamma,
                                       double pos_tol = tol::pos);

// Diagonal state of a classical joint distribution p(a,b,c) required to
// satisfy the Markov property p(c|a,b) = p(c|b).
MultipartiteState make_markov_state(const std::vector<double>& joint, const SystemShape& shape,
                                    double markov_tol = 1e-10);

// p(a) p(b|a) p(c|b) with strictly positive rows; Markov by construction.
std::vector<double> random_markov_distribution(const SystemShape& shape, std::uint64_t seed);

// rho_a on factors {1,2'} times rho_b on {2'',3}, regrouped to [d1, d2'*d2'', d3].
MultipartiteState make_product_split_state(const MultipartiteState& rho_a,
                                           const MultipartiteState& rho_b,
                                           double pos_tol = tol::pos);

} // namespace qei
