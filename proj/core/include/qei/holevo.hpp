// holevo.hpp — accessible information, the Holevo bound, Hall's dual bound,
// and the commuting-ensemble equality machinery
#pragma once

#include "qei/inequalities.hpp"

namespace qei {

struct InfoReport {
    double accessible_info = 0.0;
    double chi = 0.0;
    double hall_bound = 0.0;
    std::map<std::string, double> gaps;
    std::map<std::string, double> equality_residuals;
};

struct CommutationReport {
    bool commutes = false;
    double max_commutator_norm = 0.0;
};

// chi = S(rho_bar) - sum_j pi_j S(rho_j); the identity
// chi = sum_j pi_j H(rho_j, rho_bar) is checked internally.
double holevo_chi(const Ensemble& e);

// Classical mutual information of the measurement outcome distributions:
// S[Tr rho_bar E_b] - sum_j pi_j S[Tr rho_j E_b].
double accessible_info(const Ensemble& e, const Povm& m);

// Residual of log rho_j - log rho_bar = sum_b E_b log(p_jb / q_b), evaluated
// after conjugating both sides by the support projection of rho_j; includes
// the per-outcome trace condition and the span-projection diagnostic.
ResidualReport holevo_equality_residual(const Ensemble& e, const Povm& m);

CommutationReport commutes(const Ensemble& e);

// Rank-one projectors of a common eigenbasis; attains chi for commuting
// ensembles. Random-combination diagonalization with a recursive
// common-eigenspace fallback.
Povm spectral_measurement_for_commuting(const Ensemble& e);

// I <= S(rho) - sum_b tau_b S(sqrt(rho) E_b sqrt(rho) / tau_b) with
// tau_b = Tr E_b rho; rho must be the ensemble average.
InfoReport hall_bound(const DensityOperator& rho, const Povm& m, const Ensemble& e);

// Per-state monotonicity under the Q-C channel of the POVM; the weighted
// sums reconstruct (accessible_info, chi).
VerdictReport qc_monotonicity_check(const Ensemble& e, const Povm& m);

// Diagnostic form of the equality condition: rho_bar^{it} D^{-it} =
// rho_j^{it} D_j^{-it} with D the diagonal part in the measurement basis.
ResidualReport petz_holevo_residual(const Ensemble& e, const Matrix& basis,
                                    const std::vector<double>& t_grid = default_petz_grid(),
                                    double pos_tol = tol::pos);

// Everything above in one report (used by the CLI front end).
InfoReport info_report(const Ensemble& e, const Povm& m);

} // namespace qei
