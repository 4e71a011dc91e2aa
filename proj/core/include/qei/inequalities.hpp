// inequalities.hpp — certified verifiers: each inequality returns a
// VerdictReport with the gap in <=-form (gap = rhs - lhs)
#pragma once

#include "qei/equality.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qei {

struct VerdictReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0; // rhs - lhs
    bool holds = false;
    double tolerance = 0.0;
    std::map<std::string, double> residuals;
    std::optional<bool> equality; // set by checks that classify equality cases
    bool lhs_infinite = false;
    bool rhs_infinite = false;
    std::vector<int> dims;
    std::optional<std::uint64_t> seed; // filled in by batch drivers
};

// S(rho_12) <= S(rho_1) + S(rho_2); flags equality when rho_12 is a product.
VerdictReport check_subadditivity(const MultipartiteState& s, double tolerance = -1.0);

// |S(rho_1) - S(rho_2)| <= S(rho_12).
VerdictReport check_triangle(const MultipartiteState& s, double tolerance = -1.0);

// S(rho_123) <= S(rho_12) + S(rho_23).
VerdictReport check_araki_lieb(const MultipartiteState& s, double tolerance = -1.0);

// S(rho_123) + S(rho_2) <= S(rho_12) + S(rho_23); includes the quantum Markov
// residual when the state is strictly positive.
VerdictReport check_ssa(const MultipartiteState& s, double tolerance = -1.0);

// Purified form on a state labeled {1,2,4}: S(rho_4) + S(rho_2) <= S(rho_12) + S(rho_14).
VerdictReport check_ssa_purified(const MultipartiteState& s, double tolerance = -1.0);

// H(rho_2, gamma_2) <= H(rho_12, gamma_12) under the keep-{2} partial trace.
VerdictReport check_mpt(const MultipartiteState& rho12, const MultipartiteState& gamma12,
                        double tolerance = -1.0);

// H(sum_k w_k rho_k, sum_k w_k gamma_k) <= sum_k w_k H(rho_k, gamma_k).
VerdictReport check_joint_convexity(const std::vector<WeightedPair>& components,
                                    double tolerance = -1.0);

// H(Phi(rho), Phi(gamma)) <= H(rho, gamma).
VerdictReport check_monotonicity(const KrausChannel& phi, const DensityOperator& rho,
                                 const DensityOperator& gamma, double tolerance = -1.0);

// Tr(A - B) <= Tr A (log A - log B) for PSD pairs; vacuous (rhs infinite)
// when supp(B) does not cover supp(A).
VerdictReport check_klein(const HermitianOperator& a, const HermitianOperator& b,
                          double tolerance = -1.0);

// Tr e^{A+B} <= Tr e^A e^B; reports the commutator norm and equality flag.
VerdictReport golden_thompson_gap(const HermitianOperator& a, const HermitianOperator& b,
                                  double tolerance = -1.0);

// Tr e^{log R - log S + log T} <= sum_{ij} R'_ji T'_ij k(s_i, s_j) in S's
// eigenbasis, cross-checked by adaptive quadrature of the resolvent integral.
VerdictReport lieb_triple_gap(const HermitianOperator& r, const HermitianOperator& s,
                              const HermitianOperator& t, double tolerance = -1.0,
                              bool with_quadrature = true, double pos_tol = tol::pos);

// Midpoint concavity of F(A) = Tr e^{K + log A}.
VerdictReport exp_log_concavity_probe(const HermitianOperator& k, const HermitianOperator& a1,
                                      const HermitianOperator& a2, double lambda,
                                      double tolerance = -1.0);

// Joint concavity of (A,B) -> Tr A^s K^dag B^{1-s} K; also reports the value.
VerdictReport wyd_concavity_probe(const HermitianOperator& a1, const HermitianOperator& b1,
                                  const HermitianOperator& a2, const HermitianOperator& b2,
                                  const Matrix& k, double s, double lambda,
                                  double tolerance = -1.0);

const std::vector<double>& default_quotient_steps();

// Difference quotients of F at A toward B shrink monotonely to a limit >= F(B).
VerdictReport homogeneous_directional_probe(const HermitianOperator& k,
                                            const HermitianOperator& a,
                                            const HermitianOperator& b,
                                            const std::vector<double>& x_list =
                                                default_quotient_steps(),
                                            double tolerance = -1.0);

const std::vector<Complex>& default_herglotz_grid();

// Im Tr e^{K + log(zA + B)} > 0 on upper-half-plane samples; defective or
// branch-cut samples are skipped and counted, never silently passed.
VerdictReport epstein_herglotz_probe(const HermitianOperator& k, const HermitianOperator& a,
                                     const HermitianOperator& b,
                                     const std::vector<Complex>& z_samples =
                                         default_herglotz_grid(),
                                     double tolerance = 1e-10);

// Central second difference of x -> Tr e^{K + log(A + xB)} at 0 is <= tol.
VerdictReport epstein_second_derivative_probe(const HermitianOperator& k,
                                              const HermitianOperator& a,
                                              const HermitianOperator& b,
                                              double tolerance = 1e-6);

// F(A) = Tr e^{K + log A} for strictly positive A.
double trace_exp_klog(const HermitianOperator& k, const HermitianOperator& a);

// Divided-difference kernel k(x,y) = (log x - log y)/(x - y), k(x,x) = 1/x.
double divided_difference_log(double x, double y);

// Closed form of log(S + xT) - log S via the two-sided divided-difference
// pairing of the resolvent integral.
Matrix log_increment_closed_form(const HermitianOperator& s, const HermitianOperator& t,
                                 double x);

// Diagonalization-based functions of general complex matrices; throws
// DefectiveMatrix when the eigenvector matrix is ill-conditioned.
Matrix complex_matrix_log(const Matrix& m, double cond_limit = 1e8);
Matrix complex_matrix_exp(const Matrix& m, double cond_limit = 1e8);
bool spectrum_avoids_negative_axis(const Matrix& m);

} // namespace qei
