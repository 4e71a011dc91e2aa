// channels.hpp — completely positive trace-preserving maps, their adjoints
// and Stinespring dilations, POVMs, ensembles, and seeded random generators
#pragma once

#include "qei/entropy.hpp"
#include "qei/rng.hpp"

#include <vector>

namespace qei {

// Phi(rho) = sum_k F_k rho F_k^dag with sum_k F_k^dag F_k = I.
class KrausChannel {
public:
    KrausChannel(std::vector<Matrix> kraus_ops, int in_dim, int out_dim,
                 double tp_tol = tol::tp);

    const std::vector<Matrix>& kraus() const { return kraus_; }
    int in_dim() const { return in_; }
    int out_dim() const { return out_; }
    int kraus_count() const { return static_cast<int>(kraus_.size()); }

private:
    std::vector<Matrix> kraus_;
    int in_;
    int out_;
};

// Isometry into a dilated space env (x) out. The channel dilation stacks the
// Kraus blocks so the environment factor comes first:
// V rho V^dag = sum_{kl} |k><l| (x) F_k rho F_l^dag. The POVM lift puts the
// outcome register second instead, so the factor order is a parameter.
class StinespringIsometry {
public:
    StinespringIsometry(Matrix v, int env_dim, int out_dim, bool env_first = true);

    const Matrix& v() const { return v_; }
    int env_dim() const { return env_; }
    int out_dim() const { return out_; }
    int in_dim() const { return static_cast<int>(v_.cols()); }
    SystemShape dilated_shape() const {
        return SystemShape(env_first_ ? std::vector<int>{env_, out_}
                                      : std::vector<int>{out_, env_});
    }
    int env_factor() const { return env_first_ ? 0 : 1; }
    int system_factor() const { return env_first_ ? 1 : 0; }

private:
    Matrix v_;
    int env_;
    int out_;
    bool env_first_;
};

// Positive elements summing to the identity.
class Povm {
public:
    explicit Povm(std::vector<HermitianOperator> elements, double sum_tol = 1e-10);

    const std::vector<HermitianOperator>& elements() const { return elements_; }
    int outcomes() const { return static_cast<int>(elements_.size()); }
    int dim() const { return elements_.front().dim(); }

private:
    std::vector<HermitianOperator> elements_;
};

// Weighted states {pi_j, rho_j}.
class Ensemble {
public:
    Ensemble(ProbabilityVector weights, std::vector<DensityOperator> states);

    const ProbabilityVector& weights() const { return weights_; }
    const std::vector<DensityOperator>& states() const { return states_; }
    int size() const { return static_cast<int>(states_.size()); }
    int dim() const { return states_.front().dim(); }

    DensityOperator average() const;

private:
    ProbabilityVector weights_;
    std::vector<DensityOperator> states_;
};

DensityOperator apply(const KrausChannel& phi, const DensityOperator& rho);

// Linear extension of Phi to arbitrary operators (no density validation).
Matrix apply_matrix(const KrausChannel& phi, const Matrix& x);

// Phi^hat(X) = sum_k F_k^dag X F_k; satisfies the Hilbert-Schmidt duality
// <Phi(A), B> = <A, Phi^hat(B)> and is unital when Phi is trace-preserving.
HermitianOperator adjoint_apply(const KrausChannel& phi, const HermitianOperator& x);
Matrix adjoint_apply_matrix(const KrausChannel& phi, const Matrix& x);

StinespringIsometry stinespring(const KrausChannel& phi);

// Composition (phi after psi) with Kraus products.
KrausChannel compose(const KrausChannel& phi, const KrausChannel& psi);

// Q-C channel of a POVM: A -> sum_b |b><b| Tr(A E_b).
KrausChannel qc_channel(const Povm& m);

// Naimark lift: V = sum_b sqrt(E_b) (x) |b> on [system, outcome] ordering,
// with projectors F_b = I (x) |b><b| reproducing the POVM statistics.
struct ProjectiveLift {
    StinespringIsometry isometry;
    Povm projectors;
};
ProjectiveLift povm_to_projective(const Povm& m);

// Partial trace over the complement of `keep` realized as a Kraus channel.
KrausChannel partial_trace_channel(const SystemShape& shape, const std::vector<int>& keep);

KrausChannel unitary_channel(const Matrix& u);

DensityOperator random_density(int dim, std::uint64_t seed);
KrausChannel random_channel(int in_dim, int out_dim, int kraus_count, std::uint64_t seed);
Povm random_povm(int dim, int n_outcomes, std::uint64_t seed);
Ensemble random_ensemble(int dim, int n_states, std::uint64_t seed);

} // namespace qei
