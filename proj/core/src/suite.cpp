#include "qei/suite.hpp"

#include "qei/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace qei {

namespace {

using Clock = std::chrono::steady_clock;

struct Gate {
    // Violation gates may be relaxed uniformly from the CLI; equality and
    // residual gates stay pinned.
    double tol_override;
    double operator()(double pinned) const { return std::max(pinned, tol_override); }
};

int scaled(int n, double scale) {
    return std::max(1, static_cast<int>(std::lround(n * scale)));
}

DensityOperator full_rank_density(int dim, std::uint64_t seed) {
    Prng rng(seed);
    Matrix p = random_positive(dim, rng, 0.1);
    p /= p.trace().real();
    return DensityOperator(0.5 * (p + p.adjoint().eval()));
}

MultipartiteState random_tripartite(const SystemShape& shape, std::uint64_t seed) {
    return {random_density(shape.total_dim(), seed), shape};
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

struct Ctx {
    const SuiteConfig& config;
    Gate gate;
    Prng root;
};

// ---- criterion 1: SSA on random states --------------------------------------

CriterionResult criterion_ssa_random(Ctx& ctx) {
    CriterionResult res{1, "ssa-random", false, "", 0.0};
    int n = scaled(1000, ctx.config.scale);
    double tol_gap = ctx.gate(1e-9);
    Prng base = ctx.root.split(1);

    auto start = Clock::now();
    auto gaps = run_batch<double>(n, [&](int i) {
        MultipartiteState s = random_tripartite(SystemShape({2, 2, 2}), base.split(i).seed());
        return check_ssa(s, tol_gap).gap;
    });
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

    double min_gap = *std::min_element(gaps.begin(), gaps.end());
    res.passed = min_gap >= -tol_gap && elapsed < 30.0;
    res.details = std::to_string(n) + " random (2,2,2) states, min gap " + fmt(min_gap) +
                  ", elapsed " + fmt(elapsed) + " s (< 30 s required)";
    return res;
}

// ---- criterion 2: SSA equality sufficiency ----------------------------------

struct EqualityInstance {
    double gap;
    double residual;
};

EqualityInstance markov_instance(std::uint64_t seed) {
    SystemShape shape({2, 3, 2});
    MultipartiteState s = make_markov_state(random_markov_distribution(shape, seed), shape);
    return {check_ssa(s).gap, ssa_equality_residual(s).residual};
}

EqualityInstance product_split_instance(std::uint64_t seed) {
    Prng rng(seed);
    MultipartiteState a(full_rank_density(4, rng.split(0).seed()), SystemShape({2, 2}));
    MultipartiteState b(full_rank_density(4, rng.split(1).seed()), SystemShape({2, 2}));
    MultipartiteState s = make_product_split_state(a, b);
    return {check_ssa(s).gap, ssa_equality_residual(s).residual};
}

CriterionResult criterion_ssa_equality_sufficiency(Ctx& ctx) {
    CriterionResult res{2, "ssa-equality-sufficiency", false, "", 0.0};
    int n = scaled(100, ctx.config.scale);
    Prng base = ctx.root.split(2);

    double worst_gap = 0.0, worst_residual = 0.0;
    auto both = run_batch<EqualityInstance>(2 * n, [&](int i) {
        std::uint64_t seed = base.split(i).seed();
        return i < n ? markov_instance(seed) : product_split_instance(seed);
    });
    for (const auto& inst : both) {
        worst_gap = std::max(worst_gap, std::abs(inst.gap));
        worst_residual = std::max(worst_residual, inst.residual);
    }
    res.passed = worst_gap <= 1e-8 && worst_residual <= 1e-9;
    res.details = std::to_string(n) + " Markov (2,3,2) + " + std::to_string(n) +
                  " product-split states, worst |gap| " + fmt(worst_gap) + " (<= 1e-8), worst residual " +
                  fmt(worst_residual) + " (<= 1e-9)";
    return res;
}

// ---- criterion 3: sampled necessity ------------------------------------------

CriterionResult criterion_ssa_equality_necessity(Ctx& ctx) {
    CriterionResult res{3, "ssa-equality-necessity", false, "", 0.0};
    int n = scaled(1000, ctx.config.scale);
    Prng base = ctx.root.split(1); // same states as criterion 1

    auto offenders = run_batch<int>(n, [&](int i) {
        MultipartiteState s = random_tripartite(SystemShape({2, 2, 2}), base.split(i).seed());
        VerdictReport v = check_ssa(s);
        if (!s.rho().strictly_positive()) return 0;
        double residual = ssa_equality_residual(s).residual;
        return (v.gap <= 1e-10 && residual > 1e-6) ? 1 : 0;
    });
    int bad = 0;
    for (int x : offenders) bad += x;
    res.passed = bad == 0;
    res.details = std::to_string(bad) + " of " + std::to_string(n) +
                  " random states have gap <= 1e-10 with residual > 1e-6 (0 required)";
    return res;
}

// ---- criterion 4: Petz consistency -------------------------------------------

CriterionResult criterion_petz(Ctx& ctx) {
    CriterionResult res{4, "petz-consistency", false, "", 0.0};
    int n = scaled(100, ctx.config.scale);
    Prng base = ctx.root.split(2); // criterion-2 instances

    struct PetzOut {
        double petz;
        double derivative_dev;
    };
    auto out = run_batch<PetzOut>(2 * n, [&](int i) {
        std::uint64_t seed = base.split(i).seed();
        MultipartiteState s = [&] {
            if (i < static_cast<int>(n)) {
                SystemShape shape({2, 3, 2});
                return make_markov_state(random_markov_distribution(shape, seed), shape);
            }
            Prng rng(seed);
            MultipartiteState a(full_rank_density(4, rng.split(0).seed()), SystemShape({2, 2}));
            MultipartiteState b(full_rank_density(4, rng.split(1).seed()), SystemShape({2, 2}));
            return make_product_split_state(a, b);
        }();
        double petz = petz_residual(s).residual;
        double deriv = petz_derivative_norm(s);
        double ssa_res = ssa_equality_residual(s).residual;
        return PetzOut{petz, std::abs(deriv - ssa_res)};
    });

    double worst_petz = 0.0, worst_dev = 0.0;
    for (const auto& o : out) {
        worst_petz = std::max(worst_petz, o.petz);
        worst_dev = std::max(worst_dev, o.derivative_dev);
    }
    res.passed = worst_petz <= 1e-8 && worst_dev <= 1e-6;
    res.details = "worst Petz residual " + fmt(worst_petz) +
                  " (<= 1e-8), worst |t-derivative - residual| " + fmt(worst_dev) + " (<= 1e-6)";
    return res;
}

// ---- criterion 5: Lieb triple-matrix inequality -------------------------------

CriterionResult criterion_lieb_triple(Ctx& ctx) {
    CriterionResult res{5, "lieb-triple", false, "", 0.0};
    Prng base = ctx.root.split(5);
    double tol_gap = ctx.gate(1e-9);

    // exact case R = rho1 (x) rho2 (x) I, S = I (x) rho2 (x) I, T = I (x) rho23
    DensityOperator rho1 = full_rank_density(2, base.split(900001).seed());
    DensityOperator rho2 = full_rank_density(2, base.split(900002).seed());
    DensityOperator rho23 = full_rank_density(4, base.split(900003).seed());
    Matrix eye2 = Matrix::Identity(2, 2);
    HermitianOperator r(kron(kron(rho1.mat(), rho2.mat()), eye2));
    HermitianOperator s(kron(kron(eye2, rho2.mat()), eye2));
    HermitianOperator t(kron(eye2, rho23.mat()));
    VerdictReport paper_case = lieb_triple_gap(r, s, t);
    bool exact_ok = std::abs(paper_case.lhs - paper_case.rhs) <= 1e-9 &&
                    std::abs(paper_case.lhs - 1.0) <= 1e-9 &&
                    std::abs(paper_case.rhs - 1.0) <= 1e-9;

    int n = scaled(500, ctx.config.scale);
    struct Out {
        double gap;
        double agreement;
    };
    auto out = run_batch<Out>(n, [&](int i) {
        Prng rng = base.split(i);
        Prng ra = rng.split(0), rb = rng.split(1), rc = rng.split(2);
        HermitianOperator rr(random_positive(3, ra, 0.1));
        HermitianOperator ss(random_positive(3, rb, 0.1));
        HermitianOperator tt(random_positive(3, rc, 0.1));
        VerdictReport v = lieb_triple_gap(rr, ss, tt, tol_gap);
        return Out{v.gap, v.residuals.at("quadrature_agreement")};
    });
    double min_gap = std::numeric_limits<double>::infinity(), worst_agreement = 0.0;
    for (const auto& o : out) {
        min_gap = std::min(min_gap, o.gap);
        worst_agreement = std::max(worst_agreement, o.agreement);
    }

    res.passed = exact_ok && min_gap >= -tol_gap && worst_agreement <= 1e-6;
    res.details = std::string("exact case |lhs-1| ") + fmt(std::abs(paper_case.lhs - 1.0)) +
                  ", |rhs-1| " + fmt(std::abs(paper_case.rhs - 1.0)) + "; " + std::to_string(n) +
                  " random triples: min gap " + fmt(min_gap) + ", worst closed-vs-quadrature " +
                  fmt(worst_agreement) + " (<= 1e-6 rel)";
    return res;
}

// ---- criterion 6: Golden-Thompson ---------------------------------------------

CriterionResult criterion_golden_thompson(Ctx& ctx) {
    CriterionResult res{6, "golden-thompson", false, "", 0.0};
    Prng base = ctx.root.split(6);
    int n_random = scaled(500, ctx.config.scale);
    int n_commuting = scaled(100, ctx.config.scale);
    double tol_gap = ctx.gate(1e-10);

    auto gaps = run_batch<double>(n_random, [&](int i) {
        Prng rng = base.split(i);
        int d = 2 + i % 3;
        HermitianOperator a(random_hermitian(d, rng));
        HermitianOperator b(random_hermitian(d, rng));
        return golden_thompson_gap(a, b).gap;
    });
    double min_gap = *std::min_element(gaps.begin(), gaps.end());

    auto commuting_gaps = run_batch<double>(n_commuting, [&](int i) {
        Prng rng = base.split(100000 + i);
        int d = 2 + i % 3;
        HermitianOperator a(random_hermitian(d, rng));
        Spectrum spec = eig_hermitian(a);
        RealVector other(d);
        for (int k = 0; k < d; ++k) other[k] = rng.gaussian();
        Matrix b = spec.eigenvectors * other.asDiagonal() * spec.eigenvectors.adjoint();
        return std::abs(
            golden_thompson_gap(a, HermitianOperator(0.5 * (b + b.adjoint().eval()))).gap);
    });
    double worst_commuting = *std::max_element(commuting_gaps.begin(), commuting_gaps.end());

    Matrix sx(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    double pauli_gap = golden_thompson_gap(HermitianOperator(sx), HermitianOperator(sz)).gap;
    double pauli_expected = 2.0 * std::pow(std::cosh(1.0), 2) - 2.0 * std::cosh(std::sqrt(2.0));
    bool pauli_ok = std::abs(pauli_gap - pauli_expected) <= 1e-10;

    res.passed = min_gap >= -tol_gap && worst_commuting <= 1e-10 && pauli_ok;
    res.details = std::to_string(n_random) + " random pairs min gap " + fmt(min_gap) + "; " +
                  std::to_string(n_commuting) + " commuting pairs worst |gap| " +
                  fmt(worst_commuting) + "; sigma_x/sigma_z deviation " +
                  fmt(std::abs(pauli_gap - pauli_expected));
    return res;
}

// ---- criterion 7: monotonicity, MPT, joint convexity ---------------------------

CriterionResult criterion_mono_mpt_jc(Ctx& ctx) {
    CriterionResult res{7, "mono-mpt-jc", false, "", 0.0};
    Prng base = ctx.root.split(7);
    int n = scaled(500, ctx.config.scale);
    int n_unitary = scaled(100, ctx.config.scale);
    double tol_gap = ctx.gate(1e-9);

    auto mono_gaps = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(i);
        int d = 2 + i % 2;
        int m = 2 + (i / 2) % 2;
        KrausChannel phi = random_channel(d, d, m, rng.split(0).seed());
        DensityOperator rho = full_rank_density(d, rng.split(1).seed());
        DensityOperator gamma = full_rank_density(d, rng.split(2).seed());
        return check_monotonicity(phi, rho, gamma, tol_gap).gap;
    });
    auto mpt_gaps = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(200000 + i);
        const int shapes[3][2] = {{2, 2}, {2, 3}, {3, 2}};
        SystemShape shape({shapes[i % 3][0], shapes[i % 3][1]});
        MultipartiteState rho(full_rank_density(shape.total_dim(), rng.split(0).seed()), shape);
        MultipartiteState gamma(full_rank_density(shape.total_dim(), rng.split(1).seed()), shape);
        return check_mpt(rho, gamma, tol_gap).gap;
    });
    auto jc_gaps = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(400000 + i);
        int d = 2 + i % 2;
        std::vector<WeightedPair> comps;
        double wsum = 0.0;
        std::vector<double> w(3);
        for (double& x : w) {
            x = -std::log(1.0 - rng.uniform());
            wsum += x;
        }
        for (int k = 0; k < 3; ++k)
            comps.push_back({w[k] / wsum, full_rank_density(d, rng.split(10 + k).seed()),
                             full_rank_density(d, rng.split(20 + k).seed())});
        return check_joint_convexity(comps, tol_gap).gap;
    });

    auto unitary_out = run_batch<std::pair<double, double>>(n_unitary, [&](int i) {
        Prng rng = base.split(600000 + i);
        int d = 2 + i % 3;
        KrausChannel phi = unitary_channel(random_unitary(d, rng));
        DensityOperator rho = full_rank_density(d, rng.split(1).seed());
        DensityOperator gamma = full_rank_density(d, rng.split(2).seed());
        double gap = std::abs(check_monotonicity(phi, rho, gamma).gap);
        double residual = mono_equality_residual(phi, rho, gamma).residual;
        return std::make_pair(gap, residual);
    });

    double min_gap = std::numeric_limits<double>::infinity();
    for (double g : mono_gaps) min_gap = std::min(min_gap, g);
    for (double g : mpt_gaps) min_gap = std::min(min_gap, g);
    for (double g : jc_gaps) min_gap = std::min(min_gap, g);
    double worst_unitary_gap = 0.0, worst_unitary_residual = 0.0;
    for (const auto& [g, r] : unitary_out) {
        worst_unitary_gap = std::max(worst_unitary_gap, g);
        worst_unitary_residual = std::max(worst_unitary_residual, r);
    }

    res.passed = min_gap >= -tol_gap && worst_unitary_gap <= 1e-10 &&
                 worst_unitary_residual <= 1e-9;
    res.details = "3x" + std::to_string(n) + " random instances min gap " + fmt(min_gap) + "; " +
                  std::to_string(n_unitary) + " unitary channels worst |gap| " +
                  fmt(worst_unitary_gap) + ", worst equality residual " +
                  fmt(worst_unitary_residual);
    return res;
}

// ---- criterion 8: corollary necessity -------------------------------------------

CriterionResult criterion_corollary(Ctx& ctx) {
    CriterionResult res{8, "corollary-necessity", false, "", 0.0};
    Prng base = ctx.root.split(8);
    int n = scaled(50, ctx.config.scale);

    auto unitary_res = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(i);
        int d = 2 + i % 3;
        KrausChannel phi = unitary_channel(random_unitary(d, rng));
        DensityOperator rho = full_rank_density(d, rng.split(1).seed());
        DensityOperator gamma = full_rank_density(d, rng.split(2).seed());
        ResidualReport r = vv_commutation_residual(phi, rho, gamma);
        return std::max(r.components.at("projector_commutator"),
                        r.components.at("range_condition"));
    });
    auto trace_res = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(100000 + i);
        int d1 = 2 + i % 2, d2 = 2 + (i / 2) % 2;
        SystemShape shape({d1, d2});
        KrausChannel phi = partial_trace_channel(shape, {1});
        DensityOperator rho1 = full_rank_density(d1, rng.split(0).seed());
        DensityOperator rho2 = full_rank_density(d2, rng.split(1).seed());
        DensityOperator gamma2 = full_rank_density(d2, rng.split(2).seed());
        DensityOperator rho(kron(rho1.mat(), rho2.mat()));
        DensityOperator gamma(kron(rho1.mat(), gamma2.mat()));
        ResidualReport r = vv_commutation_residual(phi, rho, gamma);
        return std::max(r.components.at("projector_commutator"),
                        r.components.at("range_condition"));
    });

    double worst = 0.0;
    for (double x : unitary_res) worst = std::max(worst, x);
    for (double x : trace_res) worst = std::max(worst, x);
    res.passed = worst <= 1e-8;
    res.details = std::to_string(2 * n) +
                  " constructed equality instances, worst commutation/range residual " +
                  fmt(worst) + " (<= 1e-8)";
    return res;
}

// ---- criterion 9: Holevo bound ----------------------------------------------------

Ensemble commuting_ensemble(int dim, int n_states, std::uint64_t seed) {
    Prng rng(seed);
    Matrix u = random_unitary(dim, rng);
    std::vector<double> w(n_states);
    double wsum = 0.0;
    for (double& x : w) {
        x = 0.2 + rng.uniform();
        wsum += x;
    }
    for (double& x : w) x /= wsum;
    std::vector<DensityOperator> states;
    for (int j = 0; j < n_states; ++j) {
        RealVector probs(dim);
        double psum = 0.0;
        for (int k = 0; k < dim; ++k) {
            probs[k] = 0.1 + rng.uniform();
            psum += probs[k];
        }
        probs /= psum;
        Matrix rho = u * probs.asDiagonal() * u.adjoint();
        states.emplace_back(0.5 * (rho + rho.adjoint().eval()));
    }
    return {ProbabilityVector(std::move(w)), std::move(states)};
}

CriterionResult criterion_holevo(Ctx& ctx) {
    CriterionResult res{9, "holevo", false, "", 0.0};
    Prng base = ctx.root.split(9);
    int n = scaled(1000, ctx.config.scale);
    int n_commuting = scaled(100, ctx.config.scale);
    int n_povm_sweep = scaled(200, ctx.config.scale);

    auto bound_gaps = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(i);
        int d = 2 + i % 2;
        Ensemble e = random_ensemble(d, 2 + i % 3, rng.split(0).seed());
        Povm m = random_povm(d, 2 + (i / 3) % 3, rng.split(1).seed());
        return holevo_chi(e) - accessible_info(e, m);
    });
    double min_bound_gap = *std::min_element(bound_gaps.begin(), bound_gaps.end());

    auto attain = run_batch<std::pair<double, double>>(n_commuting, [&](int i) {
        Ensemble e = commuting_ensemble(2 + i % 3, 2 + (i / 3) % 2,
                                        base.split(300000 + i).seed());
        Povm m = spectral_measurement_for_commuting(e);
        double dev = std::abs(accessible_info(e, m) - holevo_chi(e));
        double residual = holevo_equality_residual(e, m).residual;
        return std::make_pair(dev, residual);
    });
    double worst_attain = 0.0, worst_attain_residual = 0.0;
    for (const auto& [dev, r] : attain) {
        worst_attain = std::max(worst_attain, dev);
        worst_attain_residual = std::max(worst_attain_residual, r);
    }

    // the {1/2 |0><0|, 1/2 |+><+|} ensemble
    Matrix zero = Matrix::Zero(2, 2), plus(2, 2);
    zero(0, 0) = 1.0;
    plus << 0.5, 0.5, 0.5, 0.5;
    Ensemble pair(ProbabilityVector({0.5, 0.5}),
                  {DensityOperator(zero), DensityOperator(plus)});
    double chi = holevo_chi(pair);
    double p_eig = (1.0 + 1.0 / std::sqrt(2.0)) / 2.0;
    double chi_expected = -p_eig * std::log(p_eig) - (1.0 - p_eig) * std::log(1.0 - p_eig);
    bool chi_ok = std::abs(chi - chi_expected) <= 1e-6;

    auto infos = run_batch<double>(n_povm_sweep, [&](int i) {
        Povm m = random_povm(2, 2 + i % 3, base.split(500000 + i).seed());
        return accessible_info(pair, m);
    });
    double best_info = *std::max_element(infos.begin(), infos.end());
    bool strict_gap = best_info < chi - 1e-3;

    res.passed = min_bound_gap >= -1e-9 && worst_attain <= 1e-8 &&
                 worst_attain_residual <= 1e-8 && chi_ok && strict_gap;
    res.details = std::to_string(n) + " random pairs min (chi - I) " + fmt(min_bound_gap) +
                  "; commuting attainment worst dev " + fmt(worst_attain) + ", worst residual " +
                  fmt(worst_attain_residual) + "; |chi - eigen value| " +
                  fmt(std::abs(chi - chi_expected)) + "; max I over " +
                  std::to_string(n_povm_sweep) + " POVMs " + fmt(best_info) + " < chi - 1e-3 = " +
                  fmt(chi - 1e-3);
    return res;
}

// ---- criterion 10: Hall bound ------------------------------------------------------

CriterionResult criterion_hall(Ctx& ctx) {
    CriterionResult res{10, "hall-bound", false, "", 0.0};
    Prng base = ctx.root.split(10);
    int n = scaled(500, ctx.config.scale);
    int n_diag = scaled(100, ctx.config.scale);

    auto gaps = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(i);
        int d = 2 + i % 2;
        Ensemble e = random_ensemble(d, 2 + i % 3, rng.split(0).seed());
        Povm m = random_povm(d, 2 + (i / 3) % 3, rng.split(1).seed());
        InfoReport r = hall_bound(e.average(), m, e);
        return r.hall_bound - r.accessible_info;
    });
    double min_gap = *std::min_element(gaps.begin(), gaps.end());

    auto diags = run_batch<double>(n_diag, [&](int i) {
        Prng rng = base.split(700000 + i);
        int d = 2 + i % 3;
        int outcomes = 2 + (i / 3) % 2;
        // diagonal ensemble and diagonal POVM in the standard basis
        std::vector<DensityOperator> states;
        std::vector<double> w(2, 0.5);
        for (int j = 0; j < 2; ++j) {
            RealVector probs(d);
            double psum = 0.0;
            for (int k = 0; k < d; ++k) {
                probs[k] = 0.1 + rng.uniform();
                psum += probs[k];
            }
            probs /= psum;
            Matrix rho = Matrix::Zero(d, d);
            for (int k = 0; k < d; ++k) rho(k, k) = probs[k];
            states.emplace_back(std::move(rho));
        }
        Ensemble e(ProbabilityVector(std::move(w)), std::move(states));
        std::vector<HermitianOperator> elems;
        std::vector<RealVector> weights(outcomes, RealVector::Zero(d));
        for (int k = 0; k < d; ++k) {
            double rest = 1.0;
            for (int b = 0; b < outcomes - 1; ++b) {
                double frac = rng.uniform() * rest;
                weights[b][k] = frac;
                rest -= frac;
            }
            weights[outcomes - 1][k] = rest;
        }
        for (int b = 0; b < outcomes; ++b) {
            Matrix eb = Matrix::Zero(d, d);
            for (int k = 0; k < d; ++k) eb(k, k) = weights[b][k];
            elems.emplace_back(std::move(eb));
        }
        Povm m(std::move(elems));
        InfoReport r = hall_bound(e.average(), m, e);
        return r.equality_residuals.at("hall_commutator_max");
    });
    double worst_comm = *std::max_element(diags.begin(), diags.end());

    res.passed = min_gap >= -1e-9 && worst_comm <= 1e-12;
    res.details = std::to_string(n) + " random instances min (bound - I) " + fmt(min_gap) +
                  "; " + std::to_string(n_diag) + " diagonal instances worst commutator " +
                  fmt(worst_comm) + " (<= 1e-12)";
    return res;
}

// ---- criterion 11: concavity machinery probes ---------------------------------------

CriterionResult criterion_appendix_probes(Ctx& ctx) {
    CriterionResult res{11, "appendix-a", false, "", 0.0};
    Prng base = ctx.root.split(11);
    int n_herglotz = scaled(200, ctx.config.scale);
    int n_concavity = scaled(500, ctx.config.scale);
    double tol_gap = ctx.gate(1e-9);

    struct HerglotzOut {
        double min_im;
        double second_diff;
        bool retained_any;
    };
    auto hout = run_batch<HerglotzOut>(n_herglotz, [&](int i) {
        Prng rng = base.split(i);
        int d = 2 + i % 3;
        HermitianOperator k(0.5 * random_hermitian(d, rng));
        HermitianOperator a(random_positive(d, rng, 0.2));
        Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat(), Eigen::EigenvaluesOnly);
        double min_eig = es.eigenvalues().minCoeff();
        Matrix braw = random_hermitian(d, rng);
        double bnorm = braw.operatorNorm();
        HermitianOperator b(braw * (0.5 * min_eig / bnorm));

        VerdictReport h = epstein_herglotz_probe(k, a, b);
        VerdictReport sd = epstein_second_derivative_probe(k, a, b);
        return HerglotzOut{h.rhs, sd.lhs, h.residuals.at("retained") > 0};
    });
    double worst_im = std::numeric_limits<double>::infinity();
    double worst_second = -std::numeric_limits<double>::infinity();
    bool all_retained = true;
    for (const auto& h : hout) {
        worst_im = std::min(worst_im, h.min_im);
        worst_second = std::max(worst_second, h.second_diff);
        all_retained = all_retained && h.retained_any;
    }

    auto conc = run_batch<double>(n_concavity, [&](int i) {
        Prng rng = base.split(400000 + i);
        int d = 2 + i % 3;
        HermitianOperator k(0.5 * random_hermitian(d, rng));
        HermitianOperator a1(random_positive(d, rng, 0.1));
        HermitianOperator a2(random_positive(d, rng, 0.1));
        double lambda = 0.05 + 0.9 * rng.uniform();
        return exp_log_concavity_probe(k, a1, a2, lambda, tol_gap).gap;
    });
    double min_conc = *std::min_element(conc.begin(), conc.end());

    res.passed = worst_im >= -1e-10 && worst_second <= 1e-6 && min_conc >= -tol_gap &&
                 all_retained;
    res.details = std::to_string(n_herglotz) + " Herglotz probes min Im g " + fmt(worst_im) +
                  " (>= -1e-10), worst second difference " + fmt(worst_second) +
                  " (<= 1e-6); " + std::to_string(n_concavity) + " concavity probes min gap " +
                  fmt(min_conc);
    return res;
}

// ---- criterion 12: structural identities ----------------------------------------------

CriterionResult criterion_structural(Ctx& ctx) {
    CriterionResult res{12, "structural-identities", false, "", 0.0};
    Prng base = ctx.root.split(12);
    int n = scaled(200, ctx.config.scale);

    auto worst_of = run_batch<double>(n, [&](int i) {
        Prng rng = base.split(i);
        int d = 2 + i % 3;
        int m = 2 + (i / 3) % 2;

        double worst = 0.0;
        // Stinespring recovery
        KrausChannel phi = random_channel(d, d, m, rng.split(0).seed());
        DensityOperator rho = random_density(d, rng.split(1).seed());
        StinespringIsometry iso = stinespring(phi);
        Matrix dilated = iso.v() * rho.mat() * iso.v().adjoint();
        Matrix recovered =
            partial_trace(dilated, iso.dilated_shape(), {iso.system_factor()});
        worst = std::max(worst, frobenius(recovered - apply(phi, rho).mat()));

        // adjoint duality on general operators
        Matrix x = gaussian_matrix(d, d, rng);
        Matrix y = gaussian_matrix(d, d, rng);
        Complex left = hs_inner(apply_matrix(phi, x), y);
        Complex right = hs_inner(x, adjoint_apply_matrix(phi, y));
        worst = std::max(worst, std::abs(left - right));

        // purification round-trip
        MultipartiteState pure = purify(rho);
        worst = std::max(worst,
                         frobenius(partial_trace(pure, {0}).mat() - rho.mat()));

        // POVM lift statistics
        Povm povm = random_povm(d, 2 + i % 3, rng.split(2).seed());
        ProjectiveLift lift = povm_to_projective(povm);
        Matrix lifted = lift.isometry.v() * rho.mat() * lift.isometry.v().adjoint();
        for (int b = 0; b < povm.outcomes(); ++b) {
            double via_lift = (lift.projectors.elements()[b].mat() * lifted).trace().real();
            double direct = (povm.elements()[b].mat() * rho.mat()).trace().real();
            worst = std::max(worst, std::abs(via_lift - direct));
        }
        return worst;
    });
    double worst = *std::max_element(worst_of.begin(), worst_of.end());
    res.passed = worst <= 1e-10;
    res.details = std::to_string(n) +
                  " instances of recovery/duality/purification/lift, worst residual " +
                  fmt(worst) + " (<= 1e-10)";
    return res;
}

} // namespace

SuiteResult run_suite(const SuiteConfig& config) {
    Ctx ctx{config, Gate{config.tol_override}, Prng(config.seed)};

    using Fn = CriterionResult (*)(Ctx&);
    const std::pair<const char*, Fn> criteria[] = {
        {"ssa-random", &criterion_ssa_random},
        {"ssa-equality-sufficiency", &criterion_ssa_equality_sufficiency},
        {"ssa-equality-necessity", &criterion_ssa_equality_necessity},
        {"petz-consistency", &criterion_petz},
        {"lieb-triple", &criterion_lieb_triple},
        {"golden-thompson", &criterion_golden_thompson},
        {"mono-mpt-jc", &criterion_mono_mpt_jc},
        {"corollary-necessity", &criterion_corollary},
        {"holevo", &criterion_holevo},
        {"hall-bound", &criterion_hall},
        {"appendix-a", &criterion_appendix_probes},
        {"structural-identities", &criterion_structural},
    };

    SuiteResult result;
    auto start = Clock::now();
    for (const auto& [name, fn] : criteria) {
        if (!config.only.empty() && std::string(name).find(config.only) == std::string::npos)
            continue;
        auto t0 = Clock::now();
        CriterionResult r = fn(ctx);
        r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        result.all_passed = result.all_passed && r.passed;
        result.criteria.push_back(std::move(r));
    }
    result.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();

    bool run_wallclock = config.only.empty() ||
                         std::string("wall-clock").find(config.only) != std::string::npos;
    if (run_wallclock && config.only.empty()) {
        CriterionResult wall{13, "wall-clock", result.total_seconds < 300.0,
                             "full suite took " + fmt(result.total_seconds) +
                                 " s (< 300 s required)",
                             0.0};
        result.all_passed = result.all_passed && wall.passed;
        result.criteria.push_back(std::move(wall));
    }
    return result;
}

Json suite_to_json(const SuiteResult& result, const SuiteConfig& config) {
    Json j;
    j["config"] = {{"seed", config.seed},
                   {"scale", config.scale},
                   {"tol_override", config.tol_override},
                   {"only", config.only}};
    Json list = Json::array();
    for (const auto& c : result.criteria) {
        list.push_back({{"id", c.id},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"details", c.details},
                        {"elapsed_seconds", c.elapsed_seconds}});
    }
    j["criteria"] = list;
    j["total_seconds"] = result.total_seconds;
    j["all_passed"] = result.all_passed;
    return j;
}

} // namespace qei
