#include "qei/holevo.hpp"

#include <algorithm>
#include <cmath>

namespace qei {

namespace {

constexpr double kDropOutcome = 1e-14;

std::vector<double> outcome_distribution(const Matrix& rho, const Povm& m) {
    std::vector<double> p(m.outcomes());
    for (int b = 0; b < m.outcomes(); ++b)
        p[b] = std::max(0.0, (m.elements()[b].mat() * rho).trace().real());
    return p;
}

double classical_entropy(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p)
        if (x > kDropOutcome) s -= x * std::log(x);
    return s;
}

} // namespace

double holevo_chi(const Ensemble& e) {
    DensityOperator avg = e.average();
    double chi_entropic = von_neumann_entropy(avg);
    double chi_relent = 0.0;
    for (int j = 0; j < e.size(); ++j) {
        double pi = e.weights()[j];
        if (pi <= kDropOutcome) continue;
        chi_entropic -= pi * von_neumann_entropy(e.states()[j]);
        auto h = relative_entropy(e.states()[j], avg);
        if (!h) throw InvariantViolation("ensemble member unsupported by its own average");
        chi_relent += pi * *h;
    }
    if (std::abs(chi_entropic - chi_relent) > 1e-10)
        throw InvariantViolation("chi identity check failed: " +
                                 std::to_string(chi_entropic - chi_relent));
    return chi_entropic;
}

double accessible_info(const Ensemble& e, const Povm& m) {
    if (e.dim() != m.dim()) throw DimMismatch("ensemble and POVM dimensions differ");
    std::vector<double> q = outcome_distribution(e.average().mat(), m);
    double info = classical_entropy(q);
    for (int j = 0; j < e.size(); ++j) {
        double pi = e.weights()[j];
        if (pi <= kDropOutcome) continue;
        info -= pi * classical_entropy(outcome_distribution(e.states()[j].mat(), m));
    }
    return info;
}

ResidualReport holevo_equality_residual(const Ensemble& e, const Povm& m) {
    if (e.dim() != m.dim()) throw DimMismatch("ensemble and POVM dimensions differ");
    int d = e.dim();
    DensityOperator avg = e.average();
    std::vector<double> q = outcome_distribution(avg.mat(), m);
    for (int b = 0; b < m.outcomes(); ++b)
        if (q[b] <= kDropOutcome)
            throw ZeroOutcomeProbability("outcome " + std::to_string(b) +
                                         " has zero probability on the average state");

    Matrix log_avg = matrix_log0(avg.hermitian()).mat();
    double worst = 0.0;
    double cond_e_max = 0.0;
    double cond_z_max = 0.0;
    std::map<std::string, double> components;

    for (int j = 0; j < e.size(); ++j) {
        if (e.weights()[j] <= kDropOutcome) continue;
        const DensityOperator& rho_j = e.states()[j];
        Matrix p_supp = support_projection(rho_j.hermitian()).mat();
        Matrix lhs = matrix_log0(rho_j.hermitian()).mat() - log_avg;

        std::vector<double> pj = outcome_distribution(rho_j.mat(), m);
        Matrix rhs = Matrix::Zero(d, d);
        std::vector<double> z(m.outcomes(), 0.0);
        for (int b = 0; b < m.outcomes(); ++b) {
            if (pj[b] <= kDropOutcome) continue;
            z[b] = std::log(pj[b] / q[b]);
            rhs += z[b] * m.elements()[b].mat();
        }

        Matrix z_j = p_supp * lhs * p_supp;
        double r = frobenius(z_j - p_supp * rhs * p_supp);
        components["state_" + std::to_string(j)] = r;
        worst = std::max(worst, r);

        for (int b = 0; b < m.outcomes(); ++b) {
            double tr_e = m.elements()[b].mat().trace().real();
            double lhs_trace = (m.elements()[b].mat() * z_j).trace().real();
            cond_e_max = std::max(cond_e_max, std::abs(lhs_trace - tr_e * z[b]));
        }

        Matrix recon = Matrix::Zero(d, d);
        for (int b = 0; b < m.outcomes(); ++b) {
            double tr_e = m.elements()[b].mat().trace().real();
            recon += (hs_inner(m.elements()[b].mat(), z_j) / tr_e) * m.elements()[b].mat();
        }
        cond_z_max = std::max(cond_z_max, frobenius(z_j - recon));
    }

    components["trace_condition_max"] = cond_e_max;
    components["span_projection_max"] = cond_z_max;
    return make_residual_report("holevo_equality", worst, tol::eq, std::move(components));
}

CommutationReport commutes(const Ensemble& e) {
    double worst = 0.0;
    for (int j = 0; j < e.size(); ++j)
        for (int k = j + 1; k < e.size(); ++k)
            worst = std::max(worst,
                             frobenius(commutator(e.states()[j].mat(), e.states()[k].mat())));
    return {worst <= 1e-10, worst};
}

namespace {

double max_offdiagonal(const Matrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

// Refine `basis` (columns spanning a subspace) into common eigenvectors of
// the remaining operators by recursive eigenspace splitting.
Matrix refine_eigenbasis(const std::vector<const Matrix*>& ops, std::size_t next,
                         const Matrix& basis) {
    if (next >= ops.size() || basis.cols() == 1) return basis;
    Matrix restricted = basis.adjoint() * (*ops[next]) * basis;
    Spectrum s = eig_hermitian(HermitianOperator(0.5 * (restricted + restricted.adjoint().eval())));
    double scale = std::max(1.0, s.eigenvalues.cwiseAbs().maxCoeff());

    Matrix out(basis.rows(), basis.cols());
    int written = 0;
    int start = 0;
    int k = static_cast<int>(basis.cols());
    while (start < k) {
        int stop = start + 1;
        while (stop < k && s.eigenvalues[stop] - s.eigenvalues[stop - 1] <= 1e-8 * scale) ++stop;
        Matrix cluster = basis * s.eigenvectors.middleCols(start, stop - start);
        Matrix refined = refine_eigenbasis(ops, next + 1, cluster);
        out.middleCols(written, refined.cols()) = refined;
        written += static_cast<int>(refined.cols());
        start = stop;
    }
    return out;
}

} // namespace

Povm spectral_measurement_for_commuting(const Ensemble& e) {
    CommutationReport report = commutes(e);
    if (!report.commutes)
        throw NotCommuting("ensemble states do not commute (max norm " +
                           std::to_string(report.max_commutator_norm) + ")");
    int d = e.dim();

    auto all_diagonal = [&](const Matrix& u) {
        for (const DensityOperator& rho : e.states())
            if (max_offdiagonal(u.adjoint() * rho.mat() * u) > 1e-8) return false;
        return true;
    };

    Matrix u;
    bool found = false;
    for (int attempt = 0; attempt < 3 && !found; ++attempt) {
        Prng rng(0x5BEC7AA1ull + static_cast<std::uint64_t>(attempt));
        Matrix combo = Matrix::Zero(d, d);
        for (const DensityOperator& rho : e.states()) combo += rng.gaussian() * rho.mat();
        Spectrum s = eig_hermitian(HermitianOperator(0.5 * (combo + combo.adjoint().eval())));
        if (all_diagonal(s.eigenvectors)) {
            u = s.eigenvectors;
            found = true;
        }
    }
    if (!found) {
        std::vector<const Matrix*> ops;
        for (const DensityOperator& rho : e.states()) ops.push_back(&rho.mat());
        u = refine_eigenbasis(ops, 0, Matrix::Identity(d, d));
        if (!all_diagonal(u))
            throw NotCommuting("common eigenbasis refinement failed to diagonalize ensemble");
    }

    std::vector<HermitianOperator> projectors;
    projectors.reserve(d);
    for (int i = 0; i < d; ++i) {
        Matrix p = u.col(i) * u.col(i).adjoint();
        projectors.emplace_back(0.5 * (p + p.adjoint().eval()));
    }
    return Povm(std::move(projectors));
}

InfoReport hall_bound(const DensityOperator& rho, const Povm& m, const Ensemble& e) {
    if (rho.dim() != m.dim() || rho.dim() != e.dim())
        throw DimMismatch("dimensions of state, POVM and ensemble differ");
    if (frobenius(rho.mat() - e.average().mat()) > 1e-10)
        throw EnsembleMismatch("rho is not the ensemble average");

    Matrix root = matrix_sqrt(rho.hermitian()).mat();
    double s_rho = von_neumann_entropy(rho);

    double bound = s_rho;
    double relent_form = 0.0;
    int dropped = 0;
    std::vector<Matrix> omegas;
    for (int b = 0; b < m.outcomes(); ++b) {
        Matrix omega = root * m.elements()[b].mat() * root;
        omega = 0.5 * (omega + omega.adjoint().eval());
        double tau = omega.trace().real();
        omegas.push_back(omega);
        if (tau <= kDropOutcome) {
            ++dropped;
            continue;
        }
        HermitianOperator normalized(omega / tau);
        Spectrum s = eig_hermitian(normalized);
        bound -= tau * entropy_of_spectrum(s.eigenvalues);
        auto h = relative_entropy_psd(normalized, rho.hermitian());
        if (!h) throw ZeroOutcomeProbability("sqrt(rho) E_b sqrt(rho) escapes supp(rho)");
        relent_form += tau * *h;
    }

    double comm_max = 0.0;
    for (std::size_t b = 0; b < omegas.size(); ++b)
        for (std::size_t c = b + 1; c < omegas.size(); ++c)
            comm_max = std::max(comm_max, frobenius(commutator(omegas[b], omegas[c])));

    InfoReport report;
    report.accessible_info = accessible_info(e, m);
    report.chi = holevo_chi(e);
    report.hall_bound = bound;
    report.gaps["chi_minus_info"] = report.chi - report.accessible_info;
    report.gaps["hall_minus_info"] = report.hall_bound - report.accessible_info;
    report.equality_residuals["hall_commutator_max"] = comm_max;
    report.equality_residuals["relative_entropy_form_deviation"] =
        std::abs(bound - relent_form);
    report.equality_residuals["dropped_outcomes"] = dropped;
    return report;
}

VerdictReport qc_monotonicity_check(const Ensemble& e, const Povm& m) {
    if (e.dim() != m.dim()) throw DimMismatch("ensemble and POVM dimensions differ");
    DensityOperator avg = e.average();
    std::vector<double> q = outcome_distribution(avg.mat(), m);

    double info_sum = 0.0;
    double chi_sum = 0.0;
    double worst_violation = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < e.size(); ++j) {
        double pi = e.weights()[j];
        if (pi <= kDropOutcome) continue;
        std::vector<double> pj = outcome_distribution(e.states()[j].mat(), m);
        double lhs_j = 0.0;
        for (int b = 0; b < m.outcomes(); ++b) {
            if (pj[b] <= kDropOutcome) continue;
            if (q[b] <= kDropOutcome)
                throw ZeroOutcomeProbability("average outcome probability vanished");
            lhs_j += pj[b] * std::log(pj[b] / q[b]);
        }
        auto rhs_j = relative_entropy(e.states()[j], avg);
        if (!rhs_j) throw InvariantViolation("ensemble member unsupported by its average");
        worst_violation = std::max(worst_violation, lhs_j - *rhs_j);
        info_sum += pi * lhs_j;
        chi_sum += pi * *rhs_j;
    }

    double info = accessible_info(e, m);
    double chi = holevo_chi(e);

    VerdictReport v;
    v.name = "qc_monotonicity";
    v.lhs = info_sum;
    v.rhs = chi_sum;
    v.gap = chi_sum - info_sum;
    v.tolerance = tol::default_gap(e.dim());
    v.dims = {e.dim(), m.outcomes()};
    v.residuals["max_per_state_violation"] = worst_violation;
    v.residuals["info_reconstruction"] = std::abs(info_sum - info);
    v.residuals["chi_reconstruction"] = std::abs(chi_sum - chi);
    v.holds = worst_violation <= v.tolerance && v.residuals["info_reconstruction"] <= 1e-10 &&
              v.residuals["chi_reconstruction"] <= 1e-10;
    return v;
}

ResidualReport petz_holevo_residual(const Ensemble& e, const Matrix& basis,
                                    const std::vector<double>& t_grid, double pos_tol) {
    if (basis.rows() != e.dim() || basis.cols() != e.dim())
        throw DimMismatch("basis must be a square matrix on the ensemble space");

    auto diagonal_part = [&](const Matrix& rho) {
        Matrix rotated = basis.adjoint() * rho * basis;
        Matrix diag = Matrix::Zero(rho.rows(), rho.cols());
        for (int i = 0; i < rho.rows(); ++i) diag(i, i) = rotated(i, i).real();
        Matrix full = basis * diag * basis.adjoint();
        return DensityOperator(0.5 * (full + full.adjoint().eval()));
    };

    DensityOperator avg = e.average();
    DensityOperator d_avg = diagonal_part(avg.mat());

    double worst = 0.0;
    std::map<std::string, double> components;
    for (int j = 0; j < e.size(); ++j) {
        if (e.weights()[j] <= kDropOutcome) continue;
        DensityOperator d_j = diagonal_part(e.states()[j].mat());
        double state_worst = 0.0;
        for (double t : t_grid) {
            Matrix lhs = imaginary_power(avg, t, pos_tol) * imaginary_power(d_avg, -t, pos_tol);
            Matrix rhs =
                imaginary_power(e.states()[j], t, pos_tol) * imaginary_power(d_j, -t, pos_tol);
            state_worst = std::max(state_worst, frobenius(lhs - rhs));
        }
        components["state_" + std::to_string(j)] = state_worst;
        worst = std::max(worst, state_worst);
    }
    return make_residual_report("petz_holevo", worst, tol::eq, std::move(components));
}

InfoReport info_report(const Ensemble& e, const Povm& m) {
    InfoReport report = hall_bound(e.average(), m, e);
    ResidualReport eq = holevo_equality_residual(e, m);
    report.equality_residuals["holevo_equality"] = eq.residual;
    report.equality_residuals["ensemble_commutator_max"] = commutes(e).max_commutator_norm;
    return report;
}

} // namespace qei
