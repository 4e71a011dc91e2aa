#include "qei/inequalities.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace qei {

namespace {

VerdictReport verdict(std::string name, double lhs, double rhs, double tolerance,
                      std::vector<int> dims) {
    VerdictReport v;
    v.name = std::move(name);
    v.lhs = lhs;
    v.rhs = rhs;
    v.gap = rhs - lhs;
    v.tolerance = tolerance;
    v.holds = v.gap >= -tolerance;
    v.dims = std::move(dims);
    return v;
}

double pick_tol(double tolerance, int total_dim) {
    return tolerance >= 0 ? tolerance : tol::default_gap(total_dim);
}

double entropy_of(const MultipartiteState& s, const std::vector<int>& keep) {
    return von_neumann_entropy(partial_trace(s, keep).rho());
}

void require_factors(const MultipartiteState& s, int n, const char* what) {
    if (s.shape().factors() != n)
        throw ShapeMismatch(std::string(what) + " expects " + std::to_string(n) + " factors");
}

void require_positive_definite(const HermitianOperator& m, double pos_tol, const char* what) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat(), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() <= pos_tol)
        throw NotPositive(std::string(what) + " must be strictly positive (min eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()) + ")");
}

// Fills verdict fields for an inequality lhs <= rhs where either side may be
// infinite; an infinite rhs makes the inequality vacuous.
VerdictReport relent_verdict(std::string name, const std::optional<double>& lhs,
                             const std::optional<double>& rhs, double tolerance,
                             std::vector<int> dims) {
    if (rhs && lhs) return verdict(std::move(name), *lhs, *rhs, tolerance, std::move(dims));
    VerdictReport v;
    v.name = std::move(name);
    v.tolerance = tolerance;
    v.dims = std::move(dims);
    v.lhs_infinite = !lhs.has_value();
    v.rhs_infinite = !rhs.has_value();
    v.lhs = lhs.value_or(0.0);
    v.rhs = rhs.value_or(0.0);
    v.gap = 0.0;
    v.holds = v.rhs_infinite; // finite rhs with infinite lhs is a violation
    return v;
}

} // namespace

VerdictReport check_subadditivity(const MultipartiteState& s, double tolerance) {
    require_factors(s, 2, "check_subadditivity");
    double tolv = pick_tol(tolerance, s.dim());
    MultipartiteState r1 = partial_trace(s, {0});
    MultipartiteState r2 = partial_trace(s, {1});
    double s1 = von_neumann_entropy(r1.rho());
    double s2 = von_neumann_entropy(r2.rho());
    double s12 = von_neumann_entropy(s.rho());

    VerdictReport v = verdict("subadditivity", s12, s1 + s2, tolv, s.shape().dims());
    double product_residual = frobenius(s.mat() - kron(r1.mat(), r2.mat()));
    v.residuals["product_residual"] = product_residual;
    v.equality = product_residual <= tol::equality_flag;
    return v;
}

VerdictReport check_triangle(const MultipartiteState& s, double tolerance) {
    require_factors(s, 2, "check_triangle");
    double tolv = pick_tol(tolerance, s.dim());
    double s1 = entropy_of(s, {0});
    double s2 = entropy_of(s, {1});
    double s12 = von_neumann_entropy(s.rho());
    return verdict("triangle", std::abs(s1 - s2), s12, tolv, s.shape().dims());
}

VerdictReport check_araki_lieb(const MultipartiteState& s, double tolerance) {
    require_factors(s, 3, "check_araki_lieb");
    double tolv = pick_tol(tolerance, s.dim());
    double s123 = von_neumann_entropy(s.rho());
    double s12 = entropy_of(s, {0, 1});
    double s23 = entropy_of(s, {1, 2});
    return verdict("araki_lieb", s123, s12 + s23, tolv, s.shape().dims());
}

VerdictReport check_ssa(const MultipartiteState& s, double tolerance) {
    require_factors(s, 3, "check_ssa");
    double tolv = pick_tol(tolerance, s.dim());
    double s123 = von_neumann_entropy(s.rho());
    double s2 = entropy_of(s, {1});
    double s12 = entropy_of(s, {0, 1});
    double s23 = entropy_of(s, {1, 2});
    VerdictReport v = verdict("ssa", s123 + s2, s12 + s23, tolv, s.shape().dims());
    if (s.rho().strictly_positive()) {
        ResidualReport eq = ssa_equality_residual(s);
        v.residuals["markov_residual"] = eq.residual;
        v.equality = eq.satisfied;
    }
    return v;
}

VerdictReport check_ssa_purified(const MultipartiteState& s, double tolerance) {
    require_factors(s, 3, "check_ssa_purified");
    double tolv = pick_tol(tolerance, s.dim());
    double s4 = entropy_of(s, {2});
    double s2 = entropy_of(s, {1});
    double s12 = entropy_of(s, {0, 1});
    double s14 = entropy_of(s, {0, 2});
    return verdict("ssa_purified", s4 + s2, s12 + s14, tolv, s.shape().dims());
}

VerdictReport check_mpt(const MultipartiteState& rho12, const MultipartiteState& gamma12,
                        double tolerance) {
    require_factors(rho12, 2, "check_mpt");
    if (rho12.shape().dims() != gamma12.shape().dims())
        throw ShapeMismatch("states have different shapes");
    double tolv = pick_tol(tolerance, rho12.dim());
    DensityOperator rho2 = partial_trace(rho12, {1}).rho();
    DensityOperator gamma2 = partial_trace(gamma12, {1}).rho();
    auto lhs = relative_entropy(rho2, gamma2);
    auto rhs = relative_entropy(rho12.rho(), gamma12.rho());
    return relent_verdict("mpt", lhs, rhs, tolv, rho12.shape().dims());
}

VerdictReport check_joint_convexity(const std::vector<WeightedPair>& components,
                                    double tolerance) {
    if (components.empty()) throw LengthMismatch("no mixture components");
    int d = components.front().rho.dim();
    double wsum = 0.0;
    Matrix rho_bar = Matrix::Zero(d, d);
    Matrix gamma_bar = Matrix::Zero(d, d);
    for (const auto& c : components) {
        if (c.weight <= 0.0) throw InvariantViolation("mixture weights must be positive");
        if (c.rho.dim() != d || c.gamma.dim() != d) throw DimMismatch("component dimensions");
        wsum += c.weight;
        rho_bar += c.weight * c.rho.mat();
        gamma_bar += c.weight * c.gamma.mat();
    }
    if (std::abs(wsum - 1.0) > 1e-10)
        throw InvariantViolation("mixture weights sum to " + std::to_string(wsum));

    double tolv = pick_tol(tolerance, d);
    auto lhs = relative_entropy(DensityOperator(rho_bar), DensityOperator(gamma_bar));
    std::optional<double> rhs = 0.0;
    for (const auto& c : components) {
        auto h = relative_entropy(c.rho, c.gamma);
        if (!h) {
            rhs = std::nullopt;
            break;
        }
        *rhs += c.weight * *h;
    }
    return relent_verdict("joint_convexity", lhs, rhs, tolv, {d});
}

VerdictReport check_monotonicity(const KrausChannel& phi, const DensityOperator& rho,
                                 const DensityOperator& gamma, double tolerance) {
    if (rho.dim() != phi.in_dim() || gamma.dim() != phi.in_dim())
        throw DimMismatch("states do not match channel input");
    double tolv = pick_tol(tolerance, std::max(phi.in_dim(), phi.out_dim()));
    auto lhs = relative_entropy(apply(phi, rho), apply(phi, gamma));
    auto rhs = relative_entropy(rho, gamma);
    VerdictReport v =
        relent_verdict("monotonicity", lhs, rhs, tolv, {phi.in_dim(), phi.out_dim()});
    return v;
}

VerdictReport check_klein(const HermitianOperator& a, const HermitianOperator& b,
                          double tolerance) {
    if (a.dim() != b.dim()) throw DimMismatch("operators have different dimensions");
    double tolv = pick_tol(tolerance, a.dim());
    double traces = a.mat().trace().real() - b.mat().trace().real();
    auto gap = klein_gap(a, b);
    if (gap) {
        VerdictReport v = verdict("klein", traces, traces + *gap, tolv, {a.dim()});
        v.equality = *gap <= tol::equality_flag;
        return v;
    }
    VerdictReport v;
    v.name = "klein";
    v.tolerance = tolv;
    v.dims = {a.dim()};
    v.lhs = traces;
    v.rhs_infinite = true;
    v.holds = true;
    return v;
}

VerdictReport golden_thompson_gap(const HermitianOperator& a, const HermitianOperator& b,
                                  double tolerance) {
    if (a.dim() != b.dim()) throw DimMismatch("operators have different dimensions");
    double tolv = pick_tol(tolerance, a.dim());
    Matrix ea = matrix_exp(a).mat();
    Matrix eb = matrix_exp(b).mat();
    double lhs = matrix_exp(HermitianOperator(a.mat() + b.mat())).mat().trace().real();
    double rhs = (ea * eb).trace().real();
    VerdictReport v = verdict("golden_thompson", lhs, rhs, tolv, {a.dim()});
    v.residuals["commutator_norm"] = frobenius(commutator(a.mat(), b.mat()));
    v.equality = v.gap <= tol::equality_flag;
    return v;
}

double divided_difference_log(double x, double y) {
    double u = (x - y) / (x + y);
    if (std::abs(u) < 1e-8) return (2.0 / (x + y)) * (1.0 + u * u / 3.0);
    return std::log(x / y) / (x - y);
}

VerdictReport lieb_triple_gap(const HermitianOperator& r, const HermitianOperator& s,
                              const HermitianOperator& t, double tolerance,
                              bool with_quadrature, double pos_tol) {
    if (r.dim() != s.dim() || s.dim() != t.dim())
        throw DimMismatch("operators have different dimensions");
    require_positive_definite(r, pos_tol, "R");
    require_positive_definite(s, pos_tol, "S");
    require_positive_definite(t, pos_tol, "T");
    int d = r.dim();
    double tolv = pick_tol(tolerance, d);

    Matrix exponent =
        matrix_log(r).mat() - matrix_log(s).mat() + matrix_log(t).mat();
    double lhs = matrix_exp(HermitianOperator(0.5 * (exponent + exponent.adjoint().eval())))
                     .mat()
                     .trace()
                     .real();

    Spectrum spec_s = eig_hermitian(s);
    Matrix r_rot = spec_s.eigenvectors.adjoint() * r.mat() * spec_s.eigenvectors;
    Matrix t_rot = spec_s.eigenvectors.adjoint() * t.mat() * spec_s.eigenvectors;
    Complex rhs_acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rhs_acc += r_rot(j, i) * t_rot(i, j) *
                       divided_difference_log(spec_s.eigenvalues[i], spec_s.eigenvalues[j]);
    double rhs = rhs_acc.real();

    VerdictReport v = verdict("lieb_triple", lhs, rhs, tolv, {d});

    if (with_quadrature) {
        double lam_max = spec_s.eigenvalues.maxCoeff();
        double u_max = 1e6 * lam_max;
        Matrix eye = Matrix::Identity(d, d);
        auto integrand = [&](double u) {
            Matrix resolvent = (s.mat() + u * eye).llt().solve(eye);
            return (r.mat() * resolvent * t.mat() * resolvent).trace().real();
        };
        // depth must reach the integrand's feature scale (~lambda_min of S)
        // down from u_max; 26 bisections resolve 1e6 * lambda_max / 2^26
        double quad_error = 0.0;
        double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, 0.0, u_max, 26, 1e-10, &quad_error);
        // complete with the leading tail term; the design bound Tr R Tr T / u_max
        // caps everything past u_max
        double tail_term = (r.mat() * t.mat()).trace().real() / u_max;
        double tail_bound = r.mat().trace().real() * t.mat().trace().real() / u_max;
        double quad_rhs = integral + tail_term;
        v.residuals["quadrature_rhs"] = quad_rhs;
        v.residuals["quadrature_error_estimate"] = quad_error;
        v.residuals["quadrature_tail_bound"] = tail_bound;
        v.residuals["quadrature_agreement"] =
            std::abs(rhs - quad_rhs) / std::max(std::abs(rhs), 1e-300);
    }
    return v;
}

double trace_exp_klog(const HermitianOperator& k, const HermitianOperator& a) {
    if (k.dim() != a.dim()) throw DimMismatch("operators have different dimensions");
    require_positive_definite(a, tol::pos, "A");
    Matrix exponent = k.mat() + matrix_log(a).mat();
    return matrix_exp(HermitianOperator(0.5 * (exponent + exponent.adjoint().eval())))
        .mat()
        .trace()
        .real();
}

VerdictReport exp_log_concavity_probe(const HermitianOperator& k, const HermitianOperator& a1,
                                      const HermitianOperator& a2, double lambda,
                                      double tolerance) {
    if (lambda <= 0.0 || lambda >= 1.0) throw DomainError("lambda must lie in (0,1)");
    double tolv = pick_tol(tolerance, k.dim());
    Matrix mix = lambda * a1.mat() + (1.0 - lambda) * a2.mat();
    double lhs = lambda * trace_exp_klog(k, a1) + (1.0 - lambda) * trace_exp_klog(k, a2);
    double rhs = trace_exp_klog(k, HermitianOperator(mix));
    VerdictReport v = verdict("exp_log_concavity", lhs, rhs, tolv, {k.dim()});
    v.residuals["lambda"] = lambda;
    return v;
}

namespace {

double wyd_value(const HermitianOperator& a, const HermitianOperator& b, const Matrix& k,
                 double s) {
    Matrix a_pow = matrix_function(a, [s](double x) { return std::pow(x, s); },
                                   KernelPolicy::zero_to_zero())
                       .mat();
    Matrix b_pow = matrix_function(b, [s](double x) { return std::pow(x, 1.0 - s); },
                                   KernelPolicy::zero_to_zero())
                       .mat();
    return (a_pow * k.adjoint() * b_pow * k).trace().real();
}

} // namespace

VerdictReport wyd_concavity_probe(const HermitianOperator& a1, const HermitianOperator& b1,
                                  const HermitianOperator& a2, const HermitianOperator& b2,
                                  const Matrix& k, double s, double lambda, double tolerance) {
    if (s <= 0.0 || s >= 1.0) throw DomainError("s must lie in (0,1)");
    if (lambda <= 0.0 || lambda >= 1.0) throw DomainError("lambda must lie in (0,1)");
    require_positive_definite(a1, tol::pos, "A1");
    require_positive_definite(b1, tol::pos, "B1");
    require_positive_definite(a2, tol::pos, "A2");
    require_positive_definite(b2, tol::pos, "B2");
    double tolv = pick_tol(tolerance, a1.dim());

    double lhs = lambda * wyd_value(a1, b1, k, s) + (1.0 - lambda) * wyd_value(a2, b2, k, s);
    HermitianOperator a_mix(lambda * a1.mat() + (1.0 - lambda) * a2.mat());
    HermitianOperator b_mix(lambda * b1.mat() + (1.0 - lambda) * b2.mat());
    double rhs = wyd_value(a_mix, b_mix, k, s);

    VerdictReport v = verdict("wyd_concavity", lhs, rhs, tolv, {a1.dim()});
    v.residuals["wyd_value"] = rhs;
    v.residuals["s"] = s;
    v.residuals["lambda"] = lambda;
    return v;
}

const std::vector<double>& default_quotient_steps() {
    static const std::vector<double> steps{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    return steps;
}

VerdictReport homogeneous_directional_probe(const HermitianOperator& k,
                                            const HermitianOperator& a,
                                            const HermitianOperator& b,
                                            const std::vector<double>& x_list,
                                            double tolerance) {
    if (x_list.size() < 2) throw LengthMismatch("need at least two step sizes");
    require_positive_definite(a, tol::pos, "A");
    require_positive_definite(b, tol::pos, "B");
    double tolv = pick_tol(tolerance, k.dim());

    std::vector<double> steps = x_list;
    std::sort(steps.begin(), steps.end(), std::greater<double>());
    double f_a = trace_exp_klog(k, a);
    std::vector<double> quotients;
    quotients.reserve(steps.size());
    VerdictReport v;
    v.name = "homogeneous_directional";
    v.dims = {k.dim()};
    v.tolerance = tolv;
    bool monotone = true;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        double x = steps[i];
        HermitianOperator shifted(a.mat() + x * b.mat());
        double q = (trace_exp_klog(k, shifted) - f_a) / x;
        v.residuals["quotient_x=" + std::to_string(x)] = q;
        if (i > 0 && q < quotients.back() - 1e-9) monotone = false;
        quotients.push_back(q);
    }
    // first-order Richardson step from the two smallest x
    double x0 = steps[steps.size() - 2], x1 = steps[steps.size() - 1];
    double q0 = quotients[quotients.size() - 2], q1 = quotients.back();
    double limit = q1 + (q1 - q0) * x1 / (x0 - x1);

    v.lhs = trace_exp_klog(k, b);
    v.rhs = limit;
    v.gap = v.rhs - v.lhs;
    v.residuals["monotone"] = monotone ? 1.0 : 0.0;
    v.holds = monotone && v.gap >= -tolv;
    return v;
}

Matrix log_increment_closed_form(const HermitianOperator& s, const HermitianOperator& t,
                                 double x) {
    require_positive_definite(s, tol::pos, "S");
    HermitianOperator shifted(s.mat() + x * t.mat());
    require_positive_definite(shifted, tol::pos, "S + xT");
    Spectrum ss = eig_hermitian(s);
    Spectrum sp = eig_hermitian(shifted);
    Matrix middle = ss.eigenvectors.adjoint() * (x * t.mat()) * sp.eigenvectors;
    for (int i = 0; i < middle.rows(); ++i)
        for (int j = 0; j < middle.cols(); ++j)
            middle(i, j) *= divided_difference_log(ss.eigenvalues[i], sp.eigenvalues[j]);
    return ss.eigenvectors * middle * sp.eigenvectors.adjoint();
}

bool spectrum_avoids_negative_axis(const Matrix& m) {
    Eigen::ComplexEigenSolver<Matrix> solver(m, false);
    if (solver.info() != Eigen::Success) return false;
    double scale = solver.eigenvalues().cwiseAbs().maxCoeff();
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        Complex lam = solver.eigenvalues()[i];
        if (std::abs(lam.imag()) <= 1e-12 * scale && lam.real() <= 1e-12 * scale) return false;
    }
    return true;
}

namespace {

Matrix complex_matrix_function(const Matrix& m, const std::function<Complex(Complex)>& f,
                               double cond_limit) {
    Eigen::ComplexEigenSolver<Matrix> solver(m, true);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("complex eigendecomposition failed");
    const Matrix& w = solver.eigenvectors();
    Eigen::JacobiSVD<Matrix> svd(w);
    double cond = svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    if (!std::isfinite(cond) || cond > cond_limit)
        throw DefectiveMatrix("eigenvector matrix condition " + std::to_string(cond));
    Vector mapped(m.rows());
    for (int i = 0; i < m.rows(); ++i) mapped[i] = f(solver.eigenvalues()[i]);
    return w * mapped.asDiagonal() * w.inverse();
}

} // namespace

Matrix complex_matrix_log(const Matrix& m, double cond_limit) {
    return complex_matrix_function(m, [](Complex z) { return std::log(z); }, cond_limit);
}

Matrix complex_matrix_exp(const Matrix& m, double cond_limit) {
    return complex_matrix_function(m, [](Complex z) { return std::exp(z); }, cond_limit);
}

const std::vector<Complex>& default_herglotz_grid() {
    static const std::vector<Complex> grid = [] {
        std::vector<Complex> g;
        const double radii[] = {0.1, 1.0, 10.0};
        const Complex bases[] = {{0.0, 0.1}, {0.0, 1.0}, {1.0, 1.0}, {-1.0, 1.0}};
        for (double r : radii)
            for (Complex b : bases) g.push_back(r * b);
        return g;
    }();
    return grid;
}

VerdictReport epstein_herglotz_probe(const HermitianOperator& k, const HermitianOperator& a,
                                     const HermitianOperator& b,
                                     const std::vector<Complex>& z_samples, double tolerance) {
    require_positive_definite(a, tol::pos, "A");
    VerdictReport v;
    v.name = "epstein_herglotz";
    v.dims = {k.dim()};
    v.tolerance = tolerance;

    int retained = 0, skipped = 0;
    double min_im = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z_samples.size(); ++i) {
        Complex z = z_samples[i];
        if (z.imag() <= 0.0) throw DomainError("samples must lie in the open upper half plane");
        Matrix m = z * a.mat() + b.mat();
        if (!spectrum_avoids_negative_axis(m)) {
            ++skipped;
            continue;
        }
        try {
            Matrix g = complex_matrix_exp(k.mat() + complex_matrix_log(m));
            double im = g.trace().imag();
            min_im = std::min(min_im, im);
            v.residuals["Im_g_sample_" + std::to_string(i)] = im;
            ++retained;
        } catch (const DefectiveMatrix&) {
            ++skipped;
        }
    }
    v.residuals["retained"] = retained;
    v.residuals["skipped"] = skipped;
    v.lhs = 0.0;
    v.rhs = retained > 0 ? min_im : 0.0;
    v.gap = v.rhs;
    v.holds = retained > 0 && min_im >= -tolerance;
    return v;
}

VerdictReport epstein_second_derivative_probe(const HermitianOperator& k,
                                              const HermitianOperator& a,
                                              const HermitianOperator& b, double tolerance) {
    require_positive_definite(a, tol::pos, "A");
    VerdictReport v;
    v.name = "epstein_second_derivative";
    v.dims = {k.dim()};
    v.tolerance = tolerance;

    double f0 = trace_exp_klog(k, a);
    double worst = -std::numeric_limits<double>::infinity();
    for (double h : {1e-3, 1e-4}) {
        HermitianOperator plus(a.mat() + h * b.mat());
        HermitianOperator minus(a.mat() - h * b.mat());
        double second = (trace_exp_klog(k, plus) - 2.0 * f0 + trace_exp_klog(k, minus)) / (h * h);
        v.residuals["second_difference_h=" + std::to_string(h)] = second;
        worst = std::max(worst, second);
    }
    v.lhs = worst;
    v.rhs = 0.0;
    v.gap = -worst;
    v.holds = worst <= tolerance;
    return v;
}

} // namespace qei
