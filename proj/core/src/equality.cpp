#include "qei/equality.hpp"

#include <cmath>

namespace qei {

namespace {

void require_positive(const DensityOperator& rho, double pos_tol, const char* what) {
    if (!rho.strictly_positive(pos_tol))
        throw SingularState(std::string(what) + " must be strictly positive (min eigenvalue " +
                            std::to_string(rho.min_eigenvalue()) + ")");
}

void require_tripartite(const MultipartiteState& s) {
    if (s.shape().factors() != 3) throw ShapeMismatch("expected a tripartite state");
}

} // namespace

ResidualReport make_residual_report(std::string name, double residual, double eq_tol,
                                    std::map<std::string, double> components) {
    ResidualReport r;
    r.condition_name = std::move(name);
    r.residual = residual;
    r.eq_tol = eq_tol;
    r.satisfied = residual <= eq_tol;
    r.components = std::move(components);
    return r;
}

ResidualReport ssa_equality_residual(const MultipartiteState& s, double pos_tol) {
    require_tripartite(s);
    require_positive(s.rho(), pos_tol, "rho_123");

    const SystemShape& shape = s.shape();
    Matrix log123 = matrix_log(s.rho().hermitian()).mat();
    Matrix log12 = embed(matrix_log(partial_trace(s, {0, 1}).rho().hermitian()).mat(), shape, {0, 1});
    Matrix log23 = embed(matrix_log(partial_trace(s, {1, 2}).rho().hermitian()).mat(), shape, {1, 2});
    Matrix log2 = embed(matrix_log(partial_trace(s, {1}).rho().hermitian()).mat(), shape, {1});

    Matrix delta = log123 - log12 + log2 - log23;
    return make_residual_report("ssa_equality", frobenius(delta), tol::eq,
                                {{"log_rho123", frobenius(log123)},
                                 {"log_rho12", frobenius(log12)},
                                 {"log_rho23", frobenius(log23)},
                                 {"log_rho2", frobenius(log2)}});
}

const std::vector<double>& default_petz_grid() {
    static const std::vector<double> grid{-2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0};
    return grid;
}

ResidualReport petz_residual(const MultipartiteState& s, const std::vector<double>& t_grid,
                             double pos_tol) {
    require_tripartite(s);
    require_positive(s.rho(), pos_tol, "rho_123");

    const SystemShape& shape = s.shape();
    DensityOperator rho12 = partial_trace(s, {0, 1}).rho();
    DensityOperator rho23 = partial_trace(s, {1, 2}).rho();
    DensityOperator rho2 = partial_trace(s, {1}).rho();

    std::map<std::string, double> per_t;
    double worst = 0.0;
    for (double t : t_grid) {
        Matrix lhs = embed(imaginary_power(rho12, t, pos_tol), shape, {0, 1}) *
                     embed(imaginary_power(rho2, -t, pos_tol), shape, {1});
        Matrix rhs = imaginary_power(s.rho(), t, pos_tol) *
                     embed(imaginary_power(rho23, -t, pos_tol), shape, {1, 2});
        double r = frobenius(lhs - rhs);
        per_t["t=" + std::to_string(t)] = r;
        worst = std::max(worst, r);
    }
    return make_residual_report("petz", worst, tol::eq, std::move(per_t));
}

double petz_derivative_norm(const MultipartiteState& s, double t_step, double pos_tol) {
    require_tripartite(s);
    require_positive(s.rho(), pos_tol, "rho_123");

    const SystemShape& shape = s.shape();
    DensityOperator rho12 = partial_trace(s, {0, 1}).rho();
    DensityOperator rho23 = partial_trace(s, {1, 2}).rho();
    DensityOperator rho2 = partial_trace(s, {1}).rho();

    auto petz_matrix = [&](double t) -> Matrix {
        return (embed(imaginary_power(rho12, t, pos_tol), shape, {0, 1}) *
                embed(imaginary_power(rho2, -t, pos_tol), shape, {1})) -
               (imaginary_power(s.rho(), t, pos_tol) *
                embed(imaginary_power(rho23, -t, pos_tol), shape, {1, 2}));
    };
    Matrix derivative = (petz_matrix(t_step) - petz_matrix(-t_step)) / (2.0 * t_step);
    return frobenius(derivative);
}

ResidualReport mpt_equality_residual(const MultipartiteState& rho12,
                                     const MultipartiteState& gamma12, double pos_tol) {
    if (rho12.shape().dims() != gamma12.shape().dims())
        throw ShapeMismatch("states have different shapes");
    if (rho12.shape().factors() != 2) throw ShapeMismatch("expected bipartite states");
    require_positive(rho12.rho(), pos_tol, "rho_12");
    require_positive(gamma12.rho(), pos_tol, "gamma_12");

    const SystemShape& shape = rho12.shape();
    Matrix lr12 = matrix_log(rho12.rho().hermitian()).mat();
    Matrix lg12 = matrix_log(gamma12.rho().hermitian()).mat();
    Matrix lr2 = matrix_log(partial_trace(rho12, {1}).rho().hermitian()).mat();
    Matrix lg2 = matrix_log(partial_trace(gamma12, {1}).rho().hermitian()).mat();

    Matrix delta = lr12 - lg12 - embed(lr2 - lg2, shape, {1});
    return make_residual_report("mpt_equality", frobenius(delta), tol::eq,
                                {{"log_rho12_minus_log_gamma12", frobenius(lr12 - lg12)},
                                 {"reduced_difference", frobenius(lr2 - lg2)}});
}

ResidualReport jc_equality_residual(const std::vector<WeightedPair>& components,
                                    double pos_tol) {
    if (components.empty()) throw LengthMismatch("no mixture components");
    int d = components.front().rho.dim();
    Matrix rho_bar = Matrix::Zero(d, d);
    Matrix gamma_bar = Matrix::Zero(d, d);
    for (const auto& c : components) {
        if (c.rho.dim() != d || c.gamma.dim() != d) throw DimMismatch("component dimensions");
        require_positive(c.rho, pos_tol, "rho^(k)");
        require_positive(c.gamma, pos_tol, "gamma^(k)");
        rho_bar += c.weight * c.rho.mat();
        gamma_bar += c.weight * c.gamma.mat();
    }
    Matrix mix_diff = matrix_log(HermitianOperator(rho_bar)).mat() -
                      matrix_log(HermitianOperator(gamma_bar)).mat();
    double worst = 0.0;
    std::map<std::string, double> per_k;
    for (std::size_t k = 0; k < components.size(); ++k) {
        Matrix diff_k = matrix_log(components[k].rho.hermitian()).mat() -
                        matrix_log(components[k].gamma.hermitian()).mat();
        double r = frobenius(mix_diff - diff_k);
        per_k["k=" + std::to_string(k)] = r;
        worst = std::max(worst, r);
    }
    return make_residual_report("jc_equality", worst, tol::eq, std::move(per_k));
}

ResidualReport mono_equality_residual(const KrausChannel& phi, const DensityOperator& rho,
                                      const DensityOperator& gamma, double pos_tol) {
    require_positive(rho, pos_tol, "rho");
    require_positive(gamma, pos_tol, "gamma");
    DensityOperator out_rho = apply(phi, rho);
    DensityOperator out_gamma = apply(phi, gamma);
    require_positive(out_rho, pos_tol, "Phi(rho)");
    require_positive(out_gamma, pos_tol, "Phi(gamma)");

    Matrix in_diff = matrix_log(rho.hermitian()).mat() - matrix_log(gamma.hermitian()).mat();
    Matrix out_diff =
        matrix_log(out_rho.hermitian()).mat() - matrix_log(out_gamma.hermitian()).mat();
    Matrix delta = in_diff - adjoint_apply_matrix(phi, out_diff);
    return make_residual_report("mono_equality", frobenius(delta), tol::eq,
                                {{"input_log_difference", frobenius(in_diff)},
                                 {"output_log_difference", frobenius(out_diff)}});
}

ResidualReport vv_commutation_residual(const KrausChannel& phi, const DensityOperator& rho,
                                       const DensityOperator& gamma, double pos_tol) {
    require_positive(rho, pos_tol, "rho");
    require_positive(gamma, pos_tol, "gamma");
    DensityOperator out_rho = apply(phi, rho);
    DensityOperator out_gamma = apply(phi, gamma);
    require_positive(out_rho, pos_tol, "Phi(rho)");
    require_positive(out_gamma, pos_tol, "Phi(gamma)");

    Matrix out_diff =
        matrix_log(out_rho.hermitian()).mat() - matrix_log(out_gamma.hermitian()).mat();

    StinespringIsometry iso = stinespring(phi);
    Matrix projector = iso.v() * iso.v().adjoint();
    Matrix embedded = embed(out_diff, iso.dilated_shape(), {iso.system_factor()});
    double commuting = frobenius(commutator(projector, embedded));

    Matrix in_diff = matrix_log(rho.hermitian()).mat() - matrix_log(gamma.hermitian()).mat();
    Matrix unital = apply_matrix(phi, Matrix::Identity(phi.in_dim(), phi.in_dim()));
    double range = frobenius(apply_matrix(phi, in_diff) - unital * out_diff);

    return make_residual_report("vv_commutation", std::max(commuting, range), tol::eq,
                                {{"projector_commutator", commuting},
                                 {"range_condition", range}});
}

MultipartiteState make_markov_state(const std::vector<double>& joint, const SystemShape& shape,
                                    double markov_tol) {
    if (shape.factors() != 3) throw ShapeMismatch("Markov construction needs three factors");
    int da = shape.dim(0), db = shape.dim(1), dc = shape.dim(2);
    if (static_cast<int>(joint.size()) != da * db * dc)
        throw LengthMismatch("joint distribution length does not match dims");

    double sum = 0.0;
    for (double p : joint) {
        if (p <= 0.0) throw NotPositive("joint distribution must be strictly positive");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::trace)
        throw InvariantViolation("joint distribution sums to " + std::to_string(sum));

    auto p3 = [&](int a, int b, int c) { return joint[(a * db + b) * dc + c]; };
    // p(a,b,c) p(b) == p(a,b) p(b,c) for all entries
    for (int b = 0; b < db; ++b) {
        double pb = 0.0;
        for (int a = 0; a < da; ++a)
            for (int c = 0; c < dc; ++c) pb += p3(a, b, c);
        for (int a = 0; a < da; ++a) {
            double pab = 0.0;
            for (int c = 0; c < dc; ++c) pab += p3(a, b, c);
            for (int c = 0; c < dc; ++c) {
                double pbc = 0.0;
                for (int a2 = 0; a2 < da; ++a2) pbc += p3(a2, b, c);
                if (std::abs(p3(a, b, c) * pb - pab * pbc) > markov_tol)
                    throw NotMarkov("p(a,b,c) p(b) != p(a,b) p(b,c) at (" + std::to_string(a) +
                                    "," + std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
    }

    int d = shape.total_dim();
    Matrix rho = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) rho(i, i) = joint[i];
    return {DensityOperator(std::move(rho)), shape};
}

std::vector<double> random_markov_distribution(const SystemShape& shape, std::uint64_t seed) {
    if (shape.factors() != 3) throw ShapeMismatch("Markov construction needs three factors");
    int da = shape.dim(0), db = shape.dim(1), dc = shape.dim(2);
    Prng rng(seed);

    auto positive_row = [&rng](int n) {
        std::vector<double> row(n);
        double sum = 0.0;
        for (double& x : row) {
            x = 0.1 + rng.uniform();
            sum += x;
        }
        for (double& x : row) x /= sum;
        return row;
    };

    std::vector<double> pa = positive_row(da);
    std::vector<std::vector<double>> pba(da), pcb(db);
    for (int a = 0; a < da; ++a) pba[a] = positive_row(db);
    for (int b = 0; b < db; ++b) pcb[b] = positive_row(dc);

    std::vector<double> joint(static_cast<std::size_t>(da) * db * dc);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int c = 0; c < dc; ++c)
                joint[(a * db + b) * dc + c] = pa[a] * pba[a][b] * pcb[b][c];
    return joint;
}

MultipartiteState make_product_split_state(const MultipartiteState& rho_a,
                                           const MultipartiteState& rho_b, double pos_tol) {
    if (rho_a.shape().factors() != 2 || rho_b.shape().factors() != 2)
        throw ShapeMismatch("factors must be bipartite states");
    require_positive(rho_a.rho(), pos_tol, "rho_a");
    require_positive(rho_b.rho(), pos_tol, "rho_b");

    Matrix product = kron(rho_a.mat(), rho_b.mat());
    int d1 = rho_a.shape().dim(0);
    int d2 = rho_a.shape().dim(1) * rho_b.shape().dim(0);
    int d3 = rho_b.shape().dim(1);
    return {DensityOperator(std::move(product)), SystemShape({d1, d2, d3})};
}

} // namespace qei
