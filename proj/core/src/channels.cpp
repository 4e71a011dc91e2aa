#include "qei/channels.hpp"

#include <Eigen/QR>

#include <cmath>

namespace qei {

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops, int in_dim, int out_dim,
                           double tp_tol)
    : kraus_(std::move(kraus_ops)), in_(in_dim), out_(out_dim) {
    if (kraus_.empty()) throw BadDimensions("channel needs at least one Kraus operator");
    if (in_ < 1 || out_ < 1) throw BadDimensions("channel dimensions must be positive");
    Matrix sum = Matrix::Zero(in_, in_);
    for (const Matrix& f : kraus_) {
        if (f.rows() != out_ || f.cols() != in_)
            throw ShapeMismatch("Kraus operator is " + std::to_string(f.rows()) + "x" +
                                std::to_string(f.cols()) + ", expected " + std::to_string(out_) +
                                "x" + std::to_string(in_));
        sum += f.adjoint() * f;
    }
    double dev = frobenius(sum - Matrix::Identity(in_, in_));
    if (dev > tp_tol)
        throw InvariantViolation("sum F^dag F deviates from identity by " + std::to_string(dev));
}

StinespringIsometry::StinespringIsometry(Matrix v, int env_dim, int out_dim, bool env_first)
    : v_(std::move(v)), env_(env_dim), out_(out_dim), env_first_(env_first) {
    if (v_.rows() != static_cast<long>(env_) * out_)
        throw ShapeMismatch("isometry rows do not match env * out");
    double dev = frobenius((v_.adjoint() * v_ - Matrix::Identity(v_.cols(), v_.cols())).eval());
    if (dev > 1e-10)
        throw InvariantViolation("V^dag V deviates from identity by " + std::to_string(dev));
}

Povm::Povm(std::vector<HermitianOperator> elements, double sum_tol)
    : elements_(std::move(elements)) {
    if (elements_.empty()) throw BadDimensions("POVM needs at least one element");
    int d = elements_.front().dim();
    Matrix sum = Matrix::Zero(d, d);
    for (const auto& e : elements_) {
        if (e.dim() != d) throw DimMismatch("POVM elements have mixed dimensions");
        Eigen::SelfAdjointEigenSolver<Matrix> solver(e.mat(), Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() < -tol::psd)
            throw NotPositive("POVM element has eigenvalue " +
                              std::to_string(solver.eigenvalues().minCoeff()));
        sum += e.mat();
    }
    double dev = frobenius(sum - Matrix::Identity(d, d));
    if (dev > sum_tol)
        throw InvariantViolation("POVM elements sum deviates from identity by " +
                                 std::to_string(dev));
}

Ensemble::Ensemble(ProbabilityVector weights, std::vector<DensityOperator> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
    if (weights_.size() != states_.size())
        throw LengthMismatch("ensemble weights and states differ in length");
    int d = states_.front().dim();
    for (const auto& s : states_)
        if (s.dim() != d) throw DimMismatch("ensemble states have mixed dimensions");
}

DensityOperator Ensemble::average() const {
    Matrix avg = Matrix::Zero(dim(), dim());
    for (int j = 0; j < size(); ++j) avg += weights_[j] * states_[j].mat();
    return DensityOperator(std::move(avg));
}

DensityOperator apply(const KrausChannel& phi, const DensityOperator& rho) {
    if (rho.dim() != phi.in_dim()) throw DimMismatch("state does not match channel input");
    Matrix out = apply_matrix(phi, rho.mat());
    return DensityOperator(0.5 * (out + out.adjoint().eval()));
}

Matrix apply_matrix(const KrausChannel& phi, const Matrix& x) {
    if (x.rows() != phi.in_dim() || x.cols() != phi.in_dim())
        throw DimMismatch("operator does not match channel input");
    Matrix out = Matrix::Zero(phi.out_dim(), phi.out_dim());
    for (const Matrix& f : phi.kraus()) out += f * x * f.adjoint();
    return out;
}

HermitianOperator adjoint_apply(const KrausChannel& phi, const HermitianOperator& x) {
    Matrix out = adjoint_apply_matrix(phi, x.mat());
    return HermitianOperator(0.5 * (out + out.adjoint().eval()));
}

Matrix adjoint_apply_matrix(const KrausChannel& phi, const Matrix& x) {
    if (x.rows() != phi.out_dim() || x.cols() != phi.out_dim())
        throw DimMismatch("operator does not match channel output");
    Matrix out = Matrix::Zero(phi.in_dim(), phi.in_dim());
    for (const Matrix& f : phi.kraus()) out += f.adjoint() * x * f;
    return out;
}

StinespringIsometry stinespring(const KrausChannel& phi) {
    int m = phi.kraus_count();
    Matrix v(static_cast<long>(m) * phi.out_dim(), phi.in_dim());
    for (int k = 0; k < m; ++k)
        v.block(static_cast<long>(k) * phi.out_dim(), 0, phi.out_dim(), phi.in_dim()) =
            phi.kraus()[k];
    return {std::move(v), m, phi.out_dim()};
}

KrausChannel compose(const KrausChannel& phi, const KrausChannel& psi) {
    if (psi.out_dim() != phi.in_dim()) throw DimMismatch("channel composition dims");
    std::vector<Matrix> ops;
    ops.reserve(static_cast<std::size_t>(phi.kraus_count()) * psi.kraus_count());
    for (const Matrix& f : phi.kraus())
        for (const Matrix& g : psi.kraus()) ops.push_back(f * g);
    return {std::move(ops), psi.in_dim(), phi.out_dim()};
}

KrausChannel qc_channel(const Povm& m) {
    int d = m.dim();
    int n = m.outcomes();
    std::vector<Matrix> ops;
    ops.reserve(static_cast<std::size_t>(n) * d);
    for (int b = 0; b < n; ++b) {
        HermitianOperator root = matrix_sqrt(m.elements()[b]);
        // F_{bk} = |b><k| sqrt(E_b): row b carries the k-th row of sqrt(E_b)
        for (int k = 0; k < d; ++k) {
            Matrix f = Matrix::Zero(n, d);
            f.row(b) = root.mat().row(k);
            ops.push_back(std::move(f));
        }
    }
    return {std::move(ops), d, n};
}

ProjectiveLift povm_to_projective(const Povm& m) {
    int d = m.dim();
    int n = m.outcomes();
    // V: H -> H (x) C^n, row index (a, b) -> a*n + b
    Matrix v = Matrix::Zero(static_cast<long>(d) * n, d);
    for (int b = 0; b < n; ++b) {
        Matrix root = matrix_sqrt(m.elements()[b]).mat();
        for (int a = 0; a < d; ++a)
            for (int j = 0; j < d; ++j) v(static_cast<long>(a) * n + b, j) = root(a, j);
    }
    std::vector<HermitianOperator> projectors;
    projectors.reserve(n);
    Matrix eye = Matrix::Identity(d, d);
    for (int b = 0; b < n; ++b) {
        Matrix pb = Matrix::Zero(n, n);
        pb(b, b) = 1.0;
        projectors.emplace_back(kron(eye, pb));
    }
    StinespringIsometry iso(std::move(v), n, d, /*env_first=*/false);
    return {std::move(iso), Povm(std::move(projectors))};
}

KrausChannel partial_trace_channel(const SystemShape& shape, const std::vector<int>& keep) {
    int d = shape.total_dim();
    // Build bras <t| over the traced factors via embed of basis projections;
    // F_t = (kept-identity pattern) selecting traced digit t.
    std::vector<int> traced;
    for (int k = 0; k < shape.factors(); ++k)
        if (std::find(keep.begin(), keep.end(), k) == keep.end()) traced.push_back(k);
    std::vector<int> kept_dims, traced_dims;
    for (int k : keep) kept_dims.push_back(shape.dim(k));
    for (int k : traced) traced_dims.push_back(shape.dim(k));
    int dk = 1;
    for (int x : kept_dims) dk *= x;
    int dt = 1;
    for (int x : traced_dims) dt *= x;

    auto digits_of = [](int index, const std::vector<int>& dims) {
        std::vector<int> out(dims.size());
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            out[k] = index % dims[k];
            index /= dims[k];
        }
        return out;
    };
    auto index_of = [](const std::vector<int>& digits, const std::vector<int>& dims) {
        int idx = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
        return idx;
    };

    std::vector<Matrix> ops;
    ops.reserve(dt);
    std::vector<int> full(shape.factors());
    for (int t = 0; t < dt; ++t) {
        std::vector<int> dtr = digits_of(t, traced_dims);
        Matrix f = Matrix::Zero(dk, d);
        for (int i = 0; i < dk; ++i) {
            std::vector<int> di = digits_of(i, kept_dims);
            for (std::size_t k = 0; k < keep.size(); ++k) full[keep[k]] = di[k];
            for (std::size_t k = 0; k < traced.size(); ++k) full[traced[k]] = dtr[k];
            f(i, index_of(full, shape.dims())) = 1.0;
        }
        ops.push_back(std::move(f));
    }
    return {std::move(ops), d, dk};
}

KrausChannel unitary_channel(const Matrix& u) {
    int d = static_cast<int>(u.rows());
    return {{u}, d, d};
}

DensityOperator random_density(int dim, std::uint64_t seed) {
    if (dim < 1) throw BadDimensions("dimension must be positive");
    Prng rng(seed);
    Matrix g = gaussian_matrix(dim, dim, rng);
    Matrix p = g * g.adjoint();
    p /= p.trace().real();
    return DensityOperator(0.5 * (p + p.adjoint().eval()));
}

KrausChannel random_channel(int in_dim, int out_dim, int kraus_count, std::uint64_t seed) {
    if (in_dim < 1 || out_dim < 1 || kraus_count < 1)
        throw BadDimensions("channel dimensions must be positive");
    if (kraus_count * out_dim < in_dim)
        throw BadDimensions("kraus_count * out_dim must be at least in_dim");
    Prng rng(seed);
    Matrix g = gaussian_matrix(kraus_count * out_dim, in_dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(kraus_count * out_dim, in_dim);
    std::vector<Matrix> ops;
    ops.reserve(kraus_count);
    for (int k = 0; k < kraus_count; ++k)
        ops.push_back(q.block(static_cast<long>(k) * out_dim, 0, out_dim, in_dim));
    return {std::move(ops), in_dim, out_dim};
}

Povm random_povm(int dim, int n_outcomes, std::uint64_t seed) {
    if (dim < 1 || n_outcomes < 1) throw BadDimensions("POVM dimensions must be positive");
    Prng rng(seed);
    std::vector<Matrix> raw;
    Matrix total = Matrix::Zero(dim, dim);
    for (int b = 0; b < n_outcomes; ++b) {
        Matrix g = gaussian_matrix(dim, dim, rng);
        raw.push_back(g * g.adjoint());
        total += raw.back();
    }
    HermitianOperator s(0.5 * (total + total.adjoint().eval()));
    Matrix s_inv_root =
        matrix_function(s, [](double x) { return 1.0 / std::sqrt(x); }).mat();
    std::vector<HermitianOperator> elements;
    elements.reserve(n_outcomes);
    for (Matrix& a : raw) {
        Matrix e = s_inv_root * a * s_inv_root;
        elements.emplace_back(0.5 * (e + e.adjoint().eval()));
    }
    return Povm(std::move(elements));
}

Ensemble random_ensemble(int dim, int n_states, std::uint64_t seed) {
    if (dim < 1 || n_states < 1) throw BadDimensions("ensemble dimensions must be positive");
    Prng rng(seed);
    std::vector<double> w(n_states);
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - rng.uniform());
        sum += x;
    }
    for (double& x : w) x /= sum;
    std::vector<DensityOperator> states;
    states.reserve(n_states);
    for (int j = 0; j < n_states; ++j) {
        Prng sub = rng.split(static_cast<std::uint64_t>(j));
        states.push_back(random_density(dim, sub.seed()));
    }
    return {ProbabilityVector(std::move(w)), std::move(states)};
}

} // namespace qei
