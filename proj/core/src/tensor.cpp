#include "qei/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qei {

namespace {

// Row-major digit decomposition of a composite index, factor 0 most significant.
std::vector<int> digits_of(int index, const std::vector<int>& dims) {
    std::vector<int> out(dims.size());
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    return out;
}

int index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
    int idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
    return idx;
}

void check_positions(const std::vector<int>& pos, int nfactors, const char* what) {
    if (pos.empty()) throw BadSubsystemIndex(std::string(what) + ": empty index set");
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] < 0 || pos[i] >= nfactors)
            throw BadSubsystemIndex(std::string(what) + ": index " + std::to_string(pos[i]) +
                                    " out of range for " + std::to_string(nfactors) + " factors");
        if (i > 0 && pos[i] <= pos[i - 1])
            throw BadSubsystemIndex(std::string(what) + ": indices must be strictly ascending");
    }
}

} // namespace

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw BadDimensions("shape needs at least one factor");
    total_ = 1;
    for (int d : dims_) {
        if (d < 1) throw BadDimensions("subsystem dimension must be >= 1");
        total_ *= d;
    }
}

MultipartiteState::MultipartiteState(DensityOperator rho, SystemShape shape)
    : rho_(std::move(rho)), shape_(std::move(shape)) {
    if (shape_.total_dim() != rho_.dim())
        throw ShapeMismatch("shape product " + std::to_string(shape_.total_dim()) +
                            " does not match operator dimension " + std::to_string(rho_.dim()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, const SystemShape& shape, const std::vector<int>& keep) {
    check_positions(keep, shape.factors(), "partial_trace");
    if (m.rows() != shape.total_dim() || m.cols() != shape.total_dim())
        throw ShapeMismatch("operator does not match shape");

    std::vector<int> traced;
    for (int k = 0; k < shape.factors(); ++k)
        if (std::find(keep.begin(), keep.end(), k) == keep.end()) traced.push_back(k);

    std::vector<int> kept_dims, traced_dims;
    for (int k : keep) kept_dims.push_back(shape.dim(k));
    for (int k : traced) traced_dims.push_back(shape.dim(k));
    int dk = std::accumulate(kept_dims.begin(), kept_dims.end(), 1, std::multiplies<int>());
    int dt = std::accumulate(traced_dims.begin(), traced_dims.end(), 1, std::multiplies<int>());

    Matrix out = Matrix::Zero(dk, dk);
    std::vector<int> full(shape.factors());
    for (int i = 0; i < dk; ++i) {
        std::vector<int> di = digits_of(i, kept_dims);
        for (int j = 0; j < dk; ++j) {
            std::vector<int> dj = digits_of(j, kept_dims);
            Complex sum = 0.0;
            for (int t = 0; t < dt; ++t) {
                std::vector<int> dtr = digits_of(t, traced_dims);
                for (std::size_t k = 0; k < keep.size(); ++k) full[keep[k]] = di[k];
                for (std::size_t k = 0; k < traced.size(); ++k) full[traced[k]] = dtr[k];
                int row = index_of(full, shape.dims());
                for (std::size_t k = 0; k < keep.size(); ++k) full[keep[k]] = dj[k];
                int col = index_of(full, shape.dims());
                sum += m(row, col);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

MultipartiteState partial_trace(const MultipartiteState& s, const std::vector<int>& keep) {
    Matrix reduced = partial_trace(s.mat(), s.shape(), keep);
    std::vector<int> kept_dims;
    for (int k : keep) kept_dims.push_back(s.shape().dim(k));
    return {DensityOperator(0.5 * (reduced + reduced.adjoint().eval())), SystemShape(kept_dims)};
}

Matrix embed(const Matrix& a, const SystemShape& shape, const std::vector<int>& positions) {
    check_positions(positions, shape.factors(), "embed");
    std::vector<int> pos_dims;
    for (int k : positions) pos_dims.push_back(shape.dim(k));
    int da = std::accumulate(pos_dims.begin(), pos_dims.end(), 1, std::multiplies<int>());
    if (a.rows() != da || a.cols() != da)
        throw ShapeMismatch("embedded operator dimension " + std::to_string(a.rows()) +
                            " does not match selected factors (" + std::to_string(da) + ")");

    int d = shape.total_dim();
    Matrix out = Matrix::Zero(d, d);
    for (int r = 0; r < d; ++r) {
        std::vector<int> dr = digits_of(r, shape.dims());
        for (int c = 0; c < d; ++c) {
            std::vector<int> dc = digits_of(c, shape.dims());
            bool same_elsewhere = true;
            for (int k = 0; k < shape.factors() && same_elsewhere; ++k) {
                if (std::find(positions.begin(), positions.end(), k) == positions.end() &&
                    dr[k] != dc[k])
                    same_elsewhere = false;
            }
            if (!same_elsewhere) continue;
            std::vector<int> ar, ac;
            for (int k : positions) {
                ar.push_back(dr[k]);
                ac.push_back(dc[k]);
            }
            out(r, c) = a(index_of(ar, pos_dims), index_of(ac, pos_dims));
        }
    }
    return out;
}

HermitianOperator embed(const HermitianOperator& a, const SystemShape& shape,
                        const std::vector<int>& positions) {
    return HermitianOperator(embed(a.mat(), shape, positions));
}

MultipartiteState permute_subsystems(const MultipartiteState& s, const std::vector<int>& perm) {
    int n = s.shape().factors();
    if (static_cast<int>(perm.size()) != n) throw BadPermutation("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw BadPermutation("not a permutation of 0..n-1");
        seen[p] = true;
    }

    std::vector<int> new_dims(n);
    for (int k = 0; k < n; ++k) new_dims[k] = s.shape().dim(perm[k]);
    SystemShape new_shape(new_dims);

    int d = s.dim();
    Matrix out(d, d);
    for (int r = 0; r < d; ++r) {
        std::vector<int> dr = digits_of(r, s.shape().dims());
        std::vector<int> nr(n);
        for (int k = 0; k < n; ++k) nr[k] = dr[perm[k]];
        int pr = index_of(nr, new_dims);
        for (int c = 0; c < d; ++c) {
            std::vector<int> dc = digits_of(c, s.shape().dims());
            std::vector<int> nc(n);
            for (int k = 0; k < n; ++k) nc[k] = dc[perm[k]];
            out(pr, index_of(nc, new_dims)) = s.mat()(r, c);
        }
    }
    return {DensityOperator(std::move(out)), new_shape};
}

MultipartiteState purify(const DensityOperator& rho) {
    Spectrum s = eig_hermitian(rho.hermitian());
    int d = rho.dim();
    Vector psi = Vector::Zero(d * d);
    for (int i = 0; i < d; ++i) {
        double lam = std::max(s.eigenvalues[i], 0.0);
        double coeff = std::sqrt(lam);
        // psi += coeff * (v_i (x) e_i)
        for (int a = 0; a < d; ++a) psi[a * d + i] += coeff * s.eigenvectors(a, i);
    }
    Matrix proj = psi * psi.adjoint();
    // renormalize: clipped negatives can leave the trace a hair under 1
    proj /= proj.trace().real();
    return {DensityOperator(0.5 * (proj + proj.adjoint().eval())), SystemShape({d, d})};
}

} // namespace qei
