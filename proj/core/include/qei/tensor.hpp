// tensor.hpp — multipartite structure: tensor products, partial traces,
// embeddings, subsystem permutations, purification
#pragma once

#include "qei/linalg.hpp"

#include <vector>

namespace qei {

// Ordered subsystem dimensions. Factor 0 is the most significant index
// (Kronecker convention), matching 1-based labels 1,2,3,... externally.
class SystemShape {
public:
    explicit SystemShape(std::vector<int> dims);

    int factors() const { return static_cast<int>(dims_.size()); }
    int dim(int k) const { return dims_[k]; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const { return total_; }

private:
    std::vector<int> dims_;
    int total_;
};

class MultipartiteState {
public:
    MultipartiteState(DensityOperator rho, SystemShape shape);

    const DensityOperator& rho() const { return rho_; }
    const SystemShape& shape() const { return shape_; }
    const Matrix& mat() const { return rho_.mat(); }
    int dim() const { return rho_.dim(); }

private:
    DensityOperator rho_;
    SystemShape shape_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Contract over the factors not in `keep` (0-based positions); kept factors
// stay in original order. Matrix overload accepts any square operator.
Matrix partial_trace(const Matrix& m, const SystemShape& shape, const std::vector<int>& keep);
MultipartiteState partial_trace(const MultipartiteState& s, const std::vector<int>& keep);

// Place `a` on the factors listed in `positions` (0-based, ascending in shape
// order) and identity elsewhere. Adjoint of partial_trace under hs_inner.
Matrix embed(const Matrix& a, const SystemShape& shape, const std::vector<int>& positions);
HermitianOperator embed(const HermitianOperator& a, const SystemShape& shape,
                        const std::vector<int>& positions);

// New factor k is old factor perm[k].
MultipartiteState permute_subsystems(const MultipartiteState& s, const std::vector<int>& perm);

// Pure state on shape [d, d] whose first reduction is rho. Schmidt vectors
// follow ascending-eigenvalue order; factor-2 basis is the standard basis.
MultipartiteState purify(const DensityOperator& rho);

} // namespace qei
