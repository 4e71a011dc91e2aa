#include "qei/rng.hpp"

#include <Eigen/QR>

#include <cmath>

namespace qei {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

Prng Prng::split(std::uint64_t stream) const {
    return Prng(mix64(seed_ + (stream + 1) * kGolden));
}

std::uint64_t Prng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double Prng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Prng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform(); // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Complex Prng::cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
}

Matrix gaussian_matrix(int rows, int cols, Prng& rng) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = rng.cgaussian();
    return m;
}

Matrix random_hermitian(int dim, Prng& rng) {
    Matrix g = gaussian_matrix(dim, dim, rng);
    return 0.5 * (g + g.adjoint());
}

Matrix random_positive(int dim, Prng& rng, double floor) {
    Matrix g = gaussian_matrix(dim, dim, rng);
    Matrix p = (g * g.adjoint()) / static_cast<double>(dim);
    return p + floor * Matrix::Identity(dim, dim);
}

Matrix random_unitary(int dim, Prng& rng) {
    Matrix g = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    // Fix the phase of each column so the result is unique given g.
    Matrix r = q.adjoint() * g;
    for (int j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        double a = std::abs(d);
        if (a > 0) q.col(j) *= d / a;
    }
    return q;
}

} // namespace qei
