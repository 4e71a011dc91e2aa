// test_support.hpp — shared helpers for the unit suites
#pragma once

#include "qei/channels.hpp"

#include <doctest.h>

namespace qei::testing {

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline Matrix ket_projector(const Vector& v) { return v * v.adjoint(); }

inline Vector basis_ket(int dim, int k) {
    Vector v = Vector::Zero(dim);
    v[k] = 1.0;
    return v;
}

// Ginibre density mixed toward the identity so every eigenvalue is
// comfortably positive (log-based residuals need strict positivity).
inline DensityOperator full_rank_density(int dim, std::uint64_t seed) {
    Prng rng(seed);
    Matrix p = random_positive(dim, rng, 0.1);
    p /= p.trace().real();
    return DensityOperator(0.5 * (p + p.adjoint().eval()));
}

inline double dist(const Matrix& a, const Matrix& b) { return frobenius(a - b); }

} // namespace qei::testing
