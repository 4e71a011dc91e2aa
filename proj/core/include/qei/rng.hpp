// rng.hpp — splittable counter-based generator; every stochastic op takes a seed
#pragma once

#include "qei/types.hpp"

#include <cstdint>

namespace qei {

// SplitMix64 stream. A child stream obtained from split(k) depends only on
// (seed, k), never on how many values the parent has drawn, so batches of
// trials can run in any order or concurrently and still reproduce.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    Prng split(std::uint64_t stream) const;

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double uniform();

    // Standard normal via Box-Muller; draws are pairwise cached.
    double gaussian();

    // Complex with independent N(0,1) real and imaginary parts.
    Complex cgaussian();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Entries are independent complex Gaussians (Ginibre ensemble).
Matrix gaussian_matrix(int rows, int cols, Prng& rng);

Matrix random_hermitian(int dim, Prng& rng);

// GG^dag / dim + floor * I; strictly positive for floor > 0.
Matrix random_positive(int dim, Prng& rng, double floor = 0.1);

// Haar-ish unitary from the QR of a Ginibre matrix.
Matrix random_unitary(int dim, Prng& rng);

} // namespace qei
