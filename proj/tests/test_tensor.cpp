#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "qei/entropy.hpp"

#include <cmath>

using namespace qei;
using namespace qei::testing;

namespace {

// Independent index-contraction oracle for tracing out the second factor.
Matrix trace_second_oracle(const Matrix& m, int d1, int d2) {
    Matrix out = Matrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
}

} // namespace

TEST_CASE("kron basics") {
    CHECK(dist(kron(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), Matrix::Identity(6, 6)) ==
          0.0);
    Matrix a(2, 2), b(2, 2);
    a << 1, 0, 0, 0;
    b << 0, 0, 0, 1;
    Matrix expected = Matrix::Zero(4, 4);
    expected(1, 1) = 1.0;
    CHECK(dist(kron(a, b), expected) == 0.0);
}

TEST_CASE("kron trace factorizes") {
    Prng rng(31);
    Matrix a = gaussian_matrix(2, 2, rng);
    Matrix b = gaussian_matrix(3, 3, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) <= 1e-12);
}

TEST_CASE("partial trace of a product state returns the kept factor") {
    DensityOperator rho1 = random_density(2, 41);
    DensityOperator rho2 = random_density(3, 42);
    MultipartiteState s(DensityOperator(kron(rho1.mat(), rho2.mat())), SystemShape({2, 3}));
    CHECK(dist(partial_trace(s, {0}).mat(), rho1.mat()) <= 1e-12);
    CHECK(dist(partial_trace(s, {1}).mat(), rho2.mat()) <= 1e-12);
}

TEST_CASE("partial trace of a maximally entangled pair is maximally mixed") {
    Vector bell = Vector::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    MultipartiteState s(DensityOperator(ket_projector(bell)), SystemShape({2, 2}));
    CHECK(dist(partial_trace(s, {0}).mat(), 0.5 * Matrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("partial trace agrees with the contraction oracle") {
    for (int trial = 0; trial < 10; ++trial) {
        MultipartiteState s(random_density(6, 50 + trial), SystemShape({2, 3}));
        CHECK(dist(partial_trace(s, {0}).mat(), trace_second_oracle(s.mat(), 2, 3)) <= 1e-12);
    }
}

TEST_CASE("partial trace keeps non-contiguous factors in original order") {
    DensityOperator r1 = random_density(2, 45);
    DensityOperator r2 = random_density(3, 46);
    DensityOperator r3 = random_density(2, 47);
    Matrix triple = kron(kron(r1.mat(), r2.mat()), r3.mat());
    MultipartiteState s(DensityOperator(std::move(triple)), SystemShape({2, 3, 2}));
    MultipartiteState kept = partial_trace(s, {0, 2});
    CHECK(kept.shape().dims() == std::vector<int>{2, 2});
    CHECK(dist(kept.mat(), kron(r1.mat(), r3.mat())) <= 1e-12);
}

TEST_CASE("partial trace rejects bad subsystem sets") {
    MultipartiteState s(random_density(4, 55), SystemShape({2, 2}));
    CHECK_THROWS_AS(partial_trace(s, {2}), BadSubsystemIndex);
    CHECK_THROWS_AS(partial_trace(s, std::vector<int>{}), BadSubsystemIndex);
}

TEST_CASE("embed places operators with identity padding") {
    DensityOperator rho2 = random_density(3, 61);
    SystemShape shape({2, 3});
    CHECK(dist(embed(rho2.mat(), shape, {1}), kron(Matrix::Identity(2, 2), rho2.mat())) <=
          1e-14);
    CHECK(dist(embed(Matrix::Identity(3, 3), shape, {1}), Matrix::Identity(6, 6)) == 0.0);
}

TEST_CASE("embed satisfies the partial-trace duality pairing") {
    SystemShape shape({2, 2, 3});
    for (int trial = 0; trial < 10; ++trial) {
        Prng rng(70 + trial);
        Matrix x = gaussian_matrix(12, 12, rng);
        Matrix a = gaussian_matrix(6, 6, rng); // operator on factors {0, 2}
        Complex lhs = hs_inner(partial_trace(x, shape, {0, 2}), a);
        Complex rhs = hs_inner(x, embed(a, shape, {0, 2}));
        CHECK(std::abs(lhs - rhs) <= 1e-11);
    }
}

TEST_CASE("embed checks operator size") {
    CHECK_THROWS_AS(embed(Matrix::Identity(2, 2), SystemShape({2, 3}), {1}), ShapeMismatch);
}

TEST_CASE("permute_subsystems identity and swap") {
    MultipartiteState s(random_density(6, 80), SystemShape({2, 3}));
    CHECK(dist(permute_subsystems(s, {0, 1}).mat(), s.mat()) == 0.0);

    DensityOperator rho1 = random_density(2, 81);
    DensityOperator rho2 = random_density(3, 82);
    MultipartiteState prod(DensityOperator(kron(rho1.mat(), rho2.mat())), SystemShape({2, 3}));
    MultipartiteState swapped = permute_subsystems(prod, {1, 0});
    CHECK(swapped.shape().dims() == std::vector<int>{3, 2});
    CHECK(dist(swapped.mat(), kron(rho2.mat(), rho1.mat())) <= 1e-13);
}

TEST_CASE("entropy is invariant under subsystem permutation") {
    MultipartiteState s(random_density(12, 83), SystemShape({2, 3, 2}));
    MultipartiteState p = permute_subsystems(s, {2, 0, 1});
    CHECK(std::abs(von_neumann_entropy(p.rho()) - von_neumann_entropy(s.rho())) <= 1e-12);
}

TEST_CASE("partial traces commute with relabeling") {
    MultipartiteState s(random_density(12, 86), SystemShape({2, 3, 2}));
    std::vector<int> perm = {2, 0, 1}; // new factor k is old factor perm[k]
    MultipartiteState permuted = permute_subsystems(s, perm);
    for (int k = 0; k < 3; ++k)
        CHECK(dist(partial_trace(permuted, {k}).mat(), partial_trace(s, {perm[k]}).mat()) <=
              1e-13);
}

TEST_CASE("permute_subsystems validates the permutation") {
    MultipartiteState s(random_density(4, 84), SystemShape({2, 2}));
    CHECK_THROWS_AS(permute_subsystems(s, {0, 0}), BadPermutation);
    CHECK_THROWS_AS(permute_subsystems(s, {0}), BadPermutation);
}

TEST_CASE("purification of a pure state stays pure and reduces correctly") {
    Matrix pure = Matrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    MultipartiteState p = purify(DensityOperator(pure));
    CHECK(p.shape().dims() == std::vector<int>{2, 2});
    CHECK(dist(partial_trace(p, {0}).mat(), pure) <= 1e-12);
    Spectrum s = eig_hermitian(p.rho().hermitian());
    CHECK(s.eigenvalues.maxCoeff() >= 1.0 - 1e-10);
}

TEST_CASE("purification of the maximally mixed qubit is the Bell projector") {
    MultipartiteState p = purify(DensityOperator(0.5 * Matrix::Identity(2, 2)));
    Vector bell = Vector::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    CHECK(dist(p.mat(), ket_projector(bell)) <= 1e-12);
}

TEST_CASE("purification round-trips and balances entropies") {
    for (int trial = 0; trial < 10; ++trial) {
        DensityOperator rho = random_density(3, 90 + trial);
        MultipartiteState p = purify(rho);
        CHECK(dist(partial_trace(p, {0}).mat(), rho.mat()) <= 1e-10);
        double s1 = von_neumann_entropy(partial_trace(p, {0}).rho());
        double s2 = von_neumann_entropy(partial_trace(p, {1}).rho());
        CHECK(std::abs(s1 - s2) <= 1e-9);
        // exactly one eigenvalue near 1
        Spectrum spec = eig_hermitian(p.rho().hermitian());
        int big = 0;
        for (int i = 0; i < spec.eigenvalues.size(); ++i)
            if (spec.eigenvalues[i] >= 1.0 - 1e-10) ++big;
        CHECK(big == 1);
    }
}

TEST_CASE("purifying a tripartite state balances S(rho_4) with S(rho_123)") {
    MultipartiteState s123(random_density(8, 95), SystemShape({2, 2, 2}));
    MultipartiteState p = purify(s123.rho()); // shape [8, 8]
    MultipartiteState s1234(p.rho(), SystemShape({2, 2, 2, 8}));
    double s4 = von_neumann_entropy(partial_trace(s1234, {3}).rho());
    CHECK(std::abs(s4 - von_neumann_entropy(s123.rho())) <= 1e-9);
}
