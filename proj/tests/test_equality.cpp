#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "qei/equality.hpp"
#include "qei/inequalities.hpp"

#include <cmath>

using namespace qei;
using namespace qei::testing;

namespace {

MultipartiteState triple_product(std::uint64_t seed) {
    Prng rng(seed);
    DensityOperator r1 = full_rank_density(2, rng.split(0).seed());
    DensityOperator r2 = full_rank_density(2, rng.split(1).seed());
    DensityOperator r3 = full_rank_density(2, rng.split(2).seed());
    return {DensityOperator(kron(kron(r1.mat(), r2.mat()), r3.mat())), SystemShape({2, 2, 2})};
}

MultipartiteState split_state(std::uint64_t seed) {
    Prng rng(seed);
    MultipartiteState a(full_rank_density(4, rng.split(0).seed()), SystemShape({2, 2}));
    MultipartiteState b(full_rank_density(4, rng.split(1).seed()), SystemShape({2, 2}));
    return make_product_split_state(a, b);
}

} // namespace

TEST_CASE("ssa equality residual vanishes on triple products") {
    CHECK(ssa_equality_residual(triple_product(1)).residual <= 1e-10);
}

TEST_CASE("ssa equality residual vanishes on product-split states") {
    CHECK(ssa_equality_residual(split_state(2)).residual <= 1e-9);
}

TEST_CASE("generic states have large residual and positive gap") {
    MultipartiteState s(full_rank_density(8, 3), SystemShape({2, 2, 2}));
    ResidualReport r = ssa_equality_residual(s);
    CHECK(r.residual > 1e-2);
    CHECK_FALSE(r.satisfied);
    CHECK(check_ssa(s).gap > 1e-6);
}

TEST_CASE("ssa equality residual requires strict positivity") {
    Vector ghz = Vector::Zero(8);
    ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
    MultipartiteState s(DensityOperator(ket_projector(ghz)), SystemShape({2, 2, 2}));
    CHECK_THROWS_AS(ssa_equality_residual(s), SingularState);
}

TEST_CASE("petz residual vanishes on the two equality classes") {
    CHECK(petz_residual(split_state(4)).residual <= 1e-9);
    SystemShape shape({2, 3, 2});
    MultipartiteState markov =
        make_markov_state(random_markov_distribution(shape, 5), shape);
    CHECK(petz_residual(markov).residual <= 1e-9);
}

TEST_CASE("petz residual is large on generic states") {
    MultipartiteState s(full_rank_density(8, 6), SystemShape({2, 2, 2}));
    CHECK(petz_residual(s).residual > 1e-3);
}

TEST_CASE("petz derivative at zero reproduces the ssa residual") {
    for (std::uint64_t seed : {7ull, 8ull}) {
        MultipartiteState s(full_rank_density(8, seed), SystemShape({2, 2, 2}));
        double lhs = petz_derivative_norm(s);
        double rhs = ssa_equality_residual(s).residual;
        CHECK(std::abs(lhs - rhs) <= 1e-6);
    }
    MultipartiteState eq = split_state(9);
    CHECK(petz_derivative_norm(eq) <= 1e-7);
}

TEST_CASE("mpt equality residual") {
    SystemShape shape({2, 3});
    MultipartiteState rho(full_rank_density(6, 10), shape);
    CHECK(mpt_equality_residual(rho, rho).residual <= 1e-10);

    Prng rng(11);
    DensityOperator r1 = full_rank_density(2, rng.split(0).seed());
    DensityOperator r2 = full_rank_density(3, rng.split(1).seed());
    DensityOperator g2 = full_rank_density(3, rng.split(2).seed());
    MultipartiteState prod_r(DensityOperator(kron(r1.mat(), r2.mat())), shape);
    MultipartiteState prod_g(DensityOperator(kron(r1.mat(), g2.mat())), shape);
    CHECK(mpt_equality_residual(prod_r, prod_g).residual <= 1e-9);

    MultipartiteState gamma(full_rank_density(6, 12), shape);
    ResidualReport generic = mpt_equality_residual(rho, gamma);
    CHECK(generic.residual > 1e-3);
    CHECK(check_mpt(rho, gamma).gap > 1e-6);
}

TEST_CASE("jc equality residual") {
    DensityOperator rho = full_rank_density(3, 13);
    DensityOperator gamma = full_rank_density(3, 14);
    std::vector<WeightedPair> identical = {{0.4, rho, gamma}, {0.6, rho, gamma}};
    CHECK(jc_equality_residual(identical).residual <= 1e-10);

    // gamma^(k) = rho^(k): both log-differences vanish identically
    DensityOperator rho2 = full_rank_density(3, 15);
    std::vector<WeightedPair> diagonal_case = {{0.5, rho, rho}, {0.5, rho2, rho2}};
    ResidualReport r = jc_equality_residual(diagonal_case);
    CHECK(r.residual <= 1e-9);
    CHECK(r.satisfied);

    std::vector<WeightedPair> generic = {{0.5, rho, gamma},
                                         {0.5, rho2, full_rank_density(3, 16)}};
    CHECK(jc_equality_residual(generic).residual > 1e-3);
}

TEST_CASE("monotonicity equality residual for unitary channels") {
    Prng rng(17);
    KrausChannel uni = unitary_channel(random_unitary(3, rng));
    DensityOperator rho = full_rank_density(3, 18);
    DensityOperator gamma = full_rank_density(3, 19);
    CHECK(mono_equality_residual(uni, rho, gamma).residual <= 1e-10);
}

TEST_CASE("monotonicity equality reduces to the partial-trace case") {
    SystemShape shape({2, 2});
    KrausChannel tr = partial_trace_channel(shape, {1});
    Prng rng(20);
    DensityOperator r1 = full_rank_density(2, rng.split(0).seed());
    DensityOperator r2 = full_rank_density(2, rng.split(1).seed());
    DensityOperator g2 = full_rank_density(2, rng.split(2).seed());
    DensityOperator rho(kron(r1.mat(), r2.mat()));
    DensityOperator gamma(kron(r1.mat(), g2.mat()));
    ResidualReport r = mono_equality_residual(tr, rho, gamma);
    CHECK(r.residual <= 1e-9);
    // sufficiency: the monotonicity gap closes
    CHECK(std::abs(check_monotonicity(tr, rho, gamma).gap) <= 1e-8);
}

TEST_CASE("monotonicity equality residual is positive for random channels") {
    Prng rng(21);
    KrausChannel phi = random_channel(3, 3, 2, rng.split(0).seed());
    DensityOperator rho = full_rank_density(3, rng.split(1).seed());
    DensityOperator gamma = full_rank_density(3, rng.split(2).seed());
    CHECK(mono_equality_residual(phi, rho, gamma).residual > 1e-4);
    CHECK(check_monotonicity(phi, rho, gamma).gap > 1e-8);
}

TEST_CASE("vv commutation residuals vanish exactly when equality holds") {
    Prng rng(22);
    KrausChannel uni = unitary_channel(random_unitary(3, rng));
    DensityOperator rho = full_rank_density(3, 23);
    DensityOperator gamma = full_rank_density(3, 24);
    ResidualReport r = vv_commutation_residual(uni, rho, gamma);
    CHECK(r.components.at("projector_commutator") <= 1e-10);
    CHECK(r.components.at("range_condition") <= 1e-10);

    // necessity on a constructed equality instance
    SystemShape shape({2, 2});
    KrausChannel tr = partial_trace_channel(shape, {1});
    DensityOperator r1 = full_rank_density(2, rng.split(5).seed());
    DensityOperator r2 = full_rank_density(2, rng.split(6).seed());
    DensityOperator g2 = full_rank_density(2, rng.split(7).seed());
    ResidualReport eq = vv_commutation_residual(tr, DensityOperator(kron(r1.mat(), r2.mat())),
                                                DensityOperator(kron(r1.mat(), g2.mat())));
    CHECK(eq.components.at("projector_commutator") <= 1e-8);
    CHECK(eq.components.at("range_condition") <= 1e-8);

    KrausChannel phi = random_channel(3, 3, 2, rng.split(8).seed());
    ResidualReport generic = vv_commutation_residual(phi, rho, gamma);
    CHECK(generic.residual > 1e-6);
}

TEST_CASE("markov construction") {
    SystemShape shape({2, 2, 2});
    std::vector<double> uniform(8, 1.0 / 8.0);
    MultipartiteState u = make_markov_state(uniform, shape);
    CHECK(dist(u.mat(), Matrix::Identity(8, 8) / 8.0) <= 1e-14);
    CHECK(std::abs(check_ssa(u).gap) <= 1e-10);

    for (std::uint64_t seed : {30ull, 31ull, 32ull}) {
        SystemShape s232({2, 3, 2});
        MultipartiteState m =
            make_markov_state(random_markov_distribution(s232, seed), s232);
        CHECK(std::abs(check_ssa(m).gap) <= 1e-10);
        CHECK(ssa_equality_residual(m).residual <= 1e-9);
    }

    // deliberately non-Markov distribution
    std::vector<double> bad = {0.3, 0.1, 0.05, 0.05, 0.05, 0.15, 0.25, 0.05};
    CHECK_THROWS_AS(make_markov_state(bad, shape), NotMarkov);
}

TEST_CASE("product-split construction hits equality and perturbation breaks it") {
    MultipartiteState s = split_state(33);
    CHECK(std::abs(check_ssa(s).gap) <= 1e-10);
    CHECK(ssa_equality_residual(s).residual <= 1e-9);

    // triple product of factors is a special split
    MultipartiteState t = triple_product(34);
    CHECK(std::abs(check_ssa(t).gap) <= 1e-10);

    // mixing toward a generic state opens the gap
    MultipartiteState generic(full_rank_density(16, 35), s.shape());
    Matrix mixed = 0.7 * s.mat() + 0.3 * generic.mat();
    MultipartiteState perturbed(DensityOperator(std::move(mixed)), s.shape());
    CHECK(check_ssa(perturbed).gap > 1e-6);
    CHECK(ssa_equality_residual(perturbed).residual > 1e-3);
}

TEST_CASE("sampled necessity: tiny gap implies tiny residual") {
    for (int trial = 0; trial < 50; ++trial) {
        MultipartiteState s(random_density(8, 4000 + trial), SystemShape({2, 2, 2}));
        if (!s.rho().strictly_positive()) continue;
        VerdictReport v = check_ssa(s);
        if (v.gap <= 1e-10) CHECK(ssa_equality_residual(s).residual <= 1e-6);
    }
}
