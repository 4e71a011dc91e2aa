#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <cmath>
#include <cstring>

using namespace qei;
using namespace qei::testing;

TEST_CASE("identity channel returns its input") {
    KrausChannel id({Matrix::Identity(3, 3)}, 3, 3);
    DensityOperator rho = random_density(3, 1);
    CHECK(dist(apply(id, rho).mat(), rho.mat()) <= 1e-14);
}

TEST_CASE("fully depolarizing qubit channel lands on the maximally mixed state") {
    double w = 0.5; // each Pauli scaled by 1/sqrt(4) = 1/2
    std::vector<Matrix> kraus = {w * Matrix::Identity(2, 2), w * pauli_x(), w * pauli_y(),
                                 w * pauli_z()};
    KrausChannel depolarize(std::move(kraus), 2, 2);
    DensityOperator rho = random_density(2, 2);
    CHECK(dist(apply(depolarize, rho).mat(), 0.5 * Matrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("channels preserve trace on random states") {
    for (int trial = 0; trial < 10; ++trial) {
        KrausChannel phi = random_channel(3, 4, 2, 100 + trial);
        DensityOperator rho = random_density(3, 200 + trial);
        CHECK(std::abs(apply(phi, rho).mat().trace().real() - 1.0) <= 1e-12);
    }
}

TEST_CASE("non-trace-preserving Kraus lists are rejected") {
    std::vector<Matrix> bad = {0.5 * Matrix::Identity(2, 2)};
    CHECK_THROWS_AS(KrausChannel(std::move(bad), 2, 2), InvariantViolation);
}

TEST_CASE("adjoint is unital and reverses unitary conjugation") {
    KrausChannel phi = random_channel(3, 3, 3, 5);
    CHECK(dist(adjoint_apply(phi, HermitianOperator(Matrix::Identity(3, 3))).mat(),
               Matrix::Identity(3, 3)) <= 1e-10);

    Prng rng(6);
    Matrix u = random_unitary(3, rng);
    KrausChannel uni = unitary_channel(u);
    HermitianOperator x(random_hermitian(3, rng));
    CHECK(dist(adjoint_apply(uni, x).mat(), u.adjoint() * x.mat() * u) <= 1e-12);
}

TEST_CASE("adjoint satisfies the Hilbert-Schmidt duality") {
    for (int trial = 0; trial < 10; ++trial) {
        Prng rng(300 + trial);
        KrausChannel phi = random_channel(3, 2, 2, rng.split(0).seed());
        Matrix a = gaussian_matrix(3, 3, rng);
        Matrix b = gaussian_matrix(2, 2, rng);
        CHECK(std::abs(hs_inner(apply_matrix(phi, a), b) -
                       hs_inner(a, adjoint_apply_matrix(phi, b))) <= 1e-10);
    }
}

TEST_CASE("stinespring dilation of a unitary channel is the unitary") {
    Prng rng(7);
    Matrix u = random_unitary(3, rng);
    StinespringIsometry iso = stinespring(unitary_channel(u));
    CHECK(iso.env_dim() == 1);
    CHECK(dist(iso.v(), u) == 0.0);
}

TEST_CASE("stinespring recovery and entropy preservation") {
    for (int trial = 0; trial < 10; ++trial) {
        Prng rng(400 + trial);
        KrausChannel phi = random_channel(3, 2, 3, rng.split(0).seed());
        DensityOperator rho = random_density(3, rng.split(1).seed());
        StinespringIsometry iso = stinespring(phi);
        CHECK(dist(iso.v().adjoint() * iso.v(), Matrix::Identity(3, 3)) <= 1e-10);

        Matrix dilated = iso.v() * rho.mat() * iso.v().adjoint();
        Matrix recovered = partial_trace(dilated, iso.dilated_shape(), {iso.system_factor()});
        CHECK(dist(recovered, apply(phi, rho).mat()) <= 1e-10);

        Spectrum s = eig_hermitian(
            HermitianOperator(0.5 * (dilated + dilated.adjoint().eval())));
        CHECK(std::abs(entropy_of_spectrum(s.eigenvalues) - von_neumann_entropy(rho)) <= 1e-9);
    }
}

TEST_CASE("measurement channel with orthogonal projectors dilates blockwise") {
    std::vector<Matrix> kraus = {ket_projector(basis_ket(2, 0)), ket_projector(basis_ket(2, 1))};
    KrausChannel phi(std::move(kraus), 2, 2);
    StinespringIsometry iso = stinespring(phi);
    CHECK(iso.env_dim() == 2);
    // stacked blocks: rows 0-1 hold P_0, rows 2-3 hold P_1
    CHECK(dist(iso.v().topRows(2), ket_projector(basis_ket(2, 0))) == 0.0);
    CHECK(dist(iso.v().bottomRows(2), ket_projector(basis_ket(2, 1))) == 0.0);
}

TEST_CASE("qc channel reproduces outcome statistics on the diagonal") {
    std::vector<HermitianOperator> proj = {HermitianOperator(ket_projector(basis_ket(2, 0))),
                                           HermitianOperator(ket_projector(basis_ket(2, 1)))};
    Povm computational(std::move(proj));
    KrausChannel omega = qc_channel(computational);
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.3;
    diag(1, 1) = 0.7;
    CHECK(dist(apply(omega, DensityOperator(diag)).mat(), diag) <= 1e-12);

    Povm trivial({HermitianOperator(Matrix::Identity(3, 3))});
    DensityOperator rho = random_density(3, 8);
    Matrix out = apply(qc_channel(trivial), rho).mat();
    CHECK(out.rows() == 1);
    CHECK(std::abs(out(0, 0).real() - 1.0) <= 1e-12);
}

TEST_CASE("qc channel output is diagonal with Tr(rho E_b) entries") {
    for (int trial = 0; trial < 10; ++trial) {
        Povm m = random_povm(3, 4, 500 + trial);
        DensityOperator rho = random_density(3, 600 + trial);
        Matrix out = apply(qc_channel(m), rho).mat();
        for (int b = 0; b < 4; ++b) {
            double expected = (m.elements()[b].mat() * rho.mat()).trace().real();
            CHECK(std::abs(out(b, b).real() - expected) <= 1e-12);
            for (int c = 0; c < 4; ++c)
                if (b != c) CHECK(std::abs(out(b, c)) <= 1e-12);
        }
    }
}

TEST_CASE("povm lift preserves statistics for projective input") {
    std::vector<HermitianOperator> proj = {HermitianOperator(ket_projector(basis_ket(2, 0))),
                                           HermitianOperator(ket_projector(basis_ket(2, 1)))};
    Povm m(std::move(proj));
    ProjectiveLift lift = povm_to_projective(m);
    DensityOperator rho = random_density(2, 9);
    Matrix lifted = lift.isometry.v() * rho.mat() * lift.isometry.v().adjoint();
    for (int b = 0; b < 2; ++b) {
        double direct = (m.elements()[b].mat() * rho.mat()).trace().real();
        double via = (lift.projectors.elements()[b].mat() * lifted).trace().real();
        CHECK(std::abs(direct - via) <= 1e-11);
    }
}

TEST_CASE("trine povm lifts to a projective measurement with matching statistics") {
    std::vector<HermitianOperator> elems;
    for (int k = 0; k < 3; ++k) {
        double angle = k * M_PI / 3.0;
        Vector v(2);
        v << std::cos(angle), std::sin(angle);
        elems.emplace_back((2.0 / 3.0) * ket_projector(v));
    }
    Povm trine(std::move(elems));
    ProjectiveLift lift = povm_to_projective(trine);

    // projectors are mutually orthogonal by construction
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
            Matrix prod = lift.projectors.elements()[b].mat() * lift.projectors.elements()[c].mat();
            if (b == c)
                CHECK(dist(prod, lift.projectors.elements()[b].mat()) == 0.0);
            else
                CHECK(frobenius(prod) == 0.0);
        }

    for (int trial = 0; trial < 5; ++trial) {
        DensityOperator rho = random_density(2, 700 + trial);
        Matrix lifted = lift.isometry.v() * rho.mat() * lift.isometry.v().adjoint();
        for (int b = 0; b < 3; ++b) {
            double direct = (trine.elements()[b].mat() * rho.mat()).trace().real();
            double via = (lift.projectors.elements()[b].mat() * lifted).trace().real();
            CHECK(std::abs(direct - via) <= 1e-11);
        }
    }
}

TEST_CASE("channel composition agrees with sequential application") {
    for (int trial = 0; trial < 5; ++trial) {
        Prng rng(800 + trial);
        KrausChannel psi = random_channel(2, 3, 2, rng.split(0).seed());
        KrausChannel phi = random_channel(3, 2, 2, rng.split(1).seed());
        KrausChannel comp = compose(phi, psi);
        DensityOperator rho = random_density(2, rng.split(2).seed());
        CHECK(dist(apply(comp, rho).mat(), apply(phi, apply(psi, rho)).mat()) <= 1e-11);
    }
}

TEST_CASE("seeded generators are deterministic") {
    DensityOperator a = random_density(4, 42);
    DensityOperator b = random_density(4, 42);
    CHECK(std::memcmp(a.mat().data(), b.mat().data(), sizeof(Complex) * 16) == 0);

    KrausChannel c1 = random_channel(2, 2, 2, 43);
    KrausChannel c2 = random_channel(2, 2, 2, 43);
    for (int k = 0; k < 2; ++k) CHECK(dist(c1.kraus()[k], c2.kraus()[k]) == 0.0);
}

TEST_CASE("random generators satisfy their invariants") {
    // construction re-validates trace preservation, positivity, sums
    for (int trial = 0; trial < 5; ++trial) {
        CHECK_NOTHROW(random_channel(3, 2, 3, 900 + trial));
        CHECK_NOTHROW(random_povm(3, 4, 910 + trial));
        CHECK_NOTHROW(random_ensemble(3, 3, 920 + trial));
        Spectrum s = eig_hermitian(random_density(4, 930 + trial).hermitian());
        CHECK(s.eigenvalues.sum() == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(random_channel(4, 1, 2, 0), BadDimensions);
    CHECK_THROWS_AS(random_density(0, 0), BadDimensions);
}

TEST_CASE("trace-preserving iff adjoint unital, both directions") {
    KrausChannel phi = random_channel(3, 2, 2, 77);
    CHECK(dist(adjoint_apply_matrix(phi, Matrix::Identity(2, 2)), Matrix::Identity(3, 3)) <=
          1e-10);
    // unital adjoint implies trace preservation: Tr Phi(X) = <I, Phi X> = <Phihat I, X>
    Prng rng(78);
    Matrix x = gaussian_matrix(3, 3, rng);
    CHECK(std::abs(apply_matrix(phi, x).trace() - x.trace()) <= 1e-10);
}
