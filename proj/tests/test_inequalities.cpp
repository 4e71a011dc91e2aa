#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "qei/inequalities.hpp"

#include <cmath>

using namespace qei;
using namespace qei::testing;

namespace {

MultipartiteState bell_pair() {
    Vector bell = Vector::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    return {DensityOperator(ket_projector(bell)), SystemShape({2, 2})};
}

MultipartiteState ghz_state() {
    Vector ghz = Vector::Zero(8);
    ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
    return {DensityOperator(ket_projector(ghz)), SystemShape({2, 2, 2})};
}

} // namespace

TEST_CASE("subadditivity: product, entangled, random") {
    DensityOperator r1 = random_density(2, 1);
    DensityOperator r2 = random_density(3, 2);
    MultipartiteState prod(DensityOperator(kron(r1.mat(), r2.mat())), SystemShape({2, 3}));
    VerdictReport v = check_subadditivity(prod);
    CHECK(std::abs(v.gap) <= 1e-10);
    CHECK(v.equality.value());

    VerdictReport bell = check_subadditivity(bell_pair());
    CHECK(bell.gap == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
    CHECK_FALSE(bell.equality.value());

    for (int trial = 0; trial < 20; ++trial) {
        MultipartiteState s(random_density(6, 100 + trial), SystemShape({2, 3}));
        CHECK(check_subadditivity(s).gap >= -1e-9);
    }
}

TEST_CASE("triangle inequality") {
    VerdictReport pure = check_triangle(bell_pair());
    CHECK(std::abs(pure.lhs) <= 1e-10); // |S1 - S2| = 0
    CHECK(std::abs(pure.rhs) <= 1e-10); // S12 = 0

    for (int trial = 0; trial < 20; ++trial) {
        MultipartiteState s(random_density(6, 200 + trial), SystemShape({2, 3}));
        CHECK(check_triangle(s).holds);
    }
}

TEST_CASE("araki-lieb tripartite subadditivity") {
    MultipartiteState ghz = ghz_state();
    VerdictReport v = check_araki_lieb(ghz);
    CHECK(v.lhs <= 1e-10); // pure state
    CHECK(v.holds);

    for (int trial = 0; trial < 20; ++trial) {
        MultipartiteState s(random_density(8, 300 + trial), SystemShape({2, 2, 2}));
        CHECK(check_araki_lieb(s).gap >= -1e-9);
    }
}

TEST_CASE("ssa equality case rho_1 (x) rho_23") {
    Prng rng(4);
    DensityOperator r1 = full_rank_density(2, rng.split(0).seed());
    DensityOperator r23 = full_rank_density(4, rng.split(1).seed());
    MultipartiteState s(DensityOperator(kron(r1.mat(), r23.mat())), SystemShape({2, 2, 2}));
    VerdictReport v = check_ssa(s);
    CHECK(std::abs(v.gap) <= 1e-9);
    CHECK(v.equality.value());
}

TEST_CASE("ssa on the GHZ state has gap log 2") {
    VerdictReport v = check_ssa(ghz_state());
    // S123 = 0, S2 = log 2, S12 = S23 = log 2 evaluated via the entropy ops
    CHECK(v.gap == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("ssa holds on random tripartite states") {
    for (int trial = 0; trial < 30; ++trial) {
        MultipartiteState s(random_density(8, 400 + trial), SystemShape({2, 2, 2}));
        CHECK(check_ssa(s).gap >= -1e-9);
    }
}

TEST_CASE("purified ssa form") {
    // pure rho_124: equality with S4 = S12 and S2 = S14
    MultipartiteState pure(ghz_state().rho(), SystemShape({2, 2, 2}));
    VerdictReport v = check_ssa_purified(pure);
    CHECK(std::abs(v.gap) <= 1e-9);

    // purify a random tripartite state and compare with the direct gap
    const std::vector<std::vector<int>> shapes = {{2, 2, 2}, {2, 3, 2}};
    for (int trial = 0; trial < 6; ++trial) {
        SystemShape shape(shapes[trial % shapes.size()]);
        int d = shape.total_dim();
        MultipartiteState s123(random_density(d, 500 + trial), shape);
        MultipartiteState p(purify(s123.rho()).rho(),
                            SystemShape({shape.dim(0), shape.dim(1), shape.dim(2), d}));
        // state on {1, 2, 4}: trace out factor 3
        MultipartiteState s124 = partial_trace(p, {0, 1, 3});
        double direct = check_ssa(s123).gap;
        CHECK(std::abs(check_ssa_purified(s124).gap - direct) <= 1e-9);
    }
}

TEST_CASE("monotonicity under partial trace") {
    SystemShape shape({2, 3});
    MultipartiteState rho(full_rank_density(6, 6), shape);
    VerdictReport same = check_mpt(rho, rho);
    CHECK(std::abs(same.lhs) <= 1e-10);
    CHECK(std::abs(same.rhs) <= 1e-10);

    Prng rng(7);
    DensityOperator r1 = full_rank_density(2, rng.split(0).seed());
    DensityOperator r2 = full_rank_density(3, rng.split(1).seed());
    DensityOperator g2 = full_rank_density(3, rng.split(2).seed());
    MultipartiteState pr(DensityOperator(kron(r1.mat(), r2.mat())), shape);
    MultipartiteState pg(DensityOperator(kron(r1.mat(), g2.mat())), shape);
    VerdictReport factor = check_mpt(pr, pg);
    CHECK(std::abs(factor.gap) <= 1e-9); // the common factor cancels

    for (int trial = 0; trial < 20; ++trial) {
        MultipartiteState a(full_rank_density(6, 600 + trial), shape);
        MultipartiteState b(full_rank_density(6, 700 + trial), shape);
        CHECK(check_mpt(a, b).gap >= -1e-9);
    }
}

TEST_CASE("ssa gap equals the mpt gap under the partial-trace correspondence") {
    const std::vector<std::vector<int>> shapes = {{2, 2, 2}, {2, 3, 2}, {3, 2, 2}};
    for (int trial = 0; trial < 12; ++trial) {
        SystemShape shape(shapes[trial % shapes.size()]);
        MultipartiteState s123(full_rank_density(shape.total_dim(), 800 + trial), shape);
        double ssa_gap = check_ssa(s123).gap;

        // bipartite view [d1, d2*d3]; gamma = rho_12 (x) I_3 / d_3
        int d3 = shape.dim(2);
        MultipartiteState rho_b(s123.rho(), SystemShape({shape.dim(0), shape.dim(1) * d3}));
        Matrix rho12 = partial_trace(s123, {0, 1}).mat();
        Matrix gamma_full = kron(rho12, Matrix::Identity(d3, d3) / d3);
        MultipartiteState gamma_b(DensityOperator(std::move(gamma_full)),
                                  SystemShape({shape.dim(0), shape.dim(1) * d3}));

        double mpt_gap = check_mpt(rho_b, gamma_b).gap;
        CHECK(std::abs(ssa_gap - mpt_gap) <= 1e-9);
    }
}

TEST_CASE("joint convexity") {
    DensityOperator rho = full_rank_density(3, 9);
    DensityOperator gamma = full_rank_density(3, 10);
    CHECK(std::abs(check_joint_convexity({{1.0, rho, gamma}}).gap) <= 1e-10);
    CHECK(std::abs(check_joint_convexity({{0.3, rho, gamma}, {0.7, rho, gamma}}).gap) <=
          1e-10);

    for (int trial = 0; trial < 20; ++trial) {
        Prng rng(900 + trial);
        std::vector<WeightedPair> comps;
        std::vector<double> w = {0.2, 0.5, 0.3};
        for (int k = 0; k < 3; ++k)
            comps.push_back({w[k], full_rank_density(2, rng.split(10 + k).seed()),
                             full_rank_density(2, rng.split(20 + k).seed())});
        CHECK(check_joint_convexity(comps).gap >= -1e-9);
    }
}

TEST_CASE("monotonicity under channels") {
    Prng rng(11);
    KrausChannel uni = unitary_channel(random_unitary(3, rng));
    DensityOperator rho = full_rank_density(3, 12);
    DensityOperator gamma = full_rank_density(3, 13);
    CHECK(std::abs(check_monotonicity(uni, rho, gamma).gap) <= 1e-10);

    double w = 0.5;
    KrausChannel depolarize(
        {w * Matrix::Identity(2, 2), w * pauli_x(), w * pauli_y(), w * pauli_z()}, 2, 2);
    DensityOperator r2 = full_rank_density(2, 14);
    DensityOperator g2 = full_rank_density(2, 15);
    VerdictReport dep = check_monotonicity(depolarize, r2, g2);
    CHECK(std::abs(dep.lhs) <= 1e-10); // both outputs are maximally mixed

    for (int trial = 0; trial < 20; ++trial) {
        Prng r(1000 + trial);
        KrausChannel phi = random_channel(3, 2, 2, r.split(0).seed());
        CHECK(check_monotonicity(phi, full_rank_density(3, r.split(1).seed()),
                                 full_rank_density(3, r.split(2).seed()))
                  .gap >= -1e-9);
    }
}

TEST_CASE("golden-thompson gap") {
    Matrix da = Matrix::Zero(2, 2), db = Matrix::Zero(2, 2);
    da(0, 0) = 0.3;
    da(1, 1) = -1.2;
    db(0, 0) = 2.0;
    db(1, 1) = 0.7;
    CHECK(std::abs(golden_thompson_gap(HermitianOperator(da), HermitianOperator(db)).gap) <=
          1e-10);

    VerdictReport pauli =
        golden_thompson_gap(HermitianOperator(pauli_x()), HermitianOperator(pauli_z()));
    double expected = 2.0 * std::pow(std::cosh(1.0), 2) - 2.0 * std::cosh(std::sqrt(2.0));
    CHECK(pauli.gap == doctest::Approx(expected).epsilon(1e-10));
    CHECK(pauli.residuals.at("commutator_norm") > 1.0);

    for (int trial = 0; trial < 30; ++trial) {
        Prng rng(1100 + trial);
        HermitianOperator a(random_hermitian(3, rng));
        HermitianOperator b(random_hermitian(3, rng));
        VerdictReport v = golden_thompson_gap(a, b);
        CHECK(v.gap >= -1e-10);
        if (v.gap <= 1e-9) CHECK(v.residuals.at("commutator_norm") <= 1e-5);
    }
}

TEST_CASE("lieb triple-matrix inequality: equal arguments") {
    DensityOperator rho = full_rank_density(3, 16);
    HermitianOperator h(rho.mat());
    VerdictReport v = lieb_triple_gap(h, h, h);
    CHECK(v.lhs == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(v.rhs == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lieb triple-matrix inequality: paper equality case") {
    Prng rng(17);
    DensityOperator r1 = full_rank_density(2, rng.split(0).seed());
    DensityOperator r2 = full_rank_density(2, rng.split(1).seed());
    DensityOperator r23 = full_rank_density(4, rng.split(2).seed());
    Matrix eye2 = Matrix::Identity(2, 2);
    VerdictReport v = lieb_triple_gap(HermitianOperator(kron(kron(r1.mat(), r2.mat()), eye2)),
                                      HermitianOperator(kron(kron(eye2, r2.mat()), eye2)),
                                      HermitianOperator(kron(eye2, r23.mat())));
    CHECK(v.lhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(v.rhs == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lieb triple gap is nonnegative with quadrature agreement") {
    for (int trial = 0; trial < 10; ++trial) {
        Prng rng(1200 + trial);
        Prng ra = rng.split(0), rb = rng.split(1), rc = rng.split(2);
        VerdictReport v = lieb_triple_gap(HermitianOperator(random_positive(3, ra, 0.1)),
                                          HermitianOperator(random_positive(3, rb, 0.1)),
                                          HermitianOperator(random_positive(3, rc, 0.1)));
        CHECK(v.gap >= -1e-9);
        CHECK(v.residuals.at("quadrature_agreement") <= 1e-6);
    }
    Prng rng(18);
    CHECK_THROWS_AS(lieb_triple_gap(HermitianOperator(pauli_z()),
                                    HermitianOperator(Matrix::Identity(2, 2)),
                                    HermitianOperator(Matrix::Identity(2, 2))),
                    NotPositive);
}

TEST_CASE("resolvent-integral closed form matches direct log differences") {
    for (int trial = 0; trial < 10; ++trial) {
        Prng rng(1300 + trial);
        HermitianOperator s(random_positive(3, rng, 0.2));
        HermitianOperator t(0.3 * random_hermitian(3, rng));
        double x = 0.05 + 0.1 * rng.uniform();
        Matrix closed = log_increment_closed_form(s, t, x);
        Matrix direct = matrix_log(HermitianOperator(s.mat() + x * t.mat())).mat() -
                        matrix_log(s).mat();
        CHECK(dist(closed, direct) <= 1e-8);
    }
}

TEST_CASE("divided-difference kernel limits") {
    CHECK(divided_difference_log(2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(divided_difference_log(1.0, std::exp(1.0)) ==
          doctest::Approx(-1.0 / (1.0 - std::exp(1.0))).epsilon(1e-12));
    // continuity across the near-equal switch
    CHECK(divided_difference_log(1.0, 1.0 + 1e-9) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("concavity probe for Tr exp(K + log A)") {
    Prng rng(19);
    HermitianOperator k(0.5 * random_hermitian(3, rng));
    HermitianOperator a(random_positive(3, rng, 0.1));
    CHECK(std::abs(exp_log_concavity_probe(k, a, a, 0.3).gap) <= 1e-10);

    // K = 0 makes F linear: F(A) = Tr A
    HermitianOperator zero(Matrix::Zero(3, 3));
    HermitianOperator a2(random_positive(3, rng, 0.1));
    CHECK(std::abs(exp_log_concavity_probe(zero, a, a2, 0.4).gap) <= 1e-9);

    for (int trial = 0; trial < 20; ++trial) {
        Prng r(1400 + trial);
        HermitianOperator kk(0.5 * random_hermitian(3, r));
        HermitianOperator x(random_positive(3, r, 0.1));
        HermitianOperator y(random_positive(3, r, 0.1));
        CHECK(exp_log_concavity_probe(kk, x, y, 0.05 + 0.9 * r.uniform()).gap >= -1e-9);
    }
    CHECK_THROWS_AS(exp_log_concavity_probe(k, a, a, 1.5), DomainError);
}

TEST_CASE("wyd joint concavity probe") {
    Matrix eye = Matrix::Identity(3, 3);
    Prng rng(20);
    Matrix k = gaussian_matrix(3, 3, rng);
    HermitianOperator ones(eye);
    VerdictReport v = wyd_concavity_probe(ones, ones, ones, ones, k, 0.5, 0.5);
    CHECK(v.residuals.at("wyd_value") ==
          doctest::Approx((k.adjoint() * k).trace().real()).epsilon(1e-12));
    CHECK(std::abs(v.gap) <= 1e-10);

    for (double s : {0.25, 0.5, 0.75}) {
        for (int trial = 0; trial < 5; ++trial) {
            Prng r(1500 + trial);
            HermitianOperator a1(random_positive(3, r, 0.1));
            HermitianOperator b1(random_positive(3, r, 0.1));
            HermitianOperator a2(random_positive(3, r, 0.1));
            HermitianOperator b2(random_positive(3, r, 0.1));
            Matrix kk = gaussian_matrix(3, 3, r);
            CHECK(wyd_concavity_probe(a1, b1, a2, b2, kk, s, 0.05 + 0.9 * r.uniform()).gap >=
                  -1e-9);
        }
    }
}

TEST_CASE("homogeneous directional probe") {
    Prng rng(21);
    HermitianOperator k(0.5 * random_hermitian(3, rng));
    HermitianOperator a(random_positive(3, rng, 0.1));

    // B = A: every quotient equals F(A) by homogeneity
    VerdictReport same = homogeneous_directional_probe(k, a, a);
    double f_a = trace_exp_klog(k, a);
    for (const auto& [key, value] : same.residuals)
        if (key.rfind("quotient_", 0) == 0)
            CHECK(value == doctest::Approx(f_a).epsilon(1e-8));
    CHECK(same.holds);

    // K = 0: quotient is exactly Tr B
    HermitianOperator zero(Matrix::Zero(3, 3));
    HermitianOperator b(random_positive(3, rng, 0.1));
    VerdictReport linear = homogeneous_directional_probe(zero, a, b);
    CHECK(std::abs(linear.gap) <= 1e-8);

    for (int trial = 0; trial < 10; ++trial) {
        Prng r(1600 + trial);
        HermitianOperator kk(0.5 * random_hermitian(3, r));
        HermitianOperator x(random_positive(3, r, 0.1));
        HermitianOperator y(random_positive(3, r, 0.1));
        CHECK(homogeneous_directional_probe(kk, x, y).holds);
    }
}

TEST_CASE("herglotz probe: linear case has Im g = d Im z") {
    HermitianOperator zero(Matrix::Zero(3, 3));
    HermitianOperator eye(Matrix::Identity(3, 3));
    Prng rng(22);
    HermitianOperator b(0.3 * random_hermitian(3, rng));
    std::vector<Complex> samples = {{0.0, 0.5}, {1.0, 1.0}, {-2.0, 0.25}};
    VerdictReport v = epstein_herglotz_probe(zero, eye, b, samples);
    CHECK(v.holds);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double expected = 3.0 * samples[i].imag(); // g(z) = Tr(zI + B)
        CHECK(v.residuals.at("Im_g_sample_" + std::to_string(i)) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("herglotz probe: B = 0 at z = i matches the rotated trace") {
    Prng rng(23);
    HermitianOperator k(0.5 * random_hermitian(3, rng));
    HermitianOperator a(random_positive(3, rng, 0.2));
    HermitianOperator zero_b(Matrix::Zero(3, 3));
    VerdictReport v = epstein_herglotz_probe(k, a, zero_b, {Complex(0.0, 1.0)});
    // log(iA) = log A + i pi/2, so g(i) = i Tr e^{K + log A}
    CHECK(v.residuals.at("Im_g_sample_0") ==
          doctest::Approx(trace_exp_klog(k, a)).epsilon(1e-9));
    CHECK(v.holds);
}

TEST_CASE("herglotz probe holds on random well-conditioned inputs") {
    for (int trial = 0; trial < 10; ++trial) {
        Prng rng(1700 + trial);
        int d = 2 + trial % 3;
        HermitianOperator k(0.5 * random_hermitian(d, rng));
        HermitianOperator a(random_positive(d, rng, 0.2));
        Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat(), Eigen::EigenvaluesOnly);
        Matrix braw = random_hermitian(d, rng);
        HermitianOperator b(braw * (0.5 * es.eigenvalues().minCoeff() / braw.operatorNorm()));
        VerdictReport v = epstein_herglotz_probe(k, a, b);
        CHECK(v.holds);
        CHECK(v.residuals.at("retained") > 0);
    }
    CHECK_THROWS_AS(epstein_herglotz_probe(HermitianOperator(Matrix::Zero(2, 2)),
                                           HermitianOperator(Matrix::Identity(2, 2)),
                                           HermitianOperator(Matrix::Zero(2, 2)),
                                           {Complex(1.0, -0.5)}),
                    DomainError);
}

TEST_CASE("second-derivative probe") {
    Prng rng(24);
    HermitianOperator k(0.5 * random_hermitian(3, rng));
    HermitianOperator a(random_positive(3, rng, 0.2));

    // B proportional to A: f(x) = (1 + cx) Tr e^{K + log A} exactly
    double c = 0.4;
    HermitianOperator b_prop(c * a.mat());
    double f0 = trace_exp_klog(k, a);
    double h = 1e-3;
    double f_plus = trace_exp_klog(k, HermitianOperator(a.mat() + h * b_prop.mat()));
    CHECK(f_plus == doctest::Approx((1.0 + c * h) * f0).epsilon(1e-10));
    VerdictReport prop = epstein_second_derivative_probe(k, a, b_prop, 1e-5);
    CHECK(prop.holds);

    // K = 0: f is exactly linear, second difference is pure roundoff
    HermitianOperator zero(Matrix::Zero(3, 3));
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat(), Eigen::EigenvaluesOnly);
    Matrix braw = random_hermitian(3, rng);
    HermitianOperator b(braw * (0.3 * es.eigenvalues().minCoeff() / braw.operatorNorm()));
    VerdictReport lin = epstein_second_derivative_probe(zero, a, b, 1e-5);
    CHECK(lin.holds);

    for (int trial = 0; trial < 10; ++trial) {
        Prng r(1800 + trial);
        int d = 2 + trial % 3;
        HermitianOperator kk(0.5 * random_hermitian(d, r));
        HermitianOperator aa(random_positive(d, r, 0.2));
        Eigen::SelfAdjointEigenSolver<Matrix> ev(aa.mat(), Eigen::EigenvaluesOnly);
        Matrix bb = random_hermitian(d, r);
        HermitianOperator bscaled(bb * (0.5 * ev.eigenvalues().minCoeff() / bb.operatorNorm()));
        CHECK(epstein_second_derivative_probe(kk, aa, bscaled).holds);
    }
}
