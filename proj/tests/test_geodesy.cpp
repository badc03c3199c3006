#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drtk/geodesy.hpp"

using namespace drtk;

TEST_CASE("subspace orthonormalization and membership") {
    DRSpace sp(build_irreducible(2));
    auto e1 = sp.zero_vec<double>();
    e1.V[0] = 2.0;
    auto e2 = sp.zero_vec<double>();
    e2.V[0] = 1.0;
    e2.Y[0] = 1.0;
    Subspace L(sp, {e1, e2});
    CHECK(L.dim() == 2);
    CHECK(L.orthonormality_defect() < 1e-14);
    auto inside = sp.zero_vec<double>();
    inside.V[0] = 0.3;
    inside.Y[0] = -0.8;
    CHECK(L.contains(inside));
    auto outside = sp.zero_vec<double>();
    outside.s = 1.0;
    CHECK(!L.contains(outside));
    CHECK(L.off_residual(outside) == doctest::Approx(1.0));
}

TEST_CASE("the 4-dimensional example subspace has constant curvature -1") {
    for (int cls : {1, -1}) {
        for (std::uint64_t s = 0; s < 20; ++s) {
            SampleRng rng(101, s);
            const double a = rng.gaussian(), b = rng.gaussian(), sc = rng.gaussian() + 1.5;
            auto ex = build_example_15d(cls, a, b, sc);
            CHECK(ex.space.dim_s() == 15);
            CHECK(ex.L.dim() == 4);
            CHECK(ex.L.orthonormality_defect() < 1e-12);
            auto [ok, worst] = is_minus_one_subspace(ex.L, 1e-12);
            CHECK(ok);
            CHECK(std::abs(worst + 1.0) < 1e-12);
            CHECK(r_invariance_residual(ex.L) < 1e-12);
            CHECK(nabla_r_invariance_residual(ex.L) < 1e-12);
        }
    }
}

TEST_CASE("example construction internals: involution eigenvector and eps") {
    for (int cls : {1, -1}) {
        auto ex = build_example_15d(cls, 1.0, 0.5, 2.0);
        CHECK((ex.eps == 1 || ex.eps == -1));
        // P123 is a symmetric involution and W its eigenvector
        CHECK(ex.P123 * ex.P123 == RatMat::identity(8));
        CHECK(ex.P123.transpose() == ex.P123);
        CHECK(ex.P123.apply(ex.W) == Rat(ex.eps) * ex.W);
        // J7 = J1..J6 squares to -id (the seventh anticommuting operator)
        CHECK(ex.J7 * ex.J7 == Rat(-1) * RatMat::identity(8));
    }
}

TEST_CASE("subalgebra criterion accepts the full algebra, rejects the example") {
    auto ex = build_example_15d(1, 0.7, -0.2, 1.3);
    auto cert = is_homogeneous_tg(ex.L);
    CHECK(!cert.ok);
    CHECK(cert.failed_condition == "A_in_L");

    DRSpace sp(build_irreducible(2));
    std::vector<TangentVec<double>> all;
    for (std::size_t i = 0; i < sp.dim_s(); ++i) {
        std::vector<double> e(sp.dim_s(), 0.0);
        e[i] = 1.0;
        all.push_back(sp.unflatten(e));
    }
    auto cert2 = is_homogeneous_tg(Subspace(sp, all));
    CHECK(cert2.ok);

    // a + z (empty module part) satisfies every closure condition
    auto A = sp.zero_vec<double>();
    A.s = 1.0;
    std::vector<TangentVec<double>> vecs = {A};
    for (std::size_t k = 0; k < sp.dim_z(); ++k) {
        auto Z = sp.zero_vec<double>();
        Z.Y[k] = 1.0;
        vecs.push_back(Z);
    }
    auto cert3 = is_homogeneous_tg(Subspace(sp, vecs));
    CHECK(cert3.ok);
}

TEST_CASE("closure of the center by pairs of module operators: four cases") {
    DRSpace sp1(build_module(1, 2, 0));
    std::vector<double> v1(sp1.dim_v(), 0.0);
    v1[0] = 1.0;
    v1[2] = 0.5;
    const auto r1 = zdouble_closure(sp1, v1, {{1.0}});
    CHECK(r1.case_label == 1);
    CHECK(r1.dim_zdouble == 1);

    DRSpace sp3(build_irreducible(3));
    const auto r2 = zdouble_closure(sp3, {1.0, 0.0, 0.3, 0.0}, {{1, 0, 0}, {0, 1, 0}});
    CHECK(r2.case_label == 2);
    CHECK(r2.dim_zdouble == 3);

    DRSpace sp7(build_irreducible(7));
    std::vector<double> v7(sp7.dim_v(), 0.0);
    v7[0] = 1.0;
    const auto r3 = zdouble_closure(
        sp7, v7, {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}});
    CHECK(r3.case_label == 3);
    CHECK(r3.dim_zdouble == 6);

    const auto r4 = zdouble_closure(sp7, v7,
                                    {{1, 0, 0, 0, 0, 0, 0},
                                     {0, 1, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0, 0},
                                     {0, 0, 0, 1, 0, 0, 0}});
    CHECK(r4.case_label == 4);
    CHECK(r4.dim_zdouble == 7);
}

TEST_CASE("Jacobi eigenvectors from eigenvectors of K^2") {
    for (int m : {2, 6}) {
        DRSpace sp(build_irreducible(m));
        double worst = 0;
        std::size_t count = 0;
        for (std::uint64_t s = 0; s < 100; ++s) {
            SampleRng rng(211, s);
            auto t = sp.zero_vec<double>();
            t.V = rng.gaussian_vector(sp.dim_v());
            t.Y = rng.gaussian_vector(sp.dim_z());
            t.s = rng.gaussian();
            t = (1.0 / std::sqrt(norm2(t))) * t;
            for (const auto& [mu, x] : k2_eigenpairs(sp, t.V, t.Y)) {
                if (std::abs(mu + 1.0) < 1e-9) continue;
                for (const auto& p : eigen_E(sp, t, x, mu)) {
                    worst = std::max(worst, p.residual);
                    ++count;
                }
            }
        }
        CHECK(count > 0);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("eigen_E rejects non-unit vectors") {
    DRSpace sp(build_irreducible(2));
    auto t = sp.zero_vec<double>();
    t.V[0] = 1.0;
    t.Y[0] = 1.0; // norm sqrt(2), not unit
    const auto pairs = k2_eigenpairs(sp, t.V, t.Y);
    REQUIRE(!pairs.empty());
    CHECK_THROWS_AS(eigen_E(sp, t, pairs[0].second, pairs[0].first), std::invalid_argument);
}

TEST_CASE("4-dimensional block of (2/3) nabla_T R_T: exact closed form and square") {
    DRSpace sp(build_module(3, 1, 1));
    auto t = sp.zero_vec<Rat>();
    for (std::size_t i = 0; i < sp.dim_v(); ++i)
        t.V[i] = Rat(static_cast<int>(i) % 3 - 1) + Rat(1, static_cast<int>(i) + 2);
    t.Y = {Rat(0), Rat(0), Rat(2)};
    t.s = Rat(1, 3);
    const Rat ny(2);
    const auto K = sp.k_operator(t.V, t.Y, ny);
    const std::vector<Rat> x = {Rat(1), Rat(0), Rat(0)};
    const auto k2x = (K * K).apply(x);
    REQUIRE(k2x[1] == Rat(0));
    REQUIRE(k2x[2] == Rat(0));
    const Rat mu = k2x[0];
    const auto q = l4_block_operator<Rat>(sp, t, x, mu, ny);
    CHECK(q == l4_block_expected<Rat>(norm2(t.V), ny, mu));
    const Rat scal = norm2(t.V) * norm2(t.V) * norm2(t.Y) * (Rat(1) + mu);
    CHECK(q * q == scal * RatMat::identity(4));
}
