#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drtk/clifford.hpp"
#include "drtk/rng.hpp"

using namespace drtk;

TEST_CASE("irreducible dimensions follow the periodic table") {
    const std::size_t dims[9] = {0, 2, 4, 4, 8, 8, 8, 8, 16};
    for (int m = 1; m <= 8; ++m) {
        CHECK(irreducible_dim(m) == dims[m]);
        auto rep = build_irreducible(m);
        CHECK(rep.dim_v == dims[m]);
        CHECK_NOTHROW(rep.validate());
    }
}

TEST_CASE("generators satisfy the exact Clifford axioms") {
    for (int m = 1; m <= 8; ++m) {
        auto rep = build_irreducible(m);
        const auto id = RatMat::identity(rep.dim_v);
        for (int i = 0; i < m; ++i) {
            const auto& ji = rep.generators[static_cast<std::size_t>(i)];
            CHECK(ji.transpose() == Rat(-1) * ji);
            CHECK(ji * ji == Rat(-1) * id);
            for (int j = i + 1; j < m; ++j) {
                const auto& jj = rep.generators[static_cast<std::size_t>(j)];
                CHECK((ji * jj + jj * ji).is_zero());
            }
        }
    }
}

TEST_CASE("volume element distinguishes the two classes for m = 3 mod 4") {
    for (int m : {3, 7}) {
        for (int cls : {1, -1}) {
            auto rep = build_irreducible(m, cls);
            RatMat vol = rep.generators[0];
            for (int i = 1; i < m; ++i) vol = vol * rep.generators[static_cast<std::size_t>(i)];
            CHECK(vol == Rat(cls) * RatMat::identity(rep.dim_v));
        }
    }
}

TEST_CASE("volume element is not scalar when m is not 3 mod 4") {
    for (int m : {2, 4, 5, 6}) {
        auto rep = build_irreducible(m);
        RatMat vol = rep.generators[0];
        for (int i = 1; i < m; ++i) vol = vol * rep.generators[static_cast<std::size_t>(i)];
        CHECK(vol != RatMat::identity(rep.dim_v));
        CHECK(vol != Rat(-1) * RatMat::identity(rep.dim_v));
    }
}

TEST_CASE("direct sums validate and have additive dimension") {
    auto rep = build_module(3, 2, 1);
    CHECK(rep.dim_v == 3 * irreducible_dim(3));
    CHECK_NOTHROW(rep.validate());
    auto rep2 = build_module(5, 2, 0);
    CHECK(rep2.dim_v == 2 * irreducible_dim(5));
    CHECK_NOTHROW(rep2.validate());
    CHECK_THROWS(build_module(5, 1, 1)); // minus class only exists for m = 3 mod 4
}

TEST_CASE("polarized relation J_X J_Y + J_Y J_X = -2<X,Y> id holds exactly") {
    auto rep = build_module(3, 1, 1);
    for (std::uint64_t s = 0; s < 10; ++s) {
        SampleRng rng(11, s);
        std::vector<Rat> x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x[static_cast<std::size_t>(i)] =
                Rat(static_cast<long>(rng.uniform(19)) - 9, static_cast<long>(rng.uniform(9)) + 1);
            y[static_cast<std::size_t>(i)] =
                Rat(static_cast<long>(rng.uniform(19)) - 9, static_cast<long>(rng.uniform(9)) + 1);
        }
        const auto lhs = j_op(rep, x) * j_op(rep, y) + j_op(rep, y) * j_op(rep, x);
        CHECK(lhs == (Rat(-2) * dot(x, y)) * RatMat::identity(rep.dim_v));
    }
}

TEST_CASE("j_apply agrees with the materialized operator") {
    auto rep = build_irreducible(6);
    std::vector<Rat> z = {Rat(1), Rat(-2), Rat(1, 3), Rat(0), Rat(2), Rat(-1, 2)};
    std::vector<Rat> v(rep.dim_v);
    for (std::size_t i = 0; i < rep.dim_v; ++i) v[i] = Rat(static_cast<long>(i) + 1, 3);
    CHECK(j_apply(rep, z, v) == j_op(rep, z).apply(v));
}
