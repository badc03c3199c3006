#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drtk/einstein.hpp"
#include "drtk/rng.hpp"

using namespace drtk;

TEST_CASE("exact algebraic scalars") {
    const AlgNum x(Rat(1, 2), Rat(1, 3), 6);
    const AlgNum y(Rat(0), Rat(2), 6);
    CHECK(to_double(x) == doctest::Approx(0.5 + std::sqrt(6.0) / 3.0).epsilon(1e-15));
    CHECK(x + y == AlgNum(Rat(1, 2), Rat(7, 3), 6));
    CHECK(x * y == AlgNum(Rat(4), Rat(1), 6));
    // products of pure radicals are rational and compare equal to rationals
    CHECK(y * y == AlgNum::rational(Rat(24)));
    CHECK(alg_sqrt(Rat(25, 96), 6) == AlgNum(Rat(0), Rat(5, 24), 6));
    CHECK_THROWS(alg_sqrt(Rat(7, 96), 6)); // not of the form c^2 * 6
}

TEST_CASE("block values for the multiplicity pattern (7, 8)") {
    for (int sp : {1, -1}) {
        const auto c = solve_case_78(sp);
        CHECK(c.eps == 1);
        CHECK(c.alpha1 == AlgNum(Rat(0), Rat(-5 * sp, 24), 6));
        CHECK(c.alpha3 == AlgNum(Rat(0), Rat(sp, 8), 6));
        CHECK(c.H == AlgNum(Rat(0), Rat(-11 * sp, 24), 6));
        CHECK(c.C == Rat(11, 16));
        // linear relations
        CHECK(c.alpha1 == AlgNum::rational(Rat(2)) * c.alpha3 + c.H);
        // quadratic constraint
        CHECK((c.alpha3 - c.alpha1) * (c.alpha3 + c.alpha1 - c.H) == AlgNum::rational(Rat(3, 4)));
    }
    CHECK(solve_case_78_branch(-1, 1).empty());
    CHECK(solve_case_78_branch(1, 1).size() == 1);
}

TEST_CASE("block values for the multiplicity pattern (7, 7, 1)") {
    const auto c = solve_case_717(1);
    CHECK(c.eps == 1);
    CHECK(c.alpha1 == AlgNum(Rat(0), Rat(-3, 91), 91));
    CHECK(c.alpha3 == AlgNum(Rat(0), Rat(1, 26), 91));
    CHECK(c.alpha4 == AlgNum(Rat(0), Rat(-27, 182), 91));
    CHECK(c.H == AlgNum(Rat(0), Rat(-10, 91), 91));
    CHECK(c.C == Rat(10, 13));
    // defining linear relations between the block values
    const auto r = [](long n) { return AlgNum::rational(Rat(n)); };
    CHECK(r(6) * c.alpha3 == r(-7) * c.alpha1);
    CHECK(r(2) * c.alpha4 == r(9) * c.alpha1);
    CHECK(r(3) * c.H == r(10) * c.alpha1);
    CHECK(solve_case_717_branch(-1, 1).empty());
}

TEST_CASE("determinant of the connection-term system") {
    const auto c = solve_case_717(1);
    CHECK(c.det_q != 0);
    CHECK(c.det_scaled != 0);
    CHECK(c.det_scaled == Rat(-39015, 16562));
    CHECK(c.printed_det == Rat(-39051, 16562));
    CHECK(!c.dets_agree); // recomputation differs from the published value
    // the derived rows are proportional to the recorded rows (order 0, 2, 1)
    const double a1 = to_double(c.alpha1), a3 = to_double(c.alpha3), a4 = to_double(c.alpha4),
                 h = to_double(c.H);
    const auto dg = difgauss_system(a1, a3, a4, h);
    const auto pq = to_double(c.printed_q);
    const std::size_t rowmap[3] = {0, 2, 1};
    for (std::size_t i = 0; i < 3; ++i) {
        const double ratio = dg(i, 0) / pq(rowmap[i], 0);
        CHECK(std::abs(ratio - 132496.0) < 1e-6); // (4*91)^2
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(dg(i, j) - ratio * pq(rowmap[i], j)) < 1e-9);
    }
}

TEST_CASE("differentiated Gauss row collapses when two block values coincide") {
    SampleRng rng(3, 0);
    for (int k = 0; k < 50; ++k) {
        const Rat li(static_cast<long>(rng.uniform(19)) - 9, static_cast<long>(rng.uniform(9)) + 1);
        const Rat l(static_cast<long>(rng.uniform(19)) - 9, static_cast<long>(rng.uniform(9)) + 1);
        const Rat h(static_cast<long>(rng.uniform(19)) - 9, static_cast<long>(rng.uniform(9)) + 1);
        if (li == l) continue;
        const auto r = difgauss_row(li, l, l, h);
        CHECK(r[1] == Rat(0));
        CHECK(r[0] + r[2] == (li - l) * (li - Rat(2) * l - h));
    }
}

TEST_CASE("Codazzi coefficients are antisymmetric under swapping the outer slots") {
    SampleRng rng(5, 0);
    for (int k = 0; k < 50; ++k) {
        const Rat li(static_cast<long>(rng.uniform(19)) - 9, 1);
        const Rat lj(static_cast<long>(rng.uniform(19)) - 9, 1);
        const Rat lk(static_cast<long>(rng.uniform(19)) - 9, 1);
        const auto c1 = codazzi_row(li, lj, lk);
        const auto c2 = codazzi_row(lk, lj, li);
        CHECK(c2[0] == -c1[1]);
        CHECK(c2[1] == -c1[0]);
    }
}

TEST_CASE("the Einstein geodesic sphere") {
    const double cot_r0 = sphere_einstein_radius();
    CHECK(std::abs(cot_r0 - (-5.0 * std::sqrt(6.0) / 24.0)) < 1e-12);
    const double pi = std::acos(-1.0);
    const double r0 = pi - std::atan(-1.0 / cot_r0);
    const SphereModel sphere{r0};
    CHECK(gauss_einstein_residual(sphere.data()) < 1e-12);
    CHECK(std::abs(sphere.mean_curvature() - (-11.0 * std::sqrt(6.0) / 24.0)) < 1e-12);
    // non-Einstein radii leave a residual
    const SphereModel other{r0 / 2};
    CHECK(gauss_einstein_residual(other.data()) > 1e-3);
}

TEST_CASE("mean-curvature enumeration is finite and contains the sphere") {
    const double pi = std::acos(-1.0);
    const double r0 = pi - std::atan(24.0 / (5.0 * std::sqrt(6.0)));
    const SphereModel sphere{r0};
    const double C = sphere.data().C;
    const auto sols = enumerate_H(1, C);
    CHECK(!sols.empty());
    CHECK(sols.size() < 64);
    bool found = false;
    for (const auto& s : sols) {
        const auto h = hypersurface_from_solution(1, C, s);
        CHECK(gauss_einstein_residual(h) < 1e-10);
        if (std::abs(s.H - sphere.mean_curvature()) < 1e-6) {
            found = true;
            CHECK(s.q1 == 7);
            CHECK(s.q3 == 8);
        }
    }
    CHECK(found);
}

TEST_CASE("perturbed principal curvatures fail the block equations") {
    const double pi = std::acos(-1.0);
    const SphereModel sphere{pi - std::atan(24.0 / (5.0 * std::sqrt(6.0)))};
    auto hd = sphere.data();
    hd.lambda[3] += 0.1;
    CHECK(gauss_einstein_residual(hd) > 0.01);
}

TEST_CASE("focal radius: both Jacobi coefficients vanish together at r0") {
    const double pi = std::acos(-1.0);
    const double r0 = pi - std::atan(24.0 / (5.0 * std::sqrt(6.0)));
    std::vector<double> grid;
    for (int i = 1; i < 800; ++i) grid.push_back(pi * i / 800.0);
    const auto fs = jacobi_focal_scan(grid);
    CHECK(std::abs(fs.r_focal - r0) < 1e-9);
    CHECK(std::abs(fs.f1_at) < 1e-12);
    CHECK(std::abs(fs.f2_at) < 1e-12);
    CHECK(fs.rank_at_focal == 0);
    CHECK(normal_exp_rank(r0 / 2) == 15);
    CHECK(normal_exp_rank(r0 / 3) == 15);
}
