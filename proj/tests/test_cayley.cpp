#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drtk/cayley.hpp"
#include "drtk/rng.hpp"

using namespace drtk;

namespace {
Rat small_rat(SampleRng& rng) {
    return Rat(static_cast<long>(rng.uniform(19)) - 9, static_cast<long>(rng.uniform(9)) + 1);
}
OctQ rand_oct(SampleRng& rng, bool imaginary = false) {
    OctQ o;
    for (int i = imaginary ? 1 : 0; i < 8; ++i) o.c[i] = small_rat(rng);
    return o;
}
} // namespace

TEST_CASE("octonion algebra: norm multiplicativity and conjugation") {
    SampleRng rng(1, 0);
    for (int k = 0; k < 20; ++k) {
        const auto a = rand_oct(rng), b = rand_oct(rng);
        CHECK(oct_norm2(oct_mul(a, b)) == oct_norm2(a) * oct_norm2(b));
        CHECK(oct_conj(oct_mul(a, b)) == oct_mul(oct_conj(b), oct_conj(a)));
        // alternativity: a(ab) = (aa)b
        CHECK(oct_mul(a, oct_mul(a, b)) == oct_mul(oct_mul(a, a), b));
    }
}

TEST_CASE("curvature tensor symmetries hold exactly") {
    for (int eps : {1, -1}) {
        for (std::uint64_t s = 0; s < 30; ++s) {
            SampleRng rng(7, s);
            const CayleyTangent<Rat> x(rand_oct(rng), rand_oct(rng), eps);
            const CayleyTangent<Rat> y(rand_oct(rng), rand_oct(rng), eps);
            const CayleyTangent<Rat> z(rand_oct(rng), rand_oct(rng), eps);
            const CayleyTangent<Rat> w(rand_oct(rng), rand_oct(rng), eps);
            // first Bianchi
            const auto bi = cayley_curvature(x, y, z) + cayley_curvature(y, z, x) +
                            cayley_curvature(z, x, y);
            CHECK(norm2(bi) == Rat(0));
            // antisymmetry in the first pair
            CHECK(norm2(cayley_curvature(x, x, z)) == Rat(0));
            // pair symmetry <R(x,y)z, w> = <R(z,w)x, y>
            CHECK(dot(cayley_curvature(x, y, z), w) == dot(cayley_curvature(z, w, x), y));
            // skew in the last pair
            CHECK(dot(cayley_curvature(x, y, z), z) == Rat(0));
        }
    }
}

TEST_CASE("Jacobi operator of the base direction has spectrum {0, eps x7, eps/4 x8}") {
    for (int eps : {1, -1}) {
        const auto jm = cayley_jacobi_matrix(cayley_xi<double>(eps));
        const auto ev = sym_eigenvalues(jm);
        int n0 = 0, n1 = 0, nq = 0;
        for (double e : ev) {
            if (std::abs(e) < 1e-12)
                ++n0;
            else if (std::abs(e - eps) < 1e-12)
                ++n1;
            else if (std::abs(e - eps / 4.0) < 1e-12)
                ++nq;
        }
        CHECK(n0 == 1);
        CHECK(n1 == 7);
        CHECK(nq == 8);
    }
}

TEST_CASE("homogeneity: every unit direction has the same Jacobi spectrum") {
    SampleRng rng(13, 0);
    for (int k = 0; k < 10; ++k) {
        const auto t = cayley_unflatten(rng.unit_vector(16), 1);
        const auto ev = sym_eigenvalues(cayley_jacobi_matrix(t));
        const auto ref = sym_eigenvalues(cayley_jacobi_matrix(cayley_xi<double>(1)));
        for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(ev[i] - ref[i]) < 1e-12);
    }
}

TEST_CASE("mixed-block contraction identity") {
    for (int eps : {1, -1}) {
        for (std::uint64_t s = 0; s < 30; ++s) {
            SampleRng rng(17, s);
            const CayleyTangent<Rat> x(rand_oct(rng, true), OctQ(), eps);
            const CayleyTangent<Rat> y(OctQ(), rand_oct(rng), eps);
            const CayleyTangent<Rat> z(OctQ(), rand_oct(rng), eps);
            const Rat lhs = dot(cayley_curvature(x, y, z), cayley_xi<Rat>(eps));
            CHECK(lhs == Rat(eps) * oct_dot(oct_mul(x.a, y.b), z.b) / 4);
        }
    }
}

TEST_CASE("eigenspace triples produce curvature orthogonal to the base direction") {
    for (int eps : {1, -1}) {
        const auto rep = perp_xi_checks(eps, 40, 5);
        CHECK(rep.families_orthogonal);
        CHECK(rep.max_in_family == 0.0);
        CHECK(rep.max_control > 1e-6);
    }
}

TEST_CASE("sectional curvature is quarter-pinched") {
    for (int eps : {1, -1}) {
        double lo = 1e300, hi = -1e300;
        for (std::uint64_t s = 0; s < 10000; ++s) {
            SampleRng rng(29, s);
            const auto x = cayley_unflatten(rng.gaussian_vector(16), eps);
            const auto y = cayley_unflatten(rng.gaussian_vector(16), eps);
            const double k = cayley_sectional(x, y);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
        const double a = eps == 1 ? 0.25 : -1.0, c = eps == 1 ? 1.0 : -0.25;
        CHECK(lo >= a - 1e-9);
        CHECK(hi <= c + 1e-9);
        CHECK(hi - lo > 0.5); // the bounds are nearly attained
    }
}

TEST_CASE("curvature construction rejects mismatched signs") {
    const CayleyTangent<double> p(OctD::one(), OctD(), 1);
    const CayleyTangent<double> q(OctD::one(), OctD(), -1);
    CHECK_THROWS_AS(cayley_curvature(p, q, p), std::invalid_argument);
}
