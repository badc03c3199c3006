#include "drtk/cayley.hpp"

#include "drtk/rng.hpp"

namespace drtk {
namespace {

Rat small_rat(SampleRng& rng) {
    const auto num = static_cast<long>(rng.uniform(19)) - 9;
    const auto den = static_cast<long>(rng.uniform(9)) + 1;
    return Rat(num, den);
}

OctQ random_oct(SampleRng& rng, bool imaginary) {
    OctQ o;
    for (int i = imaginary ? 1 : 0; i < 8; ++i) o.c[i] = small_rat(rng);
    return o;
}

} // namespace

std::vector<double> cayley_flatten(const CayleyTangent<double>& x) {
    std::vector<double> v(16);
    for (int i = 0; i < 8; ++i) {
        v[static_cast<std::size_t>(i)] = x.a.c[i];
        v[static_cast<std::size_t>(i) + 8] = x.b.c[i];
    }
    return v;
}

CayleyTangent<double> cayley_unflatten(const std::vector<double>& v, int eps) {
    if (v.size() != 16) throw std::invalid_argument("cayley_unflatten: need 16 coordinates");
    CayleyTangent<double> x;
    x.eps = eps;
    for (int i = 0; i < 8; ++i) {
        x.a.c[i] = v[static_cast<std::size_t>(i)];
        x.b.c[i] = v[static_cast<std::size_t>(i) + 8];
    }
    return x;
}

DMat cayley_jacobi_matrix(const CayleyTangent<double>& t) {
    DMat m(16, 16);
    for (std::size_t j = 0; j < 16; ++j) {
        std::vector<double> e(16, 0.0);
        e[j] = 1.0;
        const auto col = cayley_flatten(cayley_jacobi(t, cayley_unflatten(e, t.eps)));
        for (std::size_t i = 0; i < 16; ++i) m(i, j) = col[i];
    }
    return m;
}

double cayley_sectional(const CayleyTangent<double>& x, const CayleyTangent<double>& y) {
    const double gram = norm2(x) * norm2(y) - dot(x, y) * dot(x, y);
    if (gram < 1e-14) throw std::invalid_argument("cayley_sectional: degenerate plane");
    return dot(cayley_curvature(y, x, x), y) / gram;
}

PerpXiReport perp_xi_checks(int eps, std::size_t samples, std::uint64_t seed) {
    const auto xi = cayley_xi<Rat>(eps);
    PerpXiReport rep;
    auto record_family = [&](const CayleyTangent<Rat>& x, const CayleyTangent<Rat>& y,
                             const CayleyTangent<Rat>& z) {
        const Rat r = dot(cayley_curvature(x, y, z), xi);
        rep.max_in_family = std::max(rep.max_in_family, std::abs(to_double(r)));
    };
    for (std::size_t i = 0; i < samples; ++i) {
        SampleRng rng(seed, i);
        // L_e vectors: (a, 0) with a imaginary; L_{e/4} vectors: (0, b).
        const CayleyTangent<Rat> p1(random_oct(rng, true), OctQ(), eps);
        const CayleyTangent<Rat> p2(random_oct(rng, true), OctQ(), eps);
        const CayleyTangent<Rat> p3(random_oct(rng, true), OctQ(), eps);
        const CayleyTangent<Rat> q1(OctQ(), random_oct(rng, false), eps);
        const CayleyTangent<Rat> q2(OctQ(), random_oct(rng, false), eps);
        const CayleyTangent<Rat> q3(OctQ(), random_oct(rng, false), eps);
        record_family(p1, p2, p3);
        record_family(q1, p1, p2);
        record_family(q1, q2, q3);
        // Control: generic triples (nonzero real parts and mixed slots).
        const CayleyTangent<Rat> g1(random_oct(rng, false), random_oct(rng, false), eps);
        const CayleyTangent<Rat> g2(random_oct(rng, false), random_oct(rng, false), eps);
        const CayleyTangent<Rat> g3(random_oct(rng, false), random_oct(rng, false), eps);
        const Rat c = dot(cayley_curvature(g1, g2, g3), xi);
        rep.max_control = std::max(rep.max_control, std::abs(to_double(c)));
    }
    rep.families_orthogonal = rep.max_in_family == 0.0;
    return rep;
}

} // namespace drtk
