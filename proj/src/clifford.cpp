#include "drtk/clifford.hpp"

#include <stdexcept>

#include "drtk/octonion.hpp"

namespace drtk {
namespace {

RatMat mat2(int a, int b, int c, int d) {
    RatMat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

const RatMat E = mat2(0, -1, 1, 0);  // skew, E^2 = -I
const RatMat S = mat2(1, 0, 0, -1);  // symmetric, S^2 = I
const RatMat Tm = mat2(0, 1, 1, 0);  // symmetric, T^2 = I

std::vector<RatMat> raw_generators(int m) {
    const RatMat I2 = RatMat::identity(2);
    switch (m) {
        case 1:
            return {E};
        case 2:
            return {kron(E, S), kron(E, Tm)};
        case 3:
            return {kron(E, S), kron(E, Tm), kron(I2, E)};
        case 4:
        case 5:
        case 6:
        case 7: {
            // Left multiplications by imaginary octonion units: alternativity
            // gives the polarized Clifford relation exactly.
            std::vector<RatMat> g;
            for (int i = 1; i <= m; ++i) g.push_back(left_mul_operator(OctQ::unit(i)));
            return g;
        }
        case 8: {
            const RatMat I8 = RatMat::identity(8);
            std::vector<RatMat> g;
            for (int i = 1; i <= 7; ++i) g.push_back(kron(S, left_mul_operator(OctQ::unit(i))));
            g.push_back(kron(E, I8));
            return g;
        }
        default:
            throw std::invalid_argument("build_irreducible: center dimension must be in [1, 8]");
    }
}

void finish(CliffordRep& rep) {
    rep.generators_d.clear();
    for (const auto& g : rep.generators) rep.generators_d.push_back(to_double(g));
}

} // namespace

std::size_t irreducible_dim(int m) {
    static const std::size_t table[9] = {0, 2, 4, 4, 8, 8, 8, 8, 16};
    if (m < 1 || m > 8) throw std::invalid_argument("irreducible_dim: m must be in [1, 8]");
    return table[m];
}

void CliffordRep::validate() const {
    const RatMat id = RatMat::identity(dim_v);
    if (generators.size() != static_cast<std::size_t>(m))
        throw std::logic_error("CliffordRep: generator count mismatch");
    for (int i = 0; i < m; ++i) {
        const auto& J = generators[static_cast<std::size_t>(i)];
        if (J.rows() != dim_v || J.cols() != dim_v)
            throw std::logic_error("CliffordRep: generator size mismatch");
        if (!(J + J.transpose()).is_zero()) throw std::logic_error("CliffordRep: generator not skew");
        if (!(J * J + id).is_zero()) throw std::logic_error("CliffordRep: J^2 != -id");
        for (int j = i + 1; j < m; ++j) {
            const auto& K = generators[static_cast<std::size_t>(j)];
            if (!(J * K + K * J).is_zero())
                throw std::logic_error("CliffordRep: generators do not anticommute");
        }
    }
}

CliffordRep build_irreducible(int m, int cls) {
    if (m < 1 || m > 8) throw std::invalid_argument("build_irreducible: m must be in [1, 8]");
    if (cls != 1 && cls != -1) throw std::invalid_argument("build_irreducible: class must be +1 or -1");
    CliffordRep rep;
    rep.m = m;
    rep.generators = raw_generators(m);
    rep.dim_v = rep.generators[0].rows();
    if (m % 4 == 3) {
        // Volume element J_1...J_m is +-id on an irreducible module; negating
        // every generator flips its sign (m is odd).
        RatMat vol = rep.generators[0];
        for (int i = 1; i < m; ++i) vol = vol * rep.generators[static_cast<std::size_t>(i)];
        if (!(vol - Rat(vol(0, 0)) * RatMat::identity(rep.dim_v)).is_zero() ||
            (vol(0, 0) != 1 && vol(0, 0) != -1))
            throw std::logic_error("build_irreducible: volume element is not +-id");
        if (vol(0, 0) != cls)
            for (auto& g : rep.generators) g = -g;
    }
    finish(rep);
    return rep;
}

CliffordRep build_module(int m, int mult_plus, int mult_minus) {
    if (m < 1 || m > 8) throw std::invalid_argument("build_module: m must be in [1, 8]");
    if (mult_plus < 0 || mult_minus < 0 || mult_plus + mult_minus < 1)
        throw std::invalid_argument("build_module: need at least one irreducible block");
    if (mult_minus > 0 && m % 4 != 3)
        throw std::invalid_argument("build_module: the -1 class exists only for m = 3 mod 4");
    const CliffordRep plus = build_irreducible(m, +1);
    const CliffordRep minus = mult_minus > 0 ? build_irreducible(m, -1) : CliffordRep{};
    const std::size_t blk = plus.dim_v;
    const std::size_t total = blk * static_cast<std::size_t>(mult_plus + mult_minus);

    CliffordRep rep;
    rep.m = m;
    rep.dim_v = total;
    for (int i = 0; i < m; ++i) {
        RatMat g(total, total);
        std::size_t off = 0;
        for (int b = 0; b < mult_plus + mult_minus; ++b, off += blk) {
            const RatMat& src =
                (b < mult_plus ? plus : minus).generators[static_cast<std::size_t>(i)];
            for (std::size_t r = 0; r < blk; ++r)
                for (std::size_t c = 0; c < blk; ++c) g(off + r, off + c) = src(r, c);
        }
        rep.generators.push_back(std::move(g));
    }
    finish(rep);
    return rep;
}

} // namespace drtk
