#pragma once

#include <vector>

#include "drtk/linalg.hpp"

namespace drtk {

/// Anticommuting family J_1..J_m of skew operators on v with J_i^2 = -id,
/// stored exactly; all entries of the generators lie in {-1, 0, 1}.
struct CliffordRep {
    int m = 0;
    std::size_t dim_v = 0;
    std::vector<RatMat> generators;
    std::vector<DMat> generators_d; // double mirrors of the exact generators

    template <class T>
    const Matrix<T>& gen(int i) const {
        if constexpr (std::is_same_v<T, Rat>)
            return generators[static_cast<std::size_t>(i)];
        else
            return generators_d[static_cast<std::size_t>(i)];
    }

    /// Throws std::logic_error if any Clifford axiom fails (exact check).
    void validate() const;
};

/// Irreducible module dimension for Cl(m), 1 <= m <= 8.
std::size_t irreducible_dim(int m);

/// Irreducible representation. For m = 3 (mod 4) the two inequivalent classes
/// are labelled by the sign (+1/-1) of the volume element J_1...J_m = +-id;
/// cls is ignored otherwise.
CliffordRep build_irreducible(int m, int cls = +1);

/// Block-diagonal direct sum: mult_plus copies of the +1 class and mult_minus
/// copies of the -1 class (mult_minus > 0 only allowed when m = 3 mod 4).
CliffordRep build_module(int m, int mult_plus, int mult_minus);

/// J_Z = sum_i z_i J_i applied as a matrix.
template <class T>
Matrix<T> j_op(const CliffordRep& rep, const std::vector<T>& z) {
    if (z.size() != static_cast<std::size_t>(rep.m))
        throw std::invalid_argument("j_op: coefficient vector length must equal m");
    Matrix<T> r(rep.dim_v, rep.dim_v);
    for (int i = 0; i < rep.m; ++i) {
        if (z[static_cast<std::size_t>(i)] == T(0)) continue;
        const auto& g = rep.gen<T>(i);
        for (std::size_t a = 0; a < rep.dim_v; ++a)
            for (std::size_t b = 0; b < rep.dim_v; ++b)
                r(a, b) += z[static_cast<std::size_t>(i)] * g(a, b);
    }
    return r;
}

/// J_Z V without materializing the operator.
template <class T>
std::vector<T> j_apply(const CliffordRep& rep, const std::vector<T>& z, const std::vector<T>& v) {
    if (z.size() != static_cast<std::size_t>(rep.m))
        throw std::invalid_argument("j_apply: coefficient vector length must equal m");
    std::vector<T> r(rep.dim_v, T(0));
    for (int i = 0; i < rep.m; ++i) {
        const T& zi = z[static_cast<std::size_t>(i)];
        if (zi == T(0)) continue;
        auto gi = rep.gen<T>(i).apply(v);
        for (std::size_t a = 0; a < rep.dim_v; ++a) r[a] += zi * gi[a];
    }
    return r;
}

} // namespace drtk
