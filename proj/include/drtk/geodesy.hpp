#pragma once

#include <optional>
#include <string>

#include "drtk/damek_ricci.hpp"

namespace drtk {

/// Outcome of a structured subspace test: which condition failed (empty if
/// none), the worst residual seen, and the witnessing basis indices.
struct Certificate {
    bool ok = true;
    std::string failed_condition;
    double residual = 0.0;
    std::vector<std::size_t> witness;
};

/// Linear subspace of s held as an orthonormal basis (deterministic
/// Gram-Schmidt in input order; near-dependent inputs are rejected).
class Subspace {
public:
    Subspace(const DRSpace& sp, const std::vector<TangentVec<double>>& spanning,
             double drop_tol = 1e-9);

    const DRSpace& space() const { return sp_; }
    std::size_t dim() const { return basis_.size(); }
    const TangentVec<double>& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<TangentVec<double>>& basis() const { return basis_; }

    /// Norm of the component of v orthogonal to this subspace.
    double off_residual(const TangentVec<double>& v) const;
    bool contains(const TangentVec<double>& v, double tol = 1e-10) const;

    /// Max pairwise orthonormality defect of the stored basis.
    double orthonormality_defect() const;

private:
    DRSpace sp_; // held by value so a Subspace never outlives its space
    std::vector<TangentVec<double>> basis_;
};

/// Max off-L component of R(L, L)L, recovered from Jacobi operators by
/// polarization over the basis.
double r_invariance_residual(const Subspace& L);

/// Max off-L component of the polarized (nabla_T R_T) T' over basis choices
/// (threefold symmetrization of the cubic T-dependence).
double nabla_r_invariance_residual(const Subspace& L);

/// Criterion for a homogeneous totally geodesic tangent space: A in L,
/// L = a + v' + z' (well-positioned), [v',v'] in z' and J_{z'} v' in v'.
Certificate is_homogeneous_tg(const Subspace& L, double tol = 1e-10);

/// True iff every basis two-plane has sectional curvature -1; also reports
/// the worst (farthest from -1) pairwise sectional value.
std::pair<bool, double> is_minus_one_subspace(const Subspace& L, double tol = 1e-9);

/// Checks J_{X1} J_{X2} V in J_z V + RV for all pairs from an orthonormal
/// basis of zprime.
bool weak_j2_check(const DRSpace& sp, const std::vector<double>& V,
                   const std::vector<std::vector<double>>& zprime, double tol = 1e-10,
                   double* max_residual = nullptr);

struct ZDoubleResult {
    std::vector<std::vector<double>> zdouble; // orthonormal basis of z'' in z
    int case_label;                           // 1..4
    std::size_t dim_zprime;
    std::size_t dim_zdouble;
    std::size_t dim_vprime; // dimension of the Cl(z')-orbit of V
};

/// z'' = z' + span{Z : J_{X1}J_{X2}V = J_Z V} and the dimension-based case
/// classification; requires weak_j2_check to pass.
ZDoubleResult zdouble_closure(const DRSpace& sp, const std::vector<double>& V,
                              const std::vector<std::vector<double>>& zprime,
                              double tol = 1e-9);

/// The 15-dimensional space over the 8-dimensional irreducible module with a
/// 6-dimensional center, together with the 4-dimensional constant-curvature
/// -1 subspace spanned by T0 = V + sA, Ti = s X_i + J_i V.
struct Example15d {
    DRSpace space;
    Subspace L;
    std::vector<double> V;  // the generating module vector a W + b J7 W
    RatMat J7;              // J1 J2 J3 J4 J5 J6
    RatMat P123;            // symmetric involution J1 J2 J3
    std::vector<Rat> W;     // chosen eigenvector of P123
    int eps;                // its eigenvalue, +1 or -1
};

Example15d build_example_15d(int cls, double a, double b, double s);

/// Eigenpairs (mu, X) of K_{V,Y}^2 restricted to the orthogonal complement of
/// Y in z; X is a unit vector in z orthogonal to Y. Sorted by mu ascending.
std::vector<std::pair<double, std::vector<double>>> k2_eigenpairs(const DRSpace& sp,
                                                                  const std::vector<double>& V,
                                                                  const std::vector<double>& Y);

struct JacobiEigenPair {
    double kappa;
    TangentVec<double> E;
    double residual; // ||R_T E - kappa E|| / ||E||
};

/// Eigenpairs of R_T (T a unit vector with nonzero V and Y parts) built from a
/// unit eigenvector X of K_{V,Y}^2 with eigenvalue mu != -1: one pair per
/// admissible real root of (4k+4)(4k+1)^2 = 27 |V|^4 |Y|^2 (1+mu).
std::vector<JacobiEigenPair> eigen_E(const DRSpace& sp, const TangentVec<double>& T,
                                     const std::vector<double>& X, double mu);

/// Matrix of (2/3)(nabla_T R_T) restricted to
/// l4 = span(J_X V, J_KX J_Y V, J_X J_Y V, J_KX V), in that (non-orthogonal)
/// basis. norm_y must equal ||Y||; exact over Rat when the inputs are
/// rational, K^2 X = mu X holds exactly and ||Y|| is rational.
template <class T>
Matrix<T> l4_block_operator(const DRSpace& sp, const TangentVec<T>& t1, const std::vector<T>& X,
                            const T& mu, const T& norm_y) {
    const auto& rep = sp.rep();
    const auto K = sp.k_operator(t1.V, t1.Y, norm_y);
    const auto KX = K.apply(X);
    const auto jyv = j_apply(rep, t1.Y, t1.V);
    const std::vector<std::vector<T>> basis = {
        j_apply(rep, X, t1.V),
        j_apply(rep, KX, jyv),
        j_apply(rep, X, jyv),
        j_apply(rep, KX, t1.V),
    };
    Matrix<T> gram(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                dot(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
    Matrix<T> q(4, 4);
    const T two_thirds = T(2) / T(3);
    for (int j = 0; j < 4; ++j) {
        TangentVec<T> arg = sp.zero_vec<T>();
        arg.V = basis[static_cast<std::size_t>(j)];
        auto img = two_thirds * sp.nabla_jacobi(t1, arg).V;
        std::vector<T> rhs(4);
        for (int i = 0; i < 4; ++i) rhs[static_cast<std::size_t>(i)] = dot(img, basis[static_cast<std::size_t>(i)]);
        auto coords = exact_solve(gram, rhs);
        for (int i = 0; i < 4; ++i)
            q(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coords[static_cast<std::size_t>(i)];
    }
    return q;
}

/// The closed-form block matrix the l4 restriction must equal, in operator
/// (column-as-image) convention: column j holds the coordinates of the image
/// of the j-th basis vector.
template <class T>
Matrix<T> l4_block_expected(const T& norm_v2, const T& norm_y, const T& mu) {
    Matrix<T> q(4, 4);
    q(2, 0) = T(-1);
    q(3, 0) = norm_y;
    q(2, 1) = -mu * norm_y;
    q(3, 1) = -norm_y * norm_y;
    q(0, 2) = -norm_y * norm_y;
    q(1, 2) = -norm_y;
    q(0, 3) = mu * norm_y;
    q(1, 3) = T(-1);
    q *= norm_v2;
    return q;
}

} // namespace drtk
