#pragma once

#include <array>
#include <functional>

#include "drtk/linalg.hpp"

namespace drtk {

/// Ambient curvature evaluator: (A, B, C, D) -> <R(A,B)C, D> in ambient
/// coordinates.
using CurvatureEvaluator = std::function<double(
    const std::vector<double>&, const std::vector<double>&, const std::vector<double>&,
    const std::vector<double>&)>;

/// Adapted frame at a hypersurface point: an orthonormal ambient basis whose
/// last vector is the unit normal, the shape operator in that basis, and the
/// four Jacobi trace constants.
class TwoSteinFrame {
public:
    /// basis: n orthonormal ambient vectors, basis[n-1] the normal. sh is the
    /// (n-1)x(n-1) shape operator in the tangent part of the basis.
    TwoSteinFrame(CurvatureEvaluator curv, std::vector<std::vector<double>> basis, DMat sh,
                  double c1, double c2, double ct1, double ct2);

    std::size_t n() const { return basis_.size(); }
    const DMat& sh() const { return sh_; }
    double c1() const { return c1_; }
    double c2() const { return c2_; }
    double ct1() const { return ct1_; }
    double ct2() const { return ct2_; }

    /// <R(A,B)C, D> for tangent-coefficient or mixed frame arguments given as
    /// frame coordinates of length n.
    double curv_frame(const std::vector<double>& a, const std::vector<double>& b,
                      const std::vector<double>& c, const std::vector<double>& d) const;

    /// B_ij = R(X_i, X_n, X_n, X_j) on the tangent hyperplane.
    const DMat& b() const { return b_; }

    /// Induced hypersurface curvature scalar from the Gauss equation, for
    /// tangent-coefficient arguments of length n-1.
    double induced_curv(const std::vector<double>& a, const std::vector<double>& b,
                        const std::vector<double>& c, const std::vector<double>& d) const;

    /// (n-1)x(n-1) matrix of the induced Jacobi operator R_X on the tangent
    /// hyperplane; X given in tangent coefficients.
    DMat induced_jacobi(const std::vector<double>& x) const;

private:
    std::vector<double> embed(const std::vector<double>& coeffs) const;

    CurvatureEvaluator curv_;
    std::vector<std::vector<double>> basis_;
    DMat sh_, b_;
    double c1_, c2_, ct1_, ct2_;
};

/// Frame in a constant-curvature ambient of curvature rho with the given
/// shape operator; c1/c2 are measured from the induced curvature (their
/// constancy over X is a property of the data, not enforced here).
TwoSteinFrame space_form_frame(std::size_t n, double rho, DMat sh);

/// Frame of the Einstein geodesic sphere in the compact 16-dimensional
/// rank-one model space (curvature sign +1), at the Einstein radius.
TwoSteinFrame cayley_sphere_frame();

/// Coefficients of Tr R~_{X+tX_n} (degree 1, three coefficients for t^0, t^1,
/// t^2) or of Tr (R~_{X+tX_n})^2 (degree 2, five coefficients for t^0..t^4),
/// for a tangent vector X in frame coefficients.
std::vector<double> jacobi_t_expansion(const TwoSteinFrame& fr, const std::vector<double>& x,
                                       int degree);

/// The eight coefficient identities obtained by matching the two expansions
/// against ct1 (|X|^2 + t^2) and ct2 (|X|^2 + t^2)^2: three from degree 1
/// (t^2, t^1, t^0), five from degree 2 (t^4, t^3, t^2, t^1, t^0). All must
/// vanish on a 2-stein hypersurface of a 2-stein space.
std::array<double, 8> coefficient_identity_residuals(const TwoSteinFrame& fr,
                                                     const std::vector<double>& x);

struct Eine3Residual {
    double matrix_residual; // max-abs entry of B + Sh^2 - (Tr Sh) Sh - (ct1 - c1) id
    double traced_residual; // |(n-1)c1 - (n-2)ct1 - ((Tr Sh)^2 - Tr Sh^2)|
};

Eine3Residual eine3_residual(const TwoSteinFrame& fr);

struct RankShVerdict {
    int rank;
    double c1;
};

/// For a constant-curvature ambient of curvature rho: requires B = rho id,
/// c1 = (n-2) rho and Sh^2 = (Tr Sh) Sh (throws std::invalid_argument
/// otherwise), then returns rank Sh, asserting <= 1.
RankShVerdict rank_sh_conclusion(const TwoSteinFrame& fr, double rho, double tol = 1e-9);

/// Equality case of the Cauchy-Schwarz bound: true iff ct2 (n-1) == ct1^2,
/// which forces the ambient Jacobi operators to be rho id on the orthogonal
/// complement.
bool cauchy_schwarz_constant_curvature(double ct1, double ct2, std::size_t n,
                                       double tol = 1e-9);

} // namespace drtk
